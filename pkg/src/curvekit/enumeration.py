"""Bounded enumeration of normal coordinate vectors and curves.

DFS over edges with triangle-constraint propagation: once two sides of a
triangle are fixed, the third is confined to a parity class inside an interval,
which prunes hard enough to sweep realistic caps on low-complexity surfaces.
"""

from .curves import NormalCurve
from . import tracing
from .surfaces import edge_of


def _edge_order(tri):
    """Order edges so triangles complete as early as possible."""
    remaining = [set(edge_of(l) for l in t) for t in tri.triangles]
    seen = set()
    order = []
    while len(order) < tri.num_edges:
        best, best_gain = None, -1
        for e in range(tri.num_edges):
            if e in seen:
                continue
            gain = sum(1 for r in remaining if e in r and len(r - seen - {e}) == 0)
            near = sum(1 for r in remaining if e in r and len(r - seen - {e}) == 1)
            score = 10 * gain + near
            if score > best_gain:
                best, best_gain = e, score
        order.append(best)
        seen.add(best)
    return order


def enumerate_matchings(tri, cap, per_edge_cap=None):
    """Yield all weight tuples (not all zero) satisfying the matching conditions,
    with every edge weight <= cap (or per_edge_cap[e])."""
    E = tri.num_edges
    caps = per_edge_cap if per_edge_cap is not None else [cap] * E
    order = _edge_order(tri)
    pos_of = {e: i for i, e in enumerate(order)}
    tris = [tuple(edge_of(l) for l in t) for t in tri.triangles]
    # triangles keyed by the position at which they become fully assigned
    complete_at = {}
    for t in tris:
        k = max(pos_of[e] for e in t)
        complete_at.setdefault(k, []).append(t)
    w = [0] * E

    def ok(t):
        a, b, c = (w[e] for e in t)
        return (a + b + c) % 2 == 0 and a <= b + c and b <= a + c and c <= a + b

    def rec(i):
        if i == E:
            yield tuple(w)
            return
        e = order[i]
        # constrain by triangles containing e whose other two edges are set
        lo, hi, par = 0, caps[e], None
        for t in tris:
            if e not in t:
                continue
            others = [x for x in t if x != e]
            if len(others) == 1:
                others.append(e)  # degenerate: edge twice in one triangle
                continue
            if pos_of[others[0]] < i and pos_of[others[1]] < i:
                b, c = w[others[0]], w[others[1]]
                lo = max(lo, abs(b - c))
                hi = min(hi, b + c)
                p = (b + c) % 2
                if par is None:
                    par = p
                elif par != p:
                    return
        start = lo if par is None or lo % 2 == par else lo + 1
        step = 1 if par is None else 2
        for v in range(start, hi + 1, step):
            w[e] = v
            if all(ok(t) for t in complete_at.get(i, [])):
                yield from rec(i + 1)
        w[e] = 0

    for vec in rec(0):
        if any(vec):
            yield vec


def enumerate_curves(tri, cap, per_edge_cap=None, max_total=None):
    """All connected essential non-peripheral curves within the coordinate caps."""
    out = []
    for vec in enumerate_matchings(tri, cap, per_edge_cap):
        if max_total is not None and sum(vec) > max_total:
            continue
        comps = tracing.trace(tri, vec)
        if len(comps) != 1:
            continue
        cen = tracing.census(tri, vec, comps)
        if any(r.is_disk or r.is_once_punctured_disk for r in cen.regions):
            continue
        out.append(NormalCurve(tri, vec, _validated=True))
    return out


def puncture_pair_of(curve):
    """For a curve on a punctured sphere: the puncture pair on its pants side, or None."""
    cen = curve.census()
    for r in cen.regions:
        if r.chi == -1 and r.punctures == 2 and r.boundary_sides == 1:
            return tuple(sorted(r.vertex_ids))
    return None


def curves_around(tri, pair, cap=3):
    """Curves whose twice-punctured-disk side encloses exactly the given punctures."""
    pair = tuple(sorted(pair))
    return [c for c in enumerate_curves(tri, cap) if puncture_pair_of(c) == pair]
