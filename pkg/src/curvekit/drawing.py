"""Exact drawn positions of two transversal curve systems on one triangulation.

A drawing places the points of two traced systems X and B on each edge in a
definite merged order (doubled-integer coordinates, so midpoints stay exact),
realizes arcs as straight chords of a model triangle with rational vertices,
and enumerates X-B crossings with exact parameters and orientation bits.

Two placements are used:
  * 'blunt': all B points before all X points on every edge.  Valid for any
    pair, possibly with inessential crossings (the twist recipe tolerates
    them; tightening removes the excess).
  * dumbbell: B is the curve dual to an edge alpha and hugs the spine
    (its points sit at the extreme ends of the edges).  This drawing realizes
    the minimal position: X crosses B exactly twice per crossing of alpha.
"""

from fractions import Fraction

from .surfaces import edge_of, partner
from .tracing import slot_of

_V = ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))


def _point(side_pos, t):
    a, b = _V[side_pos], _V[(side_pos + 1) % 3]
    return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _seg_intersect(p1, p2, q1, q2):
    """Return (s, u) params of the intersection of segments p and q, or None."""
    d1 = (p2[0] - p1[0], p2[1] - p1[1])
    d2 = (q2[0] - q1[0], q2[1] - q1[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    if den == 0:
        return None
    w = (q1[0] - p1[0], q1[1] - p1[1])
    s = (w[0] * d2[1] - w[1] * d2[0]) / den
    u = (w[0] * d1[1] - w[1] * d1[0]) / den
    if 0 < s < 1 and 0 < u < 1:
        return (s, u, den)
    return None


class Drawing:
    """Merged drawn position of systems X and B (lists of traced components)."""

    def __init__(self, tri, x_weights, b_weights, x_comps, b_comps, placement):
        self.tri = tri
        self.xw = x_weights
        self.bw = b_weights
        self.x_comps = x_comps
        self.b_comps = b_comps
        self.placement = placement  # ('blunt',) or ('dumbbell', alpha, b_end_map)

    # merged doubled coordinates ------------------------------------------------

    def merged2(self, which, e, slot):
        if which == "x":
            if self.placement[0] == "blunt":
                return 2 * slot + 1
            return 2 * slot
        # which == 'b'
        if self.placement[0] == "blunt":
            return 2 * (slot - self.bw[e])
        # dumbbell: b's slot sits at an extreme end of e
        ends = self.placement[2][e]  # list of 'lo'/'hi' per b slot
        return -1 if ends[slot] == "lo" else 2 * self.xw[e] - 1

    def range2(self, e):
        if self.placement[0] == "blunt":
            lo, hi = -2 * self.bw[e], 2 * self.xw[e] - 1
        else:
            lo = -1 if self.bw[e] else 0
            hi = 2 * self.xw[e] - 1 if self.bw[e] else 2 * self.xw[e] - 2
        if hi < lo:
            return (0, 0)
        return (lo, hi)

    def ccw2(self, label, which, slot):
        e = edge_of(label)
        m2 = self.merged2(which, e, slot)
        if label % 2 == 0:
            return m2
        lo, hi = self.range2(e)
        return lo + hi - m2

    # arcs -----------------------------------------------------------------------

    def arcs_of(self, which, comp):
        """Arcs of a traced component as (tri_index, (pos1, ccw2_1), (pos2, ccw2_2)).

        Arc i runs from crossing i to crossing i+1 inside the triangle entered at i.
        """
        tri = self.tri
        weights = self.xw if which == "x" else self.bw
        out = []
        n = len(comp)
        for i in range(n):
            lab, p = comp[i]
            lab2, p2 = comp[(i + 1) % n]
            ti, pos1 = tri.label_loc[lab]
            e1, e2 = edge_of(lab), edge_of(lab2)
            s1 = slot_of(lab, weights[e1], p)
            exit_lab = partner(lab2)
            tj, pos2 = tri.label_loc[exit_lab]
            assert tj == ti, "inconsistent path"
            s2 = slot_of(lab2, weights[e2], p2)  # same physical slot on the exit edge
            out.append((ti, (pos1, self.ccw2(lab, which, s1)), (pos2, self.ccw2(exit_lab, which, s2))))
        return out

    # crossing enumeration --------------------------------------------------------

    def _bparam(self, side_pos, ccw2, spans):
        lo, hi = spans[side_pos]
        t = Fraction(ccw2 - lo + 1, hi - lo + 2)
        return _point(side_pos, t)

    def _tri_spans(self, ti):
        # reflections map [lo, hi] onto itself, so ccw2 values stay in range2
        return [self.range2(edge_of(self.tri.triangles[ti][pos])) for pos in range(3)]

    def events(self):
        """All X-B crossings.

        Returns a dict (x_comp_index, x_arc_index) -> list of
        (s_param, b_comp_index, b_arc_index, dirbit, u_param) sorted along the
        X arc.  dirbit is True when B's forward direction points to the left of
        X's; u_param locates the crossing along the B arc.
        """
        tri = self.tri
        x_arcs = [self.arcs_of("x", c) for c in self.x_comps]
        b_arcs = [self.arcs_of("b", c) for c in self.b_comps]
        by_tri = {}
        for bc, arcs in enumerate(b_arcs):
            for bj, (ti, e1, e2) in enumerate(arcs):
                by_tri.setdefault(ti, []).append((bc, bj, e1, e2))
        events = {}
        spans_cache = {}
        for xc, arcs in enumerate(x_arcs):
            for xi, (ti, p1, p2) in enumerate(arcs):
                cand = by_tri.get(ti)
                if not cand:
                    continue
                hits = []
                for bc, bj, q1, q2 in cand:
                    if not _interleave(p1, p2, q1, q2):
                        continue
                    if ti not in spans_cache:
                        spans_cache[ti] = self._tri_spans(ti)
                    spans = spans_cache[ti]
                    P1 = self._bparam(*p1, spans)
                    P2 = self._bparam(*p2, spans)
                    Q1 = self._bparam(*q1, spans)
                    Q2 = self._bparam(*q2, spans)
                    got = _seg_intersect(P1, P2, Q1, Q2)
                    assert got is not None, "interleaving chords must intersect"
                    s, u, den = got
                    hits.append((s, bc, bj, den > 0, u))
                if hits:
                    hits.sort(key=lambda h: h[0])
                    events[(xc, xi)] = hits
        return events


def _interleave(p1, p2, q1, q2):
    """Do chords (p1,p2) and (q1,q2) cross?  Points are (side_pos, ccw2) tuples,
    ordered cyclically around the triangle boundary."""
    pts = sorted([(p1, 0), (p2, 0), (q1, 1), (q2, 1)])
    return pts[0][1] != pts[1][1] and pts[1][1] != pts[2][1]


def dumbbell_end_map(tri, alpha, b_weights):
    """For the curve dual to edge alpha: which end of each edge every b-slot hugs."""
    p, q = tri.edge_endpoints[alpha]
    out = {}
    for e in range(tri.num_edges):
        w = b_weights[e]
        if w == 0:
            out[e] = []
            continue
        a, b = tri.edge_endpoints[e]
        ends = []
        if a in (p, q):
            ends.append("lo")
        if b in (p, q):
            ends.append("hi")
        assert len(ends) == w, "weights disagree with the dual-arc pattern"
        out[e] = ends
    return out


def splice_twist(tri, x_comp_paths, b_path, events, k):
    """Insert |k| wraps of the core path at every crossing; left wraps for k > 0.

    x_comp_paths: list of label lists (entry labels per component).
    b_path: label list of the core.
    events: as produced by Drawing.events(), with b_comp always 0.
    Returns new label paths (not yet reduced).
    """
    L = len(b_path)
    wrap_cache = {}

    def wrap(bj, forward):
        key = (bj, forward)
        if key not in wrap_cache:
            if forward:
                seq = b_path[bj + 1 :] + b_path[: bj + 1]
            else:
                seq = [partner(b_path[(bj - t) % L]) for t in range(L)]
            wrap_cache[key] = seq * abs(k)
        return wrap_cache[key]

    out_paths = []
    for xc, path in enumerate(x_comp_paths):
        out = []
        for i, lab in enumerate(path):
            out.append(lab)
            hits = events.get((xc, i))
            if hits:
                for hit in hits:
                    bj, dirbit = hit[2], hit[3]
                    forward = dirbit if k > 0 else not dirbit
                    out.extend(wrap(bj, forward))
        out_paths.append(out)
    return out_paths
