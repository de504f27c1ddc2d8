"""Exact geometric intersection numbers.

Two routes:

* Pullback: curves built by the engine carry provenance, either a reference
  curve dual to a triangulation edge or a twist image.  Since twisting is a
  homeomorphism, i(x, t_b^k(y)) = i(t_b^{-k}(x), y); unwinding the provenance
  word turns the query into i(z, ref) = 2 * z.coords[alpha], which is exact
  because normal coordinates realize the minimal intersection with every edge.

* Stable slope: m -> coords of t_x^m(y) is a convex piecewise-linear family
  whose asymptotic slope is i(x,y) * coords(x); its breakpoints are bounded by
  the drawn crossing count.  Sampling beyond that bound and checking that the
  increments are stationary yields the exact value for raw-coordinate inputs.
"""

from .curves import MultiCurve, NormalCurve, as_components
from .drawing import Drawing
from .errors import TriangulationMismatch
from . import tracing
from .twisting import dehn_twist


def _drawn_crossings(x, y):
    """Crossing count of the blunt drawn position: an upper bound for i(x, y)."""
    tri = x.triangulation
    xs = tracing.trace(tri, x.coords)
    ys = tracing.trace(tri, y.coords)
    d = Drawing(tri, x.coords, y.coords, xs, ys, ("blunt",))
    return sum(len(v) for v in d.events().values())


def _unwind(x, y):
    """Resolve i(x, y) through y's provenance chain, else None."""
    steps = 0
    while True:
        prov = y.provenance
        if prov is None:
            return None
        if prov[0] == "ref":
            alpha = prov[1]
            return 2 * sum(c.coords[alpha] for c in as_components(x))
        if prov[0] == "twisted":
            _, b, k, base = prov
            x = dehn_twist(b, -k, x)
            y = base
            steps += 1
            if steps > 10000:
                return None
            continue
        return None


def _stable_slope(x, y):
    """i(x, y) for a connected x via the twist family t_x^m(y)."""
    bound = _drawn_crossings(x, y)
    if bound == 0:
        return 0
    m = bound + 3
    w0 = dehn_twist(x, m, y).coords
    w1 = dehn_twist(x, m + 1, y).coords
    w2 = dehn_twist(x, m + 2, y).coords
    d1 = [b - a for a, b in zip(w0, w1)]
    d2 = [b - a for a, b in zip(w1, w2)]
    if d1 != d2:
        raise AssertionError("twist family did not stabilize past its breakpoint bound")
    lam = None
    for e, wx in enumerate(x.coords):
        if wx == 0:
            if d1[e] != 0:
                raise AssertionError("twist growth on an edge the twisting curve misses")
            continue
        q, r = divmod(d1[e], wx)
        if r != 0 or (lam is not None and q != lam):
            raise AssertionError("inconsistent twist growth slope")
        lam = q
    return lam


def intersection_number(x, y):
    """Minimal geometric intersection number; symmetric, zero on equal classes."""
    if x.triangulation != y.triangulation:
        raise TriangulationMismatch("curves on different triangulations")
    if isinstance(x, MultiCurve):
        return sum(intersection_number(c, y) for c in x.components)
    if isinstance(y, MultiCurve):
        return sum(intersection_number(x, c) for c in y.components)
    if x.coords == y.coords:
        return 0
    got = _unwind(x, y)
    if got is not None:
        return got
    got = _unwind(y, x)
    if got is not None:
        return got
    if _drawn_crossings(x, y) == 0:
        return 0
    return _stable_slope(x, y)
