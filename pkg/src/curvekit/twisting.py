"""Dehn twists on normal coordinates and words of twists.

The twist homeomorphism is realized drawn-position-wise: cut along the twist
curve and reglue with |k| full turns, i.e. insert |k| wraps of the core path at
every crossing, turning left for positive powers.  Tightening the spliced path
gives the exact image coordinates.  For a core dual to an edge the dumbbell
placement already realizes minimal position, so the construction touches
O(|k| * i(b,c) * w(b)) strands and is exact for any power.
"""

from .curves import MultiCurve, NormalCurve, as_components, dual_arc_of
from .drawing import Drawing, dumbbell_end_map, splice_twist
from .errors import TriangulationMismatch
from . import tracing
from .tracing import check_cap, component_labels, reduce_path

_VALIDATE_BELOW = 20_000


def _placement_for(tri, b):
    alpha = dual_arc_of(tri, b.coords)
    if alpha is not None:
        return ("dumbbell", alpha, dumbbell_end_map(tri, alpha, b.coords))
    return ("blunt",)


def dehn_twist(b, k, c):
    """t_b^k(c) for a NormalCurve or MultiCurve c."""
    if b.triangulation != c.triangulation:
        raise TriangulationMismatch("twist curve and target live on different triangulations")
    if k == 0:
        return c
    tri = b.triangulation
    comps = as_components(c)
    x_comps = tracing.trace(tri, _total_coords(tri, comps))
    b_trace = b.trace()
    drawing = Drawing(tri, _total_coords(tri, comps), b.coords, x_comps, b_trace, _placement_for(tri, b))
    events = drawing.events()
    n_crossings = sum(len(v) for v in events.values())
    b_path = component_labels(b_trace[0])
    check_cap(sum(len(p) for p in x_comps) + abs(k) * n_crossings * len(b_path))
    paths = [component_labels(comp) for comp in x_comps]
    spliced = splice_twist(tri, paths, b_path, events, k)
    out = []
    for path in spliced:
        red = reduce_path(tri, path)
        assert red, "twist image of an essential curve vanished"
        w = tracing.path_weights(tri, red)
        validated = sum(w) >= _VALIDATE_BELOW
        out.append(NormalCurve(tri, w, _validated=validated))
    # reattach provenance componentwise (match traced inputs to given components)
    by_coords = {}
    for comp in x_comps:
        by_coords.setdefault(tracing.crossings_weights(tri, comp), 0)
    matched = _match_components(tri, x_comps, comps)
    for curve_out, curve_in in zip(out, matched):
        curve_out.provenance = ("twisted", b, k, curve_in)
    if isinstance(c, NormalCurve):
        assert len(out) == 1
        return out[0]
    return MultiCurve(out, _validated=True)


def _total_coords(tri, comps):
    total = [0] * tri.num_edges
    for c in comps:
        for e, w in enumerate(c.coords):
            total[e] += w
    return tuple(total)


def _match_components(tri, traced, given):
    """Match traced components to the given curves by coordinates."""
    remaining = list(given)
    matched = []
    for comp in traced:
        w = tracing.crossings_weights(tri, comp)
        for i, g in enumerate(remaining):
            if g.coords == w:
                matched.append(remaining.pop(i))
                break
        else:
            raise AssertionError("traced component does not match any input component")
    return matched


class MappingClass:
    """A word in Dehn twists, applied right-to-left."""

    def __init__(self, word):
        self.word = [(c, int(p)) for c, p in word if p != 0]
        tris = {c.triangulation for c, _ in self.word}
        if len(tris) > 1:
            raise TriangulationMismatch("all letters must share one triangulation")
        self.triangulation = tris.pop() if tris else None

    @classmethod
    def identity(cls):
        return cls([])

    @classmethod
    def twist(cls, curve, power=1):
        return cls([(curve, power)])

    def apply(self, x):
        if self.triangulation is not None and x.triangulation != self.triangulation:
            raise TriangulationMismatch("curve lives on a different triangulation")
        for c, p in reversed(self.word):
            x = dehn_twist(c, p, x)
        return x

    def __call__(self, x):
        return self.apply(x)

    def inverse(self):
        return MappingClass([(c, -p) for c, p in reversed(self.word)])

    def then(self, other):
        """other ∘ self (self applied first)."""
        return MappingClass(other.word + self.word)

    def compose(self, other):
        """self ∘ other (other applied first)."""
        return MappingClass(self.word + other.word)

    def power(self, n):
        if n == 0:
            return MappingClass.identity()
        base = self if n > 0 else self.inverse()
        return MappingClass(base.word * abs(n))

    def __len__(self):
        return len(self.word)

    def __repr__(self):
        return "MappingClass(%s)" % ", ".join(f"t[{c.coords}]^{p}" for c, p in self.word)


def apply_mapping_class(word, x):
    return word.apply(x)
