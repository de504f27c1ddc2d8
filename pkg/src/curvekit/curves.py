"""Normal curves and multicurves in canonical coordinates.

Equality of isotopy classes is equality of coordinate vectors: the canonical
position of a normal multicurve is unique, so the tight coordinate vector is a
complete invariant.  Curves built by the engine carry a provenance word (their
expression as a twist-word image of a reference curve), which later lets
intersection numbers be evaluated by exact pullback instead of search.
"""

from .errors import MatchingViolation, NotConnected, NullCurve, PeripheralCurve, TriangulationMismatch
from . import tracing
from .surfaces import edge_of


def dual_arc_pattern(tri, alpha):
    """Coordinates of the boundary of a neighborhood of edge alpha (endpoints distinct).

    The curve crosses every other edge once per endpoint it has at alpha's ends.
    Returns None if alpha is a loop (both ends at one puncture).
    """
    p, q = tri.edge_endpoints[alpha]
    if p == q:
        return None
    w = []
    for e in range(tri.num_edges):
        if e == alpha:
            w.append(0)
        else:
            a, b = tri.edge_endpoints[e]
            w.append((1 if a in (p, q) else 0) + (1 if b in (p, q) else 0))
    return tuple(w)


def dual_arc_of(tri, coords):
    """If coords equal a dual-arc pattern, return that edge, else None."""
    for alpha in range(tri.num_edges):
        if coords[alpha] != 0:
            continue
        if dual_arc_pattern(tri, alpha) == tuple(coords):
            return alpha
    return None


class NormalCurve:
    """A single essential, non-peripheral simple closed curve."""

    __slots__ = ("triangulation", "coords", "provenance", "_components", "_hash")

    def __init__(self, triangulation, coords, _validated=False, provenance=None):
        self.triangulation = triangulation
        self.coords = tuple(int(c) for c in coords)
        self.provenance = provenance
        self._components = None
        self._hash = None
        if not _validated:
            self._validate()

    def _validate(self):
        tri = self.triangulation
        tracing.validate_matching(tri, self.coords)
        if all(c == 0 for c in self.coords):
            raise NullCurve("all-zero coordinate vector")
        comps = tracing.trace(tri, self.coords)
        if len(comps) != 1:
            raise NotConnected(f"coordinates trace to {len(comps)} components")
        self._components = comps
        cen = tracing.census(tri, self.coords, comps)
        for r in cen.regions:
            if r.is_disk:
                raise NullCurve("curve bounds a disk")
            if r.is_once_punctured_disk:
                raise PeripheralCurve("curve bounds a once-punctured disk")

    @property
    def weight(self):
        return sum(self.coords)

    def trace(self):
        if self._components is None:
            self._components = tracing.trace(self.triangulation, self.coords)
        return self._components

    def path(self):
        return self.trace()[0]

    def census(self):
        return tracing.census(self.triangulation, self.coords, self.trace())

    def is_separating(self):
        return len(self.census().regions) == 2

    def __eq__(self, other):
        return (
            isinstance(other, NormalCurve)
            and self.triangulation == other.triangulation
            and self.coords == other.coords
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coords)
        return self._hash

    def __repr__(self):
        return f"NormalCurve{self.coords}"


class MultiCurve:
    """Nonempty family of pairwise-disjoint, pairwise non-isotopic curves."""

    __slots__ = ("triangulation", "components", "_hash")

    def __init__(self, components, _validated=False):
        if not components:
            raise NullCurve("empty multicurve")
        tri = components[0].triangulation
        for c in components:
            if c.triangulation != tri:
                raise TriangulationMismatch("components on different triangulations")
        self.triangulation = tri
        self.components = tuple(sorted(components, key=lambda c: c.coords))
        self._hash = None
        if not _validated:
            self._validate()

    def _validate(self):
        coords = [c.coords for c in self.components]
        if len(set(coords)) != len(coords):
            raise MatchingViolation("isotopic components in multicurve")
        from .intersection import intersection_number

        for i in range(len(self.components)):
            for j in range(i + 1, len(self.components)):
                if intersection_number(self.components[i], self.components[j]) != 0:
                    raise MatchingViolation("multicurve components intersect")

    @property
    def coords(self):
        total = [0] * self.triangulation.num_edges
        for c in self.components:
            for e, w in enumerate(c.coords):
                total[e] += w
        return tuple(total)

    @property
    def weight(self):
        return sum(self.coords)

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __eq__(self, other):
        return (
            isinstance(other, MultiCurve)
            and self.triangulation == other.triangulation
            and tuple(c.coords for c in self.components) == tuple(c.coords for c in other.components)
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(c.coords for c in self.components))
        return self._hash

    def __repr__(self):
        return f"MultiCurve({list(self.components)})"


def as_components(x):
    """Uniform access: a NormalCurve is its own single component."""
    if isinstance(x, NormalCurve):
        return (x,)
    return tuple(x.components)


def curve_from_coords(triangulation, coords):
    return NormalCurve(triangulation, coords)


def reference_curve(tri, alpha):
    """The curve dual to edge alpha (boundary of a neighborhood of the arc)."""
    pat = dual_arc_pattern(tri, alpha)
    if pat is None:
        raise MatchingViolation(f"edge {alpha} is a loop; no dual curve")
    return NormalCurve(tri, pat, provenance=("ref", alpha))


def complement_components(m):
    """Census of the complement: list of (euler characteristic, boundary count, punctures)."""
    if isinstance(m, NormalCurve):
        m = MultiCurve([m], _validated=True)
    cen = tracing.census(m.triangulation, m.coords)
    return [(r.chi, r.boundary_sides, r.punctures) for r in cen.regions]
