"""Punctured surfaces and their ideal triangulations.

A triangulation is stored as a list of triangles, each a triple of *labels*
listed counterclockwise.  Label 2e and label 2e+1 are the two sides of edge e;
every label occurs exactly once.  Edge e carries slots 0..w-1 for a curve of
weight w; the triangle attached through label 2e reads the slots in increasing
order along its ccw boundary walk, the triangle attached through 2e+1 in
decreasing order.  This convention makes every gluing orientation-reversing on
the shared edge, so the glued surface is oriented.

Corner C_i of a triangle (l0, l1, l2) lies between side i and side i+1 (mod 3).
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ClosedUnsupported, ComplexityTooLow


def partner(label):
    return label ^ 1


def edge_of(label):
    return label >> 1


@dataclass(frozen=True)
class Surface:
    genus: int
    punctures: int

    def __post_init__(self):
        if self.punctures == 0:
            raise ClosedUnsupported("closed surfaces are not supported (punctures = 0)")
        if self.genus < 0 or self.punctures < 0:
            raise ComplexityTooLow("genus and punctures must be nonnegative")
        if self.complexity <= 1:
            raise ComplexityTooLow(
                f"xi(S_{{{self.genus},{self.punctures}}}) = {self.complexity} <= 1"
            )

    @property
    def complexity(self):
        return 3 * self.genus + self.punctures - 3

    @property
    def euler_characteristic(self):
        return 2 - 2 * self.genus - self.punctures

    @property
    def xi(self):
        return self.complexity

    @property
    def chi(self):
        return self.euler_characteristic

    def __repr__(self):
        return f"Surface(genus={self.genus}, punctures={self.punctures})"


def create_surface(genus, punctures):
    return Surface(genus, punctures)


def gadre_tsai_bound(surface):
    """Closed-form lower bound for the loxodromic constant of the ambient surface."""
    chi = abs(surface.euler_characteristic)
    n = surface.punctures
    return Fraction(1, 162 * chi * chi + 30 * chi - 10 * n)


class Triangulation:
    """Ideal triangulation of an oriented punctured surface."""

    def __init__(self, surface, triangles, name=""):
        self.surface = surface
        self.triangles = [tuple(t) for t in triangles]
        self.name = name
        self.num_triangles = len(self.triangles)
        labels = [l for tri in self.triangles for l in tri]
        if sorted(labels) != list(range(len(labels))):
            raise ValueError("each label 0..2E-1 must occur exactly once")
        if len(labels) % 2:
            raise ValueError("odd number of labels")
        self.num_edges = len(labels) // 2
        # label -> (triangle index, position)
        self.label_loc = [None] * (2 * self.num_edges)
        for ti, tri in enumerate(self.triangles):
            for pos, lab in enumerate(tri):
                self.label_loc[lab] = (ti, pos)
        self._build_vertices()
        self._check()

    # -- vertex combinatorics -------------------------------------------------

    def _next_corner(self, corner):
        """Walk to the adjacent corner around the same vertex."""
        ti, i = corner
        lab = self.triangles[ti][(i + 1) % 3]
        tj, j = self.label_loc[partner(lab)]
        return (tj, j)

    def _build_vertices(self):
        corner_vertex = {}
        orbits = 0
        for ti in range(self.num_triangles):
            for i in range(3):
                if (ti, i) in corner_vertex:
                    continue
                c = (ti, i)
                while c not in corner_vertex:
                    corner_vertex[c] = orbits
                    c = self._next_corner(c)
                orbits += 1
        self.corner_vertex = corner_vertex
        self.num_vertices = orbits
        # endpoints of each edge: (vertex at slot-0 end, vertex at slot-max end)
        # via side 0: ccw-start corner of side pos is C_{pos-1}, ccw-end is C_pos.
        self.edge_endpoints = []
        for e in range(self.num_edges):
            ti, pos = self.label_loc[2 * e]
            start = corner_vertex[(ti, (pos - 1) % 3)]
            end = corner_vertex[(ti, pos)]
            self.edge_endpoints.append((start, end))

    # -- validation -----------------------------------------------------------

    def _check(self):
        s = self.surface
        E, F = self.num_edges, self.num_triangles
        if E != 6 * s.genus + 3 * s.punctures - 6 or F != 4 * s.genus + 2 * s.punctures - 4:
            raise ValueError(
                f"triangulation size ({E} edges, {F} triangles) does not match "
                f"S_{{{s.genus},{s.punctures}}}"
            )
        if F - E != s.euler_characteristic:
            raise ValueError("Euler characteristic mismatch")
        if self.num_vertices != s.punctures:
            raise ValueError(
                f"triangulation has {self.num_vertices} punctures, surface needs {s.punctures}"
            )
        # connectivity through shared edges
        seen = {0}
        stack = [0]
        while stack:
            ti = stack.pop()
            for lab in self.triangles[ti]:
                tj, _ = self.label_loc[partner(lab)]
                if tj not in seen:
                    seen.add(tj)
                    stack.append(tj)
        if len(seen) != F:
            raise ValueError("triangulation is not connected")

    # -- weight helpers --------------------------------------------------------

    def corner_counts(self, tri_index, weights):
        """Corner arc counts (c0, c1, c2) of a triangle for the given edge weights."""
        w = [weights[edge_of(l)] for l in self.triangles[tri_index]]
        out = []
        for i in range(3):
            v = w[i] + w[(i + 1) % 3] - w[(i + 2) % 3]
            if v < 0 or v % 2:
                return None
            out.append(v // 2)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Triangulation)
            and self.surface == other.surface
            and self.triangles == other.triangles
        )

    def __hash__(self):
        return hash((self.surface, tuple(self.triangles)))

    def __repr__(self):
        return f"Triangulation({self.surface}, {self.num_triangles} triangles)"


# -- standard triangulations ---------------------------------------------------


def _double_polygon(n):
    """Two fan-triangulated n-gons glued along their boundary: S_{0,n}.

    Edges: sides s_0..s_{n-1} (s_i joins puncture i to i+1), then top diagonals
    d_j = 0--j for j = 2..n-2, then bottom diagonals likewise.
    """
    side = list(range(n))
    top = {j: n + (j - 2) for j in range(2, n - 1)}
    bot = {j: n + (n - 3) + (j - 2) for j in range(2, n - 1)}
    used = {}

    def lab(e):
        b = used.get(e, 0)
        used[e] = b + 1
        if b > 1:
            raise AssertionError("edge used more than twice")
        return 2 * e + b

    def top_edge(a, b_):
        # edge from corner a to corner b_ inside the top fan (a or b_ is 0, or adjacent)
        if (a, b_) in ((0, 1), (1, 0)):
            return side[0]
        if a == 0:
            return side[n - 1] if b_ == n - 1 else top[b_]
        if b_ == 0:
            return side[n - 1] if a == n - 1 else top[a]
        return side[min(a, b_)]

    def bot_edge(a, b_):
        if (a, b_) in ((0, 1), (1, 0)):
            return side[0]
        if a == 0:
            return side[n - 1] if b_ == n - 1 else bot[b_]
        if b_ == 0:
            return side[n - 1] if a == n - 1 else bot[a]
        return side[min(a, b_)]

    triangles = []
    for j in range(1, n - 1):
        triangles.append((lab(top_edge(0, j)), lab(top_edge(j, j + 1)), lab(top_edge(j + 1, 0))))
    for j in range(1, n - 1):
        triangles.append((lab(bot_edge(0, j + 1)), lab(bot_edge(j + 1, j)), lab(bot_edge(j, 0))))
    assert all(v == 2 for v in used.values())
    return triangles


def _fan_polygon_genus(g):
    """Fan-triangulated 4g-gon with the commutator side pairing: S_{g,1}."""
    m = 4 * g
    # side pairing: sigma_{4k} ~ sigma_{4k+2}, sigma_{4k+1} ~ sigma_{4k+3}
    side_edge = {}
    e = 0
    for k in range(g):
        side_edge[4 * k] = e
        side_edge[4 * k + 2] = e
        e += 1
        side_edge[4 * k + 1] = e
        side_edge[4 * k + 3] = e
        e += 1
    diag = {j: e + (j - 2) for j in range(2, m - 1)}
    used = {}

    def lab(edge):
        b = used.get(edge, 0)
        used[edge] = b + 1
        if b > 1:
            raise AssertionError("edge used more than twice")
        return 2 * edge + b

    def fan_edge(a, b_):
        if (a, b_) in ((0, 1), (1, 0)):
            return side_edge[0]
        if a == 0:
            return side_edge[m - 1] if b_ == m - 1 else diag[b_]
        if b_ == 0:
            return side_edge[m - 1] if a == m - 1 else diag[a]
        return side_edge[min(a, b_)]

    triangles = []
    for j in range(1, m - 1):
        triangles.append((lab(fan_edge(0, j)), lab(fan_edge(j, j + 1)), lab(fan_edge(j + 1, 0))))
    assert all(v == 2 for v in used.values())
    return triangles


def _subdivide(triangles, num_edges, index):
    """Insert a new puncture inside triangle `index` (three new edges)."""
    x, y, z = triangles[index]
    p, q, r = num_edges, num_edges + 1, num_edges + 2
    # sides x: P->Q, y: Q->R, z: R->P; new edges join the centre v to P, Q, R.
    t1 = (x, 2 * q, 2 * p)          # P->Q, Q->v, v->P
    t2 = (y, 2 * r, 2 * q + 1)      # Q->R, R->v, v->Q
    t3 = (z, 2 * p + 1, 2 * r + 1)  # R->P, P->v, v->R
    out = list(triangles)
    out[index : index + 1] = []
    out.extend([t1, t2, t3])
    return out, num_edges + 3


_STANDARD_CACHE = {}


def standard_triangulation(surface):
    """The fixed, documented triangulation used for all standard coordinates."""
    key = (surface.genus, surface.punctures)
    if key in _STANDARD_CACHE:
        return _STANDARD_CACHE[key]
    g, n = key
    if g == 0:
        triangles = _double_polygon(n)
    else:
        triangles = _fan_polygon_genus(g)
        E = 6 * g - 3
        for _ in range(n - 1):
            triangles, E = _subdivide(triangles, E, 0)
    tri = Triangulation(surface, triangles, name="standard")
    _STANDARD_CACHE[key] = tri
    return tri
