"""Strand-level geometry of normal multicurves.

A normal multicurve is given by one nonnegative weight per edge subject to the
matching conditions (even sums, nonnegative corner counts per triangle).  Its
canonical position puts w_e points on edge e (slots 0..w_e-1) joined by corner
arcs inside each triangle; the nesting of corner arcs is forced, so the
combinatorics below is canonical.

Drawn (not necessarily normal) closed curves are cyclic label sequences: entry
i is the label through which the curve enters a triangle, and the segment runs
inside that triangle until the next crossing.  Tightening removes U-turns
(consecutive labels l, partner(l)), which is exactly isotopy across an edge;
the reduced sequence is normal and realizes the minimal intersection with
every edge.
"""

from dataclasses import dataclass, field

from .errors import MatchingViolation, WeightCapExceeded
from .surfaces import edge_of, partner

WEIGHT_CAP = 400_000_000


def check_cap(total):
    if total > WEIGHT_CAP:
        raise WeightCapExceeded(f"strand operation of size {total} exceeds cap {WEIGHT_CAP}")


def validate_matching(tri, weights):
    """Raise MatchingViolation unless weights satisfy the matching conditions."""
    if len(weights) != tri.num_edges:
        raise MatchingViolation("weight vector length != number of edges")
    if any(w < 0 for w in weights):
        raise MatchingViolation("negative weight")
    for ti in range(tri.num_triangles):
        if tri.corner_counts(ti, weights) is None:
            raise MatchingViolation(f"matching conditions fail in triangle {ti}")


def _tables(tri, weights):
    """Per-label transition tables: label -> (w_here, c_prev, c_here, lab_prev, lab_next, w_prev, w_next)."""
    tabs = [None] * (2 * tri.num_edges)
    for ti, t in enumerate(tri.triangles):
        w = [weights[edge_of(l)] for l in t]
        c = []
        for i in range(3):
            v = w[i] + w[(i + 1) % 3] - w[(i + 2) % 3]
            if v < 0 or v % 2:
                raise MatchingViolation(f"matching conditions fail in triangle {ti}")
            c.append(v // 2)
        for i in range(3):
            tabs[t[i]] = (w[i], c[(i + 2) % 3], c[i], t[(i + 2) % 3], t[(i + 1) % 3], w[(i + 2) % 3], w[(i + 1) % 3])
    return tabs


def _step(tabs, label, p):
    """One strand step: entering through `label` at ccw position p, return next (label, ccw)."""
    w, c_prev, c_here, lab_prev, lab_next, w_prev, w_next = tabs[label]
    if p < c_prev:
        m = lab_prev
        q = w_prev - 1 - p
        wj = w_prev
    else:
        m = lab_next
        q = w - 1 - p
        wj = w_next
    return m ^ 1, wj - 1 - q


def slot_of(label, w, ccw):
    return ccw if label % 2 == 0 else w - 1 - ccw


def trace(tri, weights):
    """All components of the canonical position.

    Returns a list of components, each a list of (entry_label, ccw_position)
    crossings in traversal order.  Total work is the total weight.
    """
    validate_matching(tri, weights)
    total = sum(weights)
    check_cap(2 * total)
    if total == 0:
        return []
    tabs = _tables(tri, weights)
    seen = set()
    components = []
    for e in range(tri.num_edges):
        for s in range(weights[e]):
            start = (2 * e, s)
            if start in seen:
                continue
            comp = []
            lab, p = start
            while (lab, p) not in seen:
                seen.add((lab, p))
                # mark the reverse direction of the same geometric point
                w = tabs[lab][0]
                seen.add((lab ^ 1, w - 1 - p))
                comp.append((lab, p))
                lab, p = _step(tabs, lab, p)
            components.append(comp)
    return components


def crossings_weights(tri, comp):
    w = [0] * tri.num_edges
    for lab, _ in comp:
        w[edge_of(lab)] += 1
    return tuple(w)


def component_labels(comp):
    return [lab for lab, _ in comp]


# -- drawn curves ---------------------------------------------------------------


def reduce_path(tri, labels):
    """Tighten a drawn closed curve (cyclic label list) by cancelling U-turns.

    Returns the reduced cyclic list, possibly empty (contractible curve).
    """
    # linear stack pass, then fix-ups across the wrap-around point
    cur = list(labels)
    while True:
        out = []
        for lab in cur:
            if out and lab == partner(out[-1]):
                out.pop()
            else:
                out.append(lab)
        # cyclic cancellation at the seam
        changed = len(out) != len(cur)
        while len(out) >= 2 and out[0] == partner(out[-1]):
            out.pop()
            out.pop(0)
            changed = True
        cur = out
        if not changed:
            return cur


def path_weights(tri, labels):
    w = [0] * tri.num_edges
    for lab in labels:
        w[edge_of(lab)] += 1
    return tuple(w)


def reverse_path(labels):
    return [partner(l) for l in reversed(labels)]


def path_is_consistent(tri, labels):
    """Each consecutive pair must cross between adjacent triangles."""
    n = len(labels)
    for i in range(n):
        a = labels[i]
        b = labels[(i + 1) % n]
        ta, _ = tri.label_loc[a]
        tb, _ = tri.label_loc[partner(b)]
        if ta != tb:
            return False
    return True


# -- census of the complement of a disjoint multicurve ---------------------------


class _UF:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent
        if x not in p:
            p[x] = x
            return x
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


@dataclass
class Region:
    chi: int
    punctures: int
    boundary_sides: int
    vertex_ids: tuple
    component_sides: dict = field(default_factory=dict)  # comp index -> 1 or 2

    @property
    def is_disk(self):
        return self.chi == 1 and self.punctures == 0

    @property
    def is_once_punctured_disk(self):
        return self.chi == 0 and self.punctures == 1 and self.boundary_sides == 1

    @property
    def is_plain_annulus(self):
        return self.chi == 0 and self.punctures == 0 and self.boundary_sides == 2

    @property
    def is_pants_like(self):
        # no essential curves inside: disk, once-punctured disk, annulus, pants
        holes = self.punctures + self.boundary_sides
        return self.chi + holes == 2 and holes <= 3

    @property
    def essential(self):
        """Can support essential curves / is a genuine subsurface piece."""
        return not self.is_pants_like


@dataclass
class Census:
    regions: list
    region_of_vertex: list  # vertex id -> region index
    region_left_of: dict  # (comp index) -> (region touching side A, region touching side B)

    def region_containing_vertex(self, v):
        return self.regions[self.region_of_vertex[v]]


def _cell_of_interval(ti, i, p, c_prev, c_here, w):
    """Cell id touching ccw-interval p (between positions p-1 and p) of side i."""
    if p < c_prev:
        return ("t", ti, (i + 2) % 3) if p == 0 else ("b", ti, (i + 2) % 3, p - 1)
    if p > w - c_here:
        r = w - p
        return ("t", ti, i) if r == 0 else ("b", ti, i, r - 1)
    # tip of a cornerless corner melts into the central cell
    if p == 0 and c_prev == 0:
        return ("c", ti)
    if p == w and c_here == 0:
        return ("c", ti)
    return ("c", ti)


def _arc_cells(ti, corner, t, count):
    """The two cells adjacent to arc t (0 = innermost) at a corner: (vertex side, outer side)."""
    inner = ("t", ti, corner) if t == 0 else ("b", ti, corner, t - 1)
    outer = ("b", ti, corner, t) if t < count - 1 else ("c", ti)
    return inner, outer


def census(tri, weights, components=None):
    """Connected components of the complement of the multicurve, with per-region
    Euler characteristic (punctures removed), puncture count and boundary data."""
    validate_matching(tri, weights)
    if components is None:
        components = trace(tri, weights)
    uf = _UF()
    # per-triangle corner counts
    corner = []
    for ti in range(tri.num_triangles):
        corner.append(tri.corner_counts(ti, weights))
    # glue cells across each physical edge interval
    interval_count = 0
    for e in range(tri.num_edges):
        w = weights[e]
        la, lb = 2 * e, 2 * e + 1
        (ta, ia), (tb, ib) = tri.label_loc[la], tri.label_loc[lb]
        ca_prev, ca_here = corner[ta][(ia + 2) % 3], corner[ta][ia]
        cb_prev, cb_here = corner[tb][(ib + 2) % 3], corner[tb][ib]
        for k in range(w + 1):
            # physical interval k: side A ccw-interval k, side B ccw-interval w-k
            cell_a = _cell_of_interval(ta, ia, k, ca_prev, ca_here, w)
            cell_b = _cell_of_interval(tb, ib, w - k, cb_prev, cb_here, w)
            uf.union(cell_a, cell_b)
            interval_count += 1
    # count cells and intervals per region root
    cells = set()
    for ti in range(tri.num_triangles):
        cells.add(("c", ti))
        for i in range(3):
            c = corner[ti][i]
            if c > 0:
                cells.add(("t", ti, i))
                for t in range(c - 1):
                    cells.add(("b", ti, i, t))
    root_cells = {}
    for cell in cells:
        r = uf.find(cell)
        root_cells[r] = root_cells.get(r, 0) + 1
    root_intervals = {}
    for e in range(tri.num_edges):
        w = weights[e]
        la = 2 * e
        ta, ia = tri.label_loc[la]
        ca_prev, ca_here = corner[ta][(ia + 2) % 3], corner[ta][ia]
        for k in range(w + 1):
            r = uf.find(_cell_of_interval(ta, ia, k, ca_prev, ca_here, w))
            root_intervals[r] = root_intervals.get(r, 0) + 1
    # vertices: the corner region at each vertex
    root_vertices = {}
    region_of_vertex = [None] * tri.num_vertices
    for (ti, i), v in tri.corner_vertex.items():
        if region_of_vertex[v] is not None:
            continue
        c = corner[ti][i]
        cell = ("t", ti, i) if c > 0 else ("c", ti)
        region_of_vertex[v] = uf.find(cell)
        root_vertices.setdefault(region_of_vertex[v], []).append(v)
    # component adjacency: cells on the two sides of each component's arcs
    comp_regions = []
    for comp in components:
        sides = set()
        # pick one arc of the component: between crossing j and j+1 the strand
        # cuts a corner of the triangle entered through label_j.
        lab, p = comp[0]
        # recompute this arc's corner and nesting index
        ti, i = tri.label_loc[lab]
        c_prev, c_here = corner[ti][(i + 2) % 3], corner[ti][i]
        w = weights[edge_of(lab)]
        if p < c_prev:
            crn, t = (i + 2) % 3, p
        else:
            crn, t = i, w - 1 - p
        inner, outer = _arc_cells(ti, crn, t, corner[ti][crn])
        sides.add(uf.find(inner))
        sides.add(uf.find(outer))
        comp_regions.append(tuple(sorted(sides, key=repr)))
    # assemble regions
    roots = sorted(root_cells, key=repr)
    index = {r: k for k, r in enumerate(roots)}
    regions = []
    for r in roots:
        verts = tuple(sorted(root_vertices.get(r, [])))
        regions.append(
            Region(
                chi=root_cells[r] - root_intervals.get(r, 0),
                punctures=len(verts),
                boundary_sides=0,
                vertex_ids=verts,
            )
        )
    region_left_of = {}
    for ci, sides in enumerate(comp_regions):
        if len(sides) == 1:
            k = index[sides[0]]
            regions[k].boundary_sides += 2
            regions[k].component_sides[ci] = 2
            region_left_of[ci] = (k, k)
        else:
            ka, kb = index[sides[0]], index[sides[1]]
            regions[ka].boundary_sides += 1
            regions[kb].boundary_sides += 1
            regions[ka].component_sides[ci] = 1
            regions[kb].component_sides[ci] = 1
            region_left_of[ci] = (ka, kb)
    rv = [index[r] for r in region_of_vertex]
    return Census(regions=regions, region_of_vertex=rv, region_left_of=region_left_of)
