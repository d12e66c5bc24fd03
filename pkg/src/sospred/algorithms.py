"""Demonstration algorithms driven purely by the perturbed predicates:
parity point-in-polygon, 2D convex hull, and 2D Delaunay triangulation.

The algorithms never branch on a degenerate case -- every geometric decision
goes through a predicate that is guaranteed to answer strictly.  Outputs
therefore describe the perturbed point set; optional postprocessing undoes
the perturbation where that makes sense (boundary pretest, collinear merge).
"""

import functools
from dataclasses import dataclass
from typing import Optional

from .exact import sign_of_determinant
from .metrics import DepthStats
from .predicates import Point, PointSet, in_sphere, intersect_half_line, positive, smaller


@dataclass
class Polygon:
    """Closed simple polygon; vertices carry indices 1..n, index 0 is
    reserved for the test point."""

    vertices: list

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise ValueError("polygon needs at least 3 vertices")
        for i, v in enumerate(self.vertices):
            if v.index != i + 1:
                raise ValueError("polygon vertices must carry indices 1..n")

    @classmethod
    def from_coords(cls, coords):
        return cls([Point(i + 1, tuple(c)) for i, c in enumerate(coords)])

    def edges(self):
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n]


@dataclass(frozen=True)
class PipResult:
    classification: str  # inside | outside | boundary
    crossings: int
    max_depth: int


def on_boundary(p: Point, poly: Polygon) -> bool:
    """Exact, unperturbed test: does p lie on a closed edge of the polygon?"""
    px, py = p.coords
    for u, w in poly.edges():
        ux, uy = u.coords
        wx, wy = w.coords
        cross = (wx - ux) * (py - uy) - (wy - uy) * (px - ux)
        if cross != 0:
            continue
        if min(ux, wx) <= px <= max(ux, wx) and min(uy, wy) <= py <= max(uy, wy):
            return True
    return False


def point_in_polygon(p: Point, poly: Polygon, boundary_pretest: bool = False,
                     stats: Optional[DepthStats] = None) -> PipResult:
    """Parity test: count perturbed crossings of the rightward ray from p.

    With the pretest enabled, points exactly on the boundary are reported as
    such; otherwise the perturbation decides a side deterministically.
    """
    if p.index != 0:
        raise ValueError("test point must carry index 0")
    if boundary_pretest and on_boundary(p, poly):
        return PipResult("boundary", 0, 0)
    local = DepthStats()
    crossings = sum(
        intersect_half_line(p, u, w, stats=local) for u, w in poly.edges())
    if stats is not None:
        stats.merge(local)
    classification = "inside" if crossings % 2 else "outside"
    return PipResult(classification, crossings, local.max_depth())


def _perturbed_coord_order(axis):
    # Strict total order on points by one perturbed coordinate.
    def cmp(a: Point, b: Point) -> int:
        ref_a = (a.index, axis, a.coords[axis - 1])
        ref_b = (b.index, axis, b.coords[axis - 1])
        return -1 if smaller(ref_a, ref_b) else 1

    return functools.cmp_to_key(cmp)


def convex_hull_2d(ps: PointSet, merge_collinear: bool = False,
                   stats: Optional[DepthStats] = None) -> list[int]:
    """Counterclockwise hull cycle of the perturbed set, as point indices
    rotated to start at the smallest one.

    Every consecutive triple of the cycle is a strict left turn under the
    perturbation.  ``merge_collinear`` drops vertices whose raw coordinates
    are collinear with their cycle neighbours.
    """
    if ps.n < 3:
        raise ValueError("hull needs at least 3 points")
    pts = sorted(ps.points, key=_perturbed_coord_order(1))

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and not positive([out[-2], out[-1], p], stats=stats):
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = [p.index for p in lower[:-1] + upper[:-1]]

    if merge_collinear:
        pt = {p.index: p.coords for p in ps.points}
        changed = True
        while changed and len(hull) > 3:
            changed = False
            for i in range(len(hull)):
                u = pt[hull[i - 1]]
                v = pt[hull[i]]
                w = pt[hull[(i + 1) % len(hull)]]
                raw = [[u[0], u[1], 1], [v[0], v[1], 1], [w[0], w[1], 1]]
                if sign_of_determinant(raw) == 0:
                    del hull[i]
                    changed = True
                    break

    start = hull.index(min(hull))
    return hull[start:] + hull[:start]


@dataclass
class Triangulation:
    """Positively oriented triangles, each rotated to lead with its smallest
    index, listed lexicographically."""

    triangles: list


def _canonical(tri):
    a, b, c = tri
    m = min(tri)
    if a == m:
        return (a, b, c)
    if b == m:
        return (b, c, a)
    return (c, a, b)


class _TriMesh:
    # Directed-edge map: (a, b) -> c means triangle (a, b, c) is ccw.
    def __init__(self):
        self.edge = {}

    def add(self, a, b, c):
        self.edge[(a, b)] = c
        self.edge[(b, c)] = a
        self.edge[(c, a)] = b

    def remove(self, a, b, c):
        del self.edge[(a, b)]
        del self.edge[(b, c)]
        del self.edge[(c, a)]

    def triangles(self):
        seen = set()
        for (a, b), c in self.edge.items():
            t = _canonical((a, b, c))
            if t not in seen:
                seen.add(t)
                yield t

    def boundary_edges(self):
        # ccw directed edges with no mate: interior of the mesh on the left.
        return [(a, b) for (a, b) in self.edge if (b, a) not in self.edge]


def delaunay_2d(ps: PointSet, stats: Optional[DepthStats] = None) -> Triangulation:
    """Incremental cavity insertion using only the orientation and in-sphere
    predicates.  The result satisfies the empty-circle property under the
    perturbation for every (triangle, point) pair.

    Equivalent to inserting the lifted points into a 3D lower convex hull:
    a triangle is in conflict with the new point when its circumcircle
    contains it, a hull edge when the point lies on its outer side.  The
    conflict region is carved out and re-starred from the new point.  A
    point in conflict with nothing lies above the lifted hull -- the
    perturbation hides it (possible for coordinate duplicates) and it ends
    up spanning no triangle.
    """
    if ps.n < 3:
        raise ValueError("triangulation needs at least 3 points")
    pts = {p.index: p for p in ps.points}
    mesh = _TriMesh()

    a, b, c = ps.points[0], ps.points[1], ps.points[2]
    if positive([a, b, c], stats=stats):
        mesh.add(a.index, b.index, c.index)
    else:
        mesh.add(a.index, c.index, b.index)

    for p in ps.points[3:]:
        conflicts = [t for t in sorted(mesh.triangles())
                     if in_sphere([pts[t[0]], pts[t[1]], pts[t[2]], p],
                                  stats=stats)]
        open_hull = [(u, v) for (u, v) in sorted(mesh.boundary_edges())
                     if not positive([pts[u], pts[v], p], stats=stats)]
        if not conflicts and not open_hull:
            continue  # hidden behind the lifted hull
        cavity = set()
        for (ta, tb, tc) in conflicts:
            cavity.update([(ta, tb), (tb, tc), (tc, ta)])
        open_set = set(open_hull)
        for t in conflicts:
            mesh.remove(*t)
        for (x, y) in sorted(cavity):
            # Keep the cavity rim: edges whose far side is not swallowed.
            if (y, x) in cavity or (x, y) in open_set:
                continue
            mesh.add(x, y, p.index)
        for (u, v) in open_hull:
            if (u, v) not in cavity:
                mesh.add(v, u, p.index)

    return Triangulation(sorted(mesh.triangles()))
