"""The user-facing predicates over indexed integer points and hyperplanes.

All predicates answer strictly true or false -- the symbolic perturbation
removes every degenerate case, with ties broken deterministically by the
point indices.  Results depend on indices as well as coordinates, so a
point's index is part of its identity.
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import exact as _exact
from .epsorder import Kind
from .metrics import DepthStats
from .sossign import sign_det_sos_raw

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def _check_coord(x: int) -> int:
    if not INT64_MIN <= x <= INT64_MAX:
        raise ValueError("coordinates must fit a signed 64-bit integer")
    return x


@dataclass(frozen=True)
class Point:
    index: int
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(_check_coord(x) for x in self.coords))


@dataclass(frozen=True)
class Hyperplane:
    """General form: (a_1 .. a_d, a_{d+1}) for <x, a> + a_{d+1} = 0, normal
    nonzero.  Nonvertical form: (a_1 .. a_{d-1}, a_d) for
    a_1 x_1 + .. + a_{d-1} x_{d-1} + x_d + a_d = 0."""

    index: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_check_coord(x) for x in self.coeffs))


@dataclass
class PointSet:
    """Dense, indexed points: point i sits at position i."""

    points: list = field(default_factory=list)
    mode: str = "cartesian"

    def __post_init__(self):
        for i, p in enumerate(self.points):
            if p.index != i:
                raise ValueError("point indices must be dense 0..n-1")

    @classmethod
    def from_coords(cls, coords, mode="cartesian"):
        return cls([Point(i, tuple(c)) for i, c in enumerate(coords)], mode=mode)

    @property
    def n(self):
        return len(self.points)

    @property
    def dim(self):
        d = len(self.points[0].coords)
        return d - 1 if self.mode == "homogeneous" else d

    def __getitem__(self, i):
        return self.points[i]


@dataclass(frozen=True)
class SortResult:
    sorted_indices: tuple
    parity: int  # transposition count mod 2


def sort_indices(seq: Sequence[int]) -> SortResult:
    """Sort distinct indices ascending, counting exchanges."""
    items = list(seq)
    if len(set(items)) != len(items):
        raise ValueError("indices must be mutually distinct")
    swaps = 0
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            swaps += 1
            j -= 1
    return SortResult(tuple(items), swaps % 2)


def smaller(a: tuple, b: tuple) -> bool:
    """Perturbed coordinate comparison.

    Arguments are references (point index, coordinate index, value).  Equal
    values are ordered by the perturbation: higher point index first, then
    lower coordinate index.
    """
    i, j, va = a
    k, l, vb = b
    if (i, j) == (k, l):
        raise ValueError("cannot compare a coordinate with itself")
    if va != vb:
        return va < vb
    if i != k:
        return i > k
    return j < l


def sign_perturbed_weight(index: int, weight: int) -> int:
    """Sign of a perturbed homogeneous weight; a zero weight perturbs to +."""
    if weight > 0:
        return 1
    if weight < 0:
        return -1
    return 1


def _require_distinct(indices):
    if len(set(indices)) != len(indices):
        raise ValueError("points must have mutually distinct indices")


def _oriented_sign(kind: Kind, items, stats, label) -> int:
    """Sign of the perturbed determinant for rows in the given sequence
    order: rows are sorted by index for evaluation, then the sort parity is
    folded back in.  ``items`` is a list of (index, row) pairs.
    """
    size = len(items)
    inv = 0
    for a in range(size):
        ia = items[a][0]
        for b in range(a + 1, size):
            if ia > items[b][0]:
                inv += 1
    if inv:
        items = sorted(items)
    if kind is Kind.LAMBDA:
        full = [list(row) + [1] for _, row in items]
    else:
        full = [list(row) for _, row in items]
    sign, depth = sign_det_sos_raw(kind, full, size)
    if stats is not None:
        stats.record(label, depth)
    return -sign if inv % 2 else sign


def _positive_2d(a: Point, b: Point, c: Point, stats) -> bool:
    """2D orientation, the hottest call in the package.

    Sorts the three points by index with explicit swaps, tries the current
    fixed-width kernel on the raw determinant, and only falls back to the
    full perturbation walk when the input is degenerate.
    """
    ia, ib, ic = a.index, b.index, c.index
    if ia == ib or ib == ic or ia == ic:
        raise ValueError("points must have mutually distinct indices")
    neg = False
    if ia > ib:
        a, b, ia, ib = b, a, ib, ia
        neg = not neg
    if ib > ic:
        b, c, ib = c, b, ic
        neg = not neg
    if ia > ib:
        a, b = b, a
        neg = not neg
    ax, ay = a.coords
    bx, by = b.coords
    cx, cy = c.coords
    try:
        s = _exact._kernel.det_sign((ax, ay, 1, bx, by, 1, cx, cy, 1))
    except OverflowError:
        d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
        s = (d > 0) - (d < 0)
    if s:
        if stats is not None:
            stats.record("positive", 0)
        return (s == 1) != neg
    s, depth = sign_det_sos_raw(
        Kind.LAMBDA, [[ax, ay, 1], [bx, by, 1], [cx, cy, 1]], 3)
    if stats is not None:
        stats.record("positive", depth)
    return (s == 1) != neg


def positive(points: Sequence[Point], mode: str = "cartesian",
             allow_zero_weight: bool = False,
             stats: Optional[DepthStats] = None) -> bool:
    """Orientation of a sequence of d+1 points in d dimensions.

    Cartesian mode: True iff the perturbed sequence is positively oriented.
    Homogeneous mode: points carry d+1 coordinates, the last one a weight;
    zero weights (points at infinity) are rejected unless explicitly allowed,
    in which case the weight perturbs to a positive infinitesimal.
    """
    if mode == "cartesian":
        if len(points) == 3:
            a, b, c = points
            if (len(a.coords) == 2 and len(b.coords) == 2
                    and len(c.coords) == 2):
                return _positive_2d(a, b, c, stats)
    items = [(p.index, p.coords) for p in points]
    _require_distinct([i for i, _ in items])
    if mode == "cartesian":
        d = _oriented_sign(Kind.LAMBDA, items, stats, "positive")
        return d == 1
    if mode != "homogeneous":
        raise ValueError("mode must be 'cartesian' or 'homogeneous'")
    for p in points:
        if all(c == 0 for c in p.coords):
            raise ValueError("all-zero homogeneous coordinates")
        if p.coords[-1] == 0 and not allow_zero_weight:
            raise ValueError("zero homogeneous weight (point at infinity)")
    d = _oriented_sign(Kind.DELTA, items, stats, "positive")
    target = 1
    for p in points:
        target *= sign_perturbed_weight(p.index, p.coords[-1])
    return d == target


def intersect_half_line(v_i: Point, v_j: Point, v_k: Point,
                        stats: Optional[DepthStats] = None) -> bool:
    """Does the perturbed edge (v_j, v_k) cross the rightward horizontal ray
    from v_i?  2D points only."""
    _require_distinct([v_i.index, v_j.index, v_k.index])
    if any(len(p.coords) != 2 for p in (v_i, v_j, v_k)):
        raise ValueError("half-line intersection is a 2D predicate")
    lo, hi = v_j, v_k
    if smaller((hi.index, 2, hi.coords[1]), (lo.index, 2, lo.coords[1])):
        lo, hi = hi, lo
    if not (smaller((lo.index, 2, lo.coords[1]), (v_i.index, 2, v_i.coords[1]))
            and smaller((v_i.index, 2, v_i.coords[1]), (hi.index, 2, hi.coords[1]))):
        return False
    d = _oriented_sign(Kind.LAMBDA,
                       [(v_i.index, v_i.coords), (lo.index, lo.coords),
                        (hi.index, hi.coords)],
                       stats, "intersect_half_line")
    return d == 1


def on_positive_side(planes: Sequence[Hyperplane],
                     stats: Optional[DepthStats] = None) -> bool:
    """d+1 hyperplanes in general form: does the intersection point of the
    first d lie in the positive half-space of the last?"""
    indices = [h.index for h in planes]
    _require_distinct(indices)
    d = len(planes) - 1
    if any(len(h.coeffs) != d + 1 for h in planes):
        raise ValueError("general-form hyperplanes need d+1 coefficients")
    d1 = _oriented_sign(Kind.DELTA, [(h.index, h.coeffs[:d]) for h in planes[:d]],
                        stats, "on_positive_side")
    d2 = _oriented_sign(Kind.DELTA, [(h.index, h.coeffs) for h in planes],
                        stats, "on_positive_side")
    return d1 == d2


def above(planes: Sequence[Hyperplane],
          stats: Optional[DepthStats] = None) -> bool:
    """d+1 nonvertical hyperplanes: does the intersection of the first d lie
    vertically above the last?"""
    indices = [h.index for h in planes]
    _require_distinct(indices)
    d = len(planes) - 1
    if any(len(h.coeffs) != d for h in planes):
        raise ValueError("nonvertical hyperplanes need d coefficients")
    d1 = _oriented_sign(Kind.LAMBDA,
                        [(h.index, h.coeffs[:d - 1]) for h in planes[:d]],
                        stats, "above")
    d2 = _oriented_sign(Kind.LAMBDA, [(h.index, h.coeffs) for h in planes],
                        stats, "above")
    return d1 != d2


def in_sphere(points: Sequence[Point],
              stats: Optional[DepthStats] = None) -> bool:
    """d+2 Cartesian points: does the perturbed image of the last lie inside
    the sphere through the perturbed images of the first d+1?

    The points are lifted onto the unit paraboloid (appending the exact sum
    of squared coordinates) and perturbed there, so the lifted coordinate
    gets an independent perturbation of its own.
    """
    indices = [p.index for p in points]
    _require_distinct(indices)
    d = len(points) - 2
    if any(len(p.coords) != d for p in points):
        raise ValueError(f"in_sphere in dimension {d} needs {d}-coordinate points")
    d1 = _oriented_sign(Kind.LAMBDA,
                        [(p.index, p.coords) for p in points[:d + 1]],
                        stats, "in_sphere")
    d2 = _oriented_sign(Kind.LAMBDA,
                        [(p.index, p.coords + (sum(c * c for c in p.coords),))
                         for p in points],
                        stats, "in_sphere")
    return d1 == d2
