"""Acceptance suite: one test per acceptance criterion, each printing a
single pass/fail line.  Run with ``pytest -v -s tests/test_acceptance.py``
to see the lines as they go by.
"""

import gc
import io
import random
import sys
import time

from sospred import cli, exact
from sospred.algorithms import (Polygon, convex_hull_2d, delaunay_2d,
                                point_in_polygon)
from sospred.epsorder import Kind
from sospred.exact import determinant_exact, hadamard_bound, sign_of_determinant
from sospred.predicates import (Hyperplane, Point, PointSet, above, in_sphere,
                                intersect_half_line, on_positive_side,
                                positive)
from sospred.sossign import sign_det_sos_raw, table_from_csv

from golden_tables import ALL_TABLES
from oracle import perturbed_sign_depth
from test_algorithms import (assert_empty_circle, assert_hull_invariants,
                             boundary_oracle, winding_oracle)

KINDS = {"lambda": Kind.LAMBDA, "delta": Kind.DELTA}


def report(n, name, ok=True):
    print(f"criterion {n} ({name}): {'PASS' if ok else 'FAIL'}")


def run_gentable(kind, dim):
    buf = io.StringIO()
    out, sys.stdout = sys.stdout, buf
    try:
        code = cli.main(["gentable", kind, str(dim), "--format", "csv"])
    finally:
        sys.stdout = out
    assert code == 0
    return table_from_csv(buf.getvalue())


def test_criterion_1_golden_tables():
    t0 = time.perf_counter()
    for (kind_name, size), golden in sorted(ALL_TABLES.items()):
        table = run_gentable(kind_name, size)
        assert len(table) == len(golden), (kind_name, size)
        for term, (t, v, sign, eps) in zip(table, golden):
            assert (term.depth, term.v, term.sign) == (t, v, sign)
            assert term.eps == frozenset(eps)
            assert term.k == size - len(eps)
            assert term.deleted_rows == tuple(sorted(r for r, _ in eps))
            assert term.deleted_cols == tuple(sorted(c for _, c in eps))
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0, elapsed
    report(1, "golden tables")


def _oracle_check(kind, rows):
    size = len(rows)
    full = ([list(r) + [1] for r in rows] if kind is Kind.LAMBDA
            else [list(r) for r in rows])
    got = sign_det_sos_raw(kind, full, size)
    want = perturbed_sign_depth(kind.value, full)
    assert got == want, (kind, rows, got, want)


def test_criterion_2_oracle_equivalence():
    t0 = time.perf_counter()
    # every ordered Lambda_3 triple over {0,1,2}^2
    cells = [(x, y) for x in range(3) for y in range(3)]
    count = 0
    for a in cells:
        for b in cells:
            for c in cells:
                _oracle_check(Kind.LAMBDA, [a, b, c])
                count += 1
    assert count == 729
    # randomized larger instances biased toward degeneracy
    rng = random.Random(2026)
    total = 0
    for kind, size, trials in [(Kind.LAMBDA, 4, 4000), (Kind.DELTA, 3, 3000),
                               (Kind.DELTA, 4, 3000)]:
        width = size - 1 if kind is Kind.LAMBDA else size
        for t in range(trials):
            rows = [[rng.randint(-2, 2) for _ in range(width)]
                    for _ in range(size)]
            bias = t % 4
            if bias == 1:  # duplicated row
                rows[rng.randrange(size)] = rows[rng.randrange(size)][:]
            elif bias == 2:  # zero row
                rows[rng.randrange(size)] = [0] * width
            elif bias == 3:  # collinear grid: all rows multiples of one
                base = [rng.randint(-1, 1) for _ in range(width)]
                rows = [[rng.randint(0, 2) * x for x in base]
                        for _ in range(size)]
            _oracle_check(kind, rows)
            total += 1
    assert total >= 10**4
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0, elapsed
    report(2, "brute-force oracle equivalence")


def test_criterion_3_never_degenerate():
    # The nastiest inputs we can think of: every predicate must still give a
    # strict two-way answer, and every perturbed sign must be nonzero.
    for kind in (Kind.LAMBDA, Kind.DELTA):
        for size in (2, 3, 4, 5):
            width = size - 1 if kind is Kind.LAMBDA else size
            nasty = [
                [[0] * width for _ in range(size)],
                [[1] * width for _ in range(size)],
                [[-3] * width for _ in range(size)],
                [list(range(width)) for _ in range(size)],
            ]
            for rows in nasty:
                full = ([r + [1] for r in rows] if kind is Kind.LAMBDA
                        else rows)
                sign, depth = sign_det_sos_raw(kind, full, size)
                assert sign in (-1, 1)
    p = [Point(i, (7, 7)) for i in range(4)]
    assert positive(p[:3]) in (True, False)
    assert in_sphere(p) in (True, False)
    assert intersect_half_line(p[0], p[1], p[2]) in (True, False)
    h = [Hyperplane(i, (0, 0, 0)) for i in range(3)]
    assert on_positive_side(h) in (True, False)
    h = [Hyperplane(i, (0, 0)) for i in range(3)]
    assert above(h) in (True, False)
    report(3, "never-degenerate answers")


def test_criterion_4_depth_zero_fidelity():
    rng = random.Random(4)
    nonzero = 0
    for _ in range(10**4):
        size = rng.choice([2, 3, 4])
        kind = rng.choice([Kind.LAMBDA, Kind.DELTA])
        width = size - 1 if kind is Kind.LAMBDA else size
        rows = [[rng.randint(-10**3, 10**3) for _ in range(width)]
                for _ in range(size)]
        full = [r + [1] for r in rows] if kind is Kind.LAMBDA else rows
        raw = sign_of_determinant(full)
        if raw == 0:
            continue
        nonzero += 1
        assert sign_det_sos_raw(kind, full, size) == (raw, 0)
    assert nonzero > 9000  # random inputs are almost surely nondegenerate
    report(4, "depth-0 fidelity")


def test_criterion_5_depth_taxonomy():
    cases = [
        ([(0, 0), (1, 0), (0, 1)], 0),   # general position
        ([(0, 0), (1, 1), (2, 2)], 1),   # collinear, distinct
        ([(0, 0), (0, 1), (0, 2)], 2),   # collinear on a vertical line
        ([(0, 0), (1, 1), (1, 1)], 3),   # two coincident points
        ([(0, 0), (0, 1), (0, 1)], 4),   # coincident on a vertical line
    ]
    for rows, want in cases:
        full = [list(r) + [1] for r in rows]
        sign, depth = sign_det_sos_raw(Kind.LAMBDA, full, 3)
        assert depth == want, (rows, depth, want)
        assert sign in (-1, 1)
    report(5, "t_max taxonomy depths 0..4")


def test_criterion_6_parity_algorithm():
    coords = [(0, 0), (4, 0), (4, 4), (0, 4)]
    poly = Polygon.from_coords(coords)
    probes = (
        coords                                   # vertices
        + [(2, 0), (4, 2), (2, 4), (0, 2)]       # edge midpoints
        + [(1, 0), (4, 3), (3, 4), (0, 1)]       # edge-interior points
        + [(-1, 0), (5, 0), (-1, 4), (6, 4)]     # collinear with edges, outside
        + [(x, y) for x in range(-1, 6) for y in range(-1, 6)]
    )
    for p in probes:
        r1 = point_in_polygon(Point(0, p), poly)
        r2 = point_in_polygon(Point(0, p), poly)
        assert r1 == r2  # deterministic
        assert r1.classification in ("inside", "outside")
        if boundary_oracle(p, coords):
            rb = point_in_polygon(Point(0, p), poly, boundary_pretest=True)
            assert rb.classification == "boundary"
        else:  # strict witness: must match the exact winding-number oracle
            assert r1.classification == winding_oracle(p, coords), p
    report(6, "parity algorithm consistency")


def test_criterion_7_hull_delaunay_invariants():
    t0 = time.perf_counter()
    rng = random.Random(7)
    for trial in range(100):
        coords = [(rng.randint(0, 500), rng.randint(0, 500)) for _ in range(50)]
        ps = PointSet.from_coords(coords)
        hull = convex_hull_2d(ps)
        assert_hull_invariants(ps, hull)
        tri = delaunay_2d(ps)
        assert_empty_circle(ps, tri.triangles)
    adversarial = [
        [(i, 2 * i) for i in range(12)],                       # all collinear
        [(i // 2, i // 2) for i in range(10)],                 # coincident pairs
        [(25, 0), (20, 15), (15, 20), (0, 25), (-15, 20),     # cocircular ring
         (-20, 15), (-25, 0), (-20, -15), (-15, -20), (0, -25),
         (15, -20), (20, -15), (24, 7), (7, 24), (-7, 24), (-24, 7),
         (-24, -7), (-7, -24), (7, -24), (24, -7)],
    ]
    for coords in adversarial:
        ps = PointSet.from_coords(coords)
        hull = convex_hull_2d(ps)
        assert_hull_invariants(ps, hull)
        tri = delaunay_2d(ps)
        assert_empty_circle(ps, tri.triangles)
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0, elapsed
    report(7, "hull/Delaunay invariants")


def test_criterion_8_hadamard_bound():
    rng = random.Random(8)
    for _ in range(10**4):
        size = rng.randint(1, 6)
        mu = rng.choice([1, 2, 10, 10**3, 10**6])
        m = [[rng.randint(-mu, mu) for _ in range(size)] for _ in range(size)]
        actual_mu = max((abs(e) for row in m for e in row), default=0)
        assert abs(determinant_exact(m)) <= hadamard_bound(actual_mu, size)
    report(8, "Hadamard bound")


def test_criterion_9_performance():
    rng = random.Random(9)
    n = 10**5
    tris = []
    while len(tris) < n:
        pts = [Point(i, (rng.randint(0, 1000), rng.randint(0, 1000)))
               for i in range(3)]
        tris.append(pts)

    def float_orient(ax, ay, bx, by, cx, cy):
        return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) > 0.0

    flat = [(float(a.coords[0]), float(a.coords[1]),
             float(b.coords[0]), float(b.coords[1]),
             float(c.coords[0]), float(c.coords[1])) for a, b, c in tris]

    def best_of(fn, repeats=3):
        # min over a few runs, GC paused: measure the code, not the noise
        times = []
        gc_was_on = gc.isenabled()
        gc.disable()
        try:
            for _ in range(repeats):
                t0 = time.perf_counter()
                fn()
                times.append(time.perf_counter() - t0)
        finally:
            if gc_was_on:
                gc.enable()
        return min(times)

    def run_baseline():
        for args in flat:
            float_orient(*args)

    def run_positive():
        for pts in tris:
            positive(pts)

    baseline = best_of(run_baseline)
    original = exact.backend_name()
    try:
        exact.select_backend("pure")
        exact_time = best_of(run_positive)
        native_time = None
        if exact.native_available():
            exact.select_backend("native")
            native_time = best_of(run_positive)
    finally:
        exact.select_backend(original)

    exact_ratio = exact_time / baseline
    assert exact_ratio < 100.0, f"exact path {exact_ratio:.1f}x baseline"
    if native_time is not None:
        native_ratio = native_time / baseline
        assert native_ratio < 20.0, f"fast path {native_ratio:.1f}x baseline"
        print(f"  [exact {exact_ratio:.1f}x, fast {native_ratio:.1f}x "
              f"of float baseline]")
    report(9, "performance envelope")
