"""sospred: exact, never-degenerate geometric predicates via symbolic
perturbation of integer coordinates."""

from .algorithms import (PipResult, Polygon, Triangulation, convex_hull_2d,
                         delaunay_2d, on_boundary, point_in_polygon)
from .epsorder import (Kind, TermDescriptor, decode, index_set_smaller,
                       initial_vector, next_v, pair_precedes, terminal_vector)
from .exact import (backend_name, determinant_exact, hadamard_bound,
                    native_available, select_backend, sign_of_determinant)
from .metrics import DepthStats, degeneracy_report
from .predicates import (Hyperplane, Point, PointSet, SortResult, above,
                         in_sphere, intersect_half_line, on_positive_side,
                         positive, sign_perturbed_weight, smaller,
                         sort_indices)
from .sossign import (SosMatrix, SosSignResult, emit_straightline_code,
                      generate_term_table, sign_det_sos, sign_det_sos_raw,
                      table_from_csv, table_to_csv, table_to_text)

__version__ = "0.1.0"

__all__ = [
    "Kind", "TermDescriptor", "decode", "pair_precedes", "index_set_smaller",
    "initial_vector", "next_v", "terminal_vector",
    "determinant_exact", "sign_of_determinant", "hadamard_bound",
    "backend_name", "native_available", "select_backend",
    "SosMatrix", "SosSignResult", "sign_det_sos", "sign_det_sos_raw",
    "generate_term_table", "table_to_csv", "table_from_csv", "table_to_text",
    "emit_straightline_code",
    "Point", "PointSet", "Hyperplane", "SortResult", "sort_indices",
    "smaller", "sign_perturbed_weight", "positive", "intersect_half_line",
    "on_positive_side", "above", "in_sphere",
    "Polygon", "PipResult", "Triangulation", "on_boundary",
    "point_in_polygon", "convex_hull_2d", "delaunay_2d",
    "DepthStats", "degeneracy_report",
]
