from .errors import TropicalError
from .io import (
    det_result_to_json,
    load_matrix,
    load_poly,
    load_series,
    matrix_from_json,
    matrix_to_json,
    poly_from_json,
    poly_to_json,
    series_from_json,
    series_to_json,
)
from .matrix import (
    DetResult,
    TropMatrix,
    det,
    det_fast,
    det_naive,
    identity,
    mat_add,
    mat_mul,
    mat_pow,
    minor,
    pi_star,
    scalar_mul,
    transpose,
    zero_matrix,
)
from .poly import TropPoly, corner_locus_grid, eval_poly, in_zero_set, poly_add, poly_mul
from .scalar import (
    NEG_INF,
    ZERO,
    Ordering,
    Tag,
    TropScalar,
    add,
    compare,
    div,
    format_scalar,
    mul,
    nu,
    nu_project,
    parse_scalar,
    pi_project,
    power,
    real,
    theta_embed,
)
from .valuation import PuiseuxPoly, Ray, ray_contains, series_add, series_mul, val

__all__ = [
    "NEG_INF",
    "ZERO",
    "DetResult",
    "Ordering",
    "PuiseuxPoly",
    "Ray",
    "Tag",
    "TropMatrix",
    "TropPoly",
    "TropScalar",
    "TropicalError",
    "add",
    "compare",
    "corner_locus_grid",
    "det",
    "det_fast",
    "det_naive",
    "det_result_to_json",
    "div",
    "eval_poly",
    "format_scalar",
    "identity",
    "in_zero_set",
    "load_matrix",
    "load_poly",
    "load_series",
    "mat_add",
    "mat_mul",
    "mat_pow",
    "matrix_from_json",
    "matrix_to_json",
    "minor",
    "mul",
    "nu",
    "nu_project",
    "parse_scalar",
    "pi_project",
    "pi_star",
    "poly_add",
    "poly_mul",
    "poly_to_json",
    "power",
    "ray_contains",
    "real",
    "scalar_mul",
    "series_add",
    "series_from_json",
    "series_mul",
    "series_to_json",
    "theta_embed",
    "transpose",
    "val",
    "zero_matrix",
]
