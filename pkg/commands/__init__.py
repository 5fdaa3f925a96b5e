from .generators import GenConfig
from .laws import LAWS, Law, get_law, iter_law, list_laws, run_law, summarize
from .linalg import (
    FailureReason,
    InverseReport,
    PseudoUnitVerdict,
    adjoint,
    check_inverse_pair,
    invert,
    is_e_dense,
    is_idempotent,
    is_pseudo_unit,
    is_regular,
    pseudo_inverse,
)
from .relations import check_homomorphic_relation, check_real_projection
from .reports import LawReport, inverse_report_to_json, law_report_to_json, verdict_to_json

__all__ = [
    "LAWS",
    "FailureReason",
    "GenConfig",
    "InverseReport",
    "Law",
    "LawReport",
    "PseudoUnitVerdict",
    "adjoint",
    "check_homomorphic_relation",
    "check_inverse_pair",
    "check_real_projection",
    "get_law",
    "inverse_report_to_json",
    "invert",
    "is_e_dense",
    "is_idempotent",
    "is_pseudo_unit",
    "is_regular",
    "iter_law",
    "law_report_to_json",
    "list_laws",
    "pseudo_inverse",
    "run_law",
    "summarize",
    "verdict_to_json",
]
