from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from commands.linalg import InverseReport, PseudoUnitVerdict
from semiring.io import matrix_to_json, poly_to_json, series_to_json
from semiring.matrix import DetResult, TropMatrix
from semiring.poly import TropPoly
from semiring.scalar import TropScalar, format_scalar
from semiring.valuation import PuiseuxPoly


@dataclass(frozen=True, slots=True)
class LawReport:
    """Outcome of one law check on one instance.

    Attributes:
        law_id: Registered identifier of the law.
        instance: JSON-ready inputs of the check.
        passed: Whether the statement held.
        witness: JSON-ready data explaining a failure; always present when `passed` is false.
        seed: Seed of the run that generated the instance.
        index: Position of the instance in the generated stream; `None` for pinned instances.
    """

    law_id: str
    instance: dict[str, Any] = field(default_factory=dict)
    passed: bool = True
    witness: dict[str, Any] | None = None
    seed: int | None = None
    index: int | None = None

    def __post_init__(self) -> None:
        """Reject failing reports without a witness."""
        if not self.passed and self.witness is None:
            raise ValueError(f"A failing report of {self.law_id!r} must carry a witness.")

    @property
    def verdict(self) -> str:
        """`"pass"` or `"fail"`."""
        return "pass" if self.passed else "fail"


def to_jsonable(value: Any) -> Any:
    """Recursively convert scalars, matrices, polynomials, series and rationals into JSON-ready values."""
    match value:
        case TropScalar():
            return format_scalar(value)
        case TropMatrix():
            return matrix_to_json(value)["rows"]
        case TropPoly():
            return poly_to_json(value)
        case PuiseuxPoly():
            return series_to_json(value)
        case DetResult():
            return det_result_jsonable(value)
        case bool() | int() | str() | None:
            return value
        case Fraction():
            return str(value)
        case Mapping():
            return {str(k): to_jsonable(v) for k, v in value.items()}
        case Sequence():
            return [to_jsonable(v) for v in value]
    raise TypeError(f"Cannot serialize {type(value).__name__}.")


def det_result_jsonable(result: DetResult) -> dict[str, Any]:
    """Compact determinant encoding used inside witnesses."""
    return {"value": format_scalar(result.value), "optimal_count": result.optimal_count}


def law_report_to_json(report: LawReport) -> dict[str, Any]:
    """Encode a report as one JSON line object."""
    data: dict[str, Any] = {
        "law_id": report.law_id,
        "verdict": report.verdict,
        "seed": report.seed,
        "index": report.index,
        "instance": report.instance,
    }
    if report.witness is not None:
        data["witness"] = report.witness
    return data


def inverse_report_to_json(report: InverseReport) -> dict[str, Any]:
    """Encode an `InverseReport`, matrices in the `rows` list format."""
    return {
        "inverse": matrix_to_json(report.inverse),
        "right_unit": matrix_to_json(report.right_unit),
        "left_unit": matrix_to_json(report.left_unit),
        "right_ok": report.right_ok,
        "left_ok": report.left_ok,
    }


def verdict_to_json(verdict: PseudoUnitVerdict) -> dict[str, Any]:
    """Encode a pseudo-unit verdict."""
    return {
        "is_pseudo_unit": verdict.is_pseudo_unit,
        "is_idempotent": verdict.is_idempotent,
        "failure_reason": None if verdict.failure_reason is None else str(verdict.failure_reason),
    }
