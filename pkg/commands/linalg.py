from dataclasses import dataclass
from enum import StrEnum

from semiring.errors import (
    NotSquareError,
    ShapeMismatchError,
    SingularMatrixError,
    SingularNegInfError,
    TooSmallError,
)
from semiring.matrix import DetMethod, TropMatrix, det, mat_mul, minor, transpose
from semiring.scalar import ZERO, Tag, div, is_real


class FailureReason(StrEnum):
    """Why a matrix is not a pseudo unit."""

    BAD_DIAGONAL = "bad_diagonal"
    REAL_OFF_DIAGONAL = "real_off_diagonal"
    SINGULAR = "singular"


@dataclass(frozen=True, slots=True)
class PseudoUnitVerdict:
    """Membership of a matrix in U_n(𝕋), plus whether it is idempotent."""

    is_pseudo_unit: bool
    is_idempotent: bool
    failure_reason: FailureReason | None = None


@dataclass(frozen=True, slots=True)
class InverseReport:
    """The pseudo inverse A^∇ with both pseudo-unit products and their membership in U_n(𝕋)."""

    inverse: TropMatrix
    right_unit: TropMatrix
    left_unit: TropMatrix
    right_ok: bool
    left_ok: bool


def _require_square(matrix: TropMatrix) -> int:
    if not matrix.is_square:
        raise NotSquareError(f"Expected a square matrix, got shape {matrix.rows}x{matrix.cols}.")
    return matrix.rows


def is_regular(a: TropMatrix, method: DetMethod = "auto") -> bool:
    """Return whether |A| is a real, i.e. neither a ν-value nor −∞."""
    return det(a, method).tag is Tag.REAL


def adjoint(a: TropMatrix) -> TropMatrix:
    """Adjoint matrix Adj(A): the transpose of the matrix of minor determinants `|A_{ij}|`.

    Raises:
        NotSquareError: If `a` is not square.
        TooSmallError: If `a` is 1x1.
    """
    n = _require_square(a)
    if n < 2:
        raise TooSmallError("The adjoint needs a matrix of size at least 2.")
    cofactors = TropMatrix(tuple(tuple(det(minor(a, i, j)).value for j in range(n)) for i in range(n)))
    return transpose(cofactors)


def pseudo_inverse(a: TropMatrix, strict: bool = False) -> TropMatrix:
    """Pseudo inverse `A^∇ = Adj(A) ⊘ |A|`.

    The formula is applied to ν-singular matrices too; whether the result is an actual pseudo inverse is decided
    by `check_inverse_pair`. A 1x1 matrix `[x]` has pseudo inverse `[0 ⊘ x]`.

    Args:
        a: Square matrix.
        strict: If set, refuse singular input.

    Returns:
        TropMatrix: The pseudo inverse.

    Raises:
        NotSquareError: If `a` is not square.
        SingularNegInfError: If |A| = −∞.
        SingularMatrixError: If `strict` is set and `a` is singular.
    """
    n = _require_square(a)
    determinant = det(a).value
    if determinant.tag is Tag.NEG_INF:
        raise SingularNegInfError("|A| = −∞, the pseudo inverse is undefined.")
    if strict and determinant.tag is Tag.NU:
        raise SingularMatrixError(f"Matrix is tropically singular with |A| = {determinant}.")
    if n == 1:
        return TropMatrix(((div(ZERO, determinant),),))
    return TropMatrix(tuple(tuple(div(x, determinant) for x in row) for row in adjoint(a).entries))


def is_idempotent(m: TropMatrix) -> bool:
    """Return whether `M ⊙ M = M` entrywise."""
    _require_square(m)
    return mat_mul(m, m) == m


def is_pseudo_unit(m: TropMatrix) -> PseudoUnitVerdict:
    """Decide membership in U_n(𝕋).

    A pseudo unit is a regular matrix whose diagonal entries are all exactly 0 and whose off-diagonal entries all
    lie in R̄^ν. The checks run in that order and the first failing one is reported.
    """
    n = _require_square(m)
    idempotent = is_idempotent(m)
    reason = None
    if any(m[i, i] != ZERO for i in range(n)):
        reason = FailureReason.BAD_DIAGONAL
    elif any(is_real(m[i, j]) for i in range(n) for j in range(n) if i != j):
        reason = FailureReason.REAL_OFF_DIAGONAL
    elif not is_regular(m):
        reason = FailureReason.SINGULAR
    return PseudoUnitVerdict(reason is None, idempotent, reason)


def invert(a: TropMatrix, strict: bool = False) -> InverseReport:
    """Compute A^∇ together with `A ⊙ A^∇`, `A^∇ ⊙ A` and their membership in U_n(𝕋).

    For a regular matrix both memberships hold; for a singular one at least one fails.
    """
    inverse = pseudo_inverse(a, strict=strict)
    right = mat_mul(a, inverse)
    left = mat_mul(inverse, a)
    return InverseReport(
        inverse=inverse,
        right_unit=right,
        left_unit=left,
        right_ok=is_pseudo_unit(right).is_pseudo_unit,
        left_ok=is_pseudo_unit(left).is_pseudo_unit,
    )


def check_inverse_pair(a: TropMatrix, b: TropMatrix) -> bool:
    """Return whether `B` is a pseudo inverse of `A`: both `AB` and `BA` lie in U_n(𝕋)."""
    _require_square(a)
    _require_square(b)
    if a.shape != b.shape:
        raise ShapeMismatchError(f"Matrices of shapes {a.shape} and {b.shape} cannot form a pair.")
    return is_pseudo_unit(mat_mul(a, b)).is_pseudo_unit and is_pseudo_unit(mat_mul(b, a)).is_pseudo_unit


def is_e_dense(a: TropMatrix) -> bool:
    """Return whether A^∇ makes both products idempotent pseudo units, i.e. A is E-dense w.r.t. U_n^idm."""
    if det(a).tag is Tag.NEG_INF:
        return False
    report = invert(a)
    verdicts = is_pseudo_unit(report.right_unit), is_pseudo_unit(report.left_unit)
    return all(v.is_pseudo_unit and v.is_idempotent for v in verdicts)
