"""Checks of the relations that tie 𝕋 to the outside world.

Two statements are verified instance by instance here: the valuation of Puiseux polynomials is a homomorphic
relation into 𝕋 through the rays P_x, and the pseudo units of a regular real matrix act as identities once the ν
tags are forgotten.
"""

from commands.linalg import invert, is_regular
from commands.reports import LawReport, to_jsonable
from semiring.errors import PreconditionFailedError
from semiring.matrix import TropMatrix, mat_mul, pi_star
from semiring.scalar import is_nu
from semiring.valuation import PuiseuxPoly, ray_contains, val

VAL_HOMOMORPHISM = "val-homomorphism"
REAL_PROJECTION = "real-projection"


def check_homomorphic_relation(
    f: PuiseuxPoly, g: PuiseuxPoly, seed: int | None = None, index: int | None = None
) -> LawReport:
    """Verify `Val(f·g) ∈ P_{x⊙y}` and `Val(f+g) ∈ P_{x⊕y}` for `x = Val(f)`, `y = Val(g)`.

    When both valuations agree, `x ⊕ y` is a ν-value whose ray absorbs any depth of cancellation in `f + g`.

    Args:
        f: First series.
        g: Second series.
        seed: Seed recorded on the report.
        index: Instance index recorded on the report.

    Returns:
        LawReport: Pass iff both memberships hold.
    """
    x, y = val(f), val(g)
    val_product, val_sum = val(f * g), val(f + g)
    product_ok = ray_contains(x * y, val_product)
    sum_ok = ray_contains(x + y, val_sum)
    passed = product_ok and sum_ok
    witness = None
    if not passed:
        witness = to_jsonable(
            {
                "val_f": x,
                "val_g": y,
                "product_anchor": x * y,
                "val_product": val_product,
                "sum_anchor": x + y,
                "val_sum": val_sum,
            }
        )
    return LawReport(VAL_HOMOMORPHISM, to_jsonable({"f": f, "g": g}), passed, witness, seed, index)


def _has_nu(a: TropMatrix) -> bool:
    return any(is_nu(x) for row in a.entries for x in row)


def check_real_projection(a: TropMatrix, seed: int | None = None, index: int | None = None) -> LawReport:
    """Verify that the pseudo units Î′ = A·A^∇ and Î″ = A^∇·A fix A and A^∇ up to π*.

    The four identities `π*(Î′A) = A`, `π*(A^∇Î′) = A^∇`, `π*(Î″A^∇) = A^∇` and `π*(AÎ″) = A` are compared
    exactly when A^∇ has no ν entry. Otherwise both sides are compared through π*.

    These identities hold for every regular 2x2 matrix but can fail from size 3 on, so callers that need a
    passing verdict should stay in dimension 2.

    Raises:
        PreconditionFailedError: If `a` is not square, not regular, or has a ν entry.
    """
    if not a.is_square:
        raise PreconditionFailedError(f"Expected a square matrix, got shape {a.rows}x{a.cols}.")
    if _has_nu(a):
        raise PreconditionFailedError("Entries of the matrix must lie in R̄, found a ν-value.")
    if not is_regular(a):
        raise PreconditionFailedError("The matrix must be tropically regular.")

    report = invert(a)
    inverse, right, left = report.inverse, report.right_unit, report.left_unit
    form = "projected" if _has_nu(inverse) else "exact"
    identities = {
        "right_unit_a": (mat_mul(right, a), a),
        "inverse_right_unit": (mat_mul(inverse, right), inverse),
        "left_unit_inverse": (mat_mul(left, inverse), inverse),
        "a_left_unit": (mat_mul(a, left), a),
    }
    failed = {
        name: {"projected": pi_star(product), "expected": pi_star(target)}
        for name, (product, target) in identities.items()
        if pi_star(product) != pi_star(target)
    }
    witness = to_jsonable({"form": form, "inverse": inverse, "failed": failed}) if failed else None
    return LawReport(REAL_PROJECTION, to_jsonable({"a": a, "form": form}), not failed, witness, seed, index)
