"""Executable statements about 𝕋 and its matrices, checked over pinned and random instances.

A law draws named inputs with `sample`, and `check` maps those inputs to a verdict and, on failure, a witness.
Checks use the operators of `TropScalar` and `TropMatrix` so that patching the module-level operations of
`semiring.scalar` is visible to every law.
"""

from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product, repeat
from typing import Any

import numpy as np
import pandas as pd

from commands.generators import (
    GenConfig,
    cancelling_pair,
    clamp_dims,
    duplicate_line,
    instance_rng,
    random_duplicate_matrix,
    random_matrix,
    random_rational,
    random_regular_matrix,
    random_scalar,
    random_series,
    random_size,
)
from commands.linalg import adjoint, check_inverse_pair, is_e_dense, is_idempotent, is_regular, pseudo_inverse
from commands.relations import check_homomorphic_relation, check_real_projection
from commands.reports import LawReport, det_result_jsonable, to_jsonable
from semiring.errors import UnknownLawError
from semiring.matrix import (
    TropMatrix,
    det,
    det_fast,
    det_naive,
    identity,
    mat_mul,
    permute_cols,
    permute_rows,
    scale_col,
    scale_row,
    transpose,
)
from semiring.scalar import (
    NEG_INF,
    ZERO,
    Ordering,
    Tag,
    TropScalar,
    compare,
    is_ghost,
    maxplus_add,
    maxplus_mul,
    nu,
    nu_project,
    nu_value,
    pi_project,
    real,
    theta_embed,
)
from semiring.valuation import PuiseuxPoly

FRESHMAN_MAX_POWER = 8
CAUCHY_ARITY = (2, 4)
IDENTICAL_ROWS_MAX_N = 6

Inputs = dict[str, Any]
Outcome = tuple[bool, dict[str, Any] | None]

SMALL_GRID = (NEG_INF, real(-1), real(0), real(Fraction(1, 2)), real(1), nu(-1), nu(0), nu(1))


@dataclass(frozen=True, slots=True)
class Law:
    """A registered statement.

    Attributes:
        law_id: Identifier used on the command line.
        statement: The statement being verified.
        sample: Draws the inputs of one random instance.
        check: Evaluates the statement on a set of inputs.
        pinned: Inputs checked on every run before the random instances.
    """

    law_id: str
    statement: str
    sample: Callable[[np.random.Generator, GenConfig], Inputs]
    check: Callable[..., Outcome]
    pinned: tuple[Inputs, ...] = field(default=())


def _fail(**witness: Any) -> Outcome:
    return False, witness


def _mat(rows: Iterable[Iterable[str | int]]) -> TropMatrix:
    return TropMatrix.from_rows(rows)


# Scalar laws


def _sample_triple(rng: np.random.Generator, config: GenConfig) -> Inputs:
    return {"x": random_scalar(rng, config), "y": random_scalar(rng, config), "z": random_scalar(rng, config)}


def check_semiring_axioms(x: TropScalar, y: TropScalar, z: TropScalar) -> Outcome:
    """Commutativity, associativity, distributivity, units and partial idempotency on one triple."""
    failures = []
    if x + y != y + x:
        failures.append("add_commutative")
    if x * y != y * x:
        failures.append("mul_commutative")
    if (x + y) + z != x + (y + z):
        failures.append("add_associative")
    if (x * y) * z != x * (y * z):
        failures.append("mul_associative")
    if x * (y + z) != x * y + x * z:
        failures.append("distributive")
    if x + NEG_INF != x or x * NEG_INF != NEG_INF or x * ZERO != x:
        failures.append("units")
    if x + x != nu_project(x):
        failures.append("partial_idempotency")
    if x + y not in (x, y, nu_project(x)):
        failures.append("sum_is_operand")
    if (x == y) != (compare(x, y) is Ordering.EQUAL):
        failures.append("total_order")
    if failures:
        return _fail(failed=failures, sum=x + y, product=x * y)
    return True, None


def _sample_pair(rng: np.random.Generator, config: GenConfig) -> Inputs:
    return {"x": random_scalar(rng, config), "y": random_scalar(rng, config)}


def check_freshman(x: TropScalar, y: TropScalar) -> Outcome:
    """`(x ⊕ y)^n = x^n ⊕ y^n` for every `1 ≤ n ≤ 8`."""
    for n in range(1, FRESHMAN_MAX_POWER + 1):
        left, right = (x + y) ** n, x**n + y**n
        if left != right:
            return _fail(n=n, left=left, right=right)
    return True, None


def _sample_cauchy(rng: np.random.Generator, config: GenConfig) -> Inputs:
    arity = random_size(rng, CAUCHY_ARITY)
    match int(rng.integers(3)):
        case 0:
            xs = [random_scalar(rng, config) for _ in range(arity)]
        case 1:
            # every ν-value equal and at least one ν operand: equality must be reported
            value = random_rational(rng, config)
            tags = [bool(rng.random() < 0.5) for _ in range(arity)]
            tags[int(rng.integers(arity))] = True
            xs = [nu(value) if ghost else real(value) for ghost in tags]
        case _:
            small = config.replace(value_range=(0, 1), denominators=(1,))
            xs = [random_scalar(rng, small) for _ in range(arity)]
    return {"xs": tuple(xs)}


def check_cauchy(xs: tuple[TropScalar, ...]) -> Outcome:
    """`x₁ ⊙ … ⊙ x_n ⪯ x₁^n ⊕ … ⊕ x_n^n`, with equality iff all ν-values agree and some operand lies in R̄^ν."""
    n = len(xs)
    left, right = ZERO, NEG_INF
    for x in xs:
        left = left * x
        right = right + x**n
    order = compare(left, right)
    if order is Ordering.GREATER:
        return _fail(left=left, right=right)
    expected_equal = len({nu_value(x) for x in xs}) == 1 and any(is_ghost(x) for x in xs)
    if (order is Ordering.EQUAL) != expected_equal:
        return _fail(left=left, right=right, expected_equal=expected_equal)
    return True, None


def check_diagram(x: TropScalar, y: TropScalar) -> Outcome:
    """`ν = θ ∘ π`, and π, ν respect both operations."""
    failures = []
    if nu_project(x) != theta_embed(pi_project(x)):
        failures.append("nu_equals_theta_pi")
    if pi_project(x + y) != maxplus_add(pi_project(x), pi_project(y)):
        failures.append("pi_add")
    if pi_project(x * y) != maxplus_mul(pi_project(x), pi_project(y)):
        failures.append("pi_mul")
    if nu_project(x + y) != nu_project(x) + nu_project(y):
        failures.append("nu_add")
    if nu_project(x * y) != nu_project(x) * nu_project(y):
        failures.append("nu_mul")
    if failures:
        return _fail(failed=failures)
    return True, None


# Matrix laws


def _square(rng: np.random.Generator, config: GenConfig, low: int = 1, high: int | None = None) -> TropMatrix:
    n = random_size(rng, clamp_dims(config, low, high))
    matrix = random_matrix(rng, config, n)
    if config.duplicate_row_mode and n >= 2:
        matrix = duplicate_line(rng, matrix)
    return matrix


def _sample_reordering(rng: np.random.Generator, config: GenConfig) -> Inputs:
    a = _square(rng, config)
    return {
        "a": a,
        "row_order": tuple(int(k) for k in rng.permutation(a.rows)),
        "col_order": tuple(int(k) for k in rng.permutation(a.rows)),
    }


def check_det_transpose(a: TropMatrix, row_order: tuple[int, ...], col_order: tuple[int, ...]) -> Outcome:
    """|A| is invariant under transposition and under reordering of rows or columns."""
    expected = det(a).value
    variants = {
        "transpose": transpose(a),
        "rows": permute_rows(a, row_order),
        "cols": permute_cols(a, col_order),
    }
    failed = {name: det(m).value for name, m in variants.items() if det(m).value != expected}
    if failed:
        return _fail(det=expected, variants=failed)
    return True, None


def _sample_scaling(rng: np.random.Generator, config: GenConfig) -> Inputs:
    a = _square(rng, config)
    c = random_scalar(rng, config.replace(neginf_probability=0))
    return {"a": a, "index": int(rng.integers(a.rows)), "c": c}


def check_det_row_linearity(a: TropMatrix, index: int, c: TropScalar) -> Outcome:
    """Scaling one row or one column by `c` multiplies |A| by `c`."""
    expected = c * det(a).value
    by_row, by_col = det(scale_row(a, index, c)).value, det(scale_col(a, index, c)).value
    if by_row != expected or by_col != expected:
        return _fail(expected=expected, row=by_row, col=by_col)
    return True, None


def _sample_identical_rows(rng: np.random.Generator, config: GenConfig) -> Inputs:
    low, _ = clamp_dims(config, 2, IDENTICAL_ROWS_MAX_N)
    n = random_size(rng, (low, IDENTICAL_ROWS_MAX_N))
    return {"a": random_duplicate_matrix(rng, config, n)}


def check_identical_rows(a: TropMatrix) -> Outcome:
    """A matrix with two identical rows or columns is singular."""
    result = det(a)
    if result.tag is Tag.REAL:
        return _fail(det=det_result_jsonable(result))
    return True, None


def _sample_product(rng: np.random.Generator, config: GenConfig) -> Inputs:
    a = _square(rng, config)
    b = random_matrix(rng, config, a.rows)
    if config.duplicate_row_mode and a.rows >= 2:
        b = duplicate_line(rng, b)
    return {"a": a, "b": b}


def check_det_mult(a: TropMatrix, b: TropMatrix) -> Outcome:
    """If A, B and AB are regular then |AB| = |A| ⊙ |B|; if A or B is singular then so is AB."""
    det_a, det_b, det_ab = det(a).value, det(b).value, det(a @ b).value
    regular_a, regular_b, regular_ab = (d.tag is Tag.REAL for d in (det_a, det_b, det_ab))
    if not (regular_a and regular_b):
        if regular_ab:
            return _fail(case="singular_factor", det_a=det_a, det_b=det_b, det_ab=det_ab)
    elif regular_ab and det_ab != det_a * det_b:
        return _fail(case="multiplicative", det_a=det_a, det_b=det_b, det_ab=det_ab)
    return True, None


def _sample_square(rng: np.random.Generator, config: GenConfig) -> Inputs:
    return {"a": _square(rng, config)}


def check_inverse_iff_regular(a: TropMatrix) -> Outcome:
    """A is regular iff A^∇ is a pseudo inverse of A."""
    regular = is_regular(a)
    if det(a).tag is Tag.NEG_INF:
        return (True, None) if not regular else _fail(regular=regular)
    inverse = pseudo_inverse(a)
    paired = check_inverse_pair(a, inverse)
    if regular != paired:
        return _fail(regular=regular, pair=paired, inverse=inverse)
    return True, None


def _sample_regular(rng: np.random.Generator, config: GenConfig) -> Inputs:
    n = random_size(rng, clamp_dims(config))
    a, source = random_regular_matrix(rng, config, n)
    return {"a": a, "source": source}


def check_products_idempotent(a: TropMatrix, source: str = "pinned") -> Outcome:
    """For a regular A both A·A^∇ and A^∇·A are idempotent pseudo units, so A is E-dense."""
    inverse = pseudo_inverse(a)
    right, left = mat_mul(a, inverse), mat_mul(inverse, a)
    flags = {"right": is_idempotent(right), "left": is_idempotent(left), "e_dense": is_e_dense(a)}
    if not all(flags.values()):
        return _fail(source=source, right_unit=right, left_unit=left, **flags)
    return True, None


def _sample_regular_min2(rng: np.random.Generator, config: GenConfig) -> Inputs:
    n = random_size(rng, clamp_dims(config, 2))
    a, source = random_regular_matrix(rng, config, n)
    return {"a": a, "source": source}


def check_det_inverse(a: TropMatrix, source: str = "pinned") -> Outcome:
    """For a regular A the adjoint is regular and |A| = 0 ⊘ |A^∇|."""
    det_a = det(a).value
    adjoint_regular = is_regular(adjoint(a))
    det_inverse = det(pseudo_inverse(a)).value
    if not adjoint_regular or det_inverse.tag is not Tag.REAL or det_a != ZERO / det_inverse:
        return _fail(source=source, det=det_a, det_inverse=det_inverse, adjoint_regular=adjoint_regular)
    return True, None


def _sample_real_regular_pair(rng: np.random.Generator, config: GenConfig) -> Inputs:
    a, source = random_regular_matrix(rng, config, 2, real_only=True)
    return {"a": a, "source": source}


def check_real_projection_law(a: TropMatrix, source: str = "pinned") -> Outcome:
    """Pseudo units fix A and A^∇ up to π*."""
    report = check_real_projection(a)
    return report.passed, report.witness


def _sample_series_pair(rng: np.random.Generator, config: GenConfig) -> Inputs:
    if rng.random() < 0.5:
        f, g = cancelling_pair(rng, config)
    else:
        f, g = random_series(rng, config), random_series(rng, config)
    return {"f": f, "g": g}


def check_val_homomorphism(f: PuiseuxPoly, g: PuiseuxPoly) -> Outcome:
    """Val is a homomorphic relation into 𝕋 through the rays P_x."""
    report = check_homomorphic_relation(f, g)
    return report.passed, report.witness


def check_fast_vs_naive(a: TropMatrix) -> Outcome:
    """The assignment-based determinant agrees with brute force, witnesses included."""
    naive, fast = det_naive(a, max_n=None), det_fast(a)
    if naive != fast:
        return _fail(naive=det_result_jsonable(naive), fast=det_result_jsonable(fast))
    return True, None


# Pinned instances

_A = _mat([[1, 1], [2, 3]])
_B = _mat([[3, 1], [0, 2]])
_SINGULAR = _mat([[1, 2], [2, 3]])
_INVERSE_EXAMPLE = _mat([[1, -1], [2, 2]])
_INVERSE_SINGULAR = _mat([[1, -1], [4, 2]])
_ADJOINT_WITNESS = _mat([[-1, -2], [-2, 1]])
_PSEUDO_PAIR_A = _mat([[0, -2, -1], [-2, 0, "-3v"], [-1, "-3v", 0]])
_PSEUDO_PAIR_B = _mat([[0, -2, -1], [-2, 0, -3], [-1, -3, 0]])

PINNED_MATRICES = (
    _A, _B, _SINGULAR, _INVERSE_EXAMPLE, _INVERSE_SINGULAR, _ADJOINT_WITNESS, _PSEUDO_PAIR_A, identity(3)
)
REGULAR_MATRICES = (
    _A, _B, _INVERSE_EXAMPLE, _ADJOINT_WITNESS, _PSEUDO_PAIR_A, _PSEUDO_PAIR_B, identity(2), identity(3)
)


def _with_orders(a: TropMatrix) -> Inputs:
    reverse = tuple(reversed(range(a.rows)))
    return {"a": a, "row_order": reverse, "col_order": reverse}


LAWS: dict[str, Law] = {
    law.law_id: law
    for law in (
        Law(
            "semiring-axioms",
            "𝕋 is a non-idempotent commutative semiring with a ⊕ a = a^ν",
            _sample_triple,
            check_semiring_axioms,
            tuple({"x": x, "y": y, "z": z} for x, y, z in product(SMALL_GRID, repeat=3)),
        ),
        Law(
            "freshman",
            "(x ⊕ y)^n = x^n ⊕ y^n",
            _sample_pair,
            check_freshman,
            tuple({"x": x, "y": y} for x, y in product(SMALL_GRID, repeat=2)),
        ),
        Law(
            "cauchy",
            "x₁ ⊙ … ⊙ x_n ⪯ x₁^n ⊕ … ⊕ x_n^n, with equality iff all ν-values agree and one operand is in R̄^ν",
            _sample_cauchy,
            check_cauchy,
            tuple({"xs": xs} for xs in product(SMALL_GRID, repeat=2))
            + tuple({"xs": xs} for xs in product((NEG_INF, real(0), nu(0), real(1)), repeat=3)),
        ),
        Law(
            "diagram",
            "ν = θ ∘ π, and π and ν are semiring homomorphisms",
            _sample_pair,
            check_diagram,
            tuple({"x": x, "y": y} for x, y in product(SMALL_GRID, repeat=2)),
        ),
        Law(
            "det-transpose",
            "Transposition and reordering of rows or columns leave |A| unchanged",
            _sample_reordering,
            check_det_transpose,
            tuple(_with_orders(a) for a in PINNED_MATRICES),
        ),
        Law(
            "det-row-linearity",
            "|A| is linear with respect to scalar multiplication of a row or a column",
            _sample_scaling,
            check_det_row_linearity,
            ({"a": _A, "index": 0, "c": real(2)}, {"a": _A, "index": 1, "c": nu(-1)}),
        ),
        Law(
            "identical-rows",
            "A matrix with two identical rows or columns is singular",
            _sample_identical_rows,
            check_identical_rows,
            ({"a": _mat([[1, -1], [1, -1]])}, {"a": _mat([[1, 1], [2, 2]])}),
        ),
        Law(
            "det-mult",
            "If A, B and AB are regular then |AB| = |A||B|; if A or B is singular then AB is singular",
            _sample_product,
            check_det_mult,
            ({"a": _A, "b": _A}, {"a": _B, "b": _B}, {"a": _A, "b": _B}, {"a": _SINGULAR, "b": _A}),
        ),
        Law(
            "inverse-iff-regular",
            "A has the pseudo inverse Adj(A)/|A| iff A is regular",
            _sample_square,
            check_inverse_iff_regular,
            tuple({"a": a} for a in PINNED_MATRICES),
        ),
        Law(
            "products-idempotent",
            "For a regular A the products A A^∇ and A^∇ A are idempotents",
            _sample_regular,
            check_products_idempotent,
            tuple({"a": a} for a in REGULAR_MATRICES),
        ),
        Law(
            "det-inverse",
            "For a regular A, |A| = (|A^∇|)^{-1}",
            _sample_regular_min2,
            check_det_inverse,
            tuple({"a": a} for a in REGULAR_MATRICES),
        ),
        Law(
            "real-projection",
            "For a regular 2x2 real A, π*(Î′A) = A, π*(A^∇Î′) = A^∇, π*(Î″A^∇) = A^∇ and π*(AÎ″) = A",
            _sample_real_regular_pair,
            check_real_projection_law,
            ({"a": _A}, {"a": _INVERSE_EXAMPLE}, {"a": _ADJOINT_WITNESS}, {"a": identity(2)}),
        ),
        Law(
            "val-homomorphism",
            "Val(f·g) ∈ P_{Val f ⊙ Val g} and Val(f+g) ∈ P_{Val f ⊕ Val g}",
            _sample_series_pair,
            check_val_homomorphism,
            (
                {"f": PuiseuxPoly.from_terms({1: 1}), "g": PuiseuxPoly.from_terms({1: -1})},
                {"f": PuiseuxPoly.from_terms({-2: 1}), "g": PuiseuxPoly.from_terms({-1: 1})},
                {"f": PuiseuxPoly.from_terms({-2: 1, 1: 3}), "g": PuiseuxPoly()},
            ),
        ),
        Law(
            "fast-vs-naive",
            "The assignment-based determinant equals the brute-force one",
            _sample_square,
            check_fast_vs_naive,
            tuple({"a": a} for a in PINNED_MATRICES),
        ),
    )
}


def list_laws() -> list[Law]:
    """Registered laws in registration order."""
    return list(LAWS.values())


def get_law(law_id: str) -> Law:
    """Look up a law.

    Raises:
        UnknownLawError: If nothing is registered under `law_id`.
    """
    try:
        return LAWS[law_id]
    except KeyError:
        raise UnknownLawError(f"Unknown law {law_id!r}; known laws: {', '.join(LAWS)}.") from None


def evaluate(law: Law, inputs: Inputs, seed: int | None = None, index: int | None = None) -> LawReport:
    """Check a law on one set of inputs and wrap the outcome in a report."""
    passed, witness = law.check(**inputs)
    return LawReport(
        law.law_id,
        to_jsonable(inputs),
        passed,
        None if witness is None else to_jsonable(witness),
        seed,
        index,
    )


def run_instance(law_id: str, config: GenConfig, index: int) -> LawReport:
    """Rebuild random instance `index` of a run and check it."""
    law = get_law(law_id)
    return evaluate(law, law.sample(instance_rng(config.seed, index), config), config.seed, index)


def iter_law(law_id: str, config: GenConfig | None = None, workers: int = 1) -> Iterator[LawReport]:
    """Yield the reports of a law run as they are produced.

    Pinned instances come first, then `config.count` random ones in generation order. With `workers > 1` the random
    instances are evaluated in a process pool and still yielded in order.

    Raises:
        UnknownLawError: If `law_id` is not registered.
    """
    config = GenConfig() if config is None else config
    law = get_law(law_id)
    for inputs in law.pinned:
        yield evaluate(law, inputs, config.seed)
    indices = range(config.count)
    if workers > 1 and config.count > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunksize = max(1, config.count // (4 * workers))
            yield from pool.map(run_instance, repeat(law_id), repeat(config), indices, chunksize=chunksize)
    else:
        for index in indices:
            yield run_instance(law_id, config, index)


def run_law(law_id: str, config: GenConfig | None = None, workers: int = 1) -> list[LawReport]:
    """Check a law on its pinned instances followed by `config.count` random ones.

    Args:
        law_id: Registered identifier.
        config: Generator settings; defaults to `GenConfig()`.
        workers: Number of processes evaluating random instances; 1 evaluates in-process.

    Returns:
        list[LawReport]: Pinned reports first, then random ones in generation order.

    Raises:
        UnknownLawError: If `law_id` is not registered.
    """
    return list(iter_law(law_id, config, workers))


def summarize(reports: Iterable[LawReport]) -> pd.DataFrame:
    """Count passes and failures per law, indexed by law id in first-seen order."""
    frame = pd.DataFrame([(r.law_id, r.verdict) for r in reports], columns=["law_id", "verdict"])
    order = list(dict.fromkeys(frame["law_id"]))
    table = (
        frame.groupby(["law_id", "verdict"]).size().unstack(fill_value=0)
        if not frame.empty
        else pd.DataFrame(index=pd.Index([], name="law_id"))
    )
    table = table.reindex(index=order, columns=["pass", "fail"], fill_value=0).astype(int)
    table.columns.name = None
    table.index.name = "law_id"
    return table
