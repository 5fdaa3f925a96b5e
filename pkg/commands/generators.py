"""Random instances for the law harness.

Every instance draws from its own `numpy` generator seeded with `(seed, index)`, so a single instance can be
rebuilt without replaying the whole stream and instances can be evaluated in any order.
"""

import dataclasses
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from commands.linalg import is_regular
from semiring.matrix import TropMatrix, replace_row, transpose
from semiring.scalar import NEG_INF, TropScalar, nu, real
from semiring.valuation import PuiseuxPoly, leading_term

MAX_SERIES_TERMS = 4
REGULAR_MAX_TRIES = 64


@dataclass(frozen=True, slots=True)
class GenConfig:
    """Knobs of the random instance generators.

    Attributes:
        seed: Non-negative base seed.
        count: Number of random instances per law.
        dims: Inclusive range of matrix sizes.
        value_range: Inclusive bounds of generated rationals.
        denominators: Denominators drawn from when building rationals.
        nu_probability: Probability of a ν-tagged scalar.
        neginf_probability: Probability of −∞.
        duplicate_row_mode: If set, generic matrix samples get a duplicated row or column.
    """

    seed: int = 0
    count: int = 200
    dims: tuple[int, int] = (2, 5)
    value_range: tuple[int, int] = (-10, 10)
    denominators: tuple[int, ...] = (1, 2)
    nu_probability: Fraction = Fraction(1, 5)
    neginf_probability: Fraction = Fraction(1, 10)
    duplicate_row_mode: bool = False

    def __post_init__(self) -> None:
        """Validate ranges and probabilities."""
        if self.seed < 0:
            raise ValueError(f"Seed must be non-negative, got {self.seed}.")
        if self.count < 0:
            raise ValueError(f"Instance count must be non-negative, got {self.count}.")
        low, high = self.dims
        if low < 1 or low > high:
            raise ValueError(f"Invalid size range {self.dims}.")
        if self.value_range[0] > self.value_range[1]:
            raise ValueError(f"Invalid value range {self.value_range}.")
        if not self.denominators or any(d < 1 for d in self.denominators):
            raise ValueError(f"Denominators must be positive, got {self.denominators}.")
        nu_p, neginf_p = Fraction(self.nu_probability), Fraction(self.neginf_probability)
        if not (0 <= nu_p <= 1 and 0 <= neginf_p <= 1) or nu_p + neginf_p > 1:
            raise ValueError("Tag probabilities must lie in [0, 1] and sum to at most 1.")
        object.__setattr__(self, "nu_probability", nu_p)
        object.__setattr__(self, "neginf_probability", neginf_p)

    def replace(self, **changes: object) -> "GenConfig":
        """Return a copy with some fields changed."""
        return dataclasses.replace(self, **changes)


def instance_rng(seed: int, index: int) -> np.random.Generator:
    """Generator dedicated to instance `index` of the run seeded with `seed`."""
    return np.random.default_rng([seed, index])


def random_rational(rng: np.random.Generator, config: GenConfig) -> Fraction:
    """Uniform rational in `value_range` with a denominator drawn from `denominators`."""
    denominator = int(rng.choice(config.denominators))
    low, high = config.value_range
    return Fraction(int(rng.integers(low * denominator, high * denominator, endpoint=True)), denominator)


def random_real(rng: np.random.Generator, config: GenConfig) -> TropScalar:
    """A real scalar."""
    return real(random_rational(rng, config))


def random_scalar(rng: np.random.Generator, config: GenConfig) -> TropScalar:
    """A scalar whose tag follows the configured probabilities."""
    u = Fraction(rng.random())
    if u < config.neginf_probability:
        return NEG_INF
    value = random_rational(rng, config)
    return nu(value) if u < config.neginf_probability + config.nu_probability else real(value)


def random_size(rng: np.random.Generator, dims: tuple[int, int]) -> int:
    """Uniform size in an inclusive range."""
    return int(rng.integers(dims[0], dims[1], endpoint=True))


def clamp_dims(config: GenConfig, low: int = 1, high: int | None = None) -> tuple[int, int]:
    """Intersect the configured sizes with `[low, high]`; a disjoint range collapses onto the nearest bound."""
    lo, hi = config.dims
    if high is not None:
        lo, hi = min(lo, high), min(hi, high)
    return max(lo, low), max(hi, low)


def random_matrix(
    rng: np.random.Generator, config: GenConfig, rows: int, cols: int | None = None, real_only: bool = False
) -> TropMatrix:
    """A matrix with independently drawn entries."""
    cols = rows if cols is None else cols
    draw = random_real if real_only else random_scalar
    return TropMatrix(tuple(tuple(draw(rng, config) for _ in range(cols)) for _ in range(rows)))


def duplicate_line(rng: np.random.Generator, matrix: TropMatrix) -> TropMatrix:
    """Copy one row of a square matrix over another, or do the same with columns."""
    n = matrix.rows
    source, target = (int(k) for k in rng.choice(n, size=2, replace=False))
    if rng.random() < 0.5:
        return replace_row(matrix, target, source)
    return transpose(replace_row(transpose(matrix), target, source))


def random_duplicate_matrix(rng: np.random.Generator, config: GenConfig, n: int) -> TropMatrix:
    """A square matrix of size `n ≥ 2` with two identical rows or columns."""
    return duplicate_line(rng, random_matrix(rng, config, n))


def random_regular_matrix(
    rng: np.random.Generator, config: GenConfig, n: int, real_only: bool = False
) -> tuple[TropMatrix, str]:
    """A regular square matrix.

    Matrices are drawn and rejected until one is regular. When that does not happen within `REGULAR_MAX_TRIES`
    draws, the last draw is made diagonally dominant: real diagonal entries larger than any off-diagonal value
    force the identity permutation to be the unique maximum.

    Returns:
        tuple: The matrix and how it was obtained, `"rejection"` or `"dominant"`.
    """
    matrix = random_matrix(rng, config, n, real_only=real_only)
    for _ in range(REGULAR_MAX_TRIES):
        if is_regular(matrix):
            return matrix, "rejection"
        matrix = random_matrix(rng, config, n, real_only=real_only)
    low, high = config.value_range
    offset = max(high, 0) + 1 - low
    dominant = tuple(
        tuple(real(offset + random_rational(rng, config)) if i == j else x for j, x in enumerate(row))
        for i, row in enumerate(matrix.entries)
    )
    return TropMatrix(dominant), "dominant"


def random_series(rng: np.random.Generator, config: GenConfig, max_terms: int = MAX_SERIES_TERMS) -> PuiseuxPoly:
    """A finite Puiseux polynomial with up to `max_terms` terms; may be zero."""
    size = int(rng.integers(0, max_terms, endpoint=True))
    terms = []
    for _ in range(size):
        coefficient = random_rational(rng, config) or Fraction(1)
        terms.append((random_rational(rng, config), coefficient))
    return PuiseuxPoly(tuple(terms))


def cancelling_pair(rng: np.random.Generator, config: GenConfig) -> tuple[PuiseuxPoly, PuiseuxPoly]:
    """Two series of equal valuation whose leading terms cancel in the sum.

    Half of the pairs cancel completely (`g = −f`); the others only share the negated leading term and carry extra
    terms of higher order.
    """
    f = random_series(rng, config)
    while f.is_zero:
        f = random_series(rng, config)
    if rng.random() < 0.5:
        return f, -f
    lead = f.terms[0][0]
    tail = [
        (lead + abs(random_rational(rng, config)) + 1, random_rational(rng, config) or Fraction(1))
        for _ in range(int(rng.integers(0, MAX_SERIES_TERMS, endpoint=True)))
    ]
    return f, -leading_term(f) + PuiseuxPoly(tuple(tail))
