"""Dense matrices over 𝕋 and the tropical determinant.

The tropical determinant is a permanent: `|A| = ⊕_σ a_{1σ(1)} ⊙ … ⊙ a_{nσ(n)}`. It is ν-tagged when the maximal
ν-value is attained by two permutations or the maximizing permutation passes through a ν entry.
"""

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Literal

from .assignment import solve_assignment
from .errors import IndexOutOfRangeError, NotSquareError, ShapeMismatchError, SizeLimitError, TooSmallError
from .scalar import NEG_INF, ZERO, Rational, Tag, TropScalar, as_scalar, is_real, mul, nu_project, pi_project, tsum

DEFAULT_NAIVE_MAX_N = 10
AUTO_NAIVE_MAX_N = 6

DetMethod = Literal["auto", "naive", "fast"]


@dataclass(frozen=True, slots=True)
class TropMatrix:
    """Immutable rows × cols grid of `TropScalar` entries, stored row-major."""

    entries: tuple[tuple[TropScalar, ...], ...]

    def __post_init__(self) -> None:
        """Freeze nested sequences into tuples and check the grid is rectangular and non-empty."""
        entries = tuple(tuple(row) for row in self.entries)
        if not entries or not entries[0]:
            raise ShapeMismatchError("A matrix needs at least one row and one column.")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise ShapeMismatchError("All rows of a matrix must have the same length.")
        if not all(isinstance(x, TropScalar) for row in entries for x in row):
            raise TypeError("Matrix entries must be TropScalar values.")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable["TropScalar | str | Rational"]]) -> "TropMatrix":
        """Build a matrix from rows of scalars, scalar literals or rationals."""
        return cls(tuple(tuple(as_scalar(x) for x in row) for row in rows))

    @property
    def rows(self) -> int:
        """Number of rows."""
        return len(self.entries)

    @property
    def cols(self) -> int:
        """Number of columns."""
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        """The pair (rows, cols)."""
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        """Whether rows == cols."""
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> TropScalar:
        i, j = index
        return self.entries[i][j]

    def __add__(self, other: "TropMatrix") -> "TropMatrix":
        return mat_add(self, other)

    def __matmul__(self, other: "TropMatrix") -> "TropMatrix":
        return mat_mul(self, other)

    def __rmul__(self, c: TropScalar) -> "TropMatrix":
        return scalar_mul(c, self)

    def __str__(self) -> str:
        cells = [[str(x) for x in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)


@dataclass(frozen=True, slots=True)
class DetResult:
    """Tropical determinant together with the witnesses that decide its tag.

    Attributes:
        value: The determinant |A|.
        optimal_count: 0 when |A| = −∞, otherwise 1 for a unique maximizing permutation and 2 for two or more.
        uses_nu_entry: Whether some maximizing permutation passes through a ν entry.
    """

    value: TropScalar
    optimal_count: int
    uses_nu_entry: bool

    @property
    def tag(self) -> Tag:
        """Tag of the determinant value."""
        return self.value.tag


def _require_square(a: TropMatrix) -> int:
    if not a.is_square:
        raise NotSquareError(f"Expected a square matrix, got shape {a.rows}x{a.cols}.")
    return a.rows


def identity(n: int) -> TropMatrix:
    """The unit matrix I: 0 on the diagonal, −∞ elsewhere."""
    if n < 1:
        raise ShapeMismatchError(f"Matrix size must be positive, got {n}.")
    return TropMatrix(tuple(tuple(ZERO if i == j else NEG_INF for j in range(n)) for i in range(n)))


def zero_matrix(rows: int, cols: int | None = None) -> TropMatrix:
    """The zero matrix Z with every entry −∞."""
    cols = rows if cols is None else cols
    if rows < 1 or cols < 1:
        raise ShapeMismatchError(f"Matrix shape must be positive, got {rows}x{cols}.")
    return TropMatrix(tuple(tuple(NEG_INF for _ in range(cols)) for _ in range(rows)))


def mat_add(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    """Entrywise ⊕ of two matrices of the same shape."""
    if a.shape != b.shape:
        raise ShapeMismatchError(f"Cannot add matrices of shapes {a.shape} and {b.shape}.")
    return TropMatrix(
        tuple(tuple(x + y for x, y in zip(ra, rb, strict=True)) for ra, rb in zip(a.entries, b.entries, strict=True))
    )


def mat_mul(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    """Matrix product `(AB)_{ij} = ⊕_k a_{ik} ⊙ b_{kj}`."""
    if a.cols != b.rows:
        raise ShapeMismatchError(f"Cannot multiply matrices of shapes {a.shape} and {b.shape}.")
    b_cols = list(zip(*b.entries, strict=True))
    return TropMatrix(
        tuple(
            tuple(tsum(mul(x, y) for x, y in zip(row, col, strict=True)) for col in b_cols) for row in a.entries
        )
    )


def mat_pow(a: TropMatrix, k: int) -> TropMatrix:
    """Return the k-th power of a square matrix; `A^0 = I`."""
    n = _require_square(a)
    if k < 0:
        raise ValueError(f"Matrix exponent must be non-negative, got {k}.")
    result = identity(n)
    for _ in range(k):
        result = mat_mul(result, a)
    return result


def scalar_mul(c: TropScalar, a: TropMatrix) -> TropMatrix:
    """Multiply every entry of `a` by `c`."""
    return TropMatrix(tuple(tuple(mul(c, x) for x in row) for row in a.entries))


def transpose(a: TropMatrix) -> TropMatrix:
    """Return `(a_{ji})`."""
    return TropMatrix(tuple(zip(*a.entries, strict=True)))


def pi_star(a: TropMatrix) -> TropMatrix:
    """Entrywise π: the image of `a` in the max-plus matrix semiring."""
    return TropMatrix(tuple(tuple(pi_project(x) for x in row) for row in a.entries))


def nu_star(a: TropMatrix) -> TropMatrix:
    """Entrywise ν projection."""
    return TropMatrix(tuple(tuple(nu_project(x) for x in row) for row in a.entries))


def is_all_real(a: TropMatrix) -> bool:
    """Return whether every entry of `a` is a real."""
    return all(is_real(x) for row in a.entries for x in row)


def minor(a: TropMatrix, i: int, j: int) -> TropMatrix:
    """Delete row `i` and column `j` (0-based) of a square matrix.

    Raises:
        NotSquareError: If `a` is not square.
        TooSmallError: If `a` is 1x1.
        IndexOutOfRangeError: If `i` or `j` is outside the matrix.
    """
    n = _require_square(a)
    if n < 2:
        raise TooSmallError("Minors need a matrix of size at least 2.")
    if not (0 <= i < n and 0 <= j < n):
        raise IndexOutOfRangeError(f"Index ({i}, {j}) out of range for a {n}x{n} matrix.")
    return TropMatrix(
        tuple(tuple(x for c, x in enumerate(row) if c != j) for r, row in enumerate(a.entries) if r != i)
    )


def permute_rows(a: TropMatrix, order: Sequence[int]) -> TropMatrix:
    """Return the matrix whose row `r` is row `order[r]` of `a`."""
    if sorted(order) != list(range(a.rows)):
        raise ValueError(f"{list(order)} is not a permutation of the rows.")
    return TropMatrix(tuple(a.entries[r] for r in order))


def permute_cols(a: TropMatrix, order: Sequence[int]) -> TropMatrix:
    """Return the matrix whose column `c` is column `order[c]` of `a`."""
    return transpose(permute_rows(transpose(a), order))


def scale_row(a: TropMatrix, i: int, c: TropScalar) -> TropMatrix:
    """Multiply row `i` of `a` by `c`."""
    if not 0 <= i < a.rows:
        raise IndexOutOfRangeError(f"Row {i} out of range for {a.rows} rows.")
    return TropMatrix(tuple(tuple(mul(c, x) for x in row) if r == i else row for r, row in enumerate(a.entries)))


def scale_col(a: TropMatrix, j: int, c: TropScalar) -> TropMatrix:
    """Multiply column `j` of `a` by `c`."""
    return transpose(scale_row(transpose(a), j, c))


def replace_row(a: TropMatrix, target: int, source: int) -> TropMatrix:
    """Overwrite row `target` with a copy of row `source`."""
    if not (0 <= target < a.rows and 0 <= source < a.rows):
        raise IndexOutOfRangeError(f"Rows ({target}, {source}) out of range for {a.rows} rows.")
    return TropMatrix(tuple(a.entries[source] if r == target else row for r, row in enumerate(a.entries)))


def _integer_grid(a: TropMatrix) -> tuple[int, list[list[tuple[int, bool] | None]]]:
    """Scale every finite entry by a common denominator.

    Returns:
        tuple: The common denominator and, per entry, `None` for −∞ or the pair (scaled integer, is ν).
    """
    finite = [x.value for row in a.entries for x in row if x.tag is not Tag.NEG_INF]
    denominator = math.lcm(*(v.denominator for v in finite)) if finite else 1
    grid = [
        [None if x.tag is Tag.NEG_INF else (int(x.value * denominator), x.tag is Tag.NU) for x in row]
        for row in a.entries
    ]
    return denominator, grid


def _det_result(best: int | None, denominator: int, count: int, uses_nu: bool) -> DetResult:
    if best is None:
        return DetResult(NEG_INF, 0, False)
    count = min(count, 2)
    tag = Tag.NU if count >= 2 or uses_nu else Tag.REAL
    return DetResult(TropScalar(tag, Fraction(best, denominator)), count, uses_nu)


def det_naive(a: TropMatrix, max_n: int | None = DEFAULT_NAIVE_MAX_N) -> DetResult:
    """Tropical determinant by enumerating all n! permutations.

    Args:
        a: Square matrix.
        max_n: Largest size accepted; `None` lifts the cap.

    Returns:
        DetResult: The determinant and its witnesses.

    Raises:
        NotSquareError: If `a` is not square.
        SizeLimitError: If `a` is larger than `max_n`.
    """
    n = _require_square(a)
    if max_n is not None and n > max_n:
        raise SizeLimitError(f"Brute-force determinant is capped at n = {max_n}, got n = {n}.")
    denominator, grid = _integer_grid(a)

    best: int | None = None
    count = 0
    uses_nu = False
    for perm in permutations(range(n)):
        total = 0
        ghost = False
        for i, j in enumerate(perm):
            cell = grid[i][j]
            if cell is None:
                break
            total += cell[0]
            ghost = ghost or cell[1]
        else:
            if best is None or total > best:
                best, count, uses_nu = total, 1, ghost
            elif total == best:
                count += 1
                uses_nu = uses_nu or ghost
    return _det_result(best, denominator, count, uses_nu)


def det_fast(a: TropMatrix) -> DetResult:
    """Tropical determinant through maximum-weight perfect assignment.

    Each finite entry weighs `(n + 1) · value + [entry is ν]`, so one solve yields both the maximal ν-value and
    the largest number of ν entries among maximizing permutations. Uniqueness of the maximizing permutation is
    certified by re-solving with each of its edges forbidden in turn.

    Raises:
        NotSquareError: If `a` is not square.
    """
    n = _require_square(a)
    denominator, grid = _integer_grid(a)
    scale = n + 1
    weights = [[None if cell is None else scale * cell[0] + int(cell[1]) for cell in row] for row in grid]

    solved = solve_assignment(weights)
    if solved is None:
        return _det_result(None, denominator, 0, False)
    total, columns = solved
    best, nu_entries = divmod(total, scale)

    count = 1
    for i, j in enumerate(columns):
        excluded = [list(row) for row in weights]
        excluded[i][j] = None
        other = solve_assignment(excluded)
        if other is not None and other[0] // scale == best:
            count = 2
            break
    return _det_result(best, denominator, count, nu_entries > 0)


def det(a: TropMatrix, method: DetMethod = "auto", max_n: int | None = DEFAULT_NAIVE_MAX_N) -> DetResult:
    """Tropical determinant, brute force for small matrices and assignment-based otherwise."""
    if method == "naive" or (method == "auto" and _require_square(a) <= AUTO_NAIVE_MAX_N):
        return det_naive(a, max_n=max_n)
    return det_fast(a)
