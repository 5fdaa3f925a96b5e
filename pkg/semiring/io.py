import json
from pathlib import Path
from typing import Any

from .errors import ParseError
from .matrix import DetResult, TropMatrix
from .poly import TropPoly
from .scalar import Tag, format_scalar, parse_scalar
from .valuation import PuiseuxPoly


def read_json(json_path: Path) -> Any:
    """Read a JSON document from disk.

    Args:
        json_path: File path to read.

    Returns:
        The decoded JSON value.

    Raises:
        ParseError: If the file is not valid JSON.
    """
    with open(json_path) as file:
        try:
            return json.load(file)
        except json.JSONDecodeError as e:
            raise ParseError(f"{json_path}: {e}") from e


def _literal(value: Any) -> str:
    if not isinstance(value, str | int) or isinstance(value, bool):
        raise ParseError(f"Expected a scalar literal string, got {value!r}.")
    return str(value)


def matrix_from_json(data: Any) -> TropMatrix:
    """Decode `{"rows": [["1", "-1"], ["2", "2v"]]}` into a `TropMatrix`.

    Raises:
        ParseError: If the document is malformed or a literal is invalid.
    """
    if not isinstance(data, dict) or not isinstance(data.get("rows"), list):
        raise ParseError('A matrix document needs a "rows" list.')
    rows = data["rows"]
    if not all(isinstance(row, list) for row in rows):
        raise ParseError("Every matrix row must be a list.")
    return TropMatrix.from_rows([[parse_scalar(_literal(x)) for x in row] for row in rows])


def matrix_to_json(matrix: TropMatrix) -> dict[str, Any]:
    """Encode a matrix with canonical scalar literals."""
    return {"rows": [[format_scalar(x) for x in row] for row in matrix.entries]}


def load_matrix(json_path: Path) -> TropMatrix:
    """Parse a matrix JSON file."""
    return matrix_from_json(read_json(json_path))


def det_result_to_json(result: DetResult) -> dict[str, Any]:
    """Encode a determinant; an optimal count of two or more is rendered as `">=2"`."""
    return {
        "value": format_scalar(result.value),
        "tag": str(result.value.tag),
        "optimal_count": ">=2" if result.optimal_count >= 2 else result.optimal_count,
        "uses_nu_entry": result.uses_nu_entry,
    }


def _exponent(value: Any) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ParseError(f"Expected a non-negative integer exponent, got {value!r}.")
    return value


def poly_from_json(data: Any) -> TropPoly:
    """Decode `{"vars": 2, "monomials": [{"exp": [1, 0], "coef": "0"}, ...]}`.

    Raises:
        ParseError: If the document is malformed.
    """
    if (
        not isinstance(data, dict)
        or not isinstance(data.get("vars"), int)
        or isinstance(data["vars"], bool)
        or not isinstance(data.get("monomials"), list)
    ):
        raise ParseError('A polynomial document needs an integer "vars" and a "monomials" list.')
    terms = []
    for entry in data["monomials"]:
        if not isinstance(entry, dict) or not isinstance(entry.get("exp"), list) or "coef" not in entry:
            raise ParseError(f"Invalid monomial entry: {entry!r}")
        terms.append((tuple(_exponent(e) for e in entry["exp"]), parse_scalar(_literal(entry["coef"]))))
    return TropPoly(data["vars"], tuple(terms))


def poly_to_json(poly: TropPoly) -> dict[str, Any]:
    """Encode a polynomial."""
    return {
        "vars": poly.num_vars,
        "monomials": [{"exp": list(e), "coef": format_scalar(c)} for e, c in poly.monomials],
    }


def load_poly(json_path: Path) -> TropPoly:
    """Parse a polynomial JSON file."""
    return poly_from_json(read_json(json_path))


def series_from_json(data: Any) -> PuiseuxPoly:
    """Decode `{"terms": [{"exp": "-2", "coef": "1"}, ...]}`; exponents and coefficients are plain rationals.

    Raises:
        ParseError: If the document is malformed.
    """
    if not isinstance(data, dict) or not isinstance(data.get("terms"), list):
        raise ParseError('A series document needs a "terms" list.')
    terms = []
    for entry in data["terms"]:
        if not isinstance(entry, dict) or "exp" not in entry or "coef" not in entry:
            raise ParseError(f"Invalid series term: {entry!r}")
        exponent, coefficient = parse_scalar(_literal(entry["exp"])), parse_scalar(_literal(entry["coef"]))
        if exponent.tag is not Tag.REAL or coefficient.tag is not Tag.REAL:
            raise ParseError(f"Series exponents and coefficients must be plain rationals: {entry!r}")
        terms.append((exponent.value, coefficient.value))
    return PuiseuxPoly(tuple(terms))


def series_to_json(series: PuiseuxPoly) -> dict[str, Any]:
    """Encode a series."""
    return {"terms": [{"exp": str(e), "coef": str(c)} for e, c in series.terms]}


def load_series(json_path: Path) -> PuiseuxPoly:
    """Parse a series JSON file."""
    return series_from_json(read_json(json_path))
