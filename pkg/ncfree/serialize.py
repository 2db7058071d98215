"""JSON interchange formats.

Series:         {"s": 2, "maxdeg": 3, "coeffs": [{"word": [1, 2], "value": "3/4"}, ...]}
Partitions:     [[1, 4], [2, 3]]
Power series:   ["1", "0", "-1/2", ...]   (a_0 first)
Matrices:       {"dim": n, "basis": ["1", "Xbar[1,1]", ...], "rows": [["1", "0", ...], ...]}
Polynomials:    {"reduced": true, "text": "...", "terms": [{"monomial": [{"word": [1, 1], "exp": 2}], "value": "-1"}]}

Rationals are exact strings; integers are accepted on input.
"""

import json
import os
from typing import Any, Dict, List, Optional, Sequence

from .errors import ValidationError
from .hopf import CoordPoly, Monomial, TensorPoly
from .matrix import RationalMatrix
from .ncpart import NCPartition
from .onedim import PowerSeries1
from .rational import as_rational, format_rational
from .representation import MonomialBasis
from .series import NCSeries, validate_word


def dumps(obj: Any) -> str:
    """Compact, key-order-preserving JSON text."""
    return json.dumps(obj, separators=(",", ":"))


def load_input(value: str) -> Any:
    """Parse inline JSON, or the contents of the file named by value.

    Raises:
        ValidationError: if the file cannot be read or the text is not JSON.
    """
    text = value
    if not value.lstrip().startswith(("[", "{", '"')) and os.path.exists(value):
        try:
            with open(value, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise ValidationError(f"Cannot read {value}: {e}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"Invalid JSON input ({e.msg} at line {e.lineno} column {e.colno})") from e


def _require(obj: Any, kind: type, what: str):
    if not isinstance(obj, kind):
        raise ValidationError(f"Expected {what}, got {type(obj).__name__}")
    return obj


# -- series --------------------------------------------------------------------------------


def series_to_json(f: NCSeries) -> Dict[str, Any]:
    return {
        "s": f.s,
        "maxdeg": f.maxdeg,
        "coeffs": [{"word": list(w), "value": format_rational(v)} for w, v in f.items()],
    }


def series_from_json(obj: Any) -> NCSeries:
    """Raises ValidationError on missing fields, bad words or bad values."""
    obj = _require(obj, dict, "a series object")
    for key in ("s", "maxdeg", "coeffs"):
        if key not in obj:
            raise ValidationError(f"Series object is missing '{key}'")
    coeffs: Dict[tuple, Any] = {}
    for entry in _require(obj["coeffs"], list, "a list of coefficients"):
        entry = _require(entry, dict, "a coefficient object")
        if "word" not in entry or "value" not in entry:
            raise ValidationError("Coefficient entries need 'word' and 'value'")
        word = validate_word(_require(entry["word"], list, "a word array"))
        if word in coeffs:
            raise ValidationError(f"Word {list(word)} appears twice")
        coeffs[word] = as_rational(entry["value"])
    return NCSeries(obj["s"], obj["maxdeg"], coeffs)


# -- partitions ----------------------------------------------------------------------------


def partition_to_json(p: NCPartition) -> List[List[int]]:
    return p.to_list()


def partition_from_json(obj: Any, n: Optional[int] = None) -> NCPartition:
    blocks = _require(obj, list, "a list of blocks")
    for block in blocks:
        _require(block, list, "a block array")
    return NCPartition.from_blocks(blocks, n)


# -- one-variable series -------------------------------------------------------------------


def power_series_to_json(p: PowerSeries1) -> List[str]:
    return [format_rational(c) for c in p.coefficients]


def power_series_from_json(obj: Any) -> PowerSeries1:
    return PowerSeries1(_require(obj, list, "a coefficient array"))


# -- matrices ------------------------------------------------------------------------------


def matrix_to_json(m: RationalMatrix, basis: Optional[MonomialBasis] = None) -> Dict[str, Any]:
    out: Dict[str, Any] = {"dim": m.dim}
    if basis is not None:
        out["variant"] = basis.variant
        out["basis"] = basis.labels()
    out["rows"] = [[format_rational(x) for x in row] for row in m.rows]
    return out


def matrix_from_json(obj: Any) -> RationalMatrix:
    if isinstance(obj, dict):
        if "rows" not in obj:
            raise ValidationError("Matrix object is missing 'rows'")
        obj = obj["rows"]
    rows = _require(obj, list, "a list of rows")
    return RationalMatrix([_require(row, list, "a row array") for row in rows])


# -- polynomials ---------------------------------------------------------------------------


def _monomial_to_json(m: Monomial) -> List[Dict[str, Any]]:
    return [{"word": list(w), "exp": e} for w, e in m]


def poly_to_json(p: CoordPoly) -> Dict[str, Any]:
    return {
        "reduced": p.reduced,
        "text": p.render(),
        "terms": [{"monomial": _monomial_to_json(m), "value": format_rational(c)} for m, c in p.terms()],
    }


def tensor_to_json(t: TensorPoly) -> Dict[str, Any]:
    return {
        "reduced": t.reduced,
        "arity": t.arity,
        "count": len(t),
        "text": t.render(),
        "terms": [
            {"legs": [_monomial_to_json(m) for m in legs], "value": format_rational(c)} for legs, c in t.terms()
        ],
    }


def word_values_to_json(values: Dict[Sequence[int], Any]) -> List[Dict[str, Any]]:
    """[{"word": [...], "value": "p/q"}] in graded-lex word order."""
    ordered = sorted(values.items(), key=lambda item: (len(item[0]), tuple(item[0])))
    return [{"word": list(w), "value": format_rational(v)} for w, v in ordered]
