"""JSON wire formats.

Exact values always travel as strings (``"p/q"``) or, for Gaussian
rationals, as ``{"re": "p/q", "im": "p/q"}`` objects.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .free_algebra import NCSeries
from .rings import scalar_from_json, scalar_to_json
from .return_map import Word
from .series import GeneralSeries, MapSeries

CONVENTIONS = {
    "version": 1,
    "letter_order": "time order; first letter's map applied innermost",
    "index_pairing": "X_i1 pairs with the earliest time s1; Chen factors first segment leftmost",
    "sign_policy": "single-letter map r(1 - n b r^n)^(-1/n); coefficients positive for b > 0",
}


def word_to_json(w):
    letters = []
    for k, amp in w.letters:
        amp_json = scalar_to_json(amp)
        if not isinstance(amp_json, dict):
            amp_json = {"re": amp_json, "im": "0/1"}
        letters.append({"axis": k, "amp": amp_json})
    return {"truncation": w.truncation, "letters": letters}


def word_from_json(obj, source="<word>"):
    if not isinstance(obj, dict):
        raise ParseError("word must be a JSON object", source)
    if "letters" not in obj:
        raise ParseError("missing 'letters'", source)
    truncation = obj.get("truncation", 16)
    if isinstance(truncation, bool) or not isinstance(truncation, int) or truncation < 1:
        raise ParseError(f"truncation must be a positive integer, got {truncation!r}", f"{source}.truncation")
    if not isinstance(obj["letters"], list):
        raise ParseError("'letters' must be a list", f"{source}.letters")
    letters = []
    for idx, item in enumerate(obj["letters"]):
        loc = f"{source}.letters[{idx}]"
        if not isinstance(item, dict) or "axis" not in item or "amp" not in item:
            raise ParseError("letter needs 'axis' and 'amp'", loc)
        axis = item["axis"]
        if isinstance(axis, bool) or not isinstance(axis, int) or axis < 1:
            raise ParseError(f"axis must be an integer >= 1, got {axis!r}", f"{loc}.axis")
        letters.append((axis, scalar_from_json(item["amp"], f"{loc}.amp")))
    return Word(tuple(letters), truncation)


def parse_word_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read word file ({exc.strerror})", str(path)) from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg} at line {exc.lineno} column {exc.colno}",
                         str(path)) from None
    return word_from_json(obj, str(path))


def series_to_json(s):
    """Coefficients ordered by degree: ``c_1 .. c_N`` for maps, ``e_0 .. e_N`` otherwise."""
    return [scalar_to_json(c) for c in s.coeffs]


def map_series_from_json(items):
    return MapSeries(tuple(scalar_from_json(x) for x in items))


def general_series_from_json(items):
    return GeneralSeries(tuple(scalar_from_json(x) for x in items))


def ncseries_to_json(u):
    items = sorted(u.terms.items(), key=lambda t: (sum(t[0]), len(t[0]), t[0]))
    return [{"composition": list(c), "value": scalar_to_json(v)} for c, v in items]


def ncseries_from_json(items, degree):
    return NCSeries(degree, {tuple(it["composition"]): scalar_from_json(it["value"]) for it in items})


def verdict_to_json(v):
    return {
        "is_center": v.is_center,
        "method": v.method,
        "bound_d": v.bound_d,
        "depth": v.depth,
        "reduced_word": word_to_json(v.reduced_word),
        "coefficients_checked": [{"index": i, "value": scalar_to_json(c)} for i, c in v.coefficients_checked],
    }


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"

