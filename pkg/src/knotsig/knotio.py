"""Reading knot fixture files and serializing exact values.

Knot input files are JSON objects {"name": str, "seifert": [[int,...],...]}
(row major); unknown keys are ignored. Machine-readable rationals are
always "num/den" strings (or a bare integer string), never decimal floats.
"""

import json
from fractions import Fraction

from .seifert import SeifertMatrix, validate_seifert


def read_knot(path) -> SeifertMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if "seifert" not in data:
        raise KeyError("knot file must contain a 'seifert' matrix")
    return validate_seifert(data["seifert"], name=data.get("name"))


def knot_json_dict(a: SeifertMatrix):
    return {"name": a.name or "", "seifert": [list(r) for r in a.entries]}


def frac_str(x) -> str:
    return str(Fraction(x))


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"
