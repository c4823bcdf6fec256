"""The "hopfkit/1" JSON interchange format.

Two document kinds share one schema file (``data/hopfkit-1.schema.json``):

* algebra documents carry a Hopf algebra by sparse structure constants;
* matrix documents carry one exact matrix (used by ``normal-form``).

Coefficients are exact strings in the canonical ``format_coeff`` spelling, so
``dumps(loads(text)) == text`` for any text that ``dumps`` produced.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import flint
import jsonschema

from .coalgebra import CoalgebraSC
from .errors import ParseError
from .exact_linalg.cyclotomic import CycNumber, format_coeff, parse_coeff
from .exact_linalg.matrix import ExactMatrix
from .hopf import HopfAlgebraSC, new_hopf

FORMAT_VERSION = "hopfkit/1"


@lru_cache(maxsize=1)
def schema() -> dict:
    text = resources.files("hopfkit").joinpath("data/hopfkit-1.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


@lru_cache(maxsize=None)
def _validator(part: str):
    root = dict(schema())
    root.pop("oneOf")
    root["$ref"] = f"#/$defs/{part}"
    return jsonschema.validators.validator_for(root)(root)


def _part(doc) -> str:
    if not isinstance(doc, dict) or "kind" not in doc:
        return "algebra"
    return "matrix" if doc["kind"] == "matrix" else "report"


def validate(doc) -> None:
    """Raise ParseError unless `doc` matches the shipped schema.

    The document kind picks the branch first so errors name the real problem
    instead of "not valid under any of the given schemas".
    """
    err = jsonschema.exceptions.best_match(_validator(_part(doc)).iter_errors(doc))
    if err is not None:
        where = "/".join(str(p) for p in err.absolute_path) or "<root>"
        msg = err.message if len(err.message) < 200 else err.message[:200] + "..."
        raise ParseError(f"schema violation at {where}: {msg}")


# ---------------------------------------------------------------- writing

def _c(raw: flint.fmpq_poly, m: int) -> str:
    return format_coeff(CycNumber._raw(m, raw))


def _quads(tensor: dict, m: int) -> list:
    return [[i, j, k, _c(v, m)] for (i, j, k), v in sorted(tensor.items()) if not v.is_zero()]


def algebra_document(H: HopfAlgebraSC) -> dict:
    m, n = H.m, H.dim
    Sraw = H.S.nonzero_raw()
    zero = flint.fmpq_poly()
    rows = [[_c(Sraw.get((r, c), zero), m) for c in range(n)] for r in range(n)]
    return {
        "format_version": FORMAT_VERSION,
        "field": {"cyclotomic_order": m},
        "dim": n,
        "labels": list(H.labels),
        "delta": _quads(H.delta, m),
        "mu": _quads(H.mu, m),
        "eps": [_c(x, m) for x in H.eps],
        "unit": [_c(x, m) for x in H.unit],
        "antipode": rows,
    }


def matrix_document(M: ExactMatrix) -> dict:
    ent = M.nonzero_raw()
    return {
        "format_version": FORMAT_VERSION,
        "kind": "matrix",
        "field": {"cyclotomic_order": M.m},
        "rows": M.rows,
        "cols": M.cols,
        "entries": [[r, c, _c(v, M.m)] for (r, c), v in sorted(ent.items())],
    }


def _atom(x) -> str:
    return json.dumps(x, ensure_ascii=False)


def render(doc: dict) -> str:
    """Deterministic layout: one top-level key per line, one list row per line.

    Plain ``json.dumps(indent=...)`` would put every quad component on its own
    line, which makes 27-dim documents needlessly long.
    """
    out = ["{"]
    keys = list(doc)
    for pos, key in enumerate(keys):
        val = doc[key]
        tail = "," if pos < len(keys) - 1 else ""
        if isinstance(val, list) and val and isinstance(val[0], list):
            body = ",\n".join(f"    {_atom(row)}" for row in val)
            out.append(f"  {_atom(key)}: [\n{body}\n  ]{tail}")
        else:
            out.append(f"  {_atom(key)}: {_atom(val)}{tail}")
    out.append("}")
    return "\n".join(out) + "\n"


def dumps(obj) -> str:
    if isinstance(obj, HopfAlgebraSC):
        return render(algebra_document(obj))
    if isinstance(obj, ExactMatrix):
        return render(matrix_document(obj))
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# ---------------------------------------------------------------- reading

@dataclass
class AlgebraData:
    """A parsed but not yet axiom-checked algebra document."""
    m: int
    dim: int
    labels: list
    delta: dict
    mu: dict
    eps: list
    unit: list
    S: ExactMatrix

    def unchecked(self) -> HopfAlgebraSC:
        """Wrap without validation; only for per-axiom reporting."""
        C = CoalgebraSC(self.dim, self.m, self.delta, self.eps, self.labels)
        return HopfAlgebraSC(C, self.mu, self.unit, self.S)

    def build(self) -> HopfAlgebraSC:
        return new_hopf(self.mu, self.unit, self.delta, self.eps, self.S, self.labels, self.m)


def _json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None


def _coeff(text: str, m: int, where: str) -> flint.fmpq_poly:
    try:
        return parse_coeff(text, m).raw
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}") from None


def _tensor(quads: list, n: int, m: int, name: str) -> dict:
    out = {}
    for pos, (i, j, k, c) in enumerate(quads):
        if not all(0 <= x < n for x in (i, j, k)):
            raise ParseError(f"{name}[{pos}]: index out of range for dim {n}")
        if (i, j, k) in out:
            raise ParseError(f"{name}[{pos}]: duplicate entry ({i}, {j}, {k})")
        v = _coeff(c, m, f"{name}[{pos}]")
        if not v.is_zero():
            out[(i, j, k)] = v
    return out


def parse_algebra(text: str) -> AlgebraData:
    doc = _json(text)
    validate(doc)
    if "kind" in doc:
        raise ParseError("expected an algebra document")
    m, n = doc["field"]["cyclotomic_order"], doc["dim"]
    for name in ("labels", "eps", "unit", "antipode"):
        if len(doc[name]) != n:
            raise ParseError(f"{name} has length {len(doc[name])}, expected {n}")
    ent = {}
    for r, row in enumerate(doc["antipode"]):
        if len(row) != n:
            raise ParseError(f"antipode row {r} has length {len(row)}, expected {n}")
        for c, x in enumerate(row):
            v = _coeff(x, m, f"antipode[{r}][{c}]")
            if not v.is_zero():
                ent[(r, c)] = v
    return AlgebraData(
        m, n, list(doc["labels"]),
        _tensor(doc["delta"], n, m, "delta"), _tensor(doc["mu"], n, m, "mu"),
        [_coeff(x, m, f"eps[{i}]") for i, x in enumerate(doc["eps"])],
        [_coeff(x, m, f"unit[{i}]") for i, x in enumerate(doc["unit"])],
        ExactMatrix.from_raw_dict(n, n, ent, m),
    )


def loads(text: str) -> HopfAlgebraSC:
    """Parse and validate every Hopf axiom."""
    return parse_algebra(text).build()


def parse_matrix(text: str) -> ExactMatrix:
    doc = _json(text)
    validate(doc)
    if doc.get("kind") != "matrix":
        raise ParseError("expected a matrix document")
    m, R, C = doc["field"]["cyclotomic_order"], doc["rows"], doc["cols"]
    ent = {}
    for pos, (r, c, x) in enumerate(doc["entries"]):
        if not (0 <= r < R and 0 <= c < C):
            raise ParseError(f"entries[{pos}]: index out of range")
        if (r, c) in ent:
            raise ParseError(f"entries[{pos}]: duplicate entry ({r}, {c})")
        ent[(r, c)] = _coeff(x, m, f"entries[{pos}]")
    return ExactMatrix.from_raw_dict(R, C, {k: v for k, v in ent.items() if not v.is_zero()}, m)
