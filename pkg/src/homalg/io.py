"""The ``.homalg`` text format: one JSON object per file, rationals as strings.

A document looks like::

    {
      "format": "homalg",
      "version": 1,
      "kind": "binary",
      "name": "sl2",
      "dim": 3,
      "basis": ["h", "e", "f"],
      "twist": [
        ["1", "0", "0"],
        ...
      ],
      "product": [
        {"at": [0, 1], "value": {"e": "2"}},
        ...
      ],
      "meta": {...}
    }

``kind`` is ``binary`` (twist, product), ``ternary`` (twists, product with
three-index keys), ``bol`` (twist, bracket, triple) or ``map`` (matrix).
Omitted products are zero; a slot listed twice is an error rather than
summed.  :func:`dumps` writes the canonical form: sorted slots, lowest-term
rationals, fixed key order, one entry per line.
"""
from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from homalg.core import HomAlgebra, HomBolAlgebra, LinearMap, TernaryHomAlgebra
from homalg.tensor import QTensor, format_rational, parse_rational

FORMAT = "homalg"
VERSION = 1
SUFFIX = ".homalg"

KINDS = ("binary", "ternary", "bol", "map")
_FIELDS = {
    "binary": (("twist", "matrix"), ("product", 2)),
    "ternary": (("twists", "pair"), ("product", 3)),
    "bol": (("twist", "matrix"), ("bracket", 2), ("triple", 3)),
    "map": (("matrix", "matrix"),),
}
_HEADER = ("format", "version", "kind", "name", "dim", "basis")


class ParseError(ValueError):
    """Any problem reading a document."""


class DocumentSyntaxError(ParseError):
    def __init__(self, msg: str, line: int, column: int):
        self.line, self.column = line, column
        super().__init__(f"line {line}, column {column}: {msg}")


class RangeError(ParseError):
    pass


class DuplicateEntryError(ParseError):
    pass


class SchemaError(ParseError):
    pass


@dataclass(frozen=True)
class AlgebraDocument:
    kind: str
    name: str | None
    value: HomAlgebra | TernaryHomAlgebra | HomBolAlgebra | LinearMap
    meta: Mapping = field(default_factory=dict, compare=False)

    @property
    def dim(self) -> int:
        return self.value.dim

    @property
    def basis(self) -> tuple[str, ...] | None:
        return getattr(self.value, "basis", None)


def kind_of(value) -> str:
    if isinstance(value, HomAlgebra):
        return "binary"
    if isinstance(value, TernaryHomAlgebra):
        return "ternary"
    if isinstance(value, HomBolAlgebra):
        return "bol"
    if isinstance(value, LinearMap):
        return "map"
    raise TypeError(f"cannot serialize {type(value).__name__}")


# ---------------------------------------------------------------------------
# parsing


def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise DuplicateEntryError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _rational(text, where: str) -> Fraction:
    if not isinstance(text, str):
        raise SchemaError(f"{where}: rationals must be strings like \"3\" or \"-1/2\", got {text!r}")
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from None


def _matrix(rows, dim: int, where: str) -> LinearMap:
    if not isinstance(rows, list) or len(rows) != dim or any(not isinstance(r, list) or len(r) != dim for r in rows):
        raise SchemaError(f"{where}: expected a {dim} x {dim} matrix")
    return LinearMap(QTensor.from_values([[_rational(v, where) for v in r] for r in rows]))


def _index(i, dim: int, where: str) -> int:
    if not isinstance(i, int) or isinstance(i, bool):
        raise SchemaError(f"{where}: indices must be integers, got {i!r}")
    if not 0 <= i < dim:
        raise RangeError(f"{where}: index {i} out of range 0..{dim - 1}")
    return i


def _tensor(entries, arity: int, basis: tuple[str, ...], where: str) -> QTensor:
    dim = len(basis)
    label = {b: k for k, b in enumerate(basis)}
    if not isinstance(entries, list):
        raise SchemaError(f"{where}: expected a list of entries")
    values: dict[tuple[int, ...], Fraction] = {}
    seen = set()
    for n, e in enumerate(entries):
        at = f"{where}[{n}]"
        if not isinstance(e, dict) or set(e) != {"at", "value"}:
            raise SchemaError(f"{at}: entries need exactly the keys 'at' and 'value'")
        idx = e["at"]
        if not isinstance(idx, list) or len(idx) != arity:
            raise SchemaError(f"{at}: 'at' must list {arity} basis indices")
        idx = tuple(_index(i, dim, at) for i in idx)
        if idx in seen:
            raise DuplicateEntryError(f"{at}: slot {list(idx)} listed twice")
        seen.add(idx)
        if not isinstance(e["value"], dict):
            raise SchemaError(f"{at}: 'value' must map basis labels to rationals")
        for lab, coeff in e["value"].items():
            if lab not in label:
                raise RangeError(f"{at}: unknown basis label {lab!r}")
            values[idx + (label[lab],)] = _rational(coeff, at)
    return QTensor.from_entries((dim,) * (arity + 1), values)


def parse(text: str) -> AlgebraDocument:
    try:
        raw = json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(raw, dict):
        raise SchemaError("a document is a single JSON object")
    if raw.get("format") != FORMAT:
        raise SchemaError(f"'format' must be {FORMAT!r}")
    if raw.get("version") != VERSION:
        raise SchemaError(f"unsupported version {raw.get('version')!r}")
    kind = raw.get("kind")
    if kind not in KINDS:
        raise SchemaError(f"'kind' must be one of {KINDS}, got {kind!r}")
    fields = _FIELDS[kind]
    allowed = set(_HEADER) | {f for f, _ in fields} | {"meta"}
    unknown = sorted(set(raw) - allowed)
    if unknown:
        raise SchemaError(f"unknown keys for kind {kind!r}: {unknown}")
    missing = [k for k in ("dim",) + tuple(f for f, _ in fields) if k not in raw]
    if missing:
        raise SchemaError(f"missing keys: {missing}")

    dim = raw["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise SchemaError(f"'dim' must be a positive integer, got {dim!r}")
    name = raw.get("name")
    if name is not None and not isinstance(name, str):
        raise SchemaError("'name' must be a string")
    meta = raw.get("meta", {})
    if not isinstance(meta, dict):
        raise SchemaError("'meta' must be an object")

    if kind == "map":
        return AlgebraDocument(kind, name, _matrix(raw["matrix"], dim, "matrix"), meta)

    basis = raw.get("basis", [f"e{i + 1}" for i in range(dim)])
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise SchemaError("'basis' must be a list of strings")
    if len(basis) != dim:
        raise RangeError(f"{len(basis)} basis labels for dimension {dim}")
    if len(set(basis)) != dim:
        raise DuplicateEntryError(f"basis labels are not unique: {basis}")
    basis = tuple(basis)

    provenance = dict(meta.get("provenance", {}))
    if name is not None:
        provenance["name"] = name
    if kind == "binary":
        value = HomAlgebra(
            _tensor(raw["product"], 2, basis, "product"), _matrix(raw["twist"], dim, "twist"), basis, provenance
        )
    elif kind == "ternary":
        pair = raw["twists"]
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError("'twists' must hold two matrices")
        twists = (_matrix(pair[0], dim, "twists[0]"), _matrix(pair[1], dim, "twists[1]"))
        value = TernaryHomAlgebra(_tensor(raw["product"], 3, basis, "product"), twists, basis, provenance)
    else:
        value = HomBolAlgebra(
            _tensor(raw["bracket"], 2, basis, "bracket"),
            _tensor(raw["triple"], 3, basis, "triple"),
            _matrix(raw["twist"], dim, "twist"),
            basis,
            provenance,
        )
    return AlgebraDocument(kind, name, value, meta)


def loads(text: str):
    return parse(text).value


def load_document(path) -> AlgebraDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not UTF-8 ({exc.reason})") from None
    return parse(text)


def load(path):
    return load_document(path).value


# ---------------------------------------------------------------------------
# canonical output


def _q(x: Fraction) -> str:
    return format_rational(x)


def _compact(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))


def _matrix_lines(m: LinearMap, indent: str) -> list[str]:
    rows = [_compact([_q(v) for v in row]) for row in m.rows()]
    return ["[", *(f"{indent}  {r}{',' if i < len(rows) - 1 else ''}" for i, r in enumerate(rows)), f"{indent}]"]


def _entries(t: QTensor, basis: tuple[str, ...]) -> list[dict]:
    grouped: dict[tuple[int, ...], dict[str, str]] = {}
    for idx, v in t.nonzero():  # lexicographic, so output labels follow basis order
        grouped.setdefault(idx[:-1], {})[basis[idx[-1]]] = _q(v)
    return [{"at": list(k), "value": v} for k, v in grouped.items()]


def _list_block(items: list[str], indent: str) -> str:
    if not items:
        return "[]"
    body = ",\n".join(f"{indent}  {s}" for s in items)
    return f"[\n{body}\n{indent}]"


def _field_block(name: str, value: str, indent: str = "  ") -> str:
    return f"{indent}{json.dumps(name)}: {value}"


def _meta_block(meta: Mapping) -> str:
    if not meta:
        return "{}"
    parts = []
    for key in sorted(meta):
        v = meta[key]
        if isinstance(v, list):
            block = _list_block([_compact(_sorted_keys(x)) for x in v], "    ")
        else:
            block = _compact(_sorted_keys(v))
        parts.append(f"    {json.dumps(key)}: {block}")
    return "{\n" + ",\n".join(parts) + "\n  }"


def _sorted_keys(obj):
    if isinstance(obj, Mapping):
        return {k: _sorted_keys(obj[k]) for k in sorted(obj)}
    if isinstance(obj, (list, tuple)):
        return [_sorted_keys(x) for x in obj]
    return obj


def dumps(value, name: str | None = None, meta: Mapping | None = None) -> str:
    """Canonical text of a core value.

    ``name`` and ``meta`` default to what the value's provenance records
    (``name`` plus everything else under ``meta.provenance``).
    """
    kind = kind_of(value)
    prov = dict(getattr(value, "provenance", None) or {})
    if name is None:
        name = prov.get("name")
    prov.pop("name", None)
    if meta is None:
        meta = {"provenance": prov} if prov else {}
    dim = value.dim
    lines = [
        _field_block("format", json.dumps(FORMAT)),
        _field_block("version", str(VERSION)),
        _field_block("kind", json.dumps(kind)),
    ]
    if name is not None:
        lines.append(_field_block("name", json.dumps(name, ensure_ascii=False)))
    lines.append(_field_block("dim", str(dim)))
    if kind == "map":
        lines.append(_field_block("matrix", "\n".join(_matrix_lines(value, "  "))))
    else:
        basis = value.basis
        lines.append(_field_block("basis", _compact(list(basis))))
        if kind == "ternary":
            pair = ["\n".join(_matrix_lines(t, "    ")) for t in value.twists]
            lines.append(_field_block("twists", "[\n    " + ",\n    ".join(pair) + "\n  ]"))
        else:
            lines.append(_field_block("twist", "\n".join(_matrix_lines(value.twist, "  "))))
        tensors = {"binary": ("product",), "ternary": ("product",), "bol": ("bracket", "triple")}[kind]
        for f in tensors:
            items = [_compact(e) for e in _entries(getattr(value, f), basis)]
            lines.append(_field_block(f, _list_block(items, "  ")))
    if meta:
        lines.append(_field_block("meta", _meta_block(meta)))
    return "{\n" + ",\n".join(lines) + "\n}\n"


def canonical(text: str) -> str:
    """Re-emit a document in canonical form."""
    doc = parse(text)
    return dumps(doc.value, doc.name, doc.meta)


def dump(value, path, name: str | None = None, meta: Mapping | None = None) -> None:
    Path(path).write_text(dumps(value, name, meta), encoding="utf-8")


# ---------------------------------------------------------------------------
# reports


def report_dict(report, basis=None) -> dict:
    """A check report as plain data, residuals as exact rational strings."""
    out: dict = {"identity": report.identity, "verdict": report.verdict.value}
    if report.form:
        out["form"] = report.form
    if report.clause:
        out["clause"] = report.clause
    if report.witness is not None:
        w = report.witness
        out["witness"] = {"at": list(w.indices), "residual": [_q(c) for c in w.residual]}
        if basis is not None:
            out["witness"]["labels"] = list(w.labels(basis))
    if report.cause is not None:
        out["cause"] = report_dict(report.cause, basis)
    if report.note:
        out["note"] = report.note
    return out


def dumps_report(rows: list[dict]) -> str:
    return json.dumps({"format": "homalg-report", "version": VERSION, "results": rows}, indent=2, ensure_ascii=False) + "\n"
