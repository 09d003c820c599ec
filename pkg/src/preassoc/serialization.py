"""Function and report files: a diff-friendly JSON interchange format.

A function file lists the domain chain, an optional codomain listing, the
default value ("ε" for the marker), the max arity, and one entry per tuple.
Canonical serialization sorts entries by arity then lexicographic arguments
and is byte-stable, so digests and golden-file comparisons are meaningful.
"""

from __future__ import annotations

import hashlib
import json

from .core import EPSILON, Chain, TableFn, Verdict, Witness
from .errors import FunctionFileError

EPSILON_TOKEN = "ε"
SCHEMA_VERSION = 1

FUNCTION_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["domain", "default", "max_arity", "entries"],
    "properties": {
        "domain": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "codomain": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "default": {"type": "string"},
        "max_arity": {"type": "integer", "minimum": 1},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["args", "value"],
                "properties": {
                    "args": {
                        "type": "array",
                        "items": {"type": "string"},
                        "minItems": 1,
                    },
                    "value": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

WITNESS_SCHEMA = {
    "type": "object",
    "required": ["parts", "values"],
    "properties": {
        "parts": {
            "type": "object",
            "additionalProperties": {"type": "array", "items": {"type": "string"}},
        },
        "values": {"type": "object", "additionalProperties": {"type": "string"}},
        "scalars": {"type": "object", "additionalProperties": {"type": "integer"}},
        "note": {"type": "string"},
    },
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["schema_version", "tool_version", "function_digest", "results"],
    "properties": {
        "schema_version": {"type": "integer"},
        "tool_version": {"type": "string"},
        "function_digest": {"type": "string"},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["property", "holds", "cases_checked", "max_arity"],
                "properties": {
                    "property": {"type": "string"},
                    "holds": {"type": "boolean"},
                    "cases_checked": {"type": "integer"},
                    "max_arity": {"type": "integer"},
                    "witness": {"anyOf": [WITNESS_SCHEMA, {"type": "null"}]},
                    "extra": {"type": "object"},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}


def _value_token(value) -> str:
    return EPSILON_TOKEN if value is EPSILON else str(value)


def table_to_dict(fn: TableFn) -> dict:
    """The canonical JSON-ready form of a table function."""
    idx = fn.domain.index
    ordered = sorted(fn.entries.items(), key=lambda kv: (len(kv[0]), tuple(map(idx, kv[0]))))
    return {
        "domain": list(fn.domain.elements),
        "codomain": [_value_token(v) for v in fn.codomain],
        "default": _value_token(fn.default),
        "max_arity": fn.max_arity,
        "entries": [
            {"args": list(args), "value": _value_token(value)} for args, value in ordered
        ],
    }


def dumps_function(fn: TableFn) -> str:
    """Byte-stable canonical serialization."""
    return json.dumps(table_to_dict(fn), ensure_ascii=False, indent=1) + "\n"


def dumps_function_compact(fn: TableFn) -> str:
    """One-line form for streaming enumeration output."""
    return json.dumps(table_to_dict(fn), ensure_ascii=False, separators=(",", ":"))


def function_digest(fn: TableFn) -> str:
    return hashlib.sha256(dumps_function(fn).encode("utf-8")).hexdigest()


def table_from_dict(doc) -> TableFn:
    """Parse and fully validate a function document."""
    if not isinstance(doc, dict):
        raise FunctionFileError("function document must be a JSON object")
    for key in ("domain", "default", "max_arity", "entries"):
        if key not in doc:
            raise FunctionFileError(f"missing required field {key!r}", field=key)
    domain = doc["domain"]
    if (
        not isinstance(domain, list)
        or not domain
        or not all(isinstance(s, str) for s in domain)
    ):
        raise FunctionFileError("domain must be a nonempty list of strings", field="domain")
    if EPSILON_TOKEN in domain:
        raise FunctionFileError(
            f"the marker {EPSILON_TOKEN!r} is reserved and cannot be a domain symbol",
            field="domain",
        )
    if len(set(domain)) != len(domain):
        raise FunctionFileError("domain has duplicate symbols", field="domain")
    try:
        chain = Chain(tuple(domain))
    except ValueError as exc:
        raise FunctionFileError(str(exc), field="domain") from None

    max_arity = doc["max_arity"]
    if not isinstance(max_arity, int) or max_arity < 1:
        raise FunctionFileError("max_arity must be an integer >= 1", field="max_arity")

    entries_doc = doc["entries"]
    if not isinstance(entries_doc, list):
        raise FunctionFileError("entries must be a list", field="entries")
    entries = {}
    for i, item in enumerate(entries_doc):
        where = f"entries[{i}]"
        if not isinstance(item, dict) or "args" not in item or "value" not in item:
            raise FunctionFileError(
                f"{where} must be an object with 'args' and 'value'", field=where
            )
        args = item["args"]
        value = item["value"]
        if not isinstance(args, list) or not args or not all(isinstance(s, str) for s in args):
            raise FunctionFileError(
                f"{where}.args must be a nonempty list of symbols", field=where
            )
        if not isinstance(value, str):
            raise FunctionFileError(f"{where}.value must be a symbol", field=where)
        if len(args) > max_arity:
            raise FunctionFileError(
                f"{where} has arity {len(args)} above max_arity {max_arity}", field=where
            )
        for s in args:
            if s not in chain:
                raise FunctionFileError(
                    f"{where} uses unknown domain symbol {s!r}", field=where
                )
        key = tuple(args)
        if key in entries:
            raise FunctionFileError(f"duplicate entry for args {args!r}", field=where)
        entries[key] = EPSILON if value == EPSILON_TOKEN else value

    k = len(domain)
    for n in range(1, max_arity + 1):
        have = sum(1 for t in entries if len(t) == n)
        if have != k ** n:
            raise FunctionFileError(
                f"entries not total at arity {n}: expected {k ** n}, found {have}",
                field="entries",
            )

    default_doc = doc["default"]
    if not isinstance(default_doc, str):
        raise FunctionFileError("default must be a symbol string", field="default")
    default = EPSILON if default_doc == EPSILON_TOKEN else default_doc

    codomain_doc = doc.get("codomain")
    if codomain_doc is not None:
        if (
            not isinstance(codomain_doc, list)
            or not codomain_doc
            or not all(isinstance(s, str) for s in codomain_doc)
        ):
            raise FunctionFileError(
                "codomain must be a nonempty list of strings", field="codomain"
            )
        if len(set(codomain_doc)) != len(codomain_doc):
            raise FunctionFileError("codomain has duplicate symbols", field="codomain")
        codomain = tuple(
            EPSILON if s == EPSILON_TOKEN else s for s in codomain_doc
        )
    else:
        codomain = _inferred_codomain(entries.values(), chain)

    values = set(codomain)
    for key, value in entries.items():
        if value not in values:
            raise FunctionFileError(
                f"entry value {_value_token(value)!r} at {list(key)!r} is outside the codomain",
                field="entries",
            )
    if default is not EPSILON and default not in values:
        raise FunctionFileError(
            f"default {default_doc!r} is outside the codomain", field="default"
        )
    return TableFn(chain, codomain, max_arity, default, entries)


def _inferred_codomain(values, chain: Chain) -> tuple:
    distinct = set(values)
    eps = EPSILON in distinct
    distinct.discard(EPSILON)
    if all(v in chain for v in distinct):
        ordered = [v for v in chain.elements if v in distinct]
    else:
        try:
            ordered = sorted(distinct, key=float)
        except ValueError:
            ordered = sorted(distinct)
    if eps:
        ordered.append(EPSILON)
    return tuple(ordered)


def loads_function(text: str) -> TableFn:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FunctionFileError(f"invalid JSON: {exc}") from None
    return table_from_dict(doc)


def load_function(path) -> TableFn:
    with open(path, encoding="utf-8") as fh:
        return loads_function(fh.read())


def save_function(fn: TableFn, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_function(fn))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


def witness_to_dict(w: Witness) -> dict:
    doc = {
        "parts": {name: [str(s) for s in t] for name, t in w.parts},
        "values": {name: _value_token(v) for name, v in w.values},
    }
    if w.scalars:
        doc["scalars"] = {name: v for name, v in w.scalars}
    if w.note:
        doc["note"] = w.note
    return doc


def verdict_to_dict(v: Verdict) -> dict:
    doc = {
        "property": v.property,
        "holds": v.holds,
        "cases_checked": v.cases_checked,
        "max_arity": v.max_arity,
        "witness": witness_to_dict(v.witness) if v.witness is not None else None,
    }
    if v.extra:
        doc["extra"] = {k: val for k, val in v.extra}
    return doc


def build_report(fn: TableFn, verdicts, tool_version: str) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool_version": tool_version,
        "function_digest": function_digest(fn),
        "results": [verdict_to_dict(v) for v in verdicts],
    }


def dumps_report(report: dict) -> str:
    return json.dumps(report, ensure_ascii=False, indent=1) + "\n"
