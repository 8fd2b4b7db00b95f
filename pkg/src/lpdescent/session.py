"""Session files: one JSON document holding a field, a universe and named data.

See ``docs/session_schema.md`` for the format.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .errors import DescentError, SessionError
from .field_model import FieldModel, SquareClass
from .lparam import (
    CompCharacter,
    EpsilonOracle,
    IrrWeilRep,
    LParameter,
    SDType,
    SimpleParam,
    Universe,
    char_rep,
)
from .spectral import ReprDatum, make_repr


@dataclass
class Session:
    field: FieldModel
    universe: Universe
    params: dict[str, LParameter] = field(default_factory=dict)
    chars: dict[str, tuple[str, CompCharacter]] = field(default_factory=dict)
    reps: dict[str, ReprDatum] = field(default_factory=dict)
    expectations: dict[str, Any] = field(default_factory=dict)

    def param(self, name: str) -> LParameter:
        if name not in self.params:
            raise SessionError(f"unknown parameter {name!r}", "E_UNKNOWN_NAME")
        return self.params[name]

    def char(self, name: str, param: str | None = None) -> CompCharacter:
        if name not in self.chars:
            raise SessionError(f"unknown character {name!r}", "E_UNKNOWN_NAME")
        owner, chi = self.chars[name]
        if param is not None and owner != param:
            raise SessionError(f"character {name!r} belongs to {owner!r}, not {param!r}",
                               "E_CHAR_OWNER")
        return chi

    def rep(self, name: str) -> ReprDatum:
        if name not in self.reps:
            raise SessionError(f"unknown representation {name!r}", "E_UNKNOWN_NAME")
        return self.reps[name]


def _need(d: dict, key: str, where: str) -> Any:
    if not isinstance(d, dict) or key not in d:
        raise SessionError(f"{where}: missing key {key!r}", "E_SCHEMA")
    return d[key]


def _unique(items: list[tuple[str, Any]], where: str) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for k, v in items:
        if k in out:
            raise SessionError(f"{where}: duplicate name {k!r}", "E_DUPLICATE")
        out[k] = v
    return out


def _pairs(obj: Any, where: str) -> list[tuple[str, Any]]:
    """Accept a JSON object, or a list of [name, value] pairs (to detect duplicates)."""
    if isinstance(obj, dict):
        return list(obj.items())
    if isinstance(obj, list) and all(isinstance(x, list) and len(x) == 2 for x in obj):
        return [(str(k), v) for k, v in obj]
    raise SessionError(f"{where}: expected an object", "E_SCHEMA")


def parse_field(spec: Any) -> FieldModel:
    if isinstance(spec, dict) and "p" in spec:
        return FieldModel.qp(int(spec["p"]))
    if isinstance(spec, dict) and "abstract" in spec:
        a = spec["abstract"]
        return FieldModel.abstract(
            _need(a, "names", "field.abstract"),
            _need(a, "pairing", "field.abstract"),
            _need(a, "minus_one", "field.abstract"),
            _need(a, "uniformizer", "field.abstract"),
            _need(a, "units", "field.abstract"),
        )
    raise SessionError("field: give {\"p\": prime} or {\"abstract\": {...}}", "E_SCHEMA")


def parse_universe(f: FieldModel, spec: Any) -> Universe:
    spec = spec or {}
    reps: list[IrrWeilRep] = []
    chars = spec.get("characters", "all")
    classes = list(f) if chars == "all" else [f.cls(c) for c in chars]
    reps += [char_rep(c, "chi_" + c.name) for c in classes]
    for r in spec.get("reps", []):
        reps.append(IrrWeilRep(
            str(_need(r, "label", "universe.reps")),
            int(_need(r, "dim", "universe.reps")),
            SDType(_need(r, "type", "universe.reps")),
            f.cls(r.get("det", f.one.name)),
        ))
    table = {}
    for entry in spec.get("oracle", []):
        if not (isinstance(entry, list) and len(entry) == 3 and entry[2] in (1, -1)):
            raise SessionError("universe.oracle entries are [label, label, +1|-1]", "E_SCHEMA")
        key = (str(entry[0]), str(entry[1]))
        if key in table or key[::-1] in table:
            raise SessionError(f"oracle pair {key} given twice", "E_DUPLICATE")
        table[key] = int(entry[2])
    return Universe(f, reps, EpsilonOracle(table))


def _block(U: Universe, item: Any, where: str) -> tuple[SimpleParam, int]:
    if not isinstance(item, list) or len(item) not in (2, 3):
        raise SessionError(f"{where}: a block is [label, b] or [label, b, multiplicity]",
                           "E_SCHEMA")
    m = int(item[2]) if len(item) == 3 else 1
    return SimpleParam(U[str(item[0])], int(item[1])), m


def parse_param(U: Universe, spec: Any, where: str) -> LParameter:
    blocks = [_block(U, b, where) for b in _need(spec, "blocks", where)]
    return LParameter.build(blocks, spec.get("type"), U.field)


def parse_char(U: Universe, phi: LParameter, spec: Any, where: str) -> CompCharacter:
    domain = spec.get("domain", "S")
    signs = spec.get("signs")
    if isinstance(signs, list) and signs and isinstance(signs[0], list):
        vals: dict[SimpleParam, int] = {}
        for s in signs:
            if len(s) != 3:
                raise SessionError(f"{where}: a keyed sign is [label, b, +1|-1]", "E_SCHEMA")
            vals[SimpleParam(U[str(s[0])], int(s[1]))] = int(s[2])
        return CompCharacter.make(phi, vals, domain)
    if isinstance(signs, list):
        return CompCharacter.make(phi, signs, domain)
    raise SessionError(f"{where}: signs must be a list", "E_SCHEMA")


def load_session(source: str | Path | dict) -> Session:
    if isinstance(source, dict):
        doc = source
    else:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise SessionError(f"cannot read session file: {exc}", "E_SESSION_IO") from None
        try:
            doc = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
        except json.JSONDecodeError as exc:
            raise SessionError(f"session file is not valid JSON: {exc}", "E_SESSION_JSON") from None
    try:
        return _build(doc)
    except DescentError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SessionError(f"malformed session: {exc}", "E_SCHEMA") from None


def _reject_duplicate_keys(pairs: list[tuple[str, Any]]) -> dict:
    out = {}
    for k, v in pairs:
        if k in out:
            raise SessionError(f"duplicate key {k!r}", "E_DUPLICATE")
        out[k] = v
    return out


def _build(doc: dict) -> Session:
    f = parse_field(_need(doc, "field", "session"))
    U = parse_universe(f, doc.get("universe"))
    s = Session(f, U)
    s.params = _unique([(k, parse_param(U, v, f"parameters.{k}"))
                        for k, v in _pairs(doc.get("parameters", {}), "parameters")],
                       "parameters")
    chars = []
    for k, v in _pairs(doc.get("characters", {}), "characters"):
        owner = str(_need(v, "param", f"characters.{k}"))
        chars.append((k, (owner, parse_char(U, s.param(owner), v, f"characters.{k}"))))
    s.chars = _unique(chars, "characters")
    reps = []
    for k, v in _pairs(doc.get("representations", {}), "representations"):
        pname = str(_need(v, "param", f"representations.{k}"))
        cname = str(_need(v, "char", f"representations.{k}"))
        disc = v.get("disc")
        a = v.get("normalizer")
        reps.append((k, make_repr(
            s.param(pname), s.char(cname, pname),
            disc=None if disc is None else f.cls(disc),
            a=None if a is None else f.cls(a),
        )))
    s.reps = _unique(reps, "representations")
    s.expectations = doc.get("expectations", {})
    return s


def class_name(c: SquareClass | None) -> str | None:
    return None if c is None else c.name
