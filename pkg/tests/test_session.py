import copy
import json
from pathlib import Path

import pytest

from lpdescent.errors import DescentError, SessionError
from lpdescent.session import load_session

ROOT = Path(__file__).resolve().parents[1]
SO5 = ROOT / "sessions" / "so5_unipotent.json"
SO7 = ROOT / "sessions" / "so7_type1.json"

BASE = json.loads(SO5.read_text())


def code_of(doc):
    with pytest.raises(DescentError) as exc:
        load_session(doc)
    return exc.value.code


def test_bundled_sessions_load():
    s = load_session(SO5)
    assert set(s.params) == {"phi", "vphi"}
    assert s.rep("pi").space.dim == 5
    assert s.expectations["descend"]["ell0"] == 1
    t = load_session(SO7)
    assert len(t.reps) == 4
    assert all(r.space.dim == 7 for r in t.reps.values())


def test_keyed_and_listed_signs_agree():
    s = load_session(SO5)
    doc = copy.deepcopy(BASE)
    doc["characters"]["chi"]["signs"] = [-1, -1]
    assert load_session(doc).char("chi") == s.char("chi")


def test_unknown_names_and_owners():
    s = load_session(SO5)
    for call in (lambda: s.param("x"), lambda: s.char("x"), lambda: s.rep("x")):
        with pytest.raises(SessionError) as exc:
            call()
        assert exc.value.code == "E_UNKNOWN_NAME"
    with pytest.raises(SessionError) as exc:
        s.char("chi", "vphi")
    assert exc.value.code == "E_CHAR_OWNER"


def test_file_errors(tmp_path):
    with pytest.raises(SessionError) as exc:
        load_session(tmp_path / "missing.json")
    assert exc.value.code == "E_SESSION_IO"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SessionError) as exc:
        load_session(bad)
    assert exc.value.code == "E_SESSION_JSON"
    dup = tmp_path / "dup.json"
    dup.write_text('{"field": {"p": 5}, "parameters": {"a": {"blocks": []}, "a": {"blocks": []}}}')
    with pytest.raises(SessionError) as exc:
        load_session(dup)
    assert exc.value.code == "E_DUPLICATE"


def test_schema_errors():
    assert code_of({}) == "E_SCHEMA"
    assert code_of({"field": {"q": 5}}) == "E_SCHEMA"
    doc = copy.deepcopy(BASE)
    doc["parameters"]["phi"] = {"type": "symplectic"}
    assert code_of(doc) == "E_SCHEMA"
    doc = copy.deepcopy(BASE)
    doc["characters"]["chi"]["signs"] = "--"
    assert code_of(doc) == "E_SCHEMA"
    doc = copy.deepcopy(BASE)
    doc["parameters"]["phi"]["blocks"] = [["chi_1"]]
    assert code_of(doc) == "E_SCHEMA"


def test_empty_universe_with_a_parameter():
    doc = copy.deepcopy(BASE)
    doc["universe"] = {"characters": []}
    assert code_of(doc) == "E_UNIVERSE"


def test_oracle_must_cover_opposite_pairs():
    doc = copy.deepcopy(BASE)
    doc["universe"]["reps"] = [{"label": "s", "dim": 2, "type": "symplectic"}]
    assert code_of(doc) == "E_ORACLE_MISSING"
    doc["universe"]["oracle"] = [["s", "chi_" + c, 1] for c in ("1", "u", "pi", "u*pi")]
    load_session(doc)
    doc["universe"]["oracle"].append(["chi_1", "s", -1])
    assert code_of(doc) == "E_DUPLICATE"


def test_bad_values():
    doc = copy.deepcopy(BASE)
    doc["characters"]["chi"]["signs"] = [1, 1, 1]
    assert code_of(doc) == "E_PARAMETER"
    doc = copy.deepcopy(BASE)
    doc["representations"]["sigma"]["disc"] = "1"
    assert code_of(doc) == "E_UNREALIZABLE"
    doc = copy.deepcopy(BASE)
    doc["field"] = {"p": 5}
    doc["representations"]["pi"]["disc"] = "nope"
    assert code_of(doc) == "E_FIELD_DEFINITION"


def test_abstract_field_session():
    doc = copy.deepcopy(BASE)
    doc["field"] = {"abstract": {
        "names": ["1", "u", "pi", "u*pi"],
        "pairing": [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]],
        "minus_one": "1", "uniformizer": "pi", "units": ["1", "u"]}}
    del doc["representations"]["sigma"]
    s = load_session(doc)
    assert s.rep("pi").space.as_dict() == load_session(SO5).rep("pi").space.as_dict()
