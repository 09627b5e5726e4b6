"""TGF/APX/JSON parsing and emission: exact grammars, line-numbered
diagnostics, and round-trip identity."""

from __future__ import annotations

import json

import pytest
from hypothesis import given, settings, strategies as st

from saf import serial
from saf.io_formats import (
    Document,
    ParseError,
    emit_apx,
    emit_framework,
    emit_json,
    emit_tgf,
    framework_from_record,
    framework_record,
    initial_sets_record,
    parse_apx,
    parse_framework,
    parse_json,
    parse_tgf,
    sequence_from_record,
    sequence_record,
)
from saf.initial import enumerate_initial_sets
from saf.serial import PRESETS, SerialisationSequence, replay

from .strategies import frameworks


# ---------------------------------------------------------------------------
# TGF
# ---------------------------------------------------------------------------

def test_parse_tgf_minimal():
    f = parse_tgf("a\nb\n#\na b\n")
    assert f.names == ("a", "b")
    assert f.attack_labels() == (("a", "b"),)


def test_tgf_round_trip_three_class(three_class):
    text = emit_tgf(three_class)
    again = parse_tgf(text)
    assert again == three_class
    assert again.n == 10 and len(again.attacks) == 15


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("a\nb\na b\n#\n", "before the '#'"),
        ("a\nb\n", "missing '#'"),
        ("a\n#\na b\n", "unknown argument"),
        ("a\na\n#\n", "duplicate argument"),
        ("a\nb\n#\na b c\n", "two labels"),
    ],
)
def test_parse_tgf_rejects(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_tgf(text)
    assert fragment in str(err.value)
    assert "line" in str(err.value)


def test_tgf_error_carries_line_number():
    with pytest.raises(ParseError) as err:
        parse_tgf("a\nb\n#\na zz\n")
    assert err.value.line == 4


# ---------------------------------------------------------------------------
# APX
# ---------------------------------------------------------------------------

def test_parse_apx_minimal():
    f = parse_apx("arg(a). arg(b). att(a,b).")
    assert f.names == ("a", "b")
    assert f.attack_labels() == (("a", "b"),)


def test_apx_round_trip_cycle_mutual(cycle_mutual):
    text = emit_apx(cycle_mutual)
    again = parse_apx(text)
    assert again == cycle_mutual
    assert again.n == 5 and len(again.attacks) == 6


def test_apx_attacks_may_precede_declarations():
    f = parse_apx("att(a,b).\narg(a).\narg(b).\n% trailing comment")
    assert f.attack_labels() == (("a", "b"),)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("att(a,b).", "undeclared"),
        ("arg(a). arg(a).", "duplicate"),
        ("arg(a)", "end with '.'"),
        ("foo(a).", "unrecognised"),
        ("arg(a). att(a).", "malformed attack"),
    ],
)
def test_parse_apx_rejects(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_apx(text)
    assert fragment in str(err.value)


# ---------------------------------------------------------------------------
# JSON records
# ---------------------------------------------------------------------------

def test_framework_json_round_trip(three_class):
    text = emit_json(framework_record(three_class))
    assert parse_json(text) == three_class


def test_sequence_record_for_staged_walk(three_class):
    f = three_class
    state = replay(f, [f.set_of("h"), f.set_of("f"), f.set_of("e", "i"), f.set_of("b")])
    seq = SerialisationSequence(state.history, state.accumulated, PRESETS["admissible"])
    record = sequence_record(f, seq)
    assert [entry["select"] for entry in record["steps"]] == [
        ["h"], ["f"], ["e", "i"], ["b"],
    ]
    assert [entry["class"] for entry in record["steps"]] == [
        "unattacked", "unchallenged", "challenged", "unattacked",
    ]
    assert record["extension"] == ["b", "e", "f", "h", "i"]
    assert sequence_from_record(f, record) == seq


def test_empty_sequence_record(three_class):
    f = three_class
    seq = serial.decompose(f, f.empty_set())
    record = sequence_record(f, seq)
    assert record["steps"] == [] and record["extension"] == []


def test_initial_sets_record(three_class):
    f = three_class
    record = initial_sets_record(f, enumerate_initial_sets(f))
    by_set = {tuple(e["set"]): e for e in record["initial_sets"]}
    assert by_set[("d", "j")]["class"] == "challenged"
    assert by_set[("d", "j")]["conflicts"] == [["e", "i"]]
    assert by_set[("h",)]["class"] == "unattacked"
    assert by_set[("f",)]["conflicts"] == []


def test_emit_json_is_stable_and_parseable(three_class):
    f = three_class
    record = initial_sets_record(f, enumerate_initial_sets(f))
    text = emit_json(record)
    assert json.loads(text) == record
    assert emit_json(json.loads(text)) == text


def test_sequence_round_trip_through_json(three_class):
    f = three_class
    seq = serial.decompose(f, f.set_of("b", "e", "f", "h", "i"))
    text = emit_json(sequence_record(f, seq))
    assert sequence_from_record(f, json.loads(text)) == seq


def test_framework_from_record_rejects_garbage():
    with pytest.raises(ParseError):
        framework_from_record({"arguments": ["a"]})
    with pytest.raises(ParseError):
        parse_json("{not json")


# ---------------------------------------------------------------------------
# dispatch and round-trip over random frameworks
# ---------------------------------------------------------------------------

def test_parse_framework_dispatch(three_class):
    text = emit_tgf(three_class)
    doc = parse_framework(text, "tgf")
    assert doc == Document("tgf", three_class)
    with pytest.raises(ValueError):
        parse_framework(text, "xml")
    with pytest.raises(ValueError):
        emit_framework(three_class, "xml")


@settings(max_examples=100)
@given(frameworks(max_n=8))
def test_round_trip_all_formats(f):
    for fmt in ("tgf", "apx", "json"):
        text = emit_framework(f, fmt)
        assert parse_framework(text, fmt).framework == f


@settings(max_examples=200)
@given(st.text(max_size=200))
def test_parsers_fail_cleanly_on_garbage(text):
    from saf.core import ContractError

    for fmt in ("tgf", "apx", "json"):
        try:
            parse_framework(text, fmt)
        except (ParseError, ContractError):
            pass
