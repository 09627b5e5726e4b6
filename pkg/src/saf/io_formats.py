"""Parsers and emitters for TGF, APX and the JSON record schemas.

Label order in a file defines index order; emitters sort attack lists
lexicographically so emitted files diff cleanly.  Parse-then-emit is the
identity up to whitespace and argument ordering for all three formats.

JSON records cover frameworks, extensions, classified initial sets and
serialisation sequences; class strings are the lower-case three-way
vocabulary ``unattacked`` / ``unchallenged`` / ``challenged``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .core import ArgSet, Framework
from .initial import InitialClass, InitialSetInfo
from .serial import SemanticsSpec, SerialisationSequence, preset


class ParseError(ValueError):
    """Malformed input; the message carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


FORMATS = ("tgf", "apx", "json")


@dataclass(frozen=True)
class Document:
    """A parsed input: which format it came from and the framework payload."""

    format: str
    framework: Framework


# ---------------------------------------------------------------------------
# TGF
# ---------------------------------------------------------------------------

def parse_tgf(text: str) -> Framework:
    """One label per line, a ``#`` separator, then ``src dst`` attack lines."""
    names: list[str] = []
    seen: set[str] = set()
    attacks: set[tuple[str, str]] = set()
    separator_at = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if separator_at is not None:
                raise ParseError(lineno, "repeated '#' separator")
            separator_at = lineno
            continue
        if separator_at is None:
            parts = line.split()
            if len(parts) != 1:
                raise ParseError(lineno, f"attack line {line!r} before the '#' separator")
            label = parts[0]
            if label in seen:
                raise ParseError(lineno, f"duplicate argument label {label!r}")
            seen.add(label)
            names.append(label)
        else:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(lineno, f"attack lines have two labels, got {line!r}")
            src, dst = parts
            for label in (src, dst):
                if label not in seen:
                    raise ParseError(lineno, f"unknown argument label {label!r}")
            attacks.add((src, dst))
    if separator_at is None:
        raise ParseError(len(text.splitlines()) or 1, "missing '#' separator")
    return Framework.of(names, sorted(attacks))


def emit_tgf(f: Framework) -> str:
    lines = list(f.names)
    lines.append("#")
    lines += [f"{a} {b}" for a, b in f.attack_labels()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# APX
# ---------------------------------------------------------------------------

def parse_apx(text: str) -> Framework:
    """Lines of ``arg(<name>).`` and ``att(<a>,<b>).`` in any order; ``%`` comments."""
    names: list[str] = []
    seen: set[str] = set()
    pending: list[tuple[int, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        for statement in _split_statements(line, lineno):
            if statement.startswith("arg(") and statement.endswith(")"):
                label = statement[4:-1].strip()
                if not label:
                    raise ParseError(lineno, "empty argument name")
                if label in seen:
                    raise ParseError(lineno, f"duplicate argument label {label!r}")
                seen.add(label)
                names.append(label)
            elif statement.startswith("att(") and statement.endswith(")"):
                inner = statement[4:-1]
                parts = [p.strip() for p in inner.split(",")]
                if len(parts) != 2 or not all(parts):
                    raise ParseError(lineno, f"malformed attack {statement!r}")
                pending.append((lineno, parts[0], parts[1]))
            else:
                raise ParseError(lineno, f"unrecognised statement {statement!r}")
    attacks: set[tuple[str, str]] = set()
    for lineno, src, dst in pending:
        for label in (src, dst):
            if label not in seen:
                raise ParseError(lineno, f"attack references undeclared argument {label!r}")
        attacks.add((src, dst))
    return Framework.of(names, sorted(attacks))


def _split_statements(line: str, lineno: int) -> Iterable[str]:
    for chunk in line.split("."):
        chunk = chunk.strip()
        if chunk:
            yield chunk
    if not line.rstrip().endswith("."):
        raise ParseError(lineno, "statements must end with '.'")


def emit_apx(f: Framework) -> str:
    lines = [f"arg({name})." for name in f.names]
    lines += [f"att({a},{b})." for a, b in f.attack_labels()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON records
# ---------------------------------------------------------------------------

def framework_record(f: Framework) -> dict:
    return {
        "arguments": list(f.names),
        "attacks": [[a, b] for a, b in f.attack_labels()],
    }


def framework_from_record(record: dict) -> Framework:
    try:
        names = record["arguments"]
        attacks = [tuple(pair) for pair in record["attacks"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(1, f"framework record is missing {exc}") from None
    return Framework.of(names, attacks)


def parse_json(text: str) -> Framework:
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg) from None
    return framework_from_record(record)


def extension_record(f: Framework, s: ArgSet) -> list[str]:
    return list(f.labels(s))


def extensions_record(f: Framework, sets: Iterable[ArgSet]) -> dict:
    return {"extensions": sorted(extension_record(f, s) for s in sets)}


def initial_sets_record(f: Framework, infos: Iterable[InitialSetInfo]) -> dict:
    return {
        "initial_sets": [
            {
                "set": extension_record(f, info.arguments),
                "class": info.kind.value,
                "conflicts": sorted(extension_record(f, c) for c in info.conflicts),
                "scc": info.scc_id,
            }
            for info in infos
        ]
    }


def sequence_record(f: Framework, seq: SerialisationSequence) -> dict:
    return {
        "semantics": seq.spec.name,
        "steps": [
            {"select": extension_record(f, s), "class": kind.value}
            for s, kind in seq.steps
        ],
        "extension": extension_record(f, seq.extension),
    }


def sequence_from_record(f: Framework, record: dict) -> SerialisationSequence:
    steps = tuple(
        (f.set_of(*entry["select"]), InitialClass(entry["class"]))
        for entry in record["steps"]
    )
    extension = f.set_of(*record["extension"])
    spec: SemanticsSpec = preset(record["semantics"])
    return SerialisationSequence(steps, extension, spec)


def emit_json(record: object) -> str:
    """Stable-key JSON for any record produced by this module."""
    return json.dumps(record, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Format dispatch
# ---------------------------------------------------------------------------

def parse_framework(text: str, fmt: str) -> Document:
    fmt = fmt.lower()
    if fmt == "tgf":
        return Document("tgf", parse_tgf(text))
    if fmt == "apx":
        return Document("apx", parse_apx(text))
    if fmt == "json":
        return Document("json", parse_json(text))
    raise ValueError(f"unknown framework format {fmt!r}")


def emit_framework(f: Framework, fmt: str) -> str:
    fmt = fmt.lower()
    if fmt == "tgf":
        return emit_tgf(f)
    if fmt == "apx":
        return emit_apx(f)
    if fmt == "json":
        return emit_json(framework_record(f))
    raise ValueError(f"unknown framework format {fmt!r}")
