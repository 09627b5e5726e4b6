"""Command-line front end with solver-style task codes.

Task codes follow competition conventions: a problem family, a dash, and a
semantics or initial-set family code, e.g. ``EE-PR`` (enumerate preferred
extensions), ``SE-GR`` (some grounded extension), ``DC-IS-UC`` (credulous
acceptance wrt unchallenged initial sets).  ``UC`` is this package's
non-canonical code for the semantics built by exhaustively committing to
unattacked and unchallenged initial sets.

Answers go to stdout; exit codes signal only operational failure (2), never
a negative answer.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import decision, initial, io_formats, oracle, serial
from .core import ArgSet, ContractError, Framework
from .decision import Family
from .io_formats import ParseError
from .reductions import parse_dimacs, cnf3_to_af

SEMANTICS_CODES = {
    "AD": "admissible",
    "CO": "complete",
    "GR": "grounded",
    "ST": "stable",
    "PR": "preferred",
    "SA": "strongly-admissible",
    "UC": "unchallenged",
}

FAMILY_CODES = {
    "UA": Family.UNATTACKED,
    "UC": Family.UNCHALLENGED,
    "CH": Family.CHALLENGED,
}


class CliError(Exception):
    """Operational failure; maps to exit code 2."""


@dataclass
class TaskSpec:
    problem: str                # SE, EE, DC, DS, VER, EXISTS, UNIQUE, DECOMPOSE, ...
    semantics: str | None = None
    family: Family | None = None


def parse_task_code(code: str) -> TaskSpec:
    parts = code.upper().split("-")
    head = parts[0]
    if parts == ["GEN", "CNF"]:
        return TaskSpec("GEN-CNF")
    if len(parts) == 1:
        if head in ("DECOMPOSE", "CLASSIFY", "SERVE", "REPORT"):
            return TaskSpec(head)
        raise CliError(f"unknown task code {code!r}")
    if len(parts) == 2 and head in ("SE", "EE", "DC", "DS") and parts[1] in SEMANTICS_CODES:
        return TaskSpec(head, semantics=SEMANTICS_CODES[parts[1]])
    if parts[1] == "IS" and head in ("EE", "VER", "EXISTS", "UNIQUE", "DC", "DS"):
        if len(parts) == 2:
            return TaskSpec(head, family=Family.IS)
        if len(parts) == 3 and parts[2] in FAMILY_CODES:
            return TaskSpec(head, family=FAMILY_CODES[parts[2]])
    raise CliError(f"unknown task code {code!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="saf",
        description="Initial-set solver and explainer for abstract argumentation frameworks.",
    )
    parser.add_argument("input", nargs="?", help="framework file ('-' for stdin); unused by SERVE")
    parser.add_argument("--task", required=True, help="task code, e.g. EE-PR, DC-IS-UC, CLASSIFY, SERVE")
    parser.add_argument("--format", default="tgf", choices=io_formats.FORMATS, help="input format")
    parser.add_argument("--arg", help="subject argument label for DC/DS tasks")
    parser.add_argument("--set", dest="subject_set", help="comma-separated labels for VER/DECOMPOSE")
    parser.add_argument("--bound", type=int, default=None, help="override the brute-force size bound")
    parser.add_argument("--threads", type=int, default=1, help="worker threads for per-component enumeration")
    parser.add_argument("--json", action="store_true", help="emit JSON records instead of plain lines")
    parser.add_argument("--port", type=int, default=8000, help="port for SERVE")
    parser.add_argument("--host", default="127.0.0.1", help="bind host for SERVE")
    parser.add_argument("--out", default="report", help="output directory for REPORT")
    parser.add_argument("--semantics", default=None, help="semantics preset for REPORT extension tables")
    return parser


def _bound(args) -> int:
    if args.bound is not None:
        return args.bound
    env = os.environ.get("SAF_BOUND")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise CliError(f"SAF_BOUND must be an integer, got {env!r}") from None
    return oracle.DEFAULT_BOUND


def _read_input(args) -> str:
    if not args.input:
        raise CliError("this task needs an input file")
    if args.input == "-":
        return sys.stdin.read()
    try:
        return Path(args.input).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {args.input}: {exc}") from None


def _load_framework(args) -> Framework:
    text = _read_input(args)
    try:
        return io_formats.parse_framework(text, args.format).framework
    except (ParseError, ContractError) as exc:
        raise CliError(f"parse error: {exc}") from None


def _check_bound(f: Framework, args) -> None:
    limit = _bound(args)
    if f.n > limit:
        raise CliError(
            f"framework has {f.n} arguments, exceeding the size bound of {limit} "
            f"(raise it with --bound or SAF_BOUND)"
        )


def _resolve_arg(f: Framework, args) -> int:
    if not args.arg:
        raise CliError("this task needs --arg <label>")
    try:
        return f.arg(args.arg)
    except ContractError as exc:
        raise CliError(str(exc)) from None


def _resolve_set(f: Framework, args) -> ArgSet:
    if args.subject_set is None:
        raise CliError("this task needs --set a,b,c")
    labels = [piece.strip() for piece in args.subject_set.split(",") if piece.strip()]
    try:
        return f.set_of(*labels)
    except ContractError as exc:
        raise CliError(str(exc)) from None


def _fmt_set(f: Framework, s: ArgSet) -> str:
    return "[" + ",".join(f.labels(s)) + "]"


def _yesno(value: bool) -> str:
    return "YES" if value else "NO"


def _family_infos(f: Framework, family: Family):
    infos = initial.enumerate_initial_sets(f)
    if family is Family.IS:
        return infos
    wanted = {
        Family.UNATTACKED: initial.InitialClass.UNATTACKED,
        Family.UNCHALLENGED: initial.InitialClass.UNCHALLENGED,
        Family.CHALLENGED: initial.InitialClass.CHALLENGED,
    }[family]
    return tuple(info for info in infos if info.kind is wanted)


def run(argv: list[str] | None = None, stdout=None) -> int:
    """Parse argv, run the task, print the answer; returns the exit status."""
    out = stdout if stdout is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        task = parse_task_code(args.task)
        if args.threads != 1:
            initial.set_worker_threads(args.threads)
        return _dispatch(task, args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ContractError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except oracle.BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(task: TaskSpec, args, out) -> int:
    if task.problem == "SERVE":
        return _serve(args)
    if task.problem == "GEN-CNF":
        text = _read_input(args)
        try:
            framework = cnf3_to_af(parse_dimacs(text))
        except ContractError as exc:
            raise CliError(f"malformed CNF: {exc}") from None
        out.write(io_formats.emit_framework(framework, args.format))
        return 0

    f = _load_framework(args)
    if task.problem == "REPORT":
        return _report(f, args, out)
    _check_bound(f, args)

    if task.semantics is not None:
        return _semantics_task(task, f, args, out)
    if task.problem in ("EE", "VER", "EXISTS", "UNIQUE", "DC", "DS"):
        return _initial_task(task, f, args, out)
    if task.problem == "CLASSIFY":
        return _classify(f, args, out)
    if task.problem == "DECOMPOSE":
        seq = serial.decompose(f, _resolve_set(f, args))
        out.write(io_formats.emit_json(io_formats.sequence_record(f, seq)))
        return 0
    raise CliError(f"unhandled task {task.problem}")


def _semantics_task(task: TaskSpec, f: Framework, args, out) -> int:
    spec = serial.preset(task.semantics)
    extensions = serial.enumerate_extensions(f, spec)
    ordered = sorted(extensions, key=f.labels)
    if task.problem == "EE":
        if args.json:
            out.write(io_formats.emit_json(io_formats.extensions_record(f, extensions)))
        else:
            for ext in ordered:
                out.write(_fmt_set(f, ext) + "\n")
        return 0
    if task.problem == "SE":
        if not ordered:
            out.write("NO\n")
        elif args.json:
            out.write(io_formats.emit_json(io_formats.extension_record(f, ordered[0])))
        else:
            out.write(_fmt_set(f, ordered[0]) + "\n")
        return 0
    a = _resolve_arg(f, args)
    if task.problem == "DC":
        answer = any(a in ext for ext in extensions)
    else:
        answer = all(a in ext for ext in extensions)
    out.write(_yesno(answer) + "\n")
    return 0


def _initial_task(task: TaskSpec, f: Framework, args, out) -> int:
    family = task.family
    if task.problem == "EE":
        infos = _family_infos(f, family)
        if args.json:
            out.write(io_formats.emit_json(io_formats.initial_sets_record(f, infos)))
        else:
            for info in sorted(infos, key=lambda i: f.labels(i.arguments)):
                out.write(_fmt_set(f, info.arguments) + "\n")
        return 0
    if task.problem == "VER":
        answer = decision.verify(f, _resolve_set(f, args), family)
    elif task.problem == "EXISTS":
        answer = decision.exists(f, family)
    elif task.problem == "UNIQUE":
        answer = decision.unique(f, family)
    elif task.problem == "DC":
        answer = decision.credulous(f, _resolve_arg(f, args), family)
    else:
        answer = decision.skeptical(f, _resolve_arg(f, args), family)
    out.write(_yesno(answer) + "\n")
    return 0


def _classify(f: Framework, args, out) -> int:
    infos = initial.enumerate_initial_sets(f)
    if args.json:
        out.write(io_formats.emit_json(io_formats.initial_sets_record(f, infos)))
        return 0
    for info in infos:
        line = f"{_fmt_set(f, info.arguments)} {info.kind.value}"
        if info.conflicts:
            conflicts = ",".join(sorted(_fmt_set(f, c) for c in info.conflicts))
            line += f" (conflicts: {conflicts})"
        out.write(line + "\n")
    return 0


def _report(f: Framework, args, out) -> int:
    from .report import write_report

    _check_bound(f, args)
    spec = serial.preset(args.semantics) if args.semantics else None
    created = write_report(f, Path(args.out), spec)
    for path in created:
        out.write(f"{path}\n")
    return 0


def _serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return 0


def main(argv: list[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
