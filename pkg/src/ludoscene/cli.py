"""Command-line front end.

    ludoscene validate FILE
    ludoscene detect (FILE | --fixture NAME)
    ludoscene diff BEFORE AFTER
    ludoscene show FILE [--element ID]
    ludoscene scaffold [flags] -o FILE
    ludoscene rulebook

Every command takes ``--format text|json``. Output is plain text with no
colour, and identical input always gives identical bytes.

Exit codes: 0 success, 1 the scenario is invalid, 2 usage, parse or I/O
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from ludoscene.capillarity import Effective, aggregate_subtree, propagate
from ludoscene.corpus import FIXTURE_NAMES, UnknownFixtureError, fixture_path
from ludoscene.document import ParseError, load, serialize
from ludoscene.model import Scenario
from ludoscene.patterns import PatternReport, catalog, detect, diff, rulebook
from ludoscene.patterns.detector import REPORT_VERSION, sort_ids
from ludoscene.scaffold import ScaffoldConfig, ScaffoldConfigError, scaffold
from ludoscene.validation import InvalidScenarioError, validate

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


class _Failure(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def _dump_json(data: dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _read(path: str) -> Scenario:
    try:
        return load(path)
    except OSError as exc:
        raise _Failure(EXIT_USAGE, f"cannot read {path}: {exc.strerror or exc}") from exc
    except ParseError as exc:
        raise _Failure(EXIT_USAGE, f"{path}: {exc}") from exc


def _checked(path: str) -> Scenario:
    """Load *path* and refuse it when validation reports errors."""
    scenario = _read(path)
    errors = [d for d in validate(scenario) if d.is_error]
    if errors:
        lines = [f"{path}: invalid scenario"] + [f"  {d}" for d in errors]
        raise _Failure(EXIT_INVALID, "\n".join(lines))
    return scenario


# commands -----------------------------------------------------------------

def cmd_validate(args: argparse.Namespace, out: TextIO) -> int:
    scenario = _read(args.file)
    diagnostics = validate(scenario)
    errors = sum(d.is_error for d in diagnostics)
    if args.format == "json":
        out.write(_dump_json({
            "report_version": REPORT_VERSION,
            "valid": errors == 0,
            "diagnostics": [d.to_dict() for d in diagnostics],
        }))
    else:
        for d in diagnostics:
            out.write(f"{d}\n")
        out.write(f"{errors} error(s), {len(diagnostics) - errors} warning(s)\n")
    return EXIT_OK if errors == 0 else EXIT_INVALID


def _report_text(report: PatternReport) -> str:
    lines = []
    for r in report.results:
        status = "present" if r.present else "absent"
        line = f"{r.pattern_id}  {status:<7}  {r.name}"
        if r.coverage is not None:
            line += f"  coverage={r.coverage:.2f}"
        if not r.present:
            first = r.unmet[0]
            line += f"  [{first.reason}" + (f": {first.element}" if first.element else "") + "]"
        lines.append(line)
    lines.append("present: " + (" ".join(report.present_ids()) or "(none)"))
    return "\n".join(lines) + "\n"


def cmd_detect(args: argparse.Namespace, out: TextIO) -> int:
    if (args.file is None) == (args.fixture is None):
        raise _Failure(EXIT_USAGE, "detect needs exactly one of FILE or --fixture NAME")
    path = args.file
    if args.fixture is not None:
        try:
            path = str(fixture_path(args.fixture))
        except UnknownFixtureError as exc:
            raise _Failure(EXIT_USAGE, str(exc.args[0])) from exc
    report = detect(_checked(path))
    out.write(report.to_json() if args.format == "json" else _report_text(report))
    return EXIT_OK


def cmd_diff(args: argparse.Namespace, out: TextIO) -> int:
    before = detect(_checked(args.before))
    after = detect(_checked(args.after))
    result = diff(before, after)
    if args.format == "json":
        out.write(_dump_json(result.to_dict()))
    else:
        for label, ids in (("added", result.added), ("removed", result.removed)):
            out.write(f"{label}: " + (" ".join(sort_ids(ids)) or "(none)") + "\n")
    return EXIT_OK


def _sets_dict(e: Effective) -> dict:
    return {"competences": sorted(e.competences), "participants": sorted(e.participants)}


def cmd_show(args: argparse.Namespace, out: TextIO) -> int:
    scenario = _checked(args.file)
    sets = propagate(scenario)
    if args.element is not None:
        if args.element not in sets:
            raise _Failure(EXIT_USAGE, f"{args.element!r} is not a mission, sequence or level of {args.file}")
        ids = [args.element]
    else:
        ids = list(sets)
    rows = []
    for eid in ids:
        element = scenario.index[eid].element
        rows.append({
            "id": eid,
            "level": element.level,
            "effective": _sets_dict(sets[eid]),
            "subtree": _sets_dict(aggregate_subtree(scenario, eid, sets)),
        })
    if args.format == "json":
        out.write(_dump_json({"report_version": REPORT_VERSION, "elements": rows}))
        return EXIT_OK
    for row in rows:
        out.write(f"{row['level']} {row['id']}\n")
        for view in ("effective", "subtree"):
            for key in ("competences", "participants"):
                values = row[view][key]
                out.write(f"  {view} {key}: {', '.join(values) or '-'}\n")
    return EXIT_OK


def cmd_scaffold(args: argparse.Namespace, out: TextIO) -> int:
    try:
        config = ScaffoldConfig(
            title=args.title,
            learner_team_size=args.team_size,
            core_mission_count=args.core_missions,
            include_report_mission=args.report,
            discipline_labels=tuple(args.discipline),
            seed_competences_per_module=args.competences_per_module,
        )
    except ScaffoldConfigError as exc:
        raise _Failure(EXIT_USAGE, f"invalid scaffold configuration: {exc}") from exc
    text = serialize(scaffold(config))
    if args.output == "-":
        out.write(text)
        return EXIT_OK
    try:
        with open(args.output, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    except OSError as exc:
        raise _Failure(EXIT_USAGE, f"cannot write {args.output}: {exc.strerror or exc}") from exc
    if args.format == "json":
        out.write(_dump_json({"report_version": REPORT_VERSION, "written": args.output}))
    else:
        out.write(f"wrote {args.output}\n")
    return EXIT_OK


def cmd_rulebook(args: argparse.Namespace, out: TextIO) -> int:
    if args.format == "text":
        out.write(rulebook())
        return EXIT_OK
    rules = [
        {
            "id": r.id,
            "name": r.name,
            "quantifier": r.quantifier,
            "statement": r.statement,
            "domain": {"name": r.domain.name, "text": r.domain.text, "reason": r.domain.reason},
            "conditions": [
                {"name": c.name, "text": c.text, "reason": c.reason, "optional": c.optional}
                for c in r.conditions
            ],
            "evidence": [{"role": role, "kind": kind} for role, kind in r.evidence_schema],
        }
        for r in catalog()
    ]
    out.write(_dump_json({"report_version": REPORT_VERSION, "rules": rules}))
    return EXIT_OK


# parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="output format (default: text)")

    parser = argparse.ArgumentParser(
        prog="ludoscene",
        description="Validate learning-game scenarios and detect design patterns P1 to P9.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    p = sub.add_parser("validate", parents=[common], help="print structural diagnostics")
    p.add_argument("file")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("detect", parents=[common], help="print the pattern report")
    p.add_argument("file", nargs="?")
    p.add_argument("--fixture", metavar="NAME", help=f"bundled fixture: {', '.join(FIXTURE_NAMES)}")
    p.set_defaults(run=cmd_detect)

    p = sub.add_parser("diff", parents=[common], help="patterns added and removed between two revisions")
    p.add_argument("before")
    p.add_argument("after")
    p.set_defaults(run=cmd_diff)

    p = sub.add_parser("show", parents=[common], help="effective competences and participants per ludic element")
    p.add_argument("file")
    p.add_argument("--element", metavar="ID", help="only this mission, sequence or level")
    p.set_defaults(run=cmd_show)

    defaults = ScaffoldConfig()
    p = sub.add_parser("scaffold", parents=[common], help="write a starter scenario document")
    p.add_argument("-o", "--output", required=True, metavar="FILE", help="output path, or - for stdout")
    p.add_argument("--title", default=defaults.title)
    p.add_argument("--team-size", type=int, default=defaults.learner_team_size, help="learner team size, 2 to 4")
    p.add_argument("--core-missions", type=int, default=defaults.core_mission_count)
    p.add_argument("--report", action="store_true", help="append a report mission")
    p.add_argument(
        "--discipline", action="append", metavar="LABEL",
        help="discipline label for seeded competences; repeat for each (default: domain, methodology)",
    )
    p.add_argument("--competences-per-module", type=int, default=defaults.seed_competences_per_module)
    p.set_defaults(run=cmd_scaffold)

    p = sub.add_parser("rulebook", parents=[common], help="print the rule text of P1 to P9")
    p.set_defaults(run=cmd_rulebook)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.command == "scaffold" and args.discipline is None:
        args.discipline = list(ScaffoldConfig().discipline_labels)
    try:
        return args.run(args, out)
    except _Failure as exc:
        err.write(f"ludoscene {args.command}: {exc}\n")
        return exc.code
    except InvalidScenarioError as exc:
        err.write(f"ludoscene {args.command}: {exc}\n")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())
