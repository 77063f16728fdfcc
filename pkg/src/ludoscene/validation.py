"""Structural validator for scenarios.

The validator never raises on a malformed scenario. It collects every problem
as a :class:`Diagnostic` and returns them sorted by element path, then code.
"""

from __future__ import annotations

from dataclasses import dataclass

from ludoscene.model import PEDAGOGICAL_LEVELS, LUDIC_LEVELS, ROOT, STAGING_LEVEL, Scenario
from ludoscene.ordering import CycleError, linear_order, siblings

ERROR = "error"
WARNING = "warning"

ERROR_CODES = (
    "E_DUPLICATE_ID",
    "E_DANGLING_REF",
    "E_MISSING_COMPETENCE",
    "E_LEVEL_MISMATCH",
    "E_TEAM_EMPTY",
    "E_ORDER_CYCLE",
    "E_BAD_BRANCH",
    "E_SELF_HELP",
)
WARNING_CODES = ("W_HIDDEN_NON_EVALUATOR", "W_UNORDERED_SIBLINGS")


@dataclass(frozen=True, order=True)
class Diagnostic:
    path: str
    code: str
    message: str

    @property
    def severity(self) -> str:
        return ERROR if self.code.startswith("E_") else WARNING

    @property
    def is_error(self) -> bool:
        return self.severity == ERROR

    def __str__(self) -> str:
        return f"{self.severity} {self.code} {self.path}: {self.message}"

    def to_dict(self) -> dict:
        return {"code": self.code, "severity": self.severity, "path": self.path, "message": self.message}


class InvalidScenarioError(ValueError):
    """Raised by operations that require a scenario free of error diagnostics."""

    def __init__(self, diagnostics: list[Diagnostic]) -> None:
        self.diagnostics = [d for d in diagnostics if d.is_error]
        shown = "; ".join(str(d) for d in self.diagnostics[:3])
        more = len(self.diagnostics) - 3
        super().__init__(
            f"scenario has {len(self.diagnostics)} error(s): {shown}" + (f" (+{more} more)" if more > 0 else "")
        )


def ordering_path(owner: str) -> str:
    return "orderings/(root)" if owner == ROOT else f"orderings/{owner}"


def validate(scenario: Scenario) -> list[Diagnostic]:
    out: list[Diagnostic] = []
    index = scenario.index

    def emit(path: str, code: str, message: str) -> None:
        out.append(Diagnostic(path, code, message))

    def ref(path: str, field: str, target: str, kinds: tuple[str, ...]) -> bool:
        entry = index.get(target)
        if entry is None:
            emit(path, "E_DANGLING_REF", f"{field} {target!r} does not resolve")
            return False
        if entry.kind not in kinds:
            emit(path, "E_DANGLING_REF", f"{field} {target!r} is a {entry.kind}, expected {'/'.join(kinds)}")
            return False
        return True

    seen: set[str] = set()
    for entry in scenario.walk():
        element, path = entry.element, entry.path
        if element.id in seen:
            emit(path, "E_DUPLICATE_ID", f"id {element.id!r} is already used by {index[element.id].path}")
        seen.add(element.id)

        if entry.kind == "participant":
            if element.kind == "team" and not element.members:
                emit(path, "E_TEAM_EMPTY", f"team {element.id!r} has no members")

        elif entry.kind == "character":
            for target in element.plays_refs:
                ref(path, "plays", target, ("participant",))
            for target in element.helps_refs:
                if target == element.id:
                    emit(path, "E_SELF_HELP", f"character {element.id!r} helps itself")
                else:
                    ref(path, "helps", target, ("character",))
            if element.visibility == "hidden" and element.archetype != "evaluator":
                emit(path, "W_HIDDEN_NON_EVALUATOR", f"hidden character {element.id!r} is a {element.archetype}")

        elif entry.kind in PEDAGOGICAL_LEVELS:
            if not element.competence_refs:
                emit(path, "E_MISSING_COMPETENCE", f"{element.level} {element.id!r} has no competence")
            for target in element.competence_refs:
                ref(path, "competence", target, ("competence",))
            for target in element.participant_refs:
                ref(path, "participant", target, ("participant",))
            _check_containment(emit, path, element, PEDAGOGICAL_LEVELS)

        elif entry.kind in LUDIC_LEVELS:
            expected = STAGING_LEVEL[element.level]
            for target in element.staged_refs:
                if ref(path, "staged", target, PEDAGOGICAL_LEVELS) and index[target].kind != expected:
                    emit(
                        path,
                        "E_LEVEL_MISMATCH",
                        f"{element.level} {element.id!r} stages {index[target].kind} {target!r}; "
                        f"a {element.level} stages only {expected}s",
                    )
            for target in element.character_refs:
                ref(path, "character", target, ("character",))
            _check_containment(emit, path, element, LUDIC_LEVELS)

        elif entry.kind == "document":
            ref(path, "produced_in", element.produced_in, LUDIC_LEVELS)

    for root in scenario.pedagogical:
        if root.level != "module":
            emit(f"pedagogical/{root.id}", "E_LEVEL_MISMATCH", f"top-level {root.level} {root.id!r}; expected a module")
    for root in scenario.ludic:
        if root.level != "mission":
            emit(f"ludic/{root.id}", "E_LEVEL_MISMATCH", f"top-level {root.level} {root.id!r}; expected a mission")

    _check_orderings(scenario, emit)
    return sorted(set(out))


def _check_containment(emit, path, element, levels) -> None:
    depth = levels.index(element.level)
    for child in element.children:
        if depth + 1 >= len(levels) or child.level != levels[depth + 1]:
            emit(path, "E_LEVEL_MISMATCH", f"{element.level} {element.id!r} contains {child.level} {child.id!r}")


def _check_orderings(scenario: Scenario, emit) -> None:
    index = scenario.index
    for owner, graph in scenario.orderings.items():
        path = ordering_path(owner)
        if owner != ROOT:
            entry = index.get(owner)
            if entry is None or entry.kind != "mission":
                emit(path, "E_DANGLING_REF", f"ordering owner {owner!r} is not a mission")
                continue
        group = {c.id for c in siblings(scenario, owner)}
        nodes = set(graph.nodes)
        for node in graph.nodes:
            if node not in group:
                emit(path, "E_DANGLING_REF", f"node {node!r} is not a sibling in this group")
        for before, after in graph.edges:
            for end in (before, after):
                if end not in nodes:
                    emit(path, "E_DANGLING_REF", f"edge {before!r}->{after!r} names undeclared node {end!r}")
        edges = set(graph.edges)
        for i, bg in enumerate(graph.branch_groups):
            label = f"branch group {i} at {bg.split!r}"
            for end in (bg.split, *bg.branches):
                if end not in nodes:
                    emit(path, "E_DANGLING_REF", f"{label} names undeclared node {end!r}")
            distinct = set(bg.branches)
            if len(distinct) < 2:
                emit(path, "E_BAD_BRANCH", f"{label} has fewer than 2 branches")
            if bg.split in distinct:
                emit(path, "E_BAD_BRANCH", f"{label} lists its split node as a branch")
            for b in sorted(distinct - {bg.split}):
                if (bg.split, b) not in edges:
                    emit(path, "E_BAD_BRANCH", f"{label}: no edge {bg.split!r}->{b!r}")
        try:
            linear_order(graph)
        except CycleError as exc:
            emit(path, "E_ORDER_CYCLE", str(exc))
        unlisted = [c for c in siblings(scenario, owner) if c.id not in nodes]
        if unlisted and len(group) >= 2:
            emit(
                path,
                "W_UNORDERED_SIBLINGS",
                f"not in the ordering, document order assumed: {', '.join(c.id for c in unlisted)}",
            )

    groups = [(ROOT, scenario.ludic, "ludic")] + [
        (m.id, m.children, f"ludic/{m.id}") for m in scenario.ludic
    ]
    for owner, children, path in groups:
        if len(children) >= 2 and owner not in scenario.orderings:
            emit(path, "W_UNORDERED_SIBLINGS", f"{len(children)} siblings without ordering; document order assumed")
