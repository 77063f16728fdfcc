"""The closed catalog of nine design patterns, P1 to P9.

Each rule is data: a quantifier, a domain of candidate bindings and an ordered
list of conditions. A condition *expands* a binding (a dict from role name to
element id) into zero or more extended bindings; zero means the condition
fails for that candidate. The detector walks this structure; nothing here
evaluates on import.

Existential rules hold when some domain binding survives every condition.
Universal rules hold when the domain is non-empty and every in-scope domain
element survives every condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Optional

from ludoscene.capillarity import Effective, propagate
from ludoscene.model import REPORT_WRITING_TAG, Character, LudicElement, Scenario
from ludoscene.ordering import ordered_missions, ordered_siblings

Binding = dict
Expand = Callable[["Facts", Binding], list]


class Facts:
    """Derived views over one valid scenario, shared by all rules."""

    def __init__(self, scenario: Scenario, sets: Optional[dict[str, Effective]] = None) -> None:
        self.scenario = scenario
        self.sets = propagate(scenario) if sets is None else sets
        self.index = scenario.index
        self.learners = {p.id for p in scenario.participants if p.role_label == "learner"}
        self.teachers = {p.id for p in scenario.participants if p.role_label == "teacher"}

    def get(self, element_id: str):
        return self.index[element_id].element

    @cached_property
    def missions(self) -> list[LudicElement]:
        """Missions in play order."""
        return ordered_missions(self.scenario)

    def sequences(self, mission_id: str) -> list[LudicElement]:
        return ordered_siblings(self.scenario, mission_id)

    def learner_played(self, character: Character) -> bool:
        return any(p in self.learners for p in character.plays_refs)

    def teacher_played(self, character: Character) -> bool:
        return any(p in self.teachers for p in character.plays_refs)

    def linked_characters(self, element: LudicElement) -> list[Character]:
        """Characters linked to *element*, in character-list order."""
        refs = set(element.character_refs)
        return [c for c in self.scenario.characters if c.id in refs]


@dataclass(frozen=True)
class Condition:
    name: str
    text: str
    reason: str
    hint: str
    subject: str
    expand: Expand
    optional: bool = False


@dataclass(frozen=True)
class Domain:
    name: str
    text: str
    reason: str
    hint: str
    enumerate: Callable[[Facts], list]
    # universal rules only: which domain elements are quantified over
    scope: Optional[Callable[[Facts, Binding], bool]] = None


@dataclass(frozen=True)
class PatternRule:
    id: str
    name: str
    quantifier: str  # "exists" or "forall"
    statement: str
    domain: Domain
    conditions: tuple[Condition, ...]
    evidence_schema: tuple[tuple[str, str], ...]

    @property
    def universal(self) -> bool:
        return self.quantifier == "forall"

    def condition(self, name: str):
        if name == self.domain.name:
            return self.domain
        for cond in self.conditions:
            if cond.name == name:
                return cond
        raise KeyError(name)

    def render(self) -> str:
        lines = [f"{self.id}  {self.name}", f"  {self.statement}", f"  [{self.quantifier}] {self.domain.name}: {self.domain.text}"]
        for cond in self.conditions:
            tag = " (optional evidence)" if cond.optional else ""
            lines.append(f"    - {cond.name}: {cond.text}{tag}")
        lines.append("  evidence: " + ", ".join(f"{role}:{kind}" for role, kind in self.evidence_schema))
        return "\n".join(lines)


def _keep(test: Callable[[Facts, Binding], bool]) -> Expand:
    return lambda f, b: [b] if test(f, b) else []


def _bind(role: str, pick: Callable[[Facts, Binding], list]) -> Expand:
    return lambda f, b: [{**b, role: x} for x in pick(f, b)]


# P1 ---------------------------------------------------------------------

P1 = PatternRule(
    "P1",
    "Game teaser",
    "exists",
    "The first mission is a purely ludic teaser linked to a character played by "
    "learners and a character played by the teacher.",
    Domain(
        "first_mission",
        "the first mission in play order",
        "NO_MISSION",
        "add a teaser mission at the start of the scenario",
        lambda f: [{"first_mission": f.missions[0].id}] if f.missions else [],
    ),
    (
        Condition(
            "is_teaser", "its kind is teaser", "FIRST_MISSION_NOT_TEASER",
            "make the first mission {elements} a teaser", "first_mission",
            _keep(lambda f, b: f.get(b["first_mission"]).kind == "teaser"),
        ),
        Condition(
            "purely_ludic", "it stages no module", "TEASER_STAGES_MODULE",
            "remove the staging links of teaser {elements}", "first_mission",
            _keep(lambda f, b: not f.get(b["first_mission"]).staged_refs),
        ),
        Condition(
            "learner_character", "it is linked to a character played by a learner participant",
            "NO_LEARNER_CHARACTER", "link teaser {elements} to a character played by learners", "first_mission",
            _bind("learner_character", lambda f, b: [
                c.id for c in f.linked_characters(f.get(b["first_mission"])) if f.learner_played(c)
            ]),
        ),
        Condition(
            "teacher_character", "it is linked to a character played by a teacher participant",
            "NO_TEACHER_CHARACTER", "link teaser {elements} to a character played by the teacher", "first_mission",
            _bind("teacher_character", lambda f, b: [
                c.id for c in f.linked_characters(f.get(b["first_mission"])) if f.teacher_played(c)
            ]),
        ),
    ),
    (("first_mission", "mission"), ("learner_character", "character"), ("teacher_character", "character")),
)


# P2 ---------------------------------------------------------------------

def _two_disciplines(f: Facts, b: Binding) -> list:
    refs = f.get(b["module"]).competence_refs
    for i, first in enumerate(refs):
        for second in refs[i + 1:]:
            if f.get(first).discipline != f.get(second).discipline:
                return [{**b, "competence_a": first, "competence_b": second}]
    return []


P2 = PatternRule(
    "P2",
    "Pluridisciplinary problems",
    "forall",
    "There is at least one module, and every module is linked to competences of "
    "at least two distinct disciplines.",
    Domain(
        "modules",
        "every module",
        "NO_MODULE",
        "add a module linked to competences of two disciplines",
        lambda f: [{"module": m.id} for m in f.scenario.pedagogical],
    ),
    (
        Condition(
            "pluridisciplinary", "its competences span at least two discipline labels", "SINGLE_DISCIPLINE",
            "add a competence of a second discipline to module {elements}", "module", _two_disciplines,
        ),
    ),
    (("module", "module"), ("competence_a", "competence"), ("competence_b", "competence")),
)


# P3 ---------------------------------------------------------------------

P3 = PatternRule(
    "P3",
    "Personify an expert group",
    "exists",
    "Some learner team of 2 to 4 members plays a character of archetype expert_group.",
    Domain(
        "learner_team",
        "a team participant with role learner",
        "NO_LEARNER_TEAM",
        "group the learners into a team participant",
        lambda f: [
            {"team": p.id} for p in f.scenario.participants if p.kind == "team" and p.role_label == "learner"
        ],
    ),
    (
        Condition(
            "team_size", "it has between 2 and 4 members", "TEAM_SIZE_OUT_OF_RANGE",
            "resize team {elements} to between 2 and 4 members", "team",
            _keep(lambda f, b: 2 <= len(f.get(b["team"]).members) <= 4),
        ),
        Condition(
            "plays_expert_group", "it plays a character of archetype expert_group", "NO_EXPERT_CHARACTER",
            "have team {elements} play an expert_group character", "team",
            _bind("expert_character", lambda f, b: [
                c.id for c in f.scenario.characters if c.archetype == "expert_group" and b["team"] in c.plays_refs
            ]),
        ),
    ),
    (("team", "participant"), ("expert_character", "character")),
)


# P4 ---------------------------------------------------------------------

P4 = PatternRule(
    "P4",
    "Explore different paths",
    "exists",
    "Some ordering of missions, or of the sequences of a mission, has a branch group.",
    Domain(
        "branch_group",
        "a branch group in any ordering graph",
        "NO_BRANCH_GROUP",
        "add a branch group (parallel or alternative paths) to a mission or sequence ordering",
        lambda f: [
            {"split": g.split, "branch": g.branches}
            for graph in f.scenario.orderings.values()
            for g in graph.branch_groups
        ],
    ),
    (),
    (("split", "mission|sequence"), ("branch", "mission|sequence")),
)


# P5 ---------------------------------------------------------------------

P5 = PatternRule(
    "P5",
    "Teacher as support",
    "exists",
    "A teacher participant plays a mentor character that helps a character played "
    "by learners. A hidden evaluator played by the same teacher is reported when present.",
    Domain(
        "teacher",
        "a participant with role teacher",
        "NO_TEACHER",
        "add a teacher participant",
        lambda f: [{"teacher": p.id} for p in f.scenario.participants if p.role_label == "teacher"],
    ),
    (
        Condition(
            "plays_mentor", "it plays a character of archetype mentor", "NO_TEACHER_MENTOR",
            "have {elements} play a mentor character", "teacher",
            _bind("mentor", lambda f, b: [
                c.id for c in f.scenario.characters if c.archetype == "mentor" and b["teacher"] in c.plays_refs
            ]),
        ),
        Condition(
            "helps_learner_character", "the mentor helps a character played by a learner participant",
            "MENTOR_HELPS_NO_LEARNER_CHARACTER", "make mentor {elements} help a character played by learners",
            "mentor",
            _bind("helped_character", lambda f, b: [
                c.id for c in f.scenario.characters
                if c.id in f.get(b["mentor"]).helps_refs and f.learner_played(c)
            ]),
        ),
        Condition(
            "hidden_evaluator", "the teacher also plays a hidden evaluator character", "NO_HIDDEN_EVALUATOR",
            "optionally let {elements} secretly play a hidden evaluator", "teacher",
            _bind("hidden_evaluator", lambda f, b: [
                c.id for c in f.scenario.characters
                if c.archetype == "evaluator" and c.visibility == "hidden" and b["teacher"] in c.plays_refs
            ]),
            optional=True,
        ),
    ),
    (("teacher", "participant"), ("mentor", "character"), ("helped_character", "character"),
     ("hidden_evaluator", "character")),
)


# P6 / P7 ----------------------------------------------------------------

def _core_missions(f: Facts) -> list:
    return [{"mission": m.id} for m in f.scenario.ludic if m.kind == "core"]


def _has_sequences(f: Facts, b: Binding) -> bool:
    return bool(f.get(b["mission"]).children)


def _edge_sequence(f: Facts, mission_id: str, position: int) -> list:
    seqs = f.sequences(mission_id)
    return seqs[position:][:1] if position == 0 else seqs[-1:]


def _framing_rule(rule_id: str, name: str, kind: str, position: int, verb: str) -> PatternRule:
    edge = "first" if position == 0 else "last"
    return PatternRule(
        rule_id,
        name,
        "forall",
        f"There is at least one core mission, and in every core mission with sequences the "
        f"{edge} sequence has kind {kind} and is linked to a mentor played by the teacher and "
        f"to a character played by learners. Teaser and report missions are exempt.",
        Domain(
            "core_missions",
            "every core mission that has at least one sequence",
            "NO_CORE_MISSION",
            "add a mission of kind core",
            _core_missions,
            _has_sequences,
        ),
        (
            Condition(
                f"{verb}_with_{kind}", f"its {edge} sequence in play order has kind {kind}",
                f"{edge.upper()}_SEQUENCE_NOT_{kind.upper()}",
                f"{verb} mission {{elements}} with a {kind} sequence", "mission",
                _bind(kind, lambda f, b: [
                    s.id for s in _edge_sequence(f, b["mission"], position) if s.kind == kind
                ]),
            ),
            Condition(
                f"{kind}_teacher_mentor", f"the {kind} is linked to a mentor played by a teacher participant",
                f"{kind.upper()}_WITHOUT_TEACHER_MENTOR",
                f"link {kind} {{elements}} to a mentor played by the teacher", kind,
                _bind("mentor", lambda f, b: [
                    c.id for c in f.linked_characters(f.get(b[kind]))
                    if c.archetype == "mentor" and f.teacher_played(c)
                ]),
            ),
            Condition(
                f"{kind}_learner_character", f"the {kind} is linked to a character played by a learner participant",
                f"{kind.upper()}_WITHOUT_LEARNER_CHARACTER",
                f"link {kind} {{elements}} to a character played by learners", kind,
                _bind("learner_character", lambda f, b: [
                    c.id for c in f.linked_characters(f.get(b[kind])) if f.learner_played(c)
                ]),
            ),
        ),
        (("mission", "mission"), (kind, "sequence"), ("mentor", "character"), ("learner_character", "character")),
    )


P6 = _framing_rule("P6", "Briefing", "briefing", 0, "open")
P7 = _framing_rule("P7", "Debriefing", "debriefing", -1, "close")


# P8 ---------------------------------------------------------------------

P8 = PatternRule(
    "P8",
    "Multi-viewpoint teamwork",
    "exists",
    "Some team participant has members with at least two distinct viewpoint labels "
    "and takes part in at least one mission.",
    Domain(
        "team",
        "a team participant",
        "NO_TEAM",
        "add a team participant",
        lambda f: [{"team": p.id} for p in f.scenario.participants if p.kind == "team"],
    ),
    (
        Condition(
            "divergent_viewpoints", "its members carry at least two distinct viewpoint labels",
            "NO_DIVERGENT_VIEWPOINTS", "give the members of team {elements} at least two distinct viewpoints", "team",
            _keep(lambda f, b: len(f.get(b["team"]).viewpoints) >= 2),
        ),
        Condition(
            "in_mission", "it is among the effective participants of some mission", "TEAM_IN_NO_MISSION",
            "involve team {elements} in a mission, through a staged module or a character it plays", "team",
            _bind("mission", lambda f, b: [
                m.id for m in f.scenario.ludic if b["team"] in f.sets[m.id].participants
            ]),
        ),
    ),
    (("team", "participant"), ("mission", "mission")),
)


# P9 ---------------------------------------------------------------------

def _report(f: Facts, b: Binding) -> list:
    mission = f.get(b["last_mission"])
    if mission.kind == "report":
        return [b]
    return [
        {**b, "report_module": ref}
        for ref in mission.staged_refs
        if REPORT_WRITING_TAG in f.get(ref).tags
    ]


P9 = PatternRule(
    "P9",
    "Post-game analysis report",
    "exists",
    "The last mission has kind report, or stages a module tagged report-writing.",
    Domain(
        "last_mission",
        "the last mission in play order",
        "NO_MISSION",
        "add a final report mission",
        lambda f: [{"last_mission": f.missions[-1].id}] if f.missions else [],
    ),
    (
        Condition(
            "report", "it has kind report or stages a module tagged report-writing", "LAST_MISSION_NOT_REPORT",
            "make the last mission {elements} a report mission, or stage a module tagged report-writing",
            "last_mission", _report,
        ),
    ),
    (("last_mission", "mission"), ("report_module", "module")),
)


CATALOG: tuple[PatternRule, ...] = (P1, P2, P3, P4, P5, P6, P7, P8, P9)
PATTERN_IDS: tuple[str, ...] = tuple(r.id for r in CATALOG)


def catalog() -> list[PatternRule]:
    return list(CATALOG)


def rule(pattern_id: str) -> PatternRule:
    for r in CATALOG:
        if r.id == pattern_id:
            return r
    raise KeyError(f"unknown pattern {pattern_id!r}; expected one of {', '.join(PATTERN_IDS)}")


def rulebook() -> str:
    """Human-readable text of the whole catalog."""
    return "\n\n".join(r.render() for r in CATALOG) + "\n"
