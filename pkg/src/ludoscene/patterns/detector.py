"""Evaluate the pattern catalog against a scenario."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from ludoscene.model import Scenario
from ludoscene.patterns.catalog import CATALOG, PATTERN_IDS, Facts, PatternRule, rule
from ludoscene.validation import InvalidScenarioError, validate

REPORT_VERSION = 1


@dataclass(frozen=True)
class Unmet:
    condition: str
    reason: str
    element: Optional[str] = None

    def to_dict(self) -> dict:
        return {"condition": self.condition, "reason": self.reason, "element": self.element}


@dataclass(frozen=True)
class PatternResult:
    pattern_id: str
    name: str
    present: bool
    evidence: tuple[tuple[str, str], ...] = ()
    unmet: tuple[Unmet, ...] = ()
    # universal rules only; an extension over plain presence
    coverage: Optional[float] = None
    condition_coverage: tuple[tuple[str, float], ...] = ()

    def to_dict(self) -> dict:
        return {
            "id": self.pattern_id,
            "name": self.name,
            "present": self.present,
            "evidence": [{"role": r, "id": i} for r, i in self.evidence],
            "unmet": [u.to_dict() for u in self.unmet],
            "coverage": self.coverage,
            "condition_coverage": {name: value for name, value in self.condition_coverage},
        }


@dataclass(frozen=True)
class PatternReport:
    results: tuple[PatternResult, ...]

    @property
    def present(self) -> frozenset[str]:
        return frozenset(r.pattern_id for r in self.results if r.present)

    def present_ids(self) -> list[str]:
        return [r.pattern_id for r in self.results if r.present]

    def __getitem__(self, pattern_id: str) -> PatternResult:
        for r in self.results:
            if r.pattern_id == pattern_id:
                return r
        raise KeyError(pattern_id)

    def to_dict(self) -> dict:
        return {
            "report_version": REPORT_VERSION,
            "extensions": ["coverage"],
            "present": self.present_ids(),
            "patterns": [r.to_dict() for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"


def _evidence(rule_: PatternRule, binding: dict) -> list[tuple[str, str]]:
    out = []
    for role, _kind in rule_.evidence_schema:
        value = binding.get(role)
        if value is None:
            continue
        if isinstance(value, tuple):
            out.extend((role, v) for v in value)
        else:
            out.append((role, value))
    return out


def _run(rule_: PatternRule, facts: Facts, binding: dict):
    """Push one binding through the conditions.

    Returns the surviving bindings and None, or, on failure, the bindings that
    reached the failing condition and that condition.
    """
    current = [binding]
    for cond in rule_.conditions:
        expanded = [nb for b in current for nb in cond.expand(facts, b)]
        if not expanded:
            if cond.optional:
                continue
            return current, cond
        current = expanded
    return current, None


def evaluate(rule_: PatternRule, facts: Facts) -> PatternResult:
    domain = rule_.domain.enumerate(facts)
    if not domain:
        return PatternResult(
            rule_.id, rule_.name, False,
            unmet=(Unmet(rule_.domain.name, rule_.domain.reason),),
            coverage=0.0 if rule_.universal else None,
            condition_coverage=tuple((c.name, 0.0) for c in rule_.conditions if not c.optional) if rule_.universal else (),
        )
    if rule_.universal:
        return _evaluate_forall(rule_, facts, domain)
    return _evaluate_exists(rule_, facts, domain)


def _evaluate_exists(rule_: PatternRule, facts: Facts, domain: list) -> PatternResult:
    # Stage-wise filtering keeps the first stage that empties the candidate
    # pool, which is what the report explains.
    current = domain
    for cond in rule_.conditions:
        expanded = []
        failed = []
        for b in current:
            nb = cond.expand(facts, b)
            if nb:
                expanded.extend(nb)
            else:
                failed.append(b)
        if not expanded:
            if cond.optional:
                continue
            subjects = list(dict.fromkeys(b[cond.subject] for b in failed))
            return PatternResult(
                rule_.id, rule_.name, False,
                unmet=tuple(Unmet(cond.name, cond.reason, s) for s in subjects),
            )
        current = expanded
    return PatternResult(rule_.id, rule_.name, True, evidence=tuple(_evidence(rule_, current[0])))


def _evaluate_forall(rule_: PatternRule, facts: Facts, domain: list) -> PatternResult:
    scope = rule_.domain.scope
    quantified = [b for b in domain if scope is None or scope(facts, b)]
    evidence: list[tuple[str, str]] = []
    unmet: list[Unmet] = []
    failures = {c.name: 0 for c in rule_.conditions if not c.optional}
    for b in quantified:
        survivors, cond = _run(rule_, facts, b)
        if cond is None:
            evidence.extend(_evidence(rule_, survivors[0]))
        else:
            failures[cond.name] += 1
            unmet.append(Unmet(cond.name, cond.reason, survivors[0][cond.subject]))
    total = len(quantified)
    coverage = 1.0 if total == 0 else (total - len(unmet)) / total
    per_condition = tuple(
        (name, 1.0 if total == 0 else (total - n) / total) for name, n in failures.items()
    )
    return PatternResult(
        rule_.id, rule_.name, not unmet,
        evidence=tuple(evidence) if not unmet else (),
        unmet=tuple(unmet),
        coverage=coverage,
        condition_coverage=per_condition,
    )


def detect(scenario: Scenario) -> PatternReport:
    """Evaluate P1..P9. Raises InvalidScenarioError when validation finds errors."""
    diagnostics = validate(scenario)
    if any(d.is_error for d in diagnostics):
        raise InvalidScenarioError(diagnostics)
    facts = Facts(scenario)
    return PatternReport(tuple(evaluate(r, facts) for r in CATALOG))


@dataclass(frozen=True)
class PatternDiff:
    before: frozenset[str]
    after: frozenset[str]
    added: frozenset[str] = field(init=False)
    removed: frozenset[str] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "before", frozenset(self.before))
        object.__setattr__(self, "after", frozenset(self.after))
        object.__setattr__(self, "added", self.after - self.before)
        object.__setattr__(self, "removed", self.before - self.after)

    def to_dict(self) -> dict:
        return {
            "report_version": REPORT_VERSION,
            "before": sort_ids(self.before),
            "after": sort_ids(self.after),
            "added": sort_ids(self.added),
            "removed": sort_ids(self.removed),
        }


def sort_ids(ids: Iterable[str]) -> list[str]:
    return sorted(ids, key=PATTERN_IDS.index)


def diff(before: Union[PatternReport, Iterable[str]], after: Union[PatternReport, Iterable[str]]) -> PatternDiff:
    def ids(x):
        return x.present if isinstance(x, PatternReport) else frozenset(x)

    return PatternDiff(ids(before), ids(after))


def explain(report: PatternReport, pattern_id: str) -> str:
    """Readable finding for one pattern: evidence when present, nearest miss when absent."""
    rule_ = rule(pattern_id)
    result = report[pattern_id]
    if result.present:
        lines = [f"{result.pattern_id} {result.name}: present"]
        width = max((len(role) for role, _ in result.evidence), default=0)
        lines += [f"  {role.ljust(width)}  {eid}" for role, eid in result.evidence]
        if result.coverage is not None:
            lines.append(f"  coverage {result.coverage:.2f} (extension)")
        return "\n".join(lines) + "\n"

    head = f"{result.pattern_id} {result.name}: absent"
    if result.coverage is not None:
        head += f" (coverage {result.coverage:.2f}, extension)"
    lines = [head]

    order = [rule_.domain.name] + [c.name for c in rule_.conditions]
    first = min(result.unmet, key=lambda u: order.index(u.condition))
    lines.append(f"  first failing condition: {first.condition} ({first.reason})")

    target = first.condition
    target_cov = None
    cov = dict(result.condition_coverage)
    if target != rule_.domain.name and cov:
        failing = {u.condition for u in result.unmet}
        target = max(failing, key=lambda name: (cov[name], -order.index(name)))
        target_cov = cov[target]
    elements = [u.element for u in result.unmet if u.condition == target and u.element is not None]
    hint = rule_.condition(target).hint.format(elements=", ".join(elements))
    if target_cov is not None:
        hint += f" (condition coverage {target_cov:.2f})"
    lines.append(f"  hint: {hint}")
    return "\n".join(lines) + "\n"
