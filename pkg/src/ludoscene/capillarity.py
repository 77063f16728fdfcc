"""Competences and participants carried onto ludic elements by staging links.

A ludic element inherits the competences and participants of every
pedagogical element it stages, plus the participants playing the characters
it is linked to. Transfer is direct only: a mission does not inherit from its
sequences. :func:`aggregate_subtree` gives the rolled-up view.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ludoscene.model import LUDIC_LEVELS, Scenario


@dataclass(frozen=True)
class Effective:
    competences: frozenset[str] = frozenset()
    participants: frozenset[str] = frozenset()

    def __or__(self, other: "Effective") -> "Effective":
        return Effective(self.competences | other.competences, self.participants | other.participants)


EffectiveSets = Mapping[str, Effective]


class UnknownElementError(KeyError):
    pass


def effective(scenario: Scenario, element) -> Effective:
    index = scenario.index
    competences: set[str] = set()
    participants: set[str] = set()
    for target in element.staged_refs:
        staged = index[target].element
        competences.update(staged.competence_refs)
        participants.update(staged.participant_refs)
    for target in element.character_refs:
        participants.update(index[target].element.plays_refs)
    return Effective(frozenset(competences), frozenset(participants))


def propagate(scenario: Scenario) -> dict[str, Effective]:
    """Effective sets of every ludic element, keyed by id in document order.

    Expects a scenario without error diagnostics.
    """
    return {element.id: effective(scenario, element) for element in scenario.ludic_elements()}


def aggregate_subtree(scenario: Scenario, element_id: str, sets: EffectiveSets | None = None) -> Effective:
    """Union of the effective sets of a ludic element and all its descendants."""
    entry = scenario.index.get(element_id)
    if entry is None or entry.kind not in LUDIC_LEVELS:
        raise UnknownElementError(element_id)
    if sets is None:
        sets = propagate(scenario)

    total = Effective()
    stack = [entry.element]
    while stack:
        node = stack.pop()
        total = total | sets[node.id]
        stack.extend(node.children)
    return total
