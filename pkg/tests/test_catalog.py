from __future__ import annotations

from pathlib import Path

import pytest

from ludoscene.model import LUDIC_LEVELS, PEDAGOGICAL_LEVELS
from ludoscene.patterns import catalog, rulebook
from ludoscene.patterns.catalog import rule

GOLDEN = Path(__file__).parent / "golden" / "rulebook.txt"
ELEMENT_KINDS = {"competence", "participant", "character", "document", *PEDAGOGICAL_LEVELS, *LUDIC_LEVELS}


def test_nine_rules_in_order():
    assert [r.id for r in catalog()] == [f"P{i}" for i in range(1, 10)]


def test_quantifiers():
    universal = {r.id for r in catalog() if r.universal}
    assert universal == {"P2", "P6", "P7"}
    assert {r.quantifier for r in catalog()} == {"exists", "forall"}


def test_evidence_schema_names_model_kinds():
    for r in catalog():
        for role, kind in r.evidence_schema:
            assert set(kind.split("|")) <= ELEMENT_KINDS, (r.id, role, kind)


def test_condition_names_are_unique_per_rule():
    for r in catalog():
        names = [r.domain.name] + [c.name for c in r.conditions]
        assert len(names) == len(set(names))
        assert all(c.reason.isupper() for c in r.conditions)


def test_rulebook_matches_golden_file():
    assert rulebook() == GOLDEN.read_text(encoding="utf-8")


def test_rulebook_mentions_the_key_constraints():
    text = rulebook()
    for phrase in ("2 to 4 members", "two distinct disciplines", "kind report", "Teaser and report missions are exempt"):
        assert phrase in text


def test_unknown_rule():
    with pytest.raises(KeyError):
        rule("P10")


def test_only_p5_has_optional_evidence():
    optional = [(r.id, c.name) for r in catalog() for c in r.conditions if c.optional]
    assert optional == [("P5", "hidden_evaluator")]
