from __future__ import annotations

from collections import Counter

import pytest

from ludoscene.corpus import (
    CORPUS_ENV,
    EXPECTED_PATTERNS,
    FIXTURE_NAMES,
    UnknownFixtureError,
    corpus_dir,
    fixture,
    random_scenario,
)
from ludoscene.model import (
    ARCHETYPES,
    BRANCH_SEMANTICS,
    INTERACTION_MODES,
    LUDIC_KINDS,
    PARTICIPANT_KINDS,
    ROLE_LABELS,
    VISIBILITIES,
)
from ludoscene.validation import validate

SAMPLE = [random_scenario(seed) for seed in range(1000)]


def test_names_and_expected_sets():
    assert len(FIXTURE_NAMES) == 10
    assert EXPECTED_PATTERNS["LS"] == {f"P{i}" for i in range(1, 9)}
    assert EXPECTED_PATTERNS["PU"] == {"P1", "P2", "P3", "P4", "P5", "P6", "P7", "P9"}
    assert fixture("LG2_after").expected_patterns == {"P1", "P2", "P3", "P4"}


def test_pu_has_a_team_of_three():
    sizes = [len(p.members) for p in fixture("PU").scenario.participants if p.kind == "team"]
    assert 3 in sizes


@pytest.mark.parametrize("name", ["LS", "PU"])
def test_reconstructed_fixtures_say_so(name):
    assert any("reconstructed" in note for note in fixture(name).scenario.meta.notes)


def test_team_project_fixtures_say_they_are_synthetic():
    for name in FIXTURE_NAMES[2:]:
        assert any("synthetic" in note for note in fixture(name).scenario.meta.notes)


def test_unknown_fixture():
    with pytest.raises(UnknownFixtureError):
        fixture("LG5_before")


def test_env_override(tmp_path, monkeypatch):
    (tmp_path / "LS.lgs.json").write_text(fixture("PU").document, encoding="utf-8")
    monkeypatch.setenv(CORPUS_ENV, str(tmp_path))
    assert corpus_dir() == tmp_path
    assert fixture("LS").scenario.meta.title.startswith("Puissance")


def test_generator_is_deterministic():
    assert random_scenario(7) == random_scenario(7)
    assert random_scenario(7) != random_scenario(8)
    with pytest.raises(ValueError):
        random_scenario(1, max_elements=0)


def test_thousand_seeds_are_clean_and_small():
    for sc in SAMPLE:
        assert validate(sc) == []
        assert sc.element_count() <= 30


def test_tight_budget_is_respected():
    for seed in range(200):
        assert random_scenario(seed, max_elements=3).element_count() <= 3


def test_every_enum_value_is_exercised():
    seen = Counter()
    for sc in SAMPLE:
        for p in sc.participants:
            seen[("participant", p.kind)] += 1
            seen[("role", p.role_label)] += 1
        for c in sc.characters:
            seen[("archetype", c.archetype)] += 1
            seen[("visibility", c.visibility)] += 1
        for e in sc.ludic_elements():
            seen[(e.level, e.kind)] += 1
            if e.interaction_mode:
                seen[("mode", e.interaction_mode)] += 1
        for graph in sc.orderings.values():
            for g in graph.branch_groups:
                seen[("semantics", g.semantics)] += 1
    wanted = (
        [("participant", k) for k in PARTICIPANT_KINDS]
        + [("role", r) for r in ROLE_LABELS]
        + [("archetype", a) for a in ARCHETYPES]
        + [("visibility", v) for v in VISIBILITIES]
        + [(level, kind) for level, kinds in LUDIC_KINDS.items() for kind in kinds]
        + [("mode", m) for m in INTERACTION_MODES]
        + [("semantics", s) for s in BRANCH_SEMANTICS]
    )
    assert [w for w in wanted if not seen[w]] == []


def test_bundled_files_match_the_builder():
    import subprocess
    import sys
    from pathlib import Path

    script = Path(__file__).parent.parent / "tools" / "build_corpus.py"
    proc = subprocess.run([sys.executable, str(script), "--check"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0, proc.stderr
