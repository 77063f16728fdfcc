from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from builders import framed_missions
from ludoscene.corpus import ADDED_PATTERNS, FIXTURE_NAMES, fixture
from ludoscene.corpus.generate import random_scenario
from ludoscene.model import (
    Character,
    Competence,
    Member,
    Participant,
    PedagogicalElement,
    Scenario,
    replace_element,
)
from ludoscene.patterns import detect, diff, explain
from ludoscene.patterns.catalog import PATTERN_IDS
from ludoscene.validation import InvalidScenarioError

seeds = st.integers(min_value=0, max_value=100_000)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_pattern_sets(name):
    f = fixture(name)
    assert detect(f.scenario).present == f.expected_patterns


@pytest.mark.parametrize("team", sorted(ADDED_PATTERNS))
def test_team_project_diffs(team):
    d = diff(detect(fixture(f"{team}_before").scenario), detect(fixture(f"{team}_after").scenario))
    assert d.added == ADDED_PATTERNS[team]
    assert d.removed == frozenset()


def test_diff_of_identical_sets_is_empty():
    d = diff({"P1", "P2"}, ["P2", "P1"])
    assert d.added == d.removed == frozenset()
    assert diff({"P3"}, {"P1"}).to_dict()["removed"] == ["P3"]


def test_empty_scenario_has_reasons_for_everything():
    report = detect(Scenario())
    assert report.present == frozenset()
    reasons = {r.pattern_id: r.unmet[0].reason for r in report.results}
    assert reasons == {
        "P1": "NO_MISSION", "P2": "NO_MODULE", "P3": "NO_LEARNER_TEAM", "P4": "NO_BRANCH_GROUP",
        "P5": "NO_TEACHER", "P6": "NO_CORE_MISSION", "P7": "NO_CORE_MISSION", "P8": "NO_TEAM", "P9": "NO_MISSION",
    }


def test_detect_refuses_invalid_scenarios():
    with pytest.raises(InvalidScenarioError):
        detect(Scenario(pedagogical=(PedagogicalElement("m", "module", "M"),)))


def test_present_iff_no_unmet_and_full_coverage():
    for name in FIXTURE_NAMES:
        for r in detect(fixture(name).scenario).results:
            assert r.present == (not r.unmet)
            if r.present and r.coverage is not None:
                assert r.coverage == 1.0


def test_p1_evidence_names_the_three_roles():
    ev = dict(detect(fixture("LS").scenario)["P1"].evidence)
    assert ev == {"first_mission": "m-hiring", "learner_character": "interns", "teacher_character": "maggy"}


def test_p5_reports_hidden_evaluator_only_as_optional_evidence():
    ls = dict(detect(fixture("LS").scenario)["P5"].evidence)
    assert ls["hidden_evaluator"] == "maggy"
    pu = detect(fixture("PU").scenario)["P5"]
    assert pu.present and "hidden_evaluator" not in dict(pu.evidence)


def test_p6_nearest_miss_with_three_of_four_briefed():
    report = detect(framed_missions(briefed=3, total=4))
    result = report["P6"]
    assert not result.present
    assert result.coverage == 0.75
    assert [u.element for u in result.unmet] == ["mission-4"]
    text = explain(report, "P6")
    assert text == (
        "P6 Briefing: absent (coverage 0.75, extension)\n"
        "  first failing condition: open_with_briefing (FIRST_SEQUENCE_NOT_BRIEFING)\n"
        "  hint: open mission mission-4 with a briefing sequence (condition coverage 0.75)\n"
    )
    assert report["P7"].present


def test_p6_vacuity_and_scope():
    assert detect(framed_missions(0, 0))["P6"].unmet[0].reason == "NO_CORE_MISSION"


def _single_discipline() -> Scenario:
    return Scenario(
        competences=(Competence("a", "A", "maths"), Competence("b", "B", "maths"), Competence("c", "C", "art")),
        pedagogical=(
            PedagogicalElement("mod-1", "module", "One", competence_refs=("a", "c")),
            PedagogicalElement("mod-2", "module", "Two", competence_refs=("a", "b")),
        ),
    )


def test_p2_hint_names_the_single_discipline_module():
    report = detect(_single_discipline())
    assert report["P2"].coverage == 0.5
    assert "  hint: add a competence of a second discipline to module mod-2 (condition coverage 0.50)\n" in explain(
        report, "P2"
    )


def test_explain_present_lists_evidence():
    text = explain(detect(fixture("PU").scenario), "P1")
    assert text.splitlines()[0] == "P1 Game teaser: present"
    assert "first_mission      m-kickoff" in text


def test_explain_unknown_pattern():
    with pytest.raises(KeyError):
        explain(detect(Scenario()), "P0")


def test_explain_domain_failure_uses_domain_hint():
    text = explain(detect(Scenario()), "P4")
    assert "first failing condition: branch_group (NO_BRANCH_GROUP)" in text


def test_report_json_is_versioned_and_stable():
    report = detect(fixture("LS").scenario)
    data = json.loads(report.to_json())
    assert data["report_version"] == 1
    assert data["present"] == ["P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8"]
    assert [p["id"] for p in data["patterns"]] == list(PATTERN_IDS)
    assert report.to_json() == detect(fixture("LS").scenario).to_json()


@settings(max_examples=300, deadline=None)
@given(seeds)
def test_verdicts_match_brute_force(seed):
    sc = random_scenario(seed)
    assert detect(sc).present == oracle.present(sc)


def _add_unrelated(sc: Scenario, draw) -> Scenario:
    choice = draw(st.sampled_from(["team", "character", "competence", "module"]))
    if choice == "team":
        n = draw(st.integers(min_value=1, max_value=5))
        team = Participant("extra-team", "Extra", "team", draw(st.sampled_from(["learner", "teacher"])),
                           tuple(Member(f"x{i}", draw(st.sampled_from([None, "u", "v"]))) for i in range(n)))
        return Scenario(sc.meta, sc.competences, sc.participants + (team,), sc.characters,
                        sc.pedagogical, sc.ludic, sc.orderings, sc.documents)
    if choice == "character":
        plays = tuple(draw(st.lists(st.sampled_from([p.id for p in sc.participants]), unique=True, max_size=2))) \
            if sc.participants else ()
        ch = Character("extra-character", "Extra", draw(st.sampled_from(["mentor", "expert_group", "other"])),
                       plays_refs=plays)
        return Scenario(sc.meta, sc.competences, sc.participants, sc.characters + (ch,),
                        sc.pedagogical, sc.ludic, sc.orderings, sc.documents)
    if choice == "competence":
        comp = Competence("extra-competence", "Extra", "extra-discipline")
        return Scenario(sc.meta, sc.competences + (comp,), sc.participants, sc.characters,
                        sc.pedagogical, sc.ludic, sc.orderings, sc.documents)
    if not sc.competences:
        return sc
    module = PedagogicalElement("extra-module", "module", "Extra", competence_refs=(sc.competences[0].id,))
    return Scenario(sc.meta, sc.competences, sc.participants, sc.characters,
                    sc.pedagogical + (module,), sc.ludic, sc.orderings, sc.documents)


@settings(max_examples=200, deadline=None)
@given(seeds, st.data())
def test_existential_rules_survive_insertions(seed, data):
    sc = random_scenario(seed)
    grown = _add_unrelated(sc, data.draw)
    before, after = detect(sc).present, detect(grown).present
    for pid in ("P3", "P4", "P8"):
        if pid in before:
            assert pid in after


@settings(max_examples=200, deadline=None)
@given(seeds, st.data())
def test_breaking_one_module_drops_p2_coverage_by_one_share(seed, data):
    sc = random_scenario(seed)
    report = detect(sc)
    if "P2" not in report.present:
        return
    module = data.draw(st.sampled_from(sc.pedagogical))
    first = sc.index[module.competence_refs[0]].element.discipline
    same = tuple(c for c in module.competence_refs if sc.index[c].element.discipline == first)
    broken = detect(replace_element(sc, module.id, competence_refs=same))["P2"]
    assert not broken.present
    assert broken.coverage == pytest.approx(1.0 - 1 / len(sc.pedagogical))
    assert [u.element for u in broken.unmet] == [module.id]


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_universal_coverage_is_a_fraction(seed):
    report = detect(random_scenario(seed))
    for r in report.results:
        if r.coverage is not None:
            assert 0.0 <= r.coverage <= 1.0
            assert (r.coverage == 1.0) == r.present or r.unmet[0].reason.startswith("NO_")
