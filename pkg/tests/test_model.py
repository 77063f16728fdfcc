from __future__ import annotations

import pytest

from builders import three_by_three
from ludoscene.model import (
    Character,
    LudicElement,
    Member,
    Participant,
    PedagogicalElement,
    Scenario,
    replace_element,
    resolve,
)


def test_lists_become_tuples():
    e = PedagogicalElement("m", "module", "M", competence_refs=["c1"], tags=["x"])
    assert e.competence_refs == ("c1",)
    assert e.tags == ("x",)


@pytest.mark.parametrize(
    "build",
    [
        lambda: LudicElement("m", "mission", "M", "briefing"),
        lambda: LudicElement("m", "chapter", "M", "core"),
        lambda: Character("c", "C", "wizard"),
        lambda: Character("c", "C", "mentor", visibility="invisible"),
        lambda: Participant("p", "P", "crowd", "learner"),
        lambda: Participant("p", "P", "role", "student"),
        lambda: LudicElement("s", "sequence", "S", "narrative", interaction_mode="chaos"),
    ],
)
def test_out_of_range_enums_are_rejected(build):
    with pytest.raises(ValueError):
        build()


def test_role_participant_cannot_have_members():
    with pytest.raises(ValueError):
        Participant("p", "P", "role", "teacher", (Member("x"),))


def test_viewpoints_ignore_unlabelled_members():
    team = Participant("t", "T", "team", "learner", (Member("a", "x"), Member("b"), Member("c", "y"), Member("d", "x")))
    assert team.viewpoints == {"x", "y"}


def test_walk_paths_follow_containment():
    paths = [e.path for e in three_by_three().walk()]
    assert paths == [
        "competences/c1",
        "competences/c2",
        "pedagogical/module",
        "pedagogical/module/act",
        "pedagogical/module/act/activity",
        "ludic/mission",
        "ludic/mission/sequence",
        "ludic/mission/sequence/level",
    ]


def test_resolve_and_index():
    sc = three_by_three()
    entry = resolve(sc, "act")
    assert entry.kind == "act"
    assert entry.parent == "module"
    assert resolve(sc, "nope") is None
    assert sc.element_count() == 8
    assert [e.id for e in sc.ludic_elements()] == ["mission", "sequence", "level"]


def test_index_keeps_first_duplicate():
    sc = Scenario(pedagogical=(
        PedagogicalElement("x", "module", "first", competence_refs=("c",)),
        PedagogicalElement("x", "module", "second", competence_refs=("c",)),
    ))
    assert sc.index["x"].element.title == "first"
    assert len(list(sc.walk())) == 2


def test_replace_element_rebuilds_nested_trees():
    sc = three_by_three()
    changed = replace_element(sc, "level", title="Renamed")
    assert resolve(changed, "level").element.title == "Renamed"
    assert resolve(sc, "level").element.title == "Level"
    with pytest.raises(KeyError):
        replace_element(sc, "ghost", title="x")
