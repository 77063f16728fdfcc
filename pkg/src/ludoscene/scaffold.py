"""Starter scenario shell for an epistemic game.

The shell pre-builds a teacher and a learner team with their characters, an
opening teaser mission, and core missions framed by briefing and debriefing
sequences. Text fields are visible placeholders meant to be rewritten.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ludoscene.model import (
    ROOT,
    Character,
    Competence,
    LudicElement,
    Member,
    Meta,
    OrderingGraph,
    Participant,
    PedagogicalElement,
    Scenario,
)

PLACEHOLDER_NOTE = (
    "placeholder content to replace: seeded competences and disciplines exist only "
    "so that every module already spans two disciplines"
)


class ScaffoldConfigError(ValueError):
    def __init__(self, field_name: str, message: str) -> None:
        self.field = field_name
        super().__init__(f"{field_name}: {message}")


@dataclass(frozen=True)
class ScaffoldConfig:
    title: str = "Untitled epistemic game"
    learner_team_size: int = 3
    core_mission_count: int = 2
    include_report_mission: bool = False
    discipline_labels: tuple[str, ...] = ("domain", "methodology")
    seed_competences_per_module: int = 2

    def __post_init__(self) -> None:
        object.__setattr__(self, "discipline_labels", tuple(self.discipline_labels))
        if not isinstance(self.learner_team_size, int) or not 2 <= self.learner_team_size <= 4:
            raise ScaffoldConfigError("learner_team_size", f"must be between 2 and 4, got {self.learner_team_size!r}")
        if not isinstance(self.core_mission_count, int) or self.core_mission_count < 0:
            raise ScaffoldConfigError("core_mission_count", f"must be >= 0, got {self.core_mission_count!r}")
        labels = self.discipline_labels
        if len(labels) < 2 or len(set(labels)) < 2 or not all(isinstance(x, str) and x for x in labels):
            raise ScaffoldConfigError("discipline_labels", "needs at least two distinct non-empty labels")
        if not isinstance(self.seed_competences_per_module, int) or self.seed_competences_per_module < 2:
            raise ScaffoldConfigError(
                "seed_competences_per_module", f"must be >= 2, got {self.seed_competences_per_module!r}"
            )


def scaffold(config: ScaffoldConfig = ScaffoldConfig()) -> Scenario:
    teacher = Participant("teacher", "Teacher", "role", "teacher")
    team = Participant(
        "learner-team",
        "Learner team",
        "team",
        "learner",
        tuple(Member(f"learner-{i}") for i in range(1, config.learner_team_size + 1)),
    )
    experts = Character("expert-group", "TODO: name the expert group", "expert_group", plays_refs=(team.id,))
    mentor = Character(
        "mentor", "TODO: name the helpful colleague", "mentor", plays_refs=(teacher.id,), helps_refs=(experts.id,)
    )
    cast = (mentor.id, experts.id)

    competences = []
    modules = []
    missions = [
        LudicElement(
            "mission-teaser",
            "mission",
            "Teaser",
            "teaser",
            "TODO: announce the main mission and hand out the roles",
            character_refs=cast,
        )
    ]
    orderings = {}
    for i in range(1, config.core_mission_count + 1):
        refs = []
        for j in range(1, config.seed_competences_per_module + 1):
            discipline = config.discipline_labels[(j - 1) % len(config.discipline_labels)]
            cid = f"competence-{i}-{j}"
            competences.append(Competence(cid, f"TODO: competence {j} of module {i}", discipline))
            refs.append(cid)
        modules.append(
            PedagogicalElement(
                f"module-{i}",
                "module",
                f"Module {i}",
                "TODO: pedagogical objective",
                competence_refs=tuple(refs),
                participant_refs=(team.id,),
            )
        )
        mission_id = f"mission-{i}"
        briefing = LudicElement(
            f"{mission_id}-briefing", "sequence", "Briefing", "briefing",
            "TODO: explain the tasks ahead and how to prepare", character_refs=cast,
        )
        debriefing = LudicElement(
            f"{mission_id}-debriefing", "sequence", "Debriefing", "debriefing",
            "TODO: share results and link them to the competences at stake", character_refs=cast,
        )
        missions.append(
            LudicElement(
                mission_id,
                "mission",
                f"Mission {i}",
                "core",
                "TODO: describe the mission",
                staged_refs=(f"module-{i}",),
                character_refs=cast,
                children=(briefing, debriefing),
            )
        )
        orderings[mission_id] = OrderingGraph.chain([briefing.id, debriefing.id])

    if config.include_report_mission:
        report_comp = "competence-report"
        competences.append(Competence(report_comp, "TODO: analysis report competence", config.discipline_labels[0]))
        competences.append(
            Competence(f"{report_comp}-2", "TODO: reflective writing competence", config.discipline_labels[1])
        )
        modules.append(
            PedagogicalElement(
                "module-report",
                "module",
                "Post-game report",
                "TODO: report on the competences acquired",
                competence_refs=(report_comp, f"{report_comp}-2"),
                participant_refs=(team.id,),
                tags=("report-writing",),
            )
        )
        missions.append(
            LudicElement(
                "mission-report",
                "mission",
                "Analysis report",
                "report",
                "TODO: learners write the post-game analysis report",
                staged_refs=("module-report",),
            )
        )

    orderings = {ROOT: OrderingGraph.chain(m.id for m in missions), **orderings}
    meta = Meta(title=config.title, version="0.1", notes=(PLACEHOLDER_NOTE,))
    return Scenario(
        meta,
        tuple(competences),
        (teacher, team),
        (mentor, experts),
        tuple(modules),
        tuple(missions),
        orderings,
    )
