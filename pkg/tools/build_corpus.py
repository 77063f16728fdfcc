"""Regenerate the bundled fixture files under src/ludoscene/corpus/data.

    python3 tools/build_corpus.py [--check]

The fixtures are authored here as Python and written out in canonical form.
``--check`` exits non-zero when a file on disk differs from what this script
would write.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ludoscene.document import SUFFIX, serialize
from ludoscene.model import (
    ROOT,
    BranchGroup,
    Character,
    Competence,
    DocumentRecord,
    LudicElement,
    Member,
    Meta,
    OrderingGraph,
    Participant,
    PedagogicalElement,
    Scenario,
)

DATA = Path(__file__).resolve().parent.parent / "src" / "ludoscene" / "corpus" / "data"

RECONSTRUCTED = (
    "reconstructed: only the pattern-relevant structure follows the published analysis; "
    "titles, descriptions, competence names and sequence counts are invented"
)
SYNTHETIC = (
    "synthetic: only the pattern set of this team project is published; "
    "the content is a minimal scenario exhibiting exactly that set"
)


def seq(id, kind, title, staged=(), chars=(), description="", children=(), **extra):
    return LudicElement(id, "sequence", title, kind, description, tuple(staged), tuple(chars), children=tuple(children), **extra)


def lvl(id, title, staged=(), chars=()):
    return LudicElement(id, "level", title, "level", "", tuple(staged), tuple(chars))


def mission(id, kind, title, staged=(), chars=(), description="", children=(), **extra):
    return LudicElement(id, "mission", title, kind, description, tuple(staged), tuple(chars), children=tuple(children), **extra)


def ped(id, level, title, objective, comps, parts=(), children=(), tags=()):
    return PedagogicalElement(id, level, title, objective, tuple(comps), tuple(parts), tuple(tags), tuple(children))


def land_science() -> Scenario:
    competences = (
        Competence("c-urban-analysis", "Analyse an urban area", "urbanism"),
        Competence("c-urban-design", "Design an urban plan", "urbanism"),
        Competence("c-ecology", "Weigh the ecological impact of a plan", "ecology"),
        Competence("c-teamwork", "Organise group work", "communication"),
        Competence("c-interview", "Interview stakeholders and take notes", "communication"),
        Competence("c-presentation", "Present and justify choices", "communication"),
    )
    phase_one = [
        ("team-retirees", "retirees", 3),
        ("team-ecologists", "ecologists", 4),
        ("team-families", "families", 3),
        ("team-investors", "investors", 4),
    ]
    teams = tuple(
        Participant(pid, f"Interns studying {label}", "team", "learner",
                    tuple(Member(f"{label}-intern-{i}") for i in range(1, size + 1)))
        for pid, label, size in phase_one
    )
    planning = Participant(
        "planning-team", "Recomposed planning team", "team", "learner",
        tuple(Member(f"{label}-representative", label) for _, label, _ in phase_one),
    )
    participants = (
        Participant("teacher", "Lead teacher", "role", "teacher"),
        Participant("tutors", "Pedagogical tutors", "role", "teacher"),
        *teams,
        planning,
    )
    learner_ids = tuple(p.id for p in (*teams, planning))
    characters = (
        Character("maggy", "Maggy, head of the urban planning firm", "evaluator", "hidden", ("teacher",)),
        Character("kurt", "Kurt, helpful colleague", "mentor", "visible", ("teacher",), ("interns",)),
        Character("sydney", "Sydney, helpful colleague", "mentor", "visible", ("tutors",), ("interns",)),
        Character("kira", "Kira, helpful colleague", "mentor", "visible", ("tutors",), ("interns",)),
        Character("interns", "Intern urban planners", "expert_group", "visible", learner_ids),
        Character("inhabitants", "Inhabitants of the district", "other", "visible"),
    )
    team_ids = tuple(t.id for t in teams)
    pedagogical = (
        ped("mod-needs", "module", "Understanding the inhabitants' needs",
            "Collect and synthesise the needs of one type of inhabitant",
            ("c-urban-analysis", "c-interview", "c-teamwork"), team_ids + ("teacher", "tutors"), (
                ped("act-needs-prep", "act", "Preparing the interviews", "Organise the group and the note taking",
                    ("c-teamwork",), team_ids, (
                        ped("activity-note-taking", "activity", "Agree on a note-taking grid",
                            "Prepare to listen carefully", ("c-interview",), team_ids),
                    )),
                ped("act-needs-interviews", "act", "Interviewing inhabitants", "Gather needs first-hand",
                    ("c-interview", "c-urban-analysis"), team_ids, (
                        ped("activity-interview", "activity", "Run one interview", "Ask, listen, note",
                            ("c-interview",), team_ids),
                    )),
                ped("act-needs-synthesis", "act", "Synthesising the needs", "Share findings with the other groups",
                    ("c-urban-analysis", "c-teamwork"), team_ids + ("teacher",)),
            )),
        ped("mod-plan", "module", "Designing the final urban plan",
            "Produce a plan that accounts for every type of inhabitant",
            ("c-urban-design", "c-ecology", "c-presentation"), ("planning-team", "teacher"), (
                ped("act-plan-prep", "act", "Preparing the recomposed teams", "Plan the joint work",
                    ("c-teamwork",), ("planning-team",)),
                ped("act-plan-design", "act", "Designing the plan", "Use the zoning tools",
                    ("c-urban-design", "c-ecology"), ("planning-team",), (
                        ped("activity-zoning-tool", "activity", "Draft zoning with the planning tool",
                            "Try alternative zonings", ("c-urban-design",), ("planning-team",)),
                    )),
                ped("act-plan-presentation", "act", "Presenting the plan", "Justify the choices made",
                    ("c-presentation",), ("planning-team", "teacher")),
            )),
    )
    interviews = [
        seq(f"s-int-{label}", "narrative", f"Interviewing the {label}", ("act-needs-interviews",),
            (mentor, "interns", "inhabitants"), f"One group meets the {label} of the district",
            duration_minutes=60, interaction_mode="collaboration")
        for (_, label, _), mentor in zip(phase_one, ("kurt", "sydney", "kira", "kurt"))
    ]
    ludic = (
        mission("m-hiring", "teaser", "Hired as interns", (), ("maggy", "kurt", "interns"),
                "An email from Maggy hires the learners as interns; Kurt details the assignment", (
                    seq("s-hiring-email", "narrative", "Welcome email from Maggy", (), ("maggy", "interns")),
                    seq("s-hiring-kickoff", "narrative", "Kurt organises the interns", (), ("kurt", "interns")),
                )),
        mission("m-interviews", "core", "Interviewing the inhabitants", ("mod-needs",),
                ("kurt", "sydney", "kira", "interns", "inhabitants"),
                "Each group gathers the needs of one type of inhabitant", (
                    seq("s-int-briefing", "briefing", "Briefing before the interviews", ("act-needs-prep",),
                        ("kurt", "interns"), "Colleagues suggest listening carefully and taking notes", (
                            lvl("l-int-grid", "Note-taking grid", ("activity-note-taking",), ("kurt", "interns")),
                        )),
                    *interviews,
                    seq("s-int-debriefing", "debriefing", "Debriefing with all groups", ("act-needs-synthesis",),
                        ("kurt", "interns")),
                )),
        mission("m-final-plan", "core", "Designing the final urban plan", ("mod-plan",),
                ("kurt", "maggy", "interns"),
                "Recomposed teams with one representative per type of inhabitant design the final plan", (
                    seq("s-plan-briefing", "briefing", "Briefing of the recomposed teams", ("act-plan-prep",),
                        ("kurt", "interns")),
                    seq("s-plan-design", "narrative", "Working on the plan", ("act-plan-design",), ("interns",),
                        children=(lvl("l-plan-zoning", "Zoning tool", ("activity-zoning-tool",), ("interns",)),)),
                    seq("s-plan-validation", "test", "Maggy reviews the proposals", ("act-plan-presentation",),
                        ("maggy", "interns")),
                    seq("s-plan-debriefing", "debriefing", "Comparing the plans", (), ("kurt", "interns")),
                )),
    )
    branches = tuple(s.id for s in interviews)
    orderings = {
        ROOT: OrderingGraph.chain(("m-hiring", "m-interviews", "m-final-plan")),
        "m-hiring": OrderingGraph.chain(("s-hiring-email", "s-hiring-kickoff")),
        "m-interviews": OrderingGraph(
            ("s-int-briefing", *branches, "s-int-debriefing"),
            tuple(("s-int-briefing", b) for b in branches) + tuple((b, "s-int-debriefing") for b in branches),
            (BranchGroup("s-int-briefing", branches, "parallel"),),
        ),
        "m-final-plan": OrderingGraph.chain(
            ("s-plan-briefing", "s-plan-design", "s-plan-validation", "s-plan-debriefing")
        ),
    }
    documents = (
        DocumentRecord("doc-interview-notes", "Interview notes", "s-int-retirees"),
        DocumentRecord("doc-urban-plan", "Final urban plan", "s-plan-design"),
    )
    meta = Meta("Land Science (LS)", (), "1", notes=(RECONSTRUCTED,))
    return Scenario(meta, competences, participants, characters, pedagogical, ludic, orderings, documents)


def puissance() -> Scenario:
    competences = (
        Competence("c-ps-method", "Apply the problem-solving method", "problem-solving"),
        Competence("c-pareto", "Build and read a Pareto diagram", "industrial-engineering"),
        Competence("c-ishikawa", "Build an Ishikawa diagram", "industrial-engineering"),
        Competence("c-brainstorm", "Run a brainstorming session", "communication"),
        Competence("c-teamwork", "Work as a team of consultants", "communication"),
        Competence("c-report", "Write an analysis report", "communication"),
    )
    participants = (
        Participant("teacher", "Teacher", "role", "teacher"),
        Participant("consultants", "Group of consultants", "team", "learner",
                    (Member("consultant-1"), Member("consultant-2"), Member("consultant-3"))),
    )
    characters = (
        Character("supervisor", "Supervisor of the consultants", "mentor", "visible", ("teacher",), ("consultant-team",)),
        Character("consultant-team", "Consultants in problem solving", "expert_group", "visible", ("consultants",)),
        Character("director", "Director of the distribution company", "other", "visible"),
    )
    group = ("consultants",)
    pedagogical = (
        ped("mod-problems", "module", "Identifying the problems", "List the causes of late deliveries",
            ("c-ps-method", "c-brainstorm", "c-teamwork"), group, (
                ped("act-problems-visit", "act", "Visiting the company", "Collect facts", ("c-ps-method",), group),
                ped("act-problems-brainstorm", "act", "Brainstorming", "Generate candidate problems",
                    ("c-brainstorm",), group, (
                        ped("activity-brainstorm-rules", "activity", "Apply brainstorming rules",
                            "Defer judgement", ("c-brainstorm",), group),
                    )),
            )),
        ped("mod-causes", "module", "Analysing the causes", "Rank causes with decision diagrams",
            ("c-ishikawa", "c-pareto", "c-teamwork"), group, (
                ped("act-causes-ishikawa", "act", "Cause and effect diagram", "Structure the causes",
                    ("c-ishikawa",), group),
                ped("act-causes-pareto", "act", "Pareto analysis", "Find the vital few", ("c-pareto",), group),
            )),
        ped("mod-solutions", "module", "Building a solution", "Solve the problem the group picked",
            ("c-ps-method", "c-teamwork"), group, (
                ped("act-solutions-work", "act", "Working on the chosen problem", "Design a solution",
                    ("c-ps-method",), group),
            )),
        ped("mod-presentation", "module", "Presenting the results", "Expose results and methods",
            ("c-ps-method", "c-teamwork"), group + ("teacher",)),
        ped("mod-report", "module", "Post-game analysis report",
            "Explain the competences acquired, backed by personal research on problem-solving methods",
            ("c-report", "c-ps-method"), group, tags=("report-writing",)),
    )
    frame = ("supervisor", "consultant-team")

    def core(mid, title, module, work, description):
        return mission(mid, "core", title, (module,), frame, description, (
            seq(f"{mid}-briefing", "briefing", "Briefing", (), frame,
                "The supervisor explains the tasks and the diagrams that can help"),
            *work,
            seq(f"{mid}-debriefing", "debriefing", "Debriefing", (), frame,
                "Each group exposes its results; the supervisor highlights the competences"),
        ), duration_minutes=180)

    alternatives = ("s-solve-delivery", "s-solve-stock", "s-solve-routing")
    ludic = (
        mission("m-kickoff", "teaser", "Hired as consultants", (), ("supervisor", "consultant-team", "director"),
                "The teacher forms groups of three and announces they are hired by a distribution company", (
                    seq("s-kickoff-groups", "narrative", "Forming the consultant groups", (), frame),
                )),
        core("m-identify", "Identifying the problems", "mod-problems", (
            seq("s-identify-visit", "narrative", "Meeting the director", ("act-problems-visit",),
                ("director", "consultant-team")),
            seq("s-identify-brainstorm", "narrative", "Brainstorming session", ("act-problems-brainstorm",),
                ("consultant-team",), children=(
                    lvl("l-brainstorm-rules", "Brainstorming rules", ("activity-brainstorm-rules",)),
                ), interaction_mode="collaboration"),
        ), "Find what makes deliveries fail"),
        core("m-analyse", "Analysing the causes", "mod-causes", (
            seq("s-analyse-ishikawa", "narrative", "Ishikawa diagram", ("act-causes-ishikawa",), ("consultant-team",)),
            seq("s-analyse-pareto", "narrative", "Pareto diagram", ("act-causes-pareto",), ("consultant-team",)),
        ), "Rank the causes"),
        core("m-solve", "Solving a chosen problem", "mod-solutions", (
            seq("s-solve-choose", "narrative", "Choosing a problem", (), ("consultant-team",),
                "Each group picks the problem it wants to solve"),
            *(seq(a, "narrative", f"Working on {a.split('-')[-1]} problems", ("act-solutions-work",),
                  ("consultant-team",)) for a in alternatives),
        ), "Each group designs a solution"),
        core("m-present", "Presenting the solutions", "mod-presentation", (
            seq("s-present-talks", "narrative", "Group presentations", (), ("consultant-team", "director"),
                interaction_mode="competition"),
        ), "Groups present to the company"),
        mission("m-report", "report", "Analysis report", ("mod-report",), (),
                "Learners hand in an analysis report one week after the game; only the report is assessed"),
    )
    orderings = {
        ROOT: OrderingGraph.chain(("m-kickoff", "m-identify", "m-analyse", "m-solve", "m-present", "m-report")),
        "m-identify": OrderingGraph.chain(("m-identify-briefing", "s-identify-visit", "s-identify-brainstorm",
                                           "m-identify-debriefing")),
        "m-analyse": OrderingGraph.chain(("m-analyse-briefing", "s-analyse-ishikawa", "s-analyse-pareto",
                                          "m-analyse-debriefing")),
        "m-solve": OrderingGraph(
            ("m-solve-briefing", "s-solve-choose", *alternatives, "m-solve-debriefing"),
            (("m-solve-briefing", "s-solve-choose"),)
            + tuple(("s-solve-choose", a) for a in alternatives)
            + tuple((a, "m-solve-debriefing") for a in alternatives),
            (BranchGroup("s-solve-choose", alternatives, "alternative"),),
        ),
        "m-present": OrderingGraph.chain(("m-present-briefing", "s-present-talks", "m-present-debriefing")),
    }
    documents = (
        DocumentRecord("doc-pareto", "Pareto diagram", "s-analyse-pareto"),
        DocumentRecord("doc-analysis-report", "Analysis report", "m-report"),
    )
    meta = Meta("Puissance (PU)", (), "1", notes=(RECONSTRUCTED,))
    return Scenario(meta, competences, participants, characters, pedagogical, ludic, orderings, documents)


def team_project(
    name: str,
    *,
    theme: dict,
    teaser: bool = False,
    expert: bool = False,
    mentor_helps: bool = False,
    branch: str | None = None,
    briefing: bool = False,
    debriefing: bool = False,
    guilds: bool = False,
) -> Scenario:
    """Minimal two-mission scenario whose detected patterns follow the flags."""
    competences = (
        Competence("c-domain", theme["domain_skill"], theme["domain"]),
        Competence("c-method", theme["method_skill"], theme["method"]),
        Competence("c-teamwork", "Collaborate within the team", "communication"),
    )
    members = tuple(
        Member(f"player-{i}", theme["viewpoints"][i - 1] if guilds else None) for i in range(1, 4)
    )
    participants = (
        Participant("teacher", "Teacher", "role", "teacher"),
        Participant("players", "Learner team", "team", "learner", members),
    )
    characters = (
        Character("mentor", theme["mentor"], "mentor", "visible", ("teacher",), ("heroes",) if mentor_helps else ()),
        Character("heroes", theme["heroes"], "expert_group" if expert else "other", "visible", ("players",)),
    )
    cast = ("mentor", "heroes")
    pedagogical = tuple(
        ped(f"module-{i}", "module", f"Module {i}", "Objective", ("c-domain", "c-method") if i == 1 else
            ("c-method", "c-teamwork"), ("players",))
        for i in (1, 2)
    )

    orderings = {}

    def core(i: int, branching: bool) -> LudicElement:
        mid = f"mission-{i}"
        first = seq(f"{mid}-open", "briefing" if briefing else "narrative",
                    "Briefing" if briefing else "Opening scene", (), cast if briefing else ("heroes",))
        last = seq(f"{mid}-close", "debriefing" if debriefing else "test",
                   "Debriefing" if debriefing else "Final challenge", (), cast if debriefing else ("heroes",))
        if branching:
            middle = (
                seq(f"{mid}-choice", "narrative", "Choosing a path", (), ("heroes",)),
                seq(f"{mid}-path-a", "narrative", "First path", (), ("heroes",)),
                seq(f"{mid}-path-b", "narrative", "Second path", (), ("heroes",)),
            )
            ids = [s.id for s in (first, *middle, last)]
            orderings[mid] = OrderingGraph(
                tuple(ids),
                ((ids[0], ids[1]), (ids[1], ids[2]), (ids[1], ids[3]), (ids[2], ids[4]), (ids[3], ids[4])),
                (BranchGroup(ids[1], (ids[2], ids[3]), "alternative"),),
            )
        else:
            middle = (seq(f"{mid}-work", "narrative", "Main challenge", (), ("heroes",)),)
            orderings[mid] = OrderingGraph.chain(s.id for s in (first, *middle, last))
        return mission(mid, "core", f"Mission {i}", (f"module-{i}",), cast, children=(first, *middle, last))

    missions = []
    if teaser:
        missions.append(mission("mission-teaser", "teaser", theme["teaser"], (), cast))
    missions.append(core(1, branch == "sequence"))
    missions.append(core(2, False))
    if branch == "mission":
        missions.append(core(3, False))
        ids = [m.id for m in missions]
        split = ids[-3]
        orderings[ROOT] = OrderingGraph(
            tuple(ids),
            tuple((a, b) for a, b in zip(ids, ids[1:-2])) + ((split, ids[-2]), (split, ids[-1])),
            (BranchGroup(split, (ids[-2], ids[-1]), "alternative"),),
        )
        pedagogical = pedagogical + (
            ped("module-3", "module", "Module 3", "Objective", ("c-domain", "c-teamwork"), ("players",)),
        )
    else:
        orderings[ROOT] = OrderingGraph.chain(m.id for m in missions)
    orderings = {ROOT: orderings.pop(ROOT), **orderings}

    meta = Meta(f"{name} ({theme['title']})", (), "1", notes=(SYNTHETIC,))
    return Scenario(meta, competences, participants, characters, pedagogical, tuple(missions), orderings)


THEMES = {
    "LG1": dict(title="city rescue", domain="geography", domain_skill="Read a map", method="mathematics",
                method_skill="Compute distances", mentor="Station chief", heroes="Rescue team",
                teaser="Opening cinematic", viewpoints=("a", "b", "c")),
    "LG2": dict(title="water cycle", domain="physics", domain_skill="Explain state changes", method="biology",
                method_skill="Relate water to living things", mentor="Lab director", heroes="Hydrologists",
                teaser="Alert from the lab", viewpoints=("a", "b", "c")),
    "LG3": dict(title="rocket launch", domain="physics", domain_skill="Model a trajectory", method="mathematics",
                method_skill="Solve equations", mentor="Mission control", heroes="Rocket pilots",
                teaser="Launch countdown", viewpoints=("a", "b", "c")),
    "LG4": dict(title="saving humanity", domain="biology", domain_skill="Assess a pandemic", method="ethics",
                method_skill="Argue a position", mentor="Council adviser", heroes="Elected scientists",
                teaser="Email and oral announcement", viewpoints=("healers", "engineers", "diplomats")),
}

# flags per team project: (before, added)
PROJECTS = {
    "LG1": (dict(expert=True), dict(teaser=True, mentor_helps=True, debriefing=True)),
    "LG2": (dict(teaser=True, expert=True), dict(branch="sequence")),
    "LG3": (dict(teaser=True), dict(expert=True, mentor_helps=True, branch="mission")),
    "LG4": (dict(branch="sequence", briefing=True),
            dict(teaser=True, expert=True, mentor_helps=True, debriefing=True, guilds=True)),
}


def fixtures() -> dict[str, Scenario]:
    out = {"LS": land_science(), "PU": puissance()}
    for name, (before, added) in PROJECTS.items():
        out[f"{name}_before"] = team_project(name, theme=THEMES[name], **before)
        out[f"{name}_after"] = team_project(name, theme=THEMES[name], **{**before, **added})
    return out


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare instead of writing")
    args = ap.parse_args()
    stale = []
    DATA.mkdir(parents=True, exist_ok=True)
    for name, scenario in fixtures().items():
        path = DATA / f"{name}{SUFFIX}"
        text = serialize(scenario)
        if args.check:
            if not path.exists() or path.read_text(encoding="utf-8") != text:
                stale.append(path.name)
        else:
            path.write_text(text, encoding="utf-8")
    for name in stale:
        print(f"stale: {name}", file=sys.stderr)
    return 1 if stale else 0


if __name__ == "__main__":
    sys.exit(main())
