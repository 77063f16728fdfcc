"""Seeded random scenarios for property tests.

Every generated scenario is validation-clean (no diagnostics at all) and has
at most ``max_elements`` elements. Sibling groups stay small (at most five
missions, four sequences per mission) so brute-force oracles remain cheap.
The generator leans towards pattern-friendly shapes about half the time so
that each rule is seen both present and absent over a sample.
"""

from __future__ import annotations

import random

from ludoscene.model import (
    ARCHETYPES,
    BRANCH_SEMANTICS,
    INTERACTION_MODES,
    LUDIC_KINDS,
    REPORT_WRITING_TAG,
    ROLE_LABELS,
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

DISCIPLINES = ("urbanism", "ecology", "communication", "problem-solving")
VIEWPOINTS = (None, "retirees", "ecologists", "families", "investors")


class _Budget:
    def __init__(self, total: int) -> None:
        self.left = total

    def take(self) -> bool:
        if self.left <= 0:
            return False
        self.left -= 1
        return True


def _subset(rng: random.Random, items: list, lo: int = 0, hi: int | None = None) -> tuple:
    hi = len(items) if hi is None else min(hi, len(items))
    if hi < lo:
        return ()
    k = rng.randint(lo, hi)
    picked = set(rng.sample(range(len(items)), k))
    return tuple(x for i, x in enumerate(items) if i in picked)


def _random_dag(rng: random.Random, ids: list[str], friendly: bool) -> OrderingGraph:
    """DAG over *ids*: edges only go forward in a random permutation."""
    perm = ids[:]
    rng.shuffle(perm)
    if friendly and rng.random() < 0.6:
        perm = ids[:]
    edges = set()
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if rng.random() < (0.7 if j == i + 1 else 0.25):
                edges.add((perm[i], perm[j]))
    groups = []
    if len(perm) >= 3 and rng.random() < 0.3:
        s = rng.randrange(len(perm) - 2)
        branches = rng.sample(perm[s + 1:], rng.randint(2, len(perm) - s - 1))
        branches.sort(key=perm.index)
        for b in branches:
            edges.add((perm[s], b))
        groups.append(BranchGroup(perm[s], tuple(branches), rng.choice(BRANCH_SEMANTICS)))
    ordered_edges = sorted(edges, key=lambda e: (ids.index(e[0]), ids.index(e[1])))
    return OrderingGraph(tuple(ids), tuple(ordered_edges), tuple(groups))


def random_scenario(seed: int, max_elements: int = 30) -> Scenario:
    if max_elements < 1:
        raise ValueError("max_elements must be >= 1")
    rng = random.Random(seed)
    budget = _Budget(max_elements)
    friendly = rng.random() < 0.5

    competences = []
    for i in range(rng.randint(1, 4)):
        if not budget.take():
            break
        competences.append(Competence(f"c{i}", f"competence {i}", rng.choice(DISCIPLINES)))
    comp_ids = [c.id for c in competences]

    participants = []
    wanted = ["teacher", "team"] if friendly else []
    for i in range(rng.randint(0, 3)):
        if not budget.take():
            break
        shape = wanted.pop(0) if wanted else rng.choice(["role", "team", "teacher"])
        if shape == "teacher":
            if rng.random() < 0.2:
                participants.append(Participant(f"p{i}", f"teachers {i}", "team", "teacher", (Member("t1"),)))
            else:
                participants.append(Participant(f"p{i}", f"teacher {i}", "role", "teacher"))
        elif shape == "team":
            size = rng.randint(2, 4) if friendly else rng.randint(1, 5)
            members = tuple(Member(f"m{j}", rng.choice(VIEWPOINTS)) for j in range(size))
            label = "learner" if friendly else rng.choice(ROLE_LABELS)
            participants.append(Participant(f"p{i}", f"team {i}", "team", label, members))
        else:
            participants.append(Participant(f"p{i}", f"role {i}", "role", rng.choice(ROLE_LABELS)))
    part_ids = [p.id for p in participants]

    characters = []
    for i in range(rng.randint(0, 4)):
        if not budget.take():
            break
        plays = _subset(rng, part_ids, 0, 2)
        if friendly and i < 2:
            archetype = ("mentor", "expert_group")[i]
            if len(part_ids) > i and rng.random() < 0.8:
                plays = (part_ids[i],)
        else:
            archetype = rng.choice(ARCHETYPES)
        visibility = "hidden" if archetype == "evaluator" and rng.random() < 0.5 else "visible"
        characters.append(Character(f"h{i}", f"character {i}", archetype, visibility, plays))
    char_ids = [c.id for c in characters]
    for i, c in enumerate(characters):
        helps = _subset(rng, [x for x in char_ids if x != c.id], 0, 2)
        if friendly and i == 0 and len(char_ids) > 1 and rng.random() < 0.8:
            helps = (char_ids[1],)
        characters[i] = Character(c.id, c.name, c.archetype, c.visibility, c.plays_refs, helps)

    def pedagogical(level: str, depth: int, ident: str) -> PedagogicalElement:
        if friendly and level == "module" and len(comp_ids) >= 2:
            refs = _subset(rng, comp_ids, 2, 3)
        else:
            refs = _subset(rng, comp_ids, 1, 2)
        children = ()
        if depth < 2:
            kids = []
            for k in range(rng.randint(0, 2)):
                if not budget.take():
                    break
                kids.append(pedagogical(("act", "activity")[depth], depth + 1, f"{ident}.{k}"))
            children = tuple(kids)
        tags = (REPORT_WRITING_TAG,) if rng.random() < 0.15 else ()
        return PedagogicalElement(ident, level, f"{level} {ident}", "objective", refs,
                                  _subset(rng, part_ids, 0, 2), tags, children)

    modules = []
    if comp_ids:
        for i in range(rng.randint(0, 3)):
            if not budget.take():
                break
            modules.append(pedagogical("module", 0, f"u{i}"))
    by_level = {"module": [], "act": [], "activity": []}
    stack = list(modules)
    while stack:
        node = stack.pop()
        by_level[node.level].append(node.id)
        stack.extend(node.children)
    for ids in by_level.values():
        ids.sort()

    def ludic(level: str, depth: int, ident: str, position: int, siblings: int) -> LudicElement:
        kinds = LUDIC_KINDS[level]
        kind = rng.choice(kinds)
        if friendly and level == "mission":
            kind = "teaser" if position == 0 else rng.choice(("core", "core", "report"))
        if friendly and level == "sequence" and rng.random() < 0.8:
            if position == 0:
                kind = "briefing"
            elif position == siblings - 1:
                kind = "debriefing"
        staged_pool = by_level[("module", "act", "activity")[depth]]
        staged = () if kind == "teaser" and friendly else _subset(rng, staged_pool, 0, 2)
        chars = _subset(rng, char_ids, 0, 3)
        if friendly and rng.random() < 0.7:
            chars = tuple(char_ids[:2])
        children = ()
        if depth < 2:
            limit = (4, 2)[depth]
            n = rng.randint(0, limit)
            kids = []
            for k in range(n):
                if not budget.take():
                    break
                kids.append(ludic(("sequence", "level")[depth], depth + 1, f"{ident}.{k}", k, n))
            children = tuple(kids)
        duration = rng.choice((None, None, 15, 45.5))
        mode = rng.choice((None,) + INTERACTION_MODES)
        return LudicElement(ident, level, f"{level} {ident}", kind, "description", staged, chars, duration, mode, children)

    missions = []
    n_missions = rng.randint(0, 5)
    for i in range(n_missions):
        if not budget.take():
            break
        missions.append(ludic("mission", 0, f"m{i}", i, n_missions))

    orderings = {}
    if len(missions) >= 2:
        orderings[ROOT] = _random_dag(rng, [m.id for m in missions], friendly)
    elif missions and rng.random() < 0.5:
        orderings[ROOT] = OrderingGraph((missions[0].id,))
    for m in missions:
        if len(m.children) >= 2:
            orderings[m.id] = _random_dag(rng, [s.id for s in m.children], friendly)

    documents = []
    ludic_ids = []
    stack = list(missions)
    while stack:
        node = stack.pop(0)
        ludic_ids.append(node.id)
        stack.extend(node.children)
    if ludic_ids and rng.random() < 0.3 and budget.take():
        documents.append(DocumentRecord("d0", "notes", rng.choice(ludic_ids)))

    return Scenario(
        Meta(title=f"random scenario {seed}", notes=("generated",)),
        tuple(competences),
        tuple(participants),
        tuple(characters),
        tuple(modules),
        tuple(missions),
        orderings,
        tuple(documents),
    )
