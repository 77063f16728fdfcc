"""In-memory scenario model.

A scenario is a pair of three-level trees (the pedagogical structure and the
ludic scenario) plus the flat registries they reference: competences,
participants, characters and produced documents. Every object is an immutable
dataclass; edits go through :func:`dataclasses.replace` or
:func:`replace_element`.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from functools import cached_property
from typing import Iterator, Mapping, NamedTuple, Optional, Union

PEDAGOGICAL_LEVELS = ("module", "act", "activity")
LUDIC_LEVELS = ("mission", "sequence", "level")

# ludic level -> pedagogical level it may stage
STAGING_LEVEL = {"mission": "module", "sequence": "act", "level": "activity"}

LUDIC_KINDS = {
    "mission": ("teaser", "core", "report"),
    "sequence": ("narrative", "test", "briefing", "debriefing"),
    "level": ("level",),
}
PARTICIPANT_KINDS = ("role", "team")
ROLE_LABELS = ("learner", "teacher")
ARCHETYPES = ("expert_group", "mentor", "evaluator", "antagonist", "other")
VISIBILITIES = ("visible", "hidden")
INTERACTION_MODES = ("competition", "collaboration", "solo")
BRANCH_SEMANTICS = ("parallel", "alternative")

REPORT_WRITING_TAG = "report-writing"

# Ordering key of the top-level mission group. Identifiers are non-empty, so
# the empty string never collides with a mission id.
ROOT = ""

FORMAT_VERSION = "1"


def _check(value: object, allowed: tuple, what: str) -> None:
    if value not in allowed:
        raise ValueError(f"{what} must be one of {', '.join(allowed)}; got {value!r}")


class _Frozen:
    """Coerces list-valued fields to tuples so instances stay hashable-ish and immutable."""

    _tuple_fields: tuple[str, ...] = ()

    def _freeze(self) -> None:
        for name in self._tuple_fields:
            value = getattr(self, name)
            if not isinstance(value, tuple):
                object.__setattr__(self, name, tuple(value))


@dataclass(frozen=True)
class Competence(_Frozen):
    id: str
    name: str
    discipline: str
    description: Optional[str] = None


@dataclass(frozen=True)
class Member:
    name: str
    viewpoint: Optional[str] = None


@dataclass(frozen=True)
class Participant(_Frozen):
    """A formation role (kind ``role``) or a named team of people (kind ``team``).

    Teams carry the role label shared by all their members.
    """

    id: str
    name: str
    kind: str
    role_label: str
    members: tuple[Member, ...] = ()

    _tuple_fields = ("members",)

    def __post_init__(self) -> None:
        self._freeze()
        _check(self.kind, PARTICIPANT_KINDS, "participant kind")
        _check(self.role_label, ROLE_LABELS, "role_label")
        if self.kind == "role" and self.members:
            raise ValueError(f"participant {self.id!r}: a role has no members")

    @property
    def viewpoints(self) -> frozenset[str]:
        return frozenset(m.viewpoint for m in self.members if m.viewpoint is not None)


@dataclass(frozen=True)
class PedagogicalElement(_Frozen):
    id: str
    level: str
    title: str
    objective: str = ""
    competence_refs: tuple[str, ...] = ()
    participant_refs: tuple[str, ...] = ()
    tags: tuple[str, ...] = ()
    children: tuple["PedagogicalElement", ...] = ()

    _tuple_fields = ("competence_refs", "participant_refs", "tags", "children")

    def __post_init__(self) -> None:
        self._freeze()
        _check(self.level, PEDAGOGICAL_LEVELS, "pedagogical level")


@dataclass(frozen=True)
class Character(_Frozen):
    id: str
    name: str
    archetype: str = "other"
    visibility: str = "visible"
    plays_refs: tuple[str, ...] = ()
    helps_refs: tuple[str, ...] = ()

    _tuple_fields = ("plays_refs", "helps_refs")

    def __post_init__(self) -> None:
        self._freeze()
        _check(self.archetype, ARCHETYPES, "archetype")
        _check(self.visibility, VISIBILITIES, "visibility")


@dataclass(frozen=True)
class LudicElement(_Frozen):
    id: str
    level: str
    title: str
    kind: str
    description: str = ""
    staged_refs: tuple[str, ...] = ()
    character_refs: tuple[str, ...] = ()
    duration_minutes: Optional[Union[int, float]] = None
    interaction_mode: Optional[str] = None
    children: tuple["LudicElement", ...] = ()

    _tuple_fields = ("staged_refs", "character_refs", "children")

    def __post_init__(self) -> None:
        self._freeze()
        _check(self.level, LUDIC_LEVELS, "ludic level")
        _check(self.kind, LUDIC_KINDS[self.level], f"{self.level} kind")
        if self.interaction_mode is not None:
            _check(self.interaction_mode, INTERACTION_MODES, "interaction_mode")
        if self.duration_minutes is not None and not self.duration_minutes >= 0:
            raise ValueError(f"{self.id!r}: duration_minutes must be non-negative")


@dataclass(frozen=True)
class BranchGroup(_Frozen):
    split: str
    branches: tuple[str, ...]
    semantics: str = "parallel"

    _tuple_fields = ("branches",)

    def __post_init__(self) -> None:
        self._freeze()
        _check(self.semantics, BRANCH_SEMANTICS, "branch semantics")


@dataclass(frozen=True)
class OrderingGraph(_Frozen):
    """Precedence DAG over one group of sibling ludic elements."""

    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...] = ()
    branch_groups: tuple[BranchGroup, ...] = ()

    _tuple_fields = ("nodes", "branch_groups")

    def __post_init__(self) -> None:
        self._freeze()
        object.__setattr__(self, "edges", tuple((a, b) for a, b in self.edges))

    @classmethod
    def chain(cls, nodes) -> "OrderingGraph":
        nodes = tuple(nodes)
        return cls(nodes, tuple(zip(nodes, nodes[1:])))


@dataclass(frozen=True)
class DocumentRecord:
    id: str
    title: str
    produced_in: str


@dataclass(frozen=True)
class Meta(_Frozen):
    title: str = ""
    authors: tuple[str, ...] = ()
    version: str = ""
    format_version: str = FORMAT_VERSION
    notes: tuple[str, ...] = ()

    _tuple_fields = ("authors", "notes")

    def __post_init__(self) -> None:
        self._freeze()


Element = Union[Competence, Participant, Character, PedagogicalElement, LudicElement, DocumentRecord]


class Entry(NamedTuple):
    """An element located in a scenario: its kind, the object and its path."""

    kind: str
    element: Element
    path: str
    parent: Optional[str]


@dataclass(frozen=True)
class Scenario(_Frozen):
    meta: Meta = field(default_factory=Meta)
    competences: tuple[Competence, ...] = ()
    participants: tuple[Participant, ...] = ()
    characters: tuple[Character, ...] = ()
    pedagogical: tuple[PedagogicalElement, ...] = ()
    ludic: tuple[LudicElement, ...] = ()
    orderings: Mapping[str, OrderingGraph] = field(default_factory=dict)
    documents: tuple[DocumentRecord, ...] = ()

    _tuple_fields = ("competences", "participants", "characters", "pedagogical", "ludic", "documents")

    def __post_init__(self) -> None:
        self._freeze()
        object.__setattr__(self, "orderings", dict(self.orderings))

    def walk(self) -> Iterator[Entry]:
        """Yield every element in document order, duplicates included."""
        for c in self.competences:
            yield Entry("competence", c, f"competences/{c.id}", None)
        for p in self.participants:
            yield Entry("participant", p, f"participants/{p.id}", None)
        for ch in self.characters:
            yield Entry("character", ch, f"characters/{ch.id}", None)
        yield from _walk_tree(self.pedagogical, "pedagogical", None)
        yield from _walk_tree(self.ludic, "ludic", None)
        for d in self.documents:
            yield Entry("document", d, f"documents/{d.id}", None)

    @cached_property
    def index(self) -> dict[str, Entry]:
        """First occurrence of each id."""
        found: dict[str, Entry] = {}
        for entry in self.walk():
            found.setdefault(entry.element.id, entry)
        return found

    @cached_property
    def order(self) -> dict[str, int]:
        """Document position of each id, used for deterministic tie-breaking."""
        return {eid: i for i, eid in enumerate(self.index)}

    def pedagogical_elements(self) -> list[PedagogicalElement]:
        return [e.element for e in _walk_tree(self.pedagogical, "pedagogical", None)]

    def ludic_elements(self) -> list[LudicElement]:
        return [e.element for e in _walk_tree(self.ludic, "ludic", None)]

    def element_count(self) -> int:
        return sum(1 for _ in self.walk())


def _walk_tree(roots, prefix: str, parent: Optional[str]) -> Iterator[Entry]:
    for node in roots:
        path = f"{prefix}/{node.id}"
        yield Entry(node.level, node, path, parent)
        yield from _walk_tree(node.children, path, node.id)


def resolve(scenario: Scenario, element_id: str) -> Optional[Entry]:
    """Look up an element by id; ``None`` when the scenario has no such element."""
    return scenario.index.get(element_id)


def replace_element(scenario: Scenario, element_id: str, **changes) -> Scenario:
    """Return a copy of *scenario* with the element *element_id* updated.

    Raises KeyError when no element carries that id.
    """
    hit = False

    def swap(items):
        nonlocal hit
        out = []
        for item in items:
            if not hit and item.id == element_id:
                hit = True
                item = replace(item, **changes)
            elif not hit and hasattr(item, "children") and item.children:
                item = replace(item, children=swap(item.children))
            out.append(item)
        return tuple(out)

    updates = {}
    for f in fields(Scenario):
        if f.name in ("meta", "orderings"):
            continue
        if hit:
            break
        new = swap(getattr(scenario, f.name))
        if hit:
            updates[f.name] = new
    if not hit:
        raise KeyError(element_id)
    return replace(scenario, **updates)
