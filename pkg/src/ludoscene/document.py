"""Canonical JSON document format (``.lgs.json``).

:func:`parse` is strict: unknown keys, illegal enum values and shape errors
raise :class:`ParseError` with the JSON path of the offending value.
References are not resolved here; dangling ids surface later in
:func:`ludoscene.validation.validate`.

:func:`serialize` emits the canonical layout: fixed key order, element lists
in document order, 2-space indentation, trailing newline.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, Union

from ludoscene import model
from ludoscene.model import (
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
from ludoscene.validation import InvalidScenarioError, validate

SUFFIX = ".lgs.json"
TOP_LEVEL_KEYS = ("meta", "competences", "participants", "characters", "pedagogical", "ludic", "orderings", "documents")


class ParseError(ValueError):
    def __init__(self, code: str, path: str, message: str) -> None:
        self.code = code
        self.path = path
        self.message = message
        super().__init__(f"{code} at {path or '$'}: {message}")


def _syntax(path: str, message: str) -> ParseError:
    return ParseError("E_SYNTAX", path, message)


def _reject_duplicate_keys(pairs):
    obj = {}
    for key, value in pairs:
        if key in obj:
            raise ValueError(f"duplicate key {key!r}")
        obj[key] = value
    return obj


def _reject_constant(name):
    raise ValueError(f"non-finite number {name}")


class _Obj:
    """Key-checked view over one JSON object."""

    def __init__(self, data: Any, path: str, allowed: tuple[str, ...]) -> None:
        if not isinstance(data, dict):
            raise _syntax(path, f"expected an object, got {type(data).__name__}")
        for key in data:
            if key not in allowed:
                raise ParseError("E_UNKNOWN_KEY", f"{path}.{key}" if path else key, f"unknown key {key!r}")
        self.data = data
        self.path = path

    def sub(self, key: str) -> str:
        return f"{self.path}.{key}" if self.path else key

    def has(self, key: str) -> bool:
        return key in self.data

    def text(self, key: str, default: Any = ..., nonempty: bool = False) -> Any:
        if key not in self.data:
            if default is ...:
                raise _syntax(self.sub(key), f"missing required key {key!r}")
            return default
        value = self.data[key]
        if default is None and value is None:
            return None
        if not isinstance(value, str):
            raise _syntax(self.sub(key), "expected a string")
        if nonempty and not value:
            raise _syntax(self.sub(key), "must not be empty")
        return value

    def enum(self, key: str, allowed: tuple[str, ...], default: Any = ...) -> Any:
        value = self.text(key, default)
        if value is None:
            return None
        if value not in allowed:
            raise ParseError("E_BAD_ENUM", self.sub(key), f"{value!r} is not one of {', '.join(allowed)}")
        return value

    def array(self, key: str) -> list:
        value = self.data.get(key, [])
        if not isinstance(value, list):
            raise _syntax(self.sub(key), "expected a list")
        return value

    def ids(self, key: str) -> tuple[str, ...]:
        items = self.array(key)
        for i, item in enumerate(items):
            if not isinstance(item, str) or not item:
                raise _syntax(f"{self.sub(key)}[{i}]", "expected a non-empty id string")
        if len(set(items)) != len(items):
            raise _syntax(self.sub(key), "repeated id in a set")
        return tuple(items)

    def labels(self, key: str) -> tuple[str, ...]:
        return self.ids(key)


def parse(text: Union[str, bytes]) -> Scenario:
    """Parse a scenario document. Raises :class:`ParseError`."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise _syntax("", f"not UTF-8: {exc.reason}") from None
    if text.startswith("\ufeff"):
        raise _syntax("", "byte order mark is not allowed")
    try:
        data = json.loads(text, object_pairs_hook=_reject_duplicate_keys, parse_constant=_reject_constant)
    except RecursionError:
        raise _syntax("", "nesting too deep") from None
    except ValueError as exc:
        raise _syntax("", str(exc)) from None
    return _scenario(data)


def _scenario(data: Any) -> Scenario:
    top = _Obj(data, "", TOP_LEVEL_KEYS)
    meta = _meta(top.data.get("meta", {}), "meta")
    competences = tuple(_competence(d, f"competences[{i}]") for i, d in enumerate(top.array("competences")))
    participants = tuple(_participant(d, f"participants[{i}]") for i, d in enumerate(top.array("participants")))
    characters = tuple(_character(d, f"characters[{i}]") for i, d in enumerate(top.array("characters")))
    pedagogical = tuple(_pedagogical(d, f"pedagogical[{i}]", 0) for i, d in enumerate(top.array("pedagogical")))
    ludic = tuple(_ludic(d, f"ludic[{i}]", 0) for i, d in enumerate(top.array("ludic")))
    orderings_raw = top.data.get("orderings", {})
    if not isinstance(orderings_raw, dict):
        raise _syntax("orderings", "expected an object")
    orderings = {owner: _ordering(g, f"orderings[{owner!r}]") for owner, g in orderings_raw.items()}
    documents = tuple(_document(d, f"documents[{i}]") for i, d in enumerate(top.array("documents")))
    return Scenario(meta, competences, participants, characters, pedagogical, ludic, orderings, documents)


def _meta(data: Any, path: str) -> Meta:
    o = _Obj(data, path, ("format_version", "title", "authors", "version", "notes"))
    version = o.text("format_version", model.FORMAT_VERSION)
    if version != model.FORMAT_VERSION:
        raise _syntax(o.sub("format_version"), f"unsupported format_version {version!r}")
    for key in ("authors", "notes"):
        for i, item in enumerate(o.array(key)):
            if not isinstance(item, str):
                raise _syntax(f"{o.sub(key)}[{i}]", "expected a string")
    return Meta(o.text("title", ""), tuple(o.array("authors")), o.text("version", ""), version, tuple(o.array("notes")))


def _competence(data: Any, path: str) -> Competence:
    o = _Obj(data, path, ("id", "name", "discipline", "description"))
    return Competence(
        o.text("id", nonempty=True),
        o.text("name", ""),
        o.text("discipline", nonempty=True),
        o.text("description", None),
    )


def _participant(data: Any, path: str) -> Participant:
    o = _Obj(data, path, ("id", "name", "kind", "role_label", "members"))
    kind = o.enum("kind", model.PARTICIPANT_KINDS)
    members = []
    if kind == "role":
        if o.has("members"):
            raise _syntax(o.sub("members"), "a role participant has no members")
    else:
        for i, m in enumerate(o.array("members")):
            mo = _Obj(m, f"{o.sub('members')}[{i}]", ("name", "viewpoint"))
            members.append(Member(mo.text("name", nonempty=True), mo.text("viewpoint", None)))
    return Participant(
        o.text("id", nonempty=True),
        o.text("name", ""),
        kind,
        o.enum("role_label", model.ROLE_LABELS),
        tuple(members),
    )


def _character(data: Any, path: str) -> Character:
    o = _Obj(data, path, ("id", "name", "archetype", "visibility", "plays_refs", "helps_refs"))
    return Character(
        o.text("id", nonempty=True),
        o.text("name", ""),
        o.enum("archetype", model.ARCHETYPES),
        o.enum("visibility", model.VISIBILITIES, "visible"),
        o.ids("plays_refs"),
        o.ids("helps_refs"),
    )


def _check_level(o: _Obj, allowed: tuple[str, ...], depth: int) -> str:
    level = o.enum("level", allowed)
    if level != allowed[depth]:
        raise _syntax(o.sub("level"), f"a {level} cannot appear at depth {depth}; expected {allowed[depth]}")
    return level


def _pedagogical(data: Any, path: str, depth: int) -> PedagogicalElement:
    leaf = depth == len(model.PEDAGOGICAL_LEVELS) - 1
    keys = ("id", "level", "title", "objective", "competence_refs", "participant_refs", "tags")
    o = _Obj(data, path, keys if leaf else keys + ("children",))
    level = _check_level(o, model.PEDAGOGICAL_LEVELS, depth)
    children = () if leaf else tuple(
        _pedagogical(c, f"{o.sub('children')}[{i}]", depth + 1) for i, c in enumerate(o.array("children"))
    )
    return PedagogicalElement(
        o.text("id", nonempty=True),
        level,
        o.text("title", ""),
        o.text("objective", ""),
        o.ids("competence_refs"),
        o.ids("participant_refs"),
        o.labels("tags"),
        children,
    )


def _ludic(data: Any, path: str, depth: int) -> LudicElement:
    leaf = depth == len(model.LUDIC_LEVELS) - 1
    keys = (
        "id", "level", "kind", "title", "description", "staged_refs", "character_refs",
        "duration_minutes", "interaction_mode",
    )
    o = _Obj(data, path, keys if leaf else keys + ("children",))
    level = _check_level(o, model.LUDIC_LEVELS, depth)
    kind = o.enum("kind", model.LUDIC_KINDS[level])
    duration = o.data.get("duration_minutes")
    if duration is not None:
        if isinstance(duration, bool) or not isinstance(duration, (int, float)):
            raise _syntax(o.sub("duration_minutes"), "expected a number")
        if isinstance(duration, float) and not math.isfinite(duration) or duration < 0:
            raise _syntax(o.sub("duration_minutes"), "must be a finite non-negative number")
    children = () if leaf else tuple(
        _ludic(c, f"{o.sub('children')}[{i}]", depth + 1) for i, c in enumerate(o.array("children"))
    )
    return LudicElement(
        o.text("id", nonempty=True),
        level,
        o.text("title", ""),
        kind,
        o.text("description", ""),
        o.ids("staged_refs"),
        o.ids("character_refs"),
        duration,
        o.enum("interaction_mode", model.INTERACTION_MODES, None),
        children,
    )


def _ordering(data: Any, path: str) -> OrderingGraph:
    o = _Obj(data, path, ("nodes", "edges", "branch_groups"))
    nodes = o.ids("nodes")
    edges = []
    for i, edge in enumerate(o.array("edges")):
        if not (isinstance(edge, list) and len(edge) == 2 and all(isinstance(e, str) and e for e in edge)):
            raise _syntax(f"{o.sub('edges')}[{i}]", "an edge is a [before, after] pair of ids")
        edges.append((edge[0], edge[1]))
    if len(set(edges)) != len(edges):
        raise _syntax(o.sub("edges"), "repeated edge")
    groups = []
    for i, g in enumerate(o.array("branch_groups")):
        go = _Obj(g, f"{o.sub('branch_groups')}[{i}]", ("split", "branches", "semantics"))
        groups.append(
            BranchGroup(go.text("split", nonempty=True), go.ids("branches"), go.enum("semantics", model.BRANCH_SEMANTICS))
        )
    return OrderingGraph(nodes, tuple(edges), tuple(groups))


def _document(data: Any, path: str) -> DocumentRecord:
    o = _Obj(data, path, ("id", "title", "produced_in"))
    return DocumentRecord(o.text("id", nonempty=True), o.text("title", ""), o.text("produced_in", nonempty=True))


def to_dict(scenario: Scenario) -> dict:
    """Canonical JSON-ready structure, without the validity check of :func:`serialize`."""
    m = scenario.meta
    return {
        "meta": {
            "format_version": m.format_version,
            "title": m.title,
            "authors": list(m.authors),
            "version": m.version,
            "notes": list(m.notes),
        },
        "competences": [_competence_dict(c) for c in scenario.competences],
        "participants": [_participant_dict(p) for p in scenario.participants],
        "characters": [
            {
                "id": c.id,
                "name": c.name,
                "archetype": c.archetype,
                "visibility": c.visibility,
                "plays_refs": list(c.plays_refs),
                "helps_refs": list(c.helps_refs),
            }
            for c in scenario.characters
        ],
        "pedagogical": [_pedagogical_dict(e) for e in scenario.pedagogical],
        "ludic": [_ludic_dict(e) for e in scenario.ludic],
        "orderings": {
            owner: {
                "nodes": list(g.nodes),
                "edges": [list(e) for e in g.edges],
                "branch_groups": [
                    {"split": b.split, "branches": list(b.branches), "semantics": b.semantics}
                    for b in g.branch_groups
                ],
            }
            for owner, g in _orderings_in_document_order(scenario)
        },
        "documents": [{"id": d.id, "title": d.title, "produced_in": d.produced_in} for d in scenario.documents],
    }


def _orderings_in_document_order(scenario: Scenario) -> list:
    # root group first, then mission groups in document order; owners that
    # resolve to nothing (invalid anyway) go last, alphabetically
    position = scenario.order
    key = lambda item: (item[0] != model.ROOT, item[0] not in position, position.get(item[0], 0), item[0])
    return sorted(scenario.orderings.items(), key=key)


def _competence_dict(c: Competence) -> dict:
    out = {"id": c.id, "name": c.name, "discipline": c.discipline}
    if c.description is not None:
        out["description"] = c.description
    return out


def _participant_dict(p: Participant) -> dict:
    out: dict = {"id": p.id, "name": p.name, "kind": p.kind, "role_label": p.role_label}
    if p.kind == "team":
        out["members"] = [
            {"name": m.name} if m.viewpoint is None else {"name": m.name, "viewpoint": m.viewpoint}
            for m in p.members
        ]
    return out


def _pedagogical_dict(e: PedagogicalElement) -> dict:
    out = {
        "id": e.id,
        "level": e.level,
        "title": e.title,
        "objective": e.objective,
        "competence_refs": list(e.competence_refs),
        "participant_refs": list(e.participant_refs),
        "tags": list(e.tags),
    }
    if e.level != model.PEDAGOGICAL_LEVELS[-1]:
        out["children"] = [_pedagogical_dict(c) for c in e.children]
    return out


def _ludic_dict(e: LudicElement) -> dict:
    out: dict = {
        "id": e.id,
        "level": e.level,
        "kind": e.kind,
        "title": e.title,
        "description": e.description,
        "staged_refs": list(e.staged_refs),
        "character_refs": list(e.character_refs),
    }
    if e.duration_minutes is not None:
        out["duration_minutes"] = e.duration_minutes
    if e.interaction_mode is not None:
        out["interaction_mode"] = e.interaction_mode
    if e.level != model.LUDIC_LEVELS[-1]:
        out["children"] = [_ludic_dict(c) for c in e.children]
    return out


def serialize(scenario: Scenario) -> str:
    """Canonical document text. Raises InvalidScenarioError on error diagnostics."""
    diagnostics = validate(scenario)
    if any(d.is_error for d in diagnostics):
        raise InvalidScenarioError(diagnostics)
    return json.dumps(to_dict(scenario), indent=2, ensure_ascii=False) + "\n"


def canonicalize(text: Union[str, bytes]) -> str:
    return serialize(parse(text))


def load(path: Union[str, Path]) -> Scenario:
    return parse(Path(path).read_bytes())


def dump(scenario: Scenario, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize(scenario), encoding="utf-8")
