"""Fixture scenarios reconstructed from the two analysed games and four team projects.

Each fixture ships as a canonical ``.lgs.json`` file next to this module and
carries the pattern set the analysis attributes to it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from pathlib import Path

from ludoscene.corpus.generate import random_scenario
from ludoscene.document import SUFFIX, parse
from ludoscene.model import Scenario

CORPUS_ENV = "LUDOSCENE_CORPUS"

_ALL = frozenset({"P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9"})

# before = already integrated; after = before plus the patterns added
_TABLE = {
    "LG1": ({"P2", "P3"}, {"P1", "P5", "P7"}),
    "LG2": ({"P1", "P2", "P3"}, {"P4"}),
    "LG3": ({"P1", "P2"}, {"P3", "P5", "P4"}),
    "LG4": ({"P2", "P4", "P6"}, {"P1", "P3", "P5", "P7", "P8"}),
}

EXPECTED_PATTERNS: dict[str, frozenset[str]] = {
    "LS": _ALL - {"P9"},
    "PU": _ALL - {"P8"},
}
for _team, (_before, _added) in _TABLE.items():
    EXPECTED_PATTERNS[f"{_team}_before"] = frozenset(_before)
    EXPECTED_PATTERNS[f"{_team}_after"] = frozenset(_before | _added)

ADDED_PATTERNS: dict[str, frozenset[str]] = {team: frozenset(added) for team, (_, added) in _TABLE.items()}

FIXTURE_NAMES: tuple[str, ...] = tuple(EXPECTED_PATTERNS)


class UnknownFixtureError(KeyError):
    pass


@dataclass(frozen=True)
class Fixture:
    name: str
    document: str
    expected_patterns: frozenset[str]

    @cached_property
    def scenario(self) -> Scenario:
        return parse(self.document)


def corpus_dir() -> Path:
    """Directory holding the fixture files; LUDOSCENE_CORPUS overrides the bundled one."""
    override = os.environ.get(CORPUS_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files(__package__) / "data"))


def fixture_path(name: str) -> Path:
    if name not in EXPECTED_PATTERNS:
        raise UnknownFixtureError(f"unknown fixture {name!r}; expected one of {', '.join(FIXTURE_NAMES)}")
    return corpus_dir() / f"{name}{SUFFIX}"


def fixture(name: str) -> Fixture:
    path = fixture_path(name)
    return Fixture(name, path.read_text(encoding="utf-8"), EXPECTED_PATTERNS[name])


__all__ = [
    "ADDED_PATTERNS",
    "CORPUS_ENV",
    "EXPECTED_PATTERNS",
    "FIXTURE_NAMES",
    "Fixture",
    "UnknownFixtureError",
    "corpus_dir",
    "fixture",
    "fixture_path",
    "random_scenario",
]
