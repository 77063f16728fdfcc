"""Learning-game scenario modelling, validation and design-pattern detection."""

from ludoscene.capillarity import Effective, aggregate_subtree, propagate
from ludoscene.document import ParseError, parse, serialize
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
    resolve,
)
from ludoscene.ordering import CycleError, linear_order
from ludoscene.patterns import PatternDiff, PatternReport, catalog, detect, diff, explain, rulebook
from ludoscene.scaffold import ScaffoldConfig, ScaffoldConfigError, scaffold
from ludoscene.validation import Diagnostic, InvalidScenarioError, validate

__version__ = "0.1.0"

__all__ = [
    "BranchGroup",
    "Character",
    "Competence",
    "CycleError",
    "Diagnostic",
    "DocumentRecord",
    "Effective",
    "InvalidScenarioError",
    "LudicElement",
    "Member",
    "Meta",
    "OrderingGraph",
    "ParseError",
    "Participant",
    "PatternDiff",
    "PatternReport",
    "PedagogicalElement",
    "ScaffoldConfig",
    "ScaffoldConfigError",
    "Scenario",
    "aggregate_subtree",
    "catalog",
    "detect",
    "diff",
    "explain",
    "linear_order",
    "parse",
    "propagate",
    "resolve",
    "rulebook",
    "scaffold",
    "serialize",
    "validate",
]
