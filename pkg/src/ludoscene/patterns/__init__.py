from ludoscene.patterns.catalog import CATALOG, PATTERN_IDS, PatternRule, catalog, rule, rulebook
from ludoscene.patterns.detector import (
    REPORT_VERSION,
    PatternDiff,
    PatternReport,
    PatternResult,
    Unmet,
    detect,
    diff,
    explain,
)

__all__ = [
    "CATALOG",
    "PATTERN_IDS",
    "PatternRule",
    "catalog",
    "rule",
    "rulebook",
    "REPORT_VERSION",
    "PatternDiff",
    "PatternReport",
    "PatternResult",
    "Unmet",
    "detect",
    "diff",
    "explain",
]
