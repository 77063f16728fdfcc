"""Acceptance criteria 1 to 6, one check each.

Each check returns ``(passed, detail)``. Under pytest the outcome is recorded
and printed as one PASS/FAIL line per criterion in the terminal summary; run
this file directly to get the same lines without pytest.
"""

from __future__ import annotations

import time

import oracle
from builders import three_by_three
from ludoscene.capillarity import aggregate_subtree, propagate
from ludoscene.corpus import ADDED_PATTERNS, FIXTURE_NAMES, EXPECTED_PATTERNS, fixture, fixture_path
from ludoscene.corpus.generate import random_scenario
from ludoscene.document import canonicalize, parse, serialize
from ludoscene.model import PEDAGOGICAL_LEVELS, STAGING_LEVEL, replace_element
from ludoscene.patterns import detect, diff
from ludoscene.patterns.catalog import PATTERN_IDS
from ludoscene.scaffold import ScaffoldConfig, scaffold
from ludoscene.validation import validate

RESULTS: dict[int, tuple[bool, str]] = {}
TITLES = {
    1: "corpus reproduction (LS, PU exact sets, < 1 s each)",
    2: "team project diffs (added sets, nothing removed)",
    3: "scaffold contract",
    4: "oracle equivalence over 1000 random scenarios",
    5: "validator mutation suite",
    6: "canonical round trip",
}


def check_corpus_reproduction():
    problems, timings = [], []
    for name in ("LS", "PU"):
        raw = fixture_path(name).read_bytes()
        start = time.perf_counter()
        present = detect(parse(raw)).present
        elapsed = time.perf_counter() - start
        timings.append(f"{name} {elapsed * 1000:.1f} ms")
        if present != EXPECTED_PATTERNS[name]:
            problems.append(f"{name}: got {sorted(present)}")
        if elapsed >= 1.0:
            problems.append(f"{name}: {elapsed:.2f} s")
    return not problems, "; ".join(problems or timings)


def check_table_diffs():
    problems = []
    for team, added in sorted(ADDED_PATTERNS.items()):
        d = diff(detect(fixture(f"{team}_before").scenario), detect(fixture(f"{team}_after").scenario))
        if d.added != added or d.removed:
            problems.append(f"{team}: added {sorted(d.added)} removed {sorted(d.removed)}")
    return not problems, "; ".join(problems) or "LG1-LG4 match"


def check_scaffold():
    problems = []
    base = scaffold(ScaffoldConfig())
    if any(d.is_error for d in validate(base)):
        problems.append("default shell has errors")
    if not {"P1", "P2", "P3", "P5", "P6", "P7"} <= detect(base).present:
        problems.append(f"default shell detects {sorted(detect(base).present)}")
    if "P9" not in detect(scaffold(ScaffoldConfig(include_report_mission=True))).present:
        problems.append("report shell lacks P9")
    return not problems, "; ".join(problems) or "defaults and report variant hold"


def check_oracle_equivalence(samples: int = 1000):
    rule_mismatches = capillarity_mismatches = 0
    for seed in range(samples):
        sc = random_scenario(seed, max_elements=30)
        report = detect(sc)
        for pid in PATTERN_IDS:
            if report[pid].present != oracle.RULES[pid](sc):
                rule_mismatches += 1
        sets = propagate(sc)
        naive = oracle.effective_sets(sc)
        for eid, e in sets.items():
            if (e.competences, e.participants) != naive[eid]:
                capillarity_mismatches += 1
        for element in sc.ludic:
            rolled = aggregate_subtree(sc, element.id, sets)
            if (rolled.competences, rolled.participants) != oracle.subtree_sets(sc, element.id):
                capillarity_mismatches += 1
    ok = rule_mismatches == capillarity_mismatches == 0
    return ok, f"{samples} scenarios, {rule_mismatches} verdict and {capillarity_mismatches} capillarity mismatches"


def check_mutation_suite():
    problems = []
    cleared = kept = crossed = 0
    pairs_seen = set()
    for name in FIXTURE_NAMES:
        sc = fixture(name).scenario
        for element in sc.pedagogical_elements():
            # remove links one at a time until none is left; only the last removal may
            # (and must) raise exactly one E_MISSING_COMPETENCE
            refs = list(element.competence_refs)
            while refs:
                refs.pop()
                found = [d.code for d in validate(replace_element(sc, element.id, competence_refs=tuple(refs)))]
                expected = [] if refs else ["E_MISSING_COMPETENCE"]
                if found != expected:
                    problems.append(f"{name}/{element.id} with {len(refs)} links: {found}")
                if refs:
                    kept += 1
                else:
                    cleared += 1
        targets = sc.pedagogical_elements()
        for element in sc.ludic_elements():
            for target in targets:
                if target.level == STAGING_LEVEL[element.level]:
                    continue
                mutated = replace_element(sc, element.id, staged_refs=element.staged_refs + (target.id,))
                found = [d.code for d in validate(mutated)]
                if found != ["E_LEVEL_MISMATCH"]:
                    problems.append(f"{name}: {element.id} staging {target.id}: {found}")
                crossed += 1
                pairs_seen.add((element.level, target.level))
    cross_pairs = {(lv, pv) for lv in STAGING_LEVEL for pv in PEDAGOGICAL_LEVELS if STAGING_LEVEL[lv] != pv}
    if pairs_seen != cross_pairs:
        problems.append(f"cross-level pairs not exercised: {sorted(cross_pairs - pairs_seen)}")
    grid = sum(
        1 for lv in STAGING_LEVEL for target in ("module", "act", "activity")
        if [d.code for d in validate(three_by_three({lv: (target,)}))] == ["E_LEVEL_MISMATCH"]
    )
    if grid != 6:
        problems.append(f"3x3 grid flagged {grid} pairs")
    detail = (
        f"{cleared} last-link removals, {kept} partial removals, "
        f"{crossed} cross-level links over {len(pairs_seen)} level pairs, 3x3 grid {grid}/6"
    )
    return not problems, "; ".join(problems[:5]) or detail


def check_round_trip():
    diffs = []
    for name in FIXTURE_NAMES:
        raw = fixture_path(name).read_bytes()
        once = serialize(parse(raw))
        if once.encode("utf-8") != raw:
            diffs.append(f"{name}: parse/serialize changed bytes")
        if canonicalize(once) != once:
            diffs.append(f"{name}: not idempotent")
    for config in (ScaffoldConfig(), ScaffoldConfig(core_mission_count=0, include_report_mission=True)):
        text = serialize(scaffold(config))
        if canonicalize(text) != text:
            diffs.append("scaffold output not idempotent")
    return not diffs, "; ".join(diffs) or f"{len(FIXTURE_NAMES)} corpus files byte-identical"


CHECKS = {
    1: check_corpus_reproduction,
    2: check_table_diffs,
    3: check_scaffold,
    4: check_oracle_equivalence,
    5: check_mutation_suite,
    6: check_round_trip,
}


def summary_line(number: int) -> str:
    ok, detail = RESULTS[number]
    return f"criterion {number} {'PASS' if ok else 'FAIL'}: {TITLES[number]} ({detail})"


def _run(number: int) -> None:
    RESULTS[number] = CHECKS[number]()
    ok, detail = RESULTS[number]
    assert ok, summary_line(number)


def test_criterion_1_corpus_reproduction():
    _run(1)


def test_criterion_2_table_diffs():
    _run(2)


def test_criterion_3_scaffold():
    _run(3)


def test_criterion_4_oracle_equivalence():
    _run(4)


def test_criterion_5_mutation_suite():
    _run(5)


def test_criterion_6_round_trip():
    _run(6)


if __name__ == "__main__":
    for n, check in CHECKS.items():
        RESULTS[n] = check()
        print(summary_line(n))
