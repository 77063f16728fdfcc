"""
Comparing two revisions of a game
=================================

Four student projects were revised after a design-pattern workshop. The
pattern diff between the before and after scenarios shows what was added.
"""

from ludoscene import detect, diff
from ludoscene.corpus import fixture
from ludoscene.patterns.detector import sort_ids

for team in ("LG1", "LG2", "LG3", "LG4"):
    before = detect(fixture(f"{team}_before").scenario)
    after = detect(fixture(f"{team}_after").scenario)
    change = diff(before, after)
    print(f"{team}: before {' '.join(sort_ids(change.before))}")
    print(f"{team}: added  {' '.join(sort_ids(change.added))}")
