"""
Detecting design patterns in the bundled games
==============================================

The corpus ships two reconstructed games. Each one exhibits eight of the nine
patterns, but not the same eight.
"""

from ludoscene import detect, explain
from ludoscene.corpus import fixture

for name in ("LS", "PU"):
    report = detect(fixture(name).scenario)
    print(name, "present:", " ".join(report.present_ids()))

# Evidence explains why a pattern holds; the nearest-miss hint explains why not.
ls = detect(fixture("LS").scenario)
print(explain(ls, "P5"))
print(explain(ls, "P9"))

pu = detect(fixture("PU").scenario)
print(explain(pu, "P8"))
