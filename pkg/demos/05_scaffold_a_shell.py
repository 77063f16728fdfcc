"""
Starting a new game from a shell
================================

The scaffold builds a starter scenario that already carries the teaser, the
expert team, the supporting teacher and framed core missions.
"""

from ludoscene import ScaffoldConfig, detect, scaffold, serialize

shell = scaffold(ScaffoldConfig(title="Rocket launch", core_mission_count=3, include_report_mission=True))
print("missions:", [m.id for m in shell.ludic])
print("present:", " ".join(detect(shell).present_ids()))

# Text fields are placeholders to rewrite.
print(shell.index["module-1"].element.objective)
print(len(serialize(shell).splitlines()), "lines of canonical JSON")
