"""
Building and validating a scenario
==================================

A scenario pairs a pedagogical tree (module, act, activity) with a ludic tree
(mission, sequence, level). Staging links tie them together level by level.
"""

from ludoscene import (
    Competence,
    LudicElement,
    PedagogicalElement,
    Scenario,
    serialize,
    validate,
)

# Two competences from different disciplines and one module using both.
competences = (
    Competence("c-trajectory", "Compute a trajectory", "physics"),
    Competence("c-equations", "Solve equations", "mathematics"),
)
module = PedagogicalElement(
    "module-equations", "module", "Equations", "Find the launch angle",
    competence_refs=("c-equations", "c-trajectory"),
)

# A mission stages the module. A sequence may stage only acts, so staging
# the module from a sequence is a level mismatch.
sequence = LudicElement("sequence-launch", "sequence", "Launch", "narrative", staged_refs=("module-equations",))
mission = LudicElement("mission-rocket", "mission", "Rocket", "core",
                       staged_refs=("module-equations",), children=(sequence,))

broken = Scenario(competences=competences, pedagogical=(module,), ludic=(mission,))
for diagnostic in validate(broken):
    print(diagnostic)

# Dropping the bad link leaves a clean scenario that serializes canonically.
fixed_sequence = LudicElement("sequence-launch", "sequence", "Launch", "narrative")
fixed = Scenario(
    competences=competences,
    pedagogical=(module,),
    ludic=(LudicElement("mission-rocket", "mission", "Rocket", "core",
                        staged_refs=("module-equations",), children=(fixed_sequence,)),),
)
print("diagnostics after the fix:", validate(fixed))
print(serialize(fixed)[:200], "...")
