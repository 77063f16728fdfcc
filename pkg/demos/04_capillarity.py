"""
Competences and participants carried onto the game
==================================================

A ludic element inherits competences and participants from the pedagogical
elements it stages. Characters bring along the participants who play them.
"""

from ludoscene import aggregate_subtree, propagate
from ludoscene.corpus import fixture

scenario = fixture("LS").scenario
sets = propagate(scenario)

# The teaser stages nothing, yet the teacher and the learner teams reach it
# through the characters linked to it.
print("teaser participants:", sorted(sets["m-hiring"].participants))
print("teaser competences:", sorted(sets["m-hiring"].competences))

# Transfer is direct: the interview mission gets its module's competences.
# The rolled-up view also collects what its sequences stage; here the acts
# only reuse the module's competences, so both views agree.
print("interviews, direct:", sorted(sets["m-interviews"].competences))
print("interviews, subtree:", sorted(aggregate_subtree(scenario, "m-interviews", sets).competences))
