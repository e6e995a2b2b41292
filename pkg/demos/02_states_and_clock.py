"""
States and the clock graph of a trefoil
=======================================

Enumerate the states for one star pair, then walk the transposition graph
from the clocked state to the counter-clocked state.
"""
from importlib import resources

from clockwork import parse_diagram
from clockwork.states import adjacent_star_pairs, clock_graph, enumerate_states

d = parse_diagram((resources.files("clockwork") / "corpus" / "trefoil_right.pd").read_text())

# stars sit on two regions that share an arc
sp = adjacent_star_pairs(d)[0]
print("starred regions:", sp.regions)

# a state puts one marker (crossing:quadrant) in every unstarred region
for s in enumerate_states(d, sp):
    print("state", s.key())

# clockwise transpositions point away from the unique source
g = clock_graph(d, sp)
print("source:", g.nodes[g.sources()[0]].key())
print("sink:  ", g.nodes[g.sinks()[0]].key())
print(g.to_dot(d.name))
