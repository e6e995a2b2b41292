"""
Potential functions of the shipped corpus
=========================================

Load each PD file, compute its potential as a normalized state sum, and
print it in color variables.
"""
from importlib import resources

from clockwork import colored_potential, parse_diagram
from clockwork.potential import Coloring

# the corpus ships inside the package
root = resources.files("clockwork") / "corpus"
for path in sorted(root.iterdir(), key=lambda p: p.name):
    if not path.name.endswith(".pd"):
        continue
    d = parse_diagram(path.read_text())
    print(f"{d.name:16s} {d.n:2d} crossings  {colored_potential(d)}")

# giving two components the same color merges their variables
d = parse_diagram((root / "torus_2_4.pd").read_text())
print("torus_2_4, two colors:", colored_potential(d))
print("torus_2_4, one color: ", colored_potential(d, Coloring.of(d, {1: "a", 2: "a"})))
