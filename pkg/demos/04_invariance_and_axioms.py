"""
Reidemeister moves and skein axioms
===================================

Rewrite a diagram with Reidemeister moves of every type and confirm the potential does
not change, then check the skein axioms on families cut into it.
"""
from importlib import resources

from clockwork import colored_potential, parse_diagram
from clockwork.polyring import rat_eq
from clockwork.verify import families as fam
from clockwork.verify.checks import generated_rewrites

d = parse_diagram((resources.files("clockwork") / "corpus" / "trefoil_right.pd").read_text())
before = colored_potential(d)
moves = list(generated_rewrites(d))
unchanged = sum(rat_eq(colored_potential(e), before) for _, e in moves)
print(f"{unchanged} of {len(moves)} rewrites keep {before}")

# a crossing switch with its smoothing for axiom i, a doubled twist for axiom ii
# and a meridian clasp for axiom v
for which, site in ((fam.AXIOM_I, 1), (fam.AXIOM_II, 2), (fam.AXIOM_V, 3)):
    r = fam.check_axiom(fam.build_skein_family(d, site, which))
    print(which, "holds" if r.passed else "FAILS", "at", r.closure)

# the seven-term relation on closed three-strand braids
for context in ([], [1, 1]):
    r = fam.check_axiom(fam.build_skein_family(None, context, fam.AXIOM_III))
    print("seven-term sum with context", context, "=", r.lhs)
