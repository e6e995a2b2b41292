"""Skein families for the potential-function axioms and their checks.

Families for axioms (i), (ii) and (v) are cut into an existing diagram at a
crossing or an arc.  The seven links of axiom (iii) are closed three-strand
braids ``context + w`` where ``w`` runs over the pure braids named by the
family and the strands carry the colors lambda, mu, nu from left to right.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..braids import braid_closure
from ..diagram import Diagram
from ..polyring import ONE, ZERO, LaurentPoly, PotentialValue, color_var, g_minus, g_plus, rat_eq
from ..potential import colored_potential
from .rewrite import RewriteError, insert_meridian, replace_crossing

AXIOM_I, AXIOM_II, AXIOM_III, AXIOM_IV, AXIOM_V, AXIOM_VI = (
    "axiom-i", "axiom-ii", "axiom-iii", "axiom-iv", "axiom-v", "axiom-vi")

# three-strand pure braids of the seven-term relation; generator i crosses
# positions i and i+1
SEVEN = {
    "2112": [2, 1, 1, 2],
    "1221": [1, 2, 2, 1],
    "1122": [1, 1, 2, 2],
    "2211": [2, 2, 1, 1],
    "11": [1, 1],
    "22": [2, 2],
    "000": [],
}


@dataclass
class SkeinFamily:
    which: str
    members: dict                                # member name -> Diagram
    colors: dict = field(default_factory=dict)   # "lambda" / "mu" / "nu" -> color label
    closure: str = ""


@dataclass
class AxiomReport:
    which: str
    lhs: PotentialValue
    rhs: PotentialValue
    passed: bool
    closure: str = ""

    def to_json_obj(self) -> dict:
        return {"axiom": self.which, "lhs": str(self.lhs), "rhs": str(self.rhs),
                "pass": self.passed, "closure": self.closure}


def _x(label) -> LaurentPoly:
    return LaurentPoly.var(color_var(label))


def _strand_colors(d: Diagram, cid: int) -> tuple:
    u, o = d.strand_components(cid)
    return d.colors[u], d.colors[o]


def build_skein_family(d: Diagram | None, site, which: str, colors=None) -> SkeinFamily:
    """Build the family for one axiom.

    ``site`` is a crossing id for axioms (i) and (ii), an arc id for axiom
    (v) and a context braid word for axiom (iii).  ``colors`` gives the new
    circle's color for (v) and the (lambda, mu, nu) triple for (iii).
    """
    if which == AXIOM_I:
        mu, other = _strand_colors(d, site)
        if mu != other:
            raise RewriteError("axiom (i) needs both strands of the same color")
        members = {w: replace_crossing(d, site, word) for w, word in (("+", [1]), ("-", [-1]), ("0", []))}
        return SkeinFamily(which, members, {"mu": mu}, f"{d.name} at crossing {site}")
    if which == AXIOM_II:
        mu, nu = _strand_colors(d, site)
        eps = d.crossing(site).sign
        members = {w: replace_crossing(d, site, word)
                   for w, word in (("++", [eps, 1, 1]), ("--", [eps, -1, -1]), ("00", [eps]))}
        return SkeinFamily(which, members, {"mu": mu, "nu": nu}, f"{d.name} at crossing {site}")
    if which == AXIOM_V:
        mu = d.colors[d.arc_component[site]]
        nu = colors if colors is not None else mu
        members = {"1": insert_meridian(d, site, nu), "2": d}
        return SkeinFamily(which, members, {"mu": mu, "nu": nu}, f"{d.name} at arc {site}")
    if which == AXIOM_III:
        lam, mu, nu = colors or ("l", "m", "n")
        context = list(site)
        members = {}
        for name, word in SEVEN.items():
            members[name] = braid_closure(context + word, n_strands=3, strand_colors=(lam, mu, nu),
                                          name=f"closure of {context}+{name}")
        return SkeinFamily(which, members, {"lambda": lam, "mu": mu, "nu": nu},
                           f"braid closure with context {context}")
    raise ValueError(f"no skein family for {which!r}")


def seven_term(values: dict, lam, mu, nu) -> PotentialValue:
    """Left-hand side of the seven-term relation for potentials ``values``."""
    L, M, Nn = _x(lam), _x(mu), _x(nu)
    coeffs = {
        "2112": g_plus(L) * g_minus(M),
        "1221": -(g_minus(M) * g_plus(Nn)),
        "1122": -g_minus(L ** -1 * Nn),
        "2211": -g_minus(L ** -1 * Nn),
        "11": g_minus(L ** -1 * M * Nn) * g_plus(Nn),
        "22": -(g_plus(L) * g_minus(L * M * Nn ** -1)),
        "000": -g_minus(L ** -2 * Nn ** 2),
    }
    total = PotentialValue(ZERO, ONE)
    for name, c in coeffs.items():
        total = total + values[name] * c
    return total


def check_axiom(family: SkeinFamily, which: str | None = None) -> AxiomReport:
    which = which or family.which
    v = {k: colored_potential(m) for k, m in family.members.items()}
    col = family.colors
    if which == AXIOM_I:
        lhs = v["+"] - v["-"]
        rhs = v["0"] * g_minus(_x(col["mu"]))
    elif which == AXIOM_II:
        lhs = v["++"] + v["--"]
        mu, nu = _x(col["mu"]), _x(col["nu"])
        rhs = v["00"] * (mu * nu + mu ** -1 * nu ** -1)
    elif which == AXIOM_III:
        lhs = seven_term(v, col["lambda"], col["mu"], col["nu"])
        rhs = PotentialValue(ZERO, ONE)
    elif which == AXIOM_V:
        lhs = v["1"]
        rhs = v["2"] * g_minus(_x(col["mu"]))
    else:
        raise ValueError(f"check_axiom does not handle {which!r}")
    return AxiomReport(which, lhs.canonical(), rhs.canonical(), rat_eq(lhs, rhs), family.closure)


def check_unknot_axiom(d: Diagram) -> AxiomReport:
    """Axiom (iv) for a diagram known to be a trivial knot."""
    (label,) = set(d.colors.values())
    x = _x(label)
    want = PotentialValue(ONE, x - x ** -1)
    got = colored_potential(d)
    return AxiomReport(AXIOM_IV, got, want.canonical(), rat_eq(got, want), d.name)


def check_split_axiom(d: Diagram) -> AxiomReport:
    got = colored_potential(d)
    zero = PotentialValue(ZERO, ONE)
    return AxiomReport(AXIOM_VI, got, zero, rat_eq(got, zero), d.name)
