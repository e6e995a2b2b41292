"""Corner weights and state polynomials.

Every crossing has four quadrants.  Relative to the two oriented strands they
are: the low corner (left of both strands), the high corner (right of both)
and two side corners.  The formal scheme names them

    D  low corner            U  high corner
    I  side corner counterclockwise-adjacent to the low corner
    O  the other side corner

and a state picks up the sign -1 for every marker on an I corner.  The B/W
scheme sends I -> B, O -> W, U, D -> 1.  The link-variable scheme puts
``X_K^{+1}`` on the right of a chosen strand of component ``K`` and
``X_K^{-1}`` on its left: the over strand at positive crossings and the under
strand at negative ones.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Diagram
from .polyring import B_VAR, ONE, W_VAR, ZERO, LaurentPoly, VarId, VarKind, link_var
from .states import KState, StarPair, enumerate_states

FORMAL, BW, LINKVARS = "Formal", "BW", "LinkVars"

# which strand carries the link variable, by crossing sign
LINK_STRAND = {+1: "under", -1: "under"}


def corner_labels(d: Diagram, cid: int) -> dict:
    """Map quadrant -> one of "I", "O", "U", "D" for a crossing."""
    c = d.crossing(cid)
    low = c.low_quadrant
    return {low: "D", (low + 1) % 4: "I", (low + 2) % 4: "U", (low + 3) % 4: "O"}


def i_quadrant(d: Diagram, cid: int) -> int:
    return (d.crossing(cid).low_quadrant + 1) % 4


@dataclass
class WeightScheme:
    """Corner -> weight table.  ``overrides`` patches individual corners."""

    kind: str
    overrides: dict = field(default_factory=dict)

    def weight(self, d: Diagram, cid: int, q: int) -> LaurentPoly:
        if (cid, q) in self.overrides:
            return self.overrides[(cid, q)]
        if self.kind == FORMAL:
            lab = corner_labels(d, cid)[q]
            return LaurentPoly.var(VarId(VarKind[lab], cid))
        if self.kind == BW:
            lab = corner_labels(d, cid)[q]
            return {"I": LaurentPoly.var(B_VAR), "O": LaurentPoly.var(W_VAR)}.get(lab, ONE)
        if self.kind == LINKVARS:
            return link_weight(d, cid, q)
        raise ValueError(f"unknown weight scheme {self.kind!r}")

    def sign_flag(self, d: Diagram, cid: int, q: int) -> bool:
        return q == i_quadrant(d, cid)


def link_weight(d: Diagram, cid: int, q: int) -> LaurentPoly:
    c = d.crossing(cid)
    if LINK_STRAND[c.sign] == "over":
        comp, right = d.arc_component[c.ports[1]], c.right_of_over(q)
    else:
        comp, right = d.arc_component[c.ports[0]], c.right_of_under(q)
    return LaurentPoly.var(link_var(comp), 1 if right else -1)


FORMAL_SCHEME = WeightScheme(FORMAL)
BW_SCHEME = WeightScheme(BW)
LINK_SCHEME = WeightScheme(LINKVARS)
SCHEMES = {FORMAL: FORMAL_SCHEME, BW: BW_SCHEME, LINKVARS: LINK_SCHEME}


def sigma(d: Diagram, s: KState) -> int:
    flips = sum(1 for cid, q in s.markers if q == i_quadrant(d, cid))
    return -1 if flips % 2 else 1


def bracket(d: Diagram, s: KState, w: WeightScheme) -> LaurentPoly:
    out = ONE
    for cid, q in s.markers:
        out = out * w.weight(d, cid, q)
    return out


@dataclass(frozen=True)
class StateSum:
    value: LaurentPoly
    scheme: str
    stars: StarPair | None


def state_sum(d: Diagram, stars: StarPair | None, w: WeightScheme = LINK_SCHEME) -> StateSum:
    if not d.connected:
        return StateSum(ZERO, w.kind, stars)
    total = ZERO
    for s in enumerate_states(d, stars):
        term = bracket(d, s, w)
        total = total + (term if sigma(d, s) > 0 else -term)
    return StateSum(total, w.kind, stars)


def bw_specialize(formal_sum: LaurentPoly) -> LaurentPoly:
    sub = {}
    for v in formal_sum.variables():
        if v.kind == VarKind.I:
            sub[v] = LaurentPoly.var(B_VAR)
        elif v.kind == VarKind.O:
            sub[v] = LaurentPoly.var(W_VAR)
        elif v.kind in (VarKind.U, VarKind.D):
            sub[v] = ONE
    return formal_sum.substitute(sub)


def index_monomial(d: Diagram, region: int) -> LaurentPoly:
    """``prod_K X_K^{-2 p_K}`` for a region with index ``p``."""
    comps = sorted(d.colors)
    return LaurentPoly.monomial({link_var(k): -2 * p for k, p in zip(comps, d.index[region])})


def parity(d: Diagram, region: int) -> int:
    return -1 if sum(d.index[region]) % 2 else 1


def crossing_identities(d: Diagram, w: WeightScheme = LINK_SCHEME) -> dict:
    """Per crossing, the two signed corner sums that must vanish.

    ``sum_q (-1)^{|p|} w_q`` and ``sum_q (-1)^{|p|} X^{-2p} w_q`` over the
    four quadrants, ``p`` being the index of the quadrant's region.
    """
    out = {}
    for c in d.crossings:
        s1 = s2 = ZERO
        for q in range(4):
            r = d.corner_region[(c.id, q)]
            wt = w.weight(d, c.id, q) * parity(d, r)
            s1 = s1 + wt
            s2 = s2 + wt * index_monomial(d, r)
        out[c.id] = (s1, s2)
    return out
