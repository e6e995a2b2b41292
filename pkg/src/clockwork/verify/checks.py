"""Whole-diagram checks with witnesses, and the report harness."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..alexander import (
    alexander_matrix,
    check_signed_relation,
    column_relations_hold,
    compliant_labeling,
    det,
    reduced,
)
from ..diagram import LEFT, RIGHT, Diagram
from ..polyring import LaurentPoly, PotentialValue, link_var, rat_eq
from ..potential import colored_potential, norm_factor
from ..states import adjacent_star_pairs, clock_graph
from ..statesum import BW, FORMAL, LINKVARS, SCHEMES, WeightScheme, crossing_identities, state_sum
from . import families as fam
from .rewrite import apply_r1, apply_r2, apply_r3, r2_sites, r3_sites

CHECK_NAMES = ("clock", "stars", "det", "identities", "columns", "rmoves", "r1factor", "axioms")


@dataclass
class CheckReport:
    check: str
    passed: bool
    count: int = 0
    witness: dict | None = None
    skipped: str | None = None

    def to_json_obj(self) -> dict:
        out = {"check": self.check, "pass": self.passed, "count": self.count}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.skipped:
            out["skipped"] = self.skipped
        return out


def _skip(check: str, why: str) -> CheckReport:
    return CheckReport(check, True, 0, None, why)


def check_clock_theorem(d: Diagram) -> CheckReport:
    if not d.connected:
        return _skip("clock", "projection not connected")
    n = 0
    for sp in adjacent_star_pairs(d):
        g = clock_graph(d, sp)
        n += 1
        src, snk = g.sources(), g.sinks()
        if len(src) != 1 or len(snk) != 1 or len(g.reachable(src[0])) != len(g.nodes):
            return CheckReport("clock", False, n, {
                "stars": list(sp.regions), "sources": [g.nodes[i].key() for i in src],
                "sinks": [g.nodes[i].key() for i in snk], "states": len(g.nodes)})
    return CheckReport("clock", True, n)


def f_value(d: Diagram, sp=None, w: WeightScheme | None = None) -> PotentialValue:
    """``<L|S> / |S|`` before the curvature factor."""
    sp = sp or adjacent_star_pairs(d)[0]
    return PotentialValue(state_sum(d, sp, w or SCHEMES[LINKVARS]).value, norm_factor(d, sp))


def check_star_independence(d: Diagram, w: WeightScheme | None = None) -> CheckReport:
    if not d.connected:
        return _skip("stars", "projection not connected")
    pairs = adjacent_star_pairs(d)
    ref = f_value(d, pairs[0], w)
    for k, sp in enumerate(pairs):
        v = f_value(d, sp, w)
        if not rat_eq(v, ref):
            return CheckReport("stars", False, k + 1, {
                "stars": list(sp.regions), "value": str(v), "reference": str(ref)})
    return CheckReport("stars", True, len(pairs))


def check_det_equivalence(d: Diagram, schemes=(FORMAL, BW, LINKVARS), weights: dict | None = None) -> CheckReport:
    """State sum equals the reduced determinant with the predicted sign.

    ``weights`` maps a scheme name to a replacement ``WeightScheme`` (used by
    negative controls).
    """
    if not d.connected:
        return _skip("det", "projection not connected")
    n = 0
    for name in schemes:
        w = (weights or {}).get(name, SCHEMES[name])
        A = alexander_matrix(d, w)
        for sp in adjacent_star_pairs(d):
            n += 1
            D = det(reduced(A, sp.low, sp.high))
            P = state_sum(d, sp, w).value
            if D != P and D != -P:
                return CheckReport("det", False, n, {
                    "scheme": name, "stars": list(sp.regions), "det": str(D), "state_sum": str(P)})
        try:
            lab = compliant_labeling(d, scheme=w)
        except ValueError as e:
            return CheckReport("det", False, n, {"scheme": name, "labeling": str(e)})
        for i, j, predicted, observed in check_signed_relation(d, w, lab):
            n += 1
            if predicted != observed:
                return CheckReport("det", False, n, {
                    "scheme": name, "labels": [i, j], "predicted": predicted, "observed": observed})
    return CheckReport("det", True, n)


def check_identities(d: Diagram) -> CheckReport:
    if not d.connected:
        return _skip("identities", "projection not connected")
    ids = crossing_identities(d)
    for cid, (s1, s2) in ids.items():
        if not (s1.is_zero() and s2.is_zero()):
            return CheckReport("identities", False, cid, {"crossing": cid, "first": str(s1), "second": str(s2)})
    return CheckReport("identities", True, 2 * len(ids))


def check_columns(d: Diagram) -> CheckReport:
    if not d.connected or d.n == 0:
        return _skip("columns", "no Alexander matrix")
    for scheme in (BW, LINKVARS):
        if not column_relations_hold(d, scheme):
            return CheckReport("columns", False, 0, {"scheme": scheme})
    return CheckReport("columns", True, 2 * (d.n + 2))


def generated_rewrites(d: Diagram):
    """Yield ``(description, rewritten diagram)`` for every Reidemeister site found in ``d``."""
    for a in d.arcs:
        for v in ("curl+", "curl-"):
            for side in (LEFT, RIGHT):
                yield f"R1 {v} {side} on arc {a}", apply_r1(d, a, v, side)
    if not d.connected:
        return
    for a, b, r in r2_sites(d):
        for over in ("a", "b"):
            e = apply_r2(d, a, b, r, over)
            yield f"R2 arcs {a},{b} region {r} over {over}", e
            for t in r3_sites(e):
                yield f"R2 arcs {a},{b} region {r} over {over} then R3 at {t}", apply_r3(e, t)
    for t in r3_sites(d):
        yield f"R3 at region {t}", apply_r3(d, t)


def check_rmoves(d: Diagram) -> CheckReport:
    before = colored_potential(d)
    n = 0
    for desc, e in generated_rewrites(d):
        n += 1
        after = colored_potential(e)
        if not rat_eq(before, after):
            return CheckReport("rmoves", False, n, {"move": desc, "before": str(before), "after": str(after)})
    return CheckReport("rmoves", True, n)


def check_r1_factor(d: Diagram) -> CheckReport:
    """``F`` scales by ``X_K^{-1}`` for a counterclockwise curl and ``X_K`` for a clockwise one."""
    if not d.connected:
        return _skip("r1factor", "projection not connected")
    base = f_value(d)
    n = 0
    for a in d.arcs:
        xk = LaurentPoly.var(link_var(d.arc_component[a]))
        for v in ("curl+", "curl-"):
            for side, factor in ((LEFT, xk ** -1), (RIGHT, xk)):
                e = apply_r1(d, a, v, side)
                n += 1
                got = f_value(e)
                if not rat_eq(got, base * factor):
                    return CheckReport("r1factor", False, n, {"arc": a, "variant": v, "side": side,
                                                              "before": str(base), "after": str(got)})
    return CheckReport("r1factor", True, n)


def axiom_families(d: Diagram) -> list:
    """Every axiom (i), (ii), (v) family that can be cut into ``d``."""
    out = []
    for c in d.crossings:
        u, o = d.strand_components(c.id)
        if d.colors[u] == d.colors[o]:
            out.append(fam.build_skein_family(d, c.id, fam.AXIOM_I))
        out.append(fam.build_skein_family(d, c.id, fam.AXIOM_II))
    for a in d.arcs:
        out.append(fam.build_skein_family(d, a, fam.AXIOM_V))
        out.append(fam.build_skein_family(d, a, fam.AXIOM_V, "fresh"))
    return out


def check_axioms(d: Diagram) -> CheckReport:
    """Axioms (i), (ii), (v) at every site, plus (vi) on disconnected projections."""
    n = 0
    if not d.connected:
        r = fam.check_split_axiom(d)
        n += 1
        if not r.passed:
            return CheckReport("axioms", False, n, r.to_json_obj())
    for family in axiom_families(d):
        r = fam.check_axiom(family)
        n += 1
        if not r.passed:
            return CheckReport("axioms", False, n, r.to_json_obj())
    return CheckReport("axioms", True, n)


CHECKS = {
    "clock": check_clock_theorem,
    "stars": check_star_independence,
    "det": check_det_equivalence,
    "identities": check_identities,
    "columns": check_columns,
    "rmoves": check_rmoves,
    "r1factor": check_r1_factor,
    "axioms": check_axioms,
}


@dataclass
class Report:
    results: dict = field(default_factory=dict)   # diagram name -> [CheckReport]

    @property
    def passed(self) -> bool:
        return all(r.passed for rs in self.results.values() for r in rs)

    def to_json_obj(self) -> dict:
        return {
            "pass": self.passed,
            "diagrams": {name: [r.to_json_obj() for r in rs] for name, rs in sorted(self.results.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True)


def run_checks(diagrams, checks=CHECK_NAMES, **kwargs) -> Report:
    """Run the named checks on each diagram; keyword arguments go to ``check_det_equivalence``."""
    rep = Report()
    for d in diagrams:
        rs = []
        for name in checks:
            fn = CHECKS[name]
            rs.append(fn(d, **kwargs) if name == "det" else fn(d))
        rep.results[d.name] = rs
    return rep


__all__ = [
    "CHECKS", "CHECK_NAMES", "CheckReport", "Report", "axiom_families",
    "check_axioms", "check_clock_theorem", "check_columns", "check_det_equivalence",
    "check_identities", "check_r1_factor", "check_rmoves", "check_star_independence",
    "f_value", "generated_rewrites", "run_checks",
]
