"""The eleven acceptance criteria, one test each.

Each test records a one-line verdict that is printed in the pytest terminal
summary; running this file as a script prints the same lines.
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE, CONNECTED, SPLIT, all_corpus, corpus  # noqa: E402

from clockwork.alexander import column_relations_hold  # noqa: E402
from clockwork.braids import braid_closure  # noqa: E402
from clockwork.polyring import ONE, ZERO, LaurentPoly, PotentialValue, color_var, rat_eq  # noqa: E402
from clockwork.potential import colored_potential  # noqa: E402
from clockwork.statesum import BW, LINKVARS  # noqa: E402
from clockwork.verify import families as fam  # noqa: E402
from clockwork.verify.checks import (  # noqa: E402
    axiom_families,
    check_clock_theorem,
    check_det_equivalence,
    check_identities,
    check_r1_factor,
    check_rmoves,
    check_star_independence,
)

TITLES = {
    1: "unknot value",
    2: "split vanishing",
    3: "determinant equivalence with sign law",
    4: "star independence",
    5: "Reidemeister invariance",
    6: "R1 factor law",
    7: "clock theorem",
    8: "axioms (i) (ii) (iii) (v)",
    9: "per-crossing vanishing identities",
    10: "column relations",
    11: "skein-oracle values",
}


def _record(k, ok, detail):
    ACCEPTANCE[k] = f"criterion {k:2d} {'PASS' if ok else 'FAIL'}  {TITLES[k]}: {detail}"
    assert ok, ACCEPTANCE[k]


def _run_all(check, diagrams):
    reports = [(d.name, check(d)) for d in diagrams]
    failed = [(n, r.witness) for n, r in reports if not r.passed]
    return failed, sum(r.count for _, r in reports)


def test_criterion_01_unknot_value():
    v = colored_potential(corpus("unknot"))
    x = LaurentPoly.var(color_var("a"))
    _record(1, rat_eq(v, PotentialValue(ONE, x - x ** -1)), f"{v}")


def test_criterion_02_split_vanishing():
    vals = {n: colored_potential(corpus(n)) for n in SPLIT}
    _record(2, len(vals) >= 3 and all(v.is_zero() for v in vals.values()),
            ", ".join(f"{n}={v}" for n, v in vals.items()))


def test_criterion_03_determinant_equivalence():
    failed, n = _run_all(check_det_equivalence, all_corpus())
    _record(3, not failed, f"{n} identities" + (f"; first failure {failed[0]}" if failed else ""))


def test_criterion_04_star_independence():
    failed, n = _run_all(check_star_independence, all_corpus())
    _record(4, not failed, f"{n} star pairs" + (f"; first failure {failed[0]}" if failed else ""))


def test_criterion_05_reidemeister_invariance():
    failed, n = _run_all(check_rmoves, all_corpus())
    _record(5, not failed and n >= 100, f"{n} rewrite instances" + (f"; first failure {failed[0]}" if failed else ""))


def test_criterion_06_r1_factor():
    failed, n = _run_all(check_r1_factor, all_corpus())
    _record(6, not failed, f"{n} curls" + (f"; first failure {failed[0]}" if failed else ""))


def test_criterion_07_clock_theorem():
    failed, n = _run_all(check_clock_theorem, all_corpus())
    _record(7, not failed, f"{n} clock graphs" + (f"; first failure {failed[0]}" if failed else ""))


def test_criterion_08_axioms():
    counts = {fam.AXIOM_I: 0, fam.AXIOM_II: 0, fam.AXIOM_V: 0, fam.AXIOM_III: 0}
    bad = []
    for name in CONNECTED:
        for family in axiom_families(corpus(name)):
            r = fam.check_axiom(family)
            counts[family.which] += 1
            if not r.passed:
                bad.append(r.to_json_obj())
    for ctx in ([], [1, 1], [-2, -2]):
        r = fam.check_axiom(fam.build_skein_family(None, ctx, fam.AXIOM_III))
        counts[fam.AXIOM_III] += 1
        if not r.passed:
            bad.append(r.to_json_obj())
    enough = all(counts[a] >= 3 for a in (fam.AXIOM_I, fam.AXIOM_II, fam.AXIOM_V)) and counts[fam.AXIOM_III] >= 2
    detail = ", ".join(f"{k} at {v} sites" for k, v in counts.items())
    _record(8, enough and not bad, detail + (f"; first failure {bad[0]}" if bad else ""))


def test_criterion_09_vanishing_identities():
    failed, n = _run_all(check_identities, all_corpus())
    _record(9, not failed, f"{n} identities" + (f"; first failure {failed[0]}" if failed else ""))


def test_criterion_10_column_relations():
    bad, n = [], 0
    for name in CONNECTED:
        d = corpus(name)
        if d.n == 0:
            continue
        for scheme in (BW, LINKVARS):
            n += len(d.regions)
            if not column_relations_hold(d, scheme):
                bad.append((name, scheme))
    _record(10, not bad, f"{n} columns" + (f"; failures {bad}" if bad else ""))


def _skein_oracle(k):
    """Closed 2-braid sigma^k, one color, from axioms (vi), (iv) and (i) alone."""
    x = LaurentPoly.var(color_var("a"))
    z = x - x ** -1
    vals = [PotentialValue(ZERO, ONE), PotentialValue(ONE, z)]
    for _ in range(2, abs(k) + 1):
        vals.append(vals[-2] + vals[-1] * z)
    if k >= 0:
        return vals[k]
    back = {0: vals[0], 1: vals[1]}
    for m in range(-1, k - 1, -1):
        back[m] = back[m + 2] - back[m + 1] * z
    return back[k]


def test_criterion_11_skein_oracle():
    cases = {"trefoil_right": 3, "trefoil_left": -3, "hopf_pos": 2, "hopf_neg": -2}
    rows, ok = [], True
    for name, k in cases.items():
        d = corpus(name)
        mono = d.recolored({c: "a" for c in d.colors})
        got, want = colored_potential(mono), _skein_oracle(k)
        ok = ok and rat_eq(got, want)
        rows.append(f"{name}={got}")
    # the same oracle against freshly built closures
    for k in (4, 5, -4):
        ok = ok and rat_eq(colored_potential(braid_closure([1 if k > 0 else -1] * abs(k), 2, ("a", "a"))), _skein_oracle(k))
    _record(11, ok, "; ".join(rows))


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted((n, f) for n, f in globals().items() if n.startswith("test_criterion_")):
        try:
            fn()
        except AssertionError:
            failures += 1
        k = int(name.split("_")[2])
        print(ACCEPTANCE.get(k, f"criterion {k:2d} FAIL  {TITLES[k]}: error before recording"))
    sys.exit(1 if failures else 0)
