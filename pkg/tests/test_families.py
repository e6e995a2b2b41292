import pytest
from conftest import corpus
from hypothesis import given
from hypothesis import strategies as st

from clockwork.polyring import LaurentPoly, color_var, g_minus, g_plus, rat_eq
from clockwork.potential import colored_potential
from clockwork.verify.families import (
    AXIOM_I,
    AXIOM_II,
    AXIOM_III,
    AXIOM_V,
    SEVEN,
    build_skein_family,
    check_axiom,
    check_split_axiom,
    check_unknot_axiom,
    seven_term,
)
from clockwork.verify.rewrite import RewriteError, insert_meridian


def _x(label):
    return LaurentPoly.var(color_var(label))


_units = st.builds(
    lambda e1, e2: LaurentPoly.monomial({color_var("p"): e1, color_var("q"): e2}),
    st.integers(-3, 3), st.integers(-3, 3))


@given(_units, _units)
def test_bracket_product_identities(a, b):
    # the two identities the seven-term coefficients are built from
    assert g_minus(a) * g_plus(b) + g_plus(a) * g_minus(b) == g_minus(a * b) * 2
    assert g_minus(a) * g_minus(b) == g_plus(a * b) - g_plus(a * b ** -1)


@pytest.mark.parametrize("name", ["trefoil_right", "figure_eight", "whitehead", "hopf_pos"])
def test_axiom_i_at_same_color_crossings(name):
    d = corpus(name)
    done = 0
    for c in d.crossings:
        u, o = d.strand_components(c.id)
        if d.colors[u] != d.colors[o]:
            with pytest.raises(RewriteError):
                build_skein_family(d, c.id, AXIOM_I)
            continue
        r = check_axiom(build_skein_family(d, c.id, AXIOM_I))
        assert r.passed, r.to_json_obj()
        done += 1
    assert done or name == "hopf_pos"


@pytest.mark.parametrize("name", ["trefoil_right", "hopf_pos", "hopf_neg", "whitehead", "borromean"])
def test_axiom_ii_at_every_crossing(name):
    d = corpus(name)
    for c in d.crossings:
        r = check_axiom(build_skein_family(d, c.id, AXIOM_II))
        assert r.passed, r.to_json_obj()


def test_axiom_ii_with_the_other_sign_fails():
    # on a Hopf link the "--" member splits, so use a knot where it does not
    d = corpus("trefoil_right")
    fam = build_skein_family(d, 1, AXIOM_II)
    assert not colored_potential(fam.members["--"]).is_zero()
    v = {k: colored_potential(m) for k, m in fam.members.items()}
    mu, nu = _x(fam.colors["mu"]), _x(fam.colors["nu"])
    assert not rat_eq(v["++"] - v["--"], v["00"] * (mu * nu + mu ** -1 * nu ** -1))


@pytest.mark.parametrize("name", ["trefoil_right", "hopf_neg", "figure_eight"])
@pytest.mark.parametrize("fresh", [False, True])
def test_axiom_v_meridian(name, fresh):
    d = corpus(name)
    for a in sorted(d.arcs):
        r = check_axiom(build_skein_family(d, a, AXIOM_V, "fresh" if fresh else None))
        assert r.passed, r.to_json_obj()


def test_negative_meridian_is_a_control():
    d = corpus("trefoil_right")
    fam = build_skein_family(d, 1, AXIOM_V)
    fam.members["1"] = insert_meridian(d, 1, fam.colors["nu"], positive=False)
    assert not check_axiom(fam).passed


@pytest.mark.parametrize("context", [[], [1, 1], [-2, -2], [-1, -1]])
def test_axiom_iii_seven_term(context):
    r = check_axiom(build_skein_family(None, context, AXIOM_III))
    assert r.passed, r.to_json_obj()


def test_axiom_iii_members_are_three_strand_closures():
    fam = build_skein_family(None, [], AXIOM_III)
    assert set(fam.members) == set(SEVEN)
    assert fam.members["000"].n_components == 3
    assert fam.members["2112"].n == 4


def test_axiom_iii_detects_swapped_colors():
    fam = build_skein_family(None, [1, 1], AXIOM_III)
    v = {k: colored_potential(m) for k, m in fam.members.items()}
    assert seven_term(v, "l", "m", "n").is_zero()
    assert not seven_term(v, "n", "m", "l").is_zero()


@pytest.mark.parametrize("name", ["unknot", "unknot_cw", "curl_unknot"])
def test_axiom_iv_unknots(name):
    assert check_unknot_axiom(corpus(name)).passed


@pytest.mark.parametrize("name", ["unlink2", "unlink3", "trefoil_unknot"])
def test_axiom_vi_split(name):
    assert check_split_axiom(corpus(name)).passed


def test_unknot_axiom_rejects_a_knot():
    assert not check_unknot_axiom(corpus("trefoil_right")).passed
