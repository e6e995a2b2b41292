import pytest
from conftest import CONNECTED, SPLIT, corpus, corpus_text

from clockwork.braids import braid_closure
from clockwork.diagram import (
    LEFT,
    RIGHT,
    DiagramError,
    alexander_indices,
    build_diagram,
    crossing_sign,
    curvatures,
    is_split,
    parse_diagram,
)
from clockwork.verify.rewrite import apply_r1, apply_r2, r2_sites

HEADER = "link t\ncomponents 1\ncolor 1 a\n" + "".join(f"arc {a} component 1\n" for a in range(1, 5))


def test_parse_is_whitespace_insensitive_and_stable(trefoil):
    text = corpus_text("trefoil_right")
    noisy = "\n".join("   " + line.replace(",", " , ") + "   # note" for line in text.splitlines())
    d = parse_diagram(noisy)
    assert d.to_pd() == trefoil.to_pd()
    assert parse_diagram(trefoil.to_pd()).to_pd() == trefoil.to_pd()


@pytest.mark.parametrize("body, message", [
    ("X(1,2,3,5) o=cw\nX(2,4,1,3) o=cw\nouter arc 1 side left\n", "undeclared arc"),
    ("X(1,2,3,4) o=cw\nX(1,2,3,4) o=cw\nouter arc 1 side left\n", "two"),
    ("X(1,2,3,4) o=cw\nouter arc 1 side left\n", "odd number"),
    ("X(1,2,3,4) o=cw\nX(2,3,1,4) o=ccw\nouter arc 1 side left\n", "non-planar"),
    ("X(1,2,3,4) o=sideways\nouter arc 1 side left\n", "syntax"),
])
def test_malformed_input_is_rejected(body, message):
    with pytest.raises(DiagramError, match=message):
        parse_diagram(HEADER + body)


def test_component_mismatch_rejected():
    text = ("link t\ncomponents 2\ncolor 1 a\ncolor 2 b\narc 1 component 1\narc 2 component 1\n"
            "arc 3 component 2\narc 4 component 2\nX(1,2,3,4) o=cw\nouter arc 1 side left\n")
    with pytest.raises(DiagramError, match="changes component"):
        parse_diagram(text)


def test_outer_declaration_required_and_checked():
    body = corpus_text("trefoil_right")
    with pytest.raises(DiagramError, match="outer"):
        parse_diagram(body.replace("outer arc 1 side left", ""))
    with pytest.raises(DiagramError, match="dangling"):
        parse_diagram(body.replace("outer arc 1 side left", "outer arc 9 side left"))


@pytest.mark.parametrize("name", CONNECTED)
def test_connected_projection_has_n_plus_2_regions(name):
    d = corpus(name)
    assert d.connected and not is_split(d)
    assert len(d.regions) == d.n + 2


def test_trefoil_face_sizes(trefoil):
    # the closed 3-braid picture: two triangles, two bigons between the
    # crossings and a third bigon closed off by the return strands
    assert sorted(len(r.corners) for r in trefoil.regions) == [2, 2, 2, 3, 3]


@pytest.mark.parametrize("name", SPLIT)
def test_split_corpus_is_disconnected(name):
    assert is_split(corpus(name))


def test_unbounded_region_has_zero_index():
    for name in CONNECTED:
        d = corpus(name)
        assert d.index[d.unbounded] == (0,) * d.n_components


def test_index_steps_by_one_across_each_arc():
    for name in CONNECTED:
        d = corpus(name)
        comps = sorted(d.colors)
        for a, k in d.arc_component.items():
            lo, hi = d.index[d.side_region[(a, LEFT)]], d.index[d.side_region[(a, RIGHT)]]
            step = [h - l for h, l in zip(hi, lo)]
            assert step == [1 if c == k else 0 for c in comps]


def test_round_unknot_indices_and_curvature():
    ccw, cw = corpus("unknot"), corpus("unknot_cw")
    # counterclockwise circle: the inside is on its left, one step below the outside
    assert sorted(alexander_indices(ccw).values()) == [(-1,), (0,)]
    assert sorted(alexander_indices(cw).values()) == [(0,), (1,)]
    assert curvatures(ccw) == {1: 1}
    assert curvatures(cw) == {1: -1}


def test_curl_changes_curvature_by_one():
    for name in ["unknot", "trefoil_right", "hopf_pos", "borromean"]:
        d = corpus(name)
        base = curvatures(d)
        for a in d.arcs:
            k = d.arc_component[a]
            for v in ("curl+", "curl-"):
                assert curvatures(apply_r1(d, a, v, LEFT))[k] == base[k] + 1
                assert curvatures(apply_r1(d, a, v, RIGHT))[k] == base[k] - 1


def test_r2_leaves_curvature_alone():
    d = corpus("figure_eight")
    for a, b, r in r2_sites(d):
        assert curvatures(apply_r2(d, a, b, r, "a")) == curvatures(d)


def test_crossing_signs():
    assert [crossing_sign(corpus("trefoil_right"), c) for c in (1, 2, 3)] == [1, 1, 1]
    assert [c.sign for c in corpus("trefoil_left").crossings] == [-1, -1, -1]
    assert sum(c.sign for c in corpus("hopf_pos").crossings) == 2


def test_outer_choice_changes_indices_not_validity(trefoil):
    for a in trefoil.arcs:
        for side in (LEFT, RIGHT):
            d = trefoil.with_outer(a, side)
            assert d.index[d.unbounded] == (0,)


def test_build_diagram_matches_parsed(trefoil):
    d = build_diagram(trefoil.name, trefoil.colors, trefoil.arc_component,
                      [(c.ports, c.over_dir) for c in trefoil.crossings], trefoil.outer)
    assert d.to_pd() == trefoil.to_pd()


def test_braid_closure_component_count():
    assert braid_closure([1, 1]).n_components == 2
    assert braid_closure([1, -2] * 3).n_components == 3
    assert braid_closure([1, 1, 1]).n_components == 1
    with pytest.raises(ValueError):
        braid_closure([0])
