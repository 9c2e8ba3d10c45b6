import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from garside import (LabelledTree, PietrowskiData, Presentation, hnn_over_tree_garside, parse_pietrowski,
                     parse_tree, pietrowski_build, pietrowski_validate, relation_sets_equal,
                     simple_closure, tree_product_presentation, verify_garside, vertex_exponent,
                     vertex_exponents, words_equal)
from garside.presentation import PresentationError
from garside.trees import TreeError, load_pietrowski, load_tree, path_exponent

from conftest import data_path
from oracles import divisor_count

SEVEN_EXPONENTS = {"u1": 90, "u2": 60, "u3": 45, "u4": 60, "u5": 48, "u6": 24, "u7": 48}


@pytest.fixture(scope="module")
def seven():
    return load_tree(data_path("seven.tree"))


def test_single_edge_tree():
    t = parse_tree("vertex: a\nvertex: b\nedge: a b 3 4\n")
    assert t.label("a", "b") == 3 and t.label("b", "a") == 4
    assert vertex_exponent(t, "a") == 3 and vertex_exponent(t, "b") == 4


@pytest.mark.parametrize("text, fragment", [
    ("vertex: a\nvertex: b\nvertex: c\nedge: a b 2 2\nedge: b c 2 2\nedge: c a 2 2\n", "cycle"),
    ("vertex: a\nvertex: b\nvertex: c\nedge: a b 2 3\n", "disconnected"),
    ("vertex: a\nvertex: b\nedge: a b 1 3\n", "below 2"),
    ("vertex: a\nedge: a b 2 2\n", "undeclared"),
])
def test_tree_errors(text, fragment):
    with pytest.raises(TreeError) as exc:
        parse_tree(text)
    assert fragment in str(exc.value)


def test_seven_vertex_exponents(seven):
    assert len(seven.vertices) == 7 and len(seven.edges) == 6
    assert vertex_exponents(seven) == SEVEN_EXPONENTS


def test_seven_vertex_hnn_pairs(seven):
    pairs = [(a, b) for a, b in itertools.combinations(seven.vertices, 2) if hnn_over_tree_garside(seven, a, b)]
    assert pairs == [("u2", "u4"), ("u5", "u7")]
    assert hnn_over_tree_garside(seven, "u3", "u3")


def test_seven_vertex_product_presentation_and_centre(seven):
    c = tree_product_presentation(seven)
    assert c.presentation.rank == 7 and len(c.presentation.relations) == 6
    for v, e in SEVEN_EXPONENTS.items():
        i = c.presentation.index(v)
        for j in range(7):
            assert words_equal(c.table, (i,) * e + (j,), (j,) + (i,) * e)


def test_single_edge_product_is_torus_monoid():
    t = parse_tree("vertex: a\nvertex: b\nedge: a b 3 4\n")
    c = tree_product_presentation(t)
    assert relation_sets_equal(c.presentation, Presentation(("a", "b"), (((0,) * 3, (1,) * 4),)))


def test_chain_product():
    d = PietrowskiData((4, 3), (2, 6))
    c = pietrowski_build(d)
    want = Presentation(("x1", "x2", "x3"), (((0,) * 4, (1,) * 2), ((1,) * 3, (2,) * 6)))
    assert relation_sets_equal(c.presentation, want)
    t = c.presentation
    assert path_exponent([(4, 2), (3, 6)]) == 12
    assert vertex_exponent(LabelledTree(t.gens, (("x1", "x2", 4, 2), ("x2", "x3", 3, 6))), "x3") == 12


def test_chain_hnn_decision():
    t = LabelledTree(("x1", "x2", "x3"), (("x1", "x2", 4, 2), ("x2", "x3", 3, 6)))
    assert hnn_over_tree_garside(t, "x1", "x3")


def test_pietrowski_validation():
    assert pietrowski_validate(PietrowskiData((4, 3), (2, 6), True)).ok
    assert pietrowski_validate(PietrowskiData((2, 5, 3), (2, 5, 3), False)).ok
    rep = pietrowski_validate(PietrowskiData((4, 2), (2, 6), True))
    assert not rep.ok and any("gcd(p2, q1)" in f for f in rep.failures)
    with pytest.raises(ValueError):
        pietrowski_build(PietrowskiData((4, 2), (2, 6), True))


def test_pietrowski_chain_with_stable_letter():
    d = load_pietrowski(data_path("chain_stable.pie"))
    assert d == PietrowskiData((4, 3), (2, 6), True)
    c = pietrowski_build(d)
    assert c.presentation.gens == ("x1", "x2", "x3", "a")
    rep = verify_garside(c.presentation, c.table)
    assert rep.ok and rep.structure.count == 1353


def test_pietrowski_torus_case():
    c = pietrowski_build(PietrowskiData((3,), (4,), False))
    gs = simple_closure(c.presentation, c.table)
    assert gs.count == divisor_count(c.presentation, gs.delta) == 7


def test_pietrowski_bs_like_case():
    c = pietrowski_build(PietrowskiData((2,), (2,), True))
    rep = verify_garside(c.presentation, c.table)
    assert rep.ok
    # three generators here, against two for the dihedral Artin monoid; both routes agree on 13
    assert rep.structure.count == divisor_count(c.presentation, rep.structure.delta) == 13


def test_pietrowski_parse_errors():
    with pytest.raises(PresentationError):
        parse_pietrowski("p: 4 3\n")
    with pytest.raises(PresentationError):
        parse_pietrowski("p: 4 3\nq: 2\n")
    with pytest.raises(PresentationError):
        parse_pietrowski("p: 4\nq: 2\nstable: maybe\n")


# -- random trees ---------------------------------------------------------------

@st.composite
def trees(draw, max_vertices=5, max_label=4):
    n = draw(st.integers(2, max_vertices))
    names = tuple(f"v{i}" for i in range(n))
    edges = []
    for i in range(1, n):
        j = draw(st.integers(0, i - 1))
        edges.append((names[j], names[i], draw(st.integers(2, max_label)), draw(st.integers(2, max_label))))
    return LabelledTree(names, tuple(edges))


def _exponents_from_root(t, root):
    # recompute along explicit leaf paths, visiting leaves in an order fixed by the root
    order = sorted(t.leaves(), key=lambda v: len(t.path(root, v)))
    out = {}
    for v in t.vertices:
        e = 1
        for leaf in order:
            if leaf != v:
                labels = [(t.label(a, b), t.label(b, a)) for a, b in zip(t.path(leaf, v), t.path(leaf, v)[1:])]
                from math import lcm
                e = lcm(e, path_exponent(labels))
        out[v] = e
    return out


@settings(max_examples=60, deadline=None)
@given(trees())
def test_exponents_do_not_depend_on_root(t):
    base = vertex_exponents(t)
    for root in t.vertices:
        assert _exponents_from_root(t, root) == base


@settings(max_examples=60, deadline=None)
@given(trees())
def test_two_criteria_agree(t):
    for a, b in itertools.combinations(t.vertices, 2):
        assert hnn_over_tree_garside(t, a, b) == (vertex_exponent(t, a) == vertex_exponent(t, b))


@settings(max_examples=25, deadline=None)
@given(trees(max_vertices=3, max_label=3))
def test_small_tree_products_are_garside_with_central_powers(t):
    c = tree_product_presentation(t)
    rep = verify_garside(c.presentation, c.table, cap=200000)
    assert rep.ok
    ex = vertex_exponents(t)
    for v, e in ex.items():
        i = c.presentation.index(v)
        for j in range(c.presentation.rank):
            assert words_equal(c.table, (i,) * e + (j,), (j,) + (i,) * e)
