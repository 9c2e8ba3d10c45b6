import random

import pytest

from garside import (Factor, Presentation, amalgam, artin_dihedral, hnn_hypothesis_check, hnn_stuffed,
                     parse_presentation, relation_sets_equal, simple_closure, theta, verify_garside,
                     words_equal)
from garside.combinators import (ConstructionError, RootPreconditionFailed, _tstuff, canonical_word,
                                 cyclic_factor, mu_table, stuff_shuffle, stuffed_baumslag_solitar)

from oracles import ClassIndex, divisor_count


def test_stuff_shuffle():
    x, y, z = 0, 1, 2
    assert stuff_shuffle((x, y), z) == (x, z, y)
    assert stuff_shuffle((5,), 9) == (5,)
    assert stuff_shuffle((x, y, x, y, x), z) == (x, z, y, z, x, z, y, z, x)
    with pytest.raises(ValueError):
        stuff_shuffle((), z)


@pytest.mark.parametrize("p, q", [(2, 3), (3, 4), (2, 5)])
def test_torus_knot_amalgam(p, q):
    s, t = cyclic_factor("s"), cyclic_factor("t")
    c = amalgam(s, (0,) * p, t, (0,) * q)
    assert relation_sets_equal(c.presentation, Presentation(("s", "t"), (((0,) * p, (1,) * q),)))
    gs = simple_closure(c.presentation, c.table)
    # divisors of s^p are s^i for i <= p and t^j for 0 < j < q
    assert gs.count == p + q
    assert divisor_count(c.presentation, gs.delta) == p + q


def test_headline_amalgam(chi_factor, kappa_factor):
    chi, k = chi_factor.presentation, kappa_factor.presentation
    c = amalgam(chi_factor, chi.word("c b"), kappa_factor, k.word("y x y x"))
    gs = simple_closure(c.presentation, c.table)
    assert gs.count == 161
    assert divisor_count(c.presentation, gs.delta) == 161
    P = c.presentation
    b8 = P.word("b") * 8
    assert words_equal(gs.table, gs.delta, b8)
    assert words_equal(gs.table, b8, P.word("c b") * 3)
    assert words_equal(gs.table, b8, P.word("y x y x") * 3)


@pytest.mark.parametrize("h1, h2, expected", [("a", "y", 17), ("a", "x y", 19), ("b b", "y y y", 89)])
def test_small_amalgam_cells(chi_factor, kappa_factor, h1, h2, expected):
    c = amalgam(chi_factor, chi_factor.presentation.word(h1), kappa_factor, kappa_factor.presentation.word(h2))
    gs = simple_closure(c.presentation, c.table)
    assert gs.count == expected
    assert divisor_count(c.presentation, gs.delta) == expected


def test_amalgam_relations_hold_in_the_class_oracle(chi_factor, kappa_factor):
    c = amalgam(chi_factor, (1, 2), kappa_factor, kappa_factor.presentation.word("y x y x"))
    P, t = c.presentation, c.table
    idx = ClassIndex(P)
    for x in range(P.rank):
        for y in range(P.rank):
            if x != y:
                assert idx((x,) + t[x, y]) == idx((y,) + t[y, x])


def test_amalgam_renames_on_collision(kappa_factor):
    c = amalgam(kappa_factor, (1,), kappa_factor, (1,))
    assert c.presentation.gens == ("x", "y", "x_2", "y_2")
    assert any("renamed" in line for line in c.presentation.provenance)
    assert verify_garside(c.presentation, c.table).ok


def test_amalgam_rejects_non_root(kappa_factor, chi_factor):
    with pytest.raises(RootPreconditionFailed):
        amalgam(chi_factor, (0,), kappa_factor, (0,))


def test_mu_table(kappa_factor):
    k = kappa_factor.presentation
    # x divides yy but not y
    assert mu_table(kappa_factor.table, k.word("y")) == [2, 1]
    # brute force: least m with some word of the class of (xy)^m starting with the letter
    idx = ClassIndex(k)
    u = k.word("x y")
    want = []
    for x in range(k.rank):
        m = 1
        while not any(w[:1] == (x,) for w in idx.members[idx(u * m)]):
            m += 1
        want.append(m)
    assert mu_table(kappa_factor.table, u) == want == [1, 3]


def test_canonical_word(kappa_factor):
    gs = kappa_factor.structure
    assert canonical_word(gs, gs.presentation.word("x y x y x")) == gs.presentation.word("y y")


# -- HNN -----------------------------------------------------------------------

def _hnn(kappa_factor, h1, h2):
    k = kappa_factor.presentation
    return hnn_stuffed(kappa_factor, k.word(" ".join(h1)), k.word(" ".join(h2)), "z")


def test_hnn_xy_xy_presentation(kappa_factor):
    c = _hnn(kappa_factor, "xy", "xy")
    want = parse_presentation("gens: x y z\nrel: x z y z x z y z x = y z y\nrel: x z y z = z x z y\n")
    assert relation_sets_equal(c.presentation, want)
    gs = simple_closure(c.presentation, c.table)
    assert gs.count == 96 and divisor_count(c.presentation, gs.delta) == 96


def test_hnn_y_xy_presentation(kappa_factor):
    c = _hnn(kappa_factor, "y", "xy")
    want = parse_presentation("gens: x y z\nrel: x z y z x z y z x = y z y\nrel: y z = z x z y\n")
    assert relation_sets_equal(c.presentation, want)
    assert simple_closure(c.presentation, c.table).count == 126


def test_anti_isomorphic_pairs_agree(kappa_factor):
    count = lambda a, b: simple_closure(*_pt(_hnn(kappa_factor, a, b))).count
    assert count("xy", "xy") == count("yx", "yx") == 96
    assert count("y", "xy") == count("yx", "y") == 126


def _pt(c):
    return c.presentation, c.table


@pytest.mark.parametrize("h1, h2", [("xy", "xy"), ("y", "xy"), ("yy", "xxyxy"), ("yyy", "yyy")])
def test_stuffed_complement_invariance(kappa_factor, h1, h2):
    c = _hnn(kappa_factor, h1, h2)
    base = kappa_factor.table
    z = c.presentation.index("z")
    rng = random.Random(hash((h1, h2)) & 0xFFFF)
    checked = 0
    while checked < 200:
        u = tuple(rng.randrange(2) for _ in range(rng.randrange(1, 6)))
        v = tuple(rng.randrange(2) for _ in range(rng.randrange(1, 6)))
        want = theta(base, u, v)
        got = theta(c.table, stuff_shuffle(u, z), stuff_shuffle(v, z))
        assert got == _tstuff(want, z)
        checked += 1


def test_hnn_complement_relations_hold(kappa_factor):
    c = _hnn(kappa_factor, "y", "xy")
    P, t = c.presentation, c.table
    idx = ClassIndex(P)
    for x in range(P.rank):
        for y in range(P.rank):
            if x != y:
                assert idx((x,) + t[x, y]) == idx((y,) + t[y, x])


def test_hypothesis_check(kappa_factor):
    k = kappa_factor.presentation
    rep = hnn_hypothesis_check(kappa_factor, k.word("x y"), k.word("y x"))
    assert rep.roots_ok and rep.norms_ok and rep.norms == (2, 2)
    rep = hnn_hypothesis_check(kappa_factor, k.word("y"), k.word("x y"))
    assert rep.roots_ok and not rep.norms_ok and rep.warnings
    rep = hnn_hypothesis_check(kappa_factor, k.word("y"), k.word("y x"))
    assert rep.warnings


def test_stable_name_collision(kappa_factor):
    with pytest.raises(ConstructionError):
        hnn_stuffed(kappa_factor, (1,), (1,), "x")


@pytest.mark.parametrize("m", [1, 2, 3])
def test_baumslag_solitar_matches_dihedral_artin(m):
    c = stuffed_baumslag_solitar(m)
    assert relation_sets_equal(c.presentation, artin_dihedral(m))
    gs = simple_closure(c.presentation, c.table)
    assert gs.count == divisor_count(artin_dihedral(m), (0, 1) * m)
    assert verify_garside(c.presentation, c.table).ok


def test_baumslag_solitar_oracle_value():
    assert divisor_count(artin_dihedral(2), (0, 1) * 2) == 8


# cells where the two norms differ; outside the acceptance grid
UNEQUAL_NORM_CELLS = [
    ("yx", "y", 126), ("xyxy", "xxyxy", 1561), ("xyxy", "xyxxy", 1687), ("xyxy", "yxxyx", 1561),
    ("xyxy", "yxyxx", 1687), ("yxyx", "yy", 2552), ("yxyx", "xxyxy", 1687), ("yxyx", "xyxxy", 1561),
    ("yxyx", "yxxyx", 1561), ("yy", "xyxy", 2552), ("xxyxy", "yxyx", 1687), ("xyxxy", "xyxy", 1561),
    ("xyxxy", "yxyx", 1561), ("yxxyx", "xyxy", 1561), ("yxxyx", "yxyx", 1687), ("yxyxx", "xyxy", 1687),
    ("yxyxx", "yxyx", 1561),
]


@pytest.mark.parametrize("h1, h2, expected", UNEQUAL_NORM_CELLS)
def test_unequal_norm_hnn_cells(kappa_factor, h1, h2, expected):
    c = _hnn(kappa_factor, h1, h2)
    rep = verify_garside(c.presentation, c.table)
    assert rep.ok and rep.structure.count == expected
    assert divisor_count(c.presentation, rep.structure.delta, size_cap=10**6) == expected
