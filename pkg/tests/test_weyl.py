import itertools

import numpy as np
import pytest

from schubtwist.rootsys import build
from schubtwist.weyl import (
    WeylError,
    act,
    all_reduced_words,
    bruhat_leq,
    compose,
    dot_action,
    enumerate_parabolic,
    format_word,
    from_word,
    identity,
    inversion_count,
    is_reduced,
    left_descents,
    longest_element,
    parse_word,
    reflection_of,
    right_descents,
    simple_reflection,
)

TYPES = ["A2", "B2", "G2", "A3", "B3", "C3"]
ORDERS = {"A1": 2, "A2": 6, "B2": 8, "G2": 12, "A3": 24, "B3": 48, "C3": 48, "D4": 192, "F4": 1152}


@pytest.mark.parametrize("t", list(ORDERS))
def test_group_orders(t):
    assert len(enumerate_parabolic(build(t))) == ORDERS[t]


def test_parabolic_enumeration():
    rs = build("B3")
    assert [w.word for w in enumerate_parabolic(rs, [])] == [()]
    assert len(enumerate_parabolic(rs, [0, 1])) == 6  # A2 inside B3
    assert len(enumerate_parabolic(rs, [1, 2])) == 8  # B2 inside B3
    with pytest.raises(WeylError):
        enumerate_parabolic(build("E8"))


def test_reflection_examples():
    b2 = build("B2")
    a1 = b2.simple_root(0)
    assert act(simple_reflection(b2, 1), a1) == b2.from_root_coords((1, 2))
    a = build("A1")
    assert act(simple_reflection(a, 0), (2,)) == (-2,)
    for t in TYPES:
        rs = build(t)
        for i, j in itertools.product(range(rs.rank), repeat=2):
            if i != j:
                om = rs.fundamental_weight(j)
                assert act(simple_reflection(rs, i), om) == om


def test_dot_action_examples():
    a1 = build("A1")
    assert dot_action(simple_reflection(a1, 0), (0,)) == (-2,)
    b2 = build("B2")
    assert dot_action(simple_reflection(b2, 1), b2.simple_root(0)) == b2.from_root_coords((1, 1))
    for t in TYPES:
        rs = build(t)
        mrho = tuple(-x for x in rs.rho)
        for w in enumerate_parabolic(rs):
            assert dot_action(w, mrho) == mrho


def test_longest_element_examples():
    b2 = build("B2")
    w0 = longest_element(b2)
    assert w0.length() == 4
    assert w0 == from_word(b2, parse_word("1,2,1,2"))
    assert identity(b2).length() == 0
    for t in TYPES + ["D4"]:
        rs = build(t)
        w0 = longest_element(rs)
        assert w0.length() == len(rs.positive_roots)
        for r in rs.positive_roots:
            assert rs.root_sign(w0.act(r.weight)) == -1
        for J in [(0,), (0, 1)]:
            wJ = longest_element(rs, J)
            assert set(wJ.word) <= set(J)
            assert all(compose(simple_reflection(rs, j), wJ).length() < wJ.length() for j in J)


@pytest.mark.parametrize("t", TYPES)
def test_length_invariants(t):
    rs = build(t)
    for w in enumerate_parabolic(rs):
        assert w.length() == inversion_count(w) == len(w.word)
        assert from_word(rs, w.word) == w
        for i in range(rs.rank):
            assert abs(compose(simple_reflection(rs, i), w).length() - w.length()) == 1
        # left descents two ways: length drop and w^{-1}(alpha_i) < 0
        winv = w.inverse()
        other = {i for i in range(rs.rank) if rs.root_sign(winv.act(rs.simple_root(i))) < 0}
        assert left_descents(w) == other
        assert right_descents(w) == left_descents(winv)


@pytest.mark.parametrize("t", ["A2", "B2", "G2", "A3"])
def test_reduced_words_braid_consistency(t):
    rs = build(t)
    for w in enumerate_parabolic(rs):
        words = all_reduced_words(w, cap=12)
        assert w.word in words
        assert len(set(words)) == len(words)
        for word in words:
            assert is_reduced(rs, word)
            assert np.array_equal(from_word(rs, word).matrix, w.matrix)


def test_reduced_words_examples():
    a2 = build("A2")
    assert all_reduced_words(simple_reflection(a2, 1)) == [(1,)]
    assert set(all_reduced_words(longest_element(a2))) == {(0, 1, 0), (1, 0, 1)}
    b2 = build("B2")
    assert all_reduced_words(from_word(b2, (0, 1, 0))) == [(0, 1, 0)]
    a3 = build("A3")
    assert len(all_reduced_words(longest_element(a3))) == 16
    with pytest.raises(WeylError):
        all_reduced_words(longest_element(build("B3")), cap=5)


def test_descent_examples():
    b2 = build("B2")
    assert left_descents(longest_element(b2)) == {0, 1}
    assert left_descents(simple_reflection(b2, 0)) == {0}
    assert left_descents(from_word(b2, (0, 1, 0))) == {0}


def _bruhat_oracle(rs):
    """Transitive closure of u -> t u over reflections t with l(tu) > l(u)."""
    elts = enumerate_parabolic(rs)
    refl = [reflection_of(rs, r) for r in rs.positive_roots]
    up = {w.key: set() for w in elts}
    for u in elts:
        for t in refl:
            v = compose(t, u)
            if v.length() > u.length():
                up[u.key].add(v.key)
    changed = True
    leq = {w.key: {w.key} for w in elts}
    while changed:
        changed = False
        for u in elts:
            for v in up[u.key]:
                new = leq[u.key] - leq[v]
                if new:
                    leq[v] |= new
                    changed = True
    return elts, leq


@pytest.mark.parametrize("t", ["A2", "B2", "G2", "A3"])
def test_bruhat_matches_reflection_closure(t):
    rs = build(t)
    elts, leq = _bruhat_oracle(rs)
    for u in elts:
        for w in elts:
            assert bruhat_leq(u, w) == (u.key in leq[w.key])


def test_bruhat_examples():
    b2 = build("B2")
    w0 = longest_element(b2)
    for w in enumerate_parabolic(b2):
        assert bruhat_leq(identity(b2), w)
        assert bruhat_leq(w, w0)
    assert bruhat_leq(simple_reflection(b2, 1), from_word(b2, (0, 1, 0)))
    assert not bruhat_leq(from_word(b2, (1, 0)), from_word(b2, (0, 1)))


def test_reflection_of_roots():
    rs = build("G2")
    for r in rs.positive_roots:
        s = reflection_of(rs, r)
        assert s.act(r.weight) == tuple(-x for x in r.weight)
        assert (s * s) == identity(rs)
        assert s.length() % 2 == 1


def test_word_parsing():
    assert parse_word("1,2,1") == (0, 1, 0)
    assert parse_word("") == ()
    assert format_word((0, 1, 0)) == "1,2,1"
    for bad in ["1,x", "0,1", "1,,2"]:
        with pytest.raises(WeylError):
            parse_word(bad)
    rs = build("A2")
    with pytest.raises(WeylError):
        from_word(rs, (0, 0), check_reduced=True)
    with pytest.raises(WeylError):
        from_word(rs, (0, 5))
