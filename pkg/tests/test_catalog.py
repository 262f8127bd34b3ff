import random

import pytest

from omegacoalg import Coalgebra, bounded_bisim, out, tree_equal, unfold
from omegacoalg.container import TRUNC, make_node
from omegacoalg.catalog import (
    conat_coalgebra,
    conat_infinity,
    conat_of,
    cons,
    fig1_coalgebra,
    fig1_signature,
    head,
    stream_container,
    stream_from_function,
    stream_to_function,
    tail,
    zip_streams,
)
from omegacoalg import approximate, enumerate_w


def random_cycle_stream(rng, labels=(0, 1, 2, 3)):
    """A finitely presented stream: unfold of a random labelled cycle."""
    sc = stream_container()
    n = rng.randint(1, 5)
    states = tuple(range(n))
    gamma = {i: (rng.choice(labels), ((i + 1) % n,)) for i in states}
    return unfold(Coalgebra(sc, gamma, state_enumeration=states), 0)


def test_head_tail_constant_stream():
    s7 = stream_from_function(lambda k: 7)
    assert head(s7) == 7
    t = tail(s7)
    for n in range(6):
        assert tree_equal(t.at(n), s7.at(n))


def test_cons_shape():
    s7 = stream_from_function(lambda k: 7)
    sc = s7.container
    m = cons(3, s7)
    assert tree_equal(
        m.at(2), make_node(sc, 3, [make_node(sc, 7, [TRUNC])])
    )
    assert head(m) == 3


def test_cons_head_tail_round_trip():
    s7 = stream_from_function(lambda k: 7)
    m = cons(head(s7), tail(s7))
    for n in range(11):
        assert tree_equal(m.at(n), s7.at(n))


def test_zip_example():
    xs = stream_from_function(lambda k: k % 2)
    ys = stream_from_function(lambda k: 7)
    z = zip_streams(xs, ys)
    sc = z.container
    assert tree_equal(
        z.at(2), make_node(sc, (0, 7), [make_node(sc, (1, 7), [TRUNC])])
    )
    assert head(z) == (0, 7)


def test_zip_law_randomized():
    rng = random.Random(123)
    for _ in range(10):
        xs = random_cycle_stream(rng)
        ys = random_cycle_stream(rng)
        lhs = zip_streams(xs, ys)
        rhs = cons((head(xs), head(ys)), zip_streams(tail(xs), tail(ys)))
        for n in range(31):
            assert tree_equal(lhs.at(n), rhs.at(n))


def test_stream_from_function_identity_labels():
    m = stream_from_function(lambda k: k)
    sc = m.container
    expected = make_node(
        sc, 0, [make_node(sc, 1, [make_node(sc, 2, [TRUNC])])]
    )
    assert tree_equal(m.at(3), expected)


def test_stream_function_round_trips():
    g = lambda k: (3 * k + 1) % 5
    m = stream_from_function(g)
    g2 = stream_to_function(m)
    assert all(g2(k) == g(k) for k in range(101))
    m2 = stream_from_function(g2)
    for n in range(101):
        assert tree_equal(m2.at(n), m.at(n))


def test_stream_to_function_matches_head_tail():
    m = stream_from_function(lambda k: k % 3)
    g = stream_to_function(m)
    cur = m
    for k in range(10):
        assert g(k) == head(cur)
        cur = tail(cur)


def test_fig1_arities_and_counts():
    fig1 = fig1_signature()
    assert fig1.arity_of("c") == 3
    assert len(enumerate_w(fig1, 2)) == 37
    c = fig1_coalgebra()
    assert tree_equal(
        approximate(c, "t", 1), make_node(fig1, "b", [TRUNC, TRUNC])
    )


def test_conat_infinity():
    inf = conat_infinity()
    cc = inf.container
    assert tree_equal(
        inf.at(2), make_node(cc, "S", [make_node(cc, "S", [TRUNC])])
    )


def test_conat_of_zero_leaf():
    z = conat_of(0)
    for n in range(1, 8):
        t = z.at(n)
        assert t.label == "Z" and t.children == ()


def test_conat_of_k_structure():
    m = conat_of(2)
    t = m.at(5)
    layers = 0
    while t.label == "S":
        t = t.children[0]
        layers += 1
    assert layers == 2 and t.label == "Z"


def test_infinity_distinguishable_from_finite():
    for k in range(11):
        c = conat_coalgebra(k)
        assert not bounded_bisim(c, "inf", k, k + 1)
        assert bounded_bisim(c, "inf", k, k) if k > 0 else True


def test_conats_pairwise_distinct():
    for k in range(5):
        for k2 in range(5):
            if k == k2:
                continue
            d = max(k, k2) + 1
            a, b = conat_of(k), conat_of(k2)
            assert not tree_equal(a.at(d), b.at(d))
