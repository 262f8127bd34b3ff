import random

import pytest

from omegacoalg import (
    Coalgebra,
    Container,
    LimitElement,
    MorphismCandidate,
    PValue,
    approximate,
    into,
    out,
    out_coalgebra,
    tree_equal,
    truncate,
    unfold,
    uniqueness_probe,
    verify_morphism,
    w_chain,
)
from omegacoalg.container import TRUNC, make_node
from omegacoalg.mtype import MElement
from omegacoalg.bisim import minimize
from omegacoalg.catalog import (
    conat_coalgebra,
    fig1_coalgebra,
    stream_container,
    stream_from_function,
)
from omegacoalg.errors import ArityMismatch, DepthBoundExceeded, NotAMorphism

from conftest import random_coalgebra


def test_approximate_base_case():
    c = conat_coalgebra()
    assert tree_equal(approximate(c, "inf", 0), TRUNC)


def test_approximate_conat_depth3():
    c = conat_coalgebra()
    t = approximate(c, "inf", 3)
    expected = make_node(
        c.container,
        "S",
        [make_node(c.container, "S", [make_node(c.container, "S", [TRUNC])])],
    )
    assert tree_equal(t, expected)


def test_approximate_fig1_depth2():
    c = fig1_coalgebra()
    leaf = make_node(c.container, "a", [])
    partial = make_node(c.container, "b", [TRUNC, TRUNC])
    assert tree_equal(approximate(c, "t", 2), make_node(c.container, "b", [leaf, partial]))


def test_approximate_depth_bound(monkeypatch):
    monkeypatch.setenv("OMEGACOALG_MAX_DEPTH", "10")
    c = conat_coalgebra()
    with pytest.raises(DepthBoundExceeded):
        approximate(c, "inf", 11)


def test_unfold_stages_are_approximations():
    c = conat_coalgebra()
    m = unfold(c, "inf")
    assert tree_equal(m.at(2), approximate(c, "inf", 2))
    for n in range(51):
        assert tree_equal(truncate(c.container, m.at(n + 1)), m.at(n))


def test_unfold_of_out_structure_is_identity():
    c = fig1_coalgebra()
    oc = out_coalgebra(c.container)
    m = unfold(c, "t")
    m2 = unfold(oc, m)
    for n in range(20):
        assert tree_equal(m2.at(n), m.at(n))


def test_out_conat():
    c = conat_coalgebra()
    m = unfold(c, "inf")
    v = out(m)
    assert v.label == "S"
    for n in range(6):
        assert tree_equal(v.children[0].at(n), m.at(n))


def test_out_constant_stream():
    s7 = stream_from_function(lambda k: 7)
    v = out(s7)
    assert v.label == 7
    for n in range(6):
        assert tree_equal(v.children[0].at(n), s7.at(n))


def test_into_out_round_trips():
    c = conat_coalgebra()
    m = unfold(c, "inf")
    rebuilt = into(c.container, PValue("S", (m,)))
    for n in range(11):
        assert tree_equal(rebuilt.at(n), m.at(n))
    v = out(rebuilt)
    assert v.label == "S"
    for n in range(11):
        assert tree_equal(v.children[0].at(n), m.at(n))


def test_into_zero_arity_leaf():
    c = fig1_coalgebra()
    m = into(c.container, PValue("a", ()))
    assert tree_equal(m.at(0), TRUNC)
    for n in range(1, 6):
        assert tree_equal(m.at(n), make_node(c.container, "a", [], depth=n))


def test_into_arity_mismatch():
    c = fig1_coalgebra()
    leaf = into(c.container, PValue("a", ()))
    with pytest.raises(ArityMismatch):
        into(c.container, PValue("b", (leaf,)))


def test_verify_morphism_unfold():
    c = fig1_coalgebra()
    mc = MorphismCandidate(c, lambda s: unfold(c, s))
    assert verify_morphism(mc, 50)


def test_verify_morphism_rejects_constant_map():
    labels01 = stream_container((0, 1, 7))
    alternating = Coalgebra(
        labels01,
        {"e": (0, ("o",)), "o": (1, ("e",))},
        state_enumeration=("e", "o"),
    )
    const7 = stream_from_function(lambda k: 7)
    mc = MorphismCandidate(alternating, lambda s: const7)
    assert not verify_morphism(mc, 1)


def test_verify_morphism_composed_with_coalgebra_morphism():
    # quotient map into the minimized coalgebra is a coalgebra morphism;
    # composing with unfold of the quotient stays a morphism
    rng = random.Random(7)
    for _ in range(10):
        c = random_coalgebra(rng)
        d = minimize(c)
        from omegacoalg.bisim import partition_refine

        p = partition_refine(c)
        rep = {s: block[0] for block in p.blocks for s in block}
        mc = MorphismCandidate(c, lambda s, d=d, rep=rep: unfold(d, rep[s]))
        assert verify_morphism(mc, 20)
        assert uniqueness_probe(c, mc, 20)


def test_uniqueness_probe_reflexive():
    c = fig1_coalgebra()
    mc = MorphismCandidate(c, lambda s: unfold(c, s))
    assert uniqueness_probe(c, mc, 50)


def test_uniqueness_probe_hand_written_corecursion():
    sc = stream_container((7,))
    c = Coalgebra(sc, {"s": (7, ("s",))}, state_enumeration=("s",))

    def by_hand(n):
        t = TRUNC
        for d in range(1, n + 1):
            t = make_node(sc, 7, [t], depth=d)
        return t

    handmade = MElement(sc, LimitElement(w_chain(sc), by_hand, provenance="by-hand"))
    mc = MorphismCandidate(c, lambda s: handmade)
    assert uniqueness_probe(c, mc, 100)


def test_uniqueness_probe_guards():
    labels = stream_container((0, 1, 7))
    alternating = Coalgebra(
        labels, {"e": (0, ("o",)), "o": (1, ("e",))}, state_enumeration=("e", "o")
    )
    const7 = stream_from_function(lambda k: 7)
    mc = MorphismCandidate(alternating, lambda s: const7)
    with pytest.raises(NotAMorphism):
        uniqueness_probe(alternating, mc, 5)


def test_degenerate_container_collapses():
    leaves = Container(arity={"x": 0, "y": 0}, labels=("x", "y"))
    c = Coalgebra(leaves, {"s": ("x", ()), "t": ("y", ())}, state_enumeration=("s", "t"))
    for n in range(1, 10):
        t = approximate(c, "s", n)
        assert t.label == "x" and t.children == ()


def test_randomized_existence_and_compat():
    rng = random.Random(99)
    for _ in range(20):
        c = random_coalgebra(rng)
        mc = MorphismCandidate(c, lambda s, c=c: unfold(c, s))
        assert verify_morphism(mc, 50)
        for s in c.state_enumeration:
            m = unfold(c, s)
            for n in range(50):
                assert tree_equal(truncate(c.container, m.at(n + 1)), m.at(n))
