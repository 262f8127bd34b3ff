"""Shared corpus generators for the randomized property and acceptance
tests.  All generation is seeded, so every run sees the same corpus."""

from __future__ import annotations

import random
from functools import lru_cache

from omegacoalg import Coalgebra, Container
from omegacoalg.indexed import IndexedCoalgebra, IndexedContainer

LABEL_POOL = "wxyz"


def random_container(rng: random.Random, max_labels=4, max_arity=3) -> Container:
    k = rng.randint(1, max_labels)
    labels = tuple(LABEL_POOL[:k])
    arity = {a: rng.randint(0, max_arity) for a in labels}
    return Container(arity=arity, labels=labels)


def random_coalgebra(rng: random.Random, max_states=6, max_labels=4, max_arity=3) -> Coalgebra:
    container = random_container(rng, max_labels, max_arity)
    n = rng.randint(1, max_states)
    states = tuple(f"s{i}" for i in range(n))
    gamma = {}
    for s in states:
        a = rng.choice(container.labels)
        gamma[s] = (a, tuple(rng.choice(states) for _ in range(container.arity_of(a))))
    return Coalgebra(container, gamma, state_enumeration=states, name="corpus")


@lru_cache(maxsize=None)
def corpus(count=200, seed=20260823) -> tuple:
    rng = random.Random(seed)
    return tuple(random_coalgebra(rng) for _ in range(count))


def random_indexed_coalgebra(rng: random.Random) -> IndexedCoalgebra:
    n_sorts = rng.randint(1, 3)
    sorts = tuple(f"i{j}" for j in range(n_sorts))
    labels_at = {}
    arity = {}
    child_sort = {}
    for i in sorts:
        k = rng.randint(1, 3)
        labels_at[i] = tuple(f"{i}_{LABEL_POOL[j]}" for j in range(k))
        for a in labels_at[i]:
            arity[(i, a)] = rng.randint(0, 2)
            child_sort[(i, a)] = tuple(
                rng.choice(sorts) for _ in range(arity[(i, a)])
            )
    base = IndexedContainer(sorts, labels_at, arity, child_sort)
    n = rng.randint(n_sorts, 6)
    states = tuple(f"q{j}" for j in range(n))
    # cover every sort so transitions always find a correctly sorted child
    sort_of = {s: sorts[j % n_sorts] for j, s in enumerate(states)}
    by_sort = {i: [s for s in states if sort_of[s] == i] for i in sorts}
    gamma = {}
    for s in states:
        a = rng.choice(labels_at[sort_of[s]])
        gamma[s] = (
            a,
            tuple(rng.choice(by_sort[j]) for j in child_sort[(sort_of[s], a)]),
        )
    return IndexedCoalgebra(base, states, sort_of, gamma, name="icorpus")


@lru_cache(maxsize=None)
def indexed_corpus(count=50, seed=4711) -> tuple:
    rng = random.Random(seed)
    return tuple(random_indexed_coalgebra(rng) for _ in range(count))
