"""Bisimulation witnesses, depth-bounded bisimilarity, and partition
refinement for finite coalgebras.

A witness equips a relation on states with, per related pair, the shared
label and the positionwise child pairs; verification checks the commuting
squares clause by clause.  The decision procedure refines the label
partition by successor blocks to a fixpoint; related-in-a-block then
coincides with equality of all finite-depth observations.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Optional

from .mtype import Coalgebra, approximate
from .errors import (
    InvalidWitness,
    NeedsFiniteStates,
    PairNotRelated,
)


@dataclass(frozen=True, eq=False)
class BisimWitness:
    """A relation with per-pair coalgebra structure.

    ``alpha`` maps each related pair (s, t) to ``(label, pairs)`` where
    ``pairs[b]`` is the pair of position-b successors.
    """

    relation: frozenset
    alpha: Mapping


@dataclass(frozen=True, eq=False)
class Partition:
    """Disjoint nonempty blocks covering the state enumeration; after
    refinement, two states share a block iff they are bisimilar."""

    blocks: tuple

    def block_of(self, s):
        for b in self.blocks:
            if s in b:
                return b
        raise KeyError(s)


def _require_states(c: Coalgebra):
    if c.state_enumeration is None:
        raise NeedsFiniteStates("operation needs a finite state enumeration")
    return c.state_enumeration


def diagonal_bisim(c: Coalgebra) -> BisimWitness:
    """The identity relation as a bisimulation witness."""
    states = _require_states(c)
    alpha = {}
    for s in states:
        pv = c.transition(s)
        alpha[(s, s)] = (pv.label, tuple((ch, ch) for ch in pv.children))
    return BisimWitness(frozenset(alpha), alpha)


def bisim_violations(c: Coalgebra, w: BisimWitness):
    """Yield human-readable reasons the witness fails, if any."""
    for pair in w.relation:
        s, t = pair
        if pair not in w.alpha:
            yield f"pair {pair!r} has no alpha structure"
            continue
        label, ps = w.alpha[pair]
        gs, gt = c.transition(s), c.transition(t)
        if gs.label != label or gt.label != label:
            yield (
                f"pair {pair!r}: alpha label {label!r} vs transitions "
                f"{gs.label!r} / {gt.label!r}"
            )
            continue
        if len(ps) != c.container.arity_of(label):
            yield f"pair {pair!r}: alpha has {len(ps)} positions, arity is " f"{c.container.arity_of(label)}"
            continue
        for b, (x, y) in enumerate(ps):
            if (x, y) != (gs.children[b], gt.children[b]):
                yield f"pair {pair!r}: position {b} pairs {(x, y)!r}, transitions give {(gs.children[b], gt.children[b])!r}"
                break
            if (x, y) not in w.relation:
                yield f"pair {pair!r}: successor pair {(x, y)!r} at position {b} not related"
                break


def verify_bisim(c: Coalgebra, w: BisimWitness) -> bool:
    """True iff every witness clause holds for every related pair."""
    return next(iter(bisim_violations(c, w)), None) is None


def first_divergence_depth(c: Coalgebra, s, t, max_depth: int) -> Optional[int]:
    """Smallest n <= max_depth at which the observations of s and t differ,
    or None if none exists within the bound."""
    for n in range(max_depth + 1):
        if approximate(c, s, n) is not approximate(c, t, n):
            return n
    return None


def bounded_bisim(c: Coalgebra, s, t, depth: int) -> bool:
    """Observational-equality oracle: equal depth-n observations for all
    n <= depth."""
    return first_divergence_depth(c, s, t, depth) is None


def partition_refine(c: Coalgebra) -> Partition:
    """Compute the coarsest bisimulation partition.

    Start from the label partition; repeatedly split blocks whose members
    send some position into different blocks; stabilizes within |states|
    rounds.  Output ordering is canonical: blocks by the enumeration index
    of their earliest member, members in enumeration order.
    """
    states = _require_states(c)
    index = {s: i for i, s in enumerate(states)}
    block_id = _group(states, lambda s: (c.transition(s).label,))
    while True:
        new_id = _group(
            states,
            lambda s: (
                block_id[s],
                tuple(block_id[ch] for ch in c.transition(s).children),
            ),
        )
        if len(set(new_id.values())) == len(set(block_id.values())):
            block_id = new_id
            break
        block_id = new_id
    groups: dict = {}
    for s in states:
        groups.setdefault(block_id[s], []).append(s)
    blocks = sorted(
        (tuple(sorted(g, key=index.__getitem__)) for g in groups.values()),
        key=lambda b: index[b[0]],
    )
    return Partition(tuple(blocks))


def coinduction_transfer(c: Coalgebra, w: BisimWitness, s, t, depth: int) -> bool:
    """Executable instance of the coinduction principle: states related by a
    verified witness have equal observations at every tested depth."""
    if not verify_bisim(c, w):
        raise InvalidWitness(next(iter(bisim_violations(c, w))))
    if (s, t) not in w.relation:
        raise PairNotRelated(f"pair {(s, t)!r} not in the witness relation")
    return bounded_bisim(c, s, t, depth)


def witness_from_partition(c: Coalgebra, p: Partition) -> BisimWitness:
    """The full relation within each block, with the forced alpha structure
    read off the transitions."""
    alpha = {}
    for block in p.blocks:
        for s in block:
            for t in block:
                pv_s, pv_t = c.transition(s), c.transition(t)
                alpha[(s, t)] = (
                    pv_s.label,
                    tuple(zip(pv_s.children, pv_t.children)),
                )
    return BisimWitness(frozenset(alpha), alpha)


def minimize(c: Coalgebra) -> Coalgebra:
    """The quotient coalgebra on partition blocks.

    Block states are named by their earliest member in the enumeration;
    transitions factor through the blocks (well-defined because blocks are
    bisimulation-closed).
    """
    states = _require_states(c)
    p = partition_refine(c)
    rep = {}
    for block in p.blocks:
        for s in block:
            rep[s] = block[0]
    gamma = {}
    for block in p.blocks:
        pv = c.transition(block[0])
        gamma[block[0]] = (pv.label, tuple(rep[ch] for ch in pv.children))
    return Coalgebra(
        c.container,
        gamma,
        state_enumeration=tuple(block[0] for block in p.blocks),
        name=f"min({c.name})" if c.name else "min",
    )


def _group(states, key) -> dict:
    ids: dict = {}
    out = {}
    for s in states:
        k = key(s)
        if k not in ids:
            ids[k] = len(ids)
        out[s] = ids[k]
    return out
