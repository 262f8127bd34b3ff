"""The final coalgebra (M-type) of a container as an omega-chain limit.

Elements of the final coalgebra are :class:`MElement`: compatible families
of depth-n approximation trees.  ``unfold`` sends a coalgebra state to the
family of its depth-n unrollings; ``out``/``into`` are the mutually inverse
structure maps, realized through the shifted-chain and limit-commutation
equivalences.  Finality is witnessed observationally by
:func:`verify_morphism` (existence) and :func:`uniqueness_probe`
(agreement of any verified morphism with unfold).
"""

from __future__ import annotations

import os
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .chain import (
    Chain,
    LimitElement,
    poly_chain,
    poly_limit_from,
    poly_limit_to,
    shift_back,
    shift_forward,
)
from .container import TRUNC, Container, PValue, _tree, _truncate, make_node
from .errors import (
    ArityMismatch,
    DepthBoundExceeded,
    InvalidCoalgebra,
    NeedsFiniteStates,
    NotAMorphism,
)

DEFAULT_DEPTH_BOUND = 10**4


def depth_bound() -> int:
    return int(os.environ.get("OMEGACOALG_MAX_DEPTH", DEFAULT_DEPTH_BOUND))


def w_chain(c: Container) -> Chain:
    """The approximation chain of ``c``: stage n holds depth-n trees, the
    projection drops the deepest layer."""
    return Chain(project=lambda n, t: _truncate(t))


@dataclass(eq=False)
class Coalgebra:
    """A state domain with a transition ``state -> PValue`` of states.

    ``gamma`` is a pure function or, for finite presentations, a mapping
    ``state -> PValue`` or ``state -> (label, children)``.  States must be
    hashable.  When ``state_enumeration`` is present, the presentation is
    validated eagerly: arities must match and transitions must stay within
    the enumerated states.
    """

    container: Container
    gamma: Mapping | Callable[[object], PValue]
    state_enumeration: Optional[tuple] = None
    name: str = ""
    _gamma_cache: dict = field(default_factory=dict, repr=False, compare=False)
    _levels: list = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self):
        if self.state_enumeration is not None:
            states = tuple(self.state_enumeration)
            self.state_enumeration = states
            if len(set(states)) != len(states):
                raise InvalidCoalgebra("state enumeration contains duplicates")
            pool = set(states)
            for s in states:
                pv = self.transition(s)
                for ch in pv.children:
                    if ch not in pool:
                        raise InvalidCoalgebra(
                            f"transition of {s!r} leaves the state enumeration: {ch!r}"
                        )

    def transition(self, s) -> PValue:
        pv = self._gamma_cache.get(s)
        if pv is None:
            raw = self.gamma[s] if isinstance(self.gamma, Mapping) else self.gamma(s)
            if isinstance(raw, PValue):
                pv = raw
            else:
                label, children = raw
                pv = PValue(label, tuple(children))
            n = self.container.arity_of(pv.label)
            if len(pv.children) != n:
                raise ArityMismatch(
                    f"state {s!r}: label {pv.label!r} has arity {n}, "
                    f"got {len(pv.children)} children"
                )
            self._gamma_cache[s] = pv
        return pv


class MElement:
    """An element of the final coalgebra's carrier: a compatible family of
    depth-n approximation trees.  Hash/equality are by identity; use
    ``tree_equal(m.at(n), m2.at(n))`` for observational comparison."""

    __slots__ = ("container", "limit", "origin")

    def __init__(self, container: Container, limit: LimitElement, origin=None):
        self.container = container
        self.limit = limit
        self.origin = origin

    def at(self, n: int):
        return self.limit.at(n)

    def __repr__(self):
        return f"MElement({self.limit.provenance or 'anonymous'})"


@dataclass(frozen=True, eq=False)
class MorphismCandidate:
    """A map from a coalgebra's states into the final coalgebra, to be
    checked against the morphism law by :func:`verify_morphism`."""

    source: Coalgebra
    map: Callable[[object], MElement]


@dataclass(frozen=True, eq=False)
class FinalCoalgebra:
    """The final coalgebra packaged with its structure map and inverse."""

    container: Container
    out: Callable[[MElement], PValue]
    into: Callable[[PValue], MElement]


def approximate(c: Coalgebra, s, n: int) -> "ApproxTree":
    """The depth-n observation of state ``s``: Trunc at depth 0, otherwise
    the transition's label over the children's depth-(n-1) observations.

    Evaluated iteratively, level by level, with a per-coalgebra cache shared
    across states and depths.
    """
    if n > depth_bound():
        raise DepthBoundExceeded(f"depth {n} exceeds bound {depth_bound()}")
    levels = c._levels
    while len(levels) <= n:
        levels.append({})
    got = levels[n].get(s)
    if got is not None:
        return got
    need = [set() for _ in range(n + 1)]
    need[n].add(s)
    for k in range(n, 0, -1):
        below = levels[k - 1]
        for t in need[k]:
            for ch in c.transition(t).children:
                if ch not in below:
                    need[k - 1].add(ch)
    for t in need[0]:
        levels[0][t] = TRUNC
    for k in range(1, n + 1):
        below = levels[k - 1]
        here = levels[k]
        for t in need[k]:
            pv = c.transition(t)
            here[t] = _tree(k, pv.label, tuple(below[ch] for ch in pv.children))
    return levels[n][s]


def unfold(c: Coalgebra, s) -> MElement:
    """The unique coalgebra morphism into the final coalgebra, evaluated at
    ``s``: stage n is ``approximate(c, s, n)``."""
    limit = LimitElement(
        w_chain(c.container),
        lambda n: approximate(c, s, n),
        provenance=f"unfold({c.name or 'coalgebra'}, {s!r})",
    )
    return MElement(c.container, limit, origin=(c, s))


def out(m: MElement) -> PValue:
    """The final coalgebra's structure map: expose the root label and the
    child elements.  Composition of the shifted-chain equivalence with the
    inverse limit-commutation map."""
    c = m.container
    base = w_chain(c)
    shifted_limit = shift_forward(m.limit)
    as_pvalues = LimitElement(
        poly_chain(c, base),
        lambda n: _node_to_pvalue(shifted_limit.at(n)),
        provenance=f"out({m.limit.provenance})",
    )
    pv = poly_limit_from(c, base, as_pvalues)
    return PValue(pv.label, tuple(MElement(c, ch) for ch in pv.children))


def into(c: Container, v: PValue) -> MElement:
    """Inverse of :func:`out`: assemble an element from a label and child
    elements.  Composition of the limit-commutation map with the shifted-
    chain equivalence."""
    if len(v.children) != c.arity_of(v.label):
        raise ArityMismatch(
            f"label {v.label!r} has arity {c.arity_of(v.label)}, "
            f"got {len(v.children)} children"
        )
    base = w_chain(c)
    lp = poly_limit_to(c, base, v)
    as_nodes = LimitElement(
        Chain(project=lambda n, t: _truncate(t)),
        lambda n: _pvalue_to_node(c, lp.at(n), n + 1),
        provenance="into",
    )
    limit = shift_back(base, as_nodes)
    limit.provenance = f"into({v.label!r})"
    return MElement(c, limit)


def _node_to_pvalue(t) -> PValue:
    return PValue(t.label, t.children)


def _pvalue_to_node(c: Container, pv: PValue, depth: int):
    return make_node(c, pv.label, pv.children, depth=depth)


def final_coalgebra(c: Container) -> FinalCoalgebra:
    return FinalCoalgebra(c, out=out, into=lambda v: into(c, v))


def out_coalgebra(c: Container) -> Coalgebra:
    """The final coalgebra viewed as a coalgebra over its own elements."""
    return Coalgebra(c, gamma=out, name="out")


def _check_states(mc: MorphismCandidate, states) -> Iterable:
    if states is None:
        states = mc.source.state_enumeration
        if states is None:
            raise NeedsFiniteStates(
                "verify_morphism needs a state enumeration or explicit samples"
            )
    return states


def morphism_violations(mc: MorphismCandidate, depth: int, states=None):
    """Yield (state, stage) pairs where the morphism law fails."""
    for s in _check_states(mc, states):
        m = mc.map(s)
        for n in range(depth + 1):
            if m.at(n) is not approximate(mc.source, s, n):
                yield (s, n)
                break


def verify_morphism(mc: MorphismCandidate, depth: int, states=None) -> bool:
    """Depth-bounded morphism law: out(map(s)) agrees with the transition
    pushed through the map, equivalently ``map(s).at(n)`` equals the depth-n
    observation of ``s``, for every checked state and n <= depth."""
    return next(iter(morphism_violations(mc, depth, states)), None) is None


def uniqueness_probe(c: Coalgebra, mc: MorphismCandidate, depth: int, states=None) -> bool:
    """Executable shadow of contractibility: any verified morphism agrees
    with unfold at every checked state and stage."""
    if not verify_morphism(mc, depth, states):
        raise NotAMorphism("candidate fails the morphism law; probe refused")
    for s in _check_states(mc, states):
        m = mc.map(s)
        u = unfold(c, s)
        for n in range(depth + 1):
            if m.at(n) is not u.at(n):
                return False
    return True
