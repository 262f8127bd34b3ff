"""Omega-chains and their limits as memoized approximation families.

A chain is a family of stage-value domains connected by projections
``project(n) : stage n+1 -> stage n``.  Its limit is represented
intensionally: a :class:`LimitElement` evaluates any finite stage on demand
and caches the result; compatibility (``project(n, at(n+1)) == at(n)``) is
guaranteed by construction for library-built elements and checkable to any
finite depth for hand-built ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .container import Container, PValue, pmap
from .errors import ConeLawViolation, LabelDrift

DEFAULT_CONE_CHECK_DEPTH = 16
DEFAULT_LABEL_CHECK_DEPTH = 8


def _structural_equal(n, a, b) -> bool:
    return a == b


@dataclass(frozen=True, eq=False)
class Chain:
    """Stage projections plus decidable per-stage equality.

    ``project(n, v)`` maps a stage-(n+1) value ``v`` to stage n.
    """

    project: Callable[[int, object], object]
    equal: Callable[[int, object, object], bool] = _structural_equal


def shifted(chain: Chain) -> Chain:
    """The chain with stage n given by stage n+1 of the original."""
    return Chain(
        project=lambda n, v: chain.project(n + 1, v),
        equal=lambda n, a, b: chain.equal(n + 1, a, b),
    )


def poly_chain(c: Container, base: Chain) -> Chain:
    """The image of a chain under the polynomial functor: stage n holds
    PValues whose children are stage-n values of the base chain."""
    return Chain(
        project=lambda n, pv: pmap(lambda x: base.project(n, x), pv),
        equal=_structural_equal,
    )


class LimitElement:
    """An element of a chain limit: a memoized stage-indexed family."""

    __slots__ = ("chain", "provenance", "_fn", "_cache")

    def __init__(self, chain: Chain, fn: Callable[[int], object], provenance: str = ""):
        self.chain = chain
        self.provenance = provenance
        self._fn = fn
        self._cache: dict = {}

    def at(self, n: int):
        cache = self._cache
        if n in cache:
            return cache[n]
        v = self._fn(n)
        cache[n] = v
        return v

    def __repr__(self):
        return f"LimitElement({self.provenance or 'anonymous'})"


@dataclass(frozen=True, eq=False)
class Cone:
    """A family of legs from an apex into every stage, commuting with the
    projections.  ``apex_samples`` are the apex values used when the cone
    law is verified at construction of the induced map."""

    legs: Callable[[int, object], object]
    apex_samples: tuple = ()


def check_compat(l: LimitElement, upto: int) -> bool:
    """Verify ``project(n, at(n+1)) == at(n)`` for all n < upto."""
    chain = l.chain
    for n in range(upto):
        if not chain.equal(n, chain.project(n, l.at(n + 1)), l.at(n)):
            return False
    return True


def cone_to_map(
    chain: Chain, c: Cone, check_depth: int = DEFAULT_CONE_CHECK_DEPTH
) -> Callable[[object], LimitElement]:
    """Turn a cone into the induced map apex -> limit.

    The cone law is verified on ``c.apex_samples`` up to ``check_depth``;
    violations raise :class:`ConeLawViolation`.
    """
    for x in c.apex_samples:
        for n in range(check_depth):
            if not chain.equal(n, chain.project(n, c.legs(n + 1, x)), c.legs(n, x)):
                raise ConeLawViolation(f"cone law fails at stage {n} for apex {x!r}")

    def h(x):
        return LimitElement(chain, lambda n, x=x: c.legs(n, x), provenance="cone")

    return h


def map_to_cone(h: Callable[[object], LimitElement]) -> Cone:
    """The projections of a map into the limit; commutation holds by
    compatibility of the limit elements."""
    return Cone(legs=lambda n, x: h(x).at(n))


def iterate_cochain(x0, step: Callable[[int, object], object], n: int):
    """Evaluate at stage n the unique compatible cochain tuple with first
    element ``x0`` (tuples in a chain with inverted arrows are determined by
    their first element)."""
    v = x0
    for k in range(n):
        v = step(k, v)
    return v


def shift_forward(l: LimitElement) -> LimitElement:
    """View a limit element of a chain as one of the shifted chain."""
    return LimitElement(
        shifted(l.chain), lambda n: l.at(n + 1), provenance=f"shift+({l.provenance})"
    )


def shift_back(base: Chain, l: LimitElement) -> LimitElement:
    """Inverse of :func:`shift_forward`: the stage-0 component is forced to
    be the projection of the shifted family's first stage."""

    def fn(n):
        if n == 0:
            return base.project(0, l.at(0))
        return l.at(n - 1)

    return LimitElement(base, fn, provenance=f"shift-({l.provenance})")


def poly_limit_to(c: Container, base: Chain, v: PValue) -> LimitElement:
    """The limit-commutation map: a PValue with limit-element children
    becomes a limit element of the P-applied chain, stage n being the PValue
    of the children's stage-n projections."""
    return LimitElement(
        poly_chain(c, base),
        lambda n: PValue(v.label, tuple(ch.at(n) for ch in v.children)),
        provenance="poly_limit_to",
    )


def poly_limit_from(
    c: Container,
    base: Chain,
    l: LimitElement,
    check_depth: int = DEFAULT_LABEL_CHECK_DEPTH,
) -> PValue:
    """Inverse of :func:`poly_limit_to`.

    Compatibility forces every stage of ``l`` to carry the same root label;
    disagreement (a corrupt hand-built family) raises :class:`LabelDrift`,
    eagerly up to ``check_depth`` stages and lazily beyond.
    """
    first = l.at(0)
    label = first.label
    for n in range(1, check_depth):
        if l.at(n).label != label:
            raise LabelDrift(f"stage {n} has label {l.at(n).label!r}, stage 0 has {label!r}")

    def child(b):
        def fn(n):
            pv = l.at(n)
            if pv.label != label:
                raise LabelDrift(
                    f"stage {n} has label {pv.label!r}, stage 0 has {label!r}"
                )
            return pv.children[b]

        return LimitElement(base, fn, provenance=f"poly_limit_from[{b}]")

    return PValue(label, tuple(child(b) for b in range(len(first.children))))
