"""Signatures (containers), polynomial-functor values, and depth-bounded
approximation trees.

A container is a label domain together with a finite arity per label; the
positions of a label ``a`` are the indices ``0..arity(a)-1``.  The induced
polynomial functor sends a payload type ``X`` to values pairing a label with
one child per position (:class:`PValue`).  Iterating the functor on the unit
type yields the depth-n approximation trees (:class:`ApproxTree`), connected
by the truncation maps :func:`truncate`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence

from .errors import (
    ArityMismatch,
    CannotTruncateUnit,
    DepthTooLarge,
    NeedsFiniteLabels,
    RaggedDepth,
    SizeBoundExceeded,
    UnknownLabel,
)

DEFAULT_ENUMERATION_BOUND = 10**6


@dataclass(frozen=True, eq=False)
class Container:
    """A signature: an arity per label, optionally with a finite label list.

    ``arity`` is either a mapping from labels to non-negative integers or a
    total function on the label domain.  ``labels`` is required by operations
    that enumerate (and by the CLI profile); it must be duplicate-free.
    """

    arity: Mapping | Callable[[object], int]
    labels: Optional[tuple] = None

    def __post_init__(self):
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(set(labels)) != len(labels):
                raise UnknownLabel("label enumeration contains duplicates")
            for a in labels:
                n = self.arity_of(a)
                if n < 0:
                    raise UnknownLabel(f"negative arity for label {a!r}")

    def arity_of(self, label) -> int:
        if callable(self.arity):
            return int(self.arity(label))
        try:
            return int(self.arity[label])
        except KeyError:
            raise UnknownLabel(f"label {label!r} has no declared arity") from None


class ApproxTree:
    """An element of the depth-n approximation stage: the unit value (Trunc)
    at depth 0, or a labelled node whose children sit one stage lower.

    Zero-arity nodes may sit at any depth >= 1; all other nodes have children
    of depth exactly ``depth - 1``.

    Instances are hash-consed: structurally equal trees are the *same* object,
    so equality, hashing and set membership are O(1) even though deep trees
    share subtrees internally.  Always build through :func:`make_trunc`,
    :func:`make_node` or the library operations, never by hand.
    """

    __slots__ = ("depth", "label", "children")

    def __init__(self, depth, label, children):
        self.depth = depth
        self.label = label
        self.children = children

    @property
    def is_trunc(self) -> bool:
        return self.label is _TRUNC_LABEL

    def __repr__(self):
        if self.is_trunc:
            return "Trunc"
        if not self.children:
            return f"Node({self.label!r}@{self.depth})"
        return f"Node({self.label!r}@{self.depth}, {list(self.children)!r})"


class _TruncLabel:
    __slots__ = ()

    def __repr__(self):
        return "<trunc>"


_TRUNC_LABEL = _TruncLabel()

_interned: dict = {}


def _tree(depth: int, label, children: tuple) -> ApproxTree:
    key = (depth, label, children)
    t = _interned.get(key)
    if t is None:
        t = ApproxTree(depth, label, children)
        _interned[key] = t
    return t


TRUNC = _tree(0, _TRUNC_LABEL, ())


@dataclass(frozen=True)
class PValue:
    """A polynomial-functor value: a label with one payload per position."""

    label: object
    children: tuple

    def __post_init__(self):
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))


def pmap(f: Callable, v: PValue) -> PValue:
    """Apply ``f`` to every child payload, keeping the label (the functor
    action on maps)."""
    return PValue(v.label, tuple(f(ch) for ch in v.children))


def make_trunc() -> ApproxTree:
    """The unique depth-0 tree."""
    return TRUNC


def make_node(c: Container, a, cs: Sequence[ApproxTree], depth: Optional[int] = None) -> ApproxTree:
    """Build a node labelled ``a`` with children ``cs``.

    Children must all have the same depth d; the node sits at depth d+1.
    Zero-arity nodes default to depth 1; pass ``depth`` to place a leaf at a
    deeper stage.
    """
    cs = tuple(cs)
    n = c.arity_of(a)
    if len(cs) != n:
        raise ArityMismatch(f"label {a!r} has arity {n}, got {len(cs)} children")
    if cs:
        depths = {ch.depth for ch in cs}
        if len(depths) != 1:
            raise RaggedDepth(f"children depths differ: {sorted(depths)}")
        d = cs[0].depth + 1
        if depth is not None and depth != d:
            raise RaggedDepth(f"requested depth {depth} but children force depth {d}")
    else:
        d = 1 if depth is None else depth
        if d < 1:
            raise RaggedDepth("nodes sit at depth >= 1")
    return _tree(d, a, cs)


_truncate_cache: dict = {}


def truncate(c: Container, t: ApproxTree) -> ApproxTree:
    """The chain projection: drop the deepest layer of observations.

    Any depth-1 tree maps to Trunc; deeper nodes keep their label and
    truncate each child.  The container argument is accepted for signature
    uniformity and not otherwise consulted.
    """
    if t.depth == 0:
        raise CannotTruncateUnit("Trunc has no stage below it")
    return _truncate(t)


def _truncate(t: ApproxTree) -> ApproxTree:
    cache = _truncate_cache
    got = cache.get(t)
    if got is not None:
        return got
    stack = [t]
    while stack:
        cur = stack[-1]
        if cur in cache:
            stack.pop()
            continue
        if cur.depth == 1:
            cache[cur] = TRUNC
            stack.pop()
            continue
        pending = [ch for ch in cur.children if ch not in cache]
        if pending:
            stack.extend(pending)
        else:
            cache[cur] = _tree(
                cur.depth - 1, cur.label, tuple(cache[ch] for ch in cur.children)
            )
            stack.pop()
    return cache[t]


def truncate_to(c: Container, t: ApproxTree, m: int) -> ApproxTree:
    """Project ``t`` down to stage ``m`` by composing truncations."""
    if m > t.depth:
        raise DepthTooLarge(f"cannot raise depth {t.depth} to {m}")
    while t.depth > m:
        t = _truncate(t)
    return t


def tree_equal(t1: ApproxTree, t2: ApproxTree) -> bool:
    """Decidable structural equality of approximation trees.

    Thanks to hash-consing this is an identity check.
    """
    return t1 is t2


def enumerate_w(
    c: Container, n: int, bound: int = DEFAULT_ENUMERATION_BOUND
) -> list:
    """Brute-force enumeration of all depth-n trees over ``c``.

    Requires a finite label enumeration.  Sizes follow the recurrence
    |W_0| = 1, |W_{n+1}| = sum_a |W_n|^arity(a); the enumeration is aborted
    if any stage would exceed ``bound`` trees.
    """
    if c.labels is None:
        raise NeedsFiniteLabels("enumerate_w needs a finite label enumeration")
    arities = [c.arity_of(a) for a in c.labels]
    count = 1
    for _ in range(n):
        count = sum(count**k for k in arities)
        if count > bound:
            raise SizeBoundExceeded(f"stage would hold {count} > {bound} trees")
    stage = [TRUNC]
    for d in range(1, n + 1):
        nxt = []
        for a, k in zip(c.labels, arities):
            for combo in itertools.product(stage, repeat=k):
                nxt.append(_tree(d, a, combo))
        stage = nxt
    return stage


def well_formed(c: Container, t: ApproxTree) -> bool:
    """Check the depth/arity/shape discipline of a tree (test helper)."""
    stack = [t]
    seen = set()
    while stack:
        cur = stack.pop()
        # Interned trees may be DAG-shared; dedup keeps the walk linear.
        if id(cur) in seen:
            continue
        seen.add(id(cur))
        if cur.is_trunc:
            if cur.depth != 0:
                return False
            continue
        if cur.depth < 1:
            return False
        if len(cur.children) != c.arity_of(cur.label):
            return False
        for ch in cur.children:
            if ch.depth != cur.depth - 1:
                return False
            stack.append(ch)
    return True
