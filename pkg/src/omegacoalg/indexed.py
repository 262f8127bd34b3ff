"""Indexed containers: sorted signatures, coalgebras, and corecursion.

An indexed container fibres a signature over a finite set of sorts; each
label lives at a sort and assigns a sort to every child position.  The
indexed operations mirror the plain ones, threading sorts through and
rejecting ill-sorted inputs eagerly.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Callable, Optional

from .chain import Chain, LimitElement
from .container import TRUNC, _tree, _truncate, ApproxTree
from .errors import (
    ArityMismatch,
    DepthBoundExceeded,
    InvalidCoalgebra,
    NotAMorphism,
    SortMismatch,
    UnknownLabel,
)
from .mtype import depth_bound


@dataclass(frozen=True, eq=False)
class IndexedContainer:
    """Sorts, labels per sort, arities, and the child-sort assignment.

    ``child_sort[(sort, label)]`` is the tuple of sorts of the children, one
    per position; its length must equal the arity.  Closure into ``sorts``
    is validated at construction.
    """

    sorts: tuple
    labels_at: Mapping
    arity: Mapping
    child_sort: Mapping

    def __post_init__(self):
        pool = set(self.sorts)
        if len(pool) != len(self.sorts):
            raise InvalidCoalgebra("duplicate sorts")
        for i in self.sorts:
            for a in self.labels_at.get(i, ()):
                key = (i, a)
                if key not in self.arity:
                    raise UnknownLabel(f"no arity for label {a!r} at sort {i!r}")
                cs = tuple(self.child_sort.get(key, ()))
                if len(cs) != self.arity[key]:
                    raise InvalidCoalgebra(
                        f"label {a!r} at sort {i!r}: {len(cs)} child sorts, arity {self.arity[key]}"
                    )
                for j in cs:
                    if j not in pool:
                        raise InvalidCoalgebra(
                            f"label {a!r} at sort {i!r} has child sort {j!r} outside the sort list"
                        )

    def labels(self, sort) -> tuple:
        return tuple(self.labels_at.get(sort, ()))


@dataclass(eq=False)
class IndexedCoalgebra:
    """States with a sort each and transitions respecting the child-sort
    assignment.  Finite presentations are validated at construction."""

    base: IndexedContainer
    states: tuple
    sort_of: Mapping
    gamma: Mapping | Callable
    name: str = ""
    _gamma_cache: dict = field(default_factory=dict, repr=False, compare=False)
    _levels: list = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self):
        self.states = tuple(self.states)
        pool = set(self.states)
        if len(pool) != len(self.states):
            raise InvalidCoalgebra("duplicate states")
        for s in self.states:
            if self.sort_of[s] not in set(self.base.sorts):
                raise InvalidCoalgebra(f"state {s!r} has unknown sort {self.sort_of[s]!r}")
            label, children = self.transition(s)
            for ch in children:
                if ch not in pool:
                    raise InvalidCoalgebra(
                        f"transition of {s!r} leaves the state set: {ch!r}"
                    )

    def transition(self, s):
        got = self._gamma_cache.get(s)
        if got is None:
            raw = self.gamma[s] if isinstance(self.gamma, Mapping) else self.gamma(s)
            label, children = raw
            children = tuple(children)
            i = self.sort_of[s]
            if label not in self.base.labels(i):
                raise UnknownLabel(f"state {s!r}: label {label!r} not at sort {i!r}")
            key = (i, label)
            if len(children) != self.base.arity[key]:
                raise ArityMismatch(
                    f"state {s!r}: label {label!r} has arity {self.base.arity[key]}, "
                    f"got {len(children)} children"
                )
            for b, ch in enumerate(children):
                want = self.base.child_sort[key][b]
                if self.sort_of[ch] != want:
                    raise InvalidCoalgebra(
                        f"state {s!r}: child {b} has sort {self.sort_of[ch]!r}, "
                        f"expected {want!r}"
                    )
            got = (label, children)
            self._gamma_cache[s] = got
        return got


@dataclass(frozen=True)
class SortedApproxTree:
    """An approximation tree together with the sort of its root; the sorts
    of all subtrees are determined by the child-sort assignment."""

    sort: object
    tree: ApproxTree

    @property
    def depth(self):
        return self.tree.depth


class SortedMElement:
    """An element of the indexed final coalgebra at a fixed sort."""

    __slots__ = ("base", "sort", "limit")

    def __init__(self, base: IndexedContainer, sort, limit: LimitElement):
        self.base = base
        self.sort = sort
        self.limit = limit

    def at(self, n: int) -> ApproxTree:
        return self.limit.at(n)

    def __repr__(self):
        return f"SortedMElement({self.sort!r}, {self.limit.provenance or 'anonymous'})"


def well_sorted(ic: IndexedContainer, t: SortedApproxTree) -> bool:
    """Check labels and child sorts recursively against the container."""
    stack = [(t.sort, t.tree)]
    seen = set()
    while stack:
        sort, node = stack.pop()
        if node.is_trunc:
            continue
        # Trees are interned, so a (sort, subtree) pair checks the same way
        # on every path; dedup keeps shared trees linear to traverse.
        mark = (sort, id(node))
        if mark in seen:
            continue
        seen.add(mark)
        if node.label not in ic.labels(sort):
            return False
        key = (sort, node.label)
        if len(node.children) != ic.arity[key]:
            return False
        for b, ch in enumerate(node.children):
            stack.append((ic.child_sort[key][b], ch))
    return True


def iapproximate(c: IndexedCoalgebra, s, n: int) -> SortedApproxTree:
    """Depth-n observation of an indexed state, carrying its sort."""
    if n > depth_bound():
        raise DepthBoundExceeded(f"depth {n} exceeds bound {depth_bound()}")
    levels = c._levels
    while len(levels) <= n:
        levels.append({})
    got = levels[n].get(s)
    if got is None:
        need = [set() for _ in range(n + 1)]
        need[n].add(s)
        for k in range(n, 0, -1):
            below = levels[k - 1]
            for t in need[k]:
                for ch in c.transition(t)[1]:
                    if ch not in below:
                        need[k - 1].add(ch)
        for t in need[0]:
            levels[0][t] = TRUNC
        for k in range(1, n + 1):
            below = levels[k - 1]
            for t in need[k]:
                label, children = c.transition(t)
                levels[k][t] = _tree(k, label, tuple(below[ch] for ch in children))
        got = levels[n][s]
    return SortedApproxTree(c.sort_of[s], got)


def iunfold(c: IndexedCoalgebra, s) -> SortedMElement:
    """Corecursion into the indexed final coalgebra at sort_of(s)."""
    limit = LimitElement(
        Chain(project=lambda n, t: _truncate(t)),
        lambda n: iapproximate(c, s, n).tree,
        provenance=f"iunfold({c.name or 'indexed'}, {s!r})",
    )
    return SortedMElement(c.base, c.sort_of[s], limit)


def i_out(m: SortedMElement):
    """Expose the root label and the child elements, with the children's
    sorts read off the child-sort assignment."""
    ic = m.base
    label = m.at(1).label
    if label not in ic.labels(m.sort):
        raise SortMismatch(f"root label {label!r} is not available at sort {m.sort!r}")
    key = (m.sort, label)
    children = []
    for b in range(ic.arity[key]):
        limit = LimitElement(
            Chain(project=lambda n, t: _truncate(t)),
            lambda n, b=b: m.at(n + 1).children[b],
            provenance=f"i_out[{b}]({m.limit.provenance})",
        )
        children.append(SortedMElement(ic, ic.child_sort[key][b], limit))
    return label, tuple(children)


def i_into(ic: IndexedContainer, sort, label, children) -> SortedMElement:
    """Inverse of :func:`i_out`: assemble an element at ``sort`` from a
    label and correctly sorted child elements."""
    if label not in ic.labels(sort):
        raise SortMismatch(f"label {label!r} is not available at sort {sort!r}")
    key = (sort, label)
    children = tuple(children)
    if len(children) != ic.arity[key]:
        raise ArityMismatch(
            f"label {label!r} at sort {sort!r} has arity {ic.arity[key]}, "
            f"got {len(children)} children"
        )
    for b, ch in enumerate(children):
        if ch.sort != ic.child_sort[key][b]:
            raise SortMismatch(
                f"child {b} has sort {ch.sort!r}, expected {ic.child_sort[key][b]!r}"
            )

    def fn(n):
        if n == 0:
            return TRUNC
        return _tree(n, label, tuple(ch.at(n - 1) for ch in children))

    limit = LimitElement(
        Chain(project=lambda n, t: _truncate(t)), fn, provenance=f"i_into({label!r})"
    )
    return SortedMElement(ic, sort, limit)


def ibounded_bisim(c: IndexedCoalgebra, s, t, depth: int) -> bool:
    """Depth-wise observational equality; only meaningful within a sort."""
    if c.sort_of[s] != c.sort_of[t]:
        raise SortMismatch(
            f"states {s!r} and {t!r} have sorts {c.sort_of[s]!r} and {c.sort_of[t]!r}"
        )
    for n in range(depth + 1):
        if iapproximate(c, s, n).tree is not iapproximate(c, t, n).tree:
            return False
    return True


def ifirst_divergence_depth(c: IndexedCoalgebra, s, t, max_depth: int) -> Optional[int]:
    if c.sort_of[s] != c.sort_of[t]:
        raise SortMismatch(
            f"states {s!r} and {t!r} have sorts {c.sort_of[s]!r} and {c.sort_of[t]!r}"
        )
    for n in range(max_depth + 1):
        if iapproximate(c, s, n).tree is not iapproximate(c, t, n).tree:
            return n
    return None


def iverify_morphism(c: IndexedCoalgebra, map_fn, depth: int, states=None) -> bool:
    """Indexed analogue of the morphism law check for maps
    state -> SortedMElement."""
    for s in states if states is not None else c.states:
        m = map_fn(s)
        if m.sort != c.sort_of[s]:
            return False
        for n in range(depth + 1):
            if m.at(n) is not iapproximate(c, s, n).tree:
                return False
    return True


def iuniqueness_probe(c: IndexedCoalgebra, map_fn, depth: int, states=None) -> bool:
    """Any verified indexed morphism agrees with iunfold."""
    if not iverify_morphism(c, map_fn, depth, states):
        raise NotAMorphism("candidate fails the indexed morphism law")
    for s in states if states is not None else c.states:
        m = map_fn(s)
        u = iunfold(c, s)
        for n in range(depth + 1):
            if m.at(n) is not u.at(n):
                return False
    return True


def embed_plain(container, coalgebra) -> IndexedCoalgebra:
    """View a plain coalgebra (with enumerated labels and states) as an
    indexed one over a single sort."""
    from .mtype import Coalgebra  # noqa: F401  (typing aid only)

    sort = "*"
    labels = container.labels
    if labels is None:
        raise UnknownLabel("embedding needs an enumerated label domain")
    ic = IndexedContainer(
        sorts=(sort,),
        labels_at={sort: tuple(labels)},
        arity={(sort, a): container.arity_of(a) for a in labels},
        child_sort={(sort, a): (sort,) * container.arity_of(a) for a in labels},
    )
    states = coalgebra.state_enumeration
    gamma = {}
    for s in states:
        pv = coalgebra.transition(s)
        gamma[s] = (pv.label, pv.children)
    return IndexedCoalgebra(
        ic,
        states=states,
        sort_of={s: sort for s in states},
        gamma=gamma,
        name=f"embed({coalgebra.name})" if coalgebra.name else "embed",
    )
