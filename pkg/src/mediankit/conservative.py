"""Conservativeness, forbidden substructures and chain representations.

A median algebra is conservative when m(x, y, z) is always one of x, y, z.
With at least five elements that happens exactly when the median is the
median of some total order; among smaller algebras the four-element
Boolean square is the lone exception.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from . import kernels
from .core import (
    Diagnosis,
    FinitePoset,
    MedianAlgebra,
    are_isomorphic,
    from_total_order,
    order_from_point,
    product_of_chains,
)
from .errors import NotConservative, TooSmall
from .figures import FORBIDDEN

# larger figures first so that a figure containing a smaller one is
# reported under its own name
SEARCH_ORDER = ("A5", "A1", "A3", "A4", "A2")


@dataclass(frozen=True)
class ForbiddenWitness:
    """``elements[i]`` realises the i-th element of figure ``kind``."""

    kind: str
    elements: tuple


@dataclass(frozen=True)
class ChainRepresentation:
    base: int
    c0: tuple
    c1: tuple
    total_order: tuple  # bottom first

    def rank(self):
        r = [0] * len(self.total_order)
        for i, x in enumerate(self.total_order):
            r[x] = i
        return r


@dataclass(frozen=True)
class TwoByTwo:
    """The conservative algebra with no chain ordering; ``isomorphism``
    maps it onto ``product_of_chains([2, 2])``."""

    isomorphism: tuple


def is_conservative(A: MedianAlgebra) -> Diagnosis:
    T = A.table
    X, Y, Z = np.indices(T.shape)
    bad = (T != X) & (T != Y) & (T != Z)
    idx = np.argwhere(bad)
    if len(idx) == 0:
        return Diagnosis(True)
    x, y, z = (int(v) for v in idx[0])
    return Diagnosis(False, f"median {int(T[x, y, z])} lies outside the triple", (x, y, z))


def _require_conservative(A):
    d = is_conservative(A)
    if not d:
        raise NotConservative(d.witness, A.m(*d.witness))


def find_A2_subalgebra(A: MedianAlgebra):
    """A 4-element subalgebra shaped like A2 (a star: one element is the
    median of the other three), or None."""
    res = kernels.a2_subalgebra_witness(A.table)
    if res is None:
        return None
    subset, centre = res
    leaves = sorted(set(subset) - {centre})
    # figure order a, b, c, d: a leaf, the centre, two more leaves
    return ForbiddenWitness("A2", (leaves[0], centre, leaves[1], leaves[2]))


def embed_poset(pattern: FinitePoset, P: FinitePoset):
    """An injective map h with x <= y iff h(x) <= h(y), or None."""
    k, n = pattern.n, P.n
    if k > n:
        return None
    pd = pattern.le.sum(axis=0)
    pu = pattern.le.sum(axis=1)
    td = P.le.sum(axis=0)
    tu = P.le.sum(axis=1)
    cands = [[p for p in range(n) if td[p] >= pd[q] and tu[p] >= pu[q]] for q in range(k)]
    h = [-1] * k

    def go(i):
        if i == k:
            return True
        for p in cands[i]:
            if p in h[:i]:
                continue
            ok = all(
                pattern.le[j, i] == P.le[h[j], p] and pattern.le[i, j] == P.le[p, h[j]]
                for j in range(i)
            )
            if ok:
                h[i] = p
                if go(i + 1):
                    return True
        h[i] = -1
        return False

    return tuple(h) if go(0) else None


def find_forbidden_poset(S, kinds=SEARCH_ORDER):
    """First induced copy of one of the figures A1..A5 inside a poset."""
    P = S.poset if hasattr(S, "poset") else S
    for kind in kinds:
        h = embed_poset(FORBIDDEN[kind], P)
        if h is not None:
            return ForbiddenWitness(kind, h)
    return None


def bot_coalesced_sum(c0, c1) -> FinitePoset:
    """Glue two chains (listed bottom first) at their bottoms.

    Index 0 is the shared bottom, then ``c0[1:]``, then ``c1[1:]``.  Labels
    are taken from the chain entries.
    """
    c0, c1 = list(c0), list(c1)
    k0, k1 = len(c0), len(c1)
    n = k0 + k1 - 1
    le = np.zeros((n, n), dtype=bool)
    le[0, :] = True
    le[:k0, :k0] = np.triu(np.ones((k0, k0), dtype=bool))
    idx1 = [0] + list(range(k0, n))
    le[np.ix_(idx1, idx1)] |= np.triu(np.ones((k1, k1), dtype=bool))
    labels = [str(v) for v in c0] + [str(v) for v in c1[1:]]
    return FinitePoset(le, labels)


def chain_decomposition(A: MedianAlgebra, a: int):
    """Split ``(A, <=_a)`` into two chains sharing the bottom ``a``.

    Returns ``(c0, c1)``, each listed bottom first under ``<=_a``.
    """
    _require_conservative(A)
    if A.n < 5:
        raise TooSmall(f"chain decomposition needs at least 5 elements, got {A.n}")
    T = A.table
    n = A.n
    rest = [x for x in range(n) if x != a]
    pair = next(((b, c) for b in rest for c in rest if b < c and T[b, c, a] == a), None)
    down_size = lambda x: int((T[a, :, x] == np.arange(n)).sum())
    if pair is None:
        return tuple(sorted(range(n), key=down_size)), (a,)
    b, c = pair
    c0 = [a] + [d for d in range(n) if T[b, d, a] != a]
    c1 = [a] + [d for d in range(n) if T[c, d, a] != a]
    if len(c0) + len(c1) - 1 != n or set(c0) & set(c1) != {a}:
        raise AssertionError("decomposition is not a partition")  # conservative input
    return tuple(sorted(c0, key=down_size)), tuple(sorted(c1, key=down_size))


def chain_ordering(A: MedianAlgebra, base: int | None = None):
    """A total order whose median is A's median, or ``TwoByTwo``.

    With five or more elements the order is read off the decomposition at
    ``base`` (default 0): the second chain reversed, then the first.
    Smaller algebras are searched exhaustively.
    """
    _require_conservative(A)
    if A.n >= 5:
        a = 0 if base is None else base
        c0, c1 = chain_decomposition(A, a)
        order = tuple(reversed(c1)) + c0[1:]
        rep = ChainRepresentation(a, c0, c1, order)
    else:
        rep = None
        for order in permutations(range(A.n)):
            if from_total_order(order) == A:
                rep = ChainRepresentation(order[0], tuple(order), (order[0],), tuple(order))
                break
        if rep is None:
            iso = are_isomorphic(A, product_of_chains([2, 2]))
            if iso is None:
                raise AssertionError("small conservative algebra is neither a chain nor 2x2")
            return TwoByTwo(iso)
    if from_total_order(rep.total_order) != A:
        raise AssertionError("chain ordering does not reproduce the median")
    return rep


def chain_poset(order) -> FinitePoset:
    """The total order listed bottom first, as a poset on the original indices."""
    n = len(order)
    rank = np.empty(n, dtype=np.int64)
    rank[list(order)] = np.arange(n)
    return FinitePoset(rank[:, None] <= rank[None, :])


def poset_of_point(A: MedianAlgebra, a: int) -> FinitePoset:
    return order_from_point(A, a).poset
