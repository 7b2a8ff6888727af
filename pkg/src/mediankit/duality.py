"""Finite dual spaces of median algebras.

The dual of A has the prime convex subsets of A as points, ordered by
inclusion, with set complement as an order-reversing involution and the
empty set and A as bounds.  At finite size the topology is discrete (every
subset is clopen, generated by the sets ``r_a`` and their complements), so
it is not stored.  Going back, the complete ideals of a dual space carry a
componentwise-majority median, and ``a -> r_a`` recovers A.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .config import check_space
from .core import FinitePoset, HomMap, MedianAlgebra, _backtrack, _candidates
from .errors import NotAHom, RoundTripFailure


@dataclass(frozen=True, eq=False)
class DualSpace:
    """Bounded poset with an order-reversing involution ``complement``.

    ``points`` are presentation labels; for ``dual_space`` they are the
    prime convex sets themselves, as sorted tuples.
    """

    points: tuple
    le: np.ndarray
    complement: tuple
    bottom: int
    top: int

    def __post_init__(self):
        P = FinitePoset(self.le)  # validates the order
        object.__setattr__(self, "le", P.le)
        comp = np.asarray(self.complement, dtype=np.int64)
        n = len(self.points)
        if P.n != n or len(comp) != n:
            raise ValueError("points, order and complement disagree in size")
        if not (P.le[self.bottom].all() and P.le[:, self.top].all()):
            raise ValueError("bottom/top are not bounds")
        if not (comp[comp] == np.arange(n)).all():
            raise ValueError("complement is not an involution")
        # x <= y implies y^c <= x^c
        if (P.le & ~P.le[comp][:, comp].T).any():
            raise ValueError("complement is not order reversing")
        bad = [x for x in range(n) if P.le[x, comp[x]] and x != self.bottom]
        if bad:
            raise ValueError(f"x <= x^c for a non-bottom point {bad[0]}")
        object.__setattr__(self, "complement", tuple(int(c) for c in comp))

    @property
    def n(self):
        return len(self.points)

    def poset(self) -> FinitePoset:
        return FinitePoset(self.le, [_point_label(p) for p in self.points])


def _point_label(p):
    if isinstance(p, tuple) and all(isinstance(v, (int, np.integer)) for v in p):
        return "{" + ",".join(str(v) for v in p) + "}"
    return str(p)


@dataclass(frozen=True)
class DualMap:
    """A map between dual spaces given by point indices."""

    source: DualSpace
    target: DualSpace
    images: tuple


def _convex(A, inside):
    idx = np.flatnonzero(inside)
    return bool(inside[A.table[np.ix_(idx, idx)]].all()) if len(idx) else True


def is_prime_convex(A: MedianAlgebra, C) -> bool:
    """True iff C and its complement are both convex.

    Cross-checked against the triple form: m(x, y, z) is in C exactly when
    two of x, y, z are.
    """
    inside = np.zeros(A.n, dtype=bool)
    inside[list(C)] = True
    direct = _convex(A, inside) and _convex(A, ~inside)
    X, Y, Z = inside[:, None, None], inside[None, :, None], inside[None, None, :]
    two = (X & Y) | (X & Z) | (Y & Z)
    triple = bool((inside[A.table] == two).all())
    if direct != triple:
        raise AssertionError(f"prime convexity tests disagree on {sorted(C)}")
    return direct


def prime_convex_subsets(A: MedianAlgebra, limit=None) -> list:
    """All prime convex subsets, smallest first, then lexicographic."""
    check_space("prime convex subsets", 2 ** A.n, limit)
    if A.n > 62:
        raise ValueError("universe too large for bitmask enumeration")
    sets = [tuple(i for i in range(A.n) if mask >> i & 1) for mask in kernels.prime_convex_masks(A.table)]
    return sorted(sets, key=lambda s: (len(s), s))


def _space_from_sets(sets, universe):
    index = {s: i for i, s in enumerate(sets)}
    full = tuple(range(universe))
    masks = np.zeros((len(sets), universe), dtype=bool)
    for i, s in enumerate(sets):
        masks[i, list(s)] = True
    le = (masks[:, None, :] <= masks[None, :, :]).all(axis=2)
    comp = [index[tuple(sorted(set(full) - set(s)))] for s in sets]
    return DualSpace(tuple(sets), le, tuple(comp), index[()], index[full])


def dual_space(A: MedianAlgebra, limit=None) -> DualSpace:
    return _space_from_sets(prime_convex_subsets(A, limit), A.n)


def enumerate_complete_ideals(X: DualSpace, limit=None) -> list:
    """Down-sets W with exactly one of x, x^c in W for every point x.

    Returned as sorted index tuples, smallest first then lexicographic.
    """
    reps = [x for x in range(X.n) if x < X.complement[x]]
    check_space("complete ideals", 2 ** len(reps), limit)
    comp = np.asarray(X.complement)
    out = []
    for code in range(2 ** len(reps)):
        W = np.zeros(X.n, dtype=bool)
        for j, x in enumerate(reps):
            W[x if (code >> j) & 1 else comp[x]] = True
        if not (X.le[:, W] & ~W[:, None]).any():
            out.append(tuple(int(v) for v in np.flatnonzero(W)))
    return sorted(out, key=lambda s: (len(s), s))


def complete_ideals(X: DualSpace, limit=None) -> MedianAlgebra:
    """The algebra of complete ideals with the componentwise majority median.

    Element i is ``enumerate_complete_ideals(X)[i]``.
    """
    ideals = enumerate_complete_ideals(X, limit)
    index = {w: i for i, w in enumerate(ideals)}
    vec = np.zeros((len(ideals), X.n), dtype=np.int8)
    for i, w in enumerate(ideals):
        vec[i, list(w)] = 1
    k = len(ideals)
    maj = (vec[:, None, None, :] + vec[None, :, None, :] + vec[None, None, :, :]) >= 2
    table = np.empty((k, k, k), dtype=np.int32)
    for pos in np.ndindex(k, k, k):
        key = tuple(int(v) for v in np.flatnonzero(maj[pos]))
        if key not in index:
            raise RoundTripFailure(f"majority of ideals {pos} is not a complete ideal")
        table[pos] = index[key]
    return MedianAlgebra(table, ["{" + ",".join(map(str, w)) + "}" for w in ideals])


def double_dual_unit(A: MedianAlgebra, limit=None) -> HomMap:
    """The isomorphism a -> r_a from A onto the complete ideals of its dual,
    where r_a is the set of prime convex sets that miss a."""
    X = dual_space(A, limit)
    ideals = enumerate_complete_ideals(X, limit)
    B = complete_ideals(X, limit)
    index = {w: i for i, w in enumerate(ideals)}
    images = []
    for a in range(A.n):
        r_a = tuple(i for i, C in enumerate(X.points) if a not in C)
        if r_a not in index:
            raise RoundTripFailure(f"r_{a} is not a complete ideal")
        images.append(index[r_a])
    if len(set(images)) != A.n or len(ideals) != A.n:
        raise RoundTripFailure("a -> r_a is not a bijection")
    if kernels.hom_witness(A.table, B.table, np.asarray(images)) is not None:
        raise RoundTripFailure("a -> r_a does not preserve the median")
    return HomMap.of(images, B.n)


def dual_of_hom(f: HomMap, A: MedianAlgebra, B: MedianAlgebra, limit=None) -> DualMap:
    """The preimage map from the dual of B to the dual of A."""
    w = kernels.hom_witness(A.table, B.table, np.asarray(f.images))
    if w is not None:
        raise NotAHom(w)
    XA, XB = dual_space(A, limit), dual_space(B, limit)
    index = {s: i for i, s in enumerate(XA.points)}
    images = []
    for I in XB.points:
        inside = set(I)
        images.append(index[tuple(x for x in range(A.n) if f(x) in inside)])
    phi = DualMap(XB, XA, tuple(images))
    if not is_morphism(phi):
        raise AssertionError("preimage map does not preserve the dual structure")
    return phi


def is_morphism(phi: DualMap) -> bool:
    """Preserves order, complement, bottom and top."""
    X, Y = phi.source, phi.target
    h = np.asarray(phi.images)
    comp_x, comp_y = np.asarray(X.complement), np.asarray(Y.complement)
    return bool(
        h[X.bottom] == Y.bottom
        and h[X.top] == Y.top
        and (h[comp_x] == comp_y[h]).all()
        and not (X.le & ~Y.le[np.ix_(h, h)]).any()
    )


def is_embedding(phi: DualMap) -> bool:
    """Injective morphism that also reflects the order."""
    h = np.asarray(phi.images)
    return bool(
        is_morphism(phi)
        and len(set(phi.images)) == len(h)
        and (phi.source.le == phi.target.le[np.ix_(h, h)]).all()
    )


def compose(phi: DualMap, psi: DualMap) -> DualMap:
    """``psi`` after ``phi``."""
    return DualMap(phi.source, psi.target, tuple(psi.images[i] for i in phi.images))


def coproduct(X: DualSpace, Y: DualSpace) -> DualSpace:
    """Disjoint union with the two bottoms and the two tops identified.

    X keeps its indices; the inner points of Y follow, tagged ``(1, p)``.
    """
    inner = [y for y in range(Y.n) if y not in (Y.bottom, Y.top)]
    where = {Y.bottom: X.bottom, Y.top: X.top}
    for k, y in enumerate(inner):
        where[y] = X.n + k
    n = X.n + len(inner)
    le = np.zeros((n, n), dtype=bool)
    le[: X.n, : X.n] = X.le
    yi = [where[y] for y in range(Y.n)]
    le[np.ix_(yi, yi)] |= Y.le
    le[X.bottom, :] = True
    le[:, X.top] = True
    comp = list(X.complement) + [where[Y.complement[y]] for y in inner]
    points = tuple((0, p) for p in X.points) + tuple((1, Y.points[y]) for y in inner)
    return DualSpace(points, le, tuple(comp), X.bottom, X.top)


def structure_isomorphism(X: DualSpace, Y: DualSpace):
    """A bijection preserving and reflecting order, complement and bounds."""
    if X.n != Y.n:
        return None
    sig = lambda Z: [(int(Z.le[:, x].sum()), int(Z.le[x].sum())) for x in range(Z.n)]
    cands = _candidates(sig(X), sig(Y))
    if cands is None:
        return None

    def accept(h, i):
        hh = np.asarray(h[: i + 1])
        if not ((X.le[i, : i + 1] == Y.le[hh[i], hh]).all() and (X.le[: i + 1, i] == Y.le[hh, hh[i]]).all()):
            return False
        c = X.complement[i]
        return c > i or h[c] == Y.complement[h[i]]

    h = _backtrack(cands, accept)
    if h is not None:
        assert h[X.bottom] == Y.bottom and h[X.top] == Y.top
    return h


def chain_dual(order) -> DualSpace:
    """Up(C) glued to its order dual along both bounds, for the chain C
    listed bottom first.

    Each point is labelled by the subset of C it stands for: an up-set of C
    for the first copy, the complementary down-set for the second, so the
    result can be compared with ``dual_space`` point by point.
    """
    order = list(order)
    k = len(order)
    ups = [tuple(sorted(order[k - s:])) for s in range(1, k)]  # sizes 1..k-1
    downs = [tuple(sorted(order[: k - s])) for s in range(1, k)]
    points = [(), tuple(sorted(order))] + ups + downs
    n = len(points)
    bottom, top = 0, 1
    le = np.eye(n, dtype=bool)
    le[bottom, :] = True
    le[:, top] = True
    m = k - 1
    for s in range(m):
        for t in range(m):
            le[2 + s, 2 + t] |= s <= t
            le[2 + m + s, 2 + m + t] |= s >= t
    comp = [top, bottom] + [2 + m + s for s in range(m)] + [2 + s for s in range(m)]
    return DualSpace(tuple(points), le, tuple(comp), bottom, top)


def downset_bijection(order, limit=None):
    """Pair each complete ideal W of ``chain_dual(order)`` with W restricted
    to the up-set copy; those restrictions are exactly the non-empty proper
    down-sets of the chain Up(C).

    Returns a list of ``(ideal, downset)`` index tuples and raises
    ``RoundTripFailure`` if either direction fails.
    """
    X = chain_dual(order)
    k = len(order)
    up_copy = [0] + list(range(2, k + 1)) + [1]  # Up(C) bottom to top
    ideals = enumerate_complete_ideals(X, limit)
    pairs = []
    for W in ideals:
        omega = tuple(p for p in up_copy if p in W)
        # non-empty proper down-set of the chain up_copy
        if not omega or len(omega) == len(up_copy) or omega != tuple(up_copy[: len(omega)]):
            raise RoundTripFailure(f"{W} restricts to {omega}")
        comp_omega = {X.complement[p] for p in omega}
        dual_copy = [0, 1] + list(range(k + 1, 2 * k))
        back = tuple(sorted(set(omega) | (set(dual_copy) - comp_omega)))
        if back != W:
            raise RoundTripFailure(f"{omega} does not rebuild {W}")
        pairs.append((W, omega))
    if len(pairs) != k:
        raise RoundTripFailure("wrong number of complete ideals")
    return pairs


def embed_in_hypercube(A: MedianAlgebra, limit=None) -> HomMap:
    """a -> (1 if a is outside C else 0) over the prime convex sets C.

    The target is the Boolean cube with one coordinate per prime convex set,
    first set most significant.  Checked injective and median preserving
    coordinate by coordinate (each coordinate is a map onto the 2-chain).
    """
    sets = prime_convex_subsets(A, limit)
    k = len(sets)
    bits = np.array([[0 if a in C else 1 for C in sets] for a in range(A.n)], dtype=np.int32)
    two = MedianAlgebra.chain(2).table
    for j in range(k):
        w = kernels.hom_witness(A.table, two, np.ascontiguousarray(bits[:, j]))
        if w is not None:
            raise NotAHom(w)
    codes = [int("".join(map(str, row)), 2) for row in bits]
    if len(set(codes)) != A.n:
        raise RoundTripFailure("hypercube map is not injective")
    return HomMap.of(codes, 2 ** k)
