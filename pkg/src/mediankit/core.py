"""Finite median algebras, posets and meet-semilattices.

Elements are always ``0..n-1``; labels are presentation only.  A median
algebra stores its ternary operation as a read-only ``(n, n, n)`` int32
array, so ``A.table[x, y, z]`` is ``m(x, y, z)``.  The flat row-major form
(index ``x*n*n + y*n + z``) is what the document format uses.

Axiom checking is exhaustive.  The associativity-like law costs O(n^5)
table lookups, which puts the practical ceiling at a few dozen elements.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Sequence

import numpy as np

from . import kernels
from .errors import (
    AxiomViolation,
    IdentityViolation,
    NotAPoset,
    NotMedianSemilattice,
    TableNotClosed,
)


def _frozen(arr, dtype):
    arr = np.ascontiguousarray(arr, dtype=dtype)
    arr.setflags(write=False)
    return arr


def _first(mask):
    idx = np.argwhere(mask)
    return None if len(idx) == 0 else tuple(int(v) for v in idx[0])


# ---------------------------------------------------------------------------
# posets


@dataclass(frozen=True, eq=False)
class FinitePoset:
    """A partial order on ``0..n-1`` given by its boolean ``le`` matrix."""

    le: np.ndarray
    labels: tuple | None = None

    def __post_init__(self):
        le = np.asarray(self.le, dtype=bool)
        if le.ndim != 2 or le.shape[0] != le.shape[1] or le.shape[0] == 0:
            raise NotAPoset("le must be a non-empty square matrix")
        if not le.diagonal().all():
            raise NotAPoset(f"not reflexive at {int(np.argmin(le.diagonal()))}")
        w = _first(le & le.T & ~np.eye(len(le), dtype=bool))
        if w is not None:
            raise NotAPoset(f"not antisymmetric at {w}")
        comp = (le.astype(np.int32) @ le.astype(np.int32)) > 0
        w = _first(comp & ~le)
        if w is not None:
            raise NotAPoset(f"not transitive at {w}")
        object.__setattr__(self, "le", _frozen(le, bool))
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != len(le):
                raise NotAPoset("wrong number of labels")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_covers(cls, n, covers, labels=None):
        """Build the order generated by ``(lower, upper)`` pairs."""
        le = np.eye(n, dtype=bool)
        for x, y in covers:
            le[x, y] = True
        for k in range(n):  # Warshall
            le |= le[:, k, None] & le[None, k, :]
        return cls(le, labels)

    @classmethod
    def chain(cls, n, labels=None):
        return cls(np.triu(np.ones((n, n), dtype=bool)), labels)

    @property
    def n(self):
        return self.le.shape[0]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, FinitePoset) and np.array_equal(self.le, other.le)

    def __hash__(self):
        return hash(self.le.tobytes())

    def label(self, x):
        return self.labels[x] if self.labels else str(x)

    def covers(self):
        """Cover pairs ``(x, y)``: x < y with nothing strictly between."""
        lt = self.le & ~np.eye(self.n, dtype=bool)
        between = (lt.astype(np.int32) @ lt.astype(np.int32)) > 0
        return [tuple(int(v) for v in p) for p in np.argwhere(lt & ~between)]

    def down(self, x):
        return np.flatnonzero(self.le[:, x])

    def up(self, x):
        return np.flatnonzero(self.le[x, :])

    def comparable(self, x, y):
        return bool(self.le[x, y] or self.le[y, x])

    def is_chain(self):
        return bool((self.le | self.le.T).all())

    def bottom(self):
        cand = np.flatnonzero(self.le.all(axis=1))
        return int(cand[0]) if len(cand) else None

    def top(self):
        cand = np.flatnonzero(self.le.all(axis=0))
        return int(cand[0]) if len(cand) else None

    def join(self, *xs):
        """Least upper bound of ``xs`` or None."""
        ub = np.logical_and.reduce([self.le[x] for x in xs])
        for u in np.flatnonzero(ub):
            if self.le[u, ub].all():
                return int(u)
        return None

    def meet(self, *xs):
        lb = np.logical_and.reduce([self.le[:, x] for x in xs])
        for u in np.flatnonzero(lb):
            if self.le[lb, u].all():
                return int(u)
        return None

    def induced(self, elements):
        elements = list(elements)
        labels = [self.label(x) for x in elements] if self.labels else None
        return FinitePoset(self.le[np.ix_(elements, elements)], labels)

    def dual(self):
        return FinitePoset(self.le.T, self.labels)

    def linear_extension(self):
        """Elements sorted by down-set size, a valid linear extension."""
        return sorted(range(self.n), key=lambda x: (int(self.le[:, x].sum()), x))


@dataclass(frozen=True, eq=False)
class MeetSemilattice:
    """A poset with all binary meets; ``meet[x, y]`` is the glb of x and y."""

    poset: FinitePoset
    meet: np.ndarray

    def __post_init__(self):
        meet = np.asarray(self.meet)
        n = self.poset.n
        if meet.shape != (n, n):
            raise NotMedianSemilattice("meet table has the wrong shape")
        le = self.poset.le
        i = np.arange(n)
        ok = le[meet, i[:, None]] & le[meet, i[None, :]]
        w = _first(~ok)
        if w is not None:
            raise NotMedianSemilattice("meet is not a lower bound", w)
        # every common lower bound lies below the claimed meet
        for x in range(n):
            for y in range(n):
                lb = le[:, x] & le[:, y]
                if not le[lb, meet[x, y]].all():
                    raise NotMedianSemilattice("meet is not greatest", (x, y))
        object.__setattr__(self, "meet", _frozen(meet, np.int32))

    @classmethod
    def from_poset(cls, P: FinitePoset):
        n = P.n
        meet = np.empty((n, n), dtype=np.int32)
        for x in range(n):
            for y in range(x, n):
                g = P.meet(x, y)
                if g is None:
                    raise NotMedianSemilattice("no meet", (x, y))
                meet[x, y] = meet[y, x] = g
        return cls(P, meet)

    @property
    def n(self):
        return self.poset.n

    @property
    def le(self):
        return self.poset.le


@dataclass
class Diagnosis:
    """Outcome of a structural test; ``witness`` names the culprit elements."""

    ok: bool
    reason: str = ""
    witness: tuple = ()

    def __bool__(self):
        return self.ok


def is_median_semilattice(S: MeetSemilattice) -> Diagnosis:
    """Distributive principal ideals, and joins for pairwise bounded triples."""
    P = S.poset
    n = P.n
    meet = S.meet
    for x in range(n):
        ideal = [int(v) for v in P.down(x)]
        sub = P.le[np.ix_(ideal, ideal)]
        k = len(ideal)
        # joins inside the ideal; the ideal is a lattice with top x
        join = np.empty((k, k), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                ub = sub[i] & sub[j]
                least = [u for u in np.flatnonzero(ub) if sub[u, ub].all()]
                join[i, j] = least[0]
        pos = {e: i for i, e in enumerate(ideal)}
        lmeet = np.array([[pos[int(meet[a, b])] for b in ideal] for a in ideal])
        r = np.arange(k)
        lhs = lmeet[r[:, None, None], join[None, :, :]]
        rhs = join[lmeet[:, :, None], lmeet[:, None, :]]
        w = _first(lhs != rhs)
        if w is not None:
            return Diagnosis(
                False,
                "principal ideal is not distributive",
                (x,) + tuple(ideal[v] for v in w),
            )
    for y, z, w in combinations_with_replacement(range(n), 3):
        le = P.le
        if not ((le[y] & le[z]).any() and (le[y] & le[w]).any() and (le[z] & le[w]).any()):
            continue
        if P.join(y, z, w) is None:
            return Diagnosis(False, "pairwise bounded triple has no join", (y, z, w))
    return Diagnosis(True)


# ---------------------------------------------------------------------------
# median algebras


@dataclass(frozen=True, eq=False)
class MedianAlgebra:
    """A validated finite median algebra.  Construct via ``verify_median_axioms``
    or one of the named constructors; the bare constructor also validates."""

    table: np.ndarray
    labels: tuple | None = None
    _checked: bool = field(default=False, repr=False)

    def __post_init__(self):
        T = np.asarray(self.table)
        if not self._checked:
            _check_axioms(T)
        object.__setattr__(self, "table", _frozen(T, np.int32))
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != T.shape[0]:
                raise ValueError("wrong number of labels")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def _trusted(cls, table, labels=None):
        return cls(np.asarray(table), labels, _checked=True)

    @property
    def n(self):
        return self.table.shape[0]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, MedianAlgebra) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"MedianAlgebra(n={self.n})"

    def m(self, x, y, z):
        return int(self.table[x, y, z])

    def label(self, x):
        return self.labels[x] if self.labels else str(x)

    def flat(self):
        return [int(v) for v in self.table.ravel()]

    # named constructors

    @classmethod
    def chain(cls, k):
        return from_total_order(range(k))

    @classmethod
    def boolean_cube(cls, n):
        return product_of_chains([2] * n)

    @classmethod
    def trivial(cls):
        return cls._trusted(np.zeros((1, 1, 1), dtype=np.int32))


def _as_cube(table, n=None):
    arr = np.asarray(table)
    if arr.ndim == 3:
        return arr
    flat = arr.ravel()
    if n is None:
        n = round(len(flat) ** (1 / 3))
    if n < 1 or n ** 3 != len(flat):
        raise ValueError(f"table of length {len(flat)} is not n^3")
    return flat.reshape(n, n, n)


def _check_axioms(T):
    if T.ndim != 3 or len(set(T.shape)) != 1 or T.shape[0] == 0:
        raise ValueError("table must have shape (n, n, n) with n >= 1")
    n = T.shape[0]
    bad = np.flatnonzero((T.ravel() < 0) | (T.ravel() >= n))
    if len(bad):
        raise TableNotClosed(int(bad[0]), int(T.ravel()[bad[0]]), n)
    T = np.ascontiguousarray(T, dtype=np.int32)
    i = np.arange(n)
    w = _first(T[i[:, None], i[:, None], i[None, :]] != i[:, None])
    if w is not None:
        raise AxiomViolation("majority", (w[0], w[0], w[1]))
    X, Y, Z = np.indices(T.shape)
    w = _first((T != T[Y, X, Z]) | (T != T[Y, Z, X]))
    if w is not None:
        raise AxiomViolation("symmetry", w)
    w = kernels.assoc_witness(T)
    if w is not None:
        raise AxiomViolation("associativity", w)


def verify_median_axioms(table, n=None, labels=None) -> MedianAlgebra:
    """Validate a raw ternary table (flat row-major or ``(n, n, n)``).

    Raises ``TableNotClosed`` or ``AxiomViolation`` naming the failed law
    (``majority``, ``symmetry`` or ``associativity``) and a witness tuple.
    """
    return MedianAlgebra(_as_cube(table, n), labels)


def verify_derived_identities(A: MedianAlgebra) -> bool:
    """Exhaustively check two identities every median algebra satisfies.

    Returns True; a failure raises ``IdentityViolation`` and means the
    algebra was not really median.
    """
    res = kernels.derived_witness(A.table)
    if res is not None:
        raise IdentityViolation(*res)
    return True


def from_total_order(order: Iterable[int], labels=None) -> MedianAlgebra:
    """Median algebra of a chain; ``order`` lists the elements bottom first."""
    order = np.asarray(list(order), dtype=np.int64)
    n = len(order)
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.arange(n)
    X, Y, Z = np.ix_(rank, rank, rank)
    mid = X + Y + Z - np.maximum(np.maximum(X, Y), Z) - np.minimum(np.minimum(X, Y), Z)
    return MedianAlgebra._trusted(order[mid], labels)


def order_from_point(A: MedianAlgebra, a: int) -> MeetSemilattice:
    """The semilattice order x <=_a y iff m(a, x, y) = x, with meet m(a, ., .)."""
    i = np.arange(A.n)
    le = A.table[a] == i[:, None]
    P = FinitePoset(le, A.labels)
    return MeetSemilattice(P, A.table[a])


def median_from_semilattice(S: MeetSemilattice) -> MedianAlgebra:
    """m(x,y,z) = (x^y) v (x^z) v (y^z), after checking the semilattice is median."""
    diag = is_median_semilattice(S)
    if not diag:
        raise NotMedianSemilattice(diag.reason, diag.witness)
    P, n = S.poset, S.n
    join = np.full((n, n), -1, dtype=np.int64)
    for x in range(n):
        for y in range(x, n):
            j = P.join(x, y)
            if j is not None:
                join[x, y] = join[y, x] = j
    M = S.meet.astype(np.int64)
    i = np.arange(n)
    a = M[i[:, None, None], i[None, :, None]]
    b = M[i[:, None, None], i[None, None, :]]
    c = M[i[None, :, None], i[None, None, :]]
    ab = join[a, b]
    if (ab < 0).any():
        raise NotMedianSemilattice("missing join", _first(ab < 0))
    T = join[ab, c]
    if (T < 0).any():
        raise NotMedianSemilattice("missing join", _first(T < 0))
    return MedianAlgebra(T, P.labels)


def from_poset(P: FinitePoset) -> MedianAlgebra:
    """Median algebra of a median semilattice given as a bare poset."""
    return median_from_semilattice(MeetSemilattice.from_poset(P))


def product(A: MedianAlgebra, B: MedianAlgebra) -> MedianAlgebra:
    """Componentwise median on A x B; pair (i, j) has index i*|B| + j."""
    na, nb = A.n, B.n
    TA = A.table.astype(np.int64)
    TB = B.table.astype(np.int64)
    T = TA[:, None, :, None, :, None] * nb + TB[None, :, None, :, None, :]
    labels = None
    if A.labels or B.labels:
        labels = [f"({A.label(i)},{B.label(j)})" for i in range(na) for j in range(nb)]
    return MedianAlgebra._trusted(T.reshape(na * nb, na * nb, na * nb), labels)


def product_of_chains(lengths: Sequence[int]) -> MedianAlgebra:
    """Product of chains in mixed radix, first coordinate most significant."""
    A = MedianAlgebra.trivial()
    for k in lengths:
        A = product(A, MedianAlgebra.chain(k))
    return A


def subalgebra_generated(A: MedianAlgebra, S: Iterable[int]) -> frozenset:
    """Smallest superset of ``S`` closed under the median."""
    cur = np.zeros(A.n, dtype=bool)
    cur[list(S)] = True
    while True:
        idx = np.flatnonzero(cur)
        nxt = cur.copy()
        nxt[A.table[np.ix_(idx, idx, idx)].ravel()] = True
        if (nxt == cur).all():
            return frozenset(int(v) for v in idx)
        cur = nxt


def is_closed(A: MedianAlgebra, S: Iterable[int]) -> bool:
    S = sorted(set(S))
    inside = np.zeros(A.n, dtype=bool)
    inside[S] = True
    return bool(inside[A.table[np.ix_(S, S, S)]].all())


def induced_subalgebra(A: MedianAlgebra, elements: Iterable[int]) -> MedianAlgebra:
    """Restrict A to a closed subset; new index i stands for ``sorted(elements)[i]``."""
    elements = sorted(set(int(e) for e in elements))
    if not is_closed(A, elements):
        raise ValueError("subset is not closed under the median")
    pos = np.full(A.n, -1, dtype=np.int64)
    pos[elements] = np.arange(len(elements))
    sub = pos[A.table[np.ix_(elements, elements, elements)]]
    labels = [A.label(e) for e in elements] if A.labels else None
    return MedianAlgebra._trusted(sub, labels)


# ---------------------------------------------------------------------------
# isomorphism search


def _backtrack(cands: list, accept: Callable[[list, int], bool]):
    """Find a bijection h with h[i] in cands[i]; ``accept(h, i)`` checks the
    partial assignment h[0..i]."""
    n = len(cands)
    h = [-1] * n
    used = set()

    def go(i):
        if i == n:
            return True
        for c in cands[i]:
            if c in used:
                continue
            h[i] = c
            if accept(h, i):
                used.add(c)
                if go(i + 1):
                    return True
                used.discard(c)
        h[i] = -1
        return False

    return tuple(h) if go(0) else None


def _candidates(sig_a, sig_b):
    if sorted(sig_a) != sorted(sig_b):
        return None
    return [[j for j, s in enumerate(sig_b) if s == sa] for sa in sig_a]


def _median_signature(A: MedianAlgebra):
    # sorted down-set sizes of each element in the order based at x
    i = np.arange(A.n)
    D = (A.table == i[None, :, None]).sum(axis=1)
    return [tuple(sorted(int(v) for v in row)) for row in D]


def are_isomorphic(A: MedianAlgebra, B: MedianAlgebra):
    """A median isomorphism A -> B as a tuple of images, or None."""
    if A.n != B.n:
        return None
    cands = _candidates(_median_signature(A), _median_signature(B))
    if cands is None:
        return None
    TA, TB = A.table, B.table

    def accept(h, i):
        hh = np.asarray(h[: i + 1])
        sub = TA[: i + 1, : i + 1, : i + 1]
        known = sub <= i
        img = TB[np.ix_(hh, hh, hh)]
        return bool((hh[np.where(known, sub, 0)] == img)[known].all())

    return _backtrack(cands, accept)


def poset_isomorphism(P: FinitePoset, Q: FinitePoset):
    """An order isomorphism P -> Q as a tuple of images, or None."""
    if P.n != Q.n:
        return None
    sig = lambda R: [(int(R.le[:, x].sum()), int(R.le[x].sum())) for x in range(R.n)]
    cands = _candidates(sig(P), sig(Q))
    if cands is None:
        return None

    def accept(h, i):
        hh = np.asarray(h[: i + 1])
        return bool(
            (P.le[i, : i + 1] == Q.le[hh[i], hh]).all()
            and (P.le[: i + 1, i] == Q.le[hh, hh[i]]).all()
        )

    return _backtrack(cands, accept)


# ---------------------------------------------------------------------------
# maps


@dataclass(frozen=True)
class HomMap:
    """A total map ``0..domain_size-1 -> 0..codomain_size-1``."""

    domain_size: int
    codomain_size: int
    images: tuple

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if len(images) != self.domain_size:
            raise ValueError("map is not total on the domain")
        if any(v < 0 or v >= self.codomain_size for v in images):
            raise ValueError("image outside the codomain")
        object.__setattr__(self, "images", images)

    @classmethod
    def of(cls, images, codomain_size):
        images = tuple(images)
        return cls(len(images), codomain_size, images)

    def __call__(self, x):
        return self.images[x]

    def image(self):
        return frozenset(self.images)

    def compose(self, g: "HomMap") -> "HomMap":
        """``g`` after ``self``."""
        return HomMap(self.domain_size, g.codomain_size, tuple(g.images[v] for v in self.images))

    def is_onto(self):
        return len(self.image()) == self.codomain_size
