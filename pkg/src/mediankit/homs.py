"""Median homomorphisms: checking, brute-force enumeration, and the
componentwise description for maps between products of chains.

A map between products of chains C_1 x ... x C_k -> D_1 x ... x D_n is a
median homomorphism exactly when every target coordinate i is a monotone
map of a single source coordinate ``sigma[i]``.  Indices are 0-based
throughout; elements of a product are encoded in mixed radix with the
first coordinate most significant, matching ``core.product``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations, product
from math import comb, factorial, prod
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .config import check_space
from .conservative import TwoByTwo, chain_ordering, chain_poset, is_conservative
from .core import (
    Diagnosis,
    FinitePoset,
    HomMap,
    MedianAlgebra,
    induced_subalgebra,
    is_closed,
    product_of_chains,
)
from .errors import NoChainOrdering, NotAHom


@dataclass(frozen=True)
class ProductOfChains:
    lengths: tuple

    def __post_init__(self):
        lengths = tuple(int(k) for k in self.lengths)
        if not lengths or any(k < 1 for k in lengths):
            raise ValueError("need at least one chain, each of positive length")
        object.__setattr__(self, "lengths", lengths)

    @property
    def size(self):
        return prod(self.lengths)

    def algebra(self) -> MedianAlgebra:
        return product_of_chains(self.lengths)

    def coords(self) -> np.ndarray:
        """``(size, r)`` array; row x holds the coordinates of element x."""
        return np.stack(np.unravel_index(np.arange(self.size), self.lengths), axis=1)

    def encode(self, coords) -> int:
        return int(np.ravel_multi_index(tuple(coords), self.lengths))


@dataclass(frozen=True)
class ProductHomDecomposition:
    """Target coordinate i equals ``components[i]`` applied to source
    coordinate ``sigma[i]``; ``isotone[i]`` is False for antitone parts."""

    source: ProductOfChains
    target: ProductOfChains
    sigma: tuple
    components: tuple
    isotone: tuple

    def recombine(self) -> HomMap:
        X = self.source.coords()
        cols = [np.asarray(g)[X[:, j]] for g, j in zip(self.components, self.sigma)]
        codes = np.ravel_multi_index(tuple(cols), self.target.lengths)
        return HomMap.of(codes, self.target.size)


@dataclass(frozen=True)
class BooleanHomClass:
    """``sigma[i]`` is a source coordinate or None (constant); ``eps[i]``
    is ``"id"`` or ``"neg"``.  None with "id" is constant 0, with "neg"
    constant 1."""

    sigma: tuple
    eps: tuple


def is_median_hom(f: HomMap, A: MedianAlgebra, B: MedianAlgebra) -> Diagnosis:
    if f.domain_size != A.n or f.codomain_size != B.n:
        raise ValueError("map does not match the algebras")
    w = kernels.hom_witness(A.table, B.table, np.asarray(f.images, dtype=np.int32))
    if w is None:
        return Diagnosis(True)
    return Diagnosis(False, "median not preserved", w)


def monotonicity(f: HomMap, P: FinitePoset, Q: FinitePoset):
    """``"constant"``, ``"isotone"``, ``"antitone"`` or None."""
    h = np.asarray(f.images)
    img = Q.le[np.ix_(h, h)]
    iso = not (P.le & ~img).any()
    anti = not (P.le & ~img.T).any()
    if iso and anti:
        return "constant" if len(set(f.images)) == 1 else "isotone"
    return "isotone" if iso else "antitone" if anti else None


def is_monotone(f: HomMap, P: FinitePoset, Q: FinitePoset) -> bool:
    return monotonicity(f, P, Q) is not None


def _order_of(A):
    rep = chain_ordering(A)
    if isinstance(rep, TwoByTwo):
        raise NoChainOrdering("the 2x2 algebra has no chain ordering")
    return rep.total_order


def is_monotone_wrt_chain_orderings(
    f: HomMap, A: MedianAlgebra, B: MedianAlgebra, source_order=None, target_order=None
) -> bool:
    """Is f isotone or antitone from the chain ordering of A to that of f(A)?

    Either order may be supplied as a ``FinitePoset`` on the full universe
    instead; this is how maps out of the diamond, which has no chain
    ordering, are tested against its lattice order.
    """
    P = source_order if source_order is not None else chain_poset(_order_of(A))
    if target_order is not None:
        return is_monotone(f, P, target_order)
    image = sorted(f.image())
    if not is_closed(B, image):
        raise NoChainOrdering("the image is not a subalgebra")
    sub = induced_subalgebra(B, image)
    pos = {e: i for i, e in enumerate(image)}
    g = HomMap.of([pos[v] for v in f.images], len(image))
    return is_monotone(g, P, chain_poset(_order_of(sub)))


def conservative_criterion(f: HomMap, A: MedianAlgebra, B: MedianAlgebra) -> bool:
    """f(A) is a conservative subalgebra and f is monotone between the chain
    orderings of A and f(A)."""
    image = sorted(f.image())
    if not is_closed(B, image):
        return False
    sub = induced_subalgebra(B, image)
    if not is_conservative(sub):
        return False
    try:
        return is_monotone_wrt_chain_orderings(f, A, B)
    except NoChainOrdering:
        return False


def enumerate_homs_brute(A: MedianAlgebra, B: MedianAlgebra, limit=None) -> list:
    """Every median homomorphism A -> B, by checking all |B|^|A| maps."""
    check_space("brute-force maps", B.n ** A.n, limit)
    return [HomMap.of(row, B.n) for row in kernels.brute_homs(A.table, B.table)]


def monotone_count(k, l):
    """Number of monotone maps from a k-chain to an l-chain."""
    return 2 * comb(l + k - 1, k) - l


def monotone_maps(k, l):
    """Monotone maps from a k-chain to an l-chain as ``(table, isotone)``.

    Weakly increasing tables first, then the non-constant reversals.
    """
    out = [(tuple(t), True) for t in combinations_with_replacement(range(l), k)]
    return out + [(t[::-1], False) for t, _ in out if len(set(t)) > 1]


def decompose_product_hom(f: HomMap, A: ProductOfChains, B: ProductOfChains) -> ProductHomDecomposition:
    """Find sigma and monotone components with recombination equal to f.

    Constant components are attached to source coordinate 0 and labelled
    isotone.
    """
    w = kernels.hom_witness(A.algebra().table, B.algebra().table, np.asarray(f.images, dtype=np.int32))
    if w is not None:
        raise NotAHom(w)
    X = A.coords()
    Y = B.coords()[list(f.images)]
    sigma, comps, iso = [], [], []
    for i, l in enumerate(B.lengths):
        col = Y[:, i]
        for j, k in enumerate(A.lengths):
            table = np.full(k, -1, dtype=np.int64)
            xj = X[:, j]
            table[xj] = col
            if (table[xj] == col).all():
                break
        else:
            raise AssertionError(f"target coordinate {i} depends on several sources")
        if len(set(table.tolist())) == 1:
            j, table = 0, np.full(A.lengths[0], table[0])
        d = np.diff(table)
        up = bool((d >= 0).all())
        if not up and not (d <= 0).all():
            raise AssertionError("component is not monotone")
        sigma.append(j)
        comps.append(tuple(int(v) for v in table))
        iso.append(up)
    dec = ProductHomDecomposition(A, B, tuple(sigma), tuple(comps), tuple(iso))
    if dec.recombine() != f:
        raise AssertionError("recombination differs from the map")
    return dec


def enumerate_product_homs(A: ProductOfChains, B: ProductOfChains, limit=None) -> Iterator[ProductHomDecomposition]:
    """Every median homomorphism A -> B exactly once, built from sigma and
    monotone components; duplicate map tables are skipped."""
    per_coord = [[monotone_maps(k, l) for k in A.lengths] for l in B.lengths]
    check_space("product homomorphism candidates", prod(sum(len(m) for m in row) for row in per_coord), limit)
    seen = set()
    for sigma in product(range(len(A.lengths)), repeat=len(B.lengths)):
        options = [per_coord[i][j] for i, j in enumerate(sigma)]
        for choice in product(*options):
            sig, comps = [], []
            for (t, _), j in zip(choice, sigma):
                if len(set(t)) == 1:  # constants live on coordinate 0
                    j, t = 0, (t[0],) * A.lengths[0]
                sig.append(j)
                comps.append(t)
            dec = ProductHomDecomposition(A, B, tuple(sig), tuple(comps), tuple(up for _, up in choice))
            key = dec.recombine().images
            if key in seen:
                continue
            seen.add(key)
            yield dec


# ---------------------------------------------------------------------------
# Boolean cubes


def classify_boolean_hom(f: HomMap, n: int, m: int) -> BooleanHomClass:
    """Write f: 2^n -> 2^m as coordinates that are constants, projections or
    negated projections; raises ``NotAHom`` when some coordinate is none."""
    if f.domain_size != 2 ** n or f.codomain_size != 2 ** m:
        raise ValueError("map does not match the cube sizes")
    X = ProductOfChains((2,) * n).coords()
    Y = ProductOfChains((2,) * m).coords()[list(f.images)] if m else np.zeros((2 ** n, 0), dtype=np.int64)
    sigma, eps = [], []
    for i in range(m):
        col = Y[:, i]
        cands = [(None, "id", np.zeros_like(col)), (None, "neg", np.ones_like(col))]
        for j in range(n):
            cands += [(j, "id", X[:, j]), (j, "neg", 1 - X[:, j])]
        hit = next(((s, e) for s, e, v in cands if (v == col).all()), None)
        if hit is None:
            cube = product_of_chains([2] * n).table
            w = kernels.hom_witness(cube, MedianAlgebra.chain(2).table, np.ascontiguousarray(col, dtype=np.int32))
            raise NotAHom(w)
        sigma.append(hit[0])
        eps.append(hit[1])
    return BooleanHomClass(tuple(sigma), tuple(eps))


def boolean_map(sigma: Sequence, eps: Sequence, n: int) -> HomMap:
    """The map x -> (eps_i x_{sigma_i})_i on 2^n, constants for None."""
    X = ProductOfChains((2,) * n).coords()
    m = len(sigma)
    if m == 0:
        return HomMap.of([0] * len(X), 1)
    cols = []
    for s, e in zip(sigma, eps):
        v = np.zeros(len(X), dtype=np.int64) if s is None else X[:, s]
        cols.append(1 - v if e == "neg" else v)
    return HomMap.of(np.ravel_multi_index(tuple(cols), (2,) * m), 2 ** m)


def enumerate_boolean_isomorphisms(n: int, limit=None):
    """All signed permutations of 2^n, each verified to be an automorphism.

    Yields ``(perm, signs)`` with ``signs[i] = 1`` meaning negation; the map
    is x -> (x_{perm[i]} xor signs[i])_i.
    """
    check_space("signed permutations", factorial(n) * 2 ** n, limit)
    cube = product_of_chains([2] * n)
    for perm in permutations(range(n)):
        for signs in product((0, 1), repeat=n):
            f = boolean_map(perm, ["neg" if s else "id" for s in signs], n)
            if not f.is_onto() or kernels.hom_witness(cube.table, cube.table, np.asarray(f.images, dtype=np.int32)) is not None:
                raise AssertionError(f"signed permutation {perm}, {signs} is not an automorphism")
            yield perm, signs
