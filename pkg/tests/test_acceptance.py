"""Acceptance suite: ten exact checks, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` or directly as a script.
"""
import itertools
import random
import sys
import time

import numpy as np
import pytest

import corpus
from mediankit import figures
from mediankit.conservative import (
    ChainRepresentation,
    TwoByTwo,
    chain_ordering,
    find_A2_subalgebra,
    find_forbidden_poset,
    is_conservative,
)
from mediankit.core import (
    HomMap,
    from_total_order,
    order_from_point,
    product,
    product_of_chains,
    verify_derived_identities,
)
from mediankit.duality import (
    chain_dual,
    complete_ideals,
    coproduct,
    double_dual_unit,
    downset_bijection,
    dual_of_hom,
    dual_space,
    embed_in_hypercube,
    is_embedding,
    structure_isomorphism,
)
from mediankit.homs import (
    ProductOfChains,
    enumerate_boolean_isomorphisms,
    enumerate_homs_brute,
    enumerate_product_homs,
    is_median_hom,
    is_monotone,
)
from mediankit.conservative import chain_poset

RESULTS = {}


def preserves(f, A, B):
    """Loop oracle for the homomorphism equation."""
    return all(f[A.m(x, y, z)] == B.m(f[x], f[y], f[z]) for x, y, z in itertools.product(range(A.n), repeat=3))


def fixtures():
    return corpus.named()


# 1 ------------------------------------------------------------------------------------


def criterion_1():
    algebras = corpus.random_cube_subalgebras(500, seed=2024) + list(fixtures().values())
    sizes = set()
    for A in algebras:
        sizes.add(A.n)
        c = bool(is_conservative(A))
        no_sub = find_A2_subalgebra(A) is None
        no_poset = all(find_forbidden_poset(order_from_point(A, a), kinds=("A2",)) is None for a in range(A.n))
        if not c == no_sub == no_poset:
            return False, f"disagreement on an algebra of size {A.n}"
    return True, f"{len(algebras)} algebras, sizes {min(sizes)}..{max(sizes)}"


# 2 ------------------------------------------------------------------------------------


def criterion_2():
    big = corpus.conservative_large()
    for name, A in big.items():
        rep = chain_ordering(A)
        if not isinstance(rep, ChainRepresentation):
            return False, f"{name}: no chain ordering"
        if not (corpus.brute_median_of_order(rep.total_order) == A.table).all():
            return False, f"{name}: median of the order differs"
    sq = product_of_chains([2, 2])
    rep = chain_ordering(sq)
    if not isinstance(rep, TwoByTwo) or not preserves(rep.isomorphism, sq, sq) or sorted(rep.isomorphism) != [0, 1, 2, 3]:
        return False, "2x2 not recognised"
    return True, f"{len(big)} conservative algebras, 2x2 branch verified"


# 3 ------------------------------------------------------------------------------------


def criterion_3():
    pairs = 0
    for name, A in corpus.conservative_large().items():
        orders = [chain_ordering(A, base=a).total_order for a in range(A.n)]
        for p, q in itertools.combinations(orders, 2):
            pairs += 1
            if p != q and p != q[::-1]:
                return False, f"{name}: {p} vs {q}"
    return True, f"{pairs} base pairs"


# 4 ------------------------------------------------------------------------------------


def criterion_4():
    fx = {k: A for k, A in fixtures().items() if A.n <= 8}
    for name, A in fx.items():
        unit = double_dual_unit(A)
        B = complete_ideals(dual_space(A))
        if B.n != A.n or not unit.is_onto() or not preserves(unit.images, A, B):
            return False, f"round trip fails on {name}"
    small = {k: A for k, A in fx.items() if A.n <= 6}
    count = 0
    for (a, A), (b, B) in itertools.product(small.items(), repeat=2):
        if A.n * B.n > 16:
            continue
        count += 1
        if structure_isomorphism(dual_space(product(A, B)), coproduct(dual_space(A), dual_space(B))) is None:
            return False, f"(A x B)* differs on {a}, {b}"
    return True, f"{len(fx)} round trips, {count} product pairs"


# 5 ------------------------------------------------------------------------------------


def criterion_5():
    big = corpus.conservative_large()
    for name, A in big.items():
        order = chain_ordering(A).total_order
        X, Y = dual_space(A), chain_dual(order)
        if sorted(X.points) != sorted(Y.points) or structure_isomorphism(X, Y) is None:
            return False, f"dual shape differs on {name}"
        if len(downset_bijection(order)) != A.n:
            return False, f"downset bijection fails on {name}"
    return True, f"{len(big)} conservative algebras"


# 6 ------------------------------------------------------------------------------------


def criterion_6():
    cases = [((3,), (2,), 8, 6), ((4,), (3,), 81, None), ((3, 2), (2, 2), 4096, None), ((2, 2), (2, 2), 256, 36)]
    parts = []
    for src, dst, space, expected in cases:
        A, B = ProductOfChains(src), ProductOfChains(dst)
        if B.size ** A.size != space:
            return False, f"brute space for {src}->{dst} is not {space}"
        comp = sorted(d.recombine().images for d in enumerate_product_homs(A, B))
        brute = sorted(h.images for h in enumerate_homs_brute(A.algebra(), B.algebra()))
        if comp != brute or len(set(comp)) != len(comp) or (expected is not None and len(comp) != expected):
            return False, f"{src}->{dst}: {len(comp)} vs {len(brute)}"
        parts.append(f"{src}->{dst}:{len(comp)}")
    return True, ", ".join(parts)


# 7 ------------------------------------------------------------------------------------


def criterion_7():
    for n, m in [(1, 1), (2, 1), (2, 2)]:
        got = len(enumerate_homs_brute(corpus.cube(n), corpus.cube(m)))
        if got != (2 * n + 2) ** m:
            return False, f"2^{n}->2^{m}: {got}"
    sq = corpus.cube(2)
    autos = [p for p in itertools.permutations(range(4)) if preserves(p, sq, sq)]
    if len(autos) != 8 or len(list(enumerate_boolean_isomorphisms(2))) != 8:
        return False, f"2^2 has {len(autos)} automorphisms"
    signed = list(enumerate_boolean_isomorphisms(3))
    if len(signed) != 48:
        return False, f"2^3 has {len(signed)} signed permutations"
    C3 = corpus.cube(3)
    rng = random.Random(3)
    for perm, signs in rng.sample(signed, 12):
        images = []
        for x in range(8):
            bits = [(x >> (2 - i)) & 1 for i in range(3)]
            y = [bits[perm[i]] ^ signs[i] for i in range(3)]
            images.append(y[0] * 4 + y[1] * 2 + y[2])
        if sorted(images) != list(range(8)) or not preserves(images, C3, C3):
            return False, f"signed permutation {perm}, {signs} fails"
    return True, "(2n+2)^m on three pairs; 8 and 48 automorphisms"


# 8 ------------------------------------------------------------------------------------


def criterion_8():
    maps = 0
    for k in range(1, 5):
        for l in range(1, 5):
            A, B = corpus.chain(k), corpus.chain(l)
            P, Q = chain_poset(range(k)), chain_poset(range(l))
            for t in itertools.product(range(l), repeat=k):
                maps += 1
                f = HomMap.of(t, l)
                if bool(is_median_hom(f, A, B)) != is_monotone(f, P, Q) or preserves(t, A, B) != is_monotone(f, P, Q):
                    return False, f"{k}->{l}: {t}"
    D, T, f = figures.monotone_non_hom()
    if is_median_hom(f, D, T) or not is_monotone(f, figures.DIAMOND, figures.TWO):
        return False, "diamond collapse map"
    A4, D, g = figures.hom_non_monotone()
    if not is_median_hom(g, A4, D) or is_monotone(g, figures.A4, figures.DIAMOND):
        return False, "A4 fold map"
    return True, f"{maps} chain maps, monotone-non-hom and hom-non-monotone maps"


# 9 ------------------------------------------------------------------------------------


def criterion_9():
    pairs = [("C3", "C2"), ("C4", "C3"), ("2^2", "C2"), ("C3xC2", "2^2"), ("C3", "2^2"), ("A2", "C3"), ("2^2", "A2")]
    homs = onto = 0
    fx = fixtures()
    for a, b in pairs:
        A, B = fx[a], fx[b]
        for f in enumerate_homs_brute(A, B):
            homs += 1
            onto += f.is_onto()
            if f.is_onto() != is_embedding(dual_of_hom(f, A, B)):
                return False, f"{a}->{b}: {f.images}"
    if homs < 50:
        return False, f"only {homs} homs"
    return True, f"{homs} homs, {onto} onto"


# 10 ------------------------------------------------------------------------------------


def criterion_10():
    algebras = list(fixtures().values()) + corpus.random_cube_subalgebras(100, seed=10)
    for A in algebras:
        if not verify_derived_identities(A):
            return False, f"identities fail on size {A.n}"
        f = embed_in_hypercube(A)
        k = f.codomain_size.bit_length() - 1
        bits = np.array([[(v >> (k - 1 - j)) & 1 for j in range(k)] for v in f.images])
        if len(set(f.images)) != A.n:
            return False, "embedding not injective"
        T = A.table
        maj = (bits[:, None, None, :] + bits[None, :, None, :] + bits[None, None, :, :]) >= 2
        if not (maj == bits[T]).all():
            return False, f"embedding not median preserving on size {A.n}"
    return True, f"{len(algebras)} algebras"


CRITERIA = [
    ("1", "conservative iff no star subalgebra iff no star in any base order", criterion_1),
    ("2", "chain ordering reproduces the median; 2x2 recognised", criterion_2),
    ("3", "chain orderings from different bases agree up to reversal", criterion_3),
    ("4", "duality round trip and duals of products", criterion_4),
    ("5", "dual of a conservative algebra has the two-chain shape", criterion_5),
    ("6", "componentwise product homs equal brute force", criterion_6),
    ("7", "Boolean cube hom and automorphism counts", criterion_7),
    ("8", "chain maps: hom iff monotone; the two counterexample maps", criterion_8),
    ("9", "onto iff the dual map is an embedding", criterion_9),
    ("10", "derived identities and hypercube embedding", criterion_10),
]


def run_criterion(key, title, fn):
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # report, never hide
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {title} ({detail}; {time.perf_counter() - t0:.2f}s)"
    RESULTS[key] = (ok, line)
    print(line)
    return ok, line


@pytest.mark.parametrize("key,title,fn", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(key, title, fn):
    ok, line = run_criterion(key, title, fn)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(*c)[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
