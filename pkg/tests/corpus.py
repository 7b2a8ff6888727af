"""Shared fixtures for the test-suite: named algebras and generated ones."""
import random

import numpy as np

from mediankit import figures
from mediankit.conservative import bot_coalesced_sum
from mediankit.core import (
    MedianAlgebra,
    from_poset,
    from_total_order,
    induced_subalgebra,
    product,
    product_of_chains,
    subalgebra_generated,
)


def chain(k):
    return MedianAlgebra.chain(k)


def cube(n):
    return product_of_chains([2] * n)


def named():
    """Small named algebras, keyed by a readable name."""
    out = {f"C{k}": chain(k) for k in range(1, 10)}
    out.update({f"2^{n}": cube(n) for n in range(1, 5)})
    out["C3xC2"] = product_of_chains([3, 2])
    out["C3xC3"] = product_of_chains([3, 3])
    out["C4xC2"] = product_of_chains([4, 2])
    out["A2"] = figures.a2_algebra()
    out["A3"] = from_poset(figures.A3)
    out["A4"] = from_poset(figures.A4)
    out["diamond"] = figures.diamond_algebra()
    out["sum(4,3)"] = from_poset(bot_coalesced_sum(range(4), [0, 4, 5]))
    out["sum(5,5)"] = from_poset(bot_coalesced_sum(range(5), [0, 5, 6, 7, 8]))
    return out


def random_cube_subalgebras(count, seed=0, n=4):
    """Closures of random seed sets in 2^n, relabelled to 0..k-1."""
    rng = random.Random(seed)
    C = cube(n)
    out = []
    for _ in range(count):
        k = rng.randint(1, 7)
        S = subalgebra_generated(C, rng.sample(range(2 ** n), k))
        out.append(induced_subalgebra(C, S))
    return out


def random_chain_algebras(count, seed=0, sizes=range(5, 11)):
    """Medians of random total orders; returns ``(algebra, order)`` pairs."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        k = rng.choice(list(sizes))
        order = list(range(k))
        rng.shuffle(order)
        out.append((from_total_order(order), order))
    return out


def conservative_large():
    """Conservative fixtures with at least five elements."""
    out = {f"C{k}": chain(k) for k in range(5, 10)}
    out["sum(4,3)"] = from_poset(bot_coalesced_sum(range(4), [0, 4, 5]))
    out["sum(5,5)"] = from_poset(bot_coalesced_sum(range(5), [0, 5, 6, 7, 8]))
    out["sum(6,1)"] = from_poset(bot_coalesced_sum(range(6), [0]))
    for i, (A, _) in enumerate(random_chain_algebras(12, seed=7)):
        out[f"random{i}"] = A
    return out


def majority_product_table(A, B):
    """Oracle for ``product``: loop over pairs, no array broadcasting."""
    na, nb = A.n, B.n
    pairs = [(i, j) for i in range(na) for j in range(nb)]
    index = {p: k for k, p in enumerate(pairs)}
    n = len(pairs)
    T = np.empty((n, n, n), dtype=np.int64)
    for x, (x1, x2) in enumerate(pairs):
        for y, (y1, y2) in enumerate(pairs):
            for z, (z1, z2) in enumerate(pairs):
                T[x, y, z] = index[(A.m(x1, y1, z1), B.m(x2, y2, z2))]
    return T


def brute_median_of_order(order):
    """Oracle for medians of a chain: sort each triple by rank."""
    rank = {x: i for i, x in enumerate(order)}
    n = len(order)
    T = np.empty((n, n, n), dtype=np.int64)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                T[x, y, z] = sorted((x, y, z), key=rank.get)[1]
    return T
