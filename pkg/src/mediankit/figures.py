"""Small named structures used as fixtures: the five non-conservative
semilattices A1..A5, the four-element diamond, and the two maps that show
monotonicity and the homomorphism property part ways off chains."""
from .core import FinitePoset, HomMap, from_poset

A1 = FinitePoset.from_covers(
    5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], labels=["a", "d'", "b", "c", "d"]
)
A2 = FinitePoset.from_covers(4, [(0, 1), (1, 2), (1, 3)], labels=["a", "b", "c", "d"])
A3 = FinitePoset.from_covers(
    5, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4)], labels=["a", "b", "c", "d", "d'"]
)
A4 = FinitePoset.from_covers(
    5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)], labels=["a", "b", "c", "d", "d'"]
)
A5 = FinitePoset.from_covers(
    7,
    [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (2, 5), (3, 5), (3, 6), (1, 6)],
    labels=["a", "b", "c", "d", "bc", "cd", "bd"],
)

FORBIDDEN = {"A1": A1, "A2": A2, "A3": A3, "A4": A4, "A5": A5}

# bottom, left atom, right atom, top
DIAMOND = FinitePoset.from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)], labels=["0", "l", "r", "1"])
TWO = FinitePoset.chain(2)


def a2_algebra():
    return from_poset(A2)


def diamond_algebra():
    return from_poset(DIAMOND)


def monotone_non_hom():
    """Diamond onto the 2-chain: bottom to 0, everything else to 1."""
    return from_poset(DIAMOND), from_poset(TWO), HomMap.of((0, 1, 1, 1), 2)


def hom_non_monotone():
    """The A4 lattice into the diamond: a, b to the left atom; c, d to the
    bottom; d' to the right atom."""
    return from_poset(A4), from_poset(DIAMOND), HomMap.of((1, 1, 0, 0, 2), 4)
