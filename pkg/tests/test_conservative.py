import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import corpus
from mediankit import figures
from mediankit.conservative import (
    ChainRepresentation,
    TwoByTwo,
    bot_coalesced_sum,
    chain_decomposition,
    chain_ordering,
    embed_poset,
    find_A2_subalgebra,
    find_forbidden_poset,
    is_conservative,
)
from mediankit.core import (
    FinitePoset,
    MeetSemilattice,
    are_isomorphic,
    from_poset,
    from_total_order,
    induced_subalgebra,
    is_median_semilattice,
    median_from_semilattice,
    order_from_point,
    poset_isomorphism,
)
from mediankit.errors import NotConservative, TooSmall


def same_up_to_reversal(p, q):
    return tuple(p) == tuple(q) or tuple(p) == tuple(reversed(q))


# -- is_conservative --------------------------------------------------------------


@pytest.mark.parametrize("k", range(1, 10))
def test_chains_are_conservative(k):
    assert is_conservative(corpus.chain(k))


def test_square_is_conservative():
    assert is_conservative(corpus.cube(2))


def test_a2_is_not_conservative():
    A = figures.a2_algebra()
    d = is_conservative(A)
    assert not d
    x, y, z = d.witness
    assert A.m(x, y, z) not in (x, y, z)
    # the figure's own triple
    assert A.m(0, 2, 3) == 1


def test_cube_witness():
    d = is_conservative(corpus.cube(3))
    assert not d and corpus.cube(3).m(*d.witness) not in d.witness


# -- find_A2_subalgebra ---------------------------------------------------------


def brute_a2(A):
    """Oracle: every 4-subset, closure and star shape checked by hand."""
    star = figures.a2_algebra()
    for S in itertools.combinations(range(A.n), 4):
        if all(A.m(x, y, z) in S for x in S for y in S for z in S):
            if are_isomorphic(induced_subalgebra(A, S), star) is not None:
                return S
    return None


def test_a2_found_in_itself():
    w = find_A2_subalgebra(figures.a2_algebra())
    assert w.kind == "A2" and sorted(w.elements) == [0, 1, 2, 3]
    assert w.elements[1] == 1  # b is the centre


def test_no_a2_in_chain():
    assert find_A2_subalgebra(corpus.chain(5)) is None


def test_a2_in_cube():
    C = corpus.cube(3)
    w = find_A2_subalgebra(C)
    S = tuple(sorted(w.elements))
    assert S == brute_a2(C) == (0, 1, 2, 4)  # 000 centre, three atoms
    star = induced_subalgebra(C, S)
    assert are_isomorphic(star, figures.a2_algebra()) is not None


def test_a2_witness_is_a_star():
    C = corpus.cube(3)
    a, b, c, d = find_A2_subalgebra(C).elements
    assert C.m(a, c, d) == b


# -- find_forbidden_poset ---------------------------------------------------------


@pytest.mark.parametrize("kind", ["A1", "A2", "A3", "A4", "A5"])
def test_each_figure_reports_itself(kind):
    P = figures.FORBIDDEN[kind]
    w = find_forbidden_poset(P)
    assert w.kind == kind
    assert poset_isomorphism(P.induced(w.elements), figures.FORBIDDEN[kind]) is not None


def test_chain_has_no_figure():
    assert find_forbidden_poset(FinitePoset.chain(7)) is None


def brute_induced(pattern, P):
    for h in itertools.permutations(range(P.n), pattern.n):
        if all(pattern.le[i, j] == P.le[h[i], h[j]] for i in range(pattern.n) for j in range(pattern.n)):
            return h
    return None


def test_diamond_has_no_figure():
    assert find_forbidden_poset(figures.DIAMOND) is None
    for P in figures.FORBIDDEN.values():
        assert brute_induced(P, figures.DIAMOND) is None


def test_embed_matches_brute_force():
    hosts = [figures.A3, figures.A4, figures.A5, order_from_point(corpus.cube(3), 0).poset]
    for host in hosts:
        for pat in figures.FORBIDDEN.values():
            assert (embed_poset(pat, host) is None) == (brute_induced(pat, host) is None)


def test_embedding_is_induced():
    P = order_from_point(corpus.cube(3), 0).poset
    h = embed_poset(figures.A2, P)
    assert (P.le[np.ix_(h, h)] == figures.A2.le).all()


# -- bot_coalesced_sum ---------------------------------------------------------------


def test_sum_of_singletons():
    assert bot_coalesced_sum([0], [0]).n == 1


def test_sum_three_two():
    P = bot_coalesced_sum([0, 1, 2], [0, 3])
    assert P.n == 4
    assert sorted(P.covers()) == [(0, 1), (0, 3), (1, 2)]


def test_sum_with_bottom_only_is_the_chain():
    assert bot_coalesced_sum(range(5), [0]) == FinitePoset.chain(5)


# -- chain_decomposition ---------------------------------------------------------------


def test_decomposition_at_middle_of_chain():
    c0, c1 = chain_decomposition(corpus.chain(5), 2)
    assert {frozenset(c0), frozenset(c1)} == {frozenset({0, 1, 2}), frozenset({2, 3, 4})}
    assert c0[0] == c1[0] == 2
    # oracle: evaluate the membership predicate directly
    m = corpus.chain(5).m
    assert [d for d in range(5) if m(0, d, 2) != 2] == [0, 1]


def test_decomposition_at_endpoint():
    c0, c1 = chain_decomposition(corpus.chain(5), 0)
    assert c0 == (0, 1, 2, 3, 4) and c1 == (0,)


def test_decomposition_too_small():
    with pytest.raises(TooSmall):
        chain_decomposition(corpus.cube(2), 0)


def test_decomposition_rejects_nonconservative():
    with pytest.raises(NotConservative):
        chain_decomposition(corpus.cube(3), 0)


def test_decomposition_is_isomorphic_to_base_order():
    for name, A in corpus.conservative_large().items():
        for a in range(A.n):
            c0, c1 = chain_decomposition(A, a)
            assert set(c0) & set(c1) == {a}
            assert set(c0) | set(c1) == set(range(A.n))
            P = order_from_point(A, a).poset
            for c in (c0, c1):
                assert all(P.le[c[i], c[i + 1]] for i in range(len(c) - 1)), name
            assert poset_isomorphism(bot_coalesced_sum(c0, c1), P) is not None, (name, a)


# -- chain_ordering -----------------------------------------------------------------------


def test_five_chain_recovered():
    rep = chain_ordering(corpus.chain(5))
    assert isinstance(rep, ChainRepresentation)
    assert same_up_to_reversal(rep.total_order, range(5))


def test_square_is_two_by_two():
    rep = chain_ordering(corpus.cube(2))
    assert isinstance(rep, TwoByTwo)
    assert sorted(rep.isomorphism) == [0, 1, 2, 3]


@settings(max_examples=40, deadline=None)
@given(st.permutations(list(range(6))))
def test_random_order_round_trip(order):
    A = from_total_order(order)
    rep = chain_ordering(A)
    assert same_up_to_reversal(rep.total_order, order)
    assert from_total_order(rep.total_order) == A


@pytest.mark.parametrize("k", range(1, 5))
def test_small_chains_use_search(k):
    rep = chain_ordering(corpus.chain(k))
    assert from_total_order(rep.total_order) == corpus.chain(k)


def test_chain_ordering_rejects_nonconservative():
    with pytest.raises(NotConservative):
        chain_ordering(figures.a2_algebra())


def test_orders_agree_for_every_base():
    for A in corpus.conservative_large().values():
        ref = chain_ordering(A, base=0).total_order
        for a in range(A.n):
            assert same_up_to_reversal(chain_ordering(A, base=a).total_order, ref)


# -- three-way equivalence, small semilattices ----------------------------------------------


def test_three_way_equivalence():
    fixtures = list(corpus.named().values()) + corpus.random_cube_subalgebras(60, seed=3)
    for A in fixtures:
        c = bool(is_conservative(A))
        no_sub = find_A2_subalgebra(A) is None
        no_poset = all(find_forbidden_poset(order_from_point(A, a), kinds=("A2",)) is None for a in range(A.n))
        assert c == no_sub == no_poset


def all_posets(n):
    """Every partial order on n labelled points."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in itertools.product((False, True), repeat=len(pairs)):
        le = np.eye(n, dtype=bool)
        for (i, j), b in zip(pairs, bits):
            le[i, j] = b
        if (le & le.T & ~np.eye(n, dtype=bool)).any():
            continue
        if ((le.astype(int) @ le.astype(int) > 0) & ~le).any():
            continue
        yield FinitePoset(le)


def test_small_median_semilattices_are_conservative_except_a2():
    seen = stars = 0
    for n in range(1, 5):
        for P in all_posets(n):
            if P.bottom() is None:
                continue
            try:
                S = MeetSemilattice.from_poset(P)
            except Exception:
                continue
            if not is_median_semilattice(S):
                continue
            seen += 1
            A = median_from_semilattice(S)
            # the claw (three atoms over a bottom) is the star seen from its centre
            is_a2 = are_isomorphic(A, figures.a2_algebra()) is not None
            assert bool(is_conservative(A)) == (not is_a2)
            stars += is_a2
    assert seen > 0 and stars > 0
