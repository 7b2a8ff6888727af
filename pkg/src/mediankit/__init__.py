"""Finite median algebras: axioms, conservativeness, chain representations,
dual spaces and median homomorphisms between products of chains."""
from .core import (
    FinitePoset,
    HomMap,
    MedianAlgebra,
    MeetSemilattice,
    are_isomorphic,
    from_poset,
    from_total_order,
    is_median_semilattice,
    median_from_semilattice,
    order_from_point,
    product,
    product_of_chains,
    subalgebra_generated,
    verify_derived_identities,
    verify_median_axioms,
)
from .conservative import (
    ChainRepresentation,
    ForbiddenWitness,
    TwoByTwo,
    bot_coalesced_sum,
    chain_decomposition,
    chain_ordering,
    find_A2_subalgebra,
    find_forbidden_poset,
    is_conservative,
)
from .duality import (
    DualSpace,
    complete_ideals,
    coproduct,
    dual_of_hom,
    dual_space,
    double_dual_unit,
    embed_in_hypercube,
    is_prime_convex,
    prime_convex_subsets,
)
from .homs import (
    ProductHomDecomposition,
    ProductOfChains,
    classify_boolean_hom,
    decompose_product_hom,
    enumerate_boolean_isomorphisms,
    enumerate_homs_brute,
    enumerate_product_homs,
    is_median_hom,
    is_monotone_wrt_chain_orderings,
)
from .kernels import BACKEND

__version__ = "0.1.0"
