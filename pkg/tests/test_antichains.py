import numpy as np
import pytest
from hypothesis import given, settings

from posetforge import (
    SizeMismatch,
    antichain_exchange_poset,
    antichain_ideal_poset,
    build_poset,
    chain_poset,
    find_isomorphism,
    grid_poset,
    has_order_matching,
    ideal_leq,
    is_distributive,
    is_exchange_cover,
    refinement_report,
)

from conftest import posets


def bowtie():
    return build_poset(
        ["a", "b", "c", "d", "e"],
        [("a", "c"), ("b", "c"), ("c", "d"), ("c", "e")],
    )


# -- the ideal order ----------------------------------------------------------


def test_empty_below_everything():
    P = bowtie()
    empty = P.antichain([])
    for k in range(P.width() + 1):
        for A in P.antichains_of_size(k):
            assert ideal_leq(empty, A)


def test_bowtie_ideal_order():
    P = bowtie()
    low = P.antichain(["a", "b"])
    high = P.antichain(["d", "e"])
    assert ideal_leq(low, high)
    assert not ideal_leq(high, low)


def test_ideal_leq_agrees_with_ideal_containment(corpus7):
    for P in corpus7:
        chains = [A for k in range(P.width() + 1) for A in P.antichains_of_size(k)]
        closures = [A.ideal().mask for A in chains]
        for i, A in enumerate(chains):
            for j, B in enumerate(chains):
                assert ideal_leq(A, B) == (closures[i] & ~closures[j] == 0)


@given(posets())
@settings(deadline=None, max_examples=40)
def test_ideal_leq_agreement_random(P):
    chains = [A for k in range(P.width() + 1) for A in P.antichains_of_size(k)]
    for A in chains[:20]:
        for B in chains[:20]:
            assert ideal_leq(A, B) == (A.ideal().mask & ~B.ideal().mask == 0)


# -- exchange covers -----------------------------------------------------------


def test_bowtie_has_no_exchange_cover():
    P = bowtie()
    low = P.antichain(["a", "b"])
    high = P.antichain(["d", "e"])
    assert not is_exchange_cover(low, high)
    assert not is_exchange_cover(high, low)


def test_self_is_not_a_cover():
    G = grid_poset(2, 2)
    A = G.antichain(["(1,2)", "(2,1)"])
    assert not is_exchange_cover(A, A)


def test_single_step_in_3x2_grid():
    G = grid_poset(3, 2)
    A = G.antichain(["(1,2)", "(2,1)"])
    B = G.antichain(["(1,2)", "(3,1)"])
    assert is_exchange_cover(A, B)
    assert not is_exchange_cover(B, A)


def test_size_mismatch():
    P = bowtie()
    with pytest.raises(SizeMismatch):
        is_exchange_cover(P.antichain(["a"]), P.antichain(["a", "b"]))


# -- the exchange poset ---------------------------------------------------------


def test_bowtie_exchange_poset_is_discrete():
    E = antichain_exchange_poset(bowtie(), 2)
    assert E.n == 2 and not E.lt.any()


def test_size_zero_and_above_width():
    P = bowtie()
    assert antichain_exchange_poset(P, 0).n == 1
    assert antichain_exchange_poset(P, 3).n == 0


def test_size_one_recovers_the_poset(corpus5):
    for P in corpus5:
        if P.n > 4:
            continue
        assert find_isomorphism(antichain_exchange_poset(P, 1), P) is not None


def test_edge_routes_agree(corpus5):
    for P in corpus5:
        for k in range(P.width() + 1):
            default = antichain_exchange_poset(P, k)
            oracle = antichain_exchange_poset(P, k, edges="all")
            assert np.array_equal(default.lt, oracle.lt)


@given(posets())
@settings(deadline=None, max_examples=40)
def test_edge_routes_agree_random(P):
    for k in range(P.width() + 1):
        default = antichain_exchange_poset(P, k)
        oracle = antichain_exchange_poset(P, k, edges="all")
        assert np.array_equal(default.lt, oracle.lt)


def test_covers_are_exactly_single_cover_steps(corpus5):
    for P in corpus5:
        for k in range(P.width() + 1):
            E = antichain_exchange_poset(P, k)
            chains = P.antichains_of_size(k)
            for i in range(E.n):
                for j in range(E.n):
                    if i == j:
                        continue
                    assert bool(E.cover_matrix[i, j]) == is_exchange_cover(
                        chains[i], chains[j]
                    )


# -- the ideal-order poset -------------------------------------------------------


def test_bowtie_ideal_poset_is_a_chain():
    I = antichain_ideal_poset(bowtie(), 2)
    assert I.n == 2 and int(I.lt.sum()) == 1


def test_ideal_poset_at_width_is_distributive(corpus5):
    for P in corpus5:
        verdict = is_distributive(antichain_ideal_poset(P, P.width()))
        assert verdict.distributive, P.covers()


def test_size_one_ideal_poset_recovers_poset(corpus5):
    for P in corpus5:
        if P.n > 4:
            continue
        assert find_isomorphism(antichain_ideal_poset(P, 1), P) is not None


# -- refinement -----------------------------------------------------------------


def test_bowtie_refinement_witness():
    report = refinement_report(bowtie(), 2)
    assert report.consistent
    assert report.coarsening_witnesses == [("{a,b}", "{d,e}")]


def test_chain_has_no_witnesses():
    for k in (0, 1):
        report = refinement_report(chain_poset(4), k)
        assert report.consistent and not report.coarsening_witnesses


def test_grid_refinement_consistency():
    report = refinement_report(grid_poset(3, 3), 2)
    assert report.consistent  # exchange relations always inside the ideal order


@given(posets())
@settings(deadline=None, max_examples=30)
def test_exchange_always_inside_ideal_order(P):
    for k in range(P.width() + 1):
        assert refinement_report(P, k).consistent


# -- matching -------------------------------------------------------------------


def test_matching_on_related_pairs(corpus7):
    for P in corpus7:
        for k in range(P.width() + 1):
            E = antichain_exchange_poset(P, k)
            chains = P.antichains_of_size(k)
            for i in range(E.n):
                for j in range(E.n):
                    if E.lt[i, j]:
                        assert has_order_matching(P, chains[i], chains[j])


def test_matching_can_fail_for_unrelated():
    P = bowtie()
    A = P.antichain(["d", "e"])
    B = P.antichain(["a", "b"])
    assert not has_order_matching(P, A, B)


def matching_oracle(P, A, B):
    from itertools import permutations

    left = A.indices
    right = B.indices
    return any(
        all(P.leq[u, v] for u, v in zip(left, perm))
        for perm in permutations(right)
    )


@given(posets(max_size=6))
@settings(deadline=None, max_examples=40)
def test_matching_matches_bruteforce(P):
    for k in range(P.width() + 1):
        chains = P.antichains_of_size(k)
        for A in chains[:8]:
            for B in chains[:8]:
                assert has_order_matching(P, A, B) == matching_oracle(P, A, B)
