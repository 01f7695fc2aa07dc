import random
from fractions import Fraction

import pytest

from fundom import (RatVec, in_closure_lex, in_lex, is_lex_closed,
                    k_universal_vector, lex_compare, lex_max_in_orbit,
                    min_positive_gap, ssp, tie_breaker)
from fundom.sampling import grid_vector

from conftest import BATTERY, cyc, direct_product, cyclic_triples, sym


def test_lex_compare():
    assert lex_compare(RatVec([1, 0, 1]), RatVec([1, 1, 0])) == -1
    assert lex_compare(RatVec([2, 0, 0]), RatVec([1, 9, 9])) == 1
    assert lex_compare(RatVec([1, 2]), RatVec([1, 2])) == 0


def test_lex_max_in_orbit():
    assert lex_max_in_orbit(cyc(3), RatVec([1, 1, 0])) == RatVec([1, 1, 0])
    assert lex_max_in_orbit(sym(3), RatVec([0, 1, 2])) == RatVec([2, 1, 0])
    assert lex_max_in_orbit(sym(4), RatVec([7, 7, 7, 7])) == RatVec([7, 7, 7, 7])


def test_lex_max_idempotent_and_maximal():
    rng = random.Random(2)
    for _, G, _ in BATTERY:
        if G.degree > 7:
            continue
        for _ in range(10):
            x = grid_vector(rng, G.degree)
            m = lex_max_in_orbit(G, x)
            assert lex_max_in_orbit(G, m) == m
            assert in_lex(G, m)


def test_tie_breaker_example():
    tb = tie_breaker(RatVec([1, 1, 0]))
    assert tb.gap == 1
    assert tb.epsilon == Fraction(1, 2)
    assert tb.perturbed == RatVec([Fraction(17, 18), Fraction(8, 9), Fraction(-1, 6)])


def test_tie_breaker_all_equal_gap_is_one():
    assert min_positive_gap(RatVec([5, 5, 5, 5])) == 1
    tb = tie_breaker(RatVec([5, 5, 5]))
    assert tb.gap == 1


def test_tie_breaker_invariants():
    rng = random.Random(4)
    for _ in range(200):
        n = rng.randint(1, 7)
        x = grid_vector(rng, n)
        tb = tie_breaker(x)
        assert 0 < tb.epsilon < tb.gap
        coords = tb.perturbed.coords
        assert len(set(coords)) == n
        for i in range(n):
            for j in range(n):
                if x[i] < x[j]:
                    assert coords[i] < coords[j]


def test_tie_breaker_epsilon_validation():
    with pytest.raises(ValueError):
        tie_breaker(RatVec([1, 0]), epsilon=2)


def test_in_closure_examples():
    assert in_closure_lex(cyc(3), RatVec([1, 1, 0])) is True
    assert in_closure_lex(cyc(3), RatVec([0, 1, 1])) is False
    assert in_closure_lex(sym(5), RatVec([9, 7, 5, 3, 1])) is True


def test_closure_predicate_epsilon_independent():
    rng = random.Random(6)
    for G in (cyc(3), sym(4), cyclic_triples(6)):
        for _ in range(40):
            x = grid_vector(rng, G.degree)
            default = in_closure_lex(G, x)
            third = tie_breaker(x, min_positive_gap(x) / 3).perturbed
            assert default == (lex_max_in_orbit(G, third) == third)


def test_is_lex_closed_battery():
    for name, G, closed in BATTERY:
        assert is_lex_closed(G) == closed, name


def test_closure_agrees_with_table_cone():
    rng = random.Random(8)
    for name, G, _ in BATTERY:
        if G.degree > 7 or G.order() > 5040:
            continue
        system = ssp(G)
        for _ in range(60):
            x = grid_vector(rng, G.degree)
            assert system.weakly_contains(x) == in_closure_lex(G, x), (name, x)


def test_product_decomposition():
    # closure membership factors across a direct product
    rng = random.Random(10)
    cases = [
        (direct_product(cyc(3), sym(2)), cyc(3), sym(2)),
        (direct_product(sym(3), cyc(4)), sym(3), cyc(4)),
        (direct_product(cyc(4), cyc(3)), cyc(4), cyc(3)),
    ]
    for G, left, right in cases:
        k = left.degree
        for _ in range(80):
            x = grid_vector(rng, G.degree)
            whole = in_closure_lex(G, x)
            parts = (in_closure_lex(left, RatVec(x.coords[:k]))
                     and in_closure_lex(right, RatVec(x.coords[k:])))
            assert whole == parts


def finite_k_member(G, x, k):
    """Membership in the k-weighted Dirichlet sense, by full enumeration."""
    alpha = k_universal_vector(G.degree, k)
    ax = alpha.dot(x)
    return all(ax >= alpha.dot(g.act(x)) for g in G.elements())


def lex_member_bruteforce(G, x):
    return all(lex_compare(x, g.act(x)) >= 0 for g in G.elements())


@pytest.mark.parametrize("bound", [1, 2, 3])
def test_finite_k_equivalence_for_integer_vectors(bound):
    # entries in 0..B: lex-maximality matches the (B+1)-weighted cone
    rng = random.Random(100 + bound)
    for name, G, _ in BATTERY:
        if G.degree > 7 or G.order() > 720:
            continue
        n = G.degree
        for _ in range(40):
            x = RatVec([rng.randint(0, bound) for _ in range(n)])
            lex = lex_member_bruteforce(G, x)
            assert lex == finite_k_member(G, x, bound + 1), (name, x)
            assert lex == in_lex(G, x)
