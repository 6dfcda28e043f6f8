from fractions import Fraction

import pytest
from hypothesis import given

from oracles import brute_invariant_generators, cf_value
from qsing.errors import NotCoprime, QOutOfRange
from qsing.hj import dual_expand, embedding_dimension, hj_expand, riemenschneider_check
from strategies import coprime_pairs


@pytest.mark.parametrize(
    "p, q, entries",
    [(7, 3, (3, 2, 2)), (5, 1, (5,)), (5, 4, (2, 2, 2, 2)), (12, 5, (3, 2, 3)), (2, 1, (2,))],
)
def test_hj_expand_examples(p, q, entries):
    assert hj_expand(p, q).entries == entries
    assert cf_value(list(entries)) == Fraction(p, q)


@pytest.mark.parametrize("p, q, entries", [(7, 3, (2, 4)), (3, 2, (3,)), (5, 1, (2, 2, 2, 2))])
def test_dual_expand_examples(p, q, entries):
    assert dual_expand(p, q).entries == entries
    assert cf_value(list(entries)) == Fraction(p, p - q)


@pytest.mark.parametrize("p, q", [(6, 3), (10, 4)])
def test_not_coprime(p, q):
    with pytest.raises(NotCoprime):
        hj_expand(p, q)


@pytest.mark.parametrize("p, q", [(7, 7), (7, 0), (7, 8), (1, 1)])
def test_q_out_of_range(p, q):
    with pytest.raises(QOutOfRange):
        hj_expand(p, q)


def test_embedding_dimension_examples():
    assert embedding_dimension(7, 3) == 4
    assert embedding_dimension(3, 2) == 3
    for p in range(2, 40):
        # generators of 1/p(1,1) are the p + 1 monomials x^a y^(p-a)
        assert embedding_dimension(p, 1) == len(brute_invariant_generators(p, 1)) == p + 1


def test_riemenschneider_examples():
    r = riemenschneider_check(7, 3)
    assert (r.sumE, r.sumEprime, r.kPrime, r.e, r.holds) == (4, 4, 2, 4, True)
    r = riemenschneider_check(2, 1)
    assert (r.sumE, r.sumEprime, r.kPrime, r.e, r.holds) == (1, 1, 1, 3, True)
    assert riemenschneider_check(12, 5).holds


@given(coprime_pairs())
def test_expansion_sound(pq):
    p, q = pq
    ex = hj_expand(p, q)
    assert min(ex) >= 2
    assert cf_value(list(ex)) == Fraction(p, q)


@given(coprime_pairs())
def test_duality_involution(pq):
    p, q = pq
    assert dual_expand(p, p - q).entries == hj_expand(p, q).entries


@given(coprime_pairs())
def test_riemenschneider_property(pq):
    assert riemenschneider_check(*pq).holds


@given(coprime_pairs())
def test_table1_row3_algebra(pq):
    p, q = pq
    if q in (1, p - 1):
        return
    ex = hj_expand(p, q)
    e, k = embedding_dimension(p, q), ex.k
    assert 2 * sum(x - 1 for x in ex) + k - 2 == 2 * e + 3 * k - 8


def test_big_integers():
    # consecutive Fibonacci numbers give long expansions; no overflow anywhere
    a, b = 1, 1
    for _ in range(200):
        a, b = b, a + b
    ex = hj_expand(b, a)
    assert cf_value(list(ex)) == Fraction(b, a)
    assert riemenschneider_check(b, a).holds
