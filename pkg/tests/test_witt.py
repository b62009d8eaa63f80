"""Witt formulas, minimal stage counts and counting corollaries."""

from __future__ import annotations

from fractions import Fraction

import pytest

from splitgen.errors import InvalidOrderError, NotPrimeError, UsageError
from splitgen.schemes import Scheme
from splitgen.witt import (
    corollary_identity,
    mobius,
    s_min,
    witt_count,
    witt_multi,
    witt_multi_prime_form,
)


@pytest.mark.parametrize("d,mu", [(1, 1), (2, -1), (3, -1), (4, 0), (6, 1), (12, 0), (30, -1)])
def test_mobius(d, mu):
    assert mobius(d) == mu


def test_mobius_rejects_zero():
    with pytest.raises(UsageError):
        mobius(0)


@pytest.mark.parametrize(
    "n,expected",
    [(1, 2), (2, 1), (3, 2), (4, 3), (5, 6), (6, 9), (7, 18), (8, 30)],
)
def test_witt_count_two_letters(n, expected):
    assert witt_count(2, n) == expected


def test_witt_count_three_letters():
    assert [witt_count(3, n) for n in range(1, 6)] == [3, 3, 8, 18, 48]


@pytest.mark.parametrize(
    "multidegree,expected",
    [((4, 2, 1), 15), ((2, 2), 1), ((3, 2), 2), ((6, 3), 9), ((1, 0), 1),
     ((2, 0), 0), ((5, 1), 1), ((2, 1, 2), 6), ((3, 4), 5)],
)
def test_witt_multi(multidegree, expected):
    assert witt_multi(multidegree) == expected


def test_witt_multi_sums_to_witt_count():
    for n in range(1, 9):
        total = sum(witt_multi((a, n - a)) for a in range(n + 1))
        assert total == witt_count(2, n)


def test_prime_form_agrees_when_coprime():
    assert witt_multi_prime_form((4, 2, 1)) == Fraction(15)
    assert witt_multi_prime_form((6, 3)) != witt_multi((6, 3))


@pytest.mark.parametrize(
    "order,expected",
    [(2, 2), (3, 4), (4, 7), (5, 13), (6, 22), (7, 40), (8, 70), (9, 126), (10, 225)],
)
def test_s_min_nonsymmetric(order, expected):
    assert s_min(Scheme.parse("nonsymmetric"), order) == expected


@pytest.mark.parametrize(
    "order,expected",
    [(3, 2), (5, 4), (7, 8), (9, 16), (11, 34), (13, 74), (15, 164), (17, 374)],
)
def test_s_min_symmetric(order, expected):
    assert s_min(Scheme.parse("symmetric"), order) == expected


def test_s_min_tilde_matches_nonsymmetric():
    for order in range(2, 7):
        assert s_min(Scheme.parse("tilde"), order) == s_min(Scheme.parse("complex"), order)


def test_s_min_recursive_full_level_matches_nonsymmetric():
    assert s_min(Scheme.parse("recursive:4"), 5) == s_min(Scheme.parse("nonsymmetric"), 5)


def test_s_min_recursive_level_one():
    # base de ordem m-1: só o grau m, sem multiconjuntos R1^n R_m com n > 0
    assert s_min(Scheme.parse("recursive:1"), 5) == 2


def test_s_min_recursive_symmetric_top_level_matches_symmetric():
    assert s_min(Scheme.parse("recursive-symmetric:4"), 9) == s_min(Scheme.parse("symmetric"), 9)


def test_s_min_symmetric_rejects_even_order():
    with pytest.raises(InvalidOrderError):
        s_min(Scheme.parse("symmetric"), 8)


@pytest.mark.parametrize("m", [4, 6, 7, 9])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_corollary_a4(m, k):
    lhs, rhs = corollary_identity("A4", m, k=k)
    assert lhs == rhs


def test_corollary_a4_boundary_when_m_equals_k():
    # o lado direito conta a letra isolada de grau k, sem contrapartida à esquerda
    assert corollary_identity("A4", 3, k=3) == (0, 1)


@pytest.mark.parametrize("m", [2, 6, 8])
def test_corollary_a6(m):
    lhs, rhs = corollary_identity("A6", m)
    assert lhs == rhs == witt_count(2, m)


def test_corollary_a6_order_six_is_nine():
    assert corollary_identity("A6", 6) == (9, 9)


def test_corollary_a7_order_seven():
    assert corollary_identity("A7", 7) == (4, 4)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_corollary_a9_primes(p):
    lhs, rhs = corollary_identity("A9", p)
    assert lhs == rhs


@pytest.mark.parametrize("p", [5, 7, 11])
def test_corollary_a8_primes(p):
    lhs, rhs = corollary_identity("A8", p)
    assert lhs == rhs


def test_corollary_a9_rejects_composite():
    with pytest.raises(NotPrimeError):
        corollary_identity("A9", 9)


def test_corollary_unknown_kind():
    with pytest.raises(UsageError):
        corollary_identity("A5", 5)
