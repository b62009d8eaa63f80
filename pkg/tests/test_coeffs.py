"""Coefficient polynomials g, g~ and f, checked against brute-force expansions."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial, prod

import pytest
from sympy.utilities.iterables import multiset_permutations, partitions

from splitgen.coeffs import (
    block_sums,
    coefficient,
    compositions,
    f_simplified,
    family_of,
    g_plain,
    g_tilde,
    normal_ordered_form,
    ps_oracle,
)
from splitgen.conditions import ConditionMultiset
from splitgen.errors import CostGuardError, UsageError
from splitgen.polynomials import ParamPoly
from splitgen.schemes import Scheme


def _p(r: int, j: int) -> ParamPoly:
    return ParamPoly.variable(r, j - 1)


def _strict_sum(indices: tuple[int, ...], r: int) -> ParamPoly:
    """Σ_{k_1<...<k_n} Π p_{k_j}^{i_j}."""
    total = ParamPoly.zero(r)
    for stages in combinations(range(1, r + 1), len(indices)):
        term = ParamPoly.constant(r, 1)
        for k, i in zip(stages, indices):
            term = term * _p(r, k) ** i
        total = total + term
    return total


def test_compositions():
    assert list(compositions(0)) == [()]
    assert sorted(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(list(compositions(6))) == 32
    assert block_sums((1, 2, 3, 4), (1, 3)) == (1, 9)


def test_g_plain_two_stages():
    p1, p2 = _p(2, 1), _p(2, 2)
    half = Fraction(1, 2)
    assert g_plain((1, 2), 2) == half * p1**3 + p1 * p2**2 + half * p2**3


def test_g_plain_single_index_is_power_sum():
    r = 4
    assert g_plain((3,), r) == sum(_p(r, j) ** 3 for j in range(1, r + 1))


def test_g_tilde_alternates_by_stage():
    p1, p2 = _p(2, 1), _p(2, 2)
    assert g_tilde((2,), 2) == p1**2 - p2**2
    assert g_tilde((1,), 2) == p1 + p2


def _contents(max_factors: int = 4, max_grade: int = 6) -> list[tuple[int, ...]]:
    """Todos os conteúdos com até max_factors fatores e grau total até max_grade."""
    out = []
    for total in range(1, max_grade + 1):
        for parts in partitions(total, m=max_factors):
            out.append(tuple(g for g, mult in sorted(parts.items()) for _ in range(mult)))
    return out


CONTENTS = _contents()


@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("grades", CONTENTS, ids=str)
def test_oracle_matches_closed_form_on_grid(grades, r):
    content = ConditionMultiset.from_parts(grades)
    for alternating in (False, True):
        oracle = ps_oracle(content, r, alternating=alternating)
        closed = g_tilde if alternating else g_plain
        for word in multiset_permutations(list(grades)):
            idx = tuple(word)
            assert oracle.get(idx, ParamPoly.zero(r)) == closed(idx, r), (idx, alternating)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("grades", CONTENTS, ids=str)
def test_normal_ordered_form_matches_g_on_grid(grades, r):
    for word in multiset_permutations(list(grades)):
        idx = tuple(word)
        assert normal_ordered_form(idx, r) == g_plain(idx, r), idx
        assert normal_ordered_form(idx, r, alternating=True) == g_tilde(idx, r), idx


def test_oracle_cost_guard():
    with pytest.raises(CostGuardError):
        ps_oracle(ConditionMultiset.from_parts([1] * 6 + [2]), 2)
    with pytest.raises(CostGuardError):
        ps_oracle(ConditionMultiset.from_parts([1, 2]), 5)


@pytest.mark.parametrize("indices", [(2,), (1, 2), (1, 2, 1), (2, 1, 1, 3)])
def test_complex_f_is_strict_stage_sum(indices):
    r = 4
    assert f_simplified(indices, r, "complex") == _strict_sum(indices, r)


@pytest.mark.parametrize("r", [3, 4])
def test_two_index_g_as_power_sums(r):
    half_cubes = Fraction(1, 2) * sum(_p(r, i) ** 3 for i in range(1, r + 1))
    pairs = list(combinations(range(1, r + 1), 2))
    assert g_plain((1, 2), r) == half_cubes + sum(_p(r, i) * _p(r, j) ** 2 for i, j in pairs)
    assert g_plain((2, 1), r) == half_cubes + sum(_p(r, i) ** 2 * _p(r, j) for i, j in pairs)


@pytest.mark.parametrize("indices", [(3,), (5,), (2,)])
def test_symmetric_f_single_index(indices):
    r = 4
    assert f_simplified(indices, r, "symmetric") == sum(
        _p(r, k) ** indices[0] for k in range(1, r + 1)
    )


@pytest.mark.parametrize("indices", [(1, 2, 3), (1, 1, 3), (3, 1, 1), (2, 5, 1)])
def test_symmetric_f_three_indices(indices):
    r = 4
    i1, i2, i3 = indices
    half = Fraction(1, 2)
    expected = _strict_sum(indices, r) + half * (
        _strict_sum((i1, i2 + i3), r) + _strict_sum((i1 + i2, i3), r)
    )
    assert f_simplified(indices, r, "symmetric") == expected


@pytest.mark.parametrize(
    "indices,r", [((1, 2, 3, 1, 2), 6), ((1, 1, 1, 1, 3), 5), ((1, 1, 3, 1, 3), 5)]
)
def test_symmetric_f_five_indices(indices, r):
    i1, i2, i3, i4, i5 = indices
    s = _strict_sum
    expected = (
        s(indices, r)
        + Fraction(1, 2) * (
            s((i1, i2, i3, i4 + i5), r)
            + s((i1, i2, i3 + i4, i5), r)
            + s((i1, i2 + i3, i4, i5), r)
            + s((i1 + i2, i3, i4, i5), r)
        )
        + Fraction(1, 4) * (
            s((i1, i2 + i3, i4 + i5), r)
            + s((i1 + i2, i3, i4 + i5), r)
            + s((i1 + i2, i3 + i4, i5), r)
        )
        - Fraction(1, 8) * (
            s((i1, i2 + i3 + i4 + i5), r)
            + s((i1 + i2 + i3 + i4, i5), r)
        )
    )
    assert f_simplified(indices, r, "symmetric") == expected


def _readded(indices: tuple[int, ...], r: int, family: str) -> ParamPoly:
    """f mais os termos que a definição de f subtrai de g."""
    n = len(indices)
    total = f_simplified(indices, r, family)
    for parts in compositions(n):
        alpha = len(parts)
        odd = all(t % 2 for t in parts)
        if family == "complex":
            keep = alpha <= n - 1
        elif family == "tilde":
            keep = odd and alpha % 2 == n % 2 and alpha <= n - 2
        else:
            keep = odd and alpha % 2 == 1 and alpha <= n - 2
        if keep:
            weight = Fraction(1, prod(factorial(t) for t in parts))
            total = total + f_simplified(block_sums(indices, parts), r, family) * weight
    return total


@pytest.mark.parametrize("family", ["complex", "tilde", "symmetric"])
@pytest.mark.parametrize(
    "indices", [(2,), (1, 2), (2, 1, 3), (1, 1, 3, 2), (1, 2, 3, 1, 2), (3, 1, 1, 1, 1)]
)
def test_readding_subtracted_terms_gives_g(indices, family):
    r = 4
    g = g_tilde(indices, r) if family == "tilde" else g_plain(indices, r)
    assert _readded(indices, r, family) == g


def test_symmetric_f_subtracts_odd_blocks_only():
    r = 3
    assert f_simplified((1, 2), r, "symmetric") == g_plain((1, 2), r)
    expected = g_plain((1, 1, 3), r) - g_plain((5,), r) * Fraction(1, 6)
    assert f_simplified((1, 1, 3), r, "symmetric") == expected


def test_tilde_f_uses_alternating_g():
    r = 3
    expected = g_tilde((1, 1, 3), r) - g_tilde((5,), r) * Fraction(1, 6)
    assert f_simplified((1, 1, 3), r, "tilde") == expected


@pytest.mark.parametrize("indices", [(1, 2, 3), (1, 1, 3), (3, 1, 1, 2)])
def test_reversed_indices_mirror_the_stages(indices):
    r = 3
    reversed_idx = tuple(reversed(indices))
    assert g_plain(reversed_idx, r) == g_plain(indices, r).mirror()
    assert f_simplified(reversed_idx, r, "symmetric") == f_simplified(indices, r, "symmetric").mirror()


def test_coefficient_follows_scheme_sign_rule():
    assert coefficient((2,), 2, Scheme.parse("tilde")) == g_tilde((2,), 2)
    assert coefficient((2,), 2, "recursive:1") == g_plain((2,), 2)
    assert coefficient((1, 1, 3), 3, "symmetric", simplified=True) == f_simplified((1, 1, 3), 3, "symmetric")


def test_family_of():
    assert family_of("recursive-symmetric:2") == "symmetric"
    assert family_of(Scheme.parse("recursive-tilde:1")) == "tilde"
    assert family_of("complex") == "complex"


def test_invalid_indices():
    with pytest.raises(UsageError):
        g_plain((), 2)
    with pytest.raises(UsageError):
        g_plain((0, 1), 2)
    with pytest.raises(UsageError):
        g_plain((1,), 0)
