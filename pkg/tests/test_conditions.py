"""Condition multisets and determining Lyndon indices per scheme."""

from __future__ import annotations

import pytest

from splitgen.conditions import (
    ConditionMultiset,
    condition_multisets,
    determining_indices,
    indices_by_order,
)
from splitgen.errors import InvalidOrderError, InvalidSchemeError
from splitgen.schemes import Scheme, SchemeKind
from splitgen.witt import s_min

from .data_determining import NONSYMMETRIC, SYMMETRIC


@pytest.mark.parametrize("order", sorted(NONSYMMETRIC))
def test_nonsymmetric_lists_match_published(order):
    grouped = indices_by_order(Scheme.parse("nonsymmetric"), order)
    assert set(grouped[order]) == set(NONSYMMETRIC[order])
    assert len(grouped[order]) == len(NONSYMMETRIC[order])


@pytest.mark.parametrize("order", sorted(SYMMETRIC))
def test_symmetric_lists_match_published(order):
    grouped = indices_by_order(Scheme.parse("symmetric"), order)
    assert set(grouped[order]) == set(SYMMETRIC[order])
    assert len(grouped[order]) == len(SYMMETRIC[order])


def test_symmetric_fifth_order_indices():
    assert determining_indices(Scheme.parse("symmetric"), 5) == [(3,), (5,), (1, 1, 3)]


def test_determining_count_plus_one_is_s_min():
    for text, orders in [("nonsymmetric", range(2, 8)), ("symmetric", range(3, 12, 2)),
                         ("recursive:2", range(3, 7)), ("recursive-symmetric:2", (5, 7, 9))]:
        scheme = Scheme.parse(text)
        for m in orders:
            assert len(determining_indices(scheme, m)) + 1 == s_min(scheme, m)


def test_every_index_has_a_correction_term_above_one():
    for seq in determining_indices(Scheme.parse("nonsymmetric"), 6):
        assert any(i > 1 for i in seq)


def test_symmetric_indices_are_all_odd():
    for seq in determining_indices(Scheme.parse("symmetric"), 9):
        assert all(i % 2 == 1 for i in seq)
        assert sum(seq) % 2 == 1


def test_recursive_level_restricts_grades():
    scheme = Scheme.parse("recursive:2")
    multisets = condition_multisets(scheme, 5)
    assert {c.weight for c in multisets} == {4, 5}
    assert all(set(c.as_dict()) <= {1, 4, 5} for c in multisets)
    assert determining_indices(scheme, 5) == [(4,), (5,), (1, 4)]


def test_recursive_symmetric_weights():
    scheme = Scheme.parse("recursive-symmetric:2")
    multisets = condition_multisets(scheme, 7)
    assert {c.weight for c in multisets} == {5, 7}
    assert all(set(c.as_dict()) <= {1, 5, 7} for c in multisets)


def test_tilde_shares_nonsymmetric_indices():
    assert determining_indices(Scheme.parse("tilde"), 6) == determining_indices(
        Scheme.parse("nonsymmetric"), 6
    )


def test_condition_multiset_properties():
    c = ConditionMultiset.from_parts([3, 1, 1])
    assert c.counts == ((1, 2), (3, 1))
    assert c.weight == 5
    assert c.size == 3
    assert c.grades == (1, 1, 3)
    assert str(c) == "R1^2 R3"


def test_symmetric_even_order_rejected_but_normalizable():
    scheme = Scheme.parse("symmetric")
    with pytest.raises(InvalidOrderError):
        condition_multisets(scheme, 4)
    assert scheme.normalize_order(4) == 3
    assert scheme.normalize_order(5) == 5


def test_scheme_parse():
    assert Scheme.parse("complex").kind is SchemeKind.NONSYMMETRIC
    assert Scheme.parse("recursive-tilde:3") == Scheme(SchemeKind.RECURSIVE_TILDE, 3)
    assert Scheme.parse("tilde").sign_rule == "alternating"
    assert Scheme.parse("symmetric").sign_rule == "plain"
    with pytest.raises(InvalidSchemeError):
        Scheme.parse("palindromic")
    with pytest.raises(InvalidSchemeError):
        Scheme.parse("recursive")
    with pytest.raises(InvalidSchemeError):
        Scheme.parse("symmetric:2")


def test_recursive_level_out_of_range():
    with pytest.raises(InvalidSchemeError):
        condition_multisets(Scheme.parse("recursive:5"), 5)
    with pytest.raises(InvalidSchemeError):
        condition_multisets(Scheme.parse("recursive-symmetric:3"), 5)
