"""ParamPoly arithmetic, calculus and tie substitution."""

from __future__ import annotations

from fractions import Fraction

import pytest
import sympy

from splitgen.errors import DimensionMismatchError, UsageError
from splitgen.polynomials import ParamPoly

P1 = ParamPoly.variable(2, 0)
P2 = ParamPoly.variable(2, 1)


def test_zero_coefficients_are_dropped():
    poly = ParamPoly(2, {(1, 0): 1, (0, 1): 0})
    assert len(poly) == 1
    assert (P1 - P1).is_zero()
    assert P1 - P1 == 0


def test_arithmetic_and_powers():
    poly = (P1 + P2) ** 2
    assert poly.coefficient((1, 1)) == 2
    assert poly.coefficient((2, 0)) == 1
    assert 3 - P1 == ParamPoly(2, {(0, 0): 3, (1, 0): -1})
    assert P1 * Fraction(1, 2) == ParamPoly(2, {(1, 0): Fraction(1, 2)})
    assert sum([P1, P2, P1]) == 2 * P1 + P2


def test_variable_count_mismatch():
    with pytest.raises(DimensionMismatchError):
        P1 + ParamPoly.variable(3, 0)
    with pytest.raises(DimensionMismatchError):
        ParamPoly(2, {(1,): 1})


def test_degrees_and_homogeneity():
    poly = P1**3 + P1 * P2**2
    assert poly.degrees() == {3}
    assert poly.total_degree == 3
    assert poly.is_homogeneous()
    assert not (poly + P1).is_homogeneous()
    assert ParamPoly.zero(2).total_degree == 0


def test_derivative():
    poly = P1**3 + 2 * P1 * P2
    assert poly.derivative(0) == 3 * P1**2 + 2 * P2
    assert poly.derivative(1) == 2 * P1


def test_evaluate_exact_float_and_complex():
    poly = Fraction(1, 2) * P1**2 - P2
    assert poly.evaluate([Fraction(1, 3), Fraction(1)]) == Fraction(1, 18) - 1
    assert poly.evaluate([2.0, 0.5]) == pytest.approx(1.5)
    assert poly.evaluate([1j, 0]) == pytest.approx(-0.5)
    with pytest.raises(DimensionMismatchError):
        poly.evaluate([1])


def test_substitute_ties_symmetric_pairs():
    x = [ParamPoly.variable(3, j) for j in range(3)]
    poly = x[0] ** 2 + x[1] * x[2] + x[2]
    tied = poly.substitute_ties([(0, 2), (1,)])
    q1, q2 = ParamPoly.variable(2, 0), ParamPoly.variable(2, 1)
    assert tied == q1**2 + q1 * q2 + q1


def test_substitute_ties_must_partition():
    poly = ParamPoly.variable(3, 0)
    with pytest.raises(UsageError):
        poly.substitute_ties([(0, 1)])
    with pytest.raises(UsageError):
        poly.substitute_ties([(0, 1), (1, 2)])


def test_mirror_reverses_variables():
    x = [ParamPoly.variable(3, j) for j in range(3)]
    assert (x[0] ** 2 * x[1]).mirror() == x[2] ** 2 * x[1]


def test_render_and_sympy():
    poly = Fraction(3, 2) * P1**2 * P2 - P2 + 1
    assert poly.render() == "3/2*p1^2*p2 - p2 + 1"
    assert ParamPoly.zero(2).render() == "0"
    p1, p2 = sympy.symbols("p1 p2")
    assert sympy.simplify(poly.to_sympy() - (sympy.Rational(3, 2) * p1**2 * p2 - p2 + 1)) == 0


def test_vectors_follow_requested_monomials():
    poly = 2 * P1 + 5 * P2
    assert poly.vectors([(0, 1), (1, 0), (1, 1)]) == [5, 2, 0]
