"""
polynomials.py - Polinômios exatos nos parâmetros p_1, ..., p_r

Propósito:
    ParamPoly: mapa esparso monômio → coeficiente racional. É a forma em
    que todos os coeficientes g, g~ e f, as funções a/b e as equações
    determinantes são representados.

Componentes principais:
    - ParamPoly: aritmética, derivadas parciais, avaliação, empates de
      variáveis (p_i = p_j), espelhamento p_j → p_{r+1-j}
    - to_sympy: expressão sympy para exibição

Dependências críticas:
    - fractions.Fraction: coeficientes exatos
    - sympy: apenas para renderização

Notas de implementação:
    - Monômios são tuplas de expoentes de comprimento nvars
    - Coeficientes zero nunca ficam armazenados (forma canônica)
    - Variáveis são 0-based internamente e impressas como p1, p2, ...
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from math import prod
from typing import Iterable, Mapping, Optional, Sequence, Union

import sympy

from .errors import DimensionMismatchError, UsageError


Exponents = tuple[int, ...]
Rational = Union[int, Fraction]


class ParamPoly:
    """Polinômio com coeficientes Fraction em nvars variáveis comutativas."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exponents, Rational]] = None):
        if nvars < 0:
            raise UsageError(f"nvars must be >= 0, got {nvars}")
        self.nvars = nvars
        self._terms: dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise DimensionMismatchError(f"monomial {exps} does not have {nvars} exponents")
            c = Fraction(coeff)
            if c:
                self._terms[exps] = self._terms.get(exps, Fraction(0)) + c
        self._terms = {e: c for e, c in self._terms.items() if c}

    # -- construtores -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> ParamPoly:
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Rational) -> ParamPoly:
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> ParamPoly:
        """p_{index+1}."""
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def _canonical(cls, nvars: int, acc: Mapping[Exponents, Fraction]) -> ParamPoly:
        poly = cls(nvars)
        poly._terms = {e: c for e, c in acc.items() if c}
        return poly

    # -- acesso -----------------------------------------------------------

    def items(self) -> list[tuple[Exponents, Fraction]]:
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def as_dict(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    @property
    def total_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    # -- aritmética -------------------------------------------------------

    def _check(self, other: ParamPoly) -> None:
        if other.nvars != self.nvars:
            raise DimensionMismatchError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: Union[ParamPoly, Rational]) -> ParamPoly:
        if not isinstance(other, ParamPoly):
            other = ParamPoly.constant(self.nvars, other)
        self._check(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, Fraction(0)) + c
        return ParamPoly._canonical(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self) -> ParamPoly:
        return ParamPoly._canonical(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union[ParamPoly, Rational]) -> ParamPoly:
        return self + (-other)

    def __rsub__(self, other: Rational) -> ParamPoly:
        return (-self) + other

    def __mul__(self, other: Union[ParamPoly, Rational]) -> ParamPoly:
        if not isinstance(other, ParamPoly):
            f = Fraction(other)
            return ParamPoly._canonical(self.nvars, {e: c * f for e, c in self._terms.items()})
        self._check(other)
        acc: dict[Exponents, Fraction] = defaultdict(Fraction)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return ParamPoly._canonical(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> ParamPoly:
        if power < 0:
            raise UsageError("negative powers are not polynomials")
        result = ParamPoly.constant(self.nvars, 1)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ParamPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == ParamPoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    # -- cálculo ----------------------------------------------------------

    def derivative(self, index: int) -> ParamPoly:
        """∂/∂p_{index+1}."""
        acc: dict[Exponents, Fraction] = {}
        for e, c in self._terms.items():
            if e[index]:
                lowered = list(e)
                lowered[index] -= 1
                acc[tuple(lowered)] = c * e[index]
        return ParamPoly._canonical(self.nvars, acc)

    def evaluate(self, values: Sequence):
        """Avalia em valores Fraction (exato), float ou complex."""
        if len(values) != self.nvars:
            raise DimensionMismatchError(f"expected {self.nvars} values, got {len(values)}")
        total = 0
        for e, c in self._terms.items():
            total += c * prod(v**k for v, k in zip(values, e) if k)
        return total

    def substitute_ties(self, groups: Sequence[Sequence[int]]) -> ParamPoly:
        """
        Identifica variáveis empatadas: a variável i do resultado representa
        o grupo groups[i]. Os grupos devem particionar range(nvars).
        """
        owner = {}
        for gi, group in enumerate(groups):
            for j in group:
                if j in owner:
                    raise UsageError(f"variable p{j + 1} appears in two tie groups")
                owner[j] = gi
        if sorted(owner) != list(range(self.nvars)):
            raise UsageError(f"tie groups {groups} do not partition {self.nvars} variables")
        acc: dict[Exponents, Fraction] = defaultdict(Fraction)
        for e, c in self._terms.items():
            reduced = [0] * len(groups)
            for j, k in enumerate(e):
                reduced[owner[j]] += k
            acc[tuple(reduced)] += c
        return ParamPoly._canonical(len(groups), acc)

    def mirror(self) -> ParamPoly:
        """p_j → p_{r+1-j}."""
        return ParamPoly._canonical(self.nvars, {e[::-1]: c for e, c in self._terms.items()})

    def vectors(self, monomials: Sequence[Exponents]) -> list[Fraction]:
        return [self.coefficient(m) for m in monomials]

    # -- apresentação -----------------------------------------------------

    def to_sympy(self, symbols: Optional[Iterable[sympy.Symbol]] = None) -> sympy.Expr:
        if symbols is not None:
            syms = list(symbols)
        else:
            syms = [sympy.Symbol(f"p{j + 1}") for j in range(self.nvars)]
        expr = sympy.Integer(0)
        for e, c in self._terms.items():
            term = sympy.Rational(c.numerator, c.denominator)
            for s, k in zip(syms, e):
                term *= s**k
            expr += term
        return expr

    def render(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.items():
            factors = [f"p{j + 1}" if k == 1 else f"p{j + 1}^{k}" for j, k in enumerate(e) if k]
            body = "*".join(factors)
            if not body:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(body)
            elif c == -1:
                pieces.append(f"-{body}")
            else:
                pieces.append(f"{c}*{body}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"ParamPoly({self.nvars}, {self.render()})"
