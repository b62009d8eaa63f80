"""
algebra.py - Elementos da álgebra associativa livre (WordPoly)

Propósito:
    Combinações lineares finitas de palavras, com coeficientes genéricos
    (int, Fraction, float, complex). Usado pela expansão de colchetes de
    Lyndon e pela série truncada de produtos de exponenciais.

Componentes principais:
    - WordPoly: soma, diferença, produto por concatenação, comutador,
      reversão e restrição por grau

Notas de implementação:
    - Palavras são tuplas de inteiros (posições no alfabeto)
    - Termos com coeficiente exatamente zero nunca são armazenados
    - O grau de uma letra é 1 salvo quando uma função de grau é fornecida
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from numbers import Number
from typing import Callable, Iterable, Iterator, Mapping, Optional, Union

Coefficient = Union[int, Fraction, float, complex]
Letters = tuple[int, ...]
GradeFn = Callable[[int], int]


def _unit_grade(_letter: int) -> int:
    return 1


class WordPoly:
    """Polinômio não comutativo: dicionário palavra → coeficiente."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Letters, Coefficient]] = None):
        self._terms: dict[Letters, Coefficient] = {}
        for word, coeff in (terms or {}).items():
            if coeff != 0:
                self._terms[tuple(word)] = coeff

    @classmethod
    def word(cls, letters: Iterable[int], coeff: Coefficient = 1) -> WordPoly:
        return cls({tuple(letters): coeff})

    @classmethod
    def zero(cls) -> WordPoly:
        return cls()

    @classmethod
    def _from_accumulator(cls, acc: Mapping[Letters, Coefficient]) -> WordPoly:
        poly = cls()
        poly._terms = {w: c for w, c in acc.items() if c != 0}
        return poly

    # -- acesso -----------------------------------------------------------

    def coefficient(self, word: Iterable[int]) -> Coefficient:
        return self._terms.get(tuple(word), 0)

    def items(self) -> Iterator[tuple[Letters, Coefficient]]:
        return iter(sorted(self._terms.items()))

    def words(self) -> list[Letters]:
        return sorted(self._terms)

    def as_dict(self) -> dict[Letters, Coefficient]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WordPoly):
            return self._terms == other._terms
        if isinstance(other, Number) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- aritmética -------------------------------------------------------

    def __add__(self, other: WordPoly) -> WordPoly:
        acc: dict[Letters, Coefficient] = dict(self._terms)
        for word, coeff in other._terms.items():
            acc[word] = acc.get(word, 0) + coeff
        return WordPoly._from_accumulator(acc)

    def __neg__(self) -> WordPoly:
        return WordPoly._from_accumulator({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: WordPoly) -> WordPoly:
        return self + (-other)

    def scale(self, factor: Coefficient) -> WordPoly:
        return WordPoly._from_accumulator({w: c * factor for w, c in self._terms.items()})

    def __mul__(self, other: Union[WordPoly, Coefficient]) -> WordPoly:
        if not isinstance(other, WordPoly):
            return self.scale(other)
        acc: dict[Letters, Coefficient] = defaultdict(int)
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                acc[left + right] += a * b
        return WordPoly._from_accumulator(acc)

    def __rmul__(self, other: Coefficient) -> WordPoly:
        return self.scale(other)

    def commutator(self, other: WordPoly) -> WordPoly:
        """[self, other] = self·other − other·self."""
        return self * other - other * self

    def reversed(self) -> WordPoly:
        """Anti-automorfismo que inverte cada palavra."""
        return WordPoly._from_accumulator({w[::-1]: c for w, c in self._terms.items()})

    # -- graus ------------------------------------------------------------

    def grade_of_word(self, word: Letters, grade_of: Optional[GradeFn] = None) -> int:
        fn = grade_of or _unit_grade
        return sum(fn(letter) for letter in word)

    def grades(self, grade_of: Optional[GradeFn] = None) -> set[int]:
        return {self.grade_of_word(w, grade_of) for w in self._terms}

    def is_homogeneous(self, grade_of: Optional[GradeFn] = None) -> bool:
        return len(self.grades(grade_of)) <= 1

    def part(self, grade: int, grade_of: Optional[GradeFn] = None) -> WordPoly:
        """Componente homogênea de um grau."""
        return WordPoly._from_accumulator(
            {w: c for w, c in self._terms.items() if self.grade_of_word(w, grade_of) == grade}
        )

    # -- apresentação -----------------------------------------------------

    def render(self, symbols: Optional[Iterable[str]] = None) -> str:
        if not self._terms:
            return "0"
        names = list(symbols) if symbols is not None else None
        sep = "" if names is None or all(len(s) == 1 for s in names) else " "
        parts = []
        for word, coeff in self.items():
            text = sep.join(names[i] for i in word) if names else ",".join(map(str, word))
            parts.append(f"{coeff}*{text or '1'}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"WordPoly({self.render()})"
