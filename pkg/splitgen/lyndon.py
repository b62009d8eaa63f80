"""
lyndon.py - Palavras de Lyndon, fatoração padrão e colchetes

Propósito:
    Base de Lyndon da álgebra de Lie livre graduada. Cada palavra de Lyndon
    l gera o colchete λ(l) cuja expansão é l + (palavras maiores), o que
    torna os coeficientes das palavras de Lyndon coordenadas independentes
    de um elemento de Lie.

Componentes principais:
    - GradedAlphabet, Word, LyndonWord: tipos básicos
    - is_lyndon, generate_lyndon, lyndon_index_sequences: enumeração
    - standard_factorization, bracketing, expand_bracket: colchetes
    - lyndon_basis_matrix, lie_coordinates: mudança de base α ↔ β

Dependências críticas:
    - sympy: multiset_permutations, Matrix racional para a inversa exata

Exemplo de uso:
    from splitgen.lyndon import GradedAlphabet, generate_lyndon

    words = generate_lyndon(GradedAlphabet.uniform("xy"), 4)

Notas de implementação:
    - A ordem das letras é a ordem de posição no alfabeto
    - Prefixo próprio é menor (comparação de tuplas do Python)
    - Geração de Duval (sucessor) filtrada por grau total
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

import sympy
from sympy.utilities.iterables import multiset_permutations

from .algebra import WordPoly
from .errors import UsageError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedAlphabet:
    """Símbolos ordenados com grau inteiro positivo cada."""

    symbols: tuple[str, ...]
    grades: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.symbols) != len(self.grades):
            raise UsageError("symbols and grades must have the same length")
        if not self.symbols:
            raise UsageError("alphabet must not be empty")
        if len(set(self.symbols)) != len(self.symbols):
            raise UsageError(f"duplicate symbols in alphabet: {self.symbols}")
        if any(g < 1 for g in self.grades):
            raise UsageError(f"grades must be positive: {self.grades}")

    @classmethod
    def uniform(cls, symbols: Iterable[str]) -> GradedAlphabet:
        names = tuple(symbols)
        return cls(names, (1,) * len(names))

    @classmethod
    def parse(cls, text: str) -> GradedAlphabet:
        """Aceita "x,y,z" (grau 1) ou "R1:1,R3:3"."""
        symbols, grades = [], []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            name, _, grade = chunk.partition(":")
            symbols.append(name.strip())
            try:
                grades.append(int(grade) if grade else 1)
            except ValueError as e:
                raise UsageError(f"invalid grade in {chunk!r}") from e
        return cls(tuple(symbols), tuple(grades))

    def __len__(self) -> int:
        return len(self.symbols)

    def grade_of(self, letter: int) -> int:
        return self.grades[letter]

    def spell(self, letters: Sequence[int]) -> str:
        sep = "" if all(len(s) == 1 for s in self.symbols) else " "
        return sep.join(self.symbols[i] for i in letters)

    def letters_of(self, text: str) -> tuple[int, ...]:
        """Converte "xxy" (ou "R1 R1 R3") em posições do alfabeto."""
        index = {s: i for i, s in enumerate(self.symbols)}
        tokens = text.split() if " " in text.strip() else list(text.strip())
        try:
            return tuple(index[t] for t in tokens)
        except KeyError as e:
            raise UsageError(f"symbol {e.args[0]!r} not in alphabet {self.symbols}") from e


@dataclass(frozen=True, order=True)
class Word:
    letters: tuple[int, ...]
    alphabet: GradedAlphabet = field(compare=False, repr=False)

    @property
    def grade(self) -> int:
        return sum(self.alphabet.grade_of(i) for i in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.alphabet.spell(self.letters)


@dataclass(frozen=True, order=True)
class LyndonWord:
    word: Word

    def __post_init__(self) -> None:
        if not is_lyndon(self.word.letters):
            raise UsageError(f"{self.word} is not a Lyndon word")

    @property
    def letters(self) -> tuple[int, ...]:
        return self.word.letters

    @property
    def grade(self) -> int:
        return self.word.grade

    def bracket(self) -> BracketTree:
        return bracketing(self.letters)

    def expansion(self) -> WordPoly:
        return expand_bracket(self.bracket())

    def render_bracket(self) -> str:
        return self.bracket().render(self.word.alphabet.symbols)

    def __str__(self) -> str:
        return str(self.word)


@dataclass(frozen=True)
class Leaf:
    letter: int

    def render(self, symbols: Sequence[str]) -> str:
        return symbols[self.letter]


@dataclass(frozen=True)
class Node:
    left: BracketTree
    right: BracketTree

    def render(self, symbols: Sequence[str]) -> str:
        return f"[{self.left.render(symbols)},{self.right.render(symbols)}]"


BracketTree = Union[Leaf, Node]


def is_lyndon(word: Sequence) -> bool:
    """Estritamente menor que todos os seus sufixos próprios."""
    w = tuple(word)
    if not w:
        return False
    return all(w < w[i:] for i in range(1, len(w)))


def _duval(alphabet_size: int, max_length: int) -> Iterator[tuple[int, ...]]:
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        period = len(w)
        while len(w) < max_length:
            w.append(w[len(w) - period])
        while w and w[-1] == alphabet_size - 1:
            w.pop()


def generate_lyndon(alphabet: GradedAlphabet, max_grade: int) -> list[LyndonWord]:
    """Todas as palavras de Lyndon de grau total ≤ max_grade, por grau e depois lexicográfica."""
    if max_grade < 1:
        return []
    max_length = max_grade // min(alphabet.grades)
    found = [
        LyndonWord(Word(letters, alphabet))
        for letters in _duval(len(alphabet), max_length)
        if sum(alphabet.grade_of(i) for i in letters) <= max_grade
    ]
    found.sort(key=lambda lw: (lw.grade, lw.letters))
    logger.debug(f"generate_lyndon: {len(found)} palavras até grau {max_grade}")
    return found


def standard_factorization(word: Sequence) -> tuple[tuple, tuple]:
    """w = uv com v o maior sufixo próprio de Lyndon; u e v são de Lyndon."""
    w = tuple(word)
    if len(w) < 2 or not is_lyndon(w):
        raise UsageError(f"standard factorization needs a Lyndon word of length ≥ 2: {w}")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise AssertionError("unreachable: the last letter is always Lyndon")


def bracketing(word: Sequence[int]) -> BracketTree:
    w = tuple(word)
    if len(w) == 1:
        return Leaf(w[0])
    u, v = standard_factorization(w)
    return Node(bracketing(u), bracketing(v))


def expand_bracket(tree: BracketTree) -> WordPoly:
    """Expande comutadores aninhados em soma de palavras com coeficientes inteiros."""
    if isinstance(tree, Leaf):
        return WordPoly.word((tree.letter,))
    return expand_bracket(tree.left).commutator(expand_bracket(tree.right))


def lyndon_index_sequences(content: Mapping[int, int]) -> list[tuple[int, ...]]:
    """
    Palavras de Lyndon com conteúdo exato {índice: multiplicidade}.

    Os índices são os graus dos termos de correção R_j, então a ordem das
    letras é a ordem numérica. Conteúdo que é potência de um único índice
    com multiplicidade > 1 não tem palavra de Lyndon.
    """
    letters: list[int] = []
    for index in sorted(content):
        if content[index] < 0:
            raise UsageError(f"negative multiplicity for R{index}")
        letters.extend([index] * content[index])
    if not letters:
        return []
    return [tuple(p) for p in multiset_permutations(letters) if is_lyndon(p)]


def lyndon_basis_matrix(content: Mapping[int, int]) -> tuple[list[tuple[int, ...]], sympy.Matrix]:
    """
    Matriz B[i][j] = coeficiente da palavra de Lyndon l_j em λ(l_i).

    Com as palavras em ordem lexicográfica crescente a matriz é
    triangular superior com diagonal unitária.
    """
    words = lyndon_index_sequences(content)
    rows = []
    for li in words:
        expansion = expand_bracket(bracketing(li))
        rows.append([expansion.coefficient(lj) for lj in words])
    return words, sympy.Matrix(rows)


def lie_coordinates(content: Mapping[int, int]) -> dict[tuple[int, ...], list[Fraction]]:
    """
    Para cada palavra w do conteúdo, c_w tal que coef_w(P) = Σ_i c_w[i]·β_i.

    P percorre os elementos de Lie desse multigrau e β_i é o coeficiente
    da i-ésima palavra de Lyndon em P.
    """
    words, basis = lyndon_basis_matrix(content)
    if not words:
        return {}
    alpha_of_beta = basis.T.inv()
    expansions = [expand_bracket(bracketing(li)) for li in words]
    letters: list[int] = []
    for index, mult in sorted(content.items()):
        letters.extend([index] * mult)
    coords: dict[tuple[int, ...], list[Fraction]] = {}
    for perm in multiset_permutations(letters):
        w = tuple(perm)
        row = sympy.Matrix([[e.coefficient(w) for e in expansions]]) * alpha_of_beta
        coords[w] = [Fraction(int(x.p), int(x.q)) for x in row]
    return coords
