"""
cosets.py - Funções a/b por estágio e redução módulo C_m e D_m

Propósito:
    Representações "sanduíche" Σ_k Π a_k · p_k^s · Π b_k dos coeficientes
    de esquemas simétricos e a verificação exata de que diferem das formas
    f por elementos dos módulos gerados pelas f de comprimento 1 (C_m) ou
    de comprimentos 1 e 3 (D_m).

Componentes principais:
    - stage_a, stage_b, ab_two_var, ab_multi: funções a_k[...] e b_k[...]
    - sandwich: Σ_k (Π a) p_k^s (Π b)
    - coset_reduce: pertinência exata ao span racional de geradores
    - c_module, d_module: geradores de C_m e D_m
    - mirror_triple_equality, mirror_quintuple_equality: igualdades espelhadas
    - positional_relation, congruence_catalogue, mixed_b_relation,
      beta_report: catálogo de congruências e relatório de posto em β

Dependências críticas:
    - sympy.Matrix.rref: eliminação racional exata

Notas de implementação:
    - a_k[I] multivariável: blocos antes de k pesam 1/t!, o bloco final em
      k (tamanho q >= 0) pesa 1/(2^q q!); b_k[I] é o espelho. Assim
      a_k[i_1]...a_k[i_n] = Σ_σ a_k[i_σ(1), ..., i_σ(n)]
    - f aqui é sempre a forma simétrica
    - Σ a_k[α] a_k[β] a_k[γ] não pertence a C_m em geral, nem o produto de
      cinco a_k a D_m; só as igualdades espelhadas Σ aaa = Σ bbb e
      Σ aaaaa = Σ bbbbb sob p_{r+1-j} = p_j valem sem restrição
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial, prod
from typing import Optional, Sequence, Union

import sympy

from .coeffs import block_sums, compositions, f_simplified
from .errors import DegreeMismatchError, InvalidOrderError, UsageError
from .lyndon import lie_coordinates, lyndon_index_sequences
from .polynomials import ParamPoly

logger = logging.getLogger(__name__)

Factor = Union[int, Sequence[int]]


def _check_stage(k: int, r: int) -> None:
    if not 1 <= k <= r:
        raise UsageError(f"stage k must be in 1..{r}, got {k}")


def stage_a(alpha: int, k: int, r: int) -> ParamPoly:
    """a_k[α] = Σ_{j<k} p_j^α + ½ p_k^α (k 1-based)."""
    return ab_multi("a", k, (alpha,), r)


def stage_b(alpha: int, k: int, r: int) -> ParamPoly:
    """b_k[α] = ½ p_k^α + Σ_{j>k} p_j^α."""
    return ab_multi("b", k, (alpha,), r)


def ab_two_var(kind: str, k: int, alpha: int, beta: int, r: int) -> ParamPoly:
    """
    a_k[α,β] = Σ_{j1<j2<k} p^α p^β + ½ Σ_{j<k} p_j^{α+β}
               + ½ Σ_{j<k} p_j^α p_k^β + ⅛ p_k^{α+β}
    e o espelho b_k[α,β].
    """
    _check_stage(k, r)
    if kind not in ("a", "b"):
        raise UsageError(f"kind must be 'a' or 'b', got {kind!r}")
    acc: dict[tuple[int, ...], Fraction] = Counter()
    here = k - 1
    outer = range(here) if kind == "a" else range(here + 1, r)
    for j1, j2 in combinations(outer, 2):
        e = [0] * r
        e[j1] += alpha
        e[j2] += beta
        acc[tuple(e)] += Fraction(1)
    for j in outer:
        e = [0] * r
        e[j] += alpha + beta
        acc[tuple(e)] += Fraction(1, 2)
        e = [0] * r
        if kind == "a":
            e[j] += alpha
            e[here] += beta
        else:
            e[here] += alpha
            e[j] += beta
        acc[tuple(e)] += Fraction(1, 2)
    e = [0] * r
    e[here] = alpha + beta
    acc[tuple(e)] += Fraction(1, 8)
    return ParamPoly(r, acc)


def ab_multi(kind: str, k: int, indices: Sequence[int], r: int) -> ParamPoly:
    """a_k[i_1..i_n] (blocos antes de k) ou b_k[i_1..i_n] (blocos depois de k)."""
    _check_stage(k, r)
    if kind not in ("a", "b"):
        raise UsageError(f"kind must be 'a' or 'b', got {kind!r}")
    idx = tuple(indices)
    n = len(idx)
    here = k - 1
    acc: dict[tuple[int, ...], Fraction] = Counter()
    for q in range(n + 1):
        if kind == "a":
            free, at_k = idx[: n - q], idx[n - q:]
            outer = list(range(here))
        else:
            at_k, free = idx[:q], idx[q:]
            outer = list(range(here + 1, r))
        at_weight = Fraction(1, 2**q * factorial(q))
        for parts in compositions(len(free)):
            weight = at_weight / prod(factorial(t) for t in parts)
            sums = block_sums(free, parts)
            for stages in combinations(outer, len(parts)):
                e = [0] * r
                for j, s in zip(stages, sums):
                    e[j] += s
                e[here] += sum(at_k)
                acc[tuple(e)] += weight
    return ParamPoly(r, acc)


def _factor_poly(kind: str, factor: Factor, k: int, r: int) -> ParamPoly:
    if isinstance(factor, int):
        return ab_multi(kind, k, (factor,), r)
    return ab_multi(kind, k, tuple(factor), r)


def sandwich(left: Sequence[Factor], s: int, right: Sequence[Factor], r: int) -> ParamPoly:
    """Σ_k Π_{F∈left} a_k[F] · p_k^s · Π_{G∈right} b_k[G]."""
    total = ParamPoly.zero(r)
    for k in range(1, r + 1):
        term = ParamPoly.constant(r, 1)
        for factor in left:
            term = term * _factor_poly("a", factor, k, r)
        if s:
            e = [0] * r
            e[k - 1] = s
            term = term * ParamPoly(r, {tuple(e): 1})
        for factor in right:
            term = term * _factor_poly("b", factor, k, r)
        total = total + term
    return total


@dataclass
class CosetResult:
    """Resultado de coset_reduce: pertinência e uma combinação que a realiza."""

    member: bool
    coordinates: Optional[list[Fraction]] = None
    rank: int = 0


def coset_reduce(target: ParamPoly, generators: Sequence[ParamPoly]) -> CosetResult:
    """
    Decide se target pertence ao span racional dos geradores.

    Todos os polinômios não nulos devem ser homogêneos do mesmo grau.
    As coordenadas devolvidas são uma solução particular (variáveis livres
    em zero).
    """
    degrees = set()
    for poly in (target, *generators):
        if not poly.is_zero():
            if not poly.is_homogeneous():
                raise DegreeMismatchError(f"polynomial is not homogeneous: {poly}")
            degrees |= poly.degrees()
    if len(degrees) > 1:
        raise DegreeMismatchError(f"polynomials of different total degrees: {sorted(degrees)}")
    if not generators:
        return CosetResult(member=target.is_zero(), coordinates=[], rank=0)

    monomials = sorted({e for poly in (target, *generators) for e in poly.as_dict()})
    if not monomials:
        return CosetResult(member=True, coordinates=[Fraction(0)] * len(generators), rank=0)

    def rat(x: Fraction) -> sympy.Rational:
        return sympy.Rational(x.numerator, x.denominator)

    columns = [[rat(c) for c in g.vectors(monomials)] for g in generators]
    rhs = [rat(c) for c in target.vectors(monomials)]
    augmented = sympy.Matrix(
        [[columns[j][i] for j in range(len(generators))] + [rhs[i]] for i in range(len(monomials))]
    )
    reduced, pivots = augmented.rref()
    ncols = len(generators)
    rank = sum(1 for p in pivots if p < ncols)
    if ncols in pivots:
        logger.debug(f"coset_reduce: fora do span (posto {rank})")
        return CosetResult(member=False, coordinates=None, rank=rank)
    coords = [Fraction(0)] * ncols
    for row, col in enumerate(pivots):
        value = reduced[row, ncols]
        coords[col] = Fraction(int(value.p), int(value.q))
    return CosetResult(member=True, coordinates=coords, rank=rank)


def c_module(m: int, r: int) -> list[ParamPoly]:
    """Geradores de C_m: f(m)."""
    return [f_simplified((m,), r, "symmetric")]


def d_module(m: int, r: int) -> list[ParamPoly]:
    """Geradores de D_m: f(m) e f(α,β,γ) para toda composição de m em três partes."""
    gens = c_module(m, r)
    for alpha in range(1, m - 1):
        for beta in range(1, m - alpha):
            gens.append(f_simplified((alpha, beta, m - alpha - beta), r, "symmetric"))
    return gens


def _orderings(factors: Sequence[Factor]) -> list[tuple[int, ...]]:
    """
    Sequências de índices geradas por um lado do sanduíche: um único fator
    multivariável dá só a si mesmo; fatores de uma variável dão todas as
    permutações (com multiplicidade).
    """
    if len(factors) == 1 and not isinstance(factors[0], int):
        return [tuple(factors[0])]
    if any(not isinstance(f, int) for f in factors):
        raise UsageError("mix of multi-variable factors is not supported")
    return [tuple(p) for p in permutations(factors)]  # type: ignore[arg-type]


def positional_expansion(
    left: Sequence[Factor], s: int, right: Sequence[Factor]
) -> Counter:
    """Contagem de cada f(I, s, J) que o sanduíche representa."""
    words: Counter = Counter()
    for lw in _orderings(left) if left else [()]:
        for rw in _orderings(right) if right else [()]:
            words[lw + (s,) + rw] += 1
    return words


@dataclass
class CongruenceCheck:
    """Uma congruência do catálogo e seu veredito."""

    name: str
    description: str
    modulus: str
    holds: bool
    coordinates: Optional[list[Fraction]] = None
    notes: list[str] = field(default_factory=list)


def positional_relation(
    left: Sequence[Factor], s: int, right: Sequence[Factor], r: int, name: str = ""
) -> CongruenceCheck:
    """Σ_k Π a p^s Π b ≡ Σ f(I σ, s, J τ) módulo C_m (n = 3) ou D_m (n = 5)."""
    words = positional_expansion(left, s, right)
    length = len(next(iter(words)))
    m = sum(next(iter(words)))
    target = sandwich(left, s, right, r)
    for word, count in words.items():
        target = target - f_simplified(word, r, "symmetric") * count
    if length <= 3:
        modulus, gens = "C", c_module(m, r)
    else:
        modulus, gens = "D", d_module(m, r)
    result = coset_reduce(target, gens)
    desc = f"sum_k a{list(left)} p^{s} b{list(right)} = sum f (mod {modulus}_{m})"
    return CongruenceCheck(
        name=name or desc,
        description=desc,
        modulus=f"{modulus}_{m}",
        holds=result.member,
        coordinates=result.coordinates,
    )


def _mirror_equality(indices: Sequence[int], r: int, name: str, modulus: str) -> CongruenceCheck:
    m = sum(indices)
    lhs = sandwich(tuple(indices), 0, (), r)
    rhs = sandwich((), 0, tuple(indices), r)
    gens = c_module(m, r) if modulus == "C" else d_module(m, r)
    membership = coset_reduce(lhs, gens)
    letters = "".join(f"a[{i}]" for i in indices)
    return CongruenceCheck(
        name=name,
        description=f"sum_k {letters} = sum_k {letters.replace('a', 'b')} under p_(r+1-j) = p_j",
        modulus="mirror",
        holds=lhs.mirror() == rhs,
        notes=[f"sum {' '.join('a' * len(indices))} in {modulus}_{m}: {membership.member}"],
    )


def mirror_triple_equality(alpha: int, beta: int, gamma: int, r: int) -> CongruenceCheck:
    """Σ_k a_k[α]a_k[β]a_k[γ] = Σ_k b_k[α]b_k[β]b_k[γ] sob p_{r+1-j} = p_j."""
    return _mirror_equality((alpha, beta, gamma), r, "aaa-mirror", "C")


def mirror_quintuple_equality(indices: Sequence[int], r: int) -> CongruenceCheck:
    """Versão com cinco fatores a; a pertença a D_m fica registrada como nota."""
    if len(indices) != 5:
        raise UsageError(f"expected five indices, got {tuple(indices)}")
    return _mirror_equality(indices, r, "aaaaa-mirror", "D")


def congruence_catalogue(m: int, r: int) -> list[CongruenceCheck]:
    """
    Catálogo de congruências de grau m para esquemas simétricos, com um
    representante de cada forma de sanduíche.
    """
    if m < 5:
        raise InvalidOrderError(f"the congruence catalogue needs m >= 5, got {m}")
    checks: list[CongruenceCheck] = []
    a, b, c = 1, m - 2, 1
    checks.append(mirror_triple_equality(a, b, c, r))
    checks.append(positional_relation((a,), b, (c,), r, name="a-p-b"))
    # grau m com cinco índices: 1,1,1,1,m-4 e centros nas posições 5, 4 e 3
    tail = m - 4
    checks.append(mirror_quintuple_equality((1, 1, 1, 1, tail), r))
    checks.append(positional_relation((1, 1, 1, 1), tail, (), r, name="aaaa-p"))
    checks.append(positional_relation((1, 1, 1), tail, (1,), r, name="aaa-p-b"))
    checks.append(positional_relation((1, 1), tail, (1, 1), r, name="aa-p-bb"))
    if m >= 7:
        checks.append(positional_relation((1, 2), m - 6, (1, 2), r, name="aa-p-bb-mixed"))
    return checks


def mixed_b_relation(r: int) -> CongruenceCheck:
    """Σ_k a_k[1]^2 p_k^3 b_k[1,3] ≡ 2 f(1,1,3,1,3) mod D_9."""
    target = sandwich((1, 1), 3, ((1, 3),), r) - f_simplified((1, 1, 3, 1, 3), r, "symmetric") * 2
    result = coset_reduce(target, d_module(9, r))
    return CongruenceCheck(
        name="mixed-b",
        description="sum_k a[1]^2 p^3 b[1,3] = 2 f(1,1,3,1,3) (mod D_9)",
        modulus="D_9",
        holds=result.member,
        coordinates=result.coordinates,
    )


@dataclass
class BetaRow:
    left: tuple
    center: int
    right: tuple
    coordinates: list[Fraction]


def beta_report() -> dict:
    """
    Coordenadas, nas β das palavras de Lyndon de {R1^3, R3^2}, de cada
    representação sanduíche de grau 9 (módulo D_9, supondo as condições
    de ordem inferior satisfeitas).

    β_1 = coeficiente de (1,1,1,3,3), β_2 = de (1,1,3,1,3).
    """
    content = {1: 3, 3: 2}
    basis = lyndon_index_sequences(content)
    coords = lie_coordinates(content)
    letters = [1, 1, 1, 3, 3]
    rows: list[BetaRow] = []
    seen = set()
    for center in (1, 3):
        rest = list(letters)
        rest.remove(center)
        for size in range(len(rest) + 1):
            for chosen in combinations(range(len(rest)), size):
                left = tuple(sorted(rest[i] for i in chosen))
                right = tuple(sorted(rest[i] for i in range(len(rest)) if i not in chosen))
                if (left, center, right) in seen:
                    continue
                seen.add((left, center, right))
                rows.append(_beta_row(left, center, right, coords, len(basis)))
    note = _beta_row((1, 1), 3, ((1, 3),), coords, len(basis))
    only_beta1 = all(row.coordinates[1] == 0 for row in rows)
    return {
        "basis": [list(w) for w in basis],
        "rows": rows,
        "mixed_b_row": note,
        "single_variable_only_beta1": only_beta1,
    }


def _beta_row(left, center, right, coords, dim) -> BetaRow:
    total = [Fraction(0)] * dim
    for word, count in positional_expansion(left, center, right).items():
        for i, c in enumerate(coords[word]):
            total[i] += c * count
    return BetaRow(left=tuple(left), center=center, right=tuple(right), coordinates=total)
