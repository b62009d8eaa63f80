"""
coeffs.py - Coeficientes g, g~ e f das equações determinantes

Propósito:
    Polinômios exatos nos p_j que são os coeficientes das palavras de
    índices (i_1, ..., i_n) na expansão do produto Q(p_1 x)...Q(p_r x).

Componentes principais:
    - compositions, block_sums: composições t de n e somas por bloco
    - g_plain: Σ_t (1/Πt!) Σ_{k_1<...<k_α} Π p_{k_j}^{bloco j}
    - g_tilde: idem com sinal (-1)^{Σ (k_j-1)(bloco_j - t_j)}
    - f_simplified: forma recursiva (f = g - Σ f dos blocos) por família
    - ps_oracle: coeficientes lidos de uma expansão por força bruta
    - normal_ordered_form: produto normal-ordenado com regra de seleção

Dependências críticas:
    - fractions.Fraction, polynomials.ParamPoly
    - cache.coefficient_cache: memo da recursão

Exemplo de uso:
    from splitgen.coeffs import g_plain

    g_plain((1, 2), r=2)   # p1^3/2 + p1*p2^2 + p2^3/2

Notas de implementação:
    - Estágios k são 0-based internamente; o sinal de g~ usa k 1-based
    - f só é definido para as famílias complex, tilde e symmetric; as
      variantes recursivas herdam a família da base
"""

from __future__ import annotations

import logging
from collections import defaultdict
from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial, prod
from typing import Iterator, Sequence, Union

from .cache import coefficient_cache
from .conditions import ConditionMultiset
from .errors import CostGuardError, UsageError
from .polynomials import ParamPoly
from .schemes import Scheme, SchemeKind

logger = logging.getLogger(__name__)

IndexSequence = tuple[int, ...]
CompositionOfN = tuple[int, ...]

ORACLE_MAX_FACTORS = 6
ORACLE_MAX_STAGES = 4

_FAMILY_OF_KIND = {
    SchemeKind.NONSYMMETRIC: "complex",
    SchemeKind.RECURSIVE: "complex",
    SchemeKind.TILDE: "tilde",
    SchemeKind.RECURSIVE_TILDE: "tilde",
    SchemeKind.SYMMETRIC: "symmetric",
    SchemeKind.RECURSIVE_SYMMETRIC: "symmetric",
}


def family_of(scheme: Union[Scheme, str]) -> str:
    """complex, tilde ou symmetric."""
    if isinstance(scheme, Scheme):
        return _FAMILY_OF_KIND[scheme.kind]
    if scheme in ("complex", "tilde", "symmetric"):
        return scheme
    return _FAMILY_OF_KIND[Scheme.parse(scheme).kind]


def compositions(n: int) -> Iterator[CompositionOfN]:
    """Todas as composições ordenadas de n (n = 0 dá a composição vazia)."""
    if n == 0:
        yield ()
        return
    for cuts in range(n):
        for positions in combinations(range(1, n), cuts):
            bounds = (0,) + positions + (n,)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def block_sums(indices: Sequence[int], parts: CompositionOfN) -> tuple[int, ...]:
    out, start = [], 0
    for t in parts:
        out.append(sum(indices[start:start + t]))
        start += t
    return tuple(out)


def _validate(indices: Sequence[int], r: int) -> IndexSequence:
    idx = tuple(int(i) for i in indices)
    if not idx:
        raise UsageError("index sequence must not be empty")
    if any(i < 1 for i in idx):
        raise UsageError(f"indices must be positive: {idx}")
    if r < 1:
        raise UsageError(f"r must be >= 1, got {r}")
    return idx


def _g(idx: IndexSequence, r: int, alternating: bool) -> ParamPoly:
    acc: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    for parts in compositions(len(idx)):
        if len(parts) > r:
            continue
        weight = Fraction(1, prod(factorial(t) for t in parts))
        sums = block_sums(idx, parts)
        for stages in combinations(range(r), len(parts)):
            exps = [0] * r
            negative = False
            for k, s, t in zip(stages, sums, parts):
                exps[k] += s
                if alternating and (k * (s - t)) % 2:
                    negative = not negative
            acc[tuple(exps)] += -weight if negative else weight
    return ParamPoly(r, acc)


def g_plain(indices: Sequence[int], r: int) -> ParamPoly:
    """Coeficiente de R_{i_1}...R_{i_n} no produto com R_{jn} = R_n."""
    idx = _validate(indices, r)
    key = ("g", idx, r)
    cached = coefficient_cache.get(key)
    if cached is None:
        cached = _g(idx, r, alternating=False)
        coefficient_cache.put(key, cached)
    return cached


def g_tilde(indices: Sequence[int], r: int) -> ParamPoly:
    """Coeficiente no produto alternado F_1, F~_1, F_1, ... (R_{jn} = (-1)^{(j-1)(n-1)} R_n)."""
    idx = _validate(indices, r)
    key = ("g~", idx, r)
    cached = coefficient_cache.get(key)
    if cached is None:
        cached = _g(idx, r, alternating=True)
        coefficient_cache.put(key, cached)
    return cached


def _subtracted(parts: CompositionOfN, n: int, family: str) -> bool:
    """Composições cujo termo f(blocos)/Πt! é subtraído de g."""
    alpha = len(parts)
    if alpha >= n:
        return False
    if family == "complex":
        return True
    if any(t % 2 == 0 for t in parts):
        return False
    if family == "symmetric":
        return alpha % 2 == 1
    return True


def f_simplified(indices: Sequence[int], r: int, scheme: Union[Scheme, str] = "complex") -> ParamPoly:
    """
    Forma simplificada f: g menos as contribuições de comprimento menor.

    complex: todas as composições com α ≤ n-1;
    tilde: t_i ímpares, α ≡ n (mod 2), α ≤ n-2;
    symmetric: t_i ímpares, α ímpar, α ≤ n-2.
    """
    idx = _validate(indices, r)
    family = family_of(scheme)
    key = ("f", family, idx, r)
    cached = coefficient_cache.get(key)
    if cached is not None:
        return cached
    result = g_tilde(idx, r) if family == "tilde" else g_plain(idx, r)
    for parts in compositions(len(idx)):
        if _subtracted(parts, len(idx), family):
            weight = Fraction(1, prod(factorial(t) for t in parts))
            result = result - f_simplified(block_sums(idx, parts), r, family) * weight
    coefficient_cache.put(key, result)
    return result


def coefficient(indices: Sequence[int], r: int, scheme: Union[Scheme, str], simplified: bool = False) -> ParamPoly:
    """Coeficiente de equação para o esquema: g (ou f) com a regra de sinal do esquema."""
    if simplified:
        return f_simplified(indices, r, scheme)
    return g_tilde(indices, r) if family_of(scheme) == "tilde" else g_plain(indices, r)


def ps_oracle(
    content: ConditionMultiset,
    r: int,
    alternating: bool = False,
) -> dict[IndexSequence, ParamPoly]:
    """
    Coeficientes de todas as palavras com o conteúdo dado, lidos da
    expansão direta de Π_j exp(p_j x (H + Σ_n p_j^{n-1} x^{n-1} R_{jn})).

    Cada fator R_n escolhe um estágio; fatores no mesmo estágio vêm do
    mesmo exp e contribuem a média de suas ordenações (peso 1/t! por
    ordenação). Fatores com o mesmo grau são indistinguíveis: divide-se
    por Π n_j!.
    """
    grades = content.grades
    n = len(grades)
    if n > ORACLE_MAX_FACTORS or r > ORACLE_MAX_STAGES:
        raise CostGuardError(
            f"oracle limited to n <= {ORACLE_MAX_FACTORS}, r <= {ORACLE_MAX_STAGES} "
            f"(got n={n}, r={r})"
        )
    acc: dict[IndexSequence, dict[tuple[int, ...], Fraction]] = defaultdict(
        lambda: defaultdict(Fraction)
    )
    for stages in product(range(r), repeat=n):
        order = sorted(range(n), key=lambda i: stages[i])
        exps = [0] * r
        negative = False
        for i in range(n):
            exps[stages[i]] += grades[i]
            if alternating and (stages[i] * (grades[i] - 1)) % 2:
                negative = not negative
        blocks: list[list[int]] = []
        for i in order:
            if blocks and stages[blocks[-1][0]] == stages[i]:
                blocks[-1].append(i)
            else:
                blocks.append([i])
        weight = Fraction(1, prod(factorial(len(b)) for b in blocks))
        if negative:
            weight = -weight
        for choice in product(*(list(permutations(b)) for b in blocks)):
            word = tuple(grades[i] for block in choice for i in block)
            acc[word][tuple(exps)] += weight
    norm = prod(factorial(mult) for mult in content.multiplicities)
    out = {}
    for word, terms in acc.items():
        poly = ParamPoly(r, terms) * Fraction(1, norm)
        if not poly.is_zero():
            out[word] = poly
    logger.debug(f"ps_oracle({content}, r={r}): {len(out)} palavras")
    return out


def normal_ordered_form(indices: Sequence[int], r: int, alternating: bool = False) -> ParamPoly:
    """
    Produto normal-ordenado: o fator j (1-based) oferece 1 (exceto j = 1)
    ou o termo p^{i_j+...+i_{j+s-1}}/s!. Cada i_j deve aparecer exatamente
    uma vez e os estágios dos fatores escolhidos crescem.
    """
    idx = _validate(indices, r)
    n = len(idx)
    total = sum(idx)
    acc: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    ranges = [range(1, n + 1)] + [range(0, n - j + 1) for j in range(1, n)]
    for choice in product(*ranges):
        blocks: list[tuple[int, int]] = []
        covered = 0
        valid = True
        for j, s in enumerate(choice):
            if s:
                if j != covered:
                    valid = False
                    break
                blocks.append((j, s))
                covered = j + s
            elif j >= covered:
                valid = False
                break
        if not valid or covered != n or len(blocks) > r:
            continue
        weight = Fraction(1, prod(factorial(s) for _, s in blocks))
        sums = [sum(idx[j:j + s]) for j, s in blocks]
        for stages in combinations(range(r), len(blocks)):
            exps = [0] * r
            sign = 1
            for k, bsum, (_, s) in zip(stages, sums, blocks):
                exps[k] += bsum
                if alternating and ((bsum - s) * (k + 1)) % 2:
                    sign = -sign
            acc[tuple(exps)] += sign * weight
    poly = ParamPoly(r, acc)
    if alternating and (total - n) % 2:
        poly = -poly
    return poly
