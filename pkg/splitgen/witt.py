"""
witt.py - Fórmulas de Witt e número mínimo de estágios

Propósito:
    Conta palavras de Lyndon (dimensões da álgebra de Lie livre) por
    comprimento e por multigrau, deriva S_min = 1 + Σ_{X_m} M(n) para cada
    esquema e verifica as identidades combinatórias que decorrem de
    contar o mesmo conjunto de duas maneiras.

Componentes principais:
    - mobius, witt_count, witt_multi, witt_multi_prime_form
    - s_min, condition_counts
    - corollary_identity: A4, A6, A7, A8, A9

Dependências críticas:
    - sympy: factorint, divisors, isprime

Exemplo de uso:
    from splitgen.witt import witt_count, witt_multi

    witt_count(2, 6)         # 9
    witt_multi((4, 2, 1))    # 15
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache, reduce
from math import comb, factorial, gcd, prod
from typing import Sequence

import sympy

from .errors import InvalidOrderError, NotPrimeError, UsageError
from .schemes import Scheme

logger = logging.getLogger(__name__)


def mobius(d: int) -> int:
    """μ(d): 0 se d tem fator quadrado, senão (-1)^(número de primos)."""
    if d < 1:
        raise UsageError(f"mobius is defined for d >= 1, got {d}")
    exponents = sympy.factorint(d)
    if any(e > 1 for e in exponents.values()):
        return 0
    return -1 if len(exponents) % 2 else 1


def witt_count(r: int, n: int) -> int:
    """M_r(n) = (1/n) Σ_{d|n} μ(d) r^{n/d}."""
    if r < 1 or n < 1:
        raise UsageError(f"witt_count needs r >= 1 and n >= 1, got r={r}, n={n}")
    total = sum(mobius(d) * r ** (n // d) for d in sympy.divisors(n))
    return total // n


@lru_cache(maxsize=4096)
def _witt_multi(multidegree: tuple[int, ...]) -> int:
    nonzero = [n for n in multidegree if n]
    if not nonzero:
        return 0
    total_n = sum(nonzero)
    common = reduce(gcd, nonzero)
    total = 0
    for d in sympy.divisors(common):
        mu = mobius(d)
        if mu:
            total += mu * factorial(total_n // d) // prod(factorial(n // d) for n in nonzero)
    return total // total_n


def witt_multi(multidegree: Sequence[int]) -> int:
    """M(n_1, ..., n_r): palavras de Lyndon com n_i ocorrências da letra i."""
    if any(n < 0 for n in multidegree):
        raise UsageError(f"multidegree entries must be non-negative: {tuple(multidegree)}")
    return _witt_multi(tuple(int(n) for n in multidegree))


def witt_multi_prime_form(multidegree: Sequence[int]) -> Fraction:
    """(1/N)·N!/Π n_i!; igual a M(n) quando gcd(n) = 1."""
    nonzero = [n for n in multidegree if n]
    if not nonzero:
        return Fraction(0)
    total_n = sum(nonzero)
    return Fraction(factorial(total_n), total_n * prod(factorial(n) for n in nonzero))


def condition_counts(scheme: Scheme, order: int) -> list[tuple[object, int]]:
    """Pares (multiconjunto, M(n)) para cada elemento de X_m."""
    from .conditions import condition_multisets

    return [(c, witt_multi(c.multiplicities)) for c in condition_multisets(scheme, order)]


def s_min(scheme: Scheme, order: int) -> int:
    """Número mínimo de estágios: 1 + Σ_{X_m} M(n_1, n_2, ...)."""
    total = 1 + sum(count for _, count in condition_counts(scheme, order))
    logger.info(f"S_min({scheme}, {order}) = {total}")
    return total


def _weighted_multidegrees(total: int, weights: Sequence[int]) -> list[tuple[int, ...]]:
    """Todos os (n_1, ..., n_k) com Σ weights[i]·n_i = total."""
    out: list[tuple[int, ...]] = []

    def walk(i: int, remaining: int, acc: list[int]) -> None:
        if i == len(weights):
            if remaining == 0:
                out.append(tuple(acc))
            return
        for n in range(remaining // weights[i] + 1):
            acc.append(n)
            walk(i + 1, remaining - n * weights[i], acc)
            acc.pop()

    walk(0, total, [])
    return out


def corollary_identity(
    kind: str,
    m: int,
    k: int = 1,
    weights: Sequence[int] = (1, 2),
) -> tuple[int, int] | tuple[Fraction, Fraction]:
    """
    Avalia os dois lados de uma identidade de contagem.

    kind:
        A4: Σ_{Σ(1+(l-1)k)n_l = m} M(n) = Σ_{j=1}^{⌊m/k⌋} M(m-kj, j)
        A6: Σ_{Σ l·n_l = m} M(n) = M_2(m)
        A7: Σ_{Σ(2l-1)n_l = m} M(n) = Σ_{j=1}^{⌊m/2⌋} M(m-2j, j)
        A8: m primo; Σ_{Σ k_i n_i = m} M(n) = Σ (1/N)·N!/Π n_i!, sem
            multigraus de uma única letra
        A9: m primo; Σ_{j=1}^{⌊m/2⌋} M(m-2j, j) = Σ_j C(m-j, j)/(m-j)

    A4 e A7 valem para m >= 2 com m != k: em m = k o lado direito conta a
    palavra de uma letra só de grau k. Os lados são devolvidos literalmente.
    """
    kind = kind.upper()
    if m < 1:
        raise InvalidOrderError(f"m must be >= 1, got {m}")
    if kind == "A4":
        if k < 1:
            raise UsageError(f"k must be >= 1, got {k}")
        ws = list(range(1, m + 1, k))
        lhs = sum(witt_multi(n) for n in _weighted_multidegrees(m, ws))
        rhs = sum(witt_multi((m - k * j, j)) for j in range(1, m // k + 1))
        return lhs, rhs
    if kind == "A6":
        lhs = sum(witt_multi(n) for n in _weighted_multidegrees(m, range(1, m + 1)))
        return lhs, witt_count(2, m)
    if kind == "A7":
        lhs = sum(witt_multi(n) for n in _weighted_multidegrees(m, range(1, m + 1, 2)))
        rhs = sum(witt_multi((m - 2 * j, j)) for j in range(1, m // 2 + 1))
        return lhs, rhs
    if kind in ("A8", "A9") and not sympy.isprime(m):
        raise NotPrimeError(f"{kind} needs a prime order, got {m}")
    if kind == "A8":
        # potências de uma só letra (M = 0) ficam de fora dos dois lados
        tuples = [n for n in _weighted_multidegrees(m, weights) if sum(1 for x in n if x) > 1]
        lhs_f = Fraction(sum(witt_multi(n) for n in tuples))
        rhs_f = sum((witt_multi_prime_form(n) for n in tuples), Fraction(0))
        return lhs_f, rhs_f
    if kind == "A9":
        lhs = sum(witt_multi((m - 2 * j, j)) for j in range(1, m // 2 + 1))
        rhs_f = sum((Fraction(comb(m - j, j), m - j) for j in range(1, m // 2 + 1)), Fraction(0))
        if rhs_f.denominator != 1:
            raise ArithmeticError(f"A9 right-hand side is not an integer for m={m}: {rhs_f}")
        return lhs, int(rhs_f)
    raise UsageError(f"unknown corollary kind {kind!r}; expected A4, A6, A7, A8 or A9")
