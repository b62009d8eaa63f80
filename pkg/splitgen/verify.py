"""
verify.py - Verificação exata e numérica de ordem

Propósito:
    Confere se um produto de exponenciais e^{t_1 x A_{i_1}} ... reproduz
    e^{x(A_1 + ... + A_q)} até uma ordem: exatamente, pela série truncada
    na álgebra associativa livre; numericamente, pelo declive log-log do
    erro em matrizes aleatórias.

Componentes principais:
    - LadderStep: um fator e^{t x op}
    - lower_to_ladder: candidato de esquema → ladder de fatores
    - TruncatedSeries / expand_product: expansão até um grau
    - verify_order_exact → OrderReport; verify_order_numeric → NumericFit

Dependências críticas:
    - numpy: matrizes aleatórias com SeedSequence, polyfit
    - scipy.linalg.expm: exponencial de matriz densa

Notas de implementação:
    - Coeficientes Fraction são comparados exatamente; float/complex com
      tolerância 1e-12
    - Expansão limitada a grau 8
    - Fatores adjacentes com o mesmo operador são fundidos
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence, Union

import numpy as np
from scipy.linalg import expm

from .algebra import WordPoly
from .errors import CostGuardError, InvalidOrderError, NumericVerificationError, UsageError
from .schemes import SchemeKind
from .solver import CompositionCandidate

logger = logging.getLogger(__name__)

Scalar = Union[Fraction, float, complex]

MAX_EXPANSION_GRADE = 8
COEFFICIENT_TOLERANCE = 1e-12
DEFAULT_X_LADDER = tuple(2.0**-k for k in range(3, 8))
DEFAULT_DIMENSION = 4
MIN_TRIALS = 3
MIN_SLOPE_MARGIN = 0.6


@dataclass(frozen=True)
class LadderStep:
    op: str
    t: Scalar

    @classmethod
    def of(cls, op: str, t: Union[int, Scalar]) -> LadderStep:
        return cls(op, Fraction(t) if isinstance(t, int) else t)


Ladder = list[LadderStep]


def _merge(steps: Sequence[LadderStep]) -> Ladder:
    out: Ladder = []
    for step in steps:
        if out and out[-1].op == step.op:
            out[-1] = LadderStep(step.op, out[-1].t + step.t)
        else:
            out.append(step)
    return [s for s in out if s.t != 0]


def lower_to_ladder(
    candidate: CompositionCandidate,
    base: Optional[Sequence[LadderStep]] = None,
) -> Ladder:
    """
    Ladder de fatores para Q(p_1 x)...Q(p_r x).

    Q é e^{A}e^{B} (nonsymmetric, tilde), e^{A/2}e^{B}e^{A/2} (symmetric)
    ou a ladder `base` fornecida (variantes recursivas). Para tilde e
    recursive-tilde, estágios pares usam a reversão Q~(x) = Q(-x)^{-1}.
    """
    kind = candidate.scheme.kind
    if base is not None:
        unit = list(base)
    elif kind in (SchemeKind.NONSYMMETRIC, SchemeKind.TILDE):
        unit = [LadderStep.of("A", 1), LadderStep.of("B", 1)]
    elif kind is SchemeKind.SYMMETRIC:
        unit = [
            LadderStep("A", Fraction(1, 2)),
            LadderStep.of("B", 1),
            LadderStep("A", Fraction(1, 2)),
        ]
    else:
        raise UsageError(f"{candidate.scheme} needs an explicit base ladder")
    steps: Ladder = []
    for j, p in enumerate(candidate.values):
        pj = Fraction(p) if isinstance(p, int) else p
        stage = unit[::-1] if candidate.scheme.is_tilde and j % 2 == 1 else unit
        steps.extend(LadderStep(s.op, s.t * pj) for s in stage)
    return _merge(steps)


def _alphabet(ladder: Sequence[LadderStep]) -> list[str]:
    return sorted({s.op for s in ladder})


@dataclass
class TruncatedSeries:
    """Série na álgebra livre sobre `symbols`, até max_grade (inclusive)."""

    symbols: list[str]
    max_grade: int
    poly: WordPoly

    def grade(self, g: int) -> WordPoly:
        return self.poly.part(g)

    def coefficient(self, word: str) -> Scalar:
        index = {s: i for i, s in enumerate(self.symbols)}
        return self.poly.coefficient(tuple(index[c] for c in word))


def expand_product(ladder: Sequence[LadderStep], max_grade: int) -> TruncatedSeries:
    """Π_i exp(t_i · op_i) truncado no grau max_grade (x absorvido nos t)."""
    if max_grade > MAX_EXPANSION_GRADE:
        raise CostGuardError(f"expansion limited to grade {MAX_EXPANSION_GRADE}, got {max_grade}")
    symbols = _alphabet(ladder)
    index = {s: i for i, s in enumerate(symbols)}
    terms: dict[tuple[int, ...], Scalar] = {(): Fraction(1)}
    for step in ladder:
        letter = index[step.op]
        acc: dict[tuple[int, ...], Scalar] = defaultdict(int)
        for word, c in terms.items():
            power: Scalar = Fraction(1)
            for k in range(max_grade - len(word) + 1):
                acc[word + (letter,) * k] += c * power * Fraction(1, factorial(k))
                power = power * step.t
        terms = acc
    return TruncatedSeries(symbols, max_grade, WordPoly(terms))


def _target(symbols: Sequence[str], max_grade: int) -> WordPoly:
    """e^{A_1 + ... + A_q}: toda palavra de comprimento k tem coeficiente 1/k!."""
    q = len(symbols)
    terms: dict[tuple[int, ...], Fraction] = {(): Fraction(1)}
    frontier = [()]
    for k in range(1, max_grade + 1):
        frontier = [w + (i,) for w in frontier for i in range(q)]
        for w in frontier:
            terms[w] = Fraction(1, factorial(k))
    return WordPoly(terms)


def _nonzero(c: Scalar, tol: float) -> bool:
    if isinstance(c, (int, Fraction)):
        return c != 0
    return abs(c) > tol


@dataclass
class OrderReport:
    ok: bool
    order: int
    first_defect_grade: Optional[int]
    defect: WordPoly = field(default_factory=WordPoly)
    symbols: list[str] = field(default_factory=list)

    def render_defect(self) -> str:
        return self.defect.render(self.symbols)


def verify_order_exact(
    ladder: Sequence[LadderStep],
    order: int,
    tol: float = COEFFICIENT_TOLERANCE,
    search_to: Optional[int] = None,
) -> OrderReport:
    """
    Compara Π exp(t_i op_i) com exp(Σ op) grau a grau. ok quando os graus
    1..order coincidem; o primeiro grau com defeito é procurado até
    search_to (padrão order + 2, limitado a 8).
    """
    if order < 1:
        raise InvalidOrderError(f"order must be >= 1, got {order}")
    top = min(search_to if search_to is not None else order + 2, MAX_EXPANSION_GRADE)
    top = max(top, order)
    series = expand_product(ladder, top)
    target = _target(series.symbols, top)
    difference = series.poly - target
    first: Optional[int] = None
    defect = WordPoly()
    for g in range(1, top + 1):
        part = difference.part(g)
        kept = WordPoly({w: c for w, c in part.items() if _nonzero(c, tol)})
        if kept:
            first, defect = g, kept
            break
    ok = first is None or first > order
    logger.info(f"verify_order_exact: ordem {order} ok={ok}, primeiro defeito={first}")
    return OrderReport(ok, order, first, defect, series.symbols)


@dataclass
class NumericFit:
    slope: float
    slopes: list[float]
    xs: list[float]
    errors: list[list[float]]
    order: Optional[int] = None

    def consistent_with(self, order: int, tolerance: float = 0.4) -> bool:
        return abs(self.slope - (order + 1)) <= tolerance

    @property
    def reaches_order(self) -> Optional[bool]:
        """Declive ≥ m + 0.6 para a ordem pedida; None sem ordem."""
        if self.order is None:
            return None
        return self.slope >= self.order + MIN_SLOPE_MARGIN


def _product_matrix(ladder: Sequence[LadderStep], matrices: dict[str, np.ndarray], x: float) -> np.ndarray:
    dim = next(iter(matrices.values())).shape[0]
    result = np.eye(dim, dtype=complex)
    for step in ladder:
        result = result @ expm(complex(step.t) * x * matrices[step.op])
    return result


def verify_order_numeric(
    ladder: Sequence[LadderStep],
    order: Optional[int] = None,
    trials: int = MIN_TRIALS,
    seed: int = 0,
    dim: int = DEFAULT_DIMENSION,
    xs: Sequence[float] = DEFAULT_X_LADDER,
) -> NumericFit:
    """
    Declive de log‖F(x) - e^{x Σ op}‖_F contra log x, médio sobre matrizes
    aleatórias (normal padrão / sqrt(dim)). Um método de ordem m dá ≈ m+1.
    Com order, o resultado diz também se o declive alcança m + 0.6.
    """
    if trials < MIN_TRIALS:
        raise UsageError(f"need trials >= {MIN_TRIALS}, got {trials}")
    if order is not None and order < 1:
        raise UsageError(f"order must be >= 1, got {order}")
    if dim < 1 or len(xs) < 2:
        raise UsageError("need dim >= 1 and at least two x values")
    symbols = _alphabet(ladder)
    children = np.random.SeedSequence(seed).spawn(trials)
    slopes: list[float] = []
    all_errors: list[list[float]] = []
    for child in children:
        rng = np.random.default_rng(child)
        matrices = {s: rng.standard_normal((dim, dim)) / np.sqrt(dim) for s in symbols}
        total = sum(matrices.values())
        errors = []
        for x in xs:
            err = np.linalg.norm(_product_matrix(ladder, matrices, x) - expm(x * total), "fro")
            errors.append(float(err))
        if any(e == 0 or not np.isfinite(e) for e in errors):
            raise NumericVerificationError(f"degenerate error sequence: {errors}")
        slope = float(np.polyfit(np.log(xs), np.log(errors), 1)[0])
        slopes.append(slope)
        all_errors.append(errors)
        logger.debug(f"trial slope={slope:.3f}")
    mean = float(np.mean(slopes))
    logger.info(f"verify_order_numeric: declive médio {mean:.3f} em {trials} ensaios")
    return NumericFit(mean, slopes, list(xs), all_errors, order)
