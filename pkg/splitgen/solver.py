"""
solver.py - Sistemas determinantes e Newton amortecido

Propósito:
    Monta o sistema {Σ p_j = 1} ∪ {coef(idx) = 0 : idx determinante} para
    um esquema, ordem e número de estágios, com empates opcionais entre
    parâmetros, e resolve por Newton a partir de um chute inicial.

Componentes principais:
    - Equation, DeterminingSystem: sistema exato (ParamPoly)
    - build_system: condições + empates simétricos/extras
    - residual: valores de todas as equações num vetor p completo
    - solve_newton → NewtonResult (candidato, iterações, norma, chute)
    - solve_multistart: Newton a partir de chutes aleatórios com semente

Dependências críticas:
    - numpy: Jacobiano, solve/lstsq, matrix_rank

Exemplo de uso:
    system = build_system(Scheme.parse("symmetric"), 3, 3)
    result = solve_newton(system, [1.3, -1.6, 1.3])

Notas de implementação:
    - Esquemas simétricos recebem os empates p_{r+1-j} = p_j; os demais
      só com palindromic=True
    - Ordem par em esquema simétrico é normalizada para 2k-1
    - Passo de Newton é reduzido à metade até a norma do resíduo cair
      (no máximo 30 vezes); falha levanta ConvergenceError com o último
      iterado
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .coeffs import coefficient
from .conditions import determining_indices
from .errors import (
    ConvergenceError,
    DimensionMismatchError,
    SingularJacobianError,
    UsageError,
)
from .polynomials import ParamPoly
from .schemes import Scheme, SchemeKind

logger = logging.getLogger(__name__)

NEWTON_TOLERANCE = 1e-12
NEWTON_MAX_ITERATIONS = 50
NEWTON_MAX_HALVINGS = 30
MULTISTART_ATTEMPTS = 16
RANDOM_START_RADIUS = 2.0


@dataclass(frozen=True)
class Equation:
    """Uma equação polinomial; label é o índice de Lyndon ou "norm"."""

    label: str
    poly: ParamPoly
    indices: Optional[tuple[int, ...]] = None


@dataclass
class DeterminingSystem:
    scheme: Scheme
    order: int
    stages: int
    equations: list[Equation]
    ties: list[list[int]] = field(default_factory=list)
    simplified: bool = False

    @property
    def normalization(self) -> Equation:
        return self.equations[0]

    @property
    def conditions(self) -> list[Equation]:
        return self.equations[1:]

    @property
    def free_count(self) -> int:
        return len(self.ties)

    def representatives(self) -> list[int]:
        return [group[0] for group in self.ties]

    def reduced_polys(self) -> list[ParamPoly]:
        """Equações nas variáveis livres (uma por grupo de empate)."""
        return [eq.poly.substitute_ties(self.ties) for eq in self.equations]

    def expand(self, free_values: Sequence) -> list:
        """Vetor p completo a partir dos valores livres."""
        full = [None] * self.stages
        for value, group in zip(free_values, self.ties):
            for j in group:
                full[j] = value
        return full


@dataclass
class CompositionCandidate:
    scheme: Scheme
    values: tuple

    @property
    def stages(self) -> int:
        return len(self.values)


@dataclass
class NewtonResult:
    candidate: CompositionCandidate
    iterations: int
    residual_norm: float
    initial: Optional[tuple] = None


def _merge_ties(stages: int, groups: Sequence[Sequence[int]]) -> list[list[int]]:
    """Fecho transitivo dos grupos de empate (0-based) sobre range(stages)."""
    parent = list(range(stages))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for group in groups:
        members = list(group)
        for j in members:
            if not 0 <= j < stages:
                raise DimensionMismatchError(f"tie refers to p{j + 1} but r = {stages}")
        for j in members[1:]:
            parent[find(j)] = find(members[0])
    classes: dict[int, list[int]] = {}
    for j in range(stages):
        classes.setdefault(find(j), []).append(j)
    return sorted(classes.values())


def build_system(
    scheme: Scheme,
    order: int,
    stages: int,
    extra_ties: Sequence[Sequence[int]] = (),
    simplified: bool = False,
    palindromic: bool = False,
) -> DeterminingSystem:
    """
    Sistema determinante. extra_ties usa estágios 1-based, ex.: [[1, 2]]
    para impor p_1 = p_2. palindromic impõe p_{r+1-j} = p_j em qualquer
    esquema (os simétricos já o fazem sempre).
    """
    if stages < 1:
        raise DimensionMismatchError(f"stages must be >= 1, got {stages}")
    normalized = scheme.normalize_order(order)
    if normalized != order:
        logger.info(f"{scheme}: ordem {order} normalizada para {normalized}")
    order = normalized

    groups: list[list[int]] = [[j - 1 for j in g] for g in extra_ties]
    if scheme.is_symmetric or palindromic:
        groups.extend([j, stages - 1 - j] for j in range(stages // 2))
    ties = _merge_ties(stages, groups)

    norm = sum(
        (ParamPoly.variable(stages, j) for j in range(stages)), ParamPoly.zero(stages)
    ) - 1
    equations = [Equation("norm", norm)]
    for idx in determining_indices(scheme, order):
        poly = coefficient(idx, stages, scheme, simplified=simplified)
        label = "g(" + ",".join(map(str, idx)) + ")"
        equations.append(Equation(label, poly, idx))
    logger.info(
        f"build_system({scheme}, m={order}, r={stages}): "
        f"{len(equations)} equações, {len(ties)} variáveis livres"
    )
    return DeterminingSystem(scheme, order, stages, equations, ties, simplified)


def residual(system: DeterminingSystem, values: Sequence) -> list:
    """Valores de todas as equações (normalização primeiro) em p = values."""
    if len(values) != system.stages:
        raise DimensionMismatchError(
            f"expected {system.stages} values, got {len(values)}"
        )
    return [eq.poly.evaluate(list(values)) for eq in system.equations]


def _free_initial(system: DeterminingSystem, initial: Sequence) -> np.ndarray:
    if len(initial) == system.stages:
        chosen = [initial[j] for j in system.representatives()]
    elif len(initial) == system.free_count:
        chosen = list(initial)
    else:
        raise DimensionMismatchError(
            f"initial guess needs {system.stages} (full) or {system.free_count} (free) "
            f"values, got {len(initial)}"
        )
    dtype = complex if any(isinstance(v, complex) for v in chosen) else float
    return np.array(chosen, dtype=dtype)


def solve_newton(
    system: DeterminingSystem,
    initial: Sequence,
    tol: float = NEWTON_TOLERANCE,
    max_iter: int = NEWTON_MAX_ITERATIONS,
) -> NewtonResult:
    """
    Newton amortecido nas variáveis livres. Sistemas quadrados usam
    numpy.linalg.solve; sobredeterminados, mínimos quadrados.
    """
    polys = system.reduced_polys()
    nfree = system.free_count
    jac_polys = [[p.derivative(i) for i in range(nfree)] for p in polys]

    def F(x: np.ndarray) -> np.ndarray:
        return np.array([p.evaluate(list(x)) for p in polys], dtype=x.dtype)

    def J(x: np.ndarray) -> np.ndarray:
        return np.array([[d.evaluate(list(x)) for d in row] for row in jac_polys], dtype=x.dtype)

    x = _free_initial(system, initial)
    start = tuple(system.expand(x.tolist()))
    fx = F(x)
    norm = float(np.linalg.norm(fx))
    iterations = 0
    while float(np.max(np.abs(fx))) >= tol:
        if iterations >= max_iter:
            raise ConvergenceError(
                f"no convergence after {max_iter} iterations (|F| = {norm:.3e})",
                system.expand(x.tolist()),
            )
        jac = J(x)
        if np.linalg.matrix_rank(jac) < nfree:
            raise SingularJacobianError(
                f"singular Jacobian at iteration {iterations}", system.expand(x.tolist())
            )
        if len(polys) == nfree:
            step = np.linalg.solve(jac, -fx)
        else:
            step = np.linalg.lstsq(jac, -fx, rcond=None)[0]
        scale = 1.0
        for _ in range(NEWTON_MAX_HALVINGS + 1):
            trial = x + scale * step
            f_trial = F(trial)
            trial_norm = float(np.linalg.norm(f_trial))
            if np.isfinite(trial_norm) and trial_norm < norm:
                break
            scale /= 2
        else:
            raise ConvergenceError(
                f"step halving failed at iteration {iterations} (|F| = {norm:.3e})",
                system.expand(x.tolist()),
            )
        x, fx, norm = trial, f_trial, trial_norm
        iterations += 1
        logger.debug(f"newton it={iterations} |F|={norm:.3e} passo={scale}")

    values = tuple(system.expand(x.tolist()))
    logger.info(f"Newton convergiu em {iterations} iterações, |F| = {norm:.3e}")
    return NewtonResult(CompositionCandidate(system.scheme, values), iterations, norm, start)


def random_initial(system: DeterminingSystem, rng: np.random.Generator) -> np.ndarray:
    """
    Chute livre uniforme em [-2, 2]. O esquema não simétrico admite p
    complexos, então ganha também parte imaginária.
    """
    n = system.free_count
    values = rng.uniform(-RANDOM_START_RADIUS, RANDOM_START_RADIUS, n)
    if system.scheme.kind is SchemeKind.NONSYMMETRIC:
        return values + 1j * rng.uniform(-RANDOM_START_RADIUS, RANDOM_START_RADIUS, n)
    return values


def solve_multistart(
    system: DeterminingSystem,
    seed: int = 0,
    attempts: int = MULTISTART_ATTEMPTS,
    tol: float = NEWTON_TOLERANCE,
    max_iter: int = NEWTON_MAX_ITERATIONS,
) -> NewtonResult:
    """Newton a partir de chutes aleatórios reprodutíveis; devolve o primeiro que converge."""
    if attempts < 1:
        raise UsageError(f"attempts must be >= 1, got {attempts}")
    rng = np.random.default_rng(seed)
    failure: Optional[ConvergenceError] = None
    for attempt in range(1, attempts + 1):
        start = random_initial(system, rng)
        try:
            result = solve_newton(system, start.tolist(), tol=tol, max_iter=max_iter)
        except ConvergenceError as e:
            logger.debug(f"tentativa {attempt}/{attempts} falhou: {e}")
            failure = e
            continue
        logger.info(f"solve_multistart: convergiu na tentativa {attempt} (semente {seed})")
        return result
    raise ConvergenceError(
        f"no convergence from {attempts} random starts (seed {seed})",
        failure.last_iterate if failure else None,
    )
