"""
reports.py - Handlers de comando da CLI

Propósito:
    Cada subcomando da CLI tem aqui um handler que faz o trabalho e
    devolve um dict serializável. Nenhuma exceção escapa: o resultado é
    {"success": True, ...} ou {"success": False, "error": ..., "kind": ...}.

Comandos:
    count       → S_min e contagens de Witt por multiconjunto
    conditions  → índices determinantes agrupados por ordem
    equations   → sistema determinante (opcionalmente exportado em JSON)
    solve       → Newton a partir de um chute inicial
    verify      → verificação exata e numérica de um ladder ou candidato
    lyndon      → palavras de Lyndon, colchetes e expansões
    identities  → corolários de Witt e catálogo de congruências

Notas de implementação:
    - kind "usage": erro de validação do pacote, isto é, SplitgenError
      que também é ValueError (código de saída 1)
    - kind "computation": falha numérica ou de custo, inclusive
      ValueError vindo do numpy como LinAlgError (código de saída 2)
"""

from __future__ import annotations

import functools
import json
import logging
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

import sympy

from .conditions import indices_by_order
from .converters import (
    ladder_to_json,
    load_export,
    load_ladder,
    parse_values,
    scalar_to_json,
    system_to_export,
    to_jsonable,
)
from .cosets import beta_report, congruence_catalogue, mixed_b_relation
from .errors import ConvergenceError, InvalidOrderError, SplitgenError, UsageError
from .lyndon import GradedAlphabet, generate_lyndon
from .schemes import Scheme
from .solver import (
    CompositionCandidate,
    build_system,
    residual,
    solve_multistart,
    solve_newton,
)
from .verify import lower_to_ladder, verify_order_exact, verify_order_numeric
from .witt import condition_counts, corollary_identity, s_min

logger = logging.getLogger(__name__)


def _handled(fn: Callable[..., dict]) -> Callable[..., dict]:
    @functools.wraps(fn)
    def wrapper(*args, **kwargs) -> dict:
        try:
            return fn(*args, **kwargs)
        except ConvergenceError as e:
            logger.warning(f"{fn.__name__}: {e}")
            return {
                "success": False,
                "kind": "computation",
                "error": str(e),
                "lastIterate": [scalar_to_json(v) for v in e.last_iterate or ()],
            }
        except SplitgenError as e:
            # só as validações de entrada (subclasses de ValueError) são uso
            kind = "usage" if isinstance(e, ValueError) else "computation"
            logger.warning(f"{fn.__name__}: {e}")
            return {"success": False, "kind": kind, "error": str(e)}
        except (ValueError, ArithmeticError) as e:
            logger.error(f"{fn.__name__}: {type(e).__name__}: {e}")
            return {"success": False, "kind": "computation", "error": f"{type(e).__name__}: {e}"}

    return wrapper


def _label(idx: Sequence[int]) -> str:
    return "g(" + ",".join(map(str, idx)) + ")"


@_handled
def count_report(scheme_text: str, order: int) -> dict:
    scheme = Scheme.parse(scheme_text)
    order = scheme.normalize_order(order)
    counts = condition_counts(scheme, order)
    return {
        "success": True,
        "scheme": scheme.name,
        "order": order,
        "sMin": s_min(scheme, order),
        "multisets": [{"content": str(c), "count": n} for c, n in counts if n],
    }


@_handled
def conditions_report(scheme_text: str, order: int) -> dict:
    scheme = Scheme.parse(scheme_text)
    order = scheme.normalize_order(order)
    grouped = indices_by_order(scheme, order)
    return {
        "success": True,
        "scheme": scheme.name,
        "order": order,
        "byOrder": {str(g): [_label(i) for i in seqs] for g, seqs in grouped.items()},
        "total": sum(len(v) for v in grouped.values()),
    }


@_handled
def equations_report(
    scheme_text: str,
    order: int,
    stages: Optional[int] = None,
    ties: Sequence[Sequence[int]] = (),
    simplified: bool = False,
    export_path: Optional[Path] = None,
    palindromic: bool = False,
) -> dict:
    scheme = Scheme.parse(scheme_text)
    order = scheme.normalize_order(order)
    r = stages if stages is not None else s_min(scheme, order)
    system = build_system(
        scheme, order, r, extra_ties=ties, simplified=simplified, palindromic=palindromic
    )
    export = system_to_export(system)
    if export_path is not None:
        Path(export_path).write_text(json.dumps(export, indent=2), encoding="utf-8")
        logger.info(f"EquationExport gravado em {export_path}")
    return {
        "success": True,
        "scheme": scheme.name,
        "order": system.order,
        "stages": r,
        "equations": [{"label": e["label"], "text": e["text"]} for e in export["equations"]],
        "exported": str(export_path) if export_path else None,
    }


@_handled
def solve_report(
    scheme_text: str,
    order: int,
    stages: int,
    initial: Optional[str] = None,
    ties: Sequence[Sequence[int]] = (),
    simplified: bool = False,
    equations_path: Optional[Path] = None,
    check_order: bool = True,
    palindromic: bool = False,
    seed: int = 0,
) -> dict:
    if equations_path is not None:
        system = load_export(equations_path)
    else:
        scheme = Scheme.parse(scheme_text)
        system = build_system(
            scheme, order, stages, extra_ties=ties, simplified=simplified, palindromic=palindromic
        )
    if initial is not None:
        guess = [complex(v) if isinstance(v, complex) else float(v) for v in parse_values(initial)]
        result = solve_newton(system, guess)
    else:
        result = solve_multistart(system, seed=seed)
    values = result.candidate.values
    report: dict[str, Any] = {
        "success": True,
        "scheme": system.scheme.name,
        "order": system.order,
        "values": [scalar_to_json(v) for v in values],
        "initial": [scalar_to_json(v) for v in result.initial or ()],
        "seed": None if initial is not None else seed,
        "iterations": result.iterations,
        "residualNorm": result.residual_norm,
        "labels": [eq.label for eq in system.equations],
        "residual": [scalar_to_json(v) for v in residual(system, values)],
    }
    if check_order and not system.scheme.is_recursive:
        ladder = lower_to_ladder(result.candidate)
        exact = verify_order_exact(ladder, _method_order(system.scheme, system.order))
        report["ladder"] = ladder_to_json(ladder)
        report["orderOk"] = exact.ok
        report["firstDefectGrade"] = exact.first_defect_grade
    return report


def _method_order(scheme: Scheme, order: int) -> int:
    """Ordem alcançada: um esquema simétrico com X_{2k-1} resolvido tem ordem 2k."""
    return order + 1 if scheme.is_symmetric else order


@_handled
def verify_report(
    order: int,
    ladder_path: Optional[Path] = None,
    scheme_text: Optional[str] = None,
    values: Optional[str] = None,
    numeric: bool = True,
    trials: int = 3,
    seed: int = 0,
    exact: bool = True,
) -> dict:
    """exact e numeric escolhem as verificações; "ok" exige todas as feitas."""
    if not (exact or numeric):
        raise UsageError("verify needs the exact check, the numeric check or both")
    if ladder_path is not None:
        ladder = load_ladder(ladder_path)
    elif scheme_text and values:
        candidate = CompositionCandidate(Scheme.parse(scheme_text), tuple(parse_values(values)))
        ladder = lower_to_ladder(candidate)
    else:
        raise UsageError("verify needs --ladder FILE or --scheme with --values")
    report: dict[str, Any] = {"success": True, "order": order}
    verdicts = []
    if exact:
        result = verify_order_exact(ladder, order)
        report["exactOk"] = result.ok
        report["firstDefectGrade"] = result.first_defect_grade
        report["defect"] = result.render_defect() if result.first_defect_grade else None
        verdicts.append(result.ok)
    if numeric:
        fit = verify_order_numeric(ladder, order, trials=trials, seed=seed)
        report["numericOk"] = fit.reaches_order
        report["slope"] = fit.slope
        report["slopes"] = fit.slopes
        report["seed"] = seed
        verdicts.append(bool(fit.reaches_order))
    report["ok"] = all(verdicts)
    return report


@_handled
def lyndon_report(alphabet_text: str, max_grade: int) -> dict:
    alphabet = GradedAlphabet.parse(alphabet_text)
    words = generate_lyndon(alphabet, max_grade)
    return {
        "success": True,
        "count": len(words),
        "words": [
            {
                "word": str(w),
                "grade": w.grade,
                "bracket": w.render_bracket(),
                "expansion": w.expansion().render(alphabet.symbols),
            }
            for w in words
        ],
    }


@_handled
def identities_report(
    kind: str = "all",
    m: int = 9,
    k: int = 1,
    stages: int = 3,
) -> dict:
    kind = kind.lower()
    if kind in ("a4", "a6", "a7", "a8", "a9"):
        lhs, rhs = corollary_identity(kind, m, k=k)
        return {
            "success": True,
            "kind": kind.upper(),
            "m": m,
            "lhs": to_jsonable(lhs),
            "rhs": to_jsonable(rhs),
            "holds": lhs == rhs,
        }
    if kind == "congruences":
        checks = congruence_catalogue(m, stages) + [mixed_b_relation(stages)]
        return {
            "success": True,
            "kind": "congruences",
            "m": m,
            "checks": [to_jsonable(c) for c in checks],
        }
    if kind == "beta":
        return {"success": True, "kind": "beta", **to_jsonable(beta_report())}
    if kind == "all":
        return _all_identities(m, k, stages)
    raise UsageError(
        f"unknown identity kind {kind!r}; expected all, A4, A6, A7, A8, A9, congruences or beta"
    )


def _all_identities(m: int, k: int, stages: int) -> dict:
    """Corolários de contagem e catálogo de congruências, cada um com passou/falhou."""
    if m < 5:
        raise InvalidOrderError(f"identities needs m >= 5, got {m}")
    prime = m if sympy.isprime(m) else sympy.prevprime(m)
    checks: list[dict[str, Any]] = []
    for name, order in (("A4", m), ("A6", m), ("A7", m), ("A8", prime), ("A9", prime)):
        lhs, rhs = corollary_identity(name, order, k=k)
        checks.append({"name": name, "m": order, "holds": lhs == rhs})
    for check in congruence_catalogue(m, stages) + [mixed_b_relation(stages)]:
        checks.append({"name": check.name, "m": m, "holds": check.holds, "notes": check.notes})
    beta = beta_report()
    checks.append({"name": "beta-mixed-b-row", "m": 9,
                   "holds": beta["mixed_b_row"].coordinates[1] != 0})
    failed = [c["name"] for c in checks if not c["holds"]]
    logger.info(f"identities: {len(checks) - len(failed)}/{len(checks)} verificações passaram")
    return {
        "success": True,
        "kind": "all",
        "m": m,
        "stages": stages,
        "checks": checks,
        "passed": len(checks) - len(failed),
        "failed": failed,
    }
