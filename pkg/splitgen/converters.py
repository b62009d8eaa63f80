"""
converters.py - Conversão entre tipos do splitgen e JSON/texto

Propósito:
    Serializa sistemas determinantes (EquationExport), polinômios e
    ladders para JSON e lê de volta. Racionais viajam como strings "a/b"
    para não perder exatidão.

Componentes principais:
    - fraction_to_str, parse_scalar, parse_values: escalares
    - poly_to_json, poly_from_json: ParamPoly ↔ lista de monômios
      {exponents, coefficient}
    - system_to_export, export_to_system: DeterminingSystem ↔ EquationExport
    - ladder_to_json, ladder_from_json, load_ladder: ladders de fatores

Exemplo de uso:
    from splitgen.converters import load_ladder

    ladder = load_ladder(Path("tests/examples/ladders/ruth.json"))

Notas de implementação:
    - Índices de estágio são 1-based no JSON e 0-based em memória
    - parse_scalar devolve Fraction sempre que o texto é racional exato
      ("1/3", "2", "0.25"); complexos usam a sintaxe do Python ("1+2j")
"""

from __future__ import annotations

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence, Union

from .errors import UsageError
from .polynomials import ParamPoly
from .schemes import Scheme
from .solver import DeterminingSystem, Equation
from .verify import LadderStep

logger = logging.getLogger(__name__)

EXPORT_FORMAT = "splitgen.equations/2"

Scalar = Union[Fraction, float, complex]


def fraction_to_str(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def scalar_to_json(value: Any) -> Any:
    """Fraction → "a/b"; complex → [re, im]; float fica como está."""
    if isinstance(value, Fraction):
        return fraction_to_str(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, int):
        return str(value)
    return float(value)


def parse_scalar(raw: Any) -> Scalar:
    """Aceita int, float, "a/b", "0.25", "1+2j" ou [re, im]."""
    if isinstance(raw, bool):
        raise UsageError(f"invalid number: {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, float):
        return raw
    if isinstance(raw, (list, tuple)) and len(raw) == 2:
        return complex(float(raw[0]), float(raw[1]))
    if isinstance(raw, str):
        text = raw.strip()
        try:
            return Fraction(text)
        except ValueError:
            pass
        try:
            return float(text)
        except ValueError:
            pass
        try:
            return complex(text.replace(" ", ""))
        except ValueError:
            pass
    raise UsageError(f"invalid number: {raw!r}")


def parse_values(text: str) -> list[Scalar]:
    """"7/24, 2/3, -1" → [Fraction(7, 24), Fraction(2, 3), Fraction(-1)]."""
    values = [parse_scalar(chunk) for chunk in text.split(",") if chunk.strip()]
    if not values:
        raise UsageError("empty value list")
    return values


def poly_to_json(poly: ParamPoly) -> list[dict]:
    return [
        {"exponents": list(e), "coefficient": fraction_to_str(c)} for e, c in poly.items()
    ]


def poly_from_json(nvars: int, terms: Sequence[dict]) -> ParamPoly:
    try:
        return ParamPoly(
            nvars, {tuple(t["exponents"]): Fraction(t["coefficient"]) for t in terms}
        )
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError(f"malformed polynomial terms: {e}") from e


def system_to_export(system: DeterminingSystem) -> dict:
    """DeterminingSystem → EquationExport (dict pronto para json.dumps)."""
    return {
        "format": EXPORT_FORMAT,
        "scheme": system.scheme.name,
        "order": system.order,
        "stages": system.stages,
        "variables": [f"p{j + 1}" for j in range(system.stages)],
        "simplified": system.simplified,
        "ties": [[j + 1 for j in group] for group in system.ties],
        "equations": [
            {
                "label": eq.label,
                "indices": list(eq.indices) if eq.indices is not None else None,
                "text": eq.poly.render(),
                "monomials": poly_to_json(eq.poly),
            }
            for eq in system.equations
        ],
    }


def export_to_system(data: dict) -> DeterminingSystem:
    """EquationExport → DeterminingSystem."""
    if data.get("format") != EXPORT_FORMAT:
        raise UsageError(f"unsupported export format: {data.get('format')!r}")
    try:
        stages = int(data["stages"])
        variables = data.get("variables")
        if variables is not None and list(variables) != [f"p{j + 1}" for j in range(stages)]:
            raise UsageError(f"variables {variables} do not match {stages} stages")
        equations = [
            Equation(
                eq["label"],
                poly_from_json(stages, eq["monomials"]),
                tuple(eq["indices"]) if eq.get("indices") is not None else None,
            )
            for eq in data["equations"]
        ]
        ties = [[j - 1 for j in group] for group in data["ties"]]
        return DeterminingSystem(
            scheme=Scheme.parse(data["scheme"]),
            order=int(data["order"]),
            stages=stages,
            equations=equations,
            ties=ties,
            simplified=bool(data.get("simplified", False)),
        )
    except (KeyError, TypeError) as e:
        raise UsageError(f"malformed equation export: {e}") from e


def ladder_to_json(ladder: Sequence[LadderStep]) -> list[dict]:
    return [{"op": s.op, "t": scalar_to_json(s.t)} for s in ladder]


def ladder_from_json(data: Any) -> list[LadderStep]:
    """Lista de {op, t} ou objeto {"ladder": [...]}."""
    steps = data.get("ladder") if isinstance(data, dict) else data
    if not isinstance(steps, list) or not steps:
        raise UsageError("ladder must be a non-empty list of {op, t} steps")
    out = []
    for i, step in enumerate(steps):
        if not isinstance(step, dict) or "op" not in step or "t" not in step:
            raise UsageError(f"ladder step {i} must have 'op' and 't'")
        out.append(LadderStep(str(step["op"]), parse_scalar(step["t"])))
    return out


def load_ladder(path: Path) -> list[LadderStep]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise UsageError(f"cannot read ladder file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise UsageError(f"invalid JSON in {path}: {e}") from e
    ladder = ladder_from_json(data)
    logger.debug(f"load_ladder: {len(ladder)} fatores de {path}")
    return ladder


def load_export(path: Path) -> DeterminingSystem:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise UsageError(f"cannot read equation export {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise UsageError(f"invalid JSON in {path}: {e}") from e
    return export_to_system(data)


def to_jsonable(value: Any) -> Any:
    """Converte recursivamente Fraction, complex, tuplas e dataclasses simples."""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (Fraction, complex)):
        return scalar_to_json(value)
    if isinstance(value, float) or value is None or isinstance(value, (str, bool, int)):
        return value
    if hasattr(value, "__dataclass_fields__"):
        return {k: to_jsonable(getattr(value, k)) for k in value.__dataclass_fields__}
    return str(value)
