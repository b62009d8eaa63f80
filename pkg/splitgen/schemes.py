"""
schemes.py - Famílias de fórmulas de decomposição

Propósito:
    Identifica o tipo de decomposição (complexa, tilde, simétrica e as
    variantes recursivas com parâmetro l) e as regras que dependem dele:
    índices permitidos dos termos de correção, regra de sinal e
    normalização de ordem.

Notas de implementação:
    - Esquemas simétricos têm X_{2k} = X_{2k-1}; normalize_order faz esse mapa
    - recursive-symmetric com l = k-1 equivale ao simétrico de ordem 2k-1
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import InvalidOrderError, InvalidSchemeError


class SchemeKind(str, Enum):
    NONSYMMETRIC = "nonsymmetric"
    TILDE = "tilde"
    SYMMETRIC = "symmetric"
    RECURSIVE = "recursive"
    RECURSIVE_SYMMETRIC = "recursive-symmetric"
    RECURSIVE_TILDE = "recursive-tilde"


_ALIASES = {
    "complex": SchemeKind.NONSYMMETRIC,
    "plain": SchemeKind.NONSYMMETRIC,
    "nonsymmetric": SchemeKind.NONSYMMETRIC,
    "tilde": SchemeKind.TILDE,
    "symmetric": SchemeKind.SYMMETRIC,
    "recursive": SchemeKind.RECURSIVE,
    "recursive-symmetric": SchemeKind.RECURSIVE_SYMMETRIC,
    "recursive-tilde": SchemeKind.RECURSIVE_TILDE,
}

_RECURSIVE_KINDS = {
    SchemeKind.RECURSIVE,
    SchemeKind.RECURSIVE_SYMMETRIC,
    SchemeKind.RECURSIVE_TILDE,
}


@dataclass(frozen=True)
class Scheme:
    """Tipo de decomposição mais o nível l das variantes recursivas."""

    kind: SchemeKind
    level: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind in _RECURSIVE_KINDS:
            if self.level is None or self.level < 1:
                raise InvalidSchemeError(f"{self.kind.value} needs a level l >= 1")
        elif self.level is not None:
            raise InvalidSchemeError(f"{self.kind.value} takes no level")

    @classmethod
    def parse(cls, text: str) -> Scheme:
        """"symmetric", "complex", "recursive:2", "recursive-symmetric:3", ..."""
        name, _, level = text.strip().lower().partition(":")
        kind = _ALIASES.get(name)
        if kind is None:
            raise InvalidSchemeError(
                f"unknown scheme {text!r}; expected one of {sorted(_ALIASES)}"
            )
        try:
            lvl = int(level) if level else None
        except ValueError as e:
            raise InvalidSchemeError(f"invalid level in {text!r}") from e
        return cls(kind, lvl)

    @property
    def name(self) -> str:
        return self.kind.value if self.level is None else f"{self.kind.value}:{self.level}"

    @property
    def is_symmetric(self) -> bool:
        return self.kind in (SchemeKind.SYMMETRIC, SchemeKind.RECURSIVE_SYMMETRIC)

    @property
    def is_tilde(self) -> bool:
        return self.kind in (SchemeKind.TILDE, SchemeKind.RECURSIVE_TILDE)

    @property
    def is_recursive(self) -> bool:
        return self.kind in _RECURSIVE_KINDS

    @property
    def sign_rule(self) -> str:
        """"alternating" quando R_{jn} = (-1)^{(j-1)(n-1)} R_n, senão "plain"."""
        return "alternating" if self.is_tilde else "plain"

    def normalize_order(self, order: int) -> int:
        if order < 1:
            raise InvalidOrderError(f"order must be >= 1, got {order}")
        if self.is_symmetric and order % 2 == 0:
            return order - 1
        return order

    def validate_order(self, order: int) -> None:
        if order < 1:
            raise InvalidOrderError(f"order must be >= 1, got {order}")
        if self.is_symmetric and order % 2 == 0:
            raise InvalidOrderError(
                f"{self.name} schemes need an odd order (X_2k = X_2k-1), got {order}"
            )
        if self.kind in (SchemeKind.RECURSIVE, SchemeKind.RECURSIVE_TILDE):
            if self.level is not None and self.level > order - 1:
                raise InvalidSchemeError(
                    f"level {self.level} needs order >= {self.level + 1}, got {order}"
                )
        if self.kind is SchemeKind.RECURSIVE_SYMMETRIC and self.level is not None:
            k = (order + 1) // 2
            if self.level > k - 1:
                raise InvalidSchemeError(
                    f"level {self.level} needs order >= {2 * self.level + 1}, got {order}"
                )

    def correction_grades(self, order: int) -> tuple[int, ...]:
        """Λ: graus j dos R_j que entram nas condições de ordem m."""
        self.validate_order(order)
        if self.kind in (SchemeKind.NONSYMMETRIC, SchemeKind.TILDE):
            return tuple(range(1, order + 1))
        if self.kind is SchemeKind.SYMMETRIC:
            return tuple(range(1, order + 1, 2))
        assert self.level is not None
        if self.kind is SchemeKind.RECURSIVE_SYMMETRIC:
            return (1,) + tuple(range(order - 2 * self.level + 2, order + 1, 2))
        return (1,) + tuple(range(order - self.level + 1, order + 1))

    def condition_weights(self, order: int) -> tuple[int, ...]:
        """Graus totais em que há condições a impor."""
        self.validate_order(order)
        if self.kind in (SchemeKind.NONSYMMETRIC, SchemeKind.TILDE):
            return tuple(range(2, order + 1))
        if self.kind is SchemeKind.SYMMETRIC:
            return tuple(range(3, order + 1, 2))
        assert self.level is not None
        if self.kind is SchemeKind.RECURSIVE_SYMMETRIC:
            return tuple(range(order - 2 * self.level + 2, order + 1, 2))
        return tuple(range(order - self.level + 1, order + 1))

    def __str__(self) -> str:
        return self.name
