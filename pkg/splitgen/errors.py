"""
errors.py - Hierarquia de exceções do splitgen

Propósito:
    Exceções de domínio levantadas pelas operações da biblioteca. A camada
    de comandos (reports.py) converte-as em {"success": False, ...} e a CLI
    em códigos de saída.

Notas de implementação:
    - Erros de validação de entrada também derivam de ValueError
    - ConvergenceError carrega o último iterado do Newton
"""

from __future__ import annotations

from typing import Optional, Sequence


class SplitgenError(Exception):
    """Base de todas as exceções do pacote."""


class InvalidSchemeError(SplitgenError, ValueError):
    """Esquema desconhecido ou parâmetro l fora do intervalo."""


class InvalidOrderError(SplitgenError, ValueError):
    """Ordem m inválida para o esquema (ex.: m par em esquema simétrico)."""


class DimensionMismatchError(SplitgenError, ValueError):
    """Número de valores não corresponde ao número de estágios."""


class DegreeMismatchError(SplitgenError, ValueError):
    """Polinômios de graus totais diferentes numa redução de coset."""


class NotPrimeError(SplitgenError, ValueError):
    """Identidade que exige ordem prima recebeu um composto."""


class UsageError(SplitgenError, ValueError):
    """Entrada de usuário malformada (arquivo de ladder, lista de valores)."""


class CostGuardError(SplitgenError):
    """Operação ultrapassaria o limite de custo configurado."""


class NumericVerificationError(SplitgenError):
    """Erro numérico degenerado (zero ou não finito) no ajuste de ordem."""


class ConvergenceError(SplitgenError):
    """Newton não convergiu; guarda o último iterado."""

    def __init__(self, message: str, last_iterate: Optional[Sequence[complex]] = None):
        super().__init__(message)
        self.last_iterate = tuple(last_iterate) if last_iterate is not None else None


class SingularJacobianError(ConvergenceError):
    """Jacobiano singular no iterado corrente."""
