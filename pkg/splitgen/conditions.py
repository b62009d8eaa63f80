"""
conditions.py - Conjuntos de condições X_m e índices determinantes

Propósito:
    Para um esquema e uma ordem m, enumera os multiconjuntos
    {R_1^{n_1} R_2^{n_2} ...} cujos coeficientes devem se anular e, dentro
    de cada multiconjunto, as sequências de índices de Lyndon que formam o
    conjunto mínimo independente de equações.

Componentes principais:
    - ConditionMultiset: conteúdo {grau: multiplicidade}
    - condition_multisets: X_m por esquema
    - determining_indices / indices_by_order: listas de g(i_1, ..., i_n)

Exemplo de uso:
    from splitgen.conditions import determining_indices
    from splitgen.schemes import Scheme

    determining_indices(Scheme.parse("symmetric"), 5)
    # [(3,), (5,), (1, 1, 3)]

Notas de implementação:
    - Ordenação: peso total, depois comprimento, depois lexicográfica
    - Multiconjuntos só com R_1 nunca entram (a normalização cuida de H)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from .errors import UsageError
from .lyndon import lyndon_index_sequences
from .schemes import Scheme

logger = logging.getLogger(__name__)

IndexSequence = tuple[int, ...]


@dataclass(frozen=True, order=True)
class ConditionMultiset:
    """Multiconjunto de termos de correção, como pares (grau, multiplicidade)."""

    counts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        grades = [g for g, _ in self.counts]
        if grades != sorted(set(grades)):
            raise UsageError(f"grades must be strictly increasing: {self.counts}")
        if any(n < 1 or g < 1 for g, n in self.counts):
            raise UsageError(f"grades and multiplicities must be positive: {self.counts}")

    @classmethod
    def from_parts(cls, parts: list[int]) -> ConditionMultiset:
        tally: dict[int, int] = {}
        for p in parts:
            tally[p] = tally.get(p, 0) + 1
        return cls(tuple(sorted(tally.items())))

    @property
    def weight(self) -> int:
        return sum(g * n for g, n in self.counts)

    @property
    def size(self) -> int:
        return sum(n for _, n in self.counts)

    @property
    def grades(self) -> tuple[int, ...]:
        """Graus de cada fator, em ordem crescente e com repetição."""
        out: list[int] = []
        for g, n in self.counts:
            out.extend([g] * n)
        return tuple(out)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(n for _, n in self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def __str__(self) -> str:
        return " ".join(f"R{g}" if n == 1 else f"R{g}^{n}" for g, n in self.counts)


def _partitions(total: int, parts: tuple[int, ...]) -> Iterator[list[int]]:
    """Partições de total em partes de `parts` (não crescentes)."""
    ordered = sorted(parts, reverse=True)

    def walk(remaining: int, start: int, acc: list[int]) -> Iterator[list[int]]:
        if remaining == 0:
            yield list(acc)
            return
        for i in range(start, len(ordered)):
            part = ordered[i]
            if part <= remaining:
                acc.append(part)
                yield from walk(remaining - part, i, acc)
                acc.pop()

    yield from walk(total, 0, [])


def condition_multisets(scheme: Scheme, order: int) -> list[ConditionMultiset]:
    """X_m: multiconjuntos cujos coeficientes devem se anular."""
    allowed = scheme.correction_grades(order)
    out = []
    for weight in scheme.condition_weights(order):
        for parts in _partitions(weight, allowed):
            if any(p > 1 for p in parts):
                out.append(ConditionMultiset.from_parts(parts))
    out.sort(key=lambda c: (c.weight, c.size, c.counts))
    logger.debug(f"condition_multisets({scheme}, {order}): {len(out)} multiconjuntos")
    return out


def determining_indices(scheme: Scheme, order: int) -> list[IndexSequence]:
    """Sequências de Lyndon (i_1, ..., i_n) cujos g devem se anular, além de Σp_j = 1."""
    indices: list[IndexSequence] = []
    for content in condition_multisets(scheme, order):
        indices.extend(lyndon_index_sequences(content.as_dict()))
    indices.sort(key=lambda seq: (sum(seq), len(seq), seq))
    return indices


def indices_by_order(scheme: Scheme, order: int) -> dict[int, list[IndexSequence]]:
    """Índices determinantes agrupados por grau total; o grau 1 é a normalização g(1) = 1."""
    grouped: dict[int, list[IndexSequence]] = {1: [(1,)]}
    for seq in determining_indices(scheme, order):
        grouped.setdefault(sum(seq), []).append(seq)
    return grouped
