"""
cache.py - Cache de polinômios de coeficientes

Propósito:
    Memoriza g, g~ e f por (esquema, índices, r). A recursão de f reusa
    os mesmos blocos muitas vezes e a geração de um sistema de ordem 8
    pede centenas de coeficientes.

Componentes principais:
    - CachedPolynomial: polinômio em cache com contador de acertos
    - PolynomialCache: get/put/invalidate/has com limite de entradas

Notas de implementação:
    - Chave: (família, índices, r); o valor é imutável na prática
    - Quando cheio, descarta a entrada mais antiga (ordem de inserção)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Hashable, Optional

from .polynomials import ParamPoly

logger = logging.getLogger(__name__)

_DEFAULT_MAX_ENTRIES = 20000


@dataclass
class CachedPolynomial:
    """Polinômio em cache e quantas vezes foi lido."""

    poly: ParamPoly
    hits: int = 0


class PolynomialCache:
    """Cache de ParamPoly por chave de coeficiente."""

    def __init__(self, max_entries: int = _DEFAULT_MAX_ENTRIES):
        self._cache: dict[Hashable, CachedPolynomial] = {}
        self.max_entries = max_entries

    def get(self, key: Hashable) -> Optional[ParamPoly]:
        """Retorna o polinômio em cache, ou None."""
        entry = self._cache.get(key)
        if entry is None:
            return None
        entry.hits += 1
        return entry.poly

    def put(self, key: Hashable, poly: ParamPoly) -> None:
        """Armazena polinômio no cache."""
        self._cache[key] = CachedPolynomial(poly=poly)
        if len(self._cache) > self.max_entries:
            oldest_key = next(iter(self._cache))
            if oldest_key != key:
                self._cache.pop(oldest_key, None)
                logger.debug(f"Cache cheio, descartado: {oldest_key}")

    def invalidate(self, key: Optional[Hashable] = None) -> None:
        """Remove uma entrada, ou todas quando key é None."""
        if key is None:
            if self._cache:
                logger.info(f"Cache de coeficientes limpo ({len(self._cache)} entradas)")
            self._cache.clear()
        elif self._cache.pop(key, None):
            logger.debug(f"Cache invalidado para: {key}")

    def has(self, key: Hashable) -> bool:
        """Verifica se há polinômio em cache para a chave."""
        return key in self._cache

    def __len__(self) -> int:
        return len(self._cache)


coefficient_cache = PolynomialCache()
