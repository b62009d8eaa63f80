"""
splitgen - Equações determinantes de fórmulas de decomposição exponencial

Propósito:
    Gera, conta e resolve as condições independentes mínimas de fórmulas
    produto F_m(x) = Q(p_1 x)...Q(p_r x), escolhidas por palavras de Lyndon
    sobre os termos de correção R_1 = H, R_2, R_3, ...

Componentes principais:
    - lyndon / algebra: palavras de Lyndon, colchetes, polinômios em palavras
    - witt: fórmulas de Witt e número mínimo de estágios
    - conditions / schemes: conjuntos X_m e índices determinantes
    - polynomials / coeffs / cosets: polinômios exatos nos p_j
    - solver / verify: sistemas, Newton, verificação de ordem
    - cli / reports / converters: superfície de linha de comando

Exemplo de uso:
    python -m splitgen count --scheme symmetric --order 9

Notas de implementação:
    - Coeficientes exatos com fractions.Fraction
    - Numérica com numpy/scipy, teoria dos números com sympy
"""
import re
from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as _pkg_version
from pathlib import Path


def _read_version_from_pyproject() -> str:
    pyproject = Path(__file__).resolve().parents[1] / "pyproject.toml"
    try:
        text = pyproject.read_text(encoding="utf-8")
    except OSError:
        return "0.0.0"
    match = re.search(r'(?m)^version = "([^"]+)"\s*$', text)
    return match.group(1) if match else "0.0.0"


try:
    __version__ = _pkg_version("splitgen")
except PackageNotFoundError:
    __version__ = _read_version_from_pyproject()

__all__ = ["lyndon", "witt", "conditions", "coeffs", "solver", "verify", "cli"]
