"""
__main__.py - Entry point para execução do módulo splitgen

Permite executar a CLI via: python -m splitgen
"""

import sys

from splitgen.cli import main

if __name__ == "__main__":
    sys.exit(main())
