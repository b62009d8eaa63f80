"""
cli.py - Interface de linha de comando do splitgen

Propósito:
    Subcomandos count, conditions, equations, solve, verify, lyndon e
    identities sobre os handlers de reports.py. Saída humana por padrão ou
    JSON com --json.

Exemplo de uso:
    splitgen count --scheme symmetric --order 9
    splitgen solve --scheme symmetric --order 4 --stages 3 --initial 1.3,-1.6,1.3
    splitgen solve --scheme symmetric --order 4 --stages 3 --ties --seed 1
    splitgen equations --scheme symmetric --order 5 --stages 5 --json eqs.json
    splitgen verify --ladder tests/examples/ladders/ruth.json --order 3 --exact
    splitgen identities

Notas de implementação:
    - Nível de log: --log-level → env SPLITGEN_LOG_LEVEL → WARNING
    - Semente: --seed → env SPLITGEN_SEED → 0 (verify, e solve sem --initial)
    - --json antes do subcomando troca a saída por JSON; depois de
      equations é o caminho do EquationExport (alias --export)
    - Códigos de saída: 0 sucesso, 1 uso inválido, 2 falha de cálculo
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .converters import to_jsonable
from .errors import UsageError
from .reports import (
    conditions_report,
    count_report,
    equations_report,
    identities_report,
    lyndon_report,
    solve_report,
    verify_report,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTATION = 2

_LOG_LEVEL_MAP = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
}


def _resolve_log_level(cli_level: Optional[str]) -> int:
    """Resolve log level: CLI arg → env var SPLITGEN_LOG_LEVEL → WARNING."""
    raw = cli_level or os.environ.get("SPLITGEN_LOG_LEVEL", "WARNING")
    return _LOG_LEVEL_MAP.get(raw.upper(), logging.WARNING)


def _resolve_seed(cli_seed: Optional[int]) -> int:
    """Resolve semente: CLI arg → env var SPLITGEN_SEED → 0."""
    if cli_seed is not None:
        return cli_seed
    raw = os.environ.get("SPLITGEN_SEED")
    if raw is None or not raw.strip():
        return 0
    try:
        return int(raw)
    except ValueError as e:
        raise UsageError(f"SPLITGEN_SEED must be an integer, got {raw!r}") from e


def _tty() -> bool:
    return hasattr(sys.stdout, "isatty") and sys.stdout.isatty()


def _c(text: str, code: str) -> str:
    return f"\033[{code}m{text}\033[0m" if _tty() else text


class _Parser(argparse.ArgumentParser):
    """argparse que sinaliza erro de uso com exceção em vez de sys.exit(2)."""

    def error(self, message: str):  # type: ignore[override]
        raise UsageError(message)


def _tie_group(text: str) -> list[int]:
    try:
        group = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid tie group {text!r}") from e
    if len(group) < 2:
        raise argparse.ArgumentTypeError(f"a tie group needs at least two stages: {text!r}")
    return group


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="splitgen",
        description="Determining equations of exponential product formulas",
    )
    parser.add_argument("--version", action="version", version=f"splitgen {__version__}")
    parser.add_argument(
        "--log-level",
        metavar="LEVEL",
        default=None,
        help="Log level: DEBUG, INFO, WARNING, ERROR (default: WARNING). "
             "Falls back to SPLITGEN_LOG_LEVEL when absent.",
    )
    parser.add_argument("--json", action="store_true", help="print the raw result as JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_scheme(p: argparse.ArgumentParser, order_required: bool = True) -> None:
        p.add_argument("--scheme", default="nonsymmetric",
                       help="nonsymmetric|complex|tilde|symmetric|recursive:L|"
                            "recursive-symmetric:L|recursive-tilde:L")
        p.add_argument("--order", type=int, required=order_required)

    p = sub.add_parser("count", help="minimal number of stages and Witt counts")
    with_scheme(p)

    p = sub.add_parser("conditions", help="determining Lyndon indices by order")
    with_scheme(p)

    p = sub.add_parser("equations", help="build the determining polynomial system")
    with_scheme(p)
    p.add_argument("--stages", type=int, default=None, help="r (default: S_min)")
    p.add_argument("--tie", type=_tie_group, action="append", default=[],
                   help="extra tie group, 1-based, e.g. 1,2")
    p.add_argument("--ties", action="store_true", help="impose p_(r+1-j) = p_j")
    p.add_argument("--simplified", action="store_true", help="use the f forms instead of g")
    p.add_argument("--json", "--export", dest="export", type=Path, default=None, metavar="PATH",
                   help="write EquationExport JSON here")

    p = sub.add_parser("solve", help="damped Newton from an initial guess or seeded random starts")
    with_scheme(p, order_required=False)
    p.add_argument("--stages", type=int, default=None)
    p.add_argument("--initial", default=None,
                   help="comma-separated guess (full or free values); random starts when absent")
    p.add_argument("--seed", type=int, default=None, help="seed for the random starts")
    p.add_argument("--tie", type=_tie_group, action="append", default=[])
    p.add_argument("--ties", action="store_true", help="impose p_(r+1-j) = p_j")
    p.add_argument("--simplified", action="store_true")
    p.add_argument("--equations", type=Path, default=None, help="solve an EquationExport file")

    p = sub.add_parser("verify", help="exact and numerical order verification")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--ladder", type=Path, default=None, help="JSON ladder of {op, t} steps")
    p.add_argument("--scheme", default=None)
    p.add_argument("--values", default=None, help="comma-separated p_j to lower to a ladder")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact series check only")
    mode.add_argument("--numeric", action="store_true", help="numeric slope fit only")
    mode.add_argument("--no-numeric", dest="exact", action="store_true", help=argparse.SUPPRESS)
    p.add_argument("--trials", type=int, default=3, help="random matrix trials, at least 3")
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("lyndon", help="Lyndon words with brackets and expansions")
    p.add_argument("--alphabet", required=True, help='"x,y" or "R1:1,R3:3"')
    p.add_argument("--max-grade", type=int, required=True)

    p = sub.add_parser("identities", help="counting corollaries and congruence checks")
    p.add_argument("--kind", default="all", help="all|A4|A6|A7|A8|A9|congruences|beta (default: all)")
    p.add_argument("--m", type=int, default=9)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--stages", type=int, default=3)
    return parser


def _dispatch(args: argparse.Namespace) -> dict:
    if args.command == "count":
        return count_report(args.scheme, args.order)
    if args.command == "conditions":
        return conditions_report(args.scheme, args.order)
    if args.command == "equations":
        return equations_report(
            args.scheme, args.order, args.stages, args.tie, args.simplified, args.export,
            palindromic=args.ties,
        )
    if args.command == "solve":
        if args.equations is None and (args.order is None or args.stages is None):
            raise UsageError("solve needs --order and --stages (or --equations FILE)")
        seed = _resolve_seed(args.seed) if args.initial is None else 0
        return solve_report(
            args.scheme, args.order, args.stages, args.initial, args.tie,
            args.simplified, args.equations, palindromic=args.ties, seed=seed,
        )
    if args.command == "verify":
        return verify_report(
            args.order, args.ladder, args.scheme, args.values,
            numeric=not args.exact, trials=args.trials, seed=_resolve_seed(args.seed),
            exact=not args.numeric,
        )
    if args.command == "lyndon":
        return lyndon_report(args.alphabet, args.max_grade)
    if args.command == "identities":
        return identities_report(args.kind, args.m, k=args.k, stages=args.stages)
    raise UsageError(f"unknown command {args.command!r}")


def _render(command: str, result: dict) -> str:
    """Texto legível para o terminal."""
    lines: list[str] = []
    if command == "count":
        lines.append(_c(f"S_min({result['scheme']}, m={result['order']}) = {result['sMin']}", "1;32"))
        for entry in result["multisets"]:
            lines.append(f"  {entry['content']:<30} {entry['count']}")
    elif command == "conditions":
        for grade, labels in result["byOrder"].items():
            lines.append(_c(f"order {grade}:", "33") + " " + ", ".join(labels))
        lines.append(f"total: {result['total']}")
    elif command == "equations":
        for eq in result["equations"]:
            lines.append(f"{eq['label']:>16} : {eq['text']} = 0")
        if result.get("exported"):
            lines.append(f"exported to {result['exported']}")
    elif command == "solve":
        lines.append(_c(f"converged in {result['iterations']} iterations", "1;32")
                     + f" (|F| = {result['residualNorm']:.3e})")
        if result.get("seed") is not None:
            lines.append(f"random start (seed {result['seed']}): "
                         + ", ".join(_scalar(v) for v in result["initial"]))
        for j, v in enumerate(result["values"], start=1):
            lines.append(f"  p{j} = {_scalar(v)}")
        lines.append("residuals:")
        for label, v in zip(result["labels"], result["residual"]):
            lines.append(f"  {label:>16} = {_scalar(v, '.3e')}")
        if "orderOk" in result:
            lines.append(f"order check: {'ok' if result['orderOk'] else 'FAILED'}"
                         f" (first defect at grade {result['firstDefectGrade']})")
    elif command == "verify":
        status = _c("ok", "1;32") if result["ok"] else _c("FAILED", "1;31")
        lines.append(f"order {result['order']}: {status}")
        if "exactOk" in result:
            lines.append(f"first defect grade: {result['firstDefectGrade']}")
            if result.get("defect"):
                lines.append(f"defect: {result['defect']}")
        if "slope" in result:
            lines.append(f"numeric slope: {result['slope']:.3f} (seed {result['seed']})")
    elif command == "lyndon":
        for w in result["words"]:
            lines.append(f"{w['word']:<12} {w['bracket']:<24} {w['expansion']}")
        lines.append(f"{result['count']} words")
    elif command == "identities" and result.get("kind") == "all":
        for check in result["checks"]:
            status = _c("pass", "32") if check["holds"] else _c("FAIL", "1;31")
            lines.append(f"  {check['name']:<18} m={check['m']:<3} {status}")
        total = len(result["checks"])
        lines.append(f"{result['passed']}/{total} passed")
    else:
        lines.append(json.dumps(to_jsonable(result), indent=2))
    return "\n".join(lines)


def _scalar(value, spec: str = "") -> str:
    """Escalar do JSON ("a/b", float ou [re, im]) em texto."""
    if isinstance(value, list):
        return format(complex(value[0], value[1]), spec)
    if isinstance(value, float):
        return format(value, spec)
    return str(value)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point: executa um subcomando e devolve o código de saída."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"splitgen: error: {e}\n")
        return EXIT_USAGE

    logging.basicConfig(format="[%(levelname)s] %(message)s")
    level = _resolve_log_level(args.log_level)
    logging.getLogger().setLevel(level)
    logger.setLevel(level)

    try:
        result = _dispatch(args)
    except UsageError as e:
        result = {"success": False, "kind": "usage", "error": str(e)}

    if args.json:
        print(json.dumps(to_jsonable(result), indent=2))
    elif result.get("success"):
        print(_render(args.command, result))
    else:
        sys.stderr.write(f"splitgen: error: {result['error']}\n")

    if result.get("success"):
        return EXIT_OK
    return EXIT_USAGE if result.get("kind") == "usage" else EXIT_COMPUTATION


if __name__ == "__main__":
    sys.exit(main())
