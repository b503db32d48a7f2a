"""
Command line front end.

    betti compare -a 1 -b 2 -m 2 -n 2
    betti table --mode oracle -a 2 -b 1 -m 3 -n 3 --max-j 8
    betti gauss 2 2
    betti dim 3,3 2
    betti hrect -r 1 -s 2 -m 2 -n 2
    betti xhom -r 1 -s 1 -m 2 -n 2 -k 2
    betti hilbert -a 1 -b 2 -m 2 -n 2 --dmax 6 --compare
    betti pdreg -a 1 -b 2 -m 2 -n 2

Exit codes: 0 success, 1 formula/oracle mismatch, 2 invalid input,
3 resource budget exceeded, 4 internal error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from . import errors
from .engines.formula.assembler import FormulaEngine, proj_dim_and_reg
from .engines.formula.strands import h_rect, x_homology
from .engines.oracle.cache import ResultCache
from .engines.oracle.euler import predicted_hilbert_function
from .engines.oracle.koszul import KoszulEngine
from .logging import LOGGER_NAME
from .managers import JobManager
from .partitions import Partition
from .polynomials import gauss_polynomial
from .rendering import dumps, equivariant_terms, render, render_equivariant
from .rep_ring import schur_dim
from .schema import HomologySummandSchema, JobSpec
from .settings import Settings

TRANSPOSE_NOTICE = (
    "note: m < n; computing on the transposed shape and transposing labels back"
)


def _add_shape_arguments(parser, letters=("a", "b")):
    for letter in letters + ("m", "n"):
        parser.add_argument(f"-{letter}", type=int, required=True)


def _add_common_arguments(parser):
    parser.add_argument(
        "--format", choices=["pretty", "json", "csv"], default="pretty",
        help="Output format (csv applies to Betti tables)",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="Log progress to stderr (-vv for debug output)",
    )


def _add_engine_arguments(parser):
    parser.add_argument("--cache-dir", help="Result cache directory (BETTI_CACHE_DIR)")
    parser.add_argument(
        "--cell-budget", type=int,
        help="Largest block matrix, in entries, the oracle may build (BETTI_CELL_BUDGET)",
    )
    parser.add_argument(
        "--workers", type=int, help="Threads for the oracle block map (BETTI_WORKERS)"
    )


def _add_table_arguments(parser):
    _add_shape_arguments(parser)
    parser.add_argument("--max-i", type=int, help="Largest homological degree i")
    parser.add_argument("--max-j", type=int, help="Largest internal degree j")
    parser.add_argument(
        "--equivariant", action="store_true",
        help="Also print the Schur-labeled entries of the formula, by strand",
    )
    _add_engine_arguments(parser)
    _add_common_arguments(parser)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betti",
        description="Betti tables of the GL-equivariant ideals I_{a x b}.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    table = commands.add_parser("table", help="Betti table with an explicit --mode")
    table.add_argument(
        "--mode", choices=["formula", "oracle", "compare"], default="formula"
    )
    _add_table_arguments(table)
    for mode, text in (
        ("formula", "Betti table from the closed formula"),
        ("oracle", "Betti table from exact Koszul homology"),
        ("compare", "Both tables and their differences"),
    ):
        sub = commands.add_parser(mode, help=text)
        sub.set_defaults(mode=mode)
        _add_table_arguments(sub)

    gauss = commands.add_parser("gauss", help="Gaussian binomial [r+s choose r]_w")
    gauss.add_argument("r", type=int)
    gauss.add_argument("s", type=int)
    _add_common_arguments(gauss)

    dim = commands.add_parser("dim", help="dim S_lambda C^n")
    dim.add_argument("partition", help="Comma separated parts, e.g. 3,3")
    dim.add_argument("n", type=int)
    _add_common_arguments(dim)

    hrect = commands.add_parser("hrect", help="Equivariant Betti polynomial of X^{r x s}")
    _add_shape_arguments(hrect, ("r", "s"))
    _add_common_arguments(hrect)

    xhom = commands.add_parser("xhom", help="Homology H_k(X^{r x s})")
    _add_shape_arguments(xhom, ("r", "s"))
    xhom.add_argument("-k", type=int, required=True)
    _add_common_arguments(xhom)

    hilbert = commands.add_parser("hilbert", help="dim of the graded pieces of I_{a x b}")
    _add_shape_arguments(hilbert)
    hilbert.add_argument("--dmax", type=int, required=True)
    hilbert.add_argument(
        "--compare", action="store_true",
        help="Also print the values predicted from the formula's Betti table",
    )
    _add_engine_arguments(hilbert)
    _add_common_arguments(hilbert)

    pdreg = commands.add_parser("pdreg", help="Projective dimension and regularity")
    _add_shape_arguments(pdreg)
    _add_common_arguments(pdreg)
    return parser


def configure_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )
    logging.getLogger(LOGGER_NAME).setLevel(level)


def _settings(args) -> Settings:
    return Settings.from_env().merged(
        cache_dir=args.cache_dir, cell_budget=args.cell_budget, workers=args.workers
    )


def _print(text: str):
    sys.stdout.write(text)


def _notice_if_transposed(transposed: bool):
    if transposed:
        print(TRANSPOSE_NOTICE, file=sys.stderr)


def cmd_betti(args) -> int:
    settings = _settings(args)
    spec = JobSpec(
        a=args.a,
        b=args.b,
        m=args.m,
        n=args.n,
        mode=args.mode,
        max_i=args.max_i,
        max_j=args.max_j,
        format=args.format,
        equivariant=args.equivariant,
        cache_dir=settings.cache_dir,
        cell_budget=settings.cell_budget,
        workers=settings.workers,
    )
    _notice_if_transposed(spec.is_transposed)
    context = JobManager(spec).run()
    _print(render(context))
    if spec.mode == JobManager.Mode.compare and not context.is_match:
        raise errors.EngineMismatch(
            [
                {"i": i, "j": j, "formula": left, "oracle": right}
                for i, j, left, right in context.diff()
            ]
        )
    return 0


def cmd_gauss(args) -> int:
    polynomial = gauss_polynomial(args.r, args.s)
    if args.format == "json":
        _print(dumps({
            "r": args.r,
            "s": args.s,
            "coefficients": [polynomial.coefficient(e) for e in range(polynomial.degree + 1)],
        }))
    else:
        _print(f"{polynomial}\n")
    return 0


def cmd_dim(args) -> int:
    try:
        parts = [int(x) for x in args.partition.split(",") if x.strip()]
    except ValueError as e:
        raise errors.InvalidJob(f"Invalid partition {args.partition!r}") from e
    partition = Partition(tuple(parts))
    if args.n < 0:
        raise errors.InvalidJob(f"n must be nonnegative, got {args.n}")
    dimension = schur_dim(partition, args.n)
    if args.format == "json":
        _print(dumps({"partition": partition.to_json(), "n": args.n, "dimension": dimension}))
    else:
        _print(f"{dimension}\n")
    return 0


def cmd_hrect(args) -> int:
    r, s, m, n = args.r, args.s, args.m, args.n
    if min(r, s, m, n) < 1:
        raise errors.InvalidJob("r, s, m and n must be positive")
    _notice_if_transposed(m < n)
    polynomial = h_rect(r, s, n, m).transpose() if m < n else h_rect(r, s, m, n)
    if args.format == "json":
        _print(dumps({"r": r, "s": s, "m": m, "n": n, "terms": equivariant_terms(polynomial)}))
    else:
        _print(render_equivariant(polynomial))
    return 0


def cmd_xhom(args) -> int:
    r, s, m, n, k = args.r, args.s, args.m, args.n, args.k
    if min(r, s, m, n) < 1 or k < 0:
        raise errors.InvalidJob("r, s, m and n must be positive and k nonnegative")
    summands = x_homology(r, s, m, n, k)
    if args.format == "json":
        _print(dumps({
            "k": k,
            "summands": [
                HomologySummandSchema(
                    rect_r=x.rect_r, rect_s=x.rect_s, multiplicity=x.multiplicity
                ).model_dump()
                for x in summands
            ],
        }))
    elif not summands:
        _print("0\n")
    else:
        _print(" + ".join(
            f"{x.multiplicity}*I_{{{x.rect_r}x{x.rect_s}}}" for x in summands
        ) + "\n")
    return 0


def cmd_hilbert(args) -> int:
    settings = _settings(args)
    spec = JobSpec(a=args.a, b=args.b, m=args.m, n=args.n)
    if args.dmax < 0:
        raise errors.InvalidJob(f"dmax must be nonnegative, got {args.dmax}")
    cache = None
    if settings.cache_dir:
        cache = ResultCache(settings.cache_dir, spec.a, spec.b, spec.m, spec.n)
    oracle = KoszulEngine(
        spec.a,
        spec.b,
        spec.m,
        spec.n,
        cell_budget=settings.cell_budget,
        workers=settings.workers,
        cache=cache,
    )
    values = [oracle.hilbert_function(d) for d in range(args.dmax + 1)]
    if cache is not None:
        cache.save()

    predicted = None
    if args.compare:
        table = FormulaEngine(spec.a, spec.b, spec.m, spec.n).full_table()
        predicted = [
            predicted_hilbert_function(table, spec.m, spec.n, d)
            for d in range(args.dmax + 1)
        ]

    if args.format == "json":
        rows = []
        for d, value in enumerate(values):
            row = {"degree": d, "value": value}
            if predicted is not None:
                row["predicted"] = predicted[d]
            rows.append(row)
        _print(dumps({"a": spec.a, "b": spec.b, "m": spec.m, "n": spec.n, "hilbert": rows}))
    else:
        for d, value in enumerate(values):
            line = f"{d}: {value}"
            if predicted is not None:
                line += f" (formula {predicted[d]})"
            _print(line + "\n")

    if predicted is not None and predicted != values:
        raise errors.EngineMismatch(
            [
                {"degree": d, "formula": p, "oracle": v}
                for d, (p, v) in enumerate(zip(predicted, values))
                if p != v
            ],
            "Predicted and computed Hilbert functions disagree",
        )
    return 0


def cmd_pdreg(args) -> int:
    spec = JobSpec(a=args.a, b=args.b, m=args.m, n=args.n)
    _notice_if_transposed(spec.is_transposed)
    pd, reg = proj_dim_and_reg(spec.a, spec.b, spec.m, spec.n)
    if args.format == "json":
        _print(dumps({"projective_dimension": pd, "regularity": reg}))
    else:
        _print(f"pd={pd} reg={reg}\n")
    return 0


COMMANDS = {
    "table": cmd_betti,
    "formula": cmd_betti,
    "oracle": cmd_betti,
    "compare": cmd_betti,
    "gauss": cmd_gauss,
    "dim": cmd_dim,
    "hrect": cmd_hrect,
    "xhom": cmd_xhom,
    "hilbert": cmd_hilbert,
    "pdreg": cmd_pdreg,
}


def _report(error: errors.CommandError) -> int:
    print(dumps(error.get_report().model_dump()), end="", file=sys.stderr)
    return error.code


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except JobManager.ProcessingError as e:
        return _report(e.command_error)
    except errors.CommandError as e:
        return _report(e)
    except ValidationError as e:
        details = e.errors(include_url=False, include_context=False, include_input=False)
        return _report(errors.InvalidJob("Invalid job", {"errors": details}))
    except (ValueError, Partition.InvalidPartition) as e:
        return _report(errors.InvalidJob(str(e)))
    except Exception as e:
        return _report(errors.InternalError(e))
