"""Command-line front end: check, factorize, generate, enumerate.

Exit codes: 0 when the requested work succeeded and every selected property
holds, 1 when a selected property fails (or a factorization precondition is
violated), 2 on input or usage errors.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import __version__
from .checks import CHECKERS, PROPERTY_NAMES, run_checks
from .core import EPSILON, Chain, Interval, TableFn
from .enumeration import (
    all_binary_tables,
    all_epsilon_standard,
    all_operations,
    binary_associative,
    default_chain,
)
from .errors import NotAnOperationError, PreassocError, PreconditionError
from .factorize import extend_unary_binary, factorize
from .families import (
    TCONORMS,
    TNORMS,
    UNINORMS,
    MedianParams,
    make_ling,
    make_median_family,
    make_quasi_sum,
    make_variadic_seed,
)
from .quasi_inverse import FiniteMap
from .serialization import (
    EPSILON_TOKEN,
    build_report,
    dumps_function,
    dumps_function_compact,
    dumps_report,
    function_digest,
    load_function,
    save_function,
    verdict_to_dict,
)

ALIASES = {
    "assoc": "associative_A1",
    "associative": "associative_A1",
    "preassoc": "preassociative_P1",
    "preassociative": "preassociative_P1",
    "uri": "unarily_range_idempotent",
    "uqri": "unarily_quasi_range_idempotent",
}

#: Filter names that widen enumeration beyond default-ε standard candidates.
_GENERAL_FILTERS = frozenset(
    (
        "standard",
        "preassociative_P1",
        "preassociative_P2",
        "unarily_quasi_range_idempotent",
        "replication_invariant",
        "replication_preinvariant",
        "nondecreasing",
        "nonincreasing",
        "symmetric",
        "convex_sections",
    )
)

ENUMERATE_CHAIN_LIMIT = 3
ENUMERATE_ARITY_LIMIT = 4

NAMED_UNARY = {
    "id": lambda x: x,
    "ln": math.log,
    "exp": math.exp,
    "neg": lambda x: -x,
    "one-minus": lambda x: 1.0 - x,
    "square": lambda x: x * x,
    "cube": lambda x: x ** 3,
}


def _resolve_properties(raw: str, parser) -> list:
    names = []
    for token in raw.split(","):
        token = token.strip()
        if not token:
            continue
        name = ALIASES.get(token, token)
        if name not in PROPERTY_NAMES:
            parser.error(f"unknown property {token!r}; known: {', '.join(PROPERTY_NAMES)}")
        if name not in names:
            names.append(name)
    if not names:
        parser.error("property selection is empty")
    return names


def _truncate(fn: TableFn, max_arity: int) -> TableFn:
    if max_arity == fn.max_arity:
        return fn
    if max_arity > fn.max_arity:
        raise PreassocError(
            f"cannot raise max arity from {fn.max_arity} to {max_arity}: entries missing"
        )
    entries = {t: v for t, v in fn.entries.items() if len(t) <= max_arity}
    return TableFn(fn.domain, fn.codomain, max_arity, fn.default, entries)


def _print_verdicts(verdicts, quiet):
    if quiet:
        return
    width = max(len(name) for name in verdicts)
    for name, v in verdicts.items():
        status = "holds" if v.holds else "FAILS"
        line = f"{name:<{width}}  {status}  cases={v.cases_checked}"
        if v.witness is not None:
            line += f"  witness: {v.witness.describe()}"
        print(line)


def _cmd_check(args, parser) -> int:
    names = _resolve_properties(args.properties, parser)
    fn = load_function(args.file)
    if args.max_arity:
        fn = _truncate(fn, args.max_arity)
    verdicts = run_checks(fn, names)
    if args.json:
        report = build_report(fn, verdicts.values(), __version__)
        print(dumps_report(report), end="")
    else:
        _print_verdicts(verdicts, args.quiet)
    return 0 if all(v.holds for v in verdicts.values()) else 1


def _parse_pins(raw):
    pins = []
    for token in raw.split(","):
        token = token.strip()
        if not token:
            continue
        if ":" not in token:
            raise PreassocError(f"pin {token!r} must have the form value:preimage")
        y, x = token.split(":", 1)
        pins.append((y, x))
    return pins


def _cmd_factorize(args, parser) -> int:
    fn = load_function(args.file)
    if args.max_arity:
        fn = _truncate(fn, args.max_arity)
    pins = _parse_pins(args.pins) if args.pins else None
    try:
        fac = factorize(fn, pins)
    except PreconditionError as exc:
        report = {
            "schema_version": 1,
            "tool_version": __version__,
            "function_digest": function_digest(fn),
            "failed_precondition": verdict_to_dict(exc.verdict),
        }
        if args.out_report:
            with open(args.out_report, "w", encoding="utf-8") as fh:
                fh.write(dumps_report(report))
        if not args.quiet:
            print(f"precondition failed: {exc.verdict.property}")
        if args.json:
            print(dumps_report(report), end="")
        return 1
    save_function(fac.H, args.out_h)
    report = {
        "schema_version": 1,
        "tool_version": __version__,
        "function_digest": function_digest(fn),
        "h_digest": function_digest(fac.H),
        "g": {str(k): str(v) for k, v in fac.g.graph.items()},
        "f": {str(k): (EPSILON_TOKEN if v is EPSILON else str(v)) for k, v in fac.f.graph.items()},
    }
    if args.out_report:
        with open(args.out_report, "w", encoding="utf-8") as fh:
            fh.write(dumps_report(report))
    if args.json:
        print(dumps_report(report), end="")
    elif not args.quiet:
        print(f"wrote associative factor to {args.out_h}")
    return 0


def _csv_floats(raw: str, parser, what: str):
    try:
        return [float(tok) for tok in raw.split(",") if tok.strip()]
    except ValueError:
        parser.error(f"{what} must be a comma-separated list of numbers")


def _named_unary(name, parser, what):
    if name not in NAMED_UNARY:
        parser.error(f"unknown {what} {name!r}; known: {', '.join(sorted(NAMED_UNARY))}")
    return NAMED_UNARY[name]


def _infer_j(phi, grid) -> Interval:
    values = [phi(x) for x in grid]
    if max(values) <= 0:
        return Interval(hi=0.0)
    if min(values) >= 0:
        return Interval(lo=0.0)
    return Interval()


def _cmd_generate(args, parser) -> int:
    family = args.family
    n = args.max_arity
    if family == "median":
        if not args.chain:
            parser.error("--family median needs --chain")
        for p in ("a", "b", "c", "d"):
            if getattr(args, p) is None:
                parser.error(f"--family median needs --{p}")
        chain = Chain(tuple(s.strip() for s in args.chain.split(",") if s.strip()))
        params = MedianParams(args.a, args.b, args.c, args.d)
        fn = make_median_family(params, chain, n)
    elif family in ("tnorm", "tconorm", "uninorm"):
        if not args.grid:
            parser.error(f"--family {family} needs --grid")
        if not args.name:
            parser.error(f"--family {family} needs --name")
        grid = _csv_floats(args.grid, parser, "--grid")
        e = float(args.e) if args.e is not None else None
        fn = make_variadic_seed(family, args.name, grid, n, e=e)
    elif family == "quasi-sum":
        if not args.grid:
            parser.error("--family quasi-sum needs --grid")
        phi = _named_unary(args.phi, parser, "--phi")
        psi = _named_unary(args.psi, parser, "--psi")
        grid = _csv_floats(args.grid, parser, "--grid")
        interval = Interval(min(grid), max(grid))
        gen = make_quasi_sum(phi, psi, interval, _infer_j(phi, grid))
        from .core import tabulate

        fn = tabulate(gen, grid, n, default=EPSILON)
    elif family == "ling":
        if not args.grid:
            parser.error("--family ling needs --grid")
        if args.a is None or args.b is None:
            parser.error("--family ling needs --a and --b")
        phi = _named_unary(args.phi, parser, "--phi")
        psi = _named_unary(args.psi, parser, "--psi")
        grid = _csv_floats(args.grid, parser, "--grid")
        gen = make_ling(phi, psi, float(args.a), float(args.b))
        from .core import tabulate

        fn = tabulate(gen, grid, n, default=EPSILON)
    else:
        parser.error(f"unknown family {family!r}")
        return 2
    save_function(fn, args.out)
    if not args.quiet:
        print(f"wrote {family} table ({len(fn.entries)} entries) to {args.out}")
    return 0


def _passes_filters(fn, names) -> bool:
    # a candidate outside a checker's precondition cannot satisfy the property
    try:
        return all(CHECKERS[name](fn).holds for name in names)
    except (NotAnOperationError, ValueError):
        return False


def _cmd_enumerate(args, parser) -> int:
    filters = []
    special_binary = False
    for token in (args.filter or "").split(","):
        token = token.strip()
        if not token:
            continue
        if token == "associative_binary":
            special_binary = True
            continue
        name = ALIASES.get(token, token)
        if name not in PROPERTY_NAMES:
            parser.error(f"unknown filter {token!r}")
        filters.append(name)
    if special_binary and filters:
        parser.error("associative_binary cannot be combined with other filters")

    size, n = args.chain_size, args.max_arity
    if (size > ENUMERATE_CHAIN_LIMIT or n > ENUMERATE_ARITY_LIMIT) and not args.force:
        print(
            f"refusing chain size {size} / max arity {n} "
            f"(limits {ENUMERATE_CHAIN_LIMIT}/{ENUMERATE_ARITY_LIMIT}); pass --force to override",
            file=sys.stderr,
        )
        return 2
    chain = default_chain(size)
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout

    scanned = 0
    emitted = 0
    try:
        if special_binary:
            for table in all_binary_tables(chain):
                scanned += 1
                if binary_associative(table, chain.elements):
                    fn = extend_unary_binary(
                        FiniteMap.identity(chain.elements), table, n
                    )
                    out.write(dumps_function_compact(fn) + "\n")
                    emitted += 1
        else:
            universe = (
                all_operations(chain, n)
                if any(name in _GENERAL_FILTERS for name in filters)
                else all_epsilon_standard(chain, n)
            )
            for fn in universe:
                scanned += 1
                if _passes_filters(fn, filters):
                    out.write(dumps_function_compact(fn) + "\n")
                    emitted += 1
    finally:
        if out is not sys.stdout:
            out.close()
    if not args.quiet:
        print(f"scanned {scanned} candidates; emitted {emitted}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", help="emit a machine-readable report")
    shared.add_argument("--quiet", action="store_true", help="suppress informational output")
    shared.add_argument(
        "--max-arity", type=int, default=None, help="override/truncate the max arity"
    )

    parser = argparse.ArgumentParser(
        prog="preassoc",
        description="check, factorize, generate, and enumerate variadic functions on finite chains",
    )
    parser.add_argument("--version", action="version", version=f"preassoc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", parents=[shared], help="run property checkers on a function file")
    p_check.add_argument("file")
    p_check.add_argument(
        "--properties",
        required=True,
        help="comma-separated property names (aliases: assoc, preassoc, uri, uqri)",
    )
    p_check.set_defaults(handler=_cmd_check)

    p_fac = sub.add_parser("factorize", parents=[shared], help="factor through an associative operation")
    p_fac.add_argument("file")
    p_fac.add_argument("--out-h", required=True, help="path for the associative factor H")
    p_fac.add_argument("--out-report", default=None, help="path for the JSON report (f, g, digests)")
    p_fac.add_argument("--pins", default=None, help="comma-separated value:preimage pins for g")
    p_fac.set_defaults(handler=_cmd_factorize)

    p_gen = sub.add_parser("generate", parents=[shared], help="tabulate a named operation family")
    p_gen.add_argument(
        "--family",
        required=True,
        choices=("median", "tnorm", "tconorm", "uninorm", "quasi-sum", "ling"),
    )
    p_gen.add_argument("--out", required=True)
    p_gen.add_argument("--chain", help="comma-separated chain symbols (median)")
    p_gen.add_argument("--grid", help="comma-separated real grid points")
    p_gen.add_argument("--name", help=f"catalog name; tnorms: {', '.join(sorted(TNORMS))}; "
                                      f"tconorms: {', '.join(sorted(TCONORMS))}; "
                                      f"uninorms: {', '.join(sorted(UNINORMS))}")
    p_gen.add_argument("--phi", default="id", help="named generator (quasi-sum, ling)")
    p_gen.add_argument("--psi", default="id", help="named generator (quasi-sum, ling)")
    p_gen.add_argument("--a", default=None)
    p_gen.add_argument("--b", default=None)
    p_gen.add_argument("--c", default=None)
    p_gen.add_argument("--d", default=None)
    p_gen.add_argument("--e", default=None, help="uninorm neutral element")
    p_gen.set_defaults(handler=_cmd_generate)

    p_enum = sub.add_parser("enumerate", parents=[shared], help="stream small function universes")
    p_enum.add_argument("--chain-size", type=int, required=True)
    p_enum.add_argument("--filter", default="", help="comma-separated properties; or associative_binary")
    p_enum.add_argument("--out", default=None, help="output path (JSON lines); stdout when omitted")
    p_enum.add_argument("--force", action="store_true", help="override the size guard")
    p_enum.set_defaults(handler=_cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "generate" and not args.max_arity:
        parser.error("generate needs --max-arity")
    if args.command == "enumerate" and not args.max_arity:
        parser.error("enumerate needs --max-arity")
    try:
        return args.handler(args, parser)
    except PreassocError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
