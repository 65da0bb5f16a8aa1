"""Command-line front end.

Exit codes: 0 on success, 1 when a check or grid run finds a violation
outside the quarantine list, 2 on usage, parse or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import identities
from .errors import (
    ConfigError,
    HoradamError,
    IndexGuardExceeded,
    ParseError,
    PreconditionUnmet,
    UnknownIdentity,
    UnknownPreset,
)
from .identities import IdentityInstance, Pass, Skip
from .numeric import format_scalar, parse_scalar
from .sequence import DEFAULT_MAX_INDEX, HoradamParams, HoradamSequence, parse_preset
from .verify import (
    DEFAULT_WITNESS_LIMIT,
    GridSpec,
    benchmark,
    default_grid,
    format_bench,
    load_grid,
    run_grid,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad flag combination detected after argparse succeeded."""


def _add_params(parser):
    group = parser.add_argument_group("parameters (a preset, or all of --a --b --p --q)")
    group.add_argument("--preset", help="fibonacci, lucas, pell, jacobsthal, g(a,b), u(p,q), v(p,q), custom(a,b,p,q)")
    for name in ("a", "b", "p", "q"):
        group.add_argument(f"--{name}", metavar="SCALAR", help="exact scalar such as 3, -1/2 or 1+2i")


def _add_indices(parser, names=("m", "n", "r")):
    for name in names:
        parser.add_argument(f"--{name}", type=int)


def _params(args) -> HoradamParams:
    explicit = [getattr(args, name) for name in ("a", "b", "p", "q")]
    if args.preset is not None:
        if any(v is not None for v in explicit):
            raise UsageError("give either --preset or --a --b --p --q, not both")
        return parse_preset(args.preset)
    if any(v is None for v in explicit):
        raise UsageError("give --preset or all four of --a --b --p --q")
    try:
        return HoradamParams(*(parse_scalar(v) for v in explicit))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise UsageError(str(exc)) from None


def _indices(args, ident, names=("m", "n", "r", "k"), defaults=None) -> dict:
    """Index values for ``ident``; flags for indices it does not use are errors."""
    given = {name: getattr(args, name) for name in names}
    unused = [name for name in names if given[name] is not None and name not in ident.indices]
    if unused:
        flags = ", ".join(f"--{n}" for n in unused)
        raise UsageError(f"{ident.id} does not use {flags} (indices: {', '.join(ident.indices)})")
    values = {}
    for name in (n for n in ident.indices if n in names):
        value = given.get(name)
        if value is None:
            if defaults is None or name not in defaults:
                raise UsageError(f"{ident.id} requires --{name}")
            value = defaults[name]
        values[name] = value
    return values


# -- subcommands -------------------------------------------------------------------

def cmd_term(args, out):
    params = _params(args)
    seq = HoradamSequence(params, args.max_index)
    print(format_scalar(seq.term(args.n)), file=out)
    return EXIT_OK


def print_identities(out=sys.stdout):
    """One line per catalog entry: id, anchor, indices, preconditions, formula."""
    for ident in identities.registry():
        tag = "  [quarantined]" if ident.quarantined else ""
        family = "" if ident.family == "any" else f"  family={ident.family}"
        print(
            f"{ident.id}  anchor={ident.anchor}  indices={','.join(ident.indices)}  "
            f"requires={ident.requires}{family}{tag}  :: {ident.formula}",
            file=out,
        )


def cmd_identities(args, out):
    print_identities(out)
    return EXIT_OK


def cmd_check(args, out):
    ident = identities.get(args.id)
    params = _params(args)
    values = _indices(args, ident)
    if values.get("k", 0) < 0:
        raise UsageError("--k must be non-negative")
    inst = IdentityInstance(ident.id, params, **values)
    ctx = identities.Context(params, args.max_index)
    outcome = identities.check(inst, ctx)
    if isinstance(outcome, Pass):
        print(f"PASS lhs=rhs={format_scalar(outcome.value)}", file=out)
        return EXIT_OK
    if isinstance(outcome, Skip):
        if outcome.reason.startswith("family="):
            print(f"SKIP not applicable {outcome.reason}", file=out)
        else:
            print(f"SKIP precondition {outcome.reason}", file=out)
        return EXIT_OK
    print(f"VIOLATED lhs={format_scalar(outcome.lhs)} rhs={format_scalar(outcome.rhs)}", file=out)
    return EXIT_VIOLATION


def _id_list(text):
    return [part.strip() for part in text.split(",") if part.strip()]


def cmd_verify(args, out):
    spec = load_grid(args.grid) if args.grid else default_grid()
    if args.quarantine is not None:
        extra = [] if args.quarantine.strip().lower() == "none" else _id_list(args.quarantine)
        base = () if args.quarantine.strip().lower() == "none" else spec.quarantine
        spec = _replace(spec, quarantine=tuple(dict.fromkeys(base + tuple(extra))))
    if args.max_index is not None:
        spec = _replace(spec, max_index=args.max_index)
    report = run_grid(spec, jobs=args.jobs, witness_limit=args.witness_limit)
    print(report.format_table(), file=out)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report.to_dict(), fh, indent=2)
            fh.write("\n")
    return EXIT_VIOLATION if report.violations else EXIT_OK


def _replace(spec: GridSpec, **changes) -> GridSpec:
    fields = dict(
        parameter_sets=spec.parameter_sets, m_range=spec.m_range, n_range=spec.n_range,
        r_range=spec.r_range, k_range=spec.k_range, identity_filter=spec.identity_filter,
        quarantine=spec.quarantine, max_index=spec.max_index,
    )
    fields.update(changes)
    return GridSpec(**fields)


def cmd_bench(args, out):
    ident = identities.get(args.id)
    params = _params(args)
    values = _indices(args, ident, names=("m", "n", "r"), defaults={"m": 0, "n": 0, "r": 2})
    try:
        k_values = [int(part) for part in _id_list(args.k)]
    except ValueError:
        raise UsageError(f"--k expects comma-separated integers, got {args.k!r}") from None
    if not k_values or any(k < 0 for k in k_values):
        raise UsageError("--k needs one or more non-negative integers")
    if "k" not in ident.indices:
        raise UsageError(f"{ident.id} has no summation length k to benchmark")
    rows = benchmark(ident.id, params, k_values, max_index=args.max_index, **values)
    print(format_bench(ident.id, rows), file=out)
    return EXIT_OK if all(row.equal for row in rows) else EXIT_VIOLATION


# -- entry point ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="horadam",
        description="Exact evaluation and verification of weighted Horadam-sequence sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("term", help="print w_n for a parameter set")
    _add_params(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-index", type=int, default=DEFAULT_MAX_INDEX)
    p.set_defaults(func=cmd_term)

    p = sub.add_parser("identities", help="list the identity catalog")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("check", help="check one identity at one instance")
    p.add_argument("--id", required=True)
    _add_params(p)
    _add_indices(p, ("m", "n", "r", "k"))
    p.add_argument("--max-index", type=int, default=DEFAULT_MAX_INDEX)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="sweep a grid of parameters and indices")
    p.add_argument("--grid", metavar="FILE", help="grid config; the built-in default grid if omitted")
    p.add_argument("--out", metavar="FILE", help="write the JSON report here")
    p.add_argument("--quarantine", metavar="IDS", help="extra comma-separated ids to quarantine, or 'none' to clear")
    p.add_argument("--max-index", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--witness-limit", type=int, default=DEFAULT_WITNESS_LIMIT,
                   help="witnesses kept per identity; negative keeps all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the direct sum against the closed form")
    p.add_argument("--id", required=True)
    _add_params(p)
    _add_indices(p, ("m", "n", "r"))
    p.add_argument("--k", required=True, metavar="K[,K...]")
    p.add_argument("--max-index", type=int, default=DEFAULT_MAX_INDEX)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, ParseError, ConfigError, UnknownPreset, IndexGuardExceeded) as exc:
        print(f"error: {exc}", file=err)
    except UnknownIdentity as exc:
        print(f"error: unknown identity {exc.args[0]!r}; see 'horadam identities'", file=err)
    except PreconditionUnmet as exc:
        print(f"error: precondition {exc.reason} fails at this instance", file=err)
    except (HoradamError, ValueError) as exc:
        print(f"error: {exc}", file=err)
    return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
