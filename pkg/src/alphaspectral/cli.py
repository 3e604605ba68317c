"""Command-line surface.

Subcommands: lambda (radii of graph6 input), gen (named families),
extremal (edge / spectral Turan search), verify (inequality battery),
sequence (ratio diagnostics). Exit status 0 on success, 1 on verification
failure, 2 on usage or parse errors. Floating output is printed to 12
significant digits.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .enumeration import EnumFilter
from .extremal import (
    min_degree_threshold,
    pi_sequence,
    spectral_extremal,
    turan_number,
)
from .graph6 import decode_graph6, encode_graph6
from .graphs import FAMILY_TAGS, generate
from .spectral import check_alpha, spectral_radius
from .structure import as_family
from .verifier import run_battery


def _parse_alpha_list(text: str) -> list[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"bad alpha list {text!r}") from None
    if not values:
        raise ValueError("alpha list is empty")
    return [check_alpha(a) for a in values]


def _parse_family(text: str):
    members = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok.split(":")[0] in FAMILY_TAGS:
            members.append(generate(tok))
        else:
            members.append(decode_graph6(tok))
    if not members:
        raise ValueError("family specification is empty")
    return as_family(members)


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
    else:
        lo_s = hi_s = text
    try:
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise ValueError(f"bad range {text!r}; expected LO..HI") from None
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def _emit(text: str, args) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt(x: float) -> str:
    return f"{x:.12g}"


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_lambda(args) -> int:
    alphas = sorted(_parse_alpha_list(args.alphas))
    if args.graphs == "-":
        text = sys.stdin.read()
    else:
        with open(args.graphs) as fh:
            text = fh.read()
    inputs = []
    for i, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            inputs.append((line, decode_graph6(line)))
        except ValueError as exc:
            raise ValueError(f"line {i}: {exc}") from None
    rows = []
    for key, G in inputs:
        for a in alphas:
            res = spectral_radius(G, a)
            rows.append((key, a, res.lambda_alpha, res.residual))
    if args.format == "json":
        payload = [
            {"graph6": k, "alpha": a, "lambda_alpha": lam, "residual": res}
            for k, a, lam, res in rows
        ]
        _emit(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n", args)
    elif args.format == "csv":
        lines = ["graph6,alpha,lambda_alpha,residual"]
        lines += [f"{k},{_fmt(a)},{_fmt(lam)},{_fmt(res)}" for k, a, lam, res in rows]
        _emit("\n".join(lines) + "\n", args)
    else:
        width = max(len(k) for k, *_ in rows) if rows else 6
        lines = [f"{'graph6':<{width}}  {'alpha':>8}  {'lambda_alpha':>16}  {'residual':>10}"]
        lines += [
            f"{k:<{width}}  {_fmt(a):>8}  {_fmt(lam):>16}  {res:>10.2e}"
            for k, a, lam, res in rows
        ]
        _emit("\n".join(lines) + "\n", args)
    return 0


def cmd_gen(args) -> int:
    G = generate(args.spec)
    _emit(encode_graph6(G) + "\n", args)
    return 0


def cmd_extremal(args) -> int:
    family = _parse_family(args.family)
    if args.edges:
        if args.min_degree_frac is not None:
            raise ValueError("--min-degree-frac applies to the spectral search, not --edges")
        record = turan_number(args.n, family, force=args.force)
    else:
        if args.alpha is None:
            raise ValueError("spectral search needs -a/--alpha (or pass --edges)")
        alpha = check_alpha(args.alpha)
        filt = None
        if args.min_degree_frac is not None:
            if family.chi < 2:
                raise ValueError("family chromatic number must be at least 2")
            density = 0.0 if family.chi == 2 else 1 - 1 / (family.chi - 1)
            md = min(
                max(min_degree_threshold(density, args.min_degree_frac, args.n), 0),
                args.n - 1,
            )
            filt = EnumFilter(min_degree=md)
        record = spectral_extremal(
            args.n, alpha, family, filt, tie_tol=args.tie_tol, force=args.force
        )
    if args.format == "json":
        _emit(record.to_json() + "\n", args)
    elif args.format == "csv":
        _emit(record.csv_header() + "\n" + record.to_csv_row() + "\n", args)
    else:
        opt = record.optimum if isinstance(record.optimum, int) else _fmt(record.optimum)
        lines = [
            f"n:               {record.n}",
            f"alpha:           {'-' if record.alpha is None else _fmt(record.alpha)}",
            f"family:          {' '.join(record.family_keys())}",
            f"optimum:         {opt}",
            f"argmax:          {' '.join(record.argmax)}",
            f"classes_searched:{record.classes_searched}",
            f"elapsed:         {record.elapsed:.3f}s",
        ]
        _emit("\n".join(lines) + "\n", args)
    return 0


def cmd_verify(args) -> int:
    alphas = _parse_alpha_list(args.alphas)
    try:
        rs = [int(tok) for tok in args.r.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"bad r list {args.r!r}") from None
    report = run_battery(args.n_max, alphas, rs)
    if args.format == "json":
        _emit(report.to_json() + "\n", args)
    else:
        _emit(report.to_table(), args)
    return 0 if report.passed else 1


def cmd_sequence(args) -> int:
    family = _parse_family(args.family)
    alpha = check_alpha(args.alpha)
    lo, hi = _parse_range(args.n)
    diag = pi_sequence(family, alpha, lo, hi, force=args.force)
    if args.format == "json":
        _emit(diag.to_json() + "\n", args)
    else:
        _emit(diag.to_csv(), args)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alphaspectral",
        description="alpha-spectral radii and exact small-order extremal search",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format="table"):
        p.add_argument("--format", choices=("table", "json", "csv"), default=default_format)
        p.add_argument("--output", help="write output to this path instead of stdout")
        p.add_argument(
            "--workers",
            type=int,
            default=1,
            help="partition count; results are independent of this value",
        )

    p = sub.add_parser("lambda", help="alpha-spectral radii of graph6 input")
    p.add_argument("graphs", nargs="?", default="-", help="graph6 file, or - for stdin")
    p.add_argument("-a", "--alphas", required=True, help="comma-separated alpha values")
    common(p)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("gen", help="emit a named family graph as graph6")
    p.add_argument("spec", help="tag:param[:param], e.g. turan:7:3 or wheel:6")
    common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("extremal", help="exact extremal search over family-free classes")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-a", "--alpha", type=float)
    p.add_argument("-F", "--family", required=True, help="named specs and/or graph6, comma-separated")
    p.add_argument("--edges", action="store_true", help="maximize edge count instead of the radius")
    p.add_argument("--min-degree-frac", type=float, help="epsilon for the min-degree-restricted class")
    p.add_argument("--tie-tol", type=float, default=1e-9)
    p.add_argument("--force", action="store_true", help="override the enumeration cap")
    common(p)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("verify", help="run the inequality battery")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--alphas", required=True, help="comma-separated alpha values")
    p.add_argument("--r", default="2,3", help="comma-separated r values")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sequence", help="scaled-optimum trend table for a family")
    p.add_argument("-F", "--family", required=True)
    p.add_argument("-a", "--alpha", type=float, required=True)
    p.add_argument("--n", required=True, help="order range LO..HI")
    p.add_argument("--force", action="store_true")
    common(p, default_format="csv")
    p.set_defaults(func=cmd_sequence)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
