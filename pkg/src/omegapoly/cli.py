"""Command-line front end, installed as ``omega``.

Examples::

    omega compute --base 2 --lambdas 2,3 --n 4
    omega count --base 2 --lambdas 2,3 --upto 6
    omega decode --base 3 --lambdas 2,3 --n 6
    omega verify --suite all

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .codec import omega_to_partitions
from .engines import ENGINES, compute_omega
from .identities import check_factorization, factorization_j_range
from .partitions import count_partitions, enumerate_partitions, render_partition
from .poly import PartitionSpec, default_notation, poly_render, poly_to_json, render_monomial
from .verify import SUITES, default_grid, ones


def _lambdas(text: str) -> tuple[int, ...]:
    try:
        lams = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not lams or min(lams) < 1:
        raise argparse.ArgumentTypeError("color bounds must be positive integers")
    if any(a > b for a, b in zip(lams, lams[1:])):
        raise argparse.ArgumentTypeError(f"color bounds must be nondecreasing, got {text}")
    return lams


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _base(text: str) -> int:
    value = _nonneg(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"base must be at least 2, got {value}")
    return value


def _add_spec(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--base", type=_base, required=required, help="base b >= 2")
    p.add_argument("--lambdas", type=_lambdas, required=required, help="nondecreasing bounds, e.g. 2,3")


def _notation(args: argparse.Namespace, spec: PartitionSpec) -> str:
    notation = args.notation or default_notation(spec)
    if notation == "letters" and spec.rho > 3:
        args._parser.error("letter notation supports at most 3 colors")
    return notation


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omega", description="Polynomials characterizing restricted colored b-ary partitions."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print Omega(n)")
    _add_spec(p)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--engine", choices=sorted(ENGINES), default="recurrence")
    p.add_argument("--format", choices=["plain", "latex", "json"], default="plain")
    p.add_argument("--notation", choices=["letters", "indexed"])
    p.set_defaults(func=cmd_compute, _parser=p)

    p = sub.add_parser("count", help="number of partitions of n")
    _add_spec(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=_nonneg)
    g.add_argument("--upto", type=_nonneg)
    p.add_argument("--method", choices=["oracle", "poly"], default="oracle")
    p.set_defaults(func=cmd_count, _parser=p)

    p = sub.add_parser("partitions", help="list the partitions of n")
    _add_spec(p)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_partitions, _parser=p)

    p = sub.add_parser("decode", help="pair each monomial of Omega(n) with its partition")
    _add_spec(p)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--notation", choices=["letters", "indexed"])
    p.set_defaults(func=cmd_decode, _parser=p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    _add_spec(p, required=False)
    p.add_argument("--upto", type=_nonneg)
    p.add_argument("--ell", type=int, action="append", help="exponent ell for factorization (repeatable)")
    p.set_defaults(func=cmd_verify, _parser=p)

    p = sub.add_parser("table", help="list Omega(0..N), factored where a product identity applies")
    _add_spec(p)
    p.add_argument("--upto", type=_nonneg, required=True)
    p.add_argument("--format", choices=["plain", "latex", "json"], default="plain")
    p.add_argument("--notation", choices=["letters", "indexed"])
    p.set_defaults(func=cmd_table, _parser=p)
    return parser


def _spec(args: argparse.Namespace) -> PartitionSpec:
    return PartitionSpec(args.base, args.lambdas)


def cmd_compute(args: argparse.Namespace) -> int:
    spec = _spec(args)
    P = compute_omega(args.n, spec, args.engine)
    if args.format == "json":
        print(poly_render(P, "json"))
    else:
        print(poly_render(P, args.format, _notation(args, spec)))
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    spec = _spec(args)
    ns = [args.n] if args.n is not None else list(range(args.upto + 1))
    if args.method == "oracle":
        counts = [count_partitions(n, spec) for n in ns]
    else:
        counts = [compute_omega(n, spec).evaluate(ones(spec), ones(spec)) for n in ns]
    print(" ".join(map(str, counts)))
    return 0


def cmd_partitions(args: argparse.Namespace) -> int:
    spec = _spec(args)
    parts = enumerate_partitions(args.n, spec)
    decoded = omega_to_partitions(compute_omega(args.n, spec))
    if args.format == "json":
        print(json.dumps({"n": args.n, "partitions": [p.to_json() for p in parts]}))
    else:
        for p in parts:
            print(render_partition(p))
    if set(decoded) != set(parts) or len(decoded) != len(parts):
        print(f"cross-check failed: Omega({args.n}) decodes to {len(decoded)} partitions, "
              f"enumeration found {len(parts)}", file=sys.stderr)
        return 1
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    spec = _spec(args)
    notation = _notation(args, spec)
    P = compute_omega(args.n, spec)
    monos = P.monomials()
    parts = omega_to_partitions(P)
    texts = [render_monomial(m, spec, "plain", notation) for m in monos]
    width = max(len(t) for t in texts)
    for text, part in zip(texts, parts):
        print(f"{text:<{width}} | {render_partition(part)}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if (args.base is None) != (args.lambdas is None):
        args._parser.error("--base and --lambdas must be given together")
    specs = [_spec(args)] if args.base is not None else None
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        kwargs = {}
        if args.upto is not None:
            kwargs["upto"] = args.upto
        if name == "factorization" and args.ell:
            kwargs["ells"] = args.ell
        if name == "counts":
            checks = SUITES[name](specs, **kwargs)
        else:
            checks = SUITES[name](specs or default_grid(), **kwargs)
        for check in checks:
            print(check.line(), flush=True)
            failed += not check.ok
    print(f"{'FAILED' if failed else 'OK'}: {failed} failing check(s)")
    return 1 if failed else 0


def _factored(n: int, spec: PartitionSpec) -> tuple[int, int, int] | None:
    """First (m, ell, j) with n = m*b**ell + j, m >= 1, j >= 1 in the guaranteed range."""
    b = spec.base
    ell = 1
    while b**ell <= n:
        m, j = divmod(n, b**ell)
        if j >= 1 and j in factorization_j_range(spec, ell):
            return m, ell, j
        ell += 1
    return None


def cmd_table(args: argparse.Namespace) -> int:
    spec = _spec(args)
    rows = []
    status = 0
    for n in range(args.upto + 1):
        P = compute_omega(n, spec)
        found = _factored(n, spec)
        report = check_factorization(*found, spec) if found else None
        if report is not None and not report.holds:
            status = 1
            report = None
        rows.append((n, P, report))
    if args.format == "json":
        out = []
        for n, P, report in rows:
            entry = {"n": n, "omega": poly_to_json(P), "factors": None}
            if report is not None:
                entry["factors"] = [poly_to_json(report.rhs_left), poly_to_json(report.rhs_right)]
            out.append(entry)
        print(json.dumps(out))
        return status
    notation = _notation(args, spec)
    for n, P, report in rows:
        if report is not None:
            left = poly_render(report.rhs_left, args.format, notation)
            right = poly_render(report.rhs_right, args.format, notation)
            body = f"({left})({right})" if args.format == "latex" else f"({left})*({right})"
        else:
            body = poly_render(P, args.format, notation)
        print(f"{n} | {body}")
    return status


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
