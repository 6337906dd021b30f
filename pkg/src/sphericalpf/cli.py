"""Command line front end: ``count``, ``dist``, ``verify`` and ``enumerate``.

Exit status is 0 on success (and on a matching ``verify``), 1 when a ``verify``
check reports a mismatch, 2 on bad usage or out-of-range parameters.
JSON output puts every count in a decimal string.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import logging
import sys
from collections.abc import Iterable, Iterator

from . import arbor, crosscheck, ideal, identity, seqcore
from .errors import ParameterError
from .seqcore import Distribution

SCHEMA_VERSION = "1.0"
LARGE_STREAM = 10**7

log = logging.getLogger("sphericalpf")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=True, ensure_ascii=False)


def _record(command: str, parameters: dict, result) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": {k: v for k, v in parameters.items() if v is not None},
        "result": result,
    }


def _dist_json(d: Distribution) -> dict:
    return {"buckets": {str(k): str(v) for k, v in d.items()}, "total": str(d.total)}


def _require_k(args) -> int:
    if args.k is None:
        raise UsageError(f"--k is required for {args.object!r}")
    return args.k


# ---- count ---------------------------------------------------------------

def _count(args) -> int:
    n, obj, method = args.n, args.object, args.method
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    closed = method == "closed"
    if obj == "pf":
        if closed:
            return identity.power(n + 1, n - 1)
        return sum(1 for a in itertools.product(range(n), repeat=n)
                   if seqcore.is_parking_function(a))
    if obj == "spherical":
        if closed:
            return identity.power(n - 1, n - 1) if n >= 2 else 0
        return sum(1 for _ in seqcore.enumerate_spherical_naive(n))
    if obj == "standard":
        k = _require_k(args)
        return identity.u_parking_count(n, k) if closed else ideal.count_standard(n, k)
    if obj == "uprooted":
        if n < 2:
            raise ParameterError(f"n must be at least 2, got {n}")
        if closed:
            return identity.power(n - 1, n - 1)
        return sum(1 for _ in arbor.enumerate_uprooted(n))
    if obj == "index-tuples":
        if n < 2:
            raise ParameterError(f"n must be at least 2, got {n}")
        if closed:
            return identity.catalan(n - 1)
        return sum(1 for _ in identity.enumerate_index_tuples(n))
    raise UsageError(f"unknown object {obj!r}")


def cmd_count(args, out) -> int:
    value = _count(args)
    params = {"object": args.object, "n": args.n, "k": args.k, "method": args.method}
    if args.format == "json":
        out.write(dumps(_record("count", params, str(value))) + "\n")
    elif args.format == "csv":
        out.write(f"count\n{value}\n")
    else:
        out.write(f"{value}\n")
    return 0


# ---- dist ----------------------------------------------------------------

DISTRIBUTIONS = {
    "spherical-degree": seqcore.spherical_degree_distribution,
    "pf-degree": seqcore.pf_degree_distribution,
    "uprooted-root-degree": lambda n: arbor.uprooted_statistic_distribution(n, "root_degree"),
    "uprooted-surface-inversions":
        lambda n: arbor.uprooted_statistic_distribution(n, "surface_inversions"),
    "tree-inversions": arbor.tree_inversion_distribution,
}


def cmd_dist(args, out) -> int:
    d = DISTRIBUTIONS[args.object](args.n)
    if args.format == "json":
        params = {"object": args.object, "n": args.n}
        out.write(dumps(_record("dist", params, _dist_json(d))) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["key", "count"])
        w.writerows(d.items())
    else:
        for k, v in d.items():
            out.write(f"{k}:{v}\n")
    return 0


# ---- verify --------------------------------------------------------------

def cmd_verify(args, out) -> int:
    fn, takes_k, takes_full = crosscheck.CHECKS[args.check]
    kwargs = {"full": True} if takes_full and args.full_diff else {}
    if takes_k:
        if args.k is None:
            raise UsageError(f"--k is required for check {args.check!r}")
        report = fn(args.n, args.k, **kwargs)
    else:
        report = fn(args.n, **kwargs)
    if args.format == "json":
        params = {"check": args.check, "n": args.n, "k": args.k}
        out.write(dumps(_record("verify", params, report.to_dict(timing=args.timing))) + "\n")
    else:
        out.write(_plain_report(report, args.timing))
    return 0 if report.ok else 1


def _plain_value(v) -> str:
    if isinstance(v, Distribution):
        return " ".join(f"{k}:{c}" for k, c in v.items())
    return str(v)


def _plain_report(report: crosscheck.VerificationReport, timing: bool) -> str:
    params = " ".join(f"{k}={v}" for k, v in report.parameters.items())
    lines = [
        f"{report.check_name} {params}: {report.verdict}",
        f"  lhs ({report.lhs_label}): {_plain_value(report.lhs)}",
        f"  rhs ({report.rhs_label}): {_plain_value(report.rhs)}",
    ]
    for key, val in report.details.items():
        lines.append(f"  {key}: {_plain_value(val)}")
    if report.note:
        lines.append(f"  note: {report.note}")
    for w in report.witnesses:
        lines.append(f"  witness: {w}")
    if timing:
        lines.append(f"  elapsed: {report.elapsed_ms:.1f} ms")
    return "\n".join(lines) + "\n"


# ---- enumerate -----------------------------------------------------------

def _stream(args) -> tuple[Iterator, int]:
    n = args.n
    if args.object == "spherical":
        if n < 1:
            raise ParameterError(f"n must be positive, got {n}")
        return seqcore.enumerate_spherical(n), (identity.power(n - 1, n - 1) if n > 1 else 0)
    if args.object == "standard":
        k = _require_k(args)
        return ideal.enumerate_standard(n, k), identity.u_parking_count(n, k)
    if args.object == "uprooted":
        return arbor.enumerate_uprooted(n), identity.power(n - 1, n - 1)
    raise UsageError(f"unknown object {args.object!r}")


def cmd_enumerate(args, out) -> int:
    stream, expected = _stream(args)
    if args.limit is not None:
        if args.limit < 0:
            raise UsageError("--limit must be nonnegative")
        stream = itertools.islice(stream, args.limit)
    elif expected > LARGE_STREAM:
        log.warning("enumerating %d objects; pass --limit to cap the stream", expected)
    params = {"object": args.object, "n": args.n, "k": args.k, "limit": args.limit}
    is_tree = args.object == "uprooted"
    if args.format == "json":
        for item in stream:
            result = item.to_record() if is_tree else list(item)
            out.write(dumps(_record("enumerate", params, result)) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        if is_tree:
            w.writerow(["root"] + [f"p{i}" for i in range(1, args.n + 1)])
            w.writerows([t.root, *t.parents] for t in stream)
        else:
            w.writerow([f"a{i}" for i in range(1, args.n + 1)])
            w.writerows(stream)
    else:
        for item in stream:
            if is_tree:
                out.write(f"{item.root}:{','.join(map(str, item.parents))}\n")
            else:
                out.write(",".join(map(str, item)) + "\n")
    return 0


# ---- entry point ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sphericalpf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats=("plain", "json", "csv")):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int)
        p.add_argument("--format", choices=formats, default="plain")
        p.add_argument("--output", metavar="PATH", help="write here instead of stdout")

    p = sub.add_parser("count", help="exact count of a family")
    p.add_argument("object", choices=["pf", "spherical", "standard", "uprooted", "index-tuples"])
    p.add_argument("--method", choices=["closed", "brute"], default="closed")
    common(p)
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("dist", help="distribution of a statistic")
    p.add_argument("object", choices=sorted(DISTRIBUTIONS))
    common(p)
    p.set_defaults(handler=cmd_dist)

    p = sub.add_parser("verify", help="run a verification check")
    p.add_argument("check", choices=list(crosscheck.CHECKS))
    p.add_argument("--full-diff", action="store_true", help="report every witness")
    p.add_argument("--timing", action="store_true", help="include elapsed time")
    common(p, formats=("plain", "json"))
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("enumerate", help="stream the objects of a family")
    p.add_argument("object", choices=["spherical", "standard", "uprooted"])
    p.add_argument("--limit", type=int)
    common(p)
    p.set_defaults(handler=cmd_enumerate)
    return parser


def main(argv: Iterable[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(None if argv is None else list(argv))
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                return args.handler(args, fh)
        return args.handler(args, sys.stdout)
    except (UsageError, ParameterError) as exc:
        print(f"sphericalpf: error: {exc}", file=sys.stderr)
        return 2
