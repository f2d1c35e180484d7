"""Command-line front end: ``pbwflag {tableaux,ideal,verify,straighten,coords}``.

Exit status is 0 when every requested check passes, 1 when a check fails,
2 for invalid input and 3 when an enumeration or step cap is exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction

from .errors import PreconditionError, ResourceError
from .geometry import (
    coordinate_map,
    flatness_check,
    independence_certificate,
    vanishing_negative_control,
    verify_vanishing,
)
from .plucker import generate_generators, graded_piece_dimension, straighten
from .tableaux import (
    PartitionShape,
    default_cap,
    enumerate_sspbw,
    enumerate_vinberg,
    partition_of_weight,
    psi,
    psi_inv,
    weight_of_shape,
    weyl_dim,
)

log = logging.getLogger("pbwflag")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _columns(text: str) -> list[tuple[int, ...]]:
    # "1,2;3" -> [(1, 2), (3,)]
    return [_ints(part) for part in text.split(";") if part.strip()]


def _weight_and_shape(args) -> tuple[tuple[int, ...], PartitionShape]:
    if (args.weight is None) == (args.shape is None):
        raise UsageError("give exactly one of --weight or --shape")
    if args.weight is not None:
        if len(args.weight) != args.n - 1:
            raise UsageError(f"--weight needs {args.n - 1} entries for n={args.n}")
        return args.weight, partition_of_weight(args.weight)
    shape = PartitionShape(args.shape)
    return weight_of_shape(shape, args.n), shape


# --------------------------------------------------------------------------
# subcommands: each returns (payload, csv records, passed)


def cmd_tableaux(args):
    weight, shape = _weight_and_shape(args)
    tabs = enumerate_sspbw(shape, args.n, args.cap)
    if args.count_only:
        return len(tabs), [{"count": len(tabs)}], True
    if args.check_bijection:
        configs = enumerate_vinberg(weight, args.cap)
        images = [psi(s, weight) for s in configs]
        ok = (
            all(psi_inv(T, args.n) == s for s, T in zip(configs, images))
            and set(images) == set(tabs)
            and len(tabs) == weyl_dim(weight, args.n)
        )
        payload = {
            "check": "bijection",
            "params": {"n": args.n, "weight": list(weight)},
            "pass": ok,
            "details": [{"configurations": len(configs), "tableaux": len(tabs), "weyl_dim": weyl_dim(weight, args.n)}],
        }
        return payload, [{"check": "bijection", "pass": ok, **payload["details"][0]}], ok
    payload = [T.to_json() for T in tabs]
    records = [{"index": i, "shape": json.dumps(T["shape"]), "rows": json.dumps(T["rows"])} for i, T in enumerate(payload)]
    return payload, records, True


def cmd_ideal(args):
    gens = generate_generators(args.n, args.dims, args.variant, args.cap)
    payload = {
        "variant": args.variant,
        "n": args.n,
        "dims": list(args.dims),
        "generators": [g.serialize() for g in gens],
    }
    return payload, [{"generator_id": i, "generator": g} for i, g in enumerate(payload["generators"])], True


def _certificate_records(cert: dict):
    base = {"check": cert["check"], "params": json.dumps(cert["params"], sort_keys=True), "pass": cert["pass"]}
    if not cert["details"]:
        return [base]
    return [{**base, **{k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in d.items()}} for d in cert["details"]]


def cmd_verify(args):
    if args.check == "vanishing":
        cert = verify_vanishing(args.n, args.dims, args.variant, args.coords)
    elif args.check == "negative-control":
        cert = vanishing_negative_control(args.n, args.dims)
    elif args.check == "independence":
        _, shape = _weight_and_shape(args)
        cert = independence_certificate(shape, args.n, args.cap)
    elif args.check == "flatness":
        if not args.deg:
            raise UsageError("flatness needs at least one --deg")
        cert = flatness_check(args.n, args.dims, args.deg, args.cap)
    else:  # dimension
        if not args.deg:
            raise UsageError("dimension needs --deg")
        t_value = Fraction(args.t) if args.t is not None else None
        if args.variant == "t" and t_value is None:
            raise UsageError("--variant t needs --t")
        details, ok = [], True
        for deg in args.deg:
            dim = graded_piece_dimension(args.n, args.dims, args.variant, deg, t_value, args.cap)
            w = [0] * (args.n - 1)
            for d, m in zip(args.dims, deg):
                w[d - 1] += m
            expected = weyl_dim(w, args.n)
            ok &= dim == expected
            details.append({"deg": list(deg), "dimension": dim, "weyl_dim": expected})
        params = {"n": args.n, "dims": list(args.dims), "variant": args.variant, "t": args.t}
        payload = {"check": "dimension", "params": params, "pass": ok, "details": details}
        return payload, _certificate_records(payload), ok
    payload = cert.to_json()
    return payload, _certificate_records(payload), cert.passed


def cmd_straighten(args):
    result = straighten(args.columns, args.variant, args.n)
    terms = [{"coefficient": str(q), **T.to_json()} for T, q in result.items()]
    payload = {"variant": args.variant, "n": args.n, "input": [list(c) for c in args.columns], "terms": terms}
    records = [{"coefficient": t["coefficient"], "shape": json.dumps(t["shape"]), "rows": json.dumps(t["rows"])} for t in terms]
    return payload, records, True


def cmd_coords(args):
    if not 1 <= args.d < args.n:
        raise UsageError("need 1 <= d < n")
    cmap = coordinate_map(args.n, args.d, args.kind)
    payload = {
        "kind": args.kind,
        "n": args.n,
        "d": args.d,
        "coordinates": [{"J": list(J), "value": p.serialize()} for J, p in cmap.items()],
    }
    records = [{"J": json.dumps(e["J"]), "value": e["value"]} for e in payload["coordinates"]]
    return payload, records, True


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    def global_options(p, default):
        # accepted both before and after the subcommand
        p.add_argument("--format", choices=("json", "csv"), default=default("json"))
        p.add_argument("--output", default=default(None), help="write machine output here instead of standard out")
        p.add_argument("--cap", type=int, default=default(None), help="enumeration cap (default: $PBWFLAG_CAP or 200000)")
        p.add_argument("-v", "--verbose", action="store_true", default=default(False))

    parser = argparse.ArgumentParser(prog="pbwflag", description="PBW-degenerate flag varieties of type A, exactly.")
    global_options(parser, lambda v: v)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, dims=True):
        global_options(p, lambda v: argparse.SUPPRESS)
        p.add_argument("--n", type=int, required=True)
        if dims:
            p.add_argument("--dims", type=_ints, default=None, help="comma-separated subset of 1..n-1 (default: all)")

    p = sub.add_parser("tableaux", help="enumerate semistandard PBW-tableaux")
    common(p, dims=False)
    p.add_argument("--weight", type=_ints)
    p.add_argument("--shape", type=_ints)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--check-bijection", action="store_true")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("ideal", help="generators of the classical, degenerate or t-deformed ideal")
    common(p)
    p.add_argument("--variant", choices=("classical", "degenerate", "t"), default="degenerate")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("verify", help="run a certificate")
    p.add_argument("check", choices=("vanishing", "negative-control", "independence", "flatness", "dimension"))
    common(p)
    p.add_argument("--variant", choices=("classical", "degenerate", "t"), default="degenerate")
    p.add_argument("--coords", choices=("classical", "degenerate"), default=None)
    p.add_argument("--weight", type=_ints)
    p.add_argument("--shape", type=_ints)
    p.add_argument("--deg", type=_ints, action="append", help="multidegree, repeatable")
    p.add_argument("--t", default=None, help="value of t for --variant t, e.g. -1/2")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("straighten", help="rewrite a product of Plücker variables in the semistandard basis")
    common(p, dims=False)
    p.add_argument("--columns", type=_columns, required=True, help='e.g. "1,3;2"')
    p.add_argument("--variant", choices=("classical", "degenerate"), default="degenerate")
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("coords", help="orbit coordinates X_J(c) or the polynomials D^a_J")
    common(p, dims=False)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--kind", choices=("degenerate", "classical", "Da"), default="degenerate")
    p.set_defaults(func=cmd_coords)
    return parser


def _render(payload, records, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    buf = io.StringIO()
    fields: list[str] = []
    for r in records:
        fields.extend(k for k in r if k not in fields)
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    return buf.getvalue()


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    if args.cap is None:
        args.cap = default_cap()
    if getattr(args, "dims", None) is None and hasattr(args, "dims"):
        args.dims = tuple(range(1, args.n))
    try:
        if args.n < 2:
            raise UsageError("n must be at least 2")
        payload, records, passed = args.func(args)
    except ResourceError as exc:
        print(f"pbwflag: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, PreconditionError, ValueError) as exc:
        print(f"pbwflag: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = _render(payload, records, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
