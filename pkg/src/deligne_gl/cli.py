"""Command-line interface.

Exit codes: 0 on success, 1 when a verification suite fails, 2 for usage
errors (argparse's own convention; malformed partitions are rejected during
argument parsing, before any computation starts).
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import bench as bench_mod
from . import bisym, genfun, grothendieck, partitions as pt, specialize, verify
from .partitions import Partition


def _partition_arg(text: str) -> Partition:
    try:
        return pt.parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


_PAIR_RE = re.compile(r"\s*\[([^\]]*)\]\s*,\s*\[([^\]]*)\]\s*\Z")


def _pair_arg(text: str) -> tuple[Partition, Partition]:
    """A (lambda, mu) pair: "[2,1],[1]" or "2,1:1"; "[]" and "" are empty."""
    try:
        m = _PAIR_RE.match(text)
        if m:
            return pt.parse_partition(m.group(1)), pt.parse_partition(m.group(2))
        if ":" in text:
            a, b = text.split(":", 1)
            return pt.parse_partition(a), pt.parse_partition(b)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    raise argparse.ArgumentTypeError(
        f"expected a pair like [2,1],[1] or 2,1:1, got {text!r}"
    )


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _bisym_text(f: bisym.BiSymFunc) -> str:
    if not f.coeffs:
        return "0"
    lines = []
    for (l, m), c in f.terms():
        xs = f"s[{pt.format_partition(l)}](x)" if l else ""
        ys = f"s[{pt.format_partition(m)}](y)" if m else ""
        mono = "*".join(b for b in (xs, ys) if b) or "1"
        lines.append(f"{c:>4}  {mono}")
    return "\n".join(lines)


def _hdet_json(mons: dict) -> list[dict]:
    def key(kv):
        (hx, hy), _ = kv
        return (-(sum(hx) + sum(hy)), pt.canonical_key(hx), pt.canonical_key(hy))

    return [
        {"hx": list(hx), "hy": list(hy), "coeff": str(c)}
        for (hx, hy), c in sorted(mons.items(), key=key)
    ]


def cmd_sclass(args) -> int:
    if args.basis == "S":
        f = grothendieck.s_class(args.lam, args.mu)
        print(_dump(f.to_json_obj()) if args.format == "json" else _bisym_text(f))
        return 0
    mons = grothendieck.mixed_determinant_h_monomials(args.lam, args.mu)
    if args.format == "json":
        print(_dump(_hdet_json(mons)))
    else:
        for item in _hdet_json(mons):
            hx = ",".join(map(str, item["hx"])) or "-"
            hy = ",".join(map(str, item["hy"])) or "-"
            print(f"{item['coeff']:>4}  h[{hx}](x) h[{hy}](y)")
    return 0


def cmd_tensor(args) -> int:
    consts = grothendieck.tensor_structure_constants(args.a, args.b)
    f = bisym.BiSymFunc(consts)
    if args.format == "json":
        print(_dump(f.to_json_obj()))
    else:
        for (l, m), c in f.terms():
            print(f"{c:>4}  X[{pt.format_partition(l)}|{pt.format_partition(m)}]")
    return 0


def cmd_expand(args) -> int:
    with open(args.input) as fh:
        f = bisym.BiSymFunc.from_json_obj(json.load(fh))
    coords = grothendieck.expand_in_s_basis(f)
    g = bisym.BiSymFunc(coords)
    if args.format == "json":
        print(_dump({"basis": "S", "terms": g.to_json_obj()}))
    else:
        for (l, m), c in g.terms():
            print(f"{c:>4}  S[{pt.format_partition(l)}|{pt.format_partition(m)}]")
    return 0


def cmd_specialize(args) -> int:
    specialize.signature_of(args.lam, args.mu, args.n)  # enforce the rank threshold
    ch = specialize.specialize_to_gl_n(grothendieck.s_class(args.lam, args.mu), args.n)
    if args.format == "json":
        terms = [
            {"exponents": list(k), "coeff": str(v)}
            for k, v in sorted(ch.terms.items(), reverse=True)
        ]
        print(_dump(terms))
    else:
        print(ch.to_text())
    return 0


def _suite_kwargs(args) -> dict:
    kwargs = {}
    if args.max_size is not None:
        kwargs.update(
            {
                "detsum": {"max_size": args.max_size},
                "omega": {"max_size": args.max_size},
                "cauchy": {"max_tau": args.max_size},
                "detshift": {"max_n": args.max_size},
                "f_n": {"max_size": args.max_size, "max_n": args.max_size},
                "genfun": {},
            }[args.suite]
        )
    if args.degree is not None:
        if args.suite in ("genfun", "cauchy"):
            kwargs["degree"] = args.degree
    return kwargs


def cmd_verify(args) -> int:
    result = verify.run_suite(args.suite, **_suite_kwargs(args))
    print(verify.format_report(result))
    if args.out_dir:
        from . import report

        csv_path, png_path = report.write_suite_report(args.out_dir, result)
        print(f"wrote {csv_path} and {png_path}")
    return 0 if result.passed else 1


def cmd_verify_genfun(args) -> int:
    spec = genfun.TruncationSpec(
        a=args.alpha_vars, b=args.beta_vars, nx=args.x_vars, ny=args.y_vars, degree=args.degree
    )
    npairs = len(genfun.genfun_pairs(spec))
    print(f"truncation: a={spec.a} b={spec.b} nx={spec.nx} ny={spec.ny} degree={spec.degree}")
    print(f"pairs summed: {npairs}")
    ok, diff = genfun.verify_genfun(spec)
    if ok:
        print("PASS")
        return 0
    print(f"FAIL: first differing monomial {diff}")
    return 1


def cmd_bench(args) -> int:
    rows = bench_mod.run_bench(args.op, args.max_size)
    print(bench_mod.format_rows(args.op, rows))
    if args.out_dir:
        from . import report

        csv_path, png_path = report.write_bench_report(args.out_dir, args.op, rows)
        print(f"wrote {csv_path} and {png_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deligne-gl",
        description="Exact computations in the Grothendieck ring of Rep(GL_t).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sclass", help="class of an indecomposable X_{lambda,mu}")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True,
                   help='partition like "2,1,1"; "" or "[]" for empty')
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--basis", choices=("S", "hdet"), default="S",
                   help="S: Schur-pair expansion; hdet: h-monomial determinant expansion")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(fn=cmd_sclass)

    p = sub.add_parser("tensor", help="structure constants of X_a (x) X_b")
    p.add_argument("--a", type=_pair_arg, required=True,
                   help='pair like "[2,1],[1]" or "2,1:1"')
    p.add_argument("--b", type=_pair_arg, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(fn=cmd_tensor)

    p = sub.add_parser("expand", help="expand a JSON element in the class basis")
    p.add_argument("--input", required=True, help="path to a JSON term array")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("specialize", help="rational GL_n character of a class")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(fn=cmd_specialize)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", choices=sorted(verify.SUITES), required=True)
    p.add_argument("--max-size", type=int, default=None,
                   help="suite-specific size bound (partition size, tau size, or rank)")
    p.add_argument("--degree", type=int, default=None,
                   help="truncation degree for genfun/cauchy")
    p.add_argument("--out-dir", default=None,
                   help="also write CSV + PNG report files here")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("verify-genfun", help="master identity at an explicit truncation")
    p.add_argument("--alpha-vars", type=int, default=2)
    p.add_argument("--beta-vars", type=int, default=2)
    p.add_argument("--x-vars", type=int, default=3)
    p.add_argument("--y-vars", type=int, default=3)
    p.add_argument("--degree", type=int, default=6)
    p.set_defaults(fn=cmd_verify_genfun)

    p = sub.add_parser("bench", help="time the core kernels")
    p.add_argument("--op", choices=("lr", "sclass", "det"), required=True)
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--out-dir", default=None)
    p.set_defaults(fn=cmd_bench)

    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
