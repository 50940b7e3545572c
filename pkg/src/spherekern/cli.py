"""Command-line front end.

Exit codes: 0 success / pass, 1 certification or verdict failure,
2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import harmonics as hm
from . import kernels as kn
from . import spd_analysis as sa
from .fileio import (
    FileFormatError,
    dumps_report,
    load_scheme,
    parse_point,
    read_points,
    repr_float,
)
from .special_fn import DomainError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _config(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k != "func"}


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _report(args, payload: dict) -> None:
    _emit(args, dumps_report({"command": args.command, "config": _config(args), **payload}))


def _complex(z) -> list[float]:
    return [float(z.real), float(z.imag)]


def _require(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required for '{args.command}'")


def _load_points(args, d: int) -> list[hm.PolarPoint]:
    if args.points:
        pd, pts = read_points(args.points)
        if pd != d:
            raise FileFormatError(f"{args.points}: d={pd} but the scheme has d={d}")
        return pts
    if args.random:
        return hm.random_points(d, args.random, args.seed)
    raise UsageError("give --points FILE or --random N")


# -- subcommands ---------------------------------------------------------------

def cmd_eval(args) -> int:
    if args.scheme:
        s = load_scheme(args.scheme)
        if len(args.pair or []) != 2:
            raise UsageError("--scheme needs exactly two --pair points")
        p, q = (parse_point(t, s.d) for t in args.pair)
        kpq, kqp = kn.kernel_eval(s, p, q), kn.kernel_eval(s, q, p)
        if args.format == "csv":
            _emit(args, "name,re,im\n"
                  f"K(p,q),{repr_float(kpq.real)},{repr_float(kpq.imag)}\n"
                  f"K(q,p),{repr_float(kqp.real)},{repr_float(kqp.imag)}\n")
        else:
            _report(args, {"K_pq": _complex(kpq), "K_qp": _complex(kqp),
                           "hermitian_defect": abs(kpq - kqp.conjugate())})
        return EXIT_OK
    _require(args, "index", "point")
    a = hm.MultiIndex(tuple(int(x) for x in args.index.split(",")))
    if args.d is not None and a.d != args.d:
        raise UsageError(f"index has {len(a)} entries, --d {args.d} needs {args.d - 1}")
    p = parse_point(args.point, a.d)
    y = hm.eval_harmonic(a, p)
    if args.format == "csv":
        _emit(args, f"index,re,im\n\"{a}\",{repr_float(y.real)},{repr_float(y.imag)}\n")
    else:
        _report(args, {"index": list(a.entries), "theta": list(p.theta), "value": _complex(y)})
    return EXIT_OK


def cmd_addition_test(args) -> int:
    _require(args, "d", "k_max")
    errs = hm.addition_formula_errors(args.d, args.k_max, args.pairs, args.seed, args.perturb)
    worst = max(errs)
    passed = worst <= 1e-8
    if args.format == "csv":
        _emit(args, "degree,max_rel_error\n"
              + "".join(f"{k},{repr_float(e)}\n" for k, e in enumerate(errs)))
    else:
        _report(args, {"max_rel_error": worst, "per_degree": errs, "threshold": 1e-8,
                       "passed": passed})
    return EXIT_OK if passed else EXIT_FAIL


def cmd_tau(args) -> int:
    _require(args, "d", "k")
    if args.j is not None:
        idx = hm.enumerate_tau_jzero(args.d, args.k, args.j)
    else:
        idx = hm.enumerate_tau(args.d, args.k)
    if args.format == "csv":
        _emit(args, "".join(str(a).replace(",", " ") + "\n" for a in idx))
    else:
        _report(args, {"count": len(idx), "dim_harmonic": hm.dim_harmonic(args.d, args.k),
                       "indices": [list(a.entries) for a in idx]})
    return EXIT_OK


def _scheme_and_points(args):
    _require(args, "scheme")
    s = load_scheme(args.scheme)
    return s, _load_points(args, s.d)


def cmd_gram(args) -> int:
    s, pts = _scheme_and_points(args)
    K = kn.gram_matrix(s, pts)
    if args.format == "csv":
        rows = ["i,j,re,im"] + [f"{i},{j},{repr_float(K[i, j].real)},{repr_float(K[i, j].imag)}"
                                for i in range(K.shape[0]) for j in range(K.shape[1])]
        _emit(args, "\n".join(rows) + "\n")
    else:
        _report(args, {"n": K.shape[0], "truncation_level": s.k_max,
                       "real": K.real.tolist(), "imag": K.imag.tolist()})
    return EXIT_OK


def cmd_check_spd(args) -> int:
    s, pts = _scheme_and_points(args)
    report = kn.check_spd(s, pts, args.tol)
    witness = kn.spd_witness_search(s, pts, args.tol)
    _report(args, {"report": report.to_dict(),
                   "collocation_witness": None if witness is None
                   else [_complex(c) for c in witness]})
    return EXIT_OK if report.is_definite else EXIT_FAIL


def cmd_witness(args) -> int:
    s, pts = _scheme_and_points(args)
    witness = kn.spd_witness_search(s, pts, args.tol)
    payload = {"truncation_level": s.k_max, "witness": None}
    if witness is not None:
        K = kn.gram_matrix(s, pts)
        payload["witness"] = [_complex(c) for c in witness]
        payload["quadratic_form"] = kn.quadratic_form(K, witness)
    _report(args, payload)
    return EXIT_OK if witness is None else EXIT_FAIL


def _rates(args) -> int:
    _require(args, "scheme", "j")
    s = load_scheme(args.scheme)
    check = sa.corollary_rate_check(s, args.j)
    if args.out:
        base = Path(args.out)
        base.with_name(base.name + ".even.csv").write_text(check.even.to_csv())
        base.with_name(base.name + ".odd.csv").write_text(check.odd.to_csv())
    payload = {"verdict": "consistent-with-sufficiency" if check.verdict else "not-established",
               "even": check.even.to_dict(), "odd": check.odd.to_dict(),
               "truncation_level": s.k_max,
               "window": "last half, 4 blocks; final < first / 2"}
    if args.weighted:
        sums = sa.weighted_complement_sum(s, args.j)
        payload["weighted_even"] = sums.even.to_dict()
        payload["weighted_odd"] = sums.odd.to_dict()
    text = dumps_report({"command": args.command, "config": _config(args), **payload})
    sys.stdout.write(text)
    return EXIT_OK if check.verdict else EXIT_FAIL


def cmd_rates(args) -> int:
    return _rates(args)


CERTIFIERS = ("lohofer", "haagerup", "ptilde", "harmonic-product", "rates")


def cmd_certify(args) -> int:
    which = args.which
    if which not in CERTIFIERS:
        raise UsageError(f"unknown bound {which!r}; choose from {', '.join(CERTIFIERS)}")
    if which == "rates":
        return _rates(args)
    if which == "lohofer":
        certs = [sa.certify_lohofer(args.k_max or 60)]
    elif which == "haagerup":
        certs = [sa.certify_haagerup(args.k_max or 100)]
    elif which == "ptilde":
        js = [args.j] if args.j is not None else [2, 3, 4, 5]
        certs = [sa.certify_ptilde(j, args.k_max or 40) for j in js]
    else:
        d = args.d or 4
        j = args.j or 2
        certs = [sa.certify_harmonic_product(j, d, args.k_max or 12)]
    passed = all(c.passed for c in certs)
    if args.format == "csv":
        rows = ["bound,checked,violations,max_ratio"]
        rows += [f"{c.bound_name},{c.checked},{c.violations},{repr_float(c.max_ratio)}"
                 for c in certs]
        _emit(args, "\n".join(rows) + "\n")
    else:
        _report(args, {"passed": passed, "certificates": [c.to_dict() for c in certs]})
    return EXIT_OK if passed else EXIT_FAIL


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, help="ambient dimension (sphere S^{d-1})")
    common.add_argument("--k-max", type=int, dest="k_max", help="truncation / grid degree")
    common.add_argument("--scheme", help="coefficient-scheme JSON file")
    common.add_argument("--points", help="point-set CSV file")
    common.add_argument("--random", type=int, help="use N seeded random points instead of --points")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--tol", type=float, default=kn.DEFAULT_TOL)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="spherekern", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a harmonic or a kernel")
    p.add_argument("--index", help="multi-index, e.g. 0,0")
    p.add_argument("--point", help="point, e.g. polar:0,1.0 or cart:1,0,0")
    p.add_argument("--pair", action="append", help="kernel argument (give twice)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("addition-test", parents=[common], help="check the addition formula")
    p.add_argument("--pairs", type=int, default=50)
    p.add_argument("--perturb", type=float, default=0.0,
                   help="relative perturbation of c_k (sensitivity control)")
    p.set_defaults(func=cmd_addition_test)

    p = sub.add_parser("tau", parents=[common], help="list the multi-indices of degree k")
    p.add_argument("--k", type=int)
    p.add_argument("--j", type=int, help="restrict to a_j = 0")
    p.set_defaults(func=cmd_tau)

    for name, func, text in (("gram", cmd_gram, "Gram matrix of a scheme"),
                             ("check-spd", cmd_check_spd, "positive-definiteness verdict"),
                             ("witness", cmd_witness, "collocation null-space witness")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.set_defaults(func=func)

    p = sub.add_parser("certify", parents=[common], help="certify a bound or rate condition")
    p.add_argument("which", help=" | ".join(CERTIFIERS))
    p.add_argument("--j", type=int)
    p.add_argument("--weighted", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("rates", parents=[common], help="rate sequences for a scheme")
    p.add_argument("--j", type=int)
    p.add_argument("--weighted", action="store_true",
                   help="also report the weighted complement sums")
    p.set_defaults(func=cmd_rates)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, FileFormatError, DomainError) as exc:
        print(f"spherekern {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
