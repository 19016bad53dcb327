"""Command-line driver: every verification as a reproducible batch command.

Subcommands
    mate             Pythagorean mate of a symbol + roots-of-unity certificate
    synthesize       symbol constants from (alpha, lambda)
    verify-equality  entrywise Gram comparison of D(mu) and H(b)
    certify          hyperexpansivity / defect-rank / moment certificates
    recover          atomic measure from a moment matrix
    kernel-norms     closed-form vs truncated Cauchy-kernel norms

All JSON output is deterministic (sorted keys, shortest round-trip
floats); exit status is 0 exactly when every emitted certificate passes.
"""

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .debranges import (
    MoebiusSymbol,
    SymbolError,
    hb_cauchy_norm,
    hb_gram,
    hb_inner,
    pythagorean_mate,
)
from .dirichlet import (
    PointMassMeasure,
    dmu_cauchy_norm,
    dmu_gram,
    dmu_inner,
    moment_matrix,
    truncated_cauchy_kernel,
)
from .hardy import h2_inner
from .moments import RecoveryError, recover_atoms
from .operators import (
    Certificate,
    certify_nsd,
    defect_matrix,
    gram_from_csv_text,
    gram_to_csv_text,
    hyperexpansive_form,
    numerical_rank,
)
from .synthesis import synthesize_symbol, synthesized_pair, verify_norm_equality

DEFAULT_TOLS = {
    "mate": 1e-12,
    "equality": 1e-9,
    "nsd": 1e-10,
    "moment": 1e-12,
    "rank": 1e-8,
    "recover": 1e-8,
    "kernel": 1e-8,
}


def parse_complex(s):
    """Accept 're' or 're+imi' strings ('i' or 'j' imaginary suffix)."""
    try:
        return complex(s.strip().replace("i", "j"))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"cannot parse complex value {s!r}") from e


def _complex_json(z):
    return {"re": z.real, "im": z.imag}


def _dump(payload, out_path):
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _load_measure(path):
    return PointMassMeasure.from_json_dict(json.loads(Path(path).read_text()))


def _load_symbol(path):
    return MoebiusSymbol.from_json_dict(json.loads(Path(path).read_text()))


def _tol(args, key):
    return args.tol_overrides.get(key, DEFAULT_TOLS[key])


def cmd_mate(args):
    try:
        b = _load_symbol(args.symbol)
        pair = pythagorean_mate(b)
    except SymbolError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    tol = _tol(args, "mate")
    dev = pair.unit_circle_deviation(64)
    cert = Certificate(
        kind="unit-circle-sum",
        passed=dev <= tol,
        witness=dev,
        tolerance=tol,
        context={"samples": 64},
    )
    payload = pair.to_json_dict()
    payload["certificate"] = cert.to_json_dict()
    _dump(payload, args.out)
    return 0 if cert.passed else 1


def cmd_synthesize(args):
    if abs(args.lam) > 1:
        print(f"error: |lambda| = {abs(args.lam)} must be <= 1", file=sys.stderr)
        return 1
    out = synthesize_symbol(args.alpha, args.lam)
    _dump(out.symbol().to_json_dict(), args.out)
    return 0


def cmd_verify_equality(args):
    if args.measure:
        mu = _load_measure(args.measure)
        if len(mu) != 1:
            print(
                "error: norm equality holds only for single-atom measures "
                "(the H(b) defect has rank 1)",
                file=sys.stderr,
            )
            return 1
        (lam, weight), = mu.atoms
        alpha = complex(np.sqrt(weight))
    else:
        alpha, lam = args.alpha, args.lam
    cert = verify_norm_equality(alpha, lam, args.size, tol=_tol(args, "equality"))
    if args.out:
        prefix = Path(args.out)
        mu = (
            PointMassMeasure.single(lam, abs(alpha) ** 2)
            if abs(alpha) > 0
            else PointMassMeasure.empty()
        )
        pair = synthesized_pair(alpha, lam)
        prefix.with_suffix(".dmu.csv").write_text(
            gram_to_csv_text(dmu_gram(mu, args.size))
        )
        prefix.with_suffix(".hb.csv").write_text(
            gram_to_csv_text(hb_gram(pair, args.size))
        )
        _dump(cert.to_json_dict(), prefix.with_suffix(".json"))
    else:
        _dump(cert.to_json_dict(), None)
    return 0 if cert.passed else 1


def cmd_certify(args):
    mu = _load_measure(args.measure)
    G = dmu_gram(mu, args.size)
    nsd_tol = _tol(args, "nsd")
    certs = [
        certify_nsd(hyperexpansive_form(G, n), tol=nsd_tol)
        for n in range(1, args.n_max + 1)
    ]
    D = defect_matrix(G)
    M = moment_matrix(mu, args.size - 1)
    dev = float(np.abs(D - M).max())
    moment_tol = _tol(args, "moment")
    certs.append(
        Certificate(
            kind="moment-identity",
            passed=dev <= moment_tol,
            witness=dev,
            tolerance=moment_tol,
            context={"N": args.size},
        )
    )
    rank = numerical_rank(D, _tol(args, "rank"))
    certs.append(
        Certificate(
            kind="defect-rank",
            passed=rank == len(mu),
            witness=float(rank),
            tolerance=float(len(mu)),
            context={"atoms": len(mu)},
        )
    )
    _dump({"certificates": [c.to_json_dict() for c in certs]}, args.out)
    return 0 if all(c.passed for c in certs) else 1


def cmd_recover(args):
    if args.moments:
        M = gram_from_csv_text(Path(args.moments).read_text())
    else:
        mu = _load_measure(args.measure)
        M = moment_matrix(mu, args.size)
    k = None if args.atoms == "auto" else int(args.atoms)
    try:
        result = recover_atoms(M, k=k, rank_tol=_tol(args, "rank"))
    except RecoveryError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    _dump(result.to_json_dict(), args.out)
    return 0


def cmd_kernel_norms(args):
    pair = synthesized_pair(args.alpha, args.lam)
    rng = np.random.default_rng(args.seed)
    tol = _tol(args, "kernel")
    certs = []
    for _ in range(args.points):
        w = args.radius * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
        k = truncated_cauchy_kernel(w, args.degree)
        mu = PointMassMeasure.single(args.lam, abs(args.alpha) ** 2)
        direct_dmu = float(np.real(dmu_inner(k, k, mu) - h2_inner(k, k)))
        closed_dmu = dmu_cauchy_norm(args.alpha, args.lam, w)
        rel_dmu = abs(direct_dmu - closed_dmu) / closed_dmu if closed_dmu else 0.0
        direct_hb = float(np.real(hb_inner(k, k, pair)))
        closed_hb = hb_cauchy_norm(pair, w)
        rel_hb = abs(direct_hb - closed_hb) / closed_hb
        context = {"w": _complex_json(complex(w)), "degree": args.degree}
        certs.append(
            Certificate("dmu-kernel-norm", rel_dmu <= tol, rel_dmu, tol, context)
        )
        certs.append(
            Certificate("hb-kernel-norm", rel_hb <= tol, rel_hb, tol, context)
        )
    _dump({"certificates": [c.to_json_dict() for c in certs]}, args.out)
    return 0 if all(c.passed for c in certs) else 1


def _parse_tols(pairs):
    out = {}
    for item in pairs or []:
        key, _, value = item.partition("=")
        if key not in DEFAULT_TOLS:
            raise argparse.ArgumentTypeError(f"unknown tolerance key {key!r}")
        out[key] = float(value)
    return out


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dbrlab", description="Dirichlet / de Branges-Rovnyak verification suite"
    )
    parser.add_argument(
        "--tol",
        action="append",
        metavar="KEY=VALUE",
        dest="tols",
        help=f"override a tolerance; keys: {', '.join(sorted(DEFAULT_TOLS))}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mate", help="Pythagorean mate of a symbol")
    p.add_argument("--symbol", required=True, help="symbol JSON file")
    p.add_argument("--out", help="output JSON path (default stdout)")
    p.set_defaults(func=cmd_mate)

    p = sub.add_parser("synthesize", help="symbol from (alpha, lambda)")
    p.add_argument("--alpha", type=parse_complex, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_complex, required=True)
    p.add_argument("--out", help="output JSON path (default stdout)")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("verify-equality", help="Gram equality of D(mu) and H(b)")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--measure", help="single-atom measure JSON file")
    g.add_argument("--alpha", type=parse_complex)
    p.add_argument("--lambda", dest="lam", type=parse_complex, default=0j)
    p.add_argument("--size", type=int, default=24, metavar="N")
    p.add_argument("--out", help="output prefix (.json + two Gram CSVs)")
    p.set_defaults(func=cmd_verify_equality)

    p = sub.add_parser("certify", help="hyperexpansivity and defect certificates")
    p.add_argument("--measure", required=True, help="measure JSON file")
    p.add_argument("--size", type=int, default=24, metavar="N")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--out", help="output JSON path (default stdout)")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("recover", help="atomic measure from moments")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--moments", help="moment matrix CSV (re,im cell pairs)")
    g.add_argument("--measure", help="measure JSON file (forward oracle)")
    p.add_argument("--atoms", default="auto", help="atom count or 'auto'")
    p.add_argument("--size", type=int, default=24, metavar="N")
    p.add_argument("--out", help="output JSON path (default stdout)")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("kernel-norms", help="closed-form vs truncated kernels")
    p.add_argument("--alpha", type=parse_complex, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_complex, required=True)
    p.add_argument("--points", type=int, default=10)
    p.add_argument("--degree", type=int, default=300)
    p.add_argument("--radius", type=float, default=0.8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output JSON path (default stdout)")
    p.set_defaults(func=cmd_kernel_norms)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.tol_overrides = _parse_tols(args.tols)
    except argparse.ArgumentTypeError as e:
        parser.error(str(e))
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
