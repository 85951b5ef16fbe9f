"""Command line entry point: ``carmseq <command> ...``.

Exit codes: 0 success, 1 a check or verification failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from .bounds import theorem1_report
from .harness import theorem2_verdict, verdict_json
from .korselt import certificate_from
from .scanner import CheckpointMismatch, ScanConfig, ScanError, default_workers, run_scan
from .arith import is_prime
from .sieve import compatible, residues_for_prime
from .special import SequenceTarget, special_factorize

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _target(k: int, n: int) -> SequenceTarget:
    try:
        return SequenceTarget(k, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_check(args) -> int:
    cert = certificate_from(special_factorize(_target(args.k, args.n)))
    print(cert.to_text(), end="")
    return EXIT_OK if cert.is_carmichael else EXIT_FAIL


def cmd_factor(args) -> int:
    out = special_factorize(_target(args.k, args.n))
    print(f"N = {out.target.k}*2^{out.target.n}+1 = {out.target.N}")
    for f, e in out.factors:
        mult = f"^{e}" if e > 1 else ""
        print(f"  {f.p}{mult} = {f.d}*2^{f.m}+1  class={f.cls.value}")
    print(f"cofactor = {out.cofactor}")
    print(f"primality proven = {'yes' if out.proven else 'no (BPSW probable prime)'}")
    return EXIT_OK


def cmd_sieve(args) -> int:
    k = args.k
    if k < 1 or k % 2 == 0:
        raise UsageError(f"k must be odd and positive, got {k}")
    classes = []
    for p in args.primes:
        if p < 3 or not is_prime(p):
            raise UsageError(f"p must be an odd prime, got {p}")
        if k % p == 0:
            print(f"{p} divides 2k; never divides {k}*2^n+1")
            classes.append(None)
            continue
        cc = residues_for_prime(p, k)
        print(cc)
        classes.append(cc)
    if len(args.primes) > 1:
        sol = compatible(c for c in classes if c is not None) if all(classes) else None
        if sol:
            print(f"compatible: n = {sol.residue} (mod {sol.modulus})")
        else:
            print("incompatible: no n makes all of these divide")
    return EXIT_OK


def cmd_bound(args) -> int:
    try:
        rep = theorem1_report(args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(rep.to_text(), end="")
    return EXIT_OK if all(rep.checks.values()) else EXIT_FAIL


def cmd_verify(args) -> int:
    v = theorem2_verdict()
    if args.json:
        print(verdict_json(v))
    else:
        print(v.to_text(), end="")
    return EXIT_OK if v.passed else EXIT_FAIL


def cmd_scan(args) -> int:
    try:
        cfg = ScanConfig(
            k_min=args.k_min, k_max=args.k_max, n_max=args.n_max,
            sieve_primes=args.sieve_primes,
            workers=args.workers if args.workers is not None else default_workers(),
            checkpoint_path=args.checkpoint, output_path=args.out,
            emit_certificates=args.certificates,
        )
    except (ValueError, ScanError) as exc:
        raise UsageError(str(exc)) from None
    try:
        summary = run_scan(cfg, timings=args.timings)
    except CheckpointMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ScanError as exc:
        raise UsageError(str(exc)) from None
    if args.out is None:
        for f in summary.findings:
            print(f.to_json())
    print(
        f"scanned odd k in [{cfg.k_min}, {cfg.k_max}], n <= {cfg.n_max}: "
        f"{len(summary.findings)} findings this run"
        + (f" (resumed after k={summary.resumed_from})" if summary.resumed_from is not None else ""),
        file=sys.stderr,
    )
    if summary.failed:
        print(f"failed k: {json.dumps(sorted(summary.failed))}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="carmseq", description="Carmichael numbers of the form k*2^n+1")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("check", help="certify or refute k*2^n+1")
    s.add_argument("k", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("factor", help="special-form factorization of k*2^n+1")
    s.add_argument("k", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_factor)

    s = sub.add_parser("scan", help="search a range of k")
    s.add_argument("--k-min", type=int, default=3)
    s.add_argument("--k-max", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--workers", type=int, default=None,
                   help="default: $CARMSEQ_WORKERS, else the CPU count")
    s.add_argument("--out", default=None, help="JSONL output (default: stdout)")
    s.add_argument("--checkpoint", default=None)
    s.add_argument("--sieve-primes", type=int, default=25)
    s.add_argument("--certificates", action="store_true",
                   help="also write <out>.certs.txt with full certificates")
    s.add_argument("--timings", action="store_true",
                   help="fill wall_time_ms (output is then not reproducible)")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("sieve", help="congruence classes of n forced by primes p")
    s.add_argument("k", type=int)
    s.add_argument("primes", type=int, nargs="+")
    s.set_defaults(func=cmd_sieve)

    s = sub.add_parser("bound", help="effective bound report for k")
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("verify-paper", help="run every finite check for k < 27")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
