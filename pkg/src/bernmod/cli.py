"""Command line front end: verify sweeps, single computations, brute-force oracle.

Exit codes: 0 all checks passed, 1 at least one failed or hit a p-adic pole,
2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from datetime import datetime, timezone
from fractions import Fraction

from . import cache as cache_store
from .identities import FAILED, NOT_P_INTEGRAL, identity_ids, sweep
from .modular import ResidueValue, is_prime
from .permutations import profile
from .sequences import (
    MINUS_HALF,
    PLUS_HALF,
    bernoulli,
    bernoulli_table,
    even_ascent_count,
    even_ascent_count_mod,
    eulerian,
    eulerian_mod,
    fermat_quotient_2,
    gen_harmonic,
    harmonic,
    weighted_convolution,
)

__all__ = ["main"]

_STATUS_ORDER = ("verified", "failed", "inapplicable", "not_p_integral")


def _prime_range(text: str) -> tuple[int, int]:
    lo_s, sep, hi_s = text.partition("..")
    try:
        if not sep:
            raise ValueError
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected LO..HI, got {text!r}"
        ) from None
    if lo < 5:
        raise argparse.ArgumentTypeError("range must start at 5 or above")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _load_cache(path: str, convention: str) -> None:
    """Advisory read: a missing or bad cache never stops a run."""
    try:
        loaded = cache_store.load(path, convention=convention)
    except FileNotFoundError:
        return
    except (cache_store.CorruptCache, cache_store.ConventionMismatch,
            OSError) as exc:
        print(f"warning: ignoring cache {path}: {exc}", file=sys.stderr)
        return
    bernoulli_table(convention).merge(loaded)


def _save_cache(path: str, convention: str) -> None:
    try:
        cache_store.save(bernoulli_table(convention), path)
    except OSError as exc:
        print(f"warning: could not write cache {path}: {exc}",
              file=sys.stderr)


def _fmt_value(value) -> str | int | None:
    if value is None:
        return None
    if isinstance(value, ResidueValue):
        return value.residue
    return str(Fraction(value))


def _params_text(params: dict[str, int]) -> str:
    return ";".join(f"{k}={v}" for k, v in params.items())


def _write_reports(reports, out, fmt: str, with_times: bool) -> None:
    if fmt == "json":
        for r in reports:
            row = {
                "identity": r.identity,
                "params": dict(r.params),
                "modulus": r.modulus,
                "lhs": _fmt_value(r.lhs),
                "rhs": _fmt_value(r.rhs),
                "status": r.status,
            }
            if with_times:
                row["elapsed_ms"] = round(r.elapsed * 1000.0, 3)
                row["timestamp"] = datetime.now(timezone.utc).isoformat()
            out.write(json.dumps(row) + "\n")
        return
    columns = ["identity", "params", "modulus", "lhs", "rhs", "status"]
    if with_times:
        columns += ["elapsed_ms", "timestamp"]
    out.write(",".join(columns) + "\n")
    for r in reports:
        fields = [
            r.identity,
            _params_text(r.params),
            "" if r.modulus is None else str(r.modulus),
            _csv_value(r.lhs),
            _csv_value(r.rhs),
            r.status,
        ]
        if with_times:
            fields.append(str(round(r.elapsed * 1000.0, 3)))
            fields.append(datetime.now(timezone.utc).isoformat())
        out.write(",".join(fields) + "\n")


def _csv_value(value) -> str:
    formatted = _fmt_value(value)
    return "" if formatted is None else str(formatted)


def _cmd_verify(args: argparse.Namespace,
                parser: argparse.ArgumentParser) -> int:
    lo, hi = args.primes
    if args.cache:
        _load_cache(args.cache, MINUS_HALF)
    identities = args.identity if args.identity else "all"
    reports = sweep(identities, lo, hi, jobs=args.jobs,
                    modulus_override=args.modulus)
    if args.cache:
        _save_cache(args.cache, MINUS_HALF)
    if args.verbose:
        for r in reports:
            print(f"{r.identity} {_params_text(r.params)} {r.status}",
                  file=sys.stderr)
    with_times = not args.no_timestamps
    if args.out:
        with open(args.out, "w") as out:
            _write_reports(reports, out, args.format, with_times)
    else:
        _write_reports(reports, sys.stdout, args.format, with_times)
    counts = {status: 0 for status in _STATUS_ORDER}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = ", ".join(f"{counts[s]} {s}" for s in _STATUS_ORDER)
    print(f"checked {len(reports)} points: {summary}", file=sys.stderr)
    bad = counts[FAILED] + counts[NOT_P_INTEGRAL]
    return 1 if bad else 0


def _require_prime(parser, p: int, minimum: int = 5) -> None:
    if p < minimum or not is_prime(p):
        parser.error(f"p must be a prime >= {minimum}, got {p}")


def _cmd_compute(args: argparse.Namespace,
                 parser: argparse.ArgumentParser) -> int:
    what = args.what
    try:
        if what == "bernoulli":
            if args.n < 0:
                parser.error("n must be >= 0")
            if args.cache:
                _load_cache(args.cache, args.convention)
            print(bernoulli(args.n, convention=args.convention))
            if args.cache:
                _save_cache(args.cache, args.convention)
        elif what == "eulerian":
            if args.n < 0 or args.m < 0:
                parser.error("n and m must be >= 0")
            if args.p is not None:
                _require_prime(parser, args.p, minimum=2)
                print(eulerian_mod(args.n, args.m, args.p, args.k).residue)
            else:
                print(eulerian(args.n, args.m))
        elif what == "harmonic":
            if args.n < 0:
                parser.error("n must be >= 0")
            if args.order == 1:
                print(harmonic(args.n))
            else:
                print(gen_harmonic(args.n, args.order))
        elif what == "nk":
            if args.p is not None:
                _require_prime(parser, args.p)
                print(even_ascent_count_mod(args.p, args.k).residue)
            elif args.n is None:
                parser.error("give N for the exact count or --p for a residue")
            else:
                if args.n < 1:
                    parser.error("N must be >= 1")
                print(even_ascent_count(args.n))
        elif what == "q2":
            _require_prime(parser, args.p, minimum=3)
            print(fermat_quotient_2(args.p))
        elif what == "conv":
            _require_prime(parser, args.p)
            print(weighted_convolution(args.p, args.a))
    except ValueError as exc:
        parser.error(str(exc))
    return 0


def _cmd_oracle(args: argparse.Namespace,
                parser: argparse.ArgumentParser) -> int:
    try:
        prof = profile(args.n)
    except ValueError as exc:
        parser.error(str(exc))
    print(f"n = {prof.n}")
    print("eulerian row:", " ".join(str(v) for v in prof.eulerian_row))
    print("even-ascent total:", prof.even_ascent_total)
    print("alternating total:", prof.alternating_total)
    expected_row = tuple(eulerian(prof.n, m) for m in range(prof.n))
    agree = (prof.eulerian_row == expected_row
             and prof.even_ascent_total == even_ascent_count(prof.n))
    if agree:
        print("agreement OK")
        return 0
    print("agreement FAILED: recurrence path disagrees with enumeration",
          file=sys.stderr)
    return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bernmod",
        description="Exact Bernoulli, Eulerian and harmonic computations "
                    "with congruence verification over prime sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser(
        "verify", help="sweep identities over a prime range")
    verify.add_argument("--primes", type=_prime_range, required=True,
                        metavar="LO..HI",
                        help="inclusive prime search range, LO >= 5")
    verify.add_argument("--identity", action="append",
                        choices=["all"] + identity_ids(), metavar="ID",
                        help="identity to check (repeatable, default all)")
    verify.add_argument("--modulus", type=int, default=None, metavar="K",
                        help="override the prime-power exponent")
    verify.add_argument("--format", choices=["json", "csv"], default="json")
    verify.add_argument("--out", metavar="PATH",
                        help="write results here instead of stdout")
    verify.add_argument("--cache", metavar="PATH",
                        default=os.environ.get("BERNMOD_CACHE"),
                        help="Bernoulli cache file (default $BERNMOD_CACHE)")
    verify.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="worker processes for the sweep")
    verify.add_argument("--no-timestamps", action="store_true",
                        help="omit timestamp and elapsed_ms for "
                             "reproducible output")
    verify.add_argument("-v", "--verbose", action="store_true",
                        help="echo each check to stderr")
    verify.set_defaults(func=_cmd_verify)

    compute = sub.add_parser("compute", help="print one value exactly")
    csub = compute.add_subparsers(dest="what", required=True)

    c_bern = csub.add_parser("bernoulli", help="Bernoulli number B_n")
    c_bern.add_argument("n", type=int)
    c_bern.add_argument("--convention", choices=[MINUS_HALF, PLUS_HALF],
                        default=MINUS_HALF)
    c_bern.add_argument("--cache", metavar="PATH",
                        default=os.environ.get("BERNMOD_CACHE"))

    c_eul = csub.add_parser("eulerian", help="Eulerian number E(n, m)")
    c_eul.add_argument("n", type=int)
    c_eul.add_argument("m", type=int)
    c_eul.add_argument("--p", type=int, help="reduce mod a prime power")
    c_eul.add_argument("--k", type=int, default=1)

    c_harm = csub.add_parser("harmonic", help="harmonic number H_n^(r)")
    c_harm.add_argument("n", type=int)
    c_harm.add_argument("--order", type=int, default=1, metavar="R")

    c_nk = csub.add_parser(
        "nk", help="even-ascent permutation count N_n, exact or mod p^k")
    c_nk.add_argument("n", type=int, nargs="?")
    c_nk.add_argument("--p", type=int,
                      help="compute N_{p-2} mod p^k instead")
    c_nk.add_argument("--k", type=int, default=1)

    c_q2 = csub.add_parser("q2", help="Fermat quotient (2^(p-1) - 1)/p")
    c_q2.add_argument("p", type=int)

    c_conv = csub.add_parser(
        "conv", help="order-(p-1) convolution of a^-j-weighted Bernoullis")
    c_conv.add_argument("--p", type=int, required=True)
    c_conv.add_argument("--a", type=int, default=2)

    compute.set_defaults(func=_cmd_compute)

    oracle = sub.add_parser(
        "oracle",
        help="brute-force permutation statistics for small n, cross-checked")
    oracle.add_argument("n", type=int)
    oracle.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
