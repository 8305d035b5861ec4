"""Command-line front end.

    simple-spectrum enumerate --pi 2,3,5,11,37,61,13421
    simple-spectrum enumerate --max-prime 10000 --report kn-table

Exit codes: 0 success, 2 usage error, 3 runtime failure, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .cache import read_cache, run_digest, write_cache
from .enumerate import enumerate_simple_groups
from .primes import DomainError, PrimeSet, is_prime, sieve_primes
from .report import FORMATS, REPORTS, render

EXIT_OK, EXIT_USAGE, EXIT_RUNTIME, EXIT_IO = 0, 2, 3, 4

log = logging.getLogger("simple_spectrum")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    pi_source: str  # "list" | "bound" | "file"
    pi_value: str
    report: str = "groups"
    fmt: str = "text"
    threads: int = 1
    k_margin: int = 1
    rank_margin: int = 1
    cache: str | None = None
    early_exit: bool = True
    lo: int | None = None
    hi: int | None = None
    output: str | None = None


def _parse_primes(text: str, where: str) -> PrimeSet:
    tokens = [t for t in text.replace(",", " ").split() if t]
    if not tokens:
        raise UsageError(f"{where}: empty prime list")
    values = []
    for i, tok in enumerate(tokens):
        try:
            v = int(tok)
        except ValueError:
            raise UsageError(f"{where}: entry {i + 1} ({tok!r}) is not an integer") from None
        try:
            ok = is_prime(v)
        except DomainError as exc:
            raise UsageError(f"{where}: entry {i + 1}: {exc}") from None
        if not ok:
            raise UsageError(f"{v} is not prime (entry {i + 1} of {where})")
        values.append(v)
    return PrimeSet.of(values)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simple-spectrum", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    en = sub.add_parser("enumerate", help="list simple groups with spectrum inside a prime set")
    src = en.add_argument_group("prime set (exactly one)")
    src.add_argument("--pi", help="comma-separated primes")
    src.add_argument("--pi-file", help="file of primes separated by commas or whitespace")
    src.add_argument("--max-prime", type=int, help="all primes up to N")
    en.add_argument("--report", choices=REPORTS, default="groups")
    en.add_argument("--format", choices=FORMATS, default="text", dest="fmt")
    en.add_argument("--threads", type=int, default=1, help="worker processes")
    en.add_argument("--k-margin", type=int, default=1, help="multiplier on the field-exponent bound")
    en.add_argument("--rank-margin", type=int, default=1, help="multiplier on the rank bound")
    en.add_argument("--cache", default=os.environ.get("SIMPLE_SPECTRUM_CACHE"),
                    help="cache file (default: $SIMPLE_SPECTRUM_CACHE)")
    en.add_argument("--no-rank-early-exit", action="store_true",
                    help="scan every rank up to the bound (audit mode)")
    en.add_argument("--range", dest="range_", metavar="LO:HI",
                    help="open interval of largest primes for generic-primes / nongeneric-table")
    en.add_argument("--output", "-o", help="write the report here instead of stdout")
    en.add_argument("-v", "--verbose", action="store_true")
    return parser


def parse_config(argv: Sequence[str]) -> RunConfig:
    """Parse and validate arguments; raises UsageError (or SystemExit from argparse)."""
    args = build_parser().parse_args(list(argv))
    sources = [(k, v) for k, v in (("list", args.pi), ("file", args.pi_file), ("bound", args.max_prime))
               if v is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --pi, --pi-file, --max-prime")
    kind, value = sources[0]
    if kind == "list":
        _parse_primes(value, "--pi")
    if kind == "bound" and value < 2:
        raise UsageError("--max-prime must be at least 2")
    if args.threads < 1:
        raise UsageError("--threads must be >= 1")
    if args.k_margin < 1 or args.rank_margin < 1:
        raise UsageError("--k-margin and --rank-margin must be >= 1")
    lo = hi = None
    if args.range_:
        try:
            a, b = args.range_.split(":")
            lo = int(a) if a else None
            hi = int(b) if b else None
        except ValueError:
            raise UsageError("--range expects LO:HI") from None
    return RunConfig(kind, str(value), args.report, args.fmt, args.threads, args.k_margin,
                     args.rank_margin, args.cache, not args.no_rank_early_exit, lo, hi, args.output)


def load_pi(cfg: RunConfig) -> PrimeSet:
    if cfg.pi_source == "list":
        return _parse_primes(cfg.pi_value, "--pi")
    if cfg.pi_source == "bound":
        return sieve_primes(int(cfg.pi_value))
    try:
        text = Path(cfg.pi_value).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read --pi-file: {exc}") from None
    return _parse_primes(text, cfg.pi_value)


def run(cfg: RunConfig):
    pi = load_pi(cfg)
    digest = run_digest(pi, cfg.k_margin, cfg.rank_margin, cfg.early_exit)
    records = read_cache(cfg.cache, digest) if cfg.cache else None
    if records is None:
        records = enumerate_simple_groups(pi, cfg.k_margin, cfg.threads, cfg.early_exit, cfg.rank_margin)
        if cfg.cache:
            try:
                write_cache(cfg.cache, records, digest)
            except OSError as exc:
                log.warning("could not write cache %s: %s", cfg.cache, exc)
    else:
        log.info("using cached result from %s", cfg.cache)
    return records


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(f"simple-spectrum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if "-v" in argv or "--verbose" in argv else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        records = run(cfg)
        text = render(records, cfg.report, cfg.fmt, cfg.lo, cfg.hi)
    except UsageError as exc:
        print(f"simple-spectrum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AssertionError, ArithmeticError, ValueError, RuntimeError) as exc:
        print(f"simple-spectrum: internal error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    try:
        if cfg.output:
            Path(cfg.output).write_text(text)
        else:
            sys.stdout.write(text)
            sys.stdout.flush()
    except OSError as exc:
        print(f"simple-spectrum: I/O error: {exc}", file=sys.stderr)
        print("simple-spectrum: OUTPUT INCOMPLETE", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
