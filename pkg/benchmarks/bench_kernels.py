"""Compare the numba kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--limit 10000] [--repeat 5]

Also times one end-to-end enumeration per backend in a subprocess, since the
backend is chosen at import time from SIMPLE_SPECTRUM_NUMBA.
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from simple_spectrum import _kernels


def best_of(fn, repeat):
    fn()  # warm-up (JIT compile or cache load)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def end_to_end(max_prime, numba_flag):
    env = dict(os.environ, SIMPLE_SPECTRUM_NUMBA=numba_flag)
    t0 = time.perf_counter()
    subprocess.run([sys.executable, "-m", "simple_spectrum", "enumerate", "--max-prime", str(max_prime)],
                   check=True, capture_output=True, env=env)
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--limit", type=int, default=10000, help="prime bound for the order table")
    ap.add_argument("--sieve-limit", type=int, default=10**7)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--end-to-end", type=int, default=1000, metavar="N",
                    help="also time a full run over primes <= N (0 to skip)")
    args = ap.parse_args()
    if _kernels.numba is None:
        sys.exit("numba is not installed; nothing to compare")

    primes = _kernels.sieve(args.limit, use_numba=False)
    a = _kernels.order_table(primes, primes, use_numba=True)
    b = _kernels.order_table(primes, primes, use_numba=False)
    assert np.array_equal(a, b), "backends disagree"

    rows = [
        (f"sieve({args.sieve_limit})",
         best_of(lambda: _kernels.sieve(args.sieve_limit, use_numba=True), args.repeat),
         best_of(lambda: _kernels.sieve(args.sieve_limit, use_numba=False), args.repeat)),
        (f"order_table({primes.size}x{primes.size})",
         best_of(lambda: _kernels.order_table(primes, primes, use_numba=True), args.repeat),
         best_of(lambda: _kernels.order_table(primes, primes, use_numba=False), args.repeat)),
    ]
    if args.end_to_end:
        rows.append((f"enumerate --max-prime {args.end_to_end}",
                     end_to_end(args.end_to_end, "1"), end_to_end(args.end_to_end, "0")))

    print(f"{'kernel':<36}{'numba s':>10}{'numpy s':>10}{'speedup':>9}")
    for name, tn, tp in rows:
        print(f"{name:<36}{tn:>10.4f}{tp:>10.4f}{tp / tn:>8.1f}x")


if __name__ == "__main__":
    main()
