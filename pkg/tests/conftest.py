import time
from pathlib import Path

import pytest

from simple_spectrum.cache import run_digest, write_cache
from simple_spectrum.enumerate import enumerate_simple_groups
from simple_spectrum.primes import sieve_primes

DATA = Path(__file__).parent / "data"

# criterion id -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def full_run(tmp_path_factory):
    """Fresh enumeration for all primes below 10000, its wall time, and a cache file holding it."""
    pi = sieve_primes(10000)
    t0 = time.perf_counter()
    records = enumerate_simple_groups(pi)
    elapsed = time.perf_counter() - t0
    path = tmp_path_factory.mktemp("cache") / "full.bin"
    write_cache(path, records, run_digest(pi))
    return records, elapsed, path


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
