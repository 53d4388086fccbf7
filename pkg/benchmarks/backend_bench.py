#!/usr/bin/env python3
"""Compare the gmpy2 and fractions rational backends.

Runs the same workload (a betweenness profile of the bundled example
stream) in two subprocesses, one per backend, and reports wall times.
Selection happens at import time via the LINKSTREAM_BACKEND variable, so
separate interpreters are required for a fair comparison.

Usage: python benchmarks/backend_bench.py [--samples N]
"""

import argparse
import os
import subprocess
import sys
import time
from pathlib import Path

STREAM = Path(__file__).resolve().parent.parent / "tests" / "data" / "demo.ls"

WORKLOAD = """
import sys, time
from linkstream import parse_stream, profile, BACKEND
stream = parse_stream(open(sys.argv[1], encoding="utf-8").read())
start = time.perf_counter()
result = profile(stream, int(sys.argv[2]))
elapsed = time.perf_counter() - start
checksum = sum(value for _, value in result.samples)
print("%s %.3f %s" % (BACKEND, elapsed, checksum))
"""


def run_backend(backend, samples):
    env = dict(os.environ, LINKSTREAM_BACKEND=backend)
    out = subprocess.run(
        [sys.executable, "-c", WORKLOAD, str(STREAM), str(samples)],
        env=env, capture_output=True, text=True, check=True,
    ).stdout.split()
    name, elapsed, checksum = out[0], float(out[1]), out[2]
    if name != backend:
        raise SystemExit("backend %s unavailable (got %s)" % (backend, name))
    return elapsed, checksum


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=200)
    args = parser.parse_args()
    results = {}
    for backend in ("gmpy2", "fractions"):
        t0 = time.perf_counter()
        elapsed, checksum = run_backend(backend, args.samples)
        total = time.perf_counter() - t0
        results[backend] = (elapsed, checksum)
        print("%-9s compute %.3fs (process %.3fs) checksum %s"
              % (backend, elapsed, total, checksum))
    sums = {results[b][1] for b in results}
    if len(sums) != 1:
        raise SystemExit("backends disagree: %s" % sums)
    ratio = results["fractions"][0] / results["gmpy2"][0]
    print("fractions/gmpy2 time ratio: %.2fx" % ratio)


if __name__ == "__main__":
    main()
