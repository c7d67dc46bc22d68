"""End-to-end timing of the compiled and pure-Python backends.

Each workload runs in a fresh interpreter so that the backend is chosen at
import; ``BRITTON_PURE_PYTHON=1`` selects the fallback.

    python benchmarks/bench_backends.py
"""

import os
import subprocess
import sys
import time

WORKLOADS = {
    "bs12 n=1..64": [sys.executable, "-m", "britton", "bench", "--min-n", "1", "--max-n", "64", "--seed", "1"],
    "bs12 naive n=1..18": [sys.executable, "-m", "britton", "bench", "--min-n", "1", "--max-n", "18",
                           "--backend", "naive", "--seed", "1"],
    "free reduction 10^6 letters": [sys.executable, "-m", "britton", "wp", "--seed", "1",
                                    "--word", "(a b)^250000 (b^-1 a^-1)^249999 b^-1 a^-1"],
}


def timed(argv, pure):
    env = dict(os.environ)
    env.pop("BRITTON_PURE_PYTHON", None)
    if pure:
        env["BRITTON_PURE_PYTHON"] = "1"
    start = time.perf_counter()
    subprocess.run(argv, env=env, check=True, stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL)
    return time.perf_counter() - start


def main():
    from britton import kernels

    if kernels.BACKEND != "cython":
        print("compiled kernels not built; both columns use the fallback")
    print("workload,compiled_s,python_s")
    for name, argv in WORKLOADS.items():
        print(f"{name},{timed(argv, False):.2f},{timed(argv, True):.2f}")


if __name__ == "__main__":
    main()
