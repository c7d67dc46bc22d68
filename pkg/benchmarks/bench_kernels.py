"""Compare the compiled and pure-Python kernels on random words.

    python benchmarks/bench_kernels.py [--length N] [--repeat R]
"""

import argparse
import random
import timeit

from britton import _pykernels, kernels


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--length", type=int, default=200_000)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    rng = random.Random(1)
    word = [rng.choice((1, -1, 2, -2)) for _ in range(args.length)]
    half = args.length // 2
    left = kernels._as_array(word[:half])
    right = kernels._as_array([-x for x in reversed(word[:half])])
    arr = kernels._as_array(word)
    impls = {"python": _pykernels}
    if kernels._impl is not None:
        impls["cython"] = kernels._impl
    else:
        print("compiled kernels not built; timing the fallback only")
    print("kernel,backend,ms")
    for name, call in (
        ("free_reduce", lambda m: m.free_reduce(arr)),
        ("fingerprint", lambda m: m.fingerprint(arr, 1_000_003)),
        ("cancel_length", lambda m: m.cancel_length(left, right)),
    ):
        for backend, mod in impls.items():
            best = min(timeit.repeat(lambda: call(mod), number=1, repeat=args.repeat))
            print(f"{name},{backend},{best * 1000:.2f}")


if __name__ == "__main__":
    main()
