"""Compare the compiled and pure-Python EA kernels.

Usage: python benchmarks/bench_kernels.py [--runs N] [--length N]

Each run reorders a random tag sequence toward a shuffled copy of itself with
both backends, checks that they return identical results, and reports the
median wall time per backend.
"""
import argparse
import random
import statistics
import sys
import time

from evo_mt import kernels


def workload(rng, length):
    seq = [rng.randrange(8) for _ in range(length)]
    target = rng.sample(seq, len(seq))
    return seq, target, 100, 1000, rng.getrandbits(64), False, True


def time_backend(backend, args, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = backend.evolve_core(*args)
        times.append(time.perf_counter() - start)
    return statistics.median(times), result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--runs", type=int, default=20)
    parser.add_argument("--length", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    if kernels.compiled_backend is None:
        print("compiled extension not available; build it with "
              "`pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1

    rng = random.Random(args.seed)
    py_total = c_total = 0.0
    for _ in range(args.runs):
        work = workload(rng, args.length)
        py_time, py_result = time_backend(kernels.python_backend, work, args.repeat)
        c_time, c_result = time_backend(kernels.compiled_backend, work, args.repeat)
        assert list(py_result[0]) == list(c_result[0]) and py_result[1] == c_result[1]
        py_total += py_time
        c_total += c_time

    print(f"runs {args.runs} length {args.length}")
    print(f"python   {py_total:9.4f} s")
    print(f"compiled {c_total:9.4f} s")
    print(f"speedup  {py_total / c_total:9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
