"""Benchmark: compiled vs pure-Python free-tree enumeration kernel.

Times the raw sequence stream and a full gap census (sequence +
degree pairs + compensated index sums) for a range of orders.

Usage: python benchmarks/bench_enumeration.py [max_order]
"""

import sys
import time

from graphtheta.treegen import _pure

try:
    from graphtheta.treegen import _speedups
except ImportError:
    _speedups = None


def time_stream(impl, n):
    t0 = time.perf_counter()
    count = sum(1 for _ in impl.free_tree_sequences(n))
    return count, time.perf_counter() - t0


def time_census(impl, n):
    t0 = time.perf_counter()
    neg = 0
    for seq in impl.free_tree_sequences(n):
        abc, abs_ = impl.abc_abs_sums(seq)
        if abc < abs_:
            neg += 1
    return neg, time.perf_counter() - t0


def main():
    max_order = int(sys.argv[1]) if len(sys.argv) > 1 else 18
    impls = [("python", _pure)]
    if _speedups is not None:
        impls.append(("cython", _speedups))
    else:
        print("compiled extension not available; timing pure backend only")

    # value column: tree count for the stream task, negative-gap count
    # for the census task
    print(f"{'n':>3} {'value':>9} {'task':>7}", end="")
    for name, _ in impls:
        print(f" {name + ' [s]':>12}", end="")
    print(" speedup" if len(impls) == 2 else "")

    for n in range(12, max_order + 1):
        for task, fn in (("stream", time_stream), ("census", time_census)):
            results = [fn(impl, n) for _, impl in impls]
            count = results[0][0]
            for value, _ in results:
                assert value == count, "backends disagree"
            times = [t for _, t in results]
            line = f"{n:>3} {count:>9} {task:>7}"
            for t in times:
                line += f" {t:>12.4f}"
            if len(times) == 2:
                line += f" {times[0] / times[1]:>7.1f}x"
            print(line)


if __name__ == "__main__":
    main()
