"""Time the compiled prefix-histogram kernel against the pure-Python one.

    python3 benchmarks/bench_kernels.py            # 5x5 .. 7x7, both backends
    python3 benchmarks/bench_kernels.py --sizes 8x8 --repeat 1
"""
import argparse
import statistics
import time

from dggpaths import kernels


def parse_size(text):
    p, q = text.lower().split("x")
    return int(p), int(q)


def bench(p, q, backend, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        hist = kernels.prefix_histogram(p, q, backend)
        times.append(time.perf_counter() - t0)
    return sum(hist), min(times), statistics.median(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", nargs="+", type=parse_size,
                    default=[(5, 5), (6, 5), (7, 6), (7, 7)])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--backend", action="append", choices=sorted(kernels.BACKENDS))
    args = ap.parse_args()
    backends = args.backend or sorted(kernels.BACKENDS)
    if "cython" not in kernels.BACKENDS:
        print("compiled extension not built; timing the Python kernel only")

    print(f"{'grid':>6} {'backend':>8} {'paths':>10} {'best s':>10} {'median s':>10}")
    for p, q in args.sizes:
        best = {}
        for b in backends:
            n, lo, med = bench(p, q, b, args.repeat)
            best[b] = lo
            print(f"{p}x{q:<4} {b:>8} {n:>10} {lo:>10.4f} {med:>10.4f}")
        if len(best) == 2 and best["cython"] > 0:
            print(f"{'':>6} speedup {best['python'] / best['cython']:>9.1f}x")


if __name__ == "__main__":
    main()
