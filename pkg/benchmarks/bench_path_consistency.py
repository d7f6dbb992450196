"""Compare the compiled and pure-Python path-consistency kernels.

Usage: python benchmarks/bench_path_consistency.py [--sizes 20 40 80] [--repeat 3] [--density 0.15]
"""
from __future__ import annotations

import argparse
import random
import time

from extrukit.rcc.algebra import ALL, CONVERSE_BITS, SET_COMPOSITION
from extrukit.rcc.kernels import available_backends


def random_network(n: int, rng: random.Random, density: float, width: int) -> bytearray:
    """Row-major n*n bitset matrix; a ``density`` share of pairs get a random ``width``-relation set.

    Loose constraints keep most networks consistent, so the kernel runs to its
    fixpoint instead of stopping at the first empty cell.
    """
    cells = bytearray([ALL]) * (n * n)
    for i in range(n):
        cells[i * n + i] = 0x80
        for j in range(i + 1, n):
            if rng.random() < density:
                bits = 0
                for r in rng.sample(range(8), width):
                    bits |= 1 << r
                cells[i * n + j] = bits
                cells[j * n + i] = CONVERSE_BITS[bits]
    return cells


def bench(sizes, repeat: int, density: float, width: int, seed: int) -> None:
    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'n':>4} {'backend':>8} {'best s':>10} {'consistent':>11}")
    for n in sizes:
        rng = random.Random(seed + n)
        networks = [random_network(n, rng, density, width) for _ in range(repeat)]
        results = {}
        for name, module in backends.items():
            best = float("inf")
            verdicts = []
            for net in networks:
                cells = bytearray(net)
                start = time.perf_counter()
                ok = module.path_consistency(cells, n, SET_COMPOSITION, CONVERSE_BITS)
                best = min(best, time.perf_counter() - start)
                verdicts.append((ok, bytes(cells)))
            results[name] = (best, verdicts)
            consistent = sum(ok for ok, _ in verdicts)
            print(f"{n:>4} {name:>8} {best:>10.5f} {consistent:>5}/{len(verdicts)}")
        if len(results) == 2:
            (t_py, v_py), (t_c, v_c) = results["python"], results["cython"]
            assert v_py == v_c, "backends disagree"
            print(f"{n:>4} {'speedup':>8} {t_py / t_c:>10.1f}x")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[20, 40, 80])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--density", type=float, default=0.15)
    parser.add_argument("--width", type=int, default=5, choices=range(1, 9), metavar="1..8")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()
    bench(args.sizes, args.repeat, args.density, args.width, args.seed)


if __name__ == "__main__":
    main()
