"""Compare the scan kernels across backends.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--sn-size 10]

Each workload runs on every importable backend (pure-python always,
compiled when the extension is built); the table reports the best of
--repeat runs and the speedup over pure-python.
"""

from __future__ import annotations

import argparse
from time import perf_counter

from grassperm.kernels import available_backends, backend


def best_of(repeat: int, fn) -> float:
    times = []
    for _ in range(repeat):
        start = perf_counter()
        fn()
        times.append(perf_counter() - start)
    return min(times)


def workloads(sn_size: int):
    yield ("avoiders 2413, n=1..16", lambda mod: [
        mod.count_grassmannian_avoiders(n, (2, 4, 1, 3))
        for n in range(1, 17)])
    yield ("avoiders 35124, n=18", lambda mod:
           mod.count_grassmannian_avoiders(18, (3, 5, 1, 2, 4)))
    yield ("rising k=10, m=10..18", lambda mod: [
        mod.count_grassmannian_avoiding_increasing(m, 10)
        for m in range(10, 19)])
    yield (f"S_n 321+2143 scan, n={sn_size}", lambda mod:
           mod.count_sn_avoiding_321_2143(sn_size))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="runs per measurement, best one kept")
    parser.add_argument("--sn-size", type=int, default=10,
                        help="size for the full-S_n scan workload")
    args = parser.parse_args()

    backends = sorted(available_backends().items())
    names = [name for name, _ in backends]
    print(f"active backend: {backend()}; measuring: {', '.join(names)}")
    header = f"{'workload':28s}" + "".join(f"{n:>14s}" for n in names)
    if len(names) > 1:
        header += f"{'speedup':>10s}"
    print(header)
    print("-" * len(header))

    for label, job in workloads(args.sn_size):
        results = {}
        for name, mod in backends:
            values = job(mod)
            results[name] = (best_of(args.repeat, lambda: job(mod)), values)
        answers = {repr(v) for _, v in results.values()}
        if len(answers) != 1:
            raise SystemExit(f"backends disagree on {label}: {answers}")
        row = f"{label:28s}"
        for name in names:
            row += f"{results[name][0] * 1000:12.2f}ms"
        if len(names) > 1 and "compiled" in results:
            ratio = results["pure-python"][0] / results["compiled"][0]
            row += f"{ratio:9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
