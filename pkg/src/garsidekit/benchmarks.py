"""Throughput comparison of the kernel backends.

Run with ``python -m garsidekit.benchmarks``. Times the three hot paths
(word-to-normal-form, normal-form products, lattice meets) on identical
seeded inputs for every importable backend and prints ops/sec plus the
speedup of the compiled core over the pure-Python twin.
"""

from __future__ import annotations

import random
import time

from .kernels import backends


def _inputs(kind: int, n: int, words: int, length: int, seed: int):
    rng = random.Random(seed)
    atoms = n - 1 if kind == 0 else n * (n - 1) // 2
    return [
        [(rng.randrange(atoms), rng.choice((1, -1))) for _ in range(length)]
        for _ in range(words)
    ]


def _time(fn, reps: int = 1) -> float:
    start = time.perf_counter()
    for _ in range(reps):
        fn()
    return time.perf_counter() - start


def run(seed: int = 20240) -> list[tuple[str, str, float]]:
    """Benchmark every backend; returns (backend, task, ops_per_sec) rows."""
    rows = []
    for name, impl in sorted(backends().items()):
        for kind, n, label in ((0, 8, "artin-b8"), (1, 8, "bkl-b8"), (0, 16, "artin-b16")):
            words = _inputs(kind, n, 200, 40, seed)
            nfs = [impl.word_to_nf(kind, n, w) for w in words]

            def to_nf():
                for w in words:
                    impl.word_to_nf(kind, n, w)

            def products():
                for (k1, f1), (k2, f2) in zip(nfs, reversed(nfs)):
                    impl.multiply_nf(kind, n, k1, f1, k2, f2)

            simples = [f[0] for _, f in nfs if f]

            def meets():
                for a, b in zip(simples, reversed(simples)):
                    impl.meet(kind, a, b)

            for task, fn, count in (
                (f"{label}/word_to_nf", to_nf, len(words)),
                (f"{label}/multiply_nf", products, len(nfs)),
                (f"{label}/meet", meets, len(simples)),
            ):
                elapsed = _time(fn)
                reps = max(int(0.2 / max(elapsed, 1e-9)), 1)
                elapsed = _time(fn, reps)
                rows.append((name, task, count * reps / elapsed))
    return rows


def main() -> None:
    rows = run()
    by_task: dict[str, dict[str, float]] = {}
    for backend, task, rate in rows:
        by_task.setdefault(task, {})[backend] = rate
    print(f"{'task':<24} " + "".join(f"{b:>14}" for b in sorted(backends())) + "  speedup")
    for task, rates in by_task.items():
        cells = "".join(f"{rates.get(b, 0):>14.0f}" for b in sorted(backends()))
        speedup = ""
        if "speed" in rates and "pure" in rates:
            speedup = f"  {rates['speed'] / rates['pure']:.1f}x"
        print(f"{task:<24} {cells}{speedup}")


if __name__ == "__main__":
    main()
