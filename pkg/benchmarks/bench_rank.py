"""Compare the numba rank kernel against the pure-numpy fallback.

Two workloads: raw rank calls on boundary matrices harvested from a
real subset sweep, and the end-to-end Betti table of the larger
cone-of-cross-polytope fixtures.  Run as:

    python benchmarks/bench_rank.py
"""

from __future__ import annotations

import time

import numpy as np

from codedim.betti import hochster_table
from codedim.generators import complete_bipartite_clique, cone_of_cross_polytope
from codedim.homology import chain_data
from codedim.linalg import (
    PrimeField,
    active_backend,
    available_backends,
    rank_array,
    set_backend,
    warm_up,
)


def harvest_matrices() -> list[np.ndarray]:
    """Boundary matrices of the benchmark fixtures, as the sweep sees them."""
    matrices = []
    for d in (cone_of_cross_polytope(3), complete_bipartite_clique(4)):
        _, boundaries = chain_data(d._face_bits())
        matrices.extend(b for b in boundaries[1:] if b.size)
    return matrices


def time_ranks(matrices: list[np.ndarray], p: int, repeats: int = 200) -> float:
    started = time.perf_counter()
    for _ in range(repeats):
        for m in matrices:
            rank_array(m, p)
    return time.perf_counter() - started


def time_table(repeats: int = 3) -> float:
    fixture = cone_of_cross_polytope(3)
    started = time.perf_counter()
    for _ in range(repeats):
        hochster_table(fixture, PrimeField(2))
    return (time.perf_counter() - started) / repeats


def main() -> None:
    entry_backend = active_backend()
    matrices = harvest_matrices()
    shapes = ", ".join(f"{m.shape[0]}x{m.shape[1]}" for m in matrices[:6])
    print(f"workload: {len(matrices)} boundary matrices ({shapes}, ...)")
    results: dict[str, dict[str, float]] = {}
    for backend in available_backends():
        set_backend(backend)
        warm_up()
        results[backend] = {
            "rank GF(2)": time_ranks(matrices, 2),
            "rank GF(5)": time_ranks(matrices, 5),
            "betti table": time_table(),
        }
    set_backend(entry_backend)
    print(f"{'':14s}" + "".join(f"{b:>12s}" for b in results))
    for row in next(iter(results.values())):
        cells = "".join(f"{results[b][row]:>11.3f}s" for b in results)
        print(f"{row:14s}{cells}")
    if len(results) == 2:
        numba_t = results["numba"]["betti table"]
        numpy_t = results["numpy"]["betti table"]
        print(f"numba speedup on the table sweep: {numpy_t / numba_t:.1f}x")
    print(f"active backend restored to: {active_backend()}")


if __name__ == "__main__":
    main()
