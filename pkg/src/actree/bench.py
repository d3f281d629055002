"""Benchmark grid: seeded graph families timed per algorithm, CSV out.

One record per (graph, algorithm) cell. The ``actree`` rows time the
decomposition itself so construction cost can be separated from search
cost; the engine rows time a single search on the prebuilt tree.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

from .ac_tree import build_ac_tree
from .graph import (
    Graph,
    gen_complete,
    gen_layered,
    gen_random_dag,
    gen_random_digraph,
)
from .sssp import dag_sssp, dijkstra, recursive_dijkstra

CSV_HEADER = "family,n,e,seed,algo,ns,pops,decreases,max_queue,width"

FAMILIES = ("layered", "random", "dag", "complete")

_ACYCLIC_FAMILIES = ("layered", "dag")


@dataclass(frozen=True)
class BenchRecord:
    family: str
    n: int
    e: int
    seed: int
    algo: str
    ns: int
    pops: int
    decreases: int
    max_queue: int
    width: int

    def csv_row(self) -> str:
        return (
            f"{self.family},{self.n},{self.e},{self.seed},{self.algo},"
            f"{self.ns},{self.pops},{self.decreases},{self.max_queue},{self.width}"
        )


def make_graph(family: str, n: int, seed: int) -> Graph:
    """Deterministic family member of (roughly) ``n`` nodes."""
    if family == "layered":
        return gen_layered(max(1, (n - 1) // 2), seed)
    if family == "random":
        return gen_random_digraph(n, 4 * n, seed)
    if family == "dag":
        return gen_random_dag(n, 4 * n, seed)
    if family == "complete":
        return gen_complete(n, seed)
    raise ValueError(f"unknown graph family {family!r}")


def run_cell(family: str, n: int, seed: int) -> list[BenchRecord]:
    """Time decomposition plus every applicable engine on one graph."""
    g = make_graph(family, n, seed)
    t0 = time.perf_counter_ns()
    tree = build_ac_tree(g)
    build_ns = time.perf_counter_ns() - t0

    def record(algo: str, ns: int, pops: int, decreases: int, max_queue: int):
        return BenchRecord(
            family, g.node_count, g.arc_count, seed, algo,
            ns, pops, decreases, max_queue, tree.width,
        )

    records = [record("actree", build_ns, 0, 0, 0)]
    engines = [("dijkstra", lambda: dijkstra(g)),
               ("recursive", lambda: recursive_dijkstra(g, tree))]
    if family in _ACYCLIC_FAMILIES:
        engines.append(("dag", lambda: dag_sssp(g)))
    for algo, run in engines:
        t0 = time.perf_counter_ns()
        result = run()
        ns = time.perf_counter_ns() - t0
        st = result.stats
        records.append(record(algo, ns, st.pops, st.key_decreases, st.max_queue_len))
    return records


def run_grid(
    family: str, sizes: Iterable[int], seeds: Iterable[int]
) -> Iterator[BenchRecord]:
    for n in sizes:
        for seed in seeds:
            yield from run_cell(family, n, seed)


def write_csv(records: Iterable[BenchRecord], out: TextIO) -> None:
    """Stream records as CSV; rows are flushed as they are produced."""
    out.write(CSV_HEADER + "\n")
    for rec in records:
        out.write(rec.csv_row() + "\n")
        out.flush()
