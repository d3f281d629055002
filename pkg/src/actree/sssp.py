"""Shortest-path engines and the shortest-path-tree checker.

Three engines produce the same distances on the same graph: textbook
Dijkstra over one all-nodes queue (the oracle), topological relaxation for
DAGs, and the recursive engine that drains one small queue per A-C tree
component in topological order. All three finalise every node exactly once
and relax each arc exactly once from a finalised tail, so equal inputs give
bit-equal distances.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ac_tree import AcTree
from .graph import CycleError, Graph, NegativeWeightError

INF = float("inf")


@dataclass
class SearchStats:
    """Operation counts for one search.

    ``pops`` counts node finalisations (equals the node count on pruned
    input). ``max_queue_len`` is the largest number of entries any single
    priority queue held at once. ``component_sizes`` is a size histogram of
    the component queues used (empty for the single-queue and queueless
    engines).
    """

    pops: int = 0
    key_decreases: int = 0
    max_queue_len: int = 0
    component_sizes: dict[int, int] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "pops": self.pops,
            "key_decreases": self.key_decreases,
            "max_queue_len": self.max_queue_len,
            "component_sizes": dict(self.component_sizes),
        }


@dataclass(frozen=True)
class ShortestPathResult:
    """Distances, parent tree, and search statistics."""

    dist: tuple[float, ...]
    parent: tuple[int | None, ...]
    stats: SearchStats

    def as_dict(self) -> dict:
        return {
            "dist": list(self.dist),
            "parent": list(self.parent),
            "stats": self.stats.as_dict(),
        }


class _IndexedHeap:
    """Binary min-heap with decrease-key, keyed by (priority, node id).

    Ties on priority break toward the smaller node id, so extraction order
    is deterministic. ``decrease`` on a node that was already extracted
    raises KeyError on purpose: a correct search never lowers a finalised
    key.
    """

    __slots__ = ("_key", "_nodes", "_pos")

    def __init__(self, keys: dict[int, float]):
        self._key = keys
        self._nodes = sorted(keys)
        self._pos = {v: i for i, v in enumerate(self._nodes)}
        for i in reversed(range(len(self._nodes) // 2)):
            self._sift_down(i)

    def __len__(self) -> int:
        return len(self._nodes)

    def extract_min(self) -> tuple[float, int]:
        nodes = self._nodes
        top = nodes[0]
        key = self._key[top]
        del self._pos[top]
        last = nodes.pop()
        if nodes:
            nodes[0] = last
            self._pos[last] = 0
            self._sift_down(0)
        return key, top

    def decrease(self, node: int, key: float) -> None:
        if key < self._key[node]:
            self._key[node] = key
            self._sift_up(self._pos[node])

    def _less(self, a: int, b: int) -> bool:
        ka = self._key[a]
        kb = self._key[b]
        return ka < kb or (ka == kb and a < b)

    def _sift_up(self, i: int) -> None:
        nodes = self._nodes
        pos = self._pos
        node = nodes[i]
        while i > 0:
            up = (i - 1) >> 1
            other = nodes[up]
            if not self._less(node, other):
                break
            nodes[i] = other
            pos[other] = i
            i = up
        nodes[i] = node
        pos[node] = i

    def _sift_down(self, i: int) -> None:
        nodes = self._nodes
        pos = self._pos
        size = len(nodes)
        node = nodes[i]
        while True:
            child = 2 * i + 1
            if child >= size:
                break
            right = child + 1
            if right < size and self._less(nodes[right], nodes[child]):
                child = right
            if not self._less(nodes[child], node):
                break
            nodes[i] = nodes[child]
            pos[nodes[i]] = i
            i = child
        nodes[i] = node
        pos[node] = i


def dijkstra(g: Graph) -> ShortestPathResult:
    """Textbook Dijkstra over a single all-nodes queue; the baseline oracle.

    Requires non-negative weights and a pruned graph. Ties on distance
    break by node id.
    """
    n = g.node_count
    s = g.source
    out = g.out_arcs
    dist = [INF] * n
    dist[s] = 0.0
    parent: list[int | None] = [None] * n
    keys = dict.fromkeys(range(n), INF)
    keys[s] = 0.0
    heap = _IndexedHeap(keys)
    pops = 0
    decreases = 0
    while len(heap):
        d, v = heap.extract_min()
        pops += 1
        for w, wt in out[v]:
            if wt < 0:
                raise NegativeWeightError(f"arc {v}->{w} has weight {wt}")
            nd = d + wt
            if nd < dist[w]:
                dist[w] = nd
                parent[w] = v
                heap.decrease(w, nd)
                decreases += 1
    stats = SearchStats(pops, decreases, n, {})
    return ShortestPathResult(tuple(dist), tuple(parent), stats)


def dag_sssp(g: Graph) -> ShortestPathResult:
    """Topological-order relaxation for acyclic graphs; no priority queue.

    Raises :class:`CycleError` when the graph has a directed cycle.
    """
    n = g.node_count
    out = g.out_arcs
    indegree = [0] * n
    for u in range(n):
        for v, _ in out[u]:
            indegree[v] += 1
    frontier = [v for v in range(n) if indegree[v] == 0]
    order = []
    while frontier:
        v = frontier.pop()
        order.append(v)
        for w, _ in out[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                frontier.append(w)
    if len(order) < n:
        raise CycleError("graph has a directed cycle")

    dist = [INF] * n
    dist[g.source] = 0.0
    parent: list[int | None] = [None] * n
    decreases = 0
    for v in order:
        d = dist[v]
        if d == INF:
            continue
        for w, wt in out[v]:
            if wt < 0:
                raise NegativeWeightError(f"arc {v}->{w} has weight {wt}")
            nd = d + wt
            if nd < dist[w]:
                dist[w] = nd
                parent[w] = v
                decreases += 1
    stats = SearchStats(n, decreases, 0, {})
    return ShortestPathResult(tuple(dist), tuple(parent), stats)


def recursive_dijkstra(g: Graph, tree: AcTree) -> ShortestPathResult:
    """Dijkstra driven by the A-C tree: one queue per component.

    Finalising a node relaxes its out-arcs into the owning component
    queues, then descends into the node's own component sequence; each
    owner's components are drained in topological order. Every queue holds
    at most one component, so no queue ever exceeds ``width - 1`` entries
    and each extraction costs O(log width).
    """
    n = g.node_count
    s = g.source
    out = g.out_arcs
    if len(tree.component_of) != n - 1 or s in tree.component_of:
        raise ValueError("A-C tree does not match graph")

    # flatten components to dense queue ids
    comp_members: list[tuple[int, ...]] = []
    comp_of_node = [-1] * n
    owner_comps: dict[int, list[int]] = {}
    for a, comps in tree.components.items():
        cids = []
        for comp in comps:
            cid = len(comp_members)
            comp_members.append(tuple(comp))
            cids.append(cid)
            for v in comp:
                if not 0 <= v < n or comp_of_node[v] != -1 or v == s:
                    raise ValueError("A-C tree does not match graph")
                comp_of_node[v] = cid
        owner_comps[a] = cids

    dist = [INF] * n
    dist[s] = 0.0
    parent: list[int | None] = [None] * n
    queues: list[_IndexedHeap | None] = [None] * len(comp_members)
    state = SearchStats(pops=1)  # the source finalises outside any queue

    def queue_for(cid: int) -> _IndexedHeap:
        q = queues[cid]
        if q is None:
            members = comp_members[cid]
            q = _IndexedHeap({u: dist[u] for u in members})
            queues[cid] = q
            if len(members) > state.max_queue_len:
                state.max_queue_len = len(members)
        return q

    def relax(v: int) -> None:
        dv = dist[v]
        for w, wt in out[v]:
            if wt < 0:
                raise NegativeWeightError(f"arc {v}->{w} has weight {wt}")
            nd = dv + wt
            if nd < dist[w]:
                dist[w] = nd
                parent[w] = v
                queue_for(comp_of_node[w]).decrease(w, nd)
                state.key_decreases += 1

    relax(s)
    stack: list[tuple[int, int]] = [(s, 0)]
    empty: list[int] = []
    while stack:
        v, ci = stack[-1]
        comps = owner_comps.get(v, empty)
        if ci == len(comps):
            stack.pop()
            continue
        q = queue_for(comps[ci])
        if not len(q):
            stack[-1] = (v, ci + 1)
            continue
        _, u = q.extract_min()
        state.pops += 1
        relax(u)
        stack.append((u, 0))

    sizes: dict[int, int] = {}
    for members in comp_members:
        k = len(members)
        sizes[k] = sizes.get(k, 0) + 1
    state.component_sizes = dict(sorted(sizes.items()))
    return ShortestPathResult(tuple(dist), tuple(parent), state)


@dataclass(frozen=True)
class SptCheck:
    """Outcome of a shortest-path-tree verification; falsy when violated."""

    ok: bool
    violations: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def verify_spt(g: Graph, r: ShortestPathResult) -> SptCheck:
    """Certify a result against the Bellman criteria in O(n + e).

    Checks that the source sits at distance 0 with no parent, every other
    node has a parent whose arc exists and is tight, and no arc of the
    graph improves any distance. Comparisons are exact.
    """
    n = g.node_count
    s = g.source
    bad: list[str] = []
    if len(r.dist) != n or len(r.parent) != n:
        return SptCheck(False, ("result arrays do not match the graph size",))
    if r.dist[s] != 0:
        bad.append(f"dist[source]={r.dist[s]!r}, expected 0")
    if r.parent[s] is not None:
        bad.append(f"source has parent {r.parent[s]}")
    for v in range(n):
        if v != s and r.parent[v] is None:
            bad.append(f"node {v} has no parent")
        if not r.dist[v] >= 0 or r.dist[v] == INF:
            bad.append(f"dist[{v}]={r.dist[v]!r} is not a finite non-negative value")
    tight = [False] * n
    seen_parent_arc = [False] * n
    for u, v, w in g.arcs():
        if r.dist[u] + w < r.dist[v]:
            bad.append(
                f"improving arc {u}->{v} (w={w!r}): "
                f"{r.dist[u]!r} + {w!r} < {r.dist[v]!r}"
            )
        if r.parent[v] == u:
            seen_parent_arc[v] = True
            if r.dist[u] + w == r.dist[v]:
                tight[v] = True
    for v in range(n):
        if v == s or r.parent[v] is None:
            continue
        if not seen_parent_arc[v]:
            bad.append(f"parent arc {r.parent[v]}->{v} does not exist")
        elif not tight[v]:
            bad.append(
                f"parent arc {r.parent[v]}->{v} is not tight for dist {r.dist[v]!r}"
            )
    return SptCheck(not bad, tuple(bad))
