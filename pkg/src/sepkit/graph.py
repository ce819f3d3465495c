"""Undirected multigraph with stable edge ids, plus partition/cut bookkeeping."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class Graph:
    """Undirected multigraph on vertices 0..n-1.

    Edge ids are dense in [0, m) and equal the position in the edge list, so
    parallel edges are distinct ids.  Self-loops are rejected.  Instances are
    immutable after construction and safe to share.
    """

    __slots__ = ("n", "edges", "_adj", "_deg")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        es = []
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        deg = [0] * n
        for eid, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {eid} endpoint out of range: ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop rejected: vertex {u}")
            es.append((u, v))
            adj[u].append((v, eid))
            adj[v].append((u, eid))
            deg[u] += 1
            deg[v] += 1
        self.edges: tuple[tuple[int, int], ...] = tuple(es)
        self._adj = tuple(tuple(a) for a in adj)
        self._deg = tuple(deg)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self._deg[v]

    @property
    def max_degree(self) -> int:
        """deg(G); 0 for an edgeless graph."""
        return max(self._deg, default=0)

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """Pairs (neighbor, edge id) around v, in edge insertion order."""
        return self._adj[v]

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self.edges[eid]

    def edges_within(self, c: Iterable[int]) -> frozenset[int]:
        cs = set(c)
        return frozenset(
            eid for eid, (u, v) in enumerate(self.edges) if u in cs and v in cs
        )

    def incident_edges(self, c: Iterable[int]) -> frozenset[int]:
        cs = set(c)
        return frozenset(
            eid for eid, (u, v) in enumerate(self.edges) if u in cs or v in cs
        )

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int], list[int]]:
        """Induced subgraph plus new->old vertex and edge id maps."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        emap = []
        es = []
        for eid, (u, v) in enumerate(self.edges):
            if u in pos and v in pos:
                es.append((pos[u], pos[v]))
                emap.append(eid)
        return Graph(len(vs), es), vs, emap

    def without_edges(self, edge_ids: Iterable[int]) -> tuple["Graph", list[int]]:
        """Copy with the given edges dropped; keeps vertex ids, remaps edge ids."""
        drop = set(edge_ids)
        emap = [eid for eid in range(self.m) if eid not in drop]
        return Graph(self.n, [self.edges[eid] for eid in emap]), emap

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def components(
    g: Graph,
    removed_edges: Iterable[int] = (),
    removed_vertices: Iterable[int] = (),
) -> list[frozenset[int]]:
    """Connected components after removals, sorted by smallest member."""
    dead_e = set(removed_edges)
    dead_v = set(removed_vertices)
    for eid in dead_e:
        if not 0 <= eid < g.m:
            raise ValueError(f"unknown edge id {eid}")
    for v in dead_v:
        if not 0 <= v < g.n:
            raise ValueError(f"unknown vertex {v}")
    seen: set[int] = set()
    out = []
    for start in range(g.n):
        if start in seen or start in dead_v:
            continue
        comp = {start}
        queue = deque([start])
        seen.add(start)
        while queue:
            x = queue.popleft()
            for y, eid in g.incident(x):
                if eid in dead_e or y in dead_v or y in seen:
                    continue
                seen.add(y)
                comp.add(y)
                queue.append(y)
        out.append(frozenset(comp))
    return out


def boundary(g: Graph, c: Iterable[int]) -> frozenset[int]:
    """Edge ids with exactly one endpoint in c (parallel edges count apiece)."""
    cs = set(c)
    return frozenset(
        eid for eid, (u, v) in enumerate(g.edges) if (u in cs) != (v in cs)
    )


@dataclass(frozen=True)
class Partition:
    """Assignment of every vertex to a part id; parts need not be connected."""

    part_of: tuple[int, ...]

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(tuple(range(n)))

    @classmethod
    def from_parts(cls, n: int, parts: Iterable[Iterable[int]]) -> "Partition":
        part_of = [-1] * n
        for pid, part in enumerate(parts):
            for v in part:
                if part_of[v] != -1:
                    raise ValueError(f"vertex {v} assigned twice")
                part_of[v] = pid
        if any(p == -1 for p in part_of):
            raise ValueError("partition does not cover all vertices")
        return cls(tuple(part_of)).normalized()

    def normalized(self) -> "Partition":
        """Renumber part ids by first occurrence; drops gaps from empty parts."""
        remap: dict[int, int] = {}
        out = []
        for p in self.part_of:
            if p not in remap:
                remap[p] = len(remap)
            out.append(remap[p])
        return Partition(tuple(out))

    def parts(self) -> list[frozenset[int]]:
        by_id: dict[int, set[int]] = {}
        for v, p in enumerate(self.part_of):
            by_id.setdefault(p, set()).add(v)
        return [frozenset(by_id[p]) for p in sorted(by_id, key=lambda p: min(by_id[p]))]

    def move(self, c: Iterable[int]) -> "Partition":
        """New partition with c carved out as its own part."""
        cs = set(c)
        nxt = max(self.part_of, default=-1) + 1
        out = tuple(nxt if v in cs else p for v, p in enumerate(self.part_of))
        return Partition(out).normalized()

    def cut_edges(self, g: Graph) -> frozenset[int]:
        if len(self.part_of) != g.n:
            raise ValueError("partition does not match graph")
        po = self.part_of
        return frozenset(eid for eid, (u, v) in enumerate(g.edges) if po[u] != po[v])


def cut_size(g: Graph, p: Partition) -> int:
    """Number of edges between different parts."""
    return len(p.cut_edges(g))


@dataclass(frozen=True)
class SeparatorInstance:
    """Graph, terminal set R, and per-component terminal budget k."""

    graph: Graph
    terminals: frozenset[int]
    k: int

    def __init__(self, graph: Graph, terminals: Iterable[int], k: int):
        terminals = frozenset(terminals)
        if any(not 0 <= v < graph.n for v in terminals):
            raise ValueError("terminal out of range")
        if k < 1:
            raise ValueError("k must be at least 1")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "terminals", terminals)
        object.__setattr__(self, "k", k)

    def is_feasible(self, deleted_edges: Iterable[int]) -> bool:
        """True iff every component after deletion has at most k terminals."""
        return all(
            len(comp & self.terminals) <= self.k
            for comp in components(self.graph, removed_edges=deleted_edges)
        )
