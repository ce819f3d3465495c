"""Important s-t cut enumeration and the bounded-boundary cover construction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .flow import FlowNetwork, min_st_cut
from .graph import Graph, SeparatorInstance, components


def _bundles(g: Graph) -> dict[tuple[int, int], int]:
    """Parallel edges collapsed to (u, v) -> multiplicity with u < v."""
    out: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        key = (u, v) if u < v else (v, u)
        out[key] = out.get(key, 0) + 1
    return out


def _boundary_weight(bundles: dict[tuple[int, int], int], x: frozenset[int]) -> int:
    return sum(c for (u, v), c in bundles.items() if (u in x) != (v in x))


def _seeded_cut(
    n: int, bundles: dict[tuple[int, int], int], seed: Iterable[int], t: int
) -> tuple[int, frozenset[int]]:
    """Min cut between a merged seed set and t; returns (value, maximal source side)."""
    big = sum(bundles.values()) + 1
    net = FlowNetwork(n + 1, source=n, sink=t)
    for a in sorted(seed):
        net.add_arc(n, a, big)
    for (u, v), c in sorted(bundles.items()):
        net.add_undirected(u, v, c)
    value = net.max_flow()
    to_sink = net.residual_coreachable()
    side = frozenset(v for v in range(n) if v not in to_sink)
    return value, side


def _is_connected(g: Graph, x: frozenset[int]) -> bool:
    comp = components(g, removed_vertices=set(range(g.n)) - x)
    return len(comp) == 1


def enumerate_important_cuts(
    g: Graph, s: int, t: int, p: int
) -> list[frozenset[int]]:
    """All important s-t cuts X with |boundary(X)| <= p, multiplicity counted.

    Candidates come from the standard branching: push the source side to the
    maximal side of a min cut, then either commit one crossing edge bundle to
    the boundary or absorb its far endpoint.  Branching may emit sets that are
    not important, so candidates are filtered exactly afterwards: G[X] must be
    connected and no superset s-t cut may reach a boundary this small.
    """
    if s == t:
        raise ValueError("source equals sink")
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise ValueError("vertex out of range")
    if p < 0:
        raise ValueError("p must be non-negative")
    full = _bundles(g)
    candidates: set[frozenset[int]] = set()

    def branch(seed: frozenset[int], bundles: dict[tuple[int, int], int], used: int):
        value, side = _seeded_cut(g.n, bundles, seed, t)
        if used + value > p:
            return
        candidates.add(side)
        crossing = sorted(
            (u, v) if u in side else (v, u)
            for (u, v), c in bundles.items()
            if ((u in side) != (v in side)) and c > 0
        )
        if not crossing:
            return
        u, v = crossing[0]
        key = (u, v) if u < v else (v, u)
        rest = dict(bundles)
        cost = rest.pop(key)
        branch(side, rest, used + cost)
        if v != t:
            branch(side | {v}, bundles, used)

    branch(frozenset({s}), full, 0)

    out = []
    for x in sorted(candidates, key=sorted):
        if t in x or s not in x:
            continue
        b = _boundary_weight(full, x)
        if b > p or not _is_connected(g, x):
            continue
        dominated = False
        for v in range(g.n):
            if v in x or v == t:
                continue
            value, _ = _seeded_cut(g.n, full, x | {v}, t)
            if value <= b:
                dominated = True
                break
        if not dominated:
            out.append(x)
    return out


@dataclass(frozen=True)
class CoverParams:
    """Budgets for the cover: terminal cap k, boundary bound M, cut budget p."""

    k: int
    M: int
    p: int

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("M must be at least 1")
        if self.p != (self.k - 1) * (self.M + 1) + self.M:
            raise ValueError("p must equal (k-1)(M+1)+M")

    @classmethod
    def for_instance(cls, k: int, M: int) -> "CoverParams":
        return cls(k=k, M=M, p=(k - 1) * (M + 1) + M)


@dataclass(frozen=True)
class Cover:
    sets: tuple[frozenset[int], ...]
    params: CoverParams


def build_cover(inst: SeparatorInstance, M: int) -> Cover:
    """Family covering every connected C with 1 <= |C & R| <= k and |dC| <= M.

    Per terminal s: augment the graph with a sink joined to every other
    terminal by M+1 parallel edges, enumerate important cuts within budget
    (k-1)(M+1)+M, then keep the cuts holding between 1 and k terminals.
    Containment comes with a matching boundary guarantee: the covering set
    never has a larger boundary in the original graph than the covered one.
    """
    g, r, k = inst.graph, inst.terminals, inst.k
    params = CoverParams.for_instance(k, M)
    sets: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()
    t = g.n
    for s in sorted(r):
        edges = list(g.edges)
        for v in sorted(r - {s}):
            edges.extend([(v, t)] * (M + 1))
        h = Graph(g.n + 1, edges)
        for x in sorted(enumerate_important_cuts(h, s, t, params.p), key=sorted):
            if x in seen:
                continue
            if 1 <= len(x & r) <= k:
                seen.add(x)
                sets.append(x)
    return Cover(tuple(sets), params)
