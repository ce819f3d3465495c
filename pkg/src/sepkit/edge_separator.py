"""Local-search edge separators: degree reduction, connected-part moves for
R = V, and the min-cut gadget for subset moves."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .flow import FlowNetwork, min_st_cut
from .graph import Graph, Partition, SeparatorInstance, components, cut_size
from .util import as_fraction


def degree_reduce(inst: SeparatorInstance, epsilon) -> tuple[frozenset[int], Graph]:
    """Drop every edge incident to a vertex of degree above 2k/epsilon.

    Costs at most an epsilon fraction of the optimum and bounds the degree of
    the remaining graph, which caps the connected sets the local search must
    scan.  The reduced graph keeps the vertex set; its edge ids are the kept
    original ids in ascending order.
    """
    eps = as_fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    g = inst.graph
    threshold = Fraction(2 * inst.k) / eps
    hot = {v for v in range(g.n) if g.degree(v) > threshold}
    deleted = frozenset(
        eid for eid, (u, v) in enumerate(g.edges) if u in hot or v in hot
    )
    reduced, _ = g.without_edges(deleted)
    return deleted, reduced


def connected_sets(g: Graph, max_size: int) -> list[frozenset[int]]:
    """Every connected vertex set of size 1..max_size, ordered by (size, members).

    Grown by BFS expansion with memoized states; at bounded degree there are
    at most n*deg(G)^max_size of them.
    """
    seen: set[frozenset[int]] = set()

    def grow(cur: frozenset[int]):
        if cur in seen:
            return
        seen.add(cur)
        if len(cur) == max_size:
            return
        nbrs = sorted({u for x in cur for u, _ in g.incident(x)} - cur)
        for u in nbrs:
            grow(cur | {u})

    for v in range(g.n):
        grow(frozenset({v}))
    return sorted(seen, key=lambda s: (len(s), tuple(sorted(s))))


@dataclass
class LocalSearchState:
    """Mutable search state; every part holds at most k terminals and the
    objective strictly drops with each logged move."""

    instance: SeparatorInstance
    partition: Partition
    objective: int
    move_log: list = field(default_factory=list)

    @classmethod
    def initial(cls, inst: SeparatorInstance) -> "LocalSearchState":
        part = Partition.singletons(inst.graph.n)
        return cls(inst, part, cut_size(inst.graph, part))

    def apply_move(self, c: frozenset[int]) -> None:
        new_part = self.partition.move(c)
        new_obj = cut_size(self.instance.graph, new_part)
        self.move_log.append((c, new_obj))
        self.partition = new_part
        self.objective = new_obj


def _move_delta(g: Graph, cut: frozenset[int], c: frozenset[int]) -> int:
    """Objective change if c becomes its own part: new boundary minus restored."""
    newly = 0
    restored_ids = set()
    for v in c:
        for u, eid in g.incident(v):
            if u in c:
                if eid in cut:
                    restored_ids.add(eid)
            elif eid not in cut:
                newly += 1
    return newly - len(restored_ids)


def local_search_kes(
    inst: SeparatorInstance, epsilon
) -> tuple[frozenset[int], Partition]:
    """Edge separator for R = V: degree-reduce, then first-improvement moves
    over connected sets of at most k vertices until locally optimal.

    The returned edge set (original ids) is within 2 of the optimum on the
    reduced graph, hence within 2+epsilon overall.
    """
    g = inst.graph
    if inst.terminals != frozenset(range(g.n)):
        raise ValueError("local_search_kes requires R = V")
    deleted, reduced = degree_reduce(inst, epsilon)
    kept = sorted(set(range(g.m)) - deleted)
    state = LocalSearchState.initial(SeparatorInstance(reduced, range(g.n), inst.k))
    candidates = connected_sets(reduced, inst.k)
    improved = True
    while improved:
        improved = False
        cut = state.partition.cut_edges(reduced)
        for c in candidates:
            if _move_delta(reduced, cut, c) < 0:
                state.apply_move(c)
                improved = True
                break
    final_cut = state.partition.cut_edges(reduced)
    out = deleted | frozenset(kept[eid] for eid in final_cut)
    return out, state.partition


def best_local_move(
    state: LocalSearchState, rprime: Iterable[int]
) -> tuple[frozenset[int], int]:
    """Cheapest part C with C & R = rprime, via one min s-t cut.

    Terminals merge into s (rprime) and t (the rest); edges cut by the current
    partition are special-cased so the min cut prices exactly the edges the
    move would newly delete minus those it restores: a cut edge strictly
    between non-terminals gains a midpoint tied to s, a cut edge at t gains a
    shadow edge from s, and everything else keeps its unit capacity.
    """
    inst = state.instance
    g, r, k = inst.graph, inst.terminals, inst.k
    rp = frozenset(rprime)
    if not rp or rp == r or not rp <= r:
        raise ValueError("rprime must be a nonempty proper subset of R")
    if len(rp) > k:
        raise ValueError("rprime may hold at most k terminals")
    cut = state.partition.cut_edges(g)
    node_of: dict[int, int] = {}
    s_node, t_node = 0, 1
    nxt = 2
    for v in range(g.n):
        if v in rp:
            node_of[v] = s_node
        elif v in r:
            node_of[v] = t_node
        else:
            node_of[v] = nxt
            nxt += 1
    net = FlowNetwork(nxt, source=s_node, sink=t_node)
    for eid, (u, v) in enumerate(g.edges):
        mu, mv = node_of[u], node_of[v]
        if mu == mv:
            continue
        blue = eid in cut
        ends = {mu, mv}
        if not blue or ends == {s_node, t_node}:
            net.add_undirected(mu, mv, 1)
        elif s_node in ends:
            net.add_undirected(mu, mv, 1)
        elif t_node in ends:
            other = mu if mv == t_node else mv
            net.add_undirected(other, t_node, 1)
            net.add_undirected(s_node, other, 1)
        else:
            mid = net.add_node()
            net.add_undirected(s_node, mid, 1)
            net.add_undirected(mu, mid, 1)
            net.add_undirected(mv, mid, 1)
    _, side = min_st_cut(net)
    c = frozenset(rp | {v for v in range(g.n) if v not in r and node_of[v] in side})
    new_obj = cut_size(g, state.partition.move(c))
    return c, new_obj


def local_search_kses(inst: SeparatorInstance) -> tuple[frozenset[int], Partition]:
    """Subset edge separator: accept the best subset move until none improves.

    Each round scans every nonempty R' of at most k terminals, evaluates the
    optimal part for it with best_local_move, and applies the strongest strict
    improvement.  At most m rounds since the objective is integral.
    """
    g, r, k = inst.graph, inst.terminals, inst.k
    if len(r) <= k:
        return frozenset(), Partition.from_parts(g.n, components(g))
    state = LocalSearchState.initial(inst)
    subsets = [
        frozenset(c)
        for size in range(1, k + 1)
        for c in itertools.combinations(sorted(r), size)
    ]
    while True:
        best_c = None
        best_val = state.objective
        for rp in subsets:
            c, val = best_local_move(state, rp)
            if val < best_val:
                best_c, best_val = c, val
        if best_c is None:
            break
        state.apply_move(best_c)
    return state.partition.cut_edges(g), state.partition
