"""Brute-force exact solvers used as ground truth and as per-component steps."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import Graph, SeparatorInstance, components
from .metric_labeling import FORBIDDEN, Labeling, LabelingInstance
from .treedecomp import exact_treewidth
from .util import oracle_limit


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class GraphClassSpec:
    """Target class: bounded treewidth, no k-vertex path, or bounded components."""

    kind: str
    param: int

    _KINDS = ("treewidth", "pathfree", "compsize")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown class kind {self.kind!r}")
        if self.kind == "treewidth":
            if self.param < 0:
                raise ValueError("treewidth bound must be >= 0")
        elif self.param < 1:
            raise ValueError("parameter must be >= 1")

    @classmethod
    def treewidth_at_most(cls, w: int) -> "GraphClassSpec":
        return cls("treewidth", w)

    @classmethod
    def pathfree(cls, k: int) -> "GraphClassSpec":
        """Graphs with no simple path on k vertices."""
        return cls("pathfree", k)

    @classmethod
    def component_size_at_most(cls, k: int) -> "GraphClassSpec":
        return cls("compsize", k)

    @classmethod
    def parse(cls, text: str) -> "GraphClassSpec":
        """Accepts tw:<w>, pathfree:<k>, compsize:<k>."""
        try:
            kind, raw = text.split(":")
            value = int(raw)
        except ValueError:
            raise ValueError(f"cannot parse class spec {text!r}") from None
        if kind == "tw":
            return cls.treewidth_at_most(value)
        if kind == "pathfree":
            return cls.pathfree(value)
        if kind == "compsize":
            return cls.component_size_at_most(value)
        raise ValueError(f"unknown class kind {kind!r}")

    def treewidth_bound(self) -> int:
        """Upper bound on the treewidth of class members."""
        if self.kind == "treewidth":
            return self.param
        # no k-vertex path bounds treedepth by k, so treewidth by k-1;
        # components on <= k vertices have treewidth <= k-1
        return max(self.param - 1, 0)

    def __str__(self) -> str:
        short = {"treewidth": "tw", "pathfree": "pathfree", "compsize": "compsize"}
        return f"{short[self.kind]}:{self.param}"


def _is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def find_simple_path(g: Graph, k: int, excluded: frozenset[int] = frozenset()):
    """First simple path on k vertices (DFS, ascending order), or None."""
    if k <= 0:
        return ()
    path: list[int] = []
    on_path: set[int] = set()

    def extend(v: int) -> bool:
        path.append(v)
        on_path.add(v)
        if len(path) == k:
            return True
        for u in sorted({w for w, _ in g.incident(v)}):
            if u not in on_path and u not in excluded:
                if extend(u):
                    return True
        path.pop()
        on_path.discard(v)
        return False

    for start in range(g.n):
        if start in excluded:
            continue
        if extend(start):
            return tuple(path)
    return None


def membership(g: Graph, h: GraphClassSpec, limit: int | None = None) -> bool:
    """Exact class membership test at desk scale."""
    limit = oracle_limit(20) if limit is None else limit
    if g.n > limit:
        raise OracleLimitError(f"membership limited to n <= {limit} (got {g.n})")
    if h.kind == "compsize":
        return all(len(c) <= h.param for c in components(g))
    if h.kind == "pathfree":
        return find_simple_path(g, h.param) is None
    w = h.param
    if w == 0:
        return g.m == 0
    for comp in components(g):
        if len(comp) <= w + 1:
            continue
        sub, _, _ = g.induced(comp)
        if _is_forest(sub):
            continue
        if w == 1:
            return False
        if exact_treewidth(sub, limit=limit)[0] > w:
            return False
    return True


def _graph_minus_vertices(g: Graph, vs) -> Graph:
    keep = [v for v in range(g.n) if v not in set(vs)]
    return g.induced(keep)[0]


def exact_vertex_deletion(
    g: Graph, h: GraphClassSpec, budget: int, limit: int | None = None
) -> frozenset[int] | None:
    """Minimum vertex set whose removal lands in h, if one fits the budget.

    Searches subsets by increasing size in lexicographic order, so the witness
    is deterministic and of certified minimum size.  The pathfree kind instead
    branches on the vertices of a found path, depth-limited by the budget.
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    budget = min(budget, g.n)
    if h.kind == "pathfree":
        return _pathfree_vertex_branch(g, h.param, budget)
    for size in range(budget + 1):
        for cand in itertools.combinations(range(g.n), size):
            if membership(_graph_minus_vertices(g, cand), h, limit=limit):
                return frozenset(cand)
    return None


def _pathfree_vertex_branch(g: Graph, k: int, budget: int) -> frozenset[int] | None:
    def search(removed: frozenset[int], depth: int):
        path = find_simple_path(g, k, excluded=removed)
        if path is None:
            return removed
        if depth == 0:
            return None
        for v in path:
            found = search(removed | {v}, depth - 1)
            if found is not None:
                return found
        return None

    for target in range(budget + 1):
        found = search(frozenset(), target)
        if found is not None:
            return found
    return None


def exact_edge_deletion(
    g: Graph, h: GraphClassSpec, budget: int, limit: int | None = None
) -> frozenset[int] | None:
    """Edge-deletion analogue of exact_vertex_deletion."""
    if budget < 0:
        raise ValueError("budget must be non-negative")
    budget = min(budget, g.m)
    for size in range(budget + 1):
        for cand in itertools.combinations(range(g.m), size):
            reduced, _ = g.without_edges(cand)
            if membership(reduced, h, limit=limit):
                return frozenset(cand)
    return None


def brute_kes(
    inst: SeparatorInstance, limit: int | None = None
) -> tuple[frozenset[int], int]:
    """Exact optimum of the subset edge separator by subset dynamic programming.

    Maximizes internal (uncut) edges over partitions into groups holding at
    most k terminals each; groups are enumerated as submasks anchored at the
    lowest remaining vertex, giving 3^n work.
    """
    limit = oracle_limit(12) if limit is None else limit
    g, r, k = inst.graph, inst.terminals, inst.k
    n = g.n
    if n > limit:
        raise OracleLimitError(f"brute_kes limited to n <= {limit} (got {n})")
    if n == 0:
        return frozenset(), 0
    pair = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        pair[u][v] += 1
        pair[v][u] += 1
    size = 1 << n
    internal = [0] * size
    for mask in range(1, size):
        low = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << low)
        acc = internal[rest]
        row = pair[low]
        f = rest
        while f:
            b = f & -f
            acc += row[b.bit_length() - 1]
            f ^= b
        internal[mask] = acc
    rmask = 0
    for v in r:
        rmask |= 1 << v
    best = [0] * size
    pick = [0] * size
    for mask in range(1, size):
        low_bit = mask & -mask
        top = -1
        top_group = 0
        sub = mask
        while sub:
            if sub & low_bit and (sub & rmask).bit_count() <= k:
                cand = internal[sub] + best[mask ^ sub]
                if cand > top:
                    top = cand
                    top_group = sub
            sub = (sub - 1) & mask
        best[mask] = top
        pick[mask] = top_group
    part_of = [0] * n
    mask = size - 1
    pid = 0
    while mask:
        group = pick[mask]
        f = group
        while f:
            b = f & -f
            part_of[b.bit_length() - 1] = pid
            f ^= b
        mask ^= group
        pid += 1
    cut = frozenset(
        eid for eid, (u, v) in enumerate(g.edges) if part_of[u] != part_of[v]
    )
    assert len(cut) == g.m - best[size - 1]
    return cut, len(cut)


def brute_uml(
    inst: LabelingInstance, vertex_limit: int | None = None, label_limit: int | None = None
) -> tuple[Labeling, int]:
    """Exact uniform-metric-labeling optimum by enumerating all labelings."""
    vertex_limit = oracle_limit(8) if vertex_limit is None else vertex_limit
    label_limit = oracle_limit(4) if label_limit is None else label_limit
    g = inst.graph
    if g.n > vertex_limit:
        raise OracleLimitError(f"brute_uml limited to n <= {vertex_limit} (got {g.n})")
    if len(inst.labels) > label_limit:
        raise OracleLimitError(
            f"brute_uml limited to {label_limit} labels (got {len(inst.labels)})"
        )
    choices = [inst.allowed(v) for v in range(g.n)]
    best_lab = None
    best_val = None
    for combo in itertools.product(*choices):
        val = sum(inst.costs[v][li] for v, li in enumerate(combo))
        for u, v in g.edges:
            if combo[u] != combo[v]:
                val += 1
        if best_val is None or val < best_val:
            best_val = val
            best_lab = combo
    return Labeling(tuple(best_lab)), best_val


def brute_important_cuts(
    g: Graph, s: int, t: int, p: int, limit: int | None = None
) -> set[frozenset[int]]:
    """Important s-t cuts straight from the definition, by full enumeration."""
    limit = oracle_limit(10) if limit is None else limit
    if g.n > limit:
        raise OracleLimitError(f"brute_important_cuts limited to n <= {limit} (got {g.n})")
    if s == t:
        raise ValueError("source equals sink")
    n = g.n
    incident_deg = [g.degree(v) for v in range(n)]
    pair = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        pair[u][v] += 1
        pair[v][u] += 1
    size = 1 << n
    internal = [0] * size
    for mask in range(1, size):
        low = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << low)
        acc = internal[rest]
        f = rest
        while f:
            b = f & -f
            acc += pair[low][b.bit_length() - 1]
            f ^= b
        internal[mask] = acc

    def bnd(mask: int) -> int:
        inc = 0
        f = mask
        while f:
            b = f & -f
            inc += incident_deg[b.bit_length() - 1]
            f ^= b
        return inc - 2 * internal[mask]

    sbit, tbit = 1 << s, 1 << t
    out: set[frozenset[int]] = set()
    for mask in range(size):
        if not mask & sbit or mask & tbit:
            continue
        b = bnd(mask)
        if b > p:
            continue
        verts = frozenset(v for v in range(n) if mask & (1 << v))
        if len(components(g, removed_vertices=set(range(n)) - verts)) != 1:
            continue
        free = ~mask & (size - 1) & ~tbit
        dominated = False
        extra = free
        while extra:
            if bnd(mask | extra) <= b:
                dominated = True
                break
            extra = (extra - 1) & free
        if not dominated:
            out.add(verts)
    return out
