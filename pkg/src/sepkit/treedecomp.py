"""Tree decompositions: validation, exact treewidth, nice form, fine separators."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .graph import Graph, components


class ValidationResult(NamedTuple):
    ok: bool
    problem: str | None


@dataclass(frozen=True)
class TreeDecomposition:
    """Rooted tree of bags over a graph on `n` vertices."""

    n: int
    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...]
    root: int = 0

    def __init__(self, n, bags, tree_edges, root=0):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in bags))
        object.__setattr__(self, "tree_edges", tuple((a, b) for a, b in tree_edges))
        object.__setattr__(self, "root", root)

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def node_count(self) -> int:
        return len(self.bags)

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.bags]
        for a, b in self.tree_edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def rooted(self) -> tuple[list[int], list[list[int]], list[int]]:
        """(parent, children, depth) arrays for the tree rooted at self.root."""
        adj = self.neighbors()
        parent = [-1] * len(self.bags)
        depth = [0] * len(self.bags)
        children: list[list[int]] = [[] for _ in self.bags]
        order = deque([self.root])
        seen = {self.root}
        while order:
            x = order.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    children[x].append(y)
                    order.append(y)
        return parent, children, depth


def validate(g: Graph, td: TreeDecomposition) -> ValidationResult:
    """Check tree shape and the three decomposition conditions against g."""
    nb = len(td.bags)
    if nb == 0:
        return ValidationResult(False, "malformed tree: no bags")
    if not 0 <= td.root < nb:
        return ValidationResult(False, "malformed tree: root out of range")
    for a, b in td.tree_edges:
        if not (0 <= a < nb and 0 <= b < nb):
            return ValidationResult(False, "malformed tree: edge endpoint out of range")
    if len(td.tree_edges) != nb - 1:
        return ValidationResult(False, "malformed tree: edge count is not nodes-1")
    adj = td.neighbors()
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != nb:
        return ValidationResult(False, "malformed tree: disconnected (or cyclic)")
    for b in td.bags:
        for v in b:
            if not 0 <= v < g.n:
                return ValidationResult(False, f"bag vertex {v} not in graph")
    covered = set().union(*td.bags) if td.bags else set()
    if covered != set(range(g.n)):
        missing = sorted(set(range(g.n)) - covered)
        return ValidationResult(False, f"condition 1: vertices {missing} in no bag")
    # condition 2: nodes containing each vertex induce a connected subtree
    for v in range(g.n):
        holders = [i for i, b in enumerate(td.bags) if v in b]
        start = holders[0]
        reach = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in reach and v in td.bags[y]:
                    reach.add(y)
                    queue.append(y)
        if len(reach) != len(holders):
            return ValidationResult(False, f"condition 2: nodes holding {v} are disconnected")
    for u, v in g.edges:
        if not any(u in b and v in b for b in td.bags):
            return ValidationResult(False, f"condition 3: edge ({u}, {v}) in no bag")
    return ValidationResult(True, None)


def _reach_outside(adj_mask: list[int], v: int, through: int) -> int:
    """Count vertices outside `through`|{v} reachable from v via `through`."""
    visited = 1 << v
    frontier = adj_mask[v] & ~visited
    visited |= frontier
    while frontier & through:
        f = frontier & through
        nxt = 0
        while f:
            low = f & -f
            nxt |= adj_mask[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~visited
        visited |= frontier
    return (visited & ~through & ~(1 << v)).bit_count()


def exact_treewidth(g: Graph, limit: int = 20) -> tuple[int, TreeDecomposition]:
    """Exact treewidth with a witness decomposition.

    Dynamic program over vertex subsets: the best elimination order of a
    prefix set S is extended one vertex at a time, the cost of eliminating v
    after S being v's degree in the fill graph of S.  O(2^n poly) time, so
    intended for n <= `limit` only.
    """
    n = g.n
    if n > limit:
        raise ValueError(f"exact_treewidth limited to n <= {limit} (got {n})")
    if n == 0:
        return -1, TreeDecomposition(0, (frozenset(),), (), root=0)
    adj_mask = [0] * n
    for u, v in g.edges:
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u
    size = 1 << n
    inf = n + 1
    dp = [inf] * size
    dp[0] = -1
    choice = [-1] * size
    for s in sorted(range(size), key=lambda x: x.bit_count()):
        if dp[s] >= inf:
            continue
        rest = ~s & (size - 1)
        f = rest
        while f:
            low = f & -f
            v = low.bit_length() - 1
            f ^= low
            cand = dp[s]
            d = _reach_outside(adj_mask, v, s)
            if d > cand:
                cand = d
            ns = s | low
            if cand < dp[ns]:
                dp[ns] = cand
                choice[ns] = v
    tw = dp[size - 1]
    order_rev = []
    s = size - 1
    while s:
        v = choice[s]
        order_rev.append(v)
        s ^= 1 << v
    order = order_rev[::-1]
    td = _decomposition_from_order(g, order)
    assert td.width == tw
    return tw, td


def _decomposition_from_order(g: Graph, order: list[int]) -> TreeDecomposition:
    """Bags from eliminating `order` on the running fill graph."""
    n = g.n
    work: list[set[int]] = [set() for _ in range(n)]
    for u, v in g.edges:
        work[u].add(v)
        work[v].add(u)
    position = {v: i for i, v in enumerate(order)}
    bags = []
    for v in order:
        nv = set(work[v])
        bags.append(frozenset(nv | {v}))
        for a in nv:
            work[a].discard(v)
        for a in nv:
            for b in nv:
                if a != b:
                    work[a].add(b)
    edges = []
    for i, v in enumerate(order):
        rest = bags[i] - {v}
        if rest:
            parent = min(position[u] for u in rest)
        elif i + 1 < n:
            parent = i + 1
        else:
            continue
        edges.append((i, parent))
    return TreeDecomposition(n, bags, edges, root=n - 1)


@dataclass(frozen=True)
class NiceTreeDecomposition(TreeDecomposition):
    """Binary decomposition of start/join/introduce/forget nodes, empty root bag."""

    kinds: tuple[str, ...] = ()

    def __init__(self, n, bags, tree_edges, root, kinds):
        TreeDecomposition.__init__(self, n, bags, tree_edges, root)
        object.__setattr__(self, "kinds", tuple(kinds))


def make_nice(td: TreeDecomposition, g: Graph | None = None) -> NiceTreeDecomposition:
    """Rebuild td as a nice decomposition of the same width.

    If g is given the input is validated first.  Leaves become chains built
    from single-vertex start nodes; multi-child nodes become binary joins;
    the root is forgotten down to an empty bag.
    """
    if g is not None:
        res = validate(g, td)
        if not res.ok:
            raise ValueError(f"invalid decomposition: {res.problem}")
    # drop leaves with empty bags, they carry no information
    bags = list(td.bags)
    adj = {i: set(ns) for i, ns in enumerate(td.neighbors())}
    alive = set(range(len(bags)))
    changed = True
    while changed and len(alive) > 1:
        changed = False
        for x in sorted(alive):
            if len(adj[x]) <= 1 and not bags[x] and len(alive) > 1:
                for y in adj[x]:
                    adj[y].discard(x)
                adj[x] = set()
                alive.discard(x)
                changed = True
    if not any(bags[x] for x in alive):
        raise ValueError("cannot make a nice decomposition with all-empty bags")
    root = td.root if td.root in alive else min(x for x in alive if bags[x])

    out_bags: list[frozenset[int]] = []
    out_kinds: list[str] = []
    out_edges: list[tuple[int, int]] = []

    def emit(bag: frozenset[int], kind: str, children: Iterable[int]) -> int:
        nid = len(out_bags)
        out_bags.append(bag)
        out_kinds.append(kind)
        for c in children:
            out_edges.append((c, nid))
        return nid

    def chain_up(top: int, frm: frozenset[int], to: frozenset[int]) -> int:
        cur, bag = top, frm
        for v in sorted(frm - to):
            bag = bag - {v}
            cur = emit(bag, "forget", [cur])
        for v in sorted(to - frm):
            bag = bag | {v}
            cur = emit(bag, "introduce", [cur])
        return cur

    def leaf_chain(bag: frozenset[int]) -> int:
        vs = sorted(bag)
        cur = emit(frozenset({vs[0]}), "start", [])
        have = {vs[0]}
        for v in vs[1:]:
            have.add(v)
            cur = emit(frozenset(have), "introduce", [cur])
        return cur

    def build(x: int, parent: int) -> int:
        kids = sorted(y for y in adj[x] if y != parent)
        if not kids:
            return leaf_chain(bags[x])
        tops = [chain_up(build(c, x), bags[c], bags[x]) for c in kids]
        cur = tops[0]
        for nxt in tops[1:]:
            cur = emit(bags[x], "join", [cur, nxt])
        return cur

    top = build(root, -1)
    top = chain_up(top, bags[root], frozenset())
    return NiceTreeDecomposition(td.n, out_bags, out_edges, root=top, kinds=out_kinds)


def fine_separator(
    g: Graph, td: TreeDecomposition, r: Iterable[int], delta: int
) -> frozenset[int]:
    """Vertex set X so every component of g \\ X keeps at most delta r-vertices.

    Walks the rooted decomposition: while more than delta terminals remain
    unhandled, cut at a deepest bag whose subtree introduces more than delta of
    them, delete that bag, and detach its subtree.  Guarantees
    |X| <= (width+1) * floor(|r|/delta).
    """
    if delta < 1:
        raise ValueError("delta must be positive")
    res = validate(g, td)
    if not res.ok:
        raise ValueError(f"invalid decomposition: {res.problem}")
    r_active = set(r)
    if any(not 0 <= v < g.n for v in r_active):
        raise ValueError("terminal out of range")
    parent, children, depth = td.rooted()
    nb = len(td.bags)
    # Euler intervals for subtree tests on the static tree
    tin = [0] * nb
    tout = [0] * nb
    clock = 0
    stack: list[tuple[int, bool]] = [(td.root, False)]
    while stack:
        x, done = stack.pop()
        if done:
            tout[x] = clock
            continue
        tin[x] = clock
        clock += 1
        stack.append((x, True))
        for y in reversed(children[x]):
            stack.append((y, False))

    def in_subtree(top: int, node: int) -> bool:
        return tin[top] <= tin[node] <= tout[top]

    active = [True] * nb
    x_set: set[int] = set()
    while len(r_active) > delta:
        # highest active node whose subtree owns every active bag of v
        tops: dict[int, int] = {}
        for v in r_active:
            holders = [i for i in range(nb) if active[i] and v in td.bags[i]]
            lca = holders[0]
            for h in holders[1:]:
                a, b = lca, h
                while a != b:
                    if depth[a] < depth[b]:
                        b = parent[b]
                    else:
                        a = parent[a]
                lca = a
            tops[v] = lca
        r_count = [0] * nb
        for i in range(nb):
            if active[i]:
                r_count[i] = sum(1 for v in r_active if in_subtree(i, tops[v]))
        candidates = [
            i
            for i in range(nb)
            if active[i]
            and r_count[i] > delta
            and all(
                r_count[c] <= delta for c in children[i] if active[c]
            )
        ]
        b0 = max(candidates, key=lambda i: (depth[i], -i))
        handled = {v for v in r_active if in_subtree(b0, tops[v])}
        handled |= td.bags[b0] & r_active
        x_set |= td.bags[b0]
        r_active -= handled
        for i in range(nb):
            if active[i] and in_subtree(b0, i):
                active[i] = False
    return frozenset(x_set)
