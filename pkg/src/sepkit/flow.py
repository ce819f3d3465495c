"""Integer max-flow / min s-t cut via BFS augmenting paths."""

from __future__ import annotations

from collections import deque
from typing import Iterable


class FlowNetwork:
    """Directed arcs with integer capacities.

    Arcs are stored pairwise with their reverse; `add_undirected` models an
    undirected edge as a forward/backward pair of equal capacity.  Node and
    arc insertion order is preserved, which makes min-cut sides deterministic.
    """

    def __init__(self, num_nodes: int, source: int, sink: int):
        if source == sink:
            raise ValueError("source equals sink")
        self.num_nodes = num_nodes
        self.source = source
        self.sink = sink
        self._head: list[list[int]] = [[] for _ in range(num_nodes)]
        self._to: list[int] = []
        self._cap: list[int] = []

    def add_node(self) -> int:
        self._head.append([])
        self.num_nodes += 1
        return self.num_nodes - 1

    def add_arc(self, u: int, v: int, cap: int, rev_cap: int = 0) -> None:
        if cap < 0 or rev_cap < 0:
            raise ValueError("capacities must be non-negative")
        self._head[u].append(len(self._to))
        self._to.append(v)
        self._cap.append(cap)
        self._head[v].append(len(self._to))
        self._to.append(u)
        self._cap.append(rev_cap)

    def add_undirected(self, u: int, v: int, cap: int) -> None:
        self.add_arc(u, v, cap, rev_cap=cap)

    def _augment(self) -> int:
        parent_arc = [-1] * self.num_nodes
        parent_arc[self.source] = -2
        queue = deque([self.source])
        while queue:
            x = queue.popleft()
            if x == self.sink:
                break
            for a in self._head[x]:
                y = self._to[a]
                if self._cap[a] > 0 and parent_arc[y] == -1:
                    parent_arc[y] = a
                    queue.append(y)
        if parent_arc[self.sink] == -1:
            return 0
        # walk back to find the bottleneck, then push it
        bottleneck = None
        y = self.sink
        while y != self.source:
            a = parent_arc[y]
            bottleneck = self._cap[a] if bottleneck is None else min(bottleneck, self._cap[a])
            y = self._to[a ^ 1]
        y = self.sink
        while y != self.source:
            a = parent_arc[y]
            self._cap[a] -= bottleneck
            self._cap[a ^ 1] += bottleneck
            y = self._to[a ^ 1]
        return bottleneck

    def max_flow(self) -> int:
        total = 0
        while True:
            pushed = self._augment()
            if pushed == 0:
                return total
            total += pushed

    def residual_reachable(self) -> frozenset[int]:
        """Nodes reachable from the source in the residual network."""
        seen = {self.source}
        queue = deque([self.source])
        while queue:
            x = queue.popleft()
            for a in self._head[x]:
                y = self._to[a]
                if self._cap[a] > 0 and y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def residual_coreachable(self) -> frozenset[int]:
        """Nodes with a residual path to the sink."""
        seen = {self.sink}
        queue = deque([self.sink])
        while queue:
            y = queue.popleft()
            for a in self._head[y]:
                # arc a is (y -> to); its reverse (to -> y) has residual cap[a^1]
                x = self._to[a]
                if self._cap[a ^ 1] > 0 and x not in seen:
                    seen.add(x)
                    queue.append(x)
        return frozenset(seen)


def min_st_cut(net: FlowNetwork) -> tuple[int, frozenset[int]]:
    """Exact min cut value and the residual-reachable source side."""
    value = net.max_flow()
    return value, net.residual_reachable()
