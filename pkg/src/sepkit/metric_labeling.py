"""Uniform metric labeling: instances, expansion-move 2-approximation, and the
cover-based pipeline for subset edge separation."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .flow import FlowNetwork, min_st_cut
from .graph import Graph, SeparatorInstance, boundary, components
from .important_cuts import build_cover
from .util import as_fraction


class _Marker:
    def __init__(self, name: str):
        self._name = name

    def __repr__(self) -> str:
        return self._name


#: cost-matrix entry for a disallowed (vertex, label) pair
FORBIDDEN = _Marker("FORBIDDEN")
#: dummy label for vertices outside the terminal set in pipeline instances
BOTTOM = _Marker("BOTTOM")


class InfeasibleLabelingError(ValueError):
    pass


@dataclass(frozen=True)
class LabelingInstance:
    """Graph, label list, and per-(vertex, label) assignment costs.

    Costs are non-negative integers or FORBIDDEN.  Every vertex must keep at
    least one allowed label, otherwise the instance is rejected.
    """

    graph: Graph
    labels: tuple
    costs: tuple[tuple, ...]

    def __init__(self, graph: Graph, labels: Sequence, costs: Sequence[Sequence]):
        labels = tuple(labels)
        rows = []
        if len(costs) != graph.n:
            raise ValueError("cost matrix must have one row per vertex")
        for v, row in enumerate(costs):
            row = tuple(row)
            if len(row) != len(labels):
                raise ValueError("cost row length must match label count")
            for c in row:
                if c is not FORBIDDEN and (not isinstance(c, int) or c < 0):
                    raise ValueError("costs must be non-negative integers or FORBIDDEN")
            if all(c is FORBIDDEN for c in row):
                raise InfeasibleLabelingError(f"vertex {v} has no allowed label")
            rows.append(row)
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "costs", tuple(rows))

    def allowed(self, v: int) -> list[int]:
        return [li for li, c in enumerate(self.costs[v]) if c is not FORBIDDEN]

    def to_json_dict(self) -> dict:
        return {
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges],
            "labels": [repr(l) if isinstance(l, _Marker) else sorted(l) if isinstance(l, frozenset) else l for l in self.labels],
            "costs": [
                [v, li, "forbidden" if c is FORBIDDEN else c]
                for v, row in enumerate(self.costs)
                for li, c in enumerate(row)
            ],
        }


@dataclass(frozen=True)
class Labeling:
    """Label index per vertex."""

    label_of: tuple[int, ...]

    def objective(self, inst: LabelingInstance) -> int:
        total = 0
        for v, li in enumerate(self.label_of):
            c = inst.costs[v][li]
            if c is FORBIDDEN:
                raise ValueError(f"vertex {v} holds a forbidden label")
            total += c
        for u, v in inst.graph.edges:
            if self.label_of[u] != self.label_of[v]:
                total += 1
        return total

    def bichromatic_edges(self, inst: LabelingInstance) -> frozenset[int]:
        lo = self.label_of
        return frozenset(
            eid for eid, (u, v) in enumerate(inst.graph.edges) if lo[u] != lo[v]
        )


def _first_allowed(inst: LabelingInstance) -> Labeling:
    return Labeling(tuple(inst.allowed(v)[0] for v in range(inst.graph.n)))


def _expansion(inst: LabelingInstance, lab: Labeling, alpha: int) -> Labeling:
    """Best single-sweep move where each vertex keeps its label or takes alpha.

    Binary min-cut with the source side meaning "switch to alpha".  t-link
    capacities carry assignment costs; an edge with unequal current labels
    contributes an always-paid unit unless both endpoints switch, encoded as
    a unit source link on one endpoint plus a directed unit arc.
    """
    g = inst.graph
    n = g.n
    finite = sum(c for row in inst.costs for c in row if c is not FORBIDDEN)
    big = finite + g.m + 1
    sigma, tau = n, n + 1
    net = FlowNetwork(n + 2, source=sigma, sink=tau)
    to_source = [0] * n
    to_sink = [0] * n
    for v in range(n):
        ca = inst.costs[v][alpha]
        ck = inst.costs[v][lab.label_of[v]]
        to_sink[v] += big if ca is FORBIDDEN else ca
        to_source[v] += big if lab.label_of[v] == alpha else ck
    pair_arcs = []
    for u, v in g.edges:
        lu, lv = lab.label_of[u], lab.label_of[v]
        if lu == alpha and lv == alpha:
            continue
        if lu == lv:
            pair_arcs.append((u, v, True))
        else:
            to_source[u] += 1
            pair_arcs.append((u, v, False))
    for v in range(n):
        net.add_arc(sigma, v, to_source[v])
        net.add_arc(v, tau, to_sink[v])
    for u, v, undirected in pair_arcs:
        if undirected:
            net.add_undirected(u, v, 1)
        else:
            net.add_arc(u, v, 1)
    _, side = min_st_cut(net)
    new = [alpha if v in side else lab.label_of[v] for v in range(n)]
    return Labeling(tuple(new))


def solve_uml_2approx(
    inst: LabelingInstance, initial: Labeling | None = None
) -> Labeling:
    """Expansion-move local search; objective never increases per move and the
    result is within factor 2 of the optimum for the uniform metric."""
    lab = initial if initial is not None else _first_allowed(inst)
    best = lab.objective(inst)
    improved = True
    while improved:
        improved = False
        for alpha in range(len(inst.labels)):
            cand = _expansion(inst, lab, alpha)
            val = cand.objective(inst)
            if val < best:
                lab, best = cand, val
                improved = True
    return lab


def canonicalize(
    inst: SeparatorInstance, solution: Iterable[int], epsilon
) -> frozenset[int]:
    """Additionally isolate terminals of components with oversized boundaries.

    A feasible solution is reshaped so every terminal-holding component keeps
    boundary at most 2k*deg(G)/epsilon; components above the threshold lose
    every edge incident to their terminals.
    """
    eps = as_fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    g, r, k = inst.graph, inst.terminals, inst.k
    sol = frozenset(solution)
    comps = components(g, removed_edges=sol)
    if any(len(c & r) > k for c in comps):
        raise ValueError("input solution is infeasible")
    threshold = Fraction(2 * k * g.max_degree) / eps
    extra: set[int] = set()
    for c in comps:
        if c & r and len(boundary(g, c)) > threshold:
            extra |= g.incident_edges(c & r)
    return sol | extra


def kses_via_uml(inst: SeparatorInstance, epsilon) -> frozenset[int]:
    """Cover-and-label pipeline: build the cover, label vertices with cover
    sets (terminals) or the dummy label (non-terminals), run the expansion
    solver, and return the bichromatic edges.

    Guarantee: within 2(1+epsilon) of the optimal subset edge separator.
    """
    eps = as_fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    g, r = inst.graph, inst.terminals
    d = g.max_degree
    m_bound = max(math.ceil(Fraction(2 * inst.k * d) / eps), d, 1)
    cover = build_cover(inst, m_bound)
    labels = tuple(cover.sets) + (BOTTOM,)
    bottom = len(labels) - 1
    costs = []
    for v in range(g.n):
        row = [0 if v in cs else FORBIDDEN for cs in cover.sets]
        row.append(FORBIDDEN if v in r else 0)
        costs.append(row)
    uml = LabelingInstance(g, labels, costs)
    init = []
    for v in range(g.n):
        if v in r:
            init.append(next(i for i, cs in enumerate(cover.sets) if v in cs))
        else:
            init.append(bottom)
    lab = solve_uml_2approx(uml, initial=Labeling(tuple(init)))
    return lab.bichromatic_edges(uml)
