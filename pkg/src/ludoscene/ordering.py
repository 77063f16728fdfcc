"""Precedence ordering of sibling ludic elements."""

from __future__ import annotations

import heapq

from ludoscene.model import ROOT, LudicElement, OrderingGraph, Scenario


class CycleError(ValueError):
    """The ordering graph has a directed cycle; ``nodes`` lists the unplaced ones."""

    def __init__(self, nodes: list[str]) -> None:
        self.nodes = nodes
        super().__init__(f"ordering cycle among: {', '.join(nodes)}")


def linear_order(graph: OrderingGraph) -> list[str]:
    """Topologically sort *graph*, breaking ties by node position in ``graph.nodes``.

    Edges whose endpoints are not declared nodes are ignored; the validator
    reports them separately.
    """
    position = {node: i for i, node in enumerate(graph.nodes)}
    successors: dict[str, set[str]] = {node: set() for node in position}
    indegree = dict.fromkeys(position, 0)
    for before, after in set(graph.edges):
        if before in position and after in position:
            successors[before].add(after)
            indegree[after] += 1

    ready = [position[n] for n, d in indegree.items() if d == 0]
    heapq.heapify(ready)
    out: list[str] = []
    while ready:
        node = graph.nodes[heapq.heappop(ready)]
        out.append(node)
        for nxt in successors[node]:
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                heapq.heappush(ready, position[nxt])
    if len(out) != len(position):
        placed = set(out)
        raise CycleError([n for n in graph.nodes if n not in placed])
    return out


def siblings(scenario: Scenario, owner: str) -> tuple[LudicElement, ...]:
    """Children of *owner* (a mission id, or ROOT for the mission list)."""
    if owner == ROOT:
        return scenario.ludic
    entry = scenario.index.get(owner)
    if entry is None or entry.kind != "mission":
        return ()
    return entry.element.children


def ordered_siblings(scenario: Scenario, owner: str) -> list[LudicElement]:
    """Siblings under *owner* in play order.

    The declared ordering graph decides; siblings it does not mention follow
    in document order, and with no graph at all document order is used.
    """
    children = siblings(scenario, owner)
    graph = scenario.orderings.get(owner)
    if graph is None:
        return list(children)
    by_id = {c.id: c for c in children}
    ordered = [by_id[n] for n in linear_order(graph) if n in by_id]
    placed = {c.id for c in ordered}
    ordered.extend(c for c in children if c.id not in placed)
    return ordered


def ordered_missions(scenario: Scenario) -> list[LudicElement]:
    return ordered_siblings(scenario, ROOT)
