"""Forest structure of two-distribution couplings."""

from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from mec.core.models import EPS, Coupling
from mec.utils.errors import UnsupportedError

Node = tuple[str, int]


@dataclass(frozen=True)
class BipartiteForest:
    """Positive cells of a coupling as a weighted bipartite graph."""

    edges: tuple[tuple[int, int, float], ...]

    @classmethod
    def from_coupling(cls, c: Coupling) -> "BipartiteForest":
        if c.entries and c.m != 2:
            raise UnsupportedError(f"forest view needs m=2, got m={c.m}")
        return cls(tuple((e.indices[0], e.indices[1], e.mass) for e in c.entries))

    @cached_property
    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        for i, j, mass in self.edges:
            graph.add_edge(("p", i), ("q", j), weight=mass)
        return graph

    @property
    def is_forest(self) -> bool:
        return not self.edges or bool(nx.is_forest(self.graph))

    def cycle(self) -> list[tuple[Node, Node]]:
        try:
            return [(u, v) for u, v in nx.find_cycle(self.graph)]
        except nx.NetworkXNoCycle:
            return []

    def heavy_edges_without_leaf(self) -> list[tuple[int, int, float]]:
        """Maximum-weight edges whose endpoints both have degree above one."""
        if not self.edges:
            return []
        heaviest = max(mass for _, _, mass in self.edges)
        degree = self.graph.degree
        return [
            (i, j, mass)
            for i, j, mass in self.edges
            if mass >= heaviest - EPS and degree[("p", i)] > 1 and degree[("q", j)] > 1
        ]


@dataclass(frozen=True)
class ForestCheck:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_forest_leaf_property(c: Coupling) -> ForestCheck:
    """Acyclic, and every heaviest edge touches a leaf."""
    forest = BipartiteForest.from_coupling(c)
    if not forest.is_forest:
        return ForestCheck(False, f"cycle: {forest.cycle()}")
    stuck = forest.heavy_edges_without_leaf()
    if stuck:
        return ForestCheck(False, f"heaviest edges without a leaf endpoint: {stuck}")
    return ForestCheck(True)
