"""Bipartite incidence graphs and the structural queries the merging engine relies on.

Nodes ``0 .. n_v-1`` are vertex-nodes (one per hypergraph vertex, same index);
nodes ``n_v .. n_v+n_e-1`` are edge-nodes, in edge order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .hypergraph import Hypergraph


@dataclass(frozen=True)
class IncidenceGraph:
    """Simple bipartite graph linking hypergraph vertices to the edges containing them."""

    host: Hypergraph
    n_v: int
    n_e: int
    adj: tuple[tuple[int, ...], ...]

    def e_node(self, edge_id: int) -> int:
        return self.n_v + edge_id

    def edge_id(self, node: int) -> int:
        return node - self.n_v

    def is_v_node(self, node: int) -> bool:
        return node < self.n_v

    @cached_property
    def adj_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self.adj)

    @cached_property
    def incidences(self) -> tuple[tuple[int, int], ...]:
        """All (vertex index, edge id) incidence pairs, grouped by edge."""
        return tuple(
            (v, j) for j in range(self.n_e) for v in self.adj[self.n_v + j])


def build_incidence(h: Hypergraph) -> IncidenceGraph:
    n, m = len(h.vertices), len(h.edges)
    adj: list[list[int]] = [[] for _ in range(n + m)]
    for j, e in enumerate(h.edges):
        for v in sorted(e):
            adj[v].append(n + j)
            adj[n + j].append(v)
    g = IncidenceGraph(h, n, m, tuple(tuple(sorted(row)) for row in adj))
    assert sum(len(row) for row in g.adj) == 2 * sum(len(e) for e in h.edges)
    return g


class Component(NamedTuple):
    nodes: frozenset[int]
    trivial: bool


def components(adj: Sequence[Sequence[int]]) -> tuple[Component, ...]:
    """Connected components of a graph given as adjacency rows.

    Ordered by smallest member node.  A component is trivial iff it is one
    isolated node.
    """
    n = len(adj)
    seen = [False] * n
    out: list[Component] = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        nodes = [s]
        q = deque([s])
        while q:
            u = q.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    nodes.append(w)
                    q.append(w)
        out.append(Component(frozenset(nodes), len(nodes) == 1))
    return tuple(out)


@dataclass(frozen=True)
class BlockDecomposition:
    """Biconnected decomposition: blocks, cut vertices, and the block tree.

    ``tree_edges`` pairs a block index with each cut vertex it contains;
    together with ``blocks`` this describes the bipartite block tree.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    tree_edges: frozenset[tuple[int, int]]


def block_decomposition(adj: Sequence[Sequence[int]]) -> BlockDecomposition:
    """Blocks and articulation points via one depth-first traversal per component.

    Isolated nodes form singleton blocks.
    """
    n = len(adj)
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cut: set[int] = set()
    blocks: list[frozenset[int]] = []
    estack: list[tuple[int, int]] = []
    time = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if not adj[root]:
            blocks.append(frozenset((root,)))
            continue
        root_children = 0
        disc[root] = low[root] = time
        time += 1
        stack: list[tuple[int, object]] = [(root, iter(adj[root]))]
        while stack:
            u, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    parent[w] = u
                    if u == root:
                        root_children += 1
                    estack.append((u, w))
                    disc[w] = low[w] = time
                    time += 1
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
                elif w != parent[u] and disc[w] < disc[u]:
                    estack.append((u, w))
                    if disc[w] < low[u]:
                        low[u] = disc[w]
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if low[u] >= disc[p]:
                        members: set[int] = set()
                        while estack:
                            a, b = estack.pop()
                            members.add(a)
                            members.add(b)
                            if (a, b) == (p, u):
                                break
                        blocks.append(frozenset(members))
                        if p != root:
                            cut.add(p)
        if root_children >= 2:
            cut.add(root)
    tree = frozenset(
        (bi, v) for bi, b in enumerate(blocks) for v in sorted(b) if v in cut)
    return BlockDecomposition(tuple(blocks), frozenset(cut), tree)


def articulation_points(adj: Sequence[Sequence[int]]) -> frozenset[int]:
    return block_decomposition(adj).cut_vertices
