"""Shared test utilities: independent oracles and instance builders."""

from __future__ import annotations

from collections import deque
from itertools import combinations

from eulergraph import FamilySubgraph, Hypergraph, InterchangeCycle, build_incidence
from eulergraph.genio import Lcg
from eulergraph.interchange import _alternating_cycles

FANO_TRIPLES = ["123", "145", "167", "246", "257", "347", "356"]


def fano() -> Hypergraph:
    return Hypergraph.from_labels("1234567", FANO_TRIPLES)


def petersen() -> tuple[tuple[int, ...], ...]:
    adj = [[] for _ in range(10)]
    for i in range(5):
        for a, b in ((i, (i + 1) % 5), (i, i + 5), (i + 5, 5 + (i + 2) % 5)):
            adj[a].append(b)
            adj[b].append(a)
    return tuple(tuple(sorted(r)) for r in adj)


def complete_graph(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(j for j in range(n) if j != i) for i in range(n))


def random_graph(rng: Lcg, n: int, density_pct: int) -> tuple[tuple[int, ...], ...]:
    adj = [[] for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if rng.below(100) < density_pct:
                adj[a].append(b)
                adj[b].append(a)
    return tuple(tuple(r) for r in adj)


def brute_cut_vertices(adj) -> set[int]:
    """Articulation points by node deletion and component recount."""

    def ncomp(rows, skip):
        n = len(rows)
        seen = [False] * n
        if skip is not None:
            seen[skip] = True
        count = 0
        for s in range(n):
            if seen[s]:
                continue
            count += 1
            seen[s] = True
            q = deque([s])
            while q:
                u = q.popleft()
                for w in rows[u]:
                    if w != skip and not seen[w]:
                        seen[w] = True
                        q.append(w)
        return count

    base = ncomp(adj, None)
    return {v for v in range(len(adj)) if ncomp(adj, v) > base}


def tutte_berge_max_matching(adj) -> int:
    """Independent maximum-matching size via the deficiency formula."""
    n = len(adj)

    def odd_components(banned: int) -> int:
        seen = 0
        odd = 0
        for s in range(n):
            bit = 1 << s
            if banned & bit or seen & bit:
                continue
            size = 0
            q = deque([s])
            seen |= bit
            while q:
                u = q.popleft()
                size += 1
                for w in adj[u]:
                    wb = 1 << w
                    if not (banned & wb) and not (seen & wb):
                        seen |= wb
                        q.append(w)
            if size % 2 == 1:
                odd += 1
        return odd

    worst = 0
    for banned in range(1 << n):
        deficiency = odd_components(banned) - bin(banned).count("1")
        if deficiency > worst:
            worst = deficiency
    return (n - worst) // 2


def grouped_family(groups) -> tuple[Hypergraph, object, FamilySubgraph]:
    """A covering 3-hypergraph plus a family certificate with one component per group.

    Each group pair {x, y} contributes one edge {x, y, z} per vertex z outside
    the group, anchored at (x, y).  Degrees stay even when every group of even
    size sees an even number of outside vertices, so keep the total vertex
    count even unless all groups have odd size.
    """
    labels = [v for grp in groups for v in grp]
    edges = []
    anchors = []
    for grp in groups:
        outside = [z for z in labels if z not in grp]
        for i in range(len(grp)):
            for j in range(i + 1, len(grp)):
                for z in outside:
                    edges.append((grp[i], grp[j], z))
                    anchors.append((grp[i], grp[j]))
    h = Hypergraph.from_labels(labels, edges)
    g = build_incidence(h)
    selected = set()
    for eid, (x, y) in enumerate(anchors):
        selected.add((h.vertex_index(x), eid))
        selected.add((h.vertex_index(y), eid))
    return h, g, FamilySubgraph(g, frozenset(selected))


def sample_interchanging_cycles(fsub: FamilySubgraph, rng: Lcg, want: int = 10,
                                tries: int = 40, max_e: int = 5) -> list[InterchangeCycle]:
    """Collect interchanging cycles of fsub at seeded-random starts and lengths."""
    out = []
    seen = set()
    n_v = fsub.host.n_v
    for _ in range(tries):
        if len(out) >= want:
            break
        t = 2 + rng.below(max_e - 1)
        s = rng.below(n_v)
        skip = rng.below(4)
        counter = [4000]
        i = 0
        for nodes in _alternating_cycles(fsub, s, t, "any", counter):
            if i == skip:
                if nodes not in seen:
                    seen.add(nodes)
                    out.append(InterchangeCycle.from_nodes(fsub, nodes))
                break
            i += 1
    return out


def all_pairs_covered(h: Hypergraph, k: int) -> tuple[bool, tuple | None]:
    """Direct re-implementation of the covering condition, used as a test oracle."""
    edge_sets = [set(h.edge_labels(j)) for j in range(len(h.edges))]
    for combo in combinations(sorted(h.vertices), k - 1):
        if not any(set(combo) <= es for es in edge_sets):
            return False, combo
    return True, None
