"""Brute-force ground truth for families, tours and matchings.

Everything here takes an independent code path from the main engine (only the
data types are shared), so the two sides can check each other.  All searches
are exact within their size budgets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .hypergraph import EulerFamily, Hypergraph, Walk, canonical_closed_trail, verify_euler_object


@dataclass(frozen=True)
class SearchBudget:
    max_edges: int = 10
    max_nodes: int = 16

    def __post_init__(self):
        if self.max_edges <= 0 or self.max_nodes <= 0:
            raise ValueError("budget limits must be positive")


DEFAULT_BUDGET = SearchBudget()


def brute_family_exists(h: Hypergraph, budget: SearchBudget = DEFAULT_BUDGET) -> bool:
    """Exhaustively decide Euler-family existence.

    Enumerates one anchor pair per edge and checks that every vertex ends up
    with even parity; that is exactly the existence of a family certificate.
    """
    m = len(h.edges)
    if m > budget.max_edges:
        raise ValueError(f"too many edges for exhaustive search ({m} > {budget.max_edges})")
    choices = [list(combinations(sorted(e), 2)) for e in h.edges]
    if any(not c for c in choices):
        return False
    parity = [0] * h.order

    def walk(i: int) -> bool:
        if i == m:
            return not any(parity)
        for a, b in choices[i]:
            parity[a] ^= 1
            parity[b] ^= 1
            if walk(i + 1):
                return True
            parity[a] ^= 1
            parity[b] ^= 1
        return False

    return walk(0)


def brute_tour(h: Hypergraph, budget: SearchBudget = DEFAULT_BUDGET) -> Walk | None:
    """Backtracking search for an Euler tour; returns a canonical verified tour or None."""
    m = len(h.edges)
    if m > budget.max_edges:
        raise ValueError(f"too many edges for exhaustive search ({m} > {budget.max_edges})")
    if m < 2:
        return None
    members = [sorted(e) for e in h.edges]
    used = [False] * m
    anchors: list[int] = []
    eseq: list[int] = []

    def extend(cur: int, start: int, count: int) -> bool:
        if count == m:
            return cur == start
        for eid in range(m):
            if used[eid] or cur not in h.edges[eid]:
                continue
            used[eid] = True
            eseq.append(eid)
            for nxt in members[eid]:
                if nxt == cur:
                    continue
                anchors.append(nxt)
                if extend(nxt, start, count + 1):
                    return True
                anchors.pop()
            eseq.pop()
            used[eid] = False
        return False

    first = members[0]
    for a in first:
        for b in first:
            if a == b:
                continue
            used[0] = True
            anchors[:] = [a, b]
            eseq[:] = [0]
            if extend(b, a, 1):
                walk = Walk(tuple(h.vertices[i] for i in anchors), tuple(eseq))
                tour = canonical_closed_trail(walk)
                report = verify_euler_object(h, EulerFamily((tour,)))
                assert report.valid
                return tour
            used[0] = False
    return None


def brute_max_matching(adj: Sequence[Sequence[int]], budget: SearchBudget = DEFAULT_BUDGET) -> int:
    """Exact maximum matching size over node subsets (branch on the lowest live node)."""
    n = len(adj)
    if n > budget.max_nodes:
        raise ValueError(f"too many nodes for exhaustive search ({n} > {budget.max_nodes})")
    nbr = [0] * n
    for v in range(n):
        for u in adj[v]:
            nbr[v] |= 1 << u

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask == 0:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        top = best(rest)
        avail = nbr[v] & rest
        while avail:
            u = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            cand = 1 + best(rest & ~(1 << u))
            if cand > top:
                top = cand
        return top

    result = best((1 << n) - 1)
    best.cache_clear()
    return result
