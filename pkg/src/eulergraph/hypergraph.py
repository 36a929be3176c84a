"""Core hypergraph model: vertex sets, hyperedge multisets, walks, and certificate verification.

Vertices are opaque string labels mapped internally to dense indices.  Edges
form an indexed multiset: the identity of an edge is its position in the
``edges`` tuple, so two edges with equal content remain distinct.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations


@dataclass(frozen=True)
class Hypergraph:
    """A finite hypergraph with labelled vertices and an indexed edge multiset.

    ``edges[i]`` is the set of vertex indices of edge ``i``.  User-facing
    output always uses the original labels; the printable name of edge ``i``
    is ``e{i+1}``.
    """

    vertices: tuple[str, ...]
    edges: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("vertex set must be non-empty")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex label")
        n = len(self.vertices)
        for i, e in enumerate(self.edges):
            for v in e:
                if not (0 <= v < n):
                    raise ValueError(f"edge {i} references unknown vertex index {v}")

    @classmethod
    def from_labels(cls, vertices, edges) -> Hypergraph:
        """Build a hypergraph from label iterables, preserving the given orders."""
        vs = tuple(vertices)
        index = {lab: i for i, lab in enumerate(vs)}
        es = []
        for e in edges:
            members = set()
            for lab in e:
                if lab not in index:
                    raise ValueError(f"edge {len(es)} references unknown vertex {lab!r}")
                members.add(index[lab])
            es.append(frozenset(members))
        return cls(vs, tuple(es))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.vertices)}

    @property
    def order(self) -> int:
        return len(self.vertices)

    def vertex_index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown vertex {label!r}") from None

    def edge_labels(self, edge_id: int) -> tuple[str, ...]:
        """Sorted vertex labels of one edge."""
        return tuple(sorted(self.vertices[i] for i in self.edges[edge_id]))

    def degree(self, label: str) -> int:
        """Number of edges incident with the vertex, counting multiplicity."""
        i = self.vertex_index(label)
        return sum(1 for e in self.edges if i in e)

    def uniformity(self) -> int | None:
        """The common edge cardinality, or None if edges are absent or mixed."""
        sizes = {len(e) for e in self.edges}
        if len(sizes) != 1:
            return None
        return next(iter(sizes))


def edge_name(edge_id: int) -> str:
    """Printable name of an edge id, 1-based: ``e1``, ``e2``, ..."""
    return f"e{edge_id + 1}"


@dataclass(frozen=True)
class CoveringReport:
    is_k_uniform: bool
    is_covering: bool
    witness_uncovered: tuple[str, ...] | None


def validate_covering(h: Hypergraph, k: int) -> CoveringReport:
    """Check whether ``h`` is a covering k-hypergraph.

    Covering means: non-empty, k-uniform, and every (k-1)-subset of the
    vertex set lies inside at least one edge.  When coverage fails, the
    witness is the first missing subset in lexicographic label order.
    """
    if k < 3:
        raise ValueError(f"covering hypergraphs are defined for k >= 3, got k={k}")
    uniform = all(len(e) == k for e in h.edges)
    if not uniform or not h.edges:
        return CoveringReport(uniform, False, None)
    labels = sorted(h.vertices)
    edge_sets = [frozenset(h.vertices[i] for i in e) for e in h.edges]
    for combo in combinations(labels, k - 1):
        s = set(combo)
        if not any(s <= es for es in edge_sets):
            return CoveringReport(True, False, tuple(combo))
    return CoveringReport(True, True, None)


@dataclass(frozen=True)
class Walk:
    """An alternating vertex/edge sequence v0 e1 v1 ... ek vk.

    Anchors are vertex labels; edges are edge ids of the host hypergraph.
    Shape and incidence validity against a host are checked by
    :func:`verify_euler_object`, not by the constructor.
    """

    anchors: tuple[str, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def is_closed(self) -> bool:
        return len(self.edges) >= 2 and bool(self.anchors) and self.anchors[0] == self.anchors[-1]

    @property
    def is_trail(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    @property
    def is_cycle(self) -> bool:
        if not (self.is_closed and self.is_trail):
            return False
        inner = self.anchors[:-1]
        return len(set(inner)) == len(inner)


@dataclass(frozen=True)
class EulerFamily:
    """Pairwise anchor- and edge-disjoint closed trails jointly covering every edge.

    A family with exactly one component is an Euler tour.
    """

    components: tuple[Walk, ...]


# An Euler tour is represented as a single closed trail.
EulerTour = Walk


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    violations: tuple[str, ...]


def verify_euler_object(h: Hypergraph, f: EulerFamily) -> VerifyReport:
    """Check an Euler family (or tour, as a 1-component family) against its host.

    Never raises: every failed condition is reported with the offending
    component or edge index.
    """
    bad: list[str] = []
    m = len(h.edges)
    usage: Counter[int] = Counter()
    anchor_owner: dict[str, int] = {}

    for ci, w in enumerate(f.components):
        if len(w.anchors) != len(w.edges) + 1:
            bad.append(f"component {ci}: {len(w.anchors)} anchors do not fit {len(w.edges)} edges")
            continue
        if len(w.edges) < 2:
            bad.append(f"component {ci}: a closed trail needs at least 2 edges")
        if w.anchors[0] != w.anchors[-1]:
            bad.append(f"component {ci}: not closed ({w.anchors[0]!r} != {w.anchors[-1]!r})")
        dup = [e for e, c in Counter(w.edges).items() if c > 1]
        for e in sorted(dup):
            bad.append(f"component {ci}: edge {edge_name(e)} repeated")
        for j, eid in enumerate(w.edges):
            if not isinstance(eid, int) or not (0 <= eid < m):
                bad.append(f"component {ci}: step {j} uses unknown edge id {eid!r}")
                continue
            usage[eid] += 1
            a, b = w.anchors[j], w.anchors[j + 1]
            ia = h._index.get(a)
            ib = h._index.get(b)
            if ia is None:
                bad.append(f"component {ci}: unknown anchor {a!r} at step {j}")
                continue
            if ib is None:
                bad.append(f"component {ci}: unknown anchor {b!r} at step {j}")
                continue
            if a == b:
                bad.append(f"component {ci}: equal consecutive anchors {a!r} at step {j}")
            if ia not in h.edges[eid]:
                bad.append(f"component {ci}: anchor {a!r} not in {edge_name(eid)} at step {j}")
            if ib not in h.edges[eid]:
                bad.append(f"component {ci}: anchor {b!r} not in {edge_name(eid)} at step {j}")
        for lab in set(w.anchors):
            if lab in anchor_owner and anchor_owner[lab] != ci:
                bad.append(
                    f"components {anchor_owner[lab]} and {ci} share anchor {lab!r}")
            else:
                anchor_owner.setdefault(lab, ci)

    for eid in sorted(usage):
        if usage[eid] > 1:
            bad.append(f"edge {edge_name(eid)} traversed {usage[eid]} times across the family")
    for eid in range(m):
        if eid not in usage:
            bad.append(f"edge {edge_name(eid)} never traversed")

    return VerifyReport(not bad, tuple(bad))


def _interleave(anchors, edges):
    out = []
    for a, e in zip(anchors, edges):
        out.append(a)
        out.append(e)
    return tuple(out)


def canonical_closed_trail(w: Walk) -> Walk:
    """Rotate/reflect a closed trail into a canonical form.

    Among all rotations and both directions, picks the lexicographically
    smallest interleaved (anchor, edge, anchor, ...) sequence.  Canonical
    forms make certificates comparable as values.
    """
    if len(w.anchors) != len(w.edges) + 1 or not w.is_closed or not w.is_trail:
        raise ValueError("canonical form is defined for closed trails only")
    k = len(w.edges)
    anchors = w.anchors[:-1]
    edges = w.edges
    best_key = None
    best = None
    for r in range(k):
        fwd_a = anchors[r:] + anchors[:r]
        fwd_e = edges[r:] + edges[:r]
        key = _interleave(fwd_a, fwd_e)
        if best_key is None or key < best_key:
            best_key, best = key, (fwd_a, fwd_e)
        rev_a = (anchors[r],) + tuple(anchors[(r - i) % k] for i in range(1, k))
        rev_e = tuple(edges[(r - 1 - i) % k] for i in range(k))
        key = _interleave(rev_a, rev_e)
        if key < best_key:
            best_key, best = key, (rev_a, rev_e)
    a, e = best
    return Walk(a + (a[0],), e)
