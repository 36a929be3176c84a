"""Corpus generators and the bit-exact text formats.

Hypergraph file format (``.hg``)::

    hg <k> <n> <m>     header; k=0 marks a non-uniform edge list
    v <label>          n lines, one vertex label each
    e <l1> ... <lk>    m lines, k labels each (any arity when k=0)

``#`` starts a comment, blank lines are skipped, labels are whitespace-free
UTF-8 tokens.  Emission is byte-deterministic: vertex lines sorted, each edge
line's labels sorted, edge order preserved (edge ids are positional).

Tour certificates are a single line ``v0 e1 v1 e2 ... v0`` alternating vertex
labels and 1-based edge names; a family certificate is one such line per
closed trail.

Randomness comes from an explicit 64-bit linear congruential generator so
corpora regenerate identically anywhere: state' = (state * 6364136223846793005
+ 1442695040888963407) mod 2**64, each draw returning the top 31 bits.
"""

from __future__ import annotations

import re
from itertools import combinations

from .errors import FormatError, InadmissibleOrderError
from .hypergraph import EulerFamily, Hypergraph, Walk, edge_name

_LCG_MUL = 6364136223846793005
_LCG_INC = 1442695040888963407
_LCG_MASK = (1 << 64) - 1


class Lcg:
    """Deterministic 64-bit LCG (documented in the module docstring)."""

    def __init__(self, seed: int):
        self.state = seed & _LCG_MASK

    def draw(self) -> int:
        self.state = (self.state * _LCG_MUL + _LCG_INC) & _LCG_MASK
        return self.state >> 33

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.draw() % n

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def gen_complete(n: int, k: int) -> Hypergraph:
    """All k-subsets of n vertices; covering by construction."""
    if not n > k >= 3:
        raise ValueError(f"need n > k >= 3, got n={n}, k={k}")
    verts = tuple(f"v{i}" for i in range(1, n + 1))
    edges = [tuple(verts[i] for i in combo) for combo in combinations(range(n), k)]
    return Hypergraph.from_labels(verts, edges)


def gen_sts(n: int) -> Hypergraph:
    """A Steiner triple system of order n: every pair in exactly one triple.

    Orders 3 mod 6 use the quasigroup-on-three-wings construction over
    Z_(n/3) with the halving product; orders 1 mod 6 use the variant with a
    point at infinity over a half-idempotent commutative quasigroup of even
    order.
    """
    if n < 7 or n % 6 not in (1, 3):
        raise InadmissibleOrderError(
            f"no Steiner triple system of order {n} (need n % 6 in {{1, 3}} and n >= 7)")

    def lab(p) -> str:
        return p if isinstance(p, str) else f"{p[0]}{'abc'[p[1]]}"

    triples: list[tuple] = []
    if n % 6 == 3:
        t = n // 6
        q = 2 * t + 1
        half = t + 1  # 2 * half == 1 (mod q), so (x + y) * half halves the sum
        pts = [(x, i) for i in range(3) for x in range(q)]
        for x in range(q):
            triples.append(((x, 0), (x, 1), (x, 2)))
        for i in range(3):
            for x in range(q):
                for y in range(x + 1, q):
                    triples.append(((x, i), (y, i), (((x + y) * half) % q, (i + 1) % 3)))
    else:
        t = n // 6
        q = 2 * t

        def rho(z: int) -> int:
            return z // 2 if z % 2 == 0 else t + (z - 1) // 2

        pts = ["oo"] + [(x, i) for i in range(3) for x in range(q)]
        for x in range(t):
            triples.append(((x, 0), (x, 1), (x, 2)))
        for i in range(3):
            for x in range(t):
                triples.append(("oo", (t + x, i), (x, (i + 1) % 3)))
        for i in range(3):
            for x in range(q):
                for y in range(x + 1, q):
                    triples.append(((x, i), (y, i), (rho((x + y) % q), (i + 1) % 3)))

    verts = tuple(lab(p) for p in pts)
    return Hypergraph.from_labels(verts, [tuple(sorted(lab(p) for p in tri)) for tri in triples])


def gen_random_covering(n: int, k: int, seed: int) -> Hypergraph:
    """Seeded greedy covering: visit (k-1)-subsets in random order, patch uncovered ones."""
    if not n > k >= 3:
        raise ValueError(f"need n > k >= 3, got n={n}, k={k}")
    rng = Lcg(seed)
    verts = tuple(f"v{i}" for i in range(1, n + 1))
    subsets = list(combinations(range(n), k - 1))
    rng.shuffle(subsets)
    covered: set[tuple[int, ...]] = set()
    edges: list[tuple[int, ...]] = []
    for s in subsets:
        if s in covered:
            continue
        others = [x for x in range(n) if x not in s]
        extra = others[rng.below(len(others))]
        e = tuple(sorted(set(s) | {extra}))
        edges.append(e)
        for sub in combinations(e, k - 1):
            covered.add(sub)
    return Hypergraph.from_labels(verts, [tuple(verts[i] for i in e) for e in edges])


def emit_hg(h: Hypergraph) -> str:
    """Byte-deterministic text form of a hypergraph."""
    k = h.uniformity() or 0
    for lab in h.vertices:
        if not lab or re.search(r"\s|#", lab):
            raise ValueError(f"label {lab!r} cannot appear in the text format")
    lines = [f"hg {k} {len(h.vertices)} {len(h.edges)}"]
    for lab in sorted(h.vertices):
        lines.append(f"v {lab}")
    for j in range(len(h.edges)):
        lines.append("e " + " ".join(h.edge_labels(j)))
    return "\n".join(lines) + "\n"


def parse_hg(text: str) -> tuple[Hypergraph, int]:
    """Parse the text form; returns the hypergraph and the declared arity."""
    rows: list[tuple[int, list[str]]] = []
    for ln, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((ln, body.split()))
    if not rows:
        raise FormatError("empty hypergraph file")
    head_ln, head = rows[0]
    if len(head) != 4 or head[0] != "hg":
        raise FormatError("header must read 'hg <k> <n> <m>'", head_ln)
    try:
        k, n, m = (int(x) for x in head[1:])
    except ValueError:
        raise FormatError("header fields must be integers", head_ln) from None
    if k < 0 or n < 1 or m < 0:
        raise FormatError("header needs k >= 0, n >= 1, m >= 0", head_ln)
    if len(rows) != 1 + n + m:
        raise FormatError(
            f"expected {n} vertex lines and {m} edge lines, found {len(rows) - 1}", head_ln)
    labels: list[str] = []
    for ln, row in rows[1:1 + n]:
        if row[0] != "v" or len(row) != 2:
            raise FormatError("expected 'v <label>'", ln)
        if row[1] in labels:
            raise FormatError(f"duplicate vertex label {row[1]!r}", ln)
        labels.append(row[1])
    known = set(labels)
    edges: list[tuple[str, ...]] = []
    for ln, row in rows[1 + n:]:
        if row[0] != "e" or len(row) < 2:
            raise FormatError("expected 'e <label> ...'", ln)
        members = row[1:]
        if k > 0 and len(members) != k:
            raise FormatError(f"arity mismatch: expected {k} labels, found {len(members)}", ln)
        for lab in members:
            if lab not in known:
                raise FormatError(f"unknown vertex label {lab!r}", ln)
        if len(set(members)) != len(members):
            raise FormatError("repeated label within an edge", ln)
        edges.append(tuple(members))
    return Hypergraph.from_labels(labels, edges), k


def load_hg(path) -> tuple[Hypergraph, int]:
    with open(path, encoding="utf-8") as fh:
        return parse_hg(fh.read())


def format_walk_line(w: Walk) -> str:
    """Certificate line for a walk: labels and 1-based edge names, alternating."""
    parts: list[str] = []
    for j, eid in enumerate(w.edges):
        parts.append(w.anchors[j])
        parts.append(edge_name(eid))
    parts.append(w.anchors[-1])
    return " ".join(parts)


_EDGE_TOKEN = re.compile(r"^e([1-9][0-9]*)$")


def parse_walk_line(h: Hypergraph, line: str, lineno: int | None = None) -> Walk:
    """Parse one certificate line back into a walk over ``h``."""
    toks = line.split()
    if len(toks) < 3 or len(toks) % 2 == 0:
        raise FormatError("certificate line must alternate 'v e v ... v'", lineno)
    anchors: list[str] = []
    edges: list[int] = []
    for pos, tok in enumerate(toks):
        if pos % 2 == 0:
            if tok not in h._index:
                raise FormatError(f"unknown vertex label {tok!r}", lineno)
            anchors.append(tok)
        else:
            mobj = _EDGE_TOKEN.match(tok)
            if mobj is None:
                raise FormatError(f"expected an edge name like e3, found {tok!r}", lineno)
            eid = int(mobj.group(1)) - 1
            if eid >= len(h.edges):
                raise FormatError(f"edge name {tok!r} out of range", lineno)
            edges.append(eid)
    return Walk(tuple(anchors), tuple(edges))


def parse_family(h: Hypergraph, text: str) -> EulerFamily:
    walks = []
    for ln, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            walks.append(parse_walk_line(h, body, ln))
    return EulerFamily(tuple(walks))
