"""Deterministic graph-family generators and small-graph enumeration.

Canonical vertex numbering per family:

* ``path``/``cycle``: vertices consecutive along the path/cycle.
* ``complete_bipartite``/``complete_multipartite``: parts contiguous, in
  the given order.
* ``star``: center is vertex 0.
* ``join_k1_cliques``: the universal vertex is 0, cliques contiguous after.
* ``balloon``: hub is 0, then k blocks of 5 (each a 5-cycle); the hub is
  joined to the first vertex of each block.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .graph_core import Graph, GraphError, build_graph, is_connected, iter_bits

FAMILY_KINDS = (
    "path", "cycle", "complete", "complete_bipartite", "complete_multipartite",
    "star", "random_tree", "join_k1_cliques", "balloon",
)

# Flat-text aliases accepted by the CLI syntax, e.g. "kpartite:3,2,2".
_TEXT_ALIASES = {
    "path": "path",
    "cycle": "cycle",
    "complete": "complete",
    "bipartite": "complete_bipartite",
    "kpartite": "complete_multipartite",
    "star": "star",
    "tree": "random_tree",
    "join": "join_k1_cliques",
    "balloon": "balloon",
}

ENUMERATION_CAP = 7


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]
    seed: Optional[int] = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise GraphError(f"unknown family kind {self.kind!r}")
        _validate_params(self.kind, self.params, self.seed)

    def text(self) -> str:
        rev = {v: k for k, v in _TEXT_ALIASES.items()}
        base = f"{rev[self.kind]}:{','.join(str(p) for p in self.params)}"
        if self.seed is not None:
            base += f":seed={self.seed}"
        return base


def _validate_params(kind: str, params: tuple[int, ...], seed) -> None:
    def need(cond: bool, what: str):
        if not cond:
            raise GraphError(f"family {kind}: {what} (params={list(params)})")

    if any(p < 1 for p in params):
        raise GraphError(f"family {kind}: all size parameters must be >= 1")
    if kind in ("path", "complete", "star"):
        need(len(params) == 1, "expected one size parameter")
    elif kind == "cycle":
        need(len(params) == 1, "expected one size parameter")
        need(params[0] >= 3, "cycle length must be >= 3")
    elif kind == "complete_bipartite":
        need(len(params) == 2, "expected two part sizes")
    elif kind == "complete_multipartite":
        need(len(params) >= 2, "expected at least two part sizes")
    elif kind == "random_tree":
        need(len(params) == 1, "expected one size parameter")
        need(params[0] >= 2, "tree order must be >= 2")
    elif kind == "join_k1_cliques":
        need(len(params) >= 1, "expected at least one clique order")
    elif kind == "balloon":
        need(len(params) == 1, "expected the number of cycle blocks")
        need(params[0] >= 2, "balloon parameter k must be >= 2")
    if seed is not None and kind != "random_tree":
        raise GraphError(f"family {kind}: seed only applies to random trees")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse the flat CLI syntax, e.g. ``cycle:8`` or ``tree:9:seed=7``."""
    parts = text.strip().split(":")
    if not parts or parts[0] not in _TEXT_ALIASES:
        known = ", ".join(sorted(_TEXT_ALIASES))
        raise GraphError(f"unknown family {text!r}; expected one of: {known}")
    kind = _TEXT_ALIASES[parts[0]]
    if len(parts) < 2 or not parts[1]:
        raise GraphError(f"family {text!r} is missing size parameters")
    try:
        params = tuple(int(p) for p in parts[1].split(","))
    except ValueError:
        raise GraphError(f"non-integer size parameter in {text!r}") from None
    seed = None
    if len(parts) >= 3:
        if len(parts) > 3 or not parts[2].startswith("seed="):
            raise GraphError(f"bad trailing clause in {text!r}; expected seed=<int>")
        try:
            seed = int(parts[2][len("seed="):])
        except ValueError:
            raise GraphError(f"non-integer seed in {text!r}") from None
    return FamilySpec(kind, params, seed)


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by ``spec``."""
    p = spec.params
    if spec.kind == "path":
        n = p[0]
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    if spec.kind == "cycle":
        n = p[0]
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if spec.kind == "complete":
        n = p[0]
        return build_graph(n, itertools.combinations(range(n), 2))
    if spec.kind == "complete_bipartite":
        return generate(FamilySpec("complete_multipartite", p))
    if spec.kind == "complete_multipartite":
        n = sum(p)
        part = []
        for i, size in enumerate(p):
            part.extend([i] * size)
        edges = [(u, v) for u, v in itertools.combinations(range(n), 2)
                 if part[u] != part[v]]
        return build_graph(n, edges)
    if spec.kind == "star":
        k = p[0]
        return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])
    if spec.kind == "random_tree":
        return random_tree(p[0], spec.seed if spec.seed is not None else 0)
    if spec.kind == "join_k1_cliques":
        n = 1 + sum(p)
        edges = [(0, v) for v in range(1, n)]
        start = 1
        for size in p:
            edges.extend(itertools.combinations(range(start, start + size), 2))
            start += size
        return build_graph(n, edges)
    if spec.kind == "balloon":
        k = p[0]
        n = 1 + 5 * k
        edges = []
        for b in range(k):
            base = 1 + 5 * b
            edges.extend((base + i, base + (i + 1) % 5) for i in range(5))
            edges.append((0, base))
        return build_graph(n, edges)
    raise GraphError(f"unknown family kind {spec.kind!r}")


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via sequence decoding; deterministic per seed.

    Decodes a random length n-2 sequence over [n] through the classical
    bijection between such sequences and labeled trees.
    """
    if n < 2:
        raise GraphError(f"random tree needs n >= 2, got {n}")
    if n == 2:
        return build_graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    count = [0] * n
    for x in seq:
        count[x] += 1
    edges = []
    # Repeatedly attach the smallest current leaf to the next code symbol.
    leaves = [v for v in range(n) if count[v] == 0]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        count[x] -= 1
        if count[x] == 0:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return build_graph(n, edges)


def _refined_classes(g: Graph) -> list[list[int]]:
    """Partition vertices into isomorphism-invariant classes (1-dim refinement)."""
    color = [g.degree(v) for v in range(g.n)]
    while True:
        sig = [(color[v], tuple(sorted(color[w] for w in iter_bits(g.adj[v]))))
               for v in range(g.n)]
        order = sorted(set(sig))
        new = [order.index(s) for s in sig]
        if new == color:
            break
        color = new
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(color[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def canonical_key(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key: minimum adjacency bitstring over all
    class-respecting vertex orders.

    Classes come from degree-based refinement, so only permutations within
    refinement classes are tried; equal keys <=> isomorphic graphs.
    """
    n = g.n
    classes = _refined_classes(g)
    best = None
    pair_index = {}
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            pair_index[(i, j)] = idx
            idx += 1
    edges = g.edges()
    for orders in itertools.product(*(itertools.permutations(c) for c in classes)):
        perm_old = [v for group in orders for v in group]
        pos = [0] * n
        for new, old in enumerate(perm_old):
            pos[old] = new
        key = 0
        for u, v in edges:
            a, b = pos[u], pos[v]
            if a > b:
                a, b = b, a
            key |= 1 << pair_index[(a, b)]
        if best is None or key < best:
            best = key
    return (n, best if best is not None else 0)


def _labeled_connected(n: int) -> Iterator[Graph]:
    if n == 1:
        yield Graph(1, (0,))
        return
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        g = Graph(n, tuple(rows))
        if is_connected(g):
            yield g


def _dedup_connected(n_max: int) -> Iterator[Graph]:
    # Orderly extension: every connected graph on n >= 2 vertices arises from
    # a connected graph on n-1 vertices by adding one vertex with a nonempty
    # neighborhood (delete any non-cut vertex to see this).
    level = [Graph(1, (0,))]
    yield level[0]
    for n in range(2, n_max + 1):
        seen = set()
        nxt = []
        for g in level:
            for nb in range(1, 1 << (n - 1)):
                rows = [g.adj[u] | ((nb >> u & 1) << (n - 1)) for u in range(n - 1)]
                rows.append(nb)
                cand = Graph(n, tuple(rows))
                key = canonical_key(cand)
                if key not in seen:
                    seen.add(key)
                    nxt.append(cand)
                    yield cand
        level = nxt


def enumerate_connected(n_max: int, dedup: bool = False) -> Iterator[Graph]:
    """Yield every simple connected graph on 1..n_max vertices exactly once.

    Labeled enumeration by default; with ``dedup=True`` one representative
    per isomorphism class is produced instead.  Hard-capped at
    ``n_max <= 7``.
    """
    if n_max > ENUMERATION_CAP:
        raise GraphError(
            f"enumeration capped at n <= {ENUMERATION_CAP}, got {n_max}")
    if n_max < 1:
        return
    if dedup:
        yield from _dedup_connected(n_max)
    else:
        for n in range(1, n_max + 1):
            yield from _labeled_connected(n)
