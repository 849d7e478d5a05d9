"""Synthetic graph generators and a small source-description record."""

from __future__ import annotations

import dataclasses
import math
import random
from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from itertools import combinations

from .graph import Graph, load_edge_list


def gnp(n: int, p: float, seed: int | None = None) -> Graph:
    """Erdos-Renyi G(n, p): every vertex pair is an edge independently with
    probability p, reproducibly from the seed.

    Uses geometric skip sampling, so the cost is O(n + m) rather than one
    Bernoulli draw per pair; the edge distribution is the same.
    """
    if n < 1:
        raise ValueError("gnp needs n >= 1")
    if not 0.0 < p < 1.0:
        raise ValueError("gnp needs 0 < p < 1")
    rng = random.Random(seed)
    log_q = math.log1p(-p)
    edges: list[tuple[int, int]] = []
    v, w = 1, -1
    while v < n:
        w += 1 + int(math.log(1.0 - rng.random()) / log_q)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            edges.append((v, w))
    return Graph(n, edges)


def random_tree(n: int, seed: int | None = None) -> Graph:
    """Uniform random labeled tree on n vertices, decoded from a random
    Prufer sequence."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapify(leaves)
    edges: list[tuple[int, int]] = []
    for x in seq:
        leaf = heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heappush(leaves, x)
    u = heappop(leaves)
    v = heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def clique_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("clique needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def star_graph(n: int) -> Graph:
    """Star on n vertices; vertex 0 is the center."""
    if n < 2:
        raise ValueError("star needs n >= 2")
    return Graph(n, [(0, i) for i in range(1, n)])


@dataclass(frozen=True)
class GraphSource:
    """Where a graph comes from: an edge-list file or a named generator.

    Parseable from compact spec strings as used by the CLI and the benchmark
    harness: ``gnp:N:P``, ``tree:N``, ``cycle:N``, ``clique:N``, ``star:N``,
    ``edges:PATH``.
    """

    kind: str
    n: int = 0
    p: float = 0.0
    path: str | None = None
    seed: int | None = None

    def __post_init__(self):
        if self.kind == "gnp":
            if self.n < 1:
                raise ValueError("gnp needs n >= 1")
            if not 0.0 < self.p < 1.0:
                raise ValueError("gnp needs 0 < p < 1")
        elif self.kind == "tree":
            if self.n < 1:
                raise ValueError("tree needs n >= 1")
        elif self.kind == "cycle":
            if self.n < 3:
                raise ValueError("cycle needs n >= 3")
        elif self.kind == "clique":
            if self.n < 1:
                raise ValueError("clique needs n >= 1")
        elif self.kind == "star":
            if self.n < 2:
                raise ValueError("star needs n >= 2")
        elif self.kind == "edges":
            if not self.path:
                raise ValueError("edges source needs a file path")
        else:
            raise ValueError(f"unknown graph source kind {self.kind!r}")

    @classmethod
    def parse(cls, spec: str) -> "GraphSource":
        kind, _, rest = spec.partition(":")
        try:
            if kind == "gnp":
                n_s, p_s, *seed_s = rest.split(":")
                if len(seed_s) > 1:
                    raise ValueError("too many fields")
                seed = int(seed_s[0]) if seed_s else None
                return cls("gnp", n=int(n_s), p=float(p_s), seed=seed)
            if kind == "tree":
                n_s, *seed_s = rest.split(":")
                if len(seed_s) > 1:
                    raise ValueError("too many fields")
                seed = int(seed_s[0]) if seed_s else None
                return cls("tree", n=int(n_s), seed=seed)
            if kind in ("cycle", "clique", "star"):
                return cls(kind, n=int(rest))
            if kind == "edges":
                return cls("edges", path=rest)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"bad graph spec {spec!r}: {exc}") from None
        raise ValueError(f"bad graph spec {spec!r}")

    def with_seed(self, seed: int | None) -> "GraphSource":
        return dataclasses.replace(self, seed=seed)

    @property
    def name(self) -> str:
        if self.kind == "edges":
            return f"edges:{self.path}"
        if self.kind == "gnp":
            return f"gnp:{self.n}:{self.p:g}"
        return f"{self.kind}:{self.n}"

    def build(self) -> Graph:
        if self.kind == "edges":
            return load_edge_list(self.path)
        if self.kind == "gnp":
            return gnp(self.n, self.p, self.seed)
        if self.kind == "tree":
            return random_tree(self.n, self.seed)
        if self.kind == "cycle":
            return cycle_graph(self.n)
        if self.kind == "clique":
            return clique_graph(self.n)
        return star_graph(self.n)


def generate(source: GraphSource) -> Graph:
    """Build a graph from a source description."""
    return source.build()
