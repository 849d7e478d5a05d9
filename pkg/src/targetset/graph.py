"""Simple undirected graphs with contiguous integer vertex ids.

The whole library works on :class:`Graph`: an immutable simple undirected
graph whose vertices are exactly ``0 .. n-1``, stored as sorted adjacency
lists.  Graphs loaded from edge-list files keep the original external ids in
``labels`` so results can be reported in the caller's id space.
"""

from __future__ import annotations

from pathlib import Path
from typing import IO, Iterable, Iterator


class Graph:
    """Immutable simple undirected graph.

    The constructor normalizes its input: self-loops are dropped, duplicate
    edges (in either orientation) are kept once, and every adjacency list is
    sorted.  Instances are safe to share across threads; the adjacency lists
    are exposed directly for speed and must not be mutated.
    """

    __slots__ = ("n", "m", "_adj", "labels")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Iterable[int] | None = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[int] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                continue
            key = u * n + v if u < v else v * n + u
            if key in seen:
                continue
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        self.n = n
        self.m = len(seen)
        self._adj = adj
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels length must equal the vertex count")
        assert self._invariants_hold()

    def _invariants_hold(self) -> bool:
        # Sorted-unique loop-free lists plus the degree sum; symmetry is
        # structural (both endpoints are appended from one canonical edge set).
        total = 0
        for v, nbrs in enumerate(self._adj):
            total += len(nbrs)
            prev = -1
            for u in nbrs:
                if u == v or u <= prev:
                    return False
                prev = u
        return total == 2 * self.m

    @property
    def adjacency(self) -> list[list[int]]:
        """Per-vertex sorted neighbor lists (read-only by convention)."""
        return self._adj

    def neighbors(self, v: int) -> list[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def degrees(self) -> list[int]:
        return [len(lst) for lst in self._adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each undirected edge once, as (u, v) with u < v."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def original_id(self, v: int):
        return self.labels[v] if self.labels is not None else v

    def original_ids(self, vertices: Iterable[int]) -> list:
        return [self.original_id(v) for v in vertices]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    adj = g._adj
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        comp.sort()
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def _read_text(source) -> str:
    if hasattr(source, "read"):
        data = source.read()
        return data.decode() if isinstance(data, bytes) else data
    if isinstance(source, bytes):
        return source.decode()
    return Path(source).read_text()


def load_edge_list(source: str | Path | bytes | IO) -> Graph:
    """Load a graph from edge-list text (a path, bytes, or an open stream).

    Format: one edge per line as two whitespace-separated integer tokens.
    Lines starting with ``#`` or ``%`` are comments.  Self-loops are dropped,
    duplicates (including reversed repeats) are merged, and arbitrary external
    ids are compacted to ``0..n-1`` in order of first appearance; the original
    ids are kept in ``Graph.labels``.

    Raises:
        ValueError: on a malformed line (message carries the line number) or
            when the input contains no vertices at all.
    """
    text = _read_text(source)
    ids: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two integer tokens, got {raw!r}")
        try:
            a = int(parts[0])
            b = int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: malformed integer token in {raw!r}") from None
        if a not in ids:
            ids[a] = len(ids)
        if b not in ids:
            ids[b] = len(ids)
        edges.append((ids[a], ids[b]))
    if not ids:
        raise ValueError("empty graph")
    return Graph(len(ids), edges, labels=tuple(ids))


def write_edge_list(g: Graph, target: str | Path | IO) -> None:
    """Write the graph as edge-list text, one "u v" line per edge.

    Vertices are written in the graph's reporting id space, so a loaded
    graph round-trips through its original ids.
    """
    lines = [f"{g.original_id(u)} {g.original_id(v)}" for u, v in g.edges()]
    text = "\n".join(lines) + ("\n" if lines else "")
    if hasattr(target, "write"):
        target.write(text)
    else:
        Path(target).write_text(text)
