"""Threshold assignment policies.

A threshold assignment is a plain list of nonnegative ints, one per vertex:
``t[v]`` is how many already-active neighbors vertex ``v`` needs before it
activates (0 means it activates on its own).
"""

from __future__ import annotations

import random
from pathlib import Path
from typing import IO, Sequence

from .graph import Graph


def check_thresholds(g: Graph, t: Sequence[int]) -> None:
    if len(t) != g.n:
        raise ValueError(f"expected {g.n} thresholds, got {len(t)}")
    for v, tv in enumerate(t):
        if tv < 0:
            raise ValueError(f"threshold of vertex {v} is negative")


def constant_capped(g: Graph, t: int) -> list[int]:
    """t(v) = min(t, d(v)) for a constant t >= 1.

    Isolated vertices get 0 under this policy (min(t, 0) = 0), i.e. they
    self-activate; real social networks have none.
    """
    if t < 1:
        raise ValueError("constant-capped policy needs t >= 1")
    return [min(t, len(nbrs)) for nbrs in g.adjacency]


def random_in_degree(g: Graph, seed: int | None = None) -> list[int]:
    """Uniform random t(v) in [1, d(v)] per vertex (0 for isolated vertices)."""
    rng = random.Random(seed)
    return [rng.randint(1, len(nbrs)) if nbrs else 0 for nbrs in g.adjacency]


def degree_thresholds(g: Graph) -> list[int]:
    """t(v) = d(v); under this policy any target set is a vertex cover."""
    return g.degrees


def load_thresholds(g: Graph, source: str | Path | bytes | IO) -> list[int]:
    """Read explicit "vertex_id threshold" lines, ids in the graph's original
    id space.  Every vertex must be covered; missing ones are listed in the
    error."""
    if hasattr(source, "read"):
        data = source.read()
        text = data.decode() if isinstance(data, bytes) else data
    elif isinstance(source, bytes):
        text = source.decode()
    else:
        text = Path(source).read_text()

    to_internal = (
        {orig: v for v, orig in enumerate(g.labels)}
        if g.labels is not None
        else {v: v for v in range(g.n)}
    )
    values: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'vertex_id threshold', got {raw!r}")
        try:
            orig = int(parts[0])
            tv = int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: malformed integer token in {raw!r}") from None
        if orig not in to_internal:
            raise ValueError(f"line {lineno}: unknown vertex id {orig}")
        if tv < 0:
            raise ValueError(f"line {lineno}: negative threshold for vertex {orig}")
        values[to_internal[orig]] = tv
    missing = [g.original_id(v) for v in range(g.n) if v not in values]
    if missing:
        raise ValueError(f"threshold file misses vertices: {missing}")
    return [values[v] for v in range(g.n)]


def assign_thresholds(g: Graph, policy: str, seed: int | None = None) -> list[int]:
    """Dispatch on a policy string: ``const:T``, ``random``, ``degree``,
    ``file:PATH``."""
    kind, _, arg = policy.partition(":")
    if kind == "const":
        try:
            t = int(arg)
        except ValueError:
            raise ValueError(f"bad constant-capped policy {policy!r}") from None
        return constant_capped(g, t)
    if kind == "random":
        return random_in_degree(g, seed)
    if kind == "degree":
        return degree_thresholds(g)
    if kind == "file":
        if not arg:
            raise ValueError("file policy needs a path, e.g. file:thresholds.txt")
        return load_thresholds(g, arg)
    raise ValueError(f"unknown threshold policy {policy!r}")
