"""Shared test helpers: seeded generators and a small-graph sweep."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations, product

from pdzf import Graph


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labeled tree from a random Pruefer sequence."""
    if n <= 2:
        return Graph(n, [(0, 1)] if n == 2 else [])
    import heapq

    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for v in seq:
        deg[v] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        u = heapq.heappop(leaves)
        edges.append((u, v))
        deg[v] -= 1
        if deg[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def random_connected_graph(n: int, rng: random.Random, extra: int | None = None) -> Graph:
    """Random spanning tree plus *extra* random chords (default about n/2)."""
    edges = {(min(u, v), max(u, v)) for u, v in ((i, rng.randrange(i)) for i in range(1, n))}
    if extra is None:
        extra = rng.randint(0, max(1, n // 2))
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))


def random_graph(n: int, rng: random.Random, p: float = 0.4) -> Graph:
    """Erdos-Renyi, possibly disconnected."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_subset(n: int, rng: random.Random, k: int | None = None) -> tuple[int, ...]:
    if k is None:
        k = rng.randint(0, n)
    return tuple(sorted(rng.sample(range(n), k)))


def _refined_classes(n: int, adj: list[int]) -> list[list[int]]:
    # Degree classes refined twice by neighbor-class multisets.
    color = [adj[v].bit_count() for v in range(n)]
    for _ in range(2):
        sig = [
            (color[v], tuple(sorted(color[u] for u in range(n) if adj[v] >> u & 1)))
            for v in range(n)
        ]
        order = {s: i for i, s in enumerate(sorted(set(sig)))}
        color = [order[s] for s in sig]
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(color[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def _canon(n: int, edges: tuple[tuple[int, int], ...]) -> tuple[int, int]:
    """Canonical integer form: minimum edge bitmap over color-preserving maps."""
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    idx = {}
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            idx[u, v] = k
            k += 1
    classes = _refined_classes(n, adj)
    starts = []
    pos = 0
    for cls in classes:
        starts.append(pos)
        pos += len(cls)
    best = None
    for parts in product(*(permutations(cls) for cls in classes)):
        pi = [0] * n
        for start, part in zip(starts, parts):
            for offset, old in enumerate(part):
                pi[old] = start + offset
        code = 0
        for u, v in edges:
            a, b = pi[u], pi[v]
            code |= 1 << idx[min(a, b), max(a, b)]
        if best is None or code < best:
            best = code
    return n, best


@lru_cache(maxsize=None)
def graph_sweep(max_n: int) -> tuple[Graph, ...]:
    """All connected graphs with 1..max_n vertices, one per isomorphism class.

    Built by extending every (n-1)-vertex class representative with one new
    vertex over all neighborhoods, deduplicating by canonical form; the
    intermediate levels keep disconnected graphs so nothing is missed.
    """
    levels: dict[int, dict[tuple[int, int], tuple[tuple[int, int], ...]]] = {
        1: {_canon(1, ()): ()}
    }
    for n in range(2, max_n + 1):
        level: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
        for edges in levels[n - 1].values():
            for nbhd_size in range(n):
                for nbhd in combinations(range(n - 1), nbhd_size):
                    grown = edges + tuple((u, n - 1) for u in nbhd)
                    key = _canon(n, grown)
                    if key not in level:
                        level[key] = grown
        levels[n] = level
    out = []
    for n in range(1, max_n + 1):
        for edges in levels[n].values():
            g = Graph(n, edges)
            if g.is_connected():
                out.append(g)
    return tuple(out)
