"""Core graph and vertex-set types.

Vertices are dense 0-based integers.  Adjacency and vertex sets are stored
as int bitmasks, which keeps the propagation and covering loops tight; the
public surface deals in :class:`VertexSet` objects and plain ints.
"""

from __future__ import annotations

from typing import IO, Iterable, Iterator

from .errors import (
    DuplicateEdgeError,
    EdgeCountMismatchError,
    GraphError,
    MalformedEdgeError,
    MalformedHeaderError,
    SelfLoopError,
    VertexOutOfRangeError,
)

__all__ = ["VertexSet", "Graph", "IndexMap", "from_edge_list", "to_edge_list"]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of *mask* in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """An immutable subset of the vertex range ``[0, n)``.

    Supports set algebra (``|``, ``&``, ``-``, :meth:`complement`), ``len``,
    membership tests and iteration in increasing id order.  Operations are
    only defined between sets over the same ambient ``n``.
    """

    __slots__ = ("n", "mask")

    def __init__(self, n: int, members: Iterable[int] = ()) -> None:
        if n < 0:
            raise GraphError("ambient size must be nonnegative")
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} out of range [0, {n})")
            mask |= 1 << v
        self.n = n
        self.mask = mask

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "VertexSet":
        if mask < 0 or mask >> n:
            raise GraphError(f"mask {mask:#x} does not fit in {n} bits")
        obj = cls.__new__(cls)
        obj.n = n
        obj.mask = mask
        return obj

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls.from_mask(n, (1 << n) - 1)

    def __reduce__(self):
        return (VertexSet.from_mask, (self.n, self.mask))

    def _check(self, other: "VertexSet") -> None:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other.n != self.n:
            raise GraphError(f"mixed ambient sizes {self.n} and {other.n}")

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and self.mask >> v & 1 == 1

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet.from_mask(self.n, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet.from_mask(self.n, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet.from_mask(self.n, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet.from_mask(self.n, ~self.mask & (1 << self.n) - 1)

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {{{', '.join(map(str, self))}}})"


class IndexMap:
    """Correspondence between original ids and compacted subgraph ids."""

    __slots__ = ("n_old", "to_old", "_to_new")

    def __init__(self, n_old: int, to_old: tuple[int, ...]) -> None:
        self.n_old = n_old
        self.to_old = to_old
        self._to_new = {old: new for new, old in enumerate(to_old)}

    def new_of(self, old: int) -> int:
        try:
            return self._to_new[old]
        except KeyError:
            raise GraphError(f"vertex {old} is not in the subgraph") from None

    def old_of(self, new: int) -> int:
        if not 0 <= new < len(self.to_old):
            raise GraphError(f"vertex {new} is not a subgraph id")
        return self.to_old[new]

    def restrict(self, s: VertexSet) -> VertexSet:
        """Map an old-id set to new ids, dropping vertices not kept."""
        return VertexSet(len(self.to_old), (self._to_new[v] for v in s if v in self._to_new))

    def lift(self, s: VertexSet) -> VertexSet:
        """Map a new-id set back to the original id space."""
        return VertexSet(self.n_old, (self.to_old[v] for v in s))

    def __repr__(self) -> str:
        return f"IndexMap({self.n_old}, {self.to_old!r})"


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbor bitmask of ``v``.  Instances are immutable;
    every editing operation returns a new graph.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside vertex range [0, {n})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise GraphError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def _from_masks(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        obj = cls.__new__(cls)
        obj.n = n
        obj.adj = adj
        return obj

    def __reduce__(self):
        return (Graph._from_masks, (self.n, self.adj))

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0, {self.n})")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        if self.n == 0:
            raise GraphError("the empty graph has no maximum degree")
        return max(a.bit_count() for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return self.adj[u] >> v & 1 == 1

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet.from_mask(self.n, self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            out.extend((u, v) for v in bits(rest))
        return out

    def vertex_set(self, members: Iterable[int] = ()) -> VertexSet:
        return VertexSet(self.n, members)

    def full_set(self) -> VertexSet:
        return VertexSet.full(self.n)

    def _coerce(self, s: VertexSet | Iterable[int]) -> VertexSet:
        if isinstance(s, VertexSet):
            if s.n != self.n:
                raise GraphError(f"vertex set over {s.n} used with graph on {self.n}")
            return s
        return VertexSet(self.n, s)

    def closed_neighborhood(self, s: VertexSet | Iterable[int]) -> VertexSet:
        s = self._coerce(s)
        mask = s.mask
        for v in bits(s.mask):
            mask |= self.adj[v]
        return VertexSet.from_mask(self.n, mask)

    def components(self) -> list[VertexSet]:
        """Connected components, ordered by smallest member."""
        seen = 0
        out = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = 1 << v
            while frontier:
                grown = comp
                for u in bits(frontier):
                    grown |= self.adj[u]
                frontier = grown & ~comp
                comp = grown
            seen |= comp
            out.append(VertexSet.from_mask(self.n, comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def induced_subgraph(self, keep: VertexSet | Iterable[int]) -> tuple["Graph", IndexMap]:
        """Induced subgraph on *keep*, with ids compacted in increasing order."""
        keep = self._coerce(keep)
        to_old = keep.members()
        index = IndexMap(self.n, to_old)
        adj = []
        for old in to_old:
            inside = self.adj[old] & keep.mask
            row = 0
            for w in bits(inside):
                row |= 1 << (keep.mask & ((1 << w) - 1)).bit_count()
            adj.append(row)
        return Graph._from_masks(len(to_old), tuple(adj)), index

    def delete_vertex(self, v: int) -> "Graph":
        """The graph minus *v*, ids above *v* shifted down by one."""
        self._check_vertex(v)
        sub, _ = self.induced_subgraph(VertexSet.from_mask(self.n, ((1 << self.n) - 1) ^ (1 << v)))
        return sub

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(source: str | bytes | IO) -> Graph:
    """Parse the textual edge-list format.

    Lines starting with ``#`` and blank lines are ignored.  The first data
    line is the header ``n m``; exactly *m* data lines ``u v`` follow, each
    an undirected edge with ``0 <= u, v < n``, no self-loops and no
    duplicates in either orientation.
    """
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedHeaderError(f"input is not UTF-8 ({exc.reason})", 1) from None
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last_line = 0
    for line_no, raw in enumerate(source.splitlines(), 1):
        last_line = line_no
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        tokens = text.split()
        if header is None:
            if len(tokens) != 2:
                raise MalformedHeaderError(f"expected header 'n m', got {text!r}", line_no)
            try:
                n, m = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise MalformedHeaderError(f"non-integer header {text!r}", line_no) from None
            if n < 0 or m < 0:
                raise MalformedHeaderError(f"negative count in header {text!r}", line_no)
            header = (n, m)
            continue
        n, m = header
        if len(edges) == m:
            raise EdgeCountMismatchError(f"more than the declared {m} edges", line_no)
        if len(tokens) != 2:
            raise MalformedEdgeError(f"expected edge 'u v', got {text!r}", line_no)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise MalformedEdgeError(f"non-integer edge {text!r}", line_no) from None
        for w in (u, v):
            if not 0 <= w < n:
                raise VertexOutOfRangeError(f"vertex {w} out of range [0, {n})", line_no)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", line_no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})", line_no)
        seen.add(key)
        edges.append((u, v))
    if header is None:
        raise MalformedHeaderError("missing 'n m' header", max(last_line, 1))
    if len(edges) != header[1]:
        raise EdgeCountMismatchError(
            f"declared {header[1]} edges, found {len(edges)}", max(last_line, 1)
        )
    return Graph(header[0], edges)


def to_edge_list(graph: Graph) -> str:
    """Serialize to the canonical edge-list form (header, sorted 'u v' lines)."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"
