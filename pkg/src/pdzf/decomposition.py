"""Tree splitting, leaf classification, and gluing compositions.

Splitting a tree at a vertex v of degree at least two turns each branch
into a smaller tree in which v is a leaf.  Solving every branch three
ways (v required, unconstrained, v deleted) classifies how v behaves
there, and the classification alone decides the power domination number
of the whole tree.  The branch solves are independent, so they can be
spread over worker processes.

The composition rules go the other way: they assemble a value and a
witness for a large graph from restricted solves of its pieces, checking
the hypotheses that make the assembly sound and verifying the assembled
witness by propagation.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .constructions import apex_over
from .errors import BoundHypothesisError, GraphError, NotATreeError
from .graph import Graph, IndexMap, VertexSet, bits
from .propagation import (
    DEFAULT_TERMINAL_CAP,
    enumerate_terminal_sets,
    is_power_dominating_set,
    is_zero_forcing_set,
)
from .solver import (
    DEFAULT_CG_GUARD,
    SolveResult,
    _lift_deleted,
    restricted_pd_number,
    restricted_zf_number,
)

__all__ = [
    "TreePart",
    "TreeSplit",
    "LeafClassification",
    "LeafSupports",
    "CompositionBound",
    "PendantComposition",
    "ApexTerminalReport",
    "centroid",
    "tree_split",
    "tree_pd_parallel",
    "leaf_classify",
    "mandatory_vertices",
    "compose_boundary_pd",
    "compose_pendant_zf",
    "check_apex_terminal",
]


@dataclass(frozen=True)
class TreePart:
    """One branch of a split tree: a component of T - v together with v.

    ``anchored``, ``free`` and ``deleted`` are the minimum power
    dominating sets of the branch with the anchor required, with no
    restriction, and with the anchor removed.  Witnesses use branch ids;
    ``index`` maps them back to the original tree.
    """

    graph: Graph
    index: IndexMap
    anchor: int
    anchored: SolveResult
    free: SolveResult
    deleted: SolveResult

    @property
    def role(self) -> str:
        """"costly" if requiring the anchor raises the branch minimum,
        "idle" if the anchor can join a minimum solution without acting,
        "active" if it joins for free but must dominate or force."""
        if self.anchored.value != self.free.value:
            return "costly"
        if self.anchored.value == self.deleted.value + 1:
            return "idle"
        return "active"


@dataclass(frozen=True)
class TreeSplit:
    """A tree split at ``vertex``, with every branch solved three ways."""

    tree: Graph
    vertex: int
    parts: tuple[TreePart, ...]

    @property
    def active(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.parts) if p.role == "active")

    @property
    def idle(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.parts) if p.role == "idle")

    @property
    def costly(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.parts) if p.role == "costly")

    @property
    def base_value(self) -> int:
        """Sum of the anchored branch minima, minus one per branch."""
        return sum(p.anchored.value for p in self.parts) - len(self.parts)

    @property
    def value(self) -> int:
        """Power domination number of the tree implied by the part roles.

        The split vertex earns its place exactly when two branches need
        it to act, or no branch gets cheaper without it.
        """
        g = self.base_value
        return g + 1 if len(self.active) >= 2 or not self.costly else g

    def result(self) -> SolveResult:
        """Assemble and verify a witness of size ``value`` for the tree.

        When the split vertex is worth a slot, the anchored witnesses are
        merged as they are.  Otherwise each costly branch contributes an
        unrestricted witness, each idle branch a witness of the branch
        minus the anchor, and at most one active branch its anchored
        witness with the anchor dropped; the costly branches color the
        split vertex, which then serves the rest.
        """
        mask = 0
        cuts = 0
        nodes = 0
        for part in self.parts:
            for res in (part.anchored, part.free, part.deleted):
                cuts += res.cuts_added
                nodes += res.nodes
        if len(self.active) >= 2 or not self.costly:
            for part in self.parts:
                mask |= part.index.lift(part.anchored.witness).mask
        else:
            for part in self.parts:
                role = part.role
                if role == "costly":
                    chosen = part.free.witness
                    assert part.anchor not in chosen
                elif role == "idle":
                    chosen = _lift_deleted(part.deleted.witness, part.anchor)
                else:
                    chosen = part.anchored.witness - part.graph.vertex_set((part.anchor,))
                mask |= part.index.lift(chosen).mask
        witness = VertexSet.from_mask(self.tree.n, mask)
        assert len(witness) == self.value
        assert is_power_dominating_set(self.tree, witness)
        return SolveResult(self.value, witness, "reduction", cuts, nodes)


def centroid(tree: Graph) -> int:
    """A vertex minimizing the largest branch of the tree, lowest id first."""
    if not tree.is_tree():
        raise NotATreeError("centroid needs a tree")
    best, best_weight = 0, tree.n
    for v in tree.vertices():
        weight = max((len(c) for c in tree.delete_vertex(v).components()), default=0)
        if weight < best_weight:
            best, best_weight = v, weight
    return best


def _solve_task(task: tuple[Graph, tuple[int, ...], int]) -> SolveResult:
    # Branches are leafy trees, where minimum-fort cuts are far stronger.
    graph, members, guard = task
    return restricted_pd_number(graph, graph.vertex_set(members), min_forts=True, guard=guard)


def tree_split(
    tree: Graph,
    vertex: int | None = None,
    *,
    jobs: int = 1,
    guard: int = DEFAULT_CG_GUARD,
) -> TreeSplit:
    """Split a tree at a vertex and solve every branch three ways.

    The split vertex must have degree at least two; by default it is the
    centroid.  Each branch yields three independent subproblems, and
    ``jobs`` > 1 spreads them over that many worker processes.
    """
    if not tree.is_tree():
        raise NotATreeError("tree splitting needs a tree")
    if jobs < 1:
        raise ValueError(f"jobs must be positive, got {jobs}")
    if vertex is None:
        vertex = centroid(tree)
    else:
        tree._check_vertex(vertex)
    if tree.degree(vertex) < 2:
        raise GraphError("the split vertex must have degree at least 2")
    branches = []
    tasks: list[tuple[Graph, tuple[int, ...], int]] = []
    vbit = 1 << vertex
    for u in tree.neighbors(vertex):
        seen = frontier = 1 << u
        while frontier:
            grow = 0
            for w in bits(frontier):
                grow |= tree.adj[w]
            frontier = grow & ~(seen | vbit)
            seen |= frontier
        sub, index = tree.induced_subgraph(VertexSet.from_mask(tree.n, seen | vbit))
        anchor = index.new_of(vertex)
        branches.append((sub, index, anchor))
        tasks.append((sub, (anchor,), guard))
        tasks.append((sub, (), guard))
        tasks.append((sub.delete_vertex(anchor), (), guard))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_solve_task, tasks))
    else:
        results = [_solve_task(task) for task in tasks]
    parts = tuple(
        TreePart(sub, index, anchor, results[3 * i], results[3 * i + 1], results[3 * i + 2])
        for i, (sub, index, anchor) in enumerate(branches)
    )
    return TreeSplit(tree=tree, vertex=vertex, parts=parts)


def tree_pd_parallel(
    tree: Graph,
    vertex: int | None = None,
    *,
    jobs: int = 1,
    guard: int = DEFAULT_CG_GUARD,
) -> SolveResult:
    """Power domination number of a tree through a split at one vertex.

    Trees too small to split at a degree-two vertex are solved directly.
    """
    if not tree.is_tree():
        raise NotATreeError("the parallel tree algorithm needs a tree")
    if tree.n <= 2:
        return restricted_pd_number(tree, None, guard=guard)
    return tree_split(tree, vertex, jobs=jobs, guard=guard).result()


@dataclass(frozen=True)
class LeafClassification:
    """Whether a leaf can join a minimum solution without ever acting.

    An idle leaf costs one on top of the graph without it, and the
    witness then has the form (minimum set of G - u) + u.  A non-idle
    leaf joins at no cost over the deleted graph, but must dominate or
    force in every minimum solution through it.
    """

    vertex: int
    anchored: SolveResult
    deleted: SolveResult
    idle: bool
    witness: VertexSet


def leaf_classify(
    graph: Graph, u: int, *, guard: int = DEFAULT_CG_GUARD
) -> LeafClassification:
    """Classify the leaf u by comparing the anchored and deleted minima."""
    graph._check_vertex(u)
    if graph.degree(u) != 1:
        raise GraphError(f"vertex {u} has degree {graph.degree(u)}, not a leaf")
    anchored = restricted_pd_number(graph, graph.vertex_set((u,)), guard=guard)
    deleted = restricted_pd_number(graph.delete_vertex(u), None, guard=guard)
    assert anchored.value - deleted.value in (0, 1)
    idle = anchored.value == deleted.value + 1
    if idle:
        witness = _lift_deleted(deleted.witness, u) | graph.vertex_set((u,))
        assert len(witness) == anchored.value
        assert is_power_dominating_set(graph, witness)
    else:
        witness = anchored.witness
    return LeafClassification(
        vertex=u, anchored=anchored, deleted=deleted, idle=idle, witness=witness
    )


@dataclass(frozen=True)
class LeafSupports:
    """Support vertices pinned into minimum power dominating sets.

    Every minimum power dominating set contains all of ``mandatory`` (the
    vertices with three or more leaves) and, for each ``either_or`` entry
    (v, leaves), at least one vertex of {v} | leaves; some minimum set
    contains every two-leaf support v itself.
    """

    mandatory: VertexSet
    either_or: tuple[tuple[int, tuple[int, ...]], ...]


def mandatory_vertices(graph: Graph) -> LeafSupports:
    """Vertices forced into minimum power dominating sets by their leaves."""
    mandatory = []
    either_or = []
    for v in graph.vertices():
        leaves = tuple(u for u in graph.neighbors(v) if graph.degree(u) == 1)
        if len(leaves) >= 3:
            mandatory.append(v)
        elif len(leaves) == 2:
            either_or.append((v, leaves))
    return LeafSupports(
        mandatory=graph.vertex_set(mandatory), either_or=tuple(either_or)
    )


@dataclass(frozen=True)
class CompositionBound:
    """An upper bound assembled from restricted solves of the pieces."""

    value: int
    witness: VertexSet
    parts: tuple[SolveResult, ...]


def compose_boundary_pd(
    graph: Graph,
    v1: VertexSet,
    w1: VertexSet,
    w2: VertexSet,
    *,
    guard: int = DEFAULT_CG_GUARD,
) -> CompositionBound:
    """Upper bound on the minimum power dominating set through W1 | W2.

    V1 and its complement split the graph in two; the border consists of
    the vertices with a closed neighbor on the other side.  When W1 | W2
    dominates the whole border, each side can be solved subject to its
    own W and the union of the side witnesses power dominates the whole
    graph, so the restricted minimum is at most the sum of the side
    minima.
    """
    v1 = graph._coerce(v1)
    w1 = graph._coerce(w1)
    w2 = graph._coerce(w2)
    v2 = v1.complement()
    if not v1 or not v2:
        raise GraphError("both sides of the partition must be nonempty")
    if not w1.issubset(v1) or not w2.issubset(v2):
        raise GraphError("each restriction must live on its own side")
    border = (graph.closed_neighborhood(v2) & v1) | (graph.closed_neighborhood(v1) & v2)
    if not border.issubset(graph.closed_neighborhood(w1 | w2)):
        raise BoundHypothesisError("the restrictions must dominate every border vertex")
    g1, i1 = graph.induced_subgraph(v1)
    g2, i2 = graph.induced_subgraph(v2)
    r1 = restricted_pd_number(g1, i1.restrict(w1), guard=guard)
    r2 = restricted_pd_number(g2, i2.restrict(w2), guard=guard)
    witness = i1.lift(r1.witness) | i2.lift(r2.witness)
    assert (w1 | w2).issubset(witness)
    assert is_power_dominating_set(graph, witness)
    return CompositionBound(value=r1.value + r2.value, witness=witness, parts=(r1, r2))


def _require_minimum_forcing_set(graph: Graph, x: VertexSet, guard: int) -> SolveResult:
    if not is_zero_forcing_set(graph, x):
        raise BoundHypothesisError("the anchor set does not force the graph")
    base = restricted_zf_number(graph, None, guard=guard)
    if len(x) != base.value:
        raise BoundHypothesisError(
            f"the anchor set has size {len(x)}, the forcing number is {base.value}"
        )
    return base


@dataclass(frozen=True)
class PendantComposition:
    """A glued graph together with its exact restricted forcing result.

    ``placements[i][j]`` is the glued id of vertex j of branch i; base
    graph ids are unchanged.  ``result`` is exact for the glued graph
    subject to the anchor set.
    """

    graph: Graph
    result: SolveResult
    parts: tuple[SolveResult, ...]
    placements: tuple[tuple[int, ...], ...]


def compose_pendant_zf(
    graph: Graph,
    x: VertexSet,
    attachments: tuple[tuple[Graph, int, int], ...],
    *,
    guard: int = DEFAULT_CG_GUARD,
    cap: int = DEFAULT_TERMINAL_CAP,
) -> PendantComposition:
    """Exact forcing number of a graph with branches glued onto terminals.

    Each attachment (branch, root, at) identifies the branch root with
    the base vertex ``at``.  X must be a minimum forcing set of the base
    whose chains can end at all the gluing vertices simultaneously; the
    glued value is then exactly |X| - k plus the sum of the anchored
    branch minima, because every chain parks one blue vertex that the
    branch reuses.
    """
    x = graph._coerce(x)
    base = _require_minimum_forcing_set(graph, x, guard)
    ats = []
    for branch, root, at in attachments:
        branch._check_vertex(root)
        graph._check_vertex(at)
        if not branch.is_connected():
            raise BoundHypothesisError("every attached branch must be connected")
        ats.append(at)
    if len(set(ats)) != len(ats):
        raise GraphError("gluing vertices must be distinct")
    at_set = graph.vertex_set(ats)
    sets = enumerate_terminal_sets(graph, x, cap)
    if not any(at_set.issubset(ts) for ts in sets):
        raise BoundHypothesisError(
            "the gluing vertices are not terminals of a common forcing run"
        )
    edges = graph.edges()
    placements = []
    total = graph.n
    for branch, root, at in attachments:
        place = []
        for v in branch.vertices():
            if v == root:
                place.append(at)
            else:
                place.append(total)
                total += 1
        edges.extend((place[a], place[b]) for a, b in branch.edges())
        placements.append(tuple(place))
    glued = Graph(total, edges)
    parts = []
    mask = x.mask
    cuts = base.cuts_added
    nodes = base.nodes
    for (branch, root, at), place in zip(attachments, placements):
        res = restricted_zf_number(branch, branch.vertex_set((root,)), guard=guard)
        parts.append(res)
        cuts += res.cuts_added
        nodes += res.nodes
        for v in res.witness:
            if v != root:
                mask |= 1 << place[v]
    value = len(x) - len(attachments) + sum(res.value for res in parts)
    witness = VertexSet.from_mask(glued.n, mask)
    assert len(witness) == value
    assert is_zero_forcing_set(glued, witness)
    result = SolveResult(value, witness, "reduction", cuts, nodes)
    return PendantComposition(
        graph=glued, result=result, parts=tuple(parts), placements=tuple(placements)
    )


@dataclass(frozen=True)
class ApexTerminalReport:
    """How a candidate apex neighborhood relates to forcing terminals.

    ``covered`` holds when T fits inside a single terminal set of the
    anchor set X, which keeps the apexed value at |X|; ``forces_apex``
    holds when X alone forces the apexed graph, which requires some
    vertex of T to be a reachable terminal (``touched``).  ``result`` is
    the exact solve of the apexed graph subject to X.
    """

    apex: int
    covered: bool
    touched: bool
    forces_apex: bool
    result: SolveResult


def check_apex_terminal(
    graph: Graph,
    x: VertexSet,
    t: VertexSet,
    *,
    guard: int = DEFAULT_CG_GUARD,
    cap: int = DEFAULT_TERMINAL_CAP,
) -> ApexTerminalReport:
    """Relate the terminal sets of X to the graph with an apex over T.

    X must be a minimum forcing set of the base graph.  The report
    carries the two one-way implications: T inside one terminal set
    guarantees X still forces with the apex added, and X forcing the
    apexed graph guarantees T meets some terminal set.
    """
    x = graph._coerce(x)
    t = graph._coerce(t)
    if not t:
        raise GraphError("the apex neighborhood must be nonempty")
    _require_minimum_forcing_set(graph, x, guard)
    sets = enumerate_terminal_sets(graph, x, cap)
    covered = any(t.issubset(ts) for ts in sets)
    touched = any(not t.isdisjoint(ts) for ts in sets)
    apexed = apex_over(graph, t)
    lifted = VertexSet(apexed.n, x)
    forces_apex = is_zero_forcing_set(apexed, lifted)
    result = restricted_zf_number(apexed, lifted, guard=guard)
    assert not covered or (forces_apex and result.value == len(x))
    assert not forces_apex or touched
    return ApexTerminalReport(
        apex=graph.n,
        covered=covered,
        touched=touched,
        forces_apex=forces_apex,
        result=result,
    )
