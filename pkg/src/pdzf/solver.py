"""Exact solvers for restricted power domination and zero forcing.

The restricted number of a graph relative to a set X is the minimum size
of a feasible set containing X.  Three exact routes are provided and
cross-checked by the tests:

* ``brute_force_min``: subset enumeration by increasing size ("oracle");
* ``restricted_pd_number`` / ``restricted_zf_number``: constraint
  generation over fort cuts, with an exact set-cover master solved by
  branch and bound at every round;
* ``reduction_pd_number``: leaf attachment, power domination only.

Every power dominating set intersects N[F] for every fort F, and every
zero forcing set intersects every fort, so fort cuts never exclude an
optimal solution; when a master optimum becomes feasible it is optimal.
Each extracted cut is violated by the incumbent, hence new, so the loop
terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .constructions import attach_leaves
from .errors import GraphError, GuardExceededError
from .graph import Graph, VertexSet, bits
from .forts import Fort, minimum_violated_fort
from .propagation import closure_mask, dominated_mask, pd_final_mask

__all__ = [
    "SolveResult",
    "brute_force_min",
    "minimum_solutions",
    "restricted_pd_number",
    "restricted_zf_number",
    "pd_number_disconnected",
    "reduction_pd_number",
    "spread",
    "z_restricted_single",
    "k_restricted_number",
    "DEFAULT_ORACLE_GUARD",
    "DEFAULT_EXHAUSTIVE_GUARD",
    "DEFAULT_CG_GUARD",
]

DEFAULT_ORACLE_GUARD = 20
DEFAULT_EXHAUSTIVE_GUARD = 16
DEFAULT_CG_GUARD = 64

_MODES = ("pd", "zf", "dom")


@dataclass(frozen=True)
class SolveResult:
    """An exact value with a feasible witness of that size containing X.

    ``method`` names the certification path: "oracle" (enumeration),
    "constraint_generation" or "reduction".  ``cuts_added`` counts fort
    cuts, ``nodes`` counts search-tree nodes, both 0 when meaningless.
    """

    value: int
    witness: VertexSet
    method: str
    cuts_added: int = 0
    nodes: int = 0


def _prepare(graph: Graph, x, mode: str) -> VertexSet:
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}, got {mode!r}")
    if graph.n == 0:
        raise GraphError("parameters of the empty graph are undefined")
    return graph._coerce(x if x is not None else ())


def _final_mask(adj: tuple[int, ...], mask: int, mode: str) -> int:
    if mode == "pd":
        return pd_final_mask(adj, mask)
    if mode == "zf":
        return closure_mask(adj, mask)
    return dominated_mask(adj, mask)


def brute_force_min(
    graph: Graph,
    x: VertexSet | None = None,
    mode: str = "pd",
    *,
    guard: int = DEFAULT_ORACLE_GUARD,
) -> SolveResult:
    """Minimum feasible superset of X by direct enumeration.

    Supersets are tried by increasing size, lexicographically within a
    size, so the witness is the lexicographically least optimum.  Modes:
    "pd", "zf", "dom".
    """
    x = _prepare(graph, x, mode)
    if graph.n > guard:
        raise GuardExceededError(f"oracle guard is {guard}, graph has {graph.n} vertices")
    adj = graph.adj
    full = (1 << graph.n) - 1
    free = [v for v in range(graph.n) if v not in x]
    tried = 0
    for extra in range(len(free) + 1):
        for combo in combinations(free, extra):
            tried += 1
            mask = x.mask
            for v in combo:
                mask |= 1 << v
            if _final_mask(adj, mask, mode) == full:
                return SolveResult(
                    value=mask.bit_count(),
                    witness=VertexSet.from_mask(graph.n, mask),
                    method="oracle",
                    nodes=tried,
                )
    raise AssertionError("unreachable: the full vertex set is always feasible")


def minimum_solutions(
    graph: Graph,
    x: VertexSet | None = None,
    mode: str = "pd",
    *,
    guard: int = DEFAULT_EXHAUSTIVE_GUARD,
) -> list[VertexSet]:
    """Every minimum feasible superset of X, in lexicographic order."""
    x = _prepare(graph, x, mode)
    if graph.n > guard:
        raise GuardExceededError(f"exhaustive guard is {guard}, graph has {graph.n} vertices")
    best = brute_force_min(graph, x, mode, guard=guard).value
    adj = graph.adj
    full = (1 << graph.n) - 1
    free = [v for v in range(graph.n) if v not in x]
    out = []
    for combo in combinations(free, best - len(x)):
        mask = x.mask
        for v in combo:
            mask |= 1 << v
        if _final_mask(adj, mask, mode) == full:
            out.append(VertexSet.from_mask(graph.n, mask))
    return out


def _cover_greedy(rows: list[int], forced: int, n: int) -> int:
    chosen = forced
    active = [r for r in rows if r & chosen == 0]
    while active:
        best_v, best_hits = -1, -1
        union = 0
        for r in active:
            union |= r
        for v in bits(union):
            hits = sum(r >> v & 1 for r in active)
            if hits > best_hits:
                best_v, best_hits = v, hits
        chosen |= 1 << best_v
        active = [r for r in active if r >> best_v & 1 == 0]
    return chosen


def _cover_exact(n: int, degs: tuple[int, ...], rows: list[int], forced: int) -> tuple[int, int]:
    """Exact minimum set cover: smallest superset of *forced* meeting every row.

    Branch and bound.  The incumbent starts greedy; a node picks the
    uncovered row with fewest allowed vertices and branches on its members
    (rows hit descending, then degree descending, then id), banning each
    tried vertex from later siblings so no solution is enumerated twice;
    pairwise-disjoint uncovered rows give the lower bound.
    """
    active = [r for r in rows if r & forced == 0]
    best = _cover_greedy(active, forced, n)
    best_size = best.bit_count()
    nodes = 0

    def dfs(chosen: int, size: int, todo: list[int], banned: int) -> None:
        nonlocal best, best_size, nodes
        nodes += 1
        if not todo:
            if size < best_size:
                best, best_size = chosen, size
            return
        allowed = []
        taken = 0
        lower = 0
        for r in todo:
            a = r & ~banned
            if a == 0:
                return
            allowed.append(a)
            if a & taken == 0:
                taken |= a
                lower += 1
        if size + lower >= best_size:
            return
        pick = min(allowed, key=lambda a: a.bit_count())
        members = sorted(
            bits(pick),
            key=lambda v: (-sum(r >> v & 1 for r in todo), -degs[v], v),
        )
        for v in members:
            vbit = 1 << v
            dfs(chosen | vbit, size + 1, [r for r in todo if r & vbit == 0], banned)
            banned |= vbit

    dfs(forced, forced.bit_count(), active, 0)
    return best, nodes


def _pool_add(pool: list[int], row: int) -> None:
    # Keep only minimal rows: a subset row implies every superset row.
    assert all(q & row != q for q in pool), "cut already implied by the pool"
    pool[:] = [q for q in pool if row & q != row]
    pool.append(row)


def _cg(
    graph: Graph,
    x: VertexSet,
    mode: str,
    min_forts: bool,
    guard: int,
    cut_log: list | None = None,
) -> SolveResult:
    if graph.n > guard:
        raise GuardExceededError(
            f"constraint generation guard is {guard}, graph has {graph.n} vertices"
        )
    adj = graph.adj
    n = graph.n
    full = (1 << n) - 1
    degs = tuple(a.bit_count() for a in adj)
    pool: list[int] = []
    cuts = 0
    total_nodes = 0
    s_mask = x.mask
    while True:
        final = _final_mask(adj, s_mask, mode)
        if final == full:
            break
        if min_forts:
            fmask = minimum_violated_fort(graph, VertexSet.from_mask(n, final)).members.mask
        else:
            fmask = full & ~final
        if cut_log is not None:
            cut_log.append(
                (VertexSet.from_mask(n, s_mask), Fort(VertexSet.from_mask(n, fmask)))
            )
        _pool_add(pool, dominated_mask(adj, fmask) if mode == "pd" else fmask)
        cuts += 1
        s_mask, nodes = _cover_exact(n, degs, pool, x.mask)
        total_nodes += nodes
    return SolveResult(
        value=s_mask.bit_count(),
        witness=VertexSet.from_mask(n, s_mask),
        method="constraint_generation",
        cuts_added=cuts,
        nodes=total_nodes,
    )


def restricted_pd_number(
    graph: Graph,
    x: VertexSet | None = None,
    *,
    min_forts: bool = False,
    guard: int = DEFAULT_CG_GUARD,
    cut_log: list[tuple[VertexSet, Fort]] | None = None,
) -> SolveResult:
    """Minimum power dominating set containing X, by constraint generation.

    Each failed master solution S leaves the fort V - PD(S); its closed
    neighborhood joins the cut pool (``min_forts=True`` separates a
    minimum violated fort instead, far stronger on leafy graphs).  The
    master is re-solved exactly after every cut.  When ``cut_log`` is a
    list it receives one (incumbent, fort) pair per cut.
    """
    x = _prepare(graph, x, "pd")
    return _cg(graph, x, "pd", min_forts, guard, cut_log)


def restricted_zf_number(
    graph: Graph,
    x: VertexSet | None = None,
    *,
    min_forts: bool = False,
    guard: int = DEFAULT_CG_GUARD,
    cut_log: list[tuple[VertexSet, Fort]] | None = None,
) -> SolveResult:
    """Minimum zero forcing set containing X, by constraint generation.

    Identical loop to the power domination solver except that the cut for
    a fort F is F itself rather than N[F].
    """
    x = _prepare(graph, x, "zf")
    return _cg(graph, x, "zf", min_forts, guard, cut_log)


def pd_number_disconnected(
    graph: Graph,
    x: VertexSet | None = None,
    *,
    min_forts: bool = False,
    guard: int = DEFAULT_CG_GUARD,
) -> SolveResult:
    """Restricted power domination via the component decomposition.

    Components with at least 3 vertices are solved independently; a
    component C with at most 2 vertices contributes max(|X & C|, 1),
    realized by X & C itself or by its smallest vertex.
    """
    x = _prepare(graph, x, "pd")
    value = 0
    witness_mask = 0
    cuts = 0
    nodes = 0
    for comp in graph.components():
        if len(comp) >= 3:
            sub, index = graph.induced_subgraph(comp)
            res = _cg(sub, index.restrict(x), "pd", min_forts, guard)
            value += res.value
            witness_mask |= index.lift(res.witness).mask
            cuts += res.cuts_added
            nodes += res.nodes
        else:
            local = x & comp
            if local:
                value += len(local)
                witness_mask |= local.mask
            else:
                value += 1
                witness_mask |= 1 << min(comp)
    return SolveResult(
        value=value,
        witness=VertexSet.from_mask(graph.n, witness_mask),
        method="constraint_generation",
        cuts_added=cuts,
        nodes=nodes,
    )


def reduction_pd_number(
    graph: Graph,
    x: VertexSet | None = None,
    *,
    guard: int = DEFAULT_CG_GUARD,
) -> SolveResult:
    """Restricted power domination via pendant-leaf attachment.

    Attaching three leaves to every vertex of X makes each of them
    mandatory, so the unrestricted minimum of the attachment equals the
    restricted minimum of the base graph and its witnesses avoid the new
    leaves (two leaves per vertex already preserve the value; the third
    pins the witness).  With empty X the graph is solved as is.
    """
    x = _prepare(graph, x, "pd")
    if not x:
        res = _cg(graph, x, "pd", True, guard)
        return SolveResult(res.value, res.witness, "reduction", res.cuts_added, res.nodes)
    grown = attach_leaves(graph, x, 3).graph
    res = _cg(grown, VertexSet(grown.n), "pd", True, guard)
    assert res.witness.mask >> graph.n == 0, "a minimum solution used an attached leaf"
    witness = VertexSet.from_mask(graph.n, res.witness.mask)
    assert x.issubset(witness)
    assert pd_final_mask(graph.adj, witness.mask) == (1 << graph.n) - 1
    return SolveResult(res.value, witness, "reduction", res.cuts_added, res.nodes)


def spread(graph: Graph, v: int, *, guard: int = DEFAULT_CG_GUARD) -> int:
    """Z(G) - Z(G - v); always -1, 0 or 1."""
    graph._check_vertex(v)
    if graph.n < 2:
        raise GraphError("vertex spread needs at least two vertices")
    z = _cg(graph, VertexSet(graph.n), "zf", False, guard).value
    z_minus = _cg(graph.delete_vertex(v), VertexSet(graph.n - 1), "zf", False, guard).value
    out = z - z_minus
    assert out in (-1, 0, 1)
    return out


def _lift_deleted(s: VertexSet, v: int) -> VertexSet:
    """Map ids of G - v back into G (ids >= v shift up by one)."""
    return VertexSet(s.n + 1, (u if u < v else u + 1 for u in s))


def z_restricted_single(graph: Graph, v: int, *, guard: int = DEFAULT_CG_GUARD) -> SolveResult:
    """Z(G; {v}) through the spread of v.

    Spread 1 means some minimum forcing set contains v without using it:
    a minimum set of G - v plus v works.  Spread -1 means Z(G; {v}) =
    Z(G) + 1, witnessed by any minimum set plus v.  Spread 0 decides
    nothing, so that case is solved directly.
    """
    graph._check_vertex(v)
    if graph.n == 1:
        return SolveResult(1, VertexSet(1, (0,)), "reduction")
    empty = VertexSet(graph.n)
    z_res = _cg(graph, empty, "zf", False, guard)
    z_minus_res = _cg(graph.delete_vertex(v), VertexSet(graph.n - 1), "zf", False, guard)
    s = z_res.value - z_minus_res.value
    if s == 1:
        witness = _lift_deleted(z_minus_res.witness, v) | VertexSet(graph.n, (v,))
        result = SolveResult(z_res.value, witness, "reduction")
    elif s == -1:
        witness = z_res.witness | VertexSet(graph.n, (v,))
        result = SolveResult(z_res.value + 1, witness, "reduction")
    else:
        return _cg(graph, VertexSet(graph.n, (v,)), "zf", False, guard)
    assert len(result.witness) == result.value
    assert closure_mask(graph.adj, result.witness.mask) == (1 << graph.n) - 1
    return result


def k_restricted_number(
    graph: Graph,
    k: int,
    mode: str = "pd",
    *,
    guard: int = DEFAULT_ORACLE_GUARD,
) -> tuple[int, VertexSet]:
    """Worst restricted value over all X of size k, with a maximizing X.

    Enumerates every X, so the oracle guard applies to n.  Mode "dom"
    falls back to enumeration per X; "pd" and "zf" use the cut solver.
    """
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}, got {mode!r}")
    if graph.n == 0:
        raise GraphError("parameters of the empty graph are undefined")
    if not 0 <= k <= graph.n:
        raise GraphError(f"k must lie in [0, {graph.n}], got {k}")
    if graph.n > guard:
        raise GuardExceededError(f"enumeration guard is {guard}, graph has {graph.n} vertices")
    best = -1
    best_x = VertexSet(graph.n)
    for combo in combinations(range(graph.n), k):
        x = VertexSet(graph.n, combo)
        if mode == "dom":
            value = brute_force_min(graph, x, "dom", guard=guard).value
        else:
            value = _cg(graph, x, mode, False, max(guard, DEFAULT_CG_GUARD)).value
        if value > best:
            best, best_x = value, x
    return best, best_x
