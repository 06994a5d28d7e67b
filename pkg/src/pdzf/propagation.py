"""Propagation processes: zero forcing and power domination.

The color change rule: a blue vertex u with exactly one white neighbor w
forces w to become blue.  Zero forcing iterates the rule from an initial
blue set B; power domination first colors the closed neighborhood of S
(the domination step), then iterates the rule.  Both processes reach a
unique final set regardless of force order.

Traces are round-based: each round applies every force that was legal at
the start of the round, in increasing forcer id, skipping forces whose
target was already colored earlier in the same round.  The domination
step of power domination is round 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GuardExceededError, InconsistentTraceError, InfeasibleError
from .graph import Graph, VertexSet, bits

__all__ = [
    "PropagationTrace",
    "ForcingChainDecomposition",
    "zf_closure",
    "pd_observe",
    "is_zero_forcing_set",
    "is_power_dominating_set",
    "forcing_chains",
    "enumerate_terminal_sets",
    "DEFAULT_TERMINAL_CAP",
]

DEFAULT_TERMINAL_CAP = 10**6


def closure_mask(adj: tuple[int, ...], blue: int) -> int:
    """Zero-forcing closure of the blue bitmask, mask-level fast path."""
    while True:
        changed = False
        m = blue
        while m:
            low = m & -m
            m ^= low
            white = adj[low.bit_length() - 1] & ~blue
            if white and white & (white - 1) == 0:
                blue |= white
                changed = True
        if not changed:
            return blue


def dominated_mask(adj: tuple[int, ...], s_mask: int) -> int:
    out = s_mask
    for v in bits(s_mask):
        out |= adj[v]
    return out


def pd_final_mask(adj: tuple[int, ...], s_mask: int) -> int:
    """Final observed bitmask of power domination from the bitmask of S."""
    return closure_mask(adj, dominated_mask(adj, s_mask))


@dataclass(frozen=True)
class PropagationTrace:
    """Round-by-round record of one propagation run.

    ``initial`` is the blue set when forcing starts: B for zero forcing,
    N[S] for power domination.  ``dominated`` holds the vertices colored by
    the round-0 domination step (empty for zero forcing), so the original
    sources are ``initial - dominated``.  ``rounds`` lists the forces of
    each forcing round as (forcer, forced) pairs.
    """

    initial: VertexSet
    dominated: VertexSet
    rounds: tuple[tuple[tuple[int, int], ...], ...]
    final: VertexSet

    @property
    def forces(self) -> tuple[tuple[int, int], ...]:
        return tuple(f for rnd in self.rounds for f in rnd)

    @property
    def sources(self) -> VertexSet:
        return self.initial - self.dominated


@dataclass(frozen=True)
class ForcingChainDecomposition:
    """Maximal force chains of a trace; ``terminals`` are the chain ends."""

    chains: tuple[tuple[int, ...], ...]
    terminals: VertexSet


def _forcing_rounds(adj: tuple[int, ...], blue: int) -> tuple[tuple, int]:
    rounds = []
    while True:
        legal = []
        for u in bits(blue):
            white = adj[u] & ~blue
            if white and white & (white - 1) == 0:
                legal.append((u, white.bit_length() - 1))
        applied = []
        for u, w in legal:
            if blue >> w & 1:
                continue  # target colored earlier this round
            blue |= 1 << w
            applied.append((u, w))
        if not applied:
            return tuple(rounds), blue
        rounds.append(tuple(applied))


def zf_closure(graph: Graph, b: VertexSet) -> PropagationTrace:
    """Run zero forcing from B and return the full trace."""
    b = graph._coerce(b)
    rounds, final = _forcing_rounds(graph.adj, b.mask)
    return PropagationTrace(
        initial=b,
        dominated=VertexSet(graph.n),
        rounds=rounds,
        final=VertexSet.from_mask(graph.n, final),
    )


def pd_observe(graph: Graph, s: VertexSet) -> PropagationTrace:
    """Run power domination from S: dominate N[S], then zero-force."""
    s = graph._coerce(s)
    observed = dominated_mask(graph.adj, s.mask)
    rounds, final = _forcing_rounds(graph.adj, observed)
    return PropagationTrace(
        initial=VertexSet.from_mask(graph.n, observed),
        dominated=VertexSet.from_mask(graph.n, observed & ~s.mask),
        rounds=rounds,
        final=VertexSet.from_mask(graph.n, final),
    )


def is_zero_forcing_set(graph: Graph, b: VertexSet) -> bool:
    b = graph._coerce(b)
    full = (1 << graph.n) - 1
    return closure_mask(graph.adj, b.mask) == full


def is_power_dominating_set(graph: Graph, s: VertexSet) -> bool:
    s = graph._coerce(s)
    full = (1 << graph.n) - 1
    return pd_final_mask(graph.adj, s.mask) == full


def forcing_chains(graph: Graph, trace: PropagationTrace) -> ForcingChainDecomposition:
    """Decompose a trace into its force chains.

    Every vertex of ``trace.final`` lies on exactly one chain and every
    chain starts at a vertex of ``trace.initial``, so the number of chains
    equals ``len(trace.initial)``.  Raises if the trace does not replay
    legally on *graph*.
    """
    adj = graph.adj
    blue = trace.initial.mask
    succ: dict[int, int] = {}
    for u, w in trace.forces:
        if not blue >> u & 1:
            raise InconsistentTraceError(f"forcer {u} is not blue")
        white = adj[u] & ~blue
        if white != 1 << w:
            raise InconsistentTraceError(f"{w} is not the unique white neighbor of {u}")
        succ[u] = w
        blue |= 1 << w
    if blue != trace.final.mask:
        raise InconsistentTraceError("replayed final set does not match the trace")
    chains = []
    last = []
    for head in trace.initial:
        chain = [head]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        chains.append(tuple(chain))
        last.append(chain[-1])
    return ForcingChainDecomposition(
        chains=tuple(chains), terminals=VertexSet(graph.n, last)
    )


def enumerate_terminal_sets(
    graph: Graph, b: VertexSet, cap: int = DEFAULT_TERMINAL_CAP
) -> set[VertexSet]:
    """All distinct terminal sets over the chronological force orders from B.

    A terminal set is the set of chain ends of one complete forcing run.
    The count can grow exponentially; enumeration stops with an error once
    more than *cap* distinct sets appear.

    The search memoizes on the blue set: the reachable sets of future
    forcers depend only on the current coloring, and a terminal set is the
    complement of the full forcer set.
    """
    b = graph._coerce(b)
    adj = graph.adj
    full = (1 << graph.n) - 1
    if closure_mask(adj, b.mask) != full:
        raise InfeasibleError("the given set does not force the whole graph")
    memo: dict[int, frozenset[int]] = {}

    def future_forcers(blue: int) -> frozenset[int]:
        if blue == full:
            return frozenset((0,))
        cached = memo.get(blue)
        if cached is not None:
            return cached
        out: set[int] = set()
        for u in bits(blue):
            white = adj[u] & ~blue
            if white and white & (white - 1) == 0:
                ubit = 1 << u
                for rest in future_forcers(blue | white):
                    out.add(rest | ubit)
        if len(out) > cap:
            raise GuardExceededError(
                f"more than cap={cap} terminal sets (partial count {len(out)})"
            )
        result = frozenset(out)
        memo[blue] = result
        return result

    return {
        VertexSet.from_mask(graph.n, full & ~forcers)
        for forcers in future_forcers(b.mask)
    }
