"""Fort certificates: recognition, extraction, minimum separation."""

import random
from itertools import combinations

import pytest

from pdzf import (
    GuardExceededError,
    InfeasibleError,
    enumerate_forts,
    fort_from_failed_set,
    generate,
    is_fort,
    minimum_violated_fort,
    pd_observe,
    zf_closure,
)

from util import graph_sweep, random_connected_graph, random_subset


def fort_by_definition(graph, members):
    """Direct restatement of the fort condition with plain sets."""
    f = set(members)
    if not f:
        return False
    for w in range(graph.n):
        if w in f:
            continue
        inside = sum(1 for u in f if graph.has_edge(u, w))
        if inside == 1:
            return False
    return True


class TestIsFort:
    def test_known_cases(self):
        p5 = generate("path", (5,))
        assert is_fort(p5, p5.vertex_set([0, 2, 4]))
        assert not is_fort(p5, p5.vertex_set([4]))
        assert not is_fort(p5, p5.vertex_set([]))
        c4 = generate("cycle", (4,))
        assert is_fort(c4, c4.vertex_set([0, 2]))
        assert is_fort(c4, c4.full_set())

    def test_matches_definition_on_random_graphs(self):
        rng = random.Random(2)
        for _ in range(60):
            n = rng.randint(1, 8)
            g = random_connected_graph(n, rng) if n > 1 else generate("path", (1,))
            members = random_subset(n, rng)
            assert is_fort(g, g.vertex_set(members)) == fort_by_definition(g, members)


class TestEnumerateForts:
    def test_equals_subset_filter(self):
        for g in graph_sweep(5):
            expected = sorted(
                (
                    frozenset(c)
                    for k in range(1, g.n + 1)
                    for c in combinations(range(g.n), k)
                    if fort_by_definition(g, c)
                ),
                key=lambda f: (len(f), tuple(sorted(f))),
            )
            got = enumerate_forts(g)
            assert [frozenset(f.members) for f in got] == expected

    def test_guard(self):
        with pytest.raises(GuardExceededError):
            enumerate_forts(generate("path", (17,)))
        assert enumerate_forts(generate("path", (17,)), guard=17)


class TestFortFromFailedSet:
    def test_residue_is_the_unobserved_region(self):
        g = generate("star", (4,))
        s = g.vertex_set([1])
        fort = fort_from_failed_set(g, s, "pd")
        assert set(fort.members) == {2, 3, 4}
        assert is_fort(g, fort.members)

    def test_modes_and_errors(self):
        g = generate("path", (5,))
        with pytest.raises(InfeasibleError):
            fort_from_failed_set(g, g.vertex_set([2]), "pd")
        with pytest.raises(ValueError):
            fort_from_failed_set(g, g.vertex_set([2]), "dom")
        zf = fort_from_failed_set(g, g.vertex_set([2]), "zf")
        assert is_fort(g, zf.members)
        assert zf.members.isdisjoint(zf_closure(g, g.vertex_set([2])).final)

    def test_residue_forts_on_random_failures(self):
        rng = random.Random(7)
        for _ in range(60):
            n = rng.randint(2, 9)
            g = random_connected_graph(n, rng)
            for mode in ("pd", "zf"):
                s = g.vertex_set(random_subset(n, rng, rng.randint(0, max(0, n // 3))))
                trace = pd_observe(g, s) if mode == "pd" else zf_closure(g, s)
                if len(trace.final) == g.n:
                    continue
                fort = fort_from_failed_set(g, s, mode)
                assert is_fort(g, fort.members)
                assert fort.members == trace.final.complement()


class TestMinimumViolatedFort:
    def test_matches_enumeration_minimum(self):
        rng = random.Random(13)
        for g in graph_sweep(6):
            if g.n < 2:
                continue
            forbidden = g.vertex_set(random_subset(g.n, rng, rng.randint(0, g.n - 1)))
            all_forts = [
                f.members for f in enumerate_forts(g) if f.members.isdisjoint(forbidden)
            ]
            if not all_forts:
                with pytest.raises(InfeasibleError):
                    minimum_violated_fort(g, forbidden)
                continue
            best = min(all_forts, key=lambda f: (len(f), tuple(f)))
            found = minimum_violated_fort(g, forbidden)
            assert is_fort(g, found.members)
            assert found.members.isdisjoint(forbidden)
            assert len(found.members) == len(best)
            assert tuple(found.members) == tuple(best)

    def test_no_fort_available(self):
        g = generate("complete", (4,))
        with pytest.raises(InfeasibleError):
            minimum_violated_fort(g, g.vertex_set([0, 1, 2]))

    def test_smallest_fort_of_a_path(self):
        g = generate("path", (5,))
        fort = minimum_violated_fort(g, g.vertex_set([]))
        assert fort.members.members() == (0, 2, 4)
