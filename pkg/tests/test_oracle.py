"""The brute-force oracles themselves, cross-checked by independent routes."""

import pytest

from eulergraph import (
    EulerFamily,
    Hypergraph,
    SearchBudget,
    brute_family_exists,
    brute_max_matching,
    brute_tour,
    solve,
    verify_euler_object,
)
from eulergraph.genio import Lcg, format_walk_line, gen_complete, gen_random_covering

from helpers import complete_graph, fano, petersen, random_graph, tutte_berge_max_matching


class TestBruteFamilyExists:
    def test_single_edge_false(self):
        assert not brute_family_exists(Hypergraph.from_labels("abc", [("a", "b", "c")]))

    def test_two_copies_true(self):
        assert brute_family_exists(Hypergraph.from_labels("abc", [("a", "b", "c")] * 2))

    def test_fano_true(self):
        assert brute_family_exists(fano())

    def test_empty_true(self):
        assert brute_family_exists(Hypergraph.from_labels("a", []))

    def test_undersized_edge_false(self):
        assert not brute_family_exists(Hypergraph.from_labels("ab", [("a",), ("a", "b")]))

    def test_budget(self):
        h = Hypergraph.from_labels("abc", [("a", "b", "c")] * 11)
        with pytest.raises(ValueError):
            brute_family_exists(h)


class TestBruteTour:
    def test_two_copies_canonical(self):
        h = Hypergraph.from_labels("abc", [("a", "b", "c")] * 2)
        assert format_walk_line(brute_tour(h)) == "a e1 b e2 a"

    def test_single_edge_none(self):
        assert brute_tour(Hypergraph.from_labels("abc", [("a", "b", "c")])) is None

    def test_all_triples_of_four_vertices(self):
        h = gen_complete(4, 3)
        tour = brute_tour(h)
        assert tour is not None
        assert verify_euler_object(h, EulerFamily((tour,))).valid

    def test_parity_blocked_none(self):
        h = Hypergraph.from_labels("abcde", [("a", "b", "c"), ("a", "d", "e")])
        assert brute_tour(h) is None

    def test_agrees_with_solver_on_covering_inputs(self):
        checked = 0
        for n in (4, 5):
            for seed in range(1, 13):
                h = gen_random_covering(n, 3, seed)
                if len(h.edges) > 7:
                    continue
                res = solve(h, 3)
                oracle_tour = brute_tour(h)
                assert (res.verdict == "eulerian") == (oracle_tour is not None)
                checked += 1
        assert checked >= 10

    def test_family_positive_when_solver_finds_family(self):
        from eulergraph import build_incidence, find_family_subgraph

        rng = Lcg(67)
        labels = "abcde"
        for _ in range(150):
            n = 3 + rng.below(3)
            m = 1 + rng.below(4)
            edges = []
            for _ in range(m):
                size = 2 + rng.below(min(3, n - 1))
                e = set()
                while len(e) < size:
                    e.add(labels[rng.below(n)])
                edges.append(tuple(sorted(e)))
            h = Hypergraph.from_labels(labels[:n], edges)
            assert brute_family_exists(h) == (
                find_family_subgraph(build_incidence(h)) is not None)


class TestBruteMaxMatching:
    def test_known(self):
        assert brute_max_matching(complete_graph(3)) == 1
        assert brute_max_matching(complete_graph(4)) == 2
        assert brute_max_matching(petersen()) == 5

    def test_deficiency_formula_agreement(self):
        rng = Lcg(71)
        for _ in range(20):
            n = 4 + rng.below(6)
            adj = random_graph(rng, n, 15 + rng.below(55))
            assert brute_max_matching(adj) == tutte_berge_max_matching(adj)

    def test_budget(self):
        with pytest.raises(ValueError):
            brute_max_matching(complete_graph(20))


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_edges=0)
