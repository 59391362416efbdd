import itertools

import pytest

from homlab.oracles import (
    BinarySequence,
    Impossibility,
    IncreasingSequence,
    catalog_oracle,
    complement_oracle,
    cycle_overlay,
    frucht_overlay,
    io_blocks,
    oracle_from_json,
    phi_definable_set,
    sequence_graph,
    truncate,
)
from homlab.relstruct import (
    InputError,
    ResourceGuardError,
    adjacent,
    find_uniform_set,
    graph,
    graph_edges,
    induced_cycle_lengths,
    induced_substructure,
)

ALT = BinarySequence.periodic([0, 1], [0, 1])  # P = (0,1,0,1,...)
FIG2 = BinarySequence.periodic([1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 0], [1, 0])


class TestBinarySequence:
    def test_periodic_bits(self):
        assert [ALT.bit(i) for i in range(6)] == [1, 1, 0, 1, 0, 1]  # p0 := p1

    def test_pn_bits(self):
        P3 = BinarySequence.pn(3)
        assert [P3.bit(i) for i in range(9)] == [1, 1, 1, 0, 1, 0, 1, 0, 1]

    def test_pa_bits(self):
        # A = (4,5,6,...): 0, 4 ones, 0, 5 ones, 0, 6 ones, ...
        P = BinarySequence.pa(IncreasingSequence((4, 5, 6)))
        expected = [0] + [1] * 4 + [0] + [1] * 5 + [0] + [1] * 6 + [0] + [1] * 7
        assert [P.bit(i) for i in range(len(expected))] == expected

    def test_infinitely_many(self):
        assert ALT.infinitely_many(0) and ALT.infinitely_many(1)
        allones = BinarySequence.periodic([0], [1])
        assert not allones.infinitely_many(0)
        assert allones.next_index_with_bit(0, 5) is None

    def test_json_roundtrip(self):
        for P in (ALT, BinarySequence.pn(4), BinarySequence.pa(IncreasingSequence((4,)))):
            assert BinarySequence.from_json(P.to_json()).to_json() == P.to_json()

    def test_increasing_sequence_validation(self):
        with pytest.raises(InputError):
            IncreasingSequence((5, 5))
        with pytest.raises(InputError):
            IncreasingSequence((4,), rule="x")
        A = IncreasingSequence((4, 7), rule="+2")
        assert [A.term(k) for k in (1, 2, 3, 4)] == [4, 7, 9, 11]


class TestSequenceGraph:
    def test_figure_prefix_alternating(self):
        G = truncate(sequence_graph(ALT), 5)
        assert graph_edges(G) == [(0, 2), (0, 4), (1, 2), (1, 4), (2, 4), (3, 4)]

    def test_first_bit_never_read(self):
        # truncations of sequences agreeing above index 0 are identical
        P = BinarySequence.periodic([0, 1, 1], [0, 1])
        Q = BinarySequence.periodic([1, 1, 1], [0, 1])
        for n in (2, 5, 9):
            assert graph_edges(truncate(sequence_graph(P), n)) == graph_edges(
                truncate(sequence_graph(Q), n)
            )

    def test_figure2_prefix(self):
        # oracle: direct evaluation of the p_max rule
        G = truncate(sequence_graph(FIG2), 11)
        expected = sorted(
            (i, j) for i in range(11) for j in range(i + 1, 11) if FIG2.bit(j) == 0
        )
        assert graph_edges(G) == expected
        assert adjacent(G, 6, 7)

    def test_neighbourhood_of_one_vertex_is_complete(self):
        # for p_j = 1, N(v_j) induces a complete graph in any truncation
        G = truncate(sequence_graph(FIG2), 13)
        for j in range(13):
            if FIG2.bit(j) == 1:
                nbrs = [w for w in range(13) if adjacent(G, j, w)]
                H = induced_substructure(G, nbrs)
                assert all(
                    adjacent(H, u, v) for u, v in itertools.combinations(range(H.size), 2)
                )

    def test_same_o_block_closed_neighbourhoods_agree(self):
        G = truncate(sequence_graph(FIG2), 11)
        for block in io_blocks(FIG2, 11).blocks:
            if block.kind != "O":
                continue
            for v, w in itertools.combinations(block.vertices, 2):
                nv = {u for u in range(11) if adjacent(G, v, u)} | {v}
                nw = {u for u in range(11) if adjacent(G, w, u)} | {w}
                assert nv == nw

    def test_cone_rules(self):
        G = sequence_graph(ALT)
        w = G.cone(frozenset({0, 1, 2}), "adjacent", frozenset())
        assert w == 4 and all(G.adjacent(w, v) for v in (0, 1, 2))
        u = G.cone(frozenset({0, 1, 2}), "nonadjacent", frozenset())
        assert u == 3 and not any(G.adjacent(u, v) for v in (0, 1, 2))


class TestIoBlocks:
    def test_figure2_blocks(self):
        assert io_blocks(FIG2, 11).labelled() == {
            "VI1": [0, 1],
            "VO1": [2, 3],
            "VI2": [4, 5, 6],
            "VO2": [7, 8],
            "VI3": [9],
            "VO3": [10],
        }

    def test_all_zero_prefix(self):
        P = BinarySequence.periodic([0], [0])
        dec = io_blocks(P, 6)
        assert len(dec.blocks) == 1
        assert dec.blocks[0].kind == "O"
        assert dec.blocks[0].vertices == tuple(range(6))

    def test_p3_blocks(self):
        dec = io_blocks(BinarySequence.pn(3), 10)
        assert dec.labelled()["VI1"] == [0, 1, 2]
        assert all(len(b.vertices) == 1 for b in dec.blocks[1:])


class TestCycleOverlay:
    def test_prefix_cycles_present(self):
        G = truncate(cycle_overlay(IncreasingSequence((4, 5, 6))), 11)
        # 4-cycle on VI1 = {1,2,3,4}: consecutive + wrap
        for u, v in [(1, 2), (2, 3), (3, 4), (1, 4)]:
            assert adjacent(G, u, v)
        assert not adjacent(G, 1, 3) and not adjacent(G, 2, 4)
        # 5-cycle on VI2 = {6..10}
        for u, v in [(6, 7), (7, 8), (8, 9), (9, 10), (6, 10)]:
            assert adjacent(G, u, v)

    def test_cycle_spectrum_19(self):
        G = truncate(cycle_overlay(IncreasingSequence((4, 5, 6))), 19)
        assert induced_cycle_lengths(G, 8) == {3, 4, 5, 6}

    def test_spectra_distinguish_sequences(self):
        GA = truncate(cycle_overlay(IncreasingSequence((4,))), 19)
        GB = truncate(cycle_overlay(IncreasingSequence((5,))), 19)
        sa = {l for l in induced_cycle_lengths(GA, 8) if l >= 4}
        sb = {l for l in induced_cycle_lengths(GB, 8) if l >= 4}
        assert sa != sb

    def test_a1_guard(self):
        with pytest.raises(InputError):
            cycle_overlay(IncreasingSequence((3,)))

    def test_cone_rules_verified(self):
        G = cycle_overlay(IncreasingSequence((4, 5, 6)))
        S = frozenset({1, 2, 6})
        w = G.cone(S, "adjacent", frozenset())
        assert all(G.adjacent(w, v) for v in S)
        u = G.cone(S, "nonadjacent", frozenset())
        assert not any(G.adjacent(u, v) for v in S)


PRISM = graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


class TestFruchtOverlay:
    def test_vi1_is_delta(self):
        G = truncate(frucht_overlay(PRISM), 13)
        H = induced_substructure(G, range(6))
        assert graph_edges(H) == graph_edges(PRISM)

    def test_tail_adjacency_matches_pn(self):
        P = BinarySequence.pn(6)
        G = truncate(frucht_overlay(PRISM), 13)
        for i in range(13):
            for j in range(max(i + 1, 6), 13):
                assert adjacent(G, i, j) == (P.bit(j) == 0)

    def test_rejects_bad_delta(self):
        with pytest.raises(InputError):
            frucht_overlay(graph(6, [(0, 1)]))
        K4 = graph(4, itertools.combinations(range(4), 2))
        with pytest.raises(InputError):
            frucht_overlay(K4)  # 3-regular but too small


class TestCatalog:
    def test_bit_random_graph_small_truncation(self):
        G = truncate(catalog_oracle("bit_random_graph"), 3)
        assert graph_edges(G) == [(0, 1), (1, 2)]

    def test_bit_random_graph_pattern_witness(self):
        R = catalog_oracle("bit_random_graph")
        x = R.pattern_witness(frozenset({0, 1, 3}), frozenset({2}), frozenset())
        assert x == 11
        assert all(R.adjacent(x, u) for u in (0, 1, 3)) and not R.adjacent(x, 2)

    def test_bit_random_graph_has_cliques_and_independent_sets(self):
        G = truncate(catalog_oracle("bit_random_graph"), 32)
        assert find_uniform_set(G, 4, "clique") is not None
        assert find_uniform_set(G, 4, "independent") is not None

    def test_complete_and_null(self):
        K = truncate(catalog_oracle("complete"), 4)
        assert len(graph_edges(K)) == 6
        N = truncate(catalog_oracle("null"), 4)
        assert graph_edges(N) == []
        imp = catalog_oracle("complete").cone(frozenset({0}), "nonadjacent", frozenset())
        assert isinstance(imp, Impossibility) and imp.rule == "no_independent_set_2"

    def test_clique_union_finite(self):
        G = catalog_oracle("clique_union", m=2)
        imp = G.cone(frozenset({0, 1}), "nonadjacent", frozenset())
        assert isinstance(imp, Impossibility) and imp.rule == "no_independent_set_3"
        w = G.cone(frozenset({0, 2}), "adjacent", frozenset())
        assert w % 2 == 0 and w not in (0, 2)
        cross = G.cone(frozenset({0, 1}), "adjacent", frozenset())
        assert isinstance(cross, Impossibility) and cross.rule == "no_induced_path_3"
        assert G.in_age(graph(3, [(0, 1)]))
        assert not G.in_age(graph(3, []))  # needs 3 cliques
        assert not G.in_age(graph(3, [(0, 1), (1, 2)]))  # P3 is not a cluster

    def test_clique_union_omega(self):
        G = catalog_oracle("clique_union", m="omega")
        T = truncate(G, 16)
        # cluster graph: no induced path on 3 vertices
        for a, b, c in itertools.permutations(range(16), 3):
            if adjacent(T, a, b) and adjacent(T, b, c):
                assert adjacent(T, a, c)
        w = G.cone(frozenset({0, 1}), "nonadjacent", frozenset())
        assert isinstance(w, int) and not G.adjacent(w, 0) and not G.adjacent(w, 1)
        assert G.in_age(graph(5, []))

    def test_henson_triangle_free(self):
        G = truncate(catalog_oracle("henson", n=3), 20)
        assert find_uniform_set(G, 3, "clique") is None

    def test_henson4_k4_free(self):
        G = truncate(catalog_oracle("henson", n=4), 40)
        assert find_uniform_set(G, 4, "clique") is None

    def test_henson_cone_rules(self):
        H = catalog_oracle("henson", n=3)
        T = truncate(H, 20)
        edges = graph_edges(T)
        assert edges  # the greedy construction does draw edges
        u, v = edges[0]
        imp = H.cone(frozenset({u, v}), "adjacent", frozenset())
        assert isinstance(imp, Impossibility) and imp.rule == "no_clique_3"
        w = H.cone(frozenset({0, 1, 2}), "nonadjacent", frozenset())
        assert isinstance(w, int) and not any(H.adjacent(w, x) for x in (0, 1, 2))
        assert not H.in_age(graph(3, [(0, 1), (1, 2), (0, 2)]))

    def test_generic_digraph(self):
        D = catalog_oracle("generic_digraph")
        T = truncate(D, 9)
        # no loops, and the three digit values are realized
        kinds = set()
        for i in range(9):
            for j in range(i + 1, 9):
                kinds.add((D.arc(i, j), D.arc(j, i)))
                assert not (D.arc(i, j) and D.arc(j, i))
        assert kinds == {(False, False), (True, False), (False, True)}
        x = D.dep_witness(frozenset({0}), frozenset({1}), frozenset({2}), frozenset())
        assert D.arc(x, 0) and D.arc(1, x)
        assert not D.arc(x, 2) and not D.arc(2, x)

    def test_unknown_family(self):
        with pytest.raises(InputError):
            catalog_oracle("petersen")
        with pytest.raises(InputError):
            catalog_oracle("henson", n=2)


class TestComplementOracle:
    def test_null_complement_complete(self):
        G = truncate(complement_oracle(catalog_oracle("null")), 5)
        assert len(graph_edges(G)) == 10

    def test_involution(self):
        base = catalog_oracle("bit_random_graph")
        twice = complement_oracle(complement_oracle(base))
        assert graph_edges(truncate(base, 12)) == graph_edges(truncate(twice, 12))

    def test_omega_clique_complement_is_multipartite(self):
        G = truncate(complement_oracle(catalog_oracle("clique_union", m="omega")), 12)
        # complete multipartite: non-adjacency is transitive
        for a, b, c in itertools.permutations(range(12), 3):
            if not adjacent(G, a, b) and not adjacent(G, b, c):
                assert not adjacent(G, a, c)

    def test_rule_relabelling(self):
        H = complement_oracle(catalog_oracle("henson", n=3))
        # a non-edge of the complement is an edge of henson(3)
        base = truncate(catalog_oracle("henson", n=3), 20)
        u, v = graph_edges(base)[0]
        imp = H.cone(frozenset({u, v}), "nonadjacent", frozenset())
        assert isinstance(imp, Impossibility)
        assert imp.rule == "no_independent_set_3"

    def test_age_relabelling(self):
        H = complement_oracle(catalog_oracle("henson", n=3))
        assert not H.in_age(graph(3, []))  # independent 3-set = complement of K3
        assert H.in_age(graph(3, [(0, 1), (1, 2), (0, 2)]))


class TestTruncate:
    def test_guard(self):
        with pytest.raises(ResourceGuardError):
            truncate(catalog_oracle("null"), 600)
        assert truncate(catalog_oracle("null"), 600, guard=1024).size == 600

    def test_nested_truncations_are_induced(self):
        G = catalog_oracle("bit_random_graph")
        small = truncate(G, 8)
        big = truncate(G, 16)
        assert graph_edges(induced_substructure(big, range(8))) == graph_edges(small)

    def test_json_dispatch(self):
        specs = [
            {"family": "sequence_graph", "P": {"preamble": [0, 1], "period": [0, 1]}},
            {"family": "cycle_overlay", "A": {"prefix": [4, 5, 6], "rule": "+1"}},
            {"family": "bit_random_graph"},
            {"family": "clique_union", "m": 3},
            {"family": "henson", "n": 3},
            {"family": "complement", "of": {"family": "null"}},
        ]
        for spec in specs:
            oracle = oracle_from_json(spec)
            assert truncate(oracle, 6).size == 6


class TestPhiSet:
    def test_p3_window_11(self):
        assert phi_definable_set(BinarySequence.pn(3), 11) == {0, 1, 2}

    def test_sizes_for_p4_p6(self):
        assert len(phi_definable_set(BinarySequence.pn(4), 12)) == 4
        assert len(phi_definable_set(BinarySequence.pn(6), 14)) == 6

    def test_window_guard(self):
        with pytest.raises(InputError):
            phi_definable_set(BinarySequence.pn(3), 10)  # bit(8) = 1
        with pytest.raises(InputError):
            phi_definable_set(ALT, 9)
