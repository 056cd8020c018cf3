import random

import pytest

from megsolve import (GenSpec, gen_bipartite_permutation,
                      gen_bipartite_permutation_with_ordering,
                      gen_distance_hereditary, gen_p4_sparse,
                      gen_random_connected, gen_strongly_chordal, generate,
                      is_connected, recognize_distance_hereditary,
                      recognize_p4_sparse, recognize_strongly_chordal,
                      spider_graph, verify_spider_partition,
                      verify_strong_ordering)

from graphs_util import brute_p4_sparse


def test_same_spec_same_graph():
    for spec in (GenSpec("distance_hereditary", seed=4, n=12),
                 GenSpec("p4_sparse", seed=4, n=12),
                 GenSpec("bipartite_permutation", seed=4, p=5, q=7),
                 GenSpec("strongly_chordal", seed=4, n=12),
                 GenSpec("random", seed=4, n=12, m=20)):
        assert generate(spec) == generate(spec)


def test_different_seeds_usually_differ():
    hits = sum(gen_distance_hereditary(10, s) == gen_distance_hereditary(10, s + 1)
               for s in range(10))
    assert hits <= 2


def test_dh_instances_recognized():
    for seed in range(100):
        n = 2 + seed % 17
        G = gen_distance_hereditary(n, seed)
        assert G.n == n and is_connected(G)
        assert recognize_distance_hereditary(G) is not None


def test_p4_sparse_instances_recognized():
    for seed in range(100):
        n = 1 + seed % 20
        G = gen_p4_sparse(n, seed)
        assert G.n == n and is_connected(G)
        assert recognize_p4_sparse(G)


def test_p4_sparse_instances_pass_literal_scan():
    for seed in range(20):
        G = gen_p4_sparse(8, seed)
        assert brute_p4_sparse(G)


def test_bp_instances_verify_their_ordering():
    for seed in range(100):
        p = 1 + seed % 7
        q = 1 + (seed * 3) % 9
        G, so = gen_bipartite_permutation_with_ordering(p, q, seed)
        assert G.n == p + q and is_connected(G)
        assert verify_strong_ordering(G, so)


def test_bp_plain_wrapper_matches():
    G, _ = gen_bipartite_permutation_with_ordering(4, 6, 9)
    assert gen_bipartite_permutation(4, 6, 9) == G


def test_bp_labels_are_sided():
    G = gen_bipartite_permutation(3, 4, 0)
    assert sorted(G.labels) == ["x0", "x1", "x2", "y0", "y1", "y2", "y3"]


def test_sc_interval_instances_recognized():
    for seed in range(100):
        n = 1 + seed % 25
        G = gen_strongly_chordal(n, seed)
        assert G.n == n and is_connected(G)
        assert recognize_strongly_chordal(G) is not None


def test_sc_block_instances_recognized():
    for seed in range(50):
        n = 2 + seed % 20
        G = gen_strongly_chordal(n, seed, style="block")
        assert G.n == n and is_connected(G)
        assert recognize_strongly_chordal(G) is not None
    with pytest.raises(ValueError):
        gen_strongly_chordal(5, 0, style="mystery")


def test_random_connected_respects_n_and_m():
    rng = random.Random(1)
    for _ in range(40):
        n = rng.randrange(2, 15)
        max_m = n * (n - 1) // 2
        m = rng.randint(n - 1, max_m)
        G = gen_random_connected(n, m, rng.randrange(10**6))
        assert G.n == n and G.m == m and is_connected(G)
    with pytest.raises(ValueError):
        gen_random_connected(5, 3, 0)
    with pytest.raises(ValueError):
        gen_random_connected(4, 7, 0)


def test_spider_graph_fixture_structure():
    G = spider_graph(3, "thin", head=2, head_edges=((0, 1),))
    s = [G.id_of(f"s{i}") for i in (1, 2, 3)]
    c = [G.id_of(f"c{i}") for i in (1, 2, 3)]
    r = [G.id_of(f"r{i}") for i in (1, 2)]
    part = verify_spider_partition(G, s, c, r)
    assert part is not None and part.kind == "thin"
    assert G.has_edge(r[0], r[1])
    thick = spider_graph(4, "thick")
    tpart = verify_spider_partition(
        thick, [thick.id_of(f"s{i}") for i in (1, 2, 3, 4)],
        [thick.id_of(f"c{i}") for i in (1, 2, 3, 4)], [])
    assert tpart is not None and tpart.kind == "thick"


def test_spider_graph_validation():
    with pytest.raises(ValueError):
        spider_graph(1)
    with pytest.raises(ValueError):
        spider_graph(3, "fuzzy")
    with pytest.raises(ValueError):
        spider_graph(3, "thin", head=1, head_edges=((0, 5),))


def test_genspec_comment_format():
    assert (GenSpec("distance_hereditary", seed=3, n=8).comment()
            == "genspec: class=distance_hereditary seed=3 n=8")
    assert (GenSpec("bipartite_permutation", seed=0, p=4, q=5).comment()
            == "genspec: class=bipartite_permutation seed=0 p=4 q=5")
    spec = GenSpec("strongly_chordal", seed=1, n=6, params={"style": "block"})
    assert spec.comment() == "genspec: class=strongly_chordal seed=1 n=6 style=block"


def test_generate_dispatch_params():
    G = generate(GenSpec("strongly_chordal", seed=1, n=6,
                         params={"style": "block"}))
    assert G == gen_strongly_chordal(6, 1, style="block")
    with pytest.raises(ValueError):
        generate(GenSpec("mystery", seed=0, n=4))


def test_generator_validations():
    with pytest.raises(ValueError):
        gen_distance_hereditary(0, 1)
    with pytest.raises(ValueError):
        gen_p4_sparse(0, 1)
    with pytest.raises(ValueError):
        gen_bipartite_permutation(0, 3, 1)
    with pytest.raises(ValueError):
        gen_strongly_chordal(0, 1)


def test_single_vertex_edge_cases():
    assert gen_distance_hereditary(1, 0).n == 1
    assert gen_p4_sparse(1, 0).n == 1
    assert gen_strongly_chordal(1, 0).n == 1
    G = gen_bipartite_permutation(1, 1, 0)
    assert G.n == 2 and G.m == 1
