import random

import networkx as nx
import pytest

from oddcycle.errors import (
    EnumerationBudgetError,
    GraphParseError,
    GraphValidationError,
)
from oddcycle.graphs import (
    Graph,
    bipartition,
    blocks,
    bowtie_graph,
    complete_graph,
    crown_graph,
    cycle_graph,
    line_graph,
    odd_cycles,
    parse_graph,
    path_graph,
    serialize_graph,
    star_graph,
    subgraph_on_edges,
    theta_graph,
)


def random_graph(rng, n, p):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, pairs)


# ---------------------------------------------------------------------------
# parsing


def test_parse_edgelist_path():
    g = parse_graph("0 1\n1 2")
    assert g.n == 3 and g.m == 2
    assert g.edges == ((0, 1), (1, 2))


def test_parse_loop_rejected():
    with pytest.raises(GraphValidationError):
        parse_graph("0 0")


def test_parse_duplicate_rejected():
    with pytest.raises(GraphValidationError):
        parse_graph("0 1\n1 0")


def test_parse_error_reports_offset():
    with pytest.raises(GraphParseError) as exc:
        parse_graph("0 1\nbad line\n")
    assert exc.value.offset == 4


def test_graph6_c5_matches_reference_encoder():
    # frozen from networkx.to_graph6_bytes(nx.cycle_graph(5))
    assert serialize_graph(cycle_graph(5), "graph6") == "Dhc"
    g = parse_graph("Dhc", "graph6")
    assert g.n == 5 and g.m == 5
    assert all(g.degree(v) == 2 for v in range(5))


def test_graph6_header_accepted():
    g = parse_graph(">>graph6<<Dhc", "graph6")
    assert g.m == 5


def test_graph6_trailing_data_rejected():
    with pytest.raises(GraphParseError):
        parse_graph("Dhc\nDhc", "graph6")


def test_graph6_roundtrip_against_networkx():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.random())
        s = serialize_graph(g, "graph6")
        h = nx.from_graph6_bytes(s.encode())
        assert set(h.edges()) == {tuple(e) for e in g.edges}
        assert parse_graph(s, "graph6") == g


def test_roundtrip_both_formats():
    rng = random.Random(3)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 12), 0.4)
        for fmt in ("edgelist", "graph6"):
            if fmt == "edgelist" and g.m == 0:
                continue  # edge lists cannot carry isolated vertices
            assert parse_graph(serialize_graph(g, fmt), fmt, n=g.n) == g


# ---------------------------------------------------------------------------
# blocks


def test_blocks_bowtie():
    d = blocks(bowtie_graph())
    assert len(d.blocks) == 2
    assert d.cut_vertices == frozenset({0})


def test_blocks_cycle_single_block():
    d = blocks(cycle_graph(6))
    assert len(d.blocks) == 1
    assert not d.cut_vertices


def test_blocks_path_all_bridges():
    d = blocks(path_graph(4))
    assert len(d.blocks) == 3
    assert all(len(b) == 1 for b in d.blocks)
    assert d.cut_vertices == frozenset({1, 2})


def test_blocks_edgeless():
    d = blocks(Graph.from_edges(3, []))
    assert d.blocks == ()


def test_blocks_match_networkx():
    rng = random.Random(11)
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 11), rng.uniform(0.1, 0.6))
        h = nx.Graph(list(g.edges))
        h.add_nodes_from(range(g.n))
        want_blocks = {
            frozenset(g.edge_id(u, v) for u, v in comp if len(comp) >= 1)
            for comp in (
                {tuple(sorted(e)) for e in c} for c in nx.biconnected_component_edges(h)
            )
        }
        d = blocks(g)
        assert set(d.blocks) == want_blocks
        assert d.cut_vertices == frozenset(nx.articulation_points(h))


def test_block_tree_shape():
    # vertex count rule: v lies in exactly one block iff v is not a cut vertex
    rng = random.Random(5)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 10), 0.35)
        d = blocks(g)
        for v in range(g.n):
            if not g.adj[v]:
                continue
            cnt = len(d.blocks_at(g, v))
            assert (cnt == 1) == (v not in d.cut_vertices)


# ---------------------------------------------------------------------------
# bipartition


def test_bipartition_even_cycle():
    col = bipartition(cycle_graph(6))
    assert col is not None
    assert col == (0, 1, 0, 1, 0, 1)


def test_bipartition_odd_cycle_absent():
    assert bipartition(cycle_graph(5)) is None


def test_bipartition_theta_124_absent():
    # the unit path plus the length-2 path closes a triangle
    assert bipartition(theta_graph([1, 2, 4])) is None


# ---------------------------------------------------------------------------
# line graph


def test_line_graph_star_is_triangle():
    lg = line_graph(star_graph(3))
    assert lg.m == 3
    assert lg.pairs == ((0, 1), (0, 2), (1, 2))


def test_line_graph_c4_is_c4():
    lg = line_graph(cycle_graph(4))
    assert lg.m == 4
    assert len(lg.pairs) == 4
    assert all(len(lg.neighbors[e]) == 2 for e in range(4))


def test_line_graph_k4_counts():
    lg = line_graph(complete_graph(4))
    assert lg.m == 6
    assert len(lg.pairs) == 12  # 4 vertices x C(3,2) incident pairs
    assert all(len(lg.neighbors[e]) == 4 for e in range(6))


def test_line_graph_degree_identity():
    rng = random.Random(2)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 10), 0.45)
        lg = line_graph(g)
        for eid, (u, v) in enumerate(g.edges):
            assert len(lg.neighbors[eid]) == g.degree(u) + g.degree(v) - 2


def test_line_graph_cliques_cover_pairs():
    rng = random.Random(9)
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 9), 0.5)
        lg = line_graph(g)
        from_cliques = set()
        for clique in lg.clique_of:
            for i, a in enumerate(clique):
                for b in clique[i + 1 :]:
                    from_cliques.add((a, b))
        assert from_cliques == set(lg.pairs)


# ---------------------------------------------------------------------------
# odd cycles


def test_odd_cycles_bipartite_empty():
    assert odd_cycles(cycle_graph(6)) == []


def test_odd_cycles_k4_triangles():
    cycles = odd_cycles(complete_graph(4))
    assert len(cycles) == 4
    assert all(len(c) == 3 for c in cycles)


def test_odd_cycles_theta_124():
    lens = sorted(len(c) for c in odd_cycles(theta_graph([1, 2, 4])))
    assert lens == [3, 5]  # paths 1+2 and 1+4; 2+4 closes an even cycle


@pytest.mark.parametrize("k", range(1, 8))
def test_odd_cycle_graph_has_one_cycle(k):
    cycles = odd_cycles(cycle_graph(2 * k + 1))
    assert len(cycles) == 1
    assert len(cycles[0]) == 2 * k + 1


def test_odd_cycles_match_networkx_counts():
    rng = random.Random(13)
    for _ in range(20):
        g = random_graph(rng, rng.randint(3, 8), 0.5)
        h = nx.Graph(list(g.edges))
        want = sum(1 for c in nx.simple_cycles(h) if len(c) % 2 == 1)
        assert len(odd_cycles(g)) == want


def test_odd_cycles_budget():
    with pytest.raises(EnumerationBudgetError) as exc:
        odd_cycles(complete_graph(7), max_count=10)
    assert exc.value.bound == 10


# ---------------------------------------------------------------------------
# helpers


def test_subgraph_on_edges_maps_back():
    g = bowtie_graph()
    d = blocks(g)
    blk = sorted(d.blocks, key=sorted)[1]
    sub, vmap, emap = subgraph_on_edges(g, blk)
    assert sub.n == 3 and sub.m == 3
    inv = {b: a for a, b in vmap.items()}
    for sub_eid, orig_eid in emap.items():
        u, v = sub.edges[sub_eid]
        assert tuple(sorted((inv[u], inv[v]))) == g.edges[orig_eid]


def test_crown_is_theta_of_twos():
    g = crown_graph(3)
    assert g.n == 5 and g.m == 7
    assert g.degree(0) == g.degree(1) == 4
    assert all(g.degree(v) == 2 for v in (2, 3, 4))
