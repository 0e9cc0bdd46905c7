import itertools
import random

import pytest

from helpers import random_class_member, random_lists
from oddcycle.errors import ClassificationError, DemandError, KernelAbsenceError
from oddcycle.graphs import (
    Graph,
    bowtie_graph,
    complete_graph,
    cycle_graph,
    diamond_graph,
    line_graph,
    path_graph,
    star_graph,
    theta_graph,
)
from oddcycle.color import (
    bbs_color,
    choose_edges,
    diamond_color,
    find_kernel,
    tuple_color,
    validate_edge_coloring,
)
from oddcycle.orient import LineDigraph, orient_graph, orient_k4, orient_theta
from oddcycle.verify import triple_diamond_graph


def triangle_digraph(arcs):
    # L(K_{1,3}) is a triangle on edge ids 0, 1, 2
    return LineDigraph(line_graph(star_graph(3)), frozenset(arcs))


# ---------------------------------------------------------------------------
# kernels


def test_kernel_single_vertex():
    g = path_graph(3)
    d = LineDigraph(line_graph(g), frozenset({(0, 1)}))
    assert find_kernel(d, {0}) == frozenset({0})


def test_kernel_directed_triangle_absent():
    d = triangle_digraph({(0, 1), (1, 2), (2, 0)})
    with pytest.raises(KernelAbsenceError) as exc:
        find_kernel(d, {0, 1, 2})
    assert exc.value.subset == frozenset({0, 1, 2})


def test_kernel_transitive_triangle():
    d = triangle_digraph({(0, 1), (0, 2), (1, 2)})
    assert find_kernel(d, {0, 1, 2}) == frozenset({2})


def test_kernel_with_certificate_matches_validity():
    rng = random.Random(19)
    for _ in range(20):
        g = random_class_member(rng, max_edges=12)
        t = max(4, g.max_degree())
        d, cert = orient_graph(g, t)
        edges = list(range(g.m))
        z = frozenset(rng.sample(edges, rng.randint(1, len(edges))))
        k = find_kernel(d, z, cert)
        # independent and absorbing within z
        for e in k:
            assert not set(d.base.neighbors[e]) & k
        for e in z - k:
            assert set(d.out_neighbors(e)) & k


# ---------------------------------------------------------------------------
# kernel induction coloring


def test_bbs_disjoint_lists_path():
    g = path_graph(3)
    d = LineDigraph(line_graph(g), frozenset({(0, 1)}))
    got = bbs_color(g, d, {0: {1}, 1: {2}})
    assert got == {0: 1, 1: 2}


def test_bbs_k4_four_lists():
    g = complete_graph(4)
    d = orient_k4(g, 3)
    lists = {e: {1, 2, 3, 4} for e in range(6)}
    got = bbs_color(g, d, lists)
    validate_edge_coloring(g, got, lists)


def test_bbs_c5_three_lists():
    g = theta_graph([1, 4])
    d = orient_theta(g, 0, 3)
    lists = {e: {1, 2, 3} for e in range(5)}
    got = bbs_color(g, d, lists)
    validate_edge_coloring(g, got, lists)


def test_bbs_demand_error_names_edge():
    # identical singleton lists on adjacent edges cannot work: the kernel
    # takes one edge and the other runs out of colors
    g = path_graph(3)
    d = LineDigraph(line_graph(g), frozenset({(0, 1)}))
    with pytest.raises(DemandError) as exc:
        bbs_color(g, d, {0: {1}, 1: {1}})
    assert exc.value.edge in (0, 1)


def test_bbs_tight_lists_random():
    rng = random.Random(4)
    for _ in range(500):
        g = random_class_member(rng, max_edges=14)
        t = max(4, g.max_degree())
        d, _ = orient_graph(g, t)
        lists = random_lists(rng, {e: d.outdeg(e) + 1 for e in range(g.m)})
        got = bbs_color(g, d, lists)
        validate_edge_coloring(g, got, lists)


# ---------------------------------------------------------------------------
# tuple coloring


def test_tuple_m1_matches_bbs():
    rng = random.Random(14)
    for _ in range(20):
        g = random_class_member(rng, max_edges=12)
        t = max(4, g.max_degree())
        d, _ = orient_graph(g, t)
        lists = random_lists(rng, {e: d.outdeg(e) + 1 for e in range(g.m)})
        single = bbs_color(g, d, lists)
        tup = tuple_color(g, d, lists, 1)
        assert {e: frozenset({c}) for e, c in single.items()} == tup


def test_tuple_bowtie_pairs():
    g = bowtie_graph()
    d, _ = orient_graph(g, 4)
    rng = random.Random(100)
    lists = random_lists(rng, {e: 2 * (d.outdeg(e) + 1) for e in range(g.m)}, universe=12)
    lists = {e: frozenset(sorted(lists[e])[:8]) if len(lists[e]) > 8 else lists[e] for e in lists}
    got = tuple_color(g, d, lists, 2)
    for e in range(g.m):
        assert len(got[e]) == 2
    validate_edge_coloring(g, got, lists, tuples=True)


def test_tuple_single_edge():
    g = path_graph(2)
    d = LineDigraph(line_graph(g), frozenset())
    got = tuple_color(g, d, {0: {1, 2, 3}}, 3)
    assert got == {0: frozenset({1, 2, 3})}


# ---------------------------------------------------------------------------
# the anchored diamond
#
# canonical diamond edge ids: 0 = hub edge, 1 and 3 touch tip vertex 2,
# 2 and 4 touch tip vertex 3; matchings are {1, 4} and {3, 2}


def d_lists(e1, e2, h, f1, f2):
    return {0: set(h), 1: set(e1), 2: set(f2), 3: set(e2), 4: set(f1)}


def test_diamond_shared_matching_color():
    lists = d_lists(e1={1, 2}, f1={1, 4, 5}, e2={2, 3}, f2={4, 5, 6}, h={5, 6, 7})
    got = diamond_color(lists)
    validate_edge_coloring(diamond_graph(), got, lists)
    assert got[1] == got[4] == 1  # the shared color lands on the matching


def test_diamond_disjoint_matchings():
    lists = d_lists(
        e1={1, 2}, f1={3, 4, 5}, e2={1, 3}, f2={2, 4, 5}, h={1, 3, 6}
    )
    got = diamond_color(lists)
    validate_edge_coloring(diamond_graph(), got, lists)
    assert got[0] not in {1, 2}  # hub color avoids the first tip list


def test_diamond_demand_error():
    lists = d_lists(e1={1}, f1={3, 4, 5}, e2={1, 3}, f2={2, 4, 5}, h={1, 3, 6})
    with pytest.raises(DemandError):
        diamond_color(lists)


def test_diamond_oversized_lists_ok():
    rng = random.Random(3)
    g = diamond_graph()
    for _ in range(200):
        lists = {
            0: rng.sample(range(1, 11), rng.randint(3, 6)),
            1: rng.sample(range(1, 11), rng.randint(2, 6)),
            2: rng.sample(range(1, 11), rng.randint(3, 6)),
            3: rng.sample(range(1, 11), rng.randint(2, 6)),
            4: rng.sample(range(1, 11), rng.randint(3, 6)),
        }
        got = diamond_color(lists)
        validate_edge_coloring(g, got, lists)


def test_diamond_disjoint_case_leftover_shapes():
    # after the hub edge takes a color outside the first tip list, the
    # leftover 4-cycle lists shrink to one of two shapes, each served by its
    # own orientation: all sizes still >= 2, or sizes >= (2, 1, 2, 3) when
    # the hub color sat in the second tip list
    hub_in_e2 = d_lists(e1={1, 2}, f1={3, 4, 5}, e2={3, 6}, f2={1, 2, 7}, h={3, 4, 5})
    got = diamond_color(hub_in_e2)
    validate_edge_coloring(diamond_graph(), got, hub_in_e2)
    assert got[0] == 3  # lowest hub color outside {1,2} lands on the hub edge
    assert got[3] == 6  # the second tip edge is left with exactly one color

    hub_in_f2 = d_lists(e1={1, 2}, f1={3, 4, 5}, e2={6, 7}, f2={1, 3, 4}, h={3, 4, 5})
    got = diamond_color(hub_in_f2)
    validate_edge_coloring(diamond_graph(), got, hub_in_f2)
    assert got[0] == 3


def test_diamond_exhaustive_small_universe():
    # every assignment with sizes (2,2,3,3,3) over colors 1..5
    g = diamond_graph()
    twos = list(itertools.combinations(range(1, 6), 2))
    threes = list(itertools.combinations(range(1, 6), 3))
    count = 0
    for e1 in twos:
        for e2 in twos:
            for h in threes:
                for f1 in threes:
                    for f2 in threes:
                        lists = d_lists(e1, e2, h, f1, f2)
                        got = diamond_color(lists)
                        count += 1
                        validate_edge_coloring(g, got, lists)
    assert count == len(twos) ** 2 * len(threes) ** 3


# ---------------------------------------------------------------------------
# the top-level solver


def test_choose_even_cycle_two_lists():
    g = cycle_graph(6)
    lists = {e: {e % 2 + 1, 3} for e in range(6)}
    got = choose_edges(g, lists)
    validate_edge_coloring(g, got, lists)


def test_choose_odd_cycle_three_lists():
    g = cycle_graph(5)
    lists = {e: {1, 2, 3} for e in range(5)}
    got = choose_edges(g, lists)
    validate_edge_coloring(g, got, lists)


def test_choose_odd_cycle_rejects_two_lists():
    g = cycle_graph(5)
    with pytest.raises(DemandError):
        choose_edges(g, {e: {1, 2} for e in range(5)})


def test_choose_k4_three_lists():
    g = complete_graph(4)
    rng = random.Random(8)
    for _ in range(50):
        lists = {e: frozenset(rng.sample(range(1, 8), 3)) for e in range(6)}
        got = choose_edges(g, lists)
        validate_edge_coloring(g, got, lists)


def test_choose_triple_diamond_three_lists():
    # subcubic, forces the anchored-diamond case analysis at every tip
    g = triple_diamond_graph()
    rng = random.Random(12)
    for _ in range(25):
        lists = {e: frozenset(rng.sample(range(1, 9), 3)) for e in range(g.m)}
        got = choose_edges(g, lists)
        validate_edge_coloring(g, got, lists)


def test_choose_rejects_outside_class():
    with pytest.raises(ClassificationError):
        choose_edges(complete_graph(5), {e: {1, 2, 3, 4} for e in range(10)})


def test_choose_random_members_never_fail():
    rng = random.Random(21)
    for _ in range(60):
        g = random_class_member(rng, max_edges=16)
        comp_sizes = {}
        # per-edge requirement: the component's chromatic index
        from oddcycle.color import _component_subgraphs, _required_list_size

        for comp, _, emap in _component_subgraphs(g):
            need = _required_list_size(comp)
            for se, oe in emap.items():
                comp_sizes[oe] = need
        lists = random_lists(rng, comp_sizes, universe=10)
        got = choose_edges(g, lists)
        validate_edge_coloring(g, got, lists)


def test_choose_disconnected_mixture():
    base = cycle_graph(5)
    extra = Graph.from_edges(
        base.n + 4,
        list(base.edges) + [(5, 6), (6, 7), (7, 8), (8, 5)],
    )
    lists = {e: {1, 2, 3} for e in range(5)}
    lists.update({e: {1, 2} for e in range(5, 9)})
    got = choose_edges(extra, lists)
    validate_edge_coloring(extra, got, lists)
