"""Shared test utilities: random graphs built by gluing legal blocks (so
every sample lies in the class by construction) and exhaustive generation of
small graphs up to isomorphism."""

import itertools
import random

import numpy as np

from oddcycle.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    crown_graph,
    cycle_graph,
    glue_at_vertex,
    path_graph,
    theta_graph,
)

BLOCK_POOL = [
    path_graph(2),
    cycle_graph(4),
    cycle_graph(6),
    complete_bipartite(2, 3),
    complete_bipartite(3, 3),
    cycle_graph(3),
    crown_graph(2),
    crown_graph(3),
    crown_graph(4),
    complete_graph(4),
    theta_graph([1, 4]),
    theta_graph([1, 6]),
    theta_graph([1, 2, 4]),
    theta_graph([1, 4, 4]),
    theta_graph([1, 2, 2, 4]),
]


def random_class_member(
    rng: random.Random, max_edges: int = 18, max_degree: int = 5
) -> Graph:
    """Glue random legal blocks at random vertices, respecting the caps."""
    pool = [b for b in BLOCK_POOL if b.m <= max_edges and b.max_degree() <= max_degree]
    g = rng.choice(pool)
    while True:
        if g.m >= max_edges or rng.random() < 0.25:
            return g
        h = rng.choice(pool)
        if g.m + h.m > max_edges:
            continue
        fits = [
            (gv, hv)
            for gv in range(g.n)
            for hv in range(h.n)
            if g.degree(gv) + h.degree(hv) <= max_degree
        ]
        if not fits:
            return g
        gv, hv = rng.choice(fits)
        g = glue_at_vertex(g, h, gv, hv)


def random_lists(rng: random.Random, sizes, universe: int = 10):
    """Random per-edge color lists of the given sizes from 1..universe."""
    return {
        e: frozenset(rng.sample(range(1, universe + 1), size))
        for e, size in sizes.items()
    }


# ---------------------------------------------------------------------------
# exhaustive small-graph generation (one representative per isomorphism class)


def _perm_lut(n: int) -> np.ndarray:
    pairs = list(itertools.combinations(range(n), 2))
    pidx = {p: i for i, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    lut = np.empty((len(perms), len(pairs)), dtype=np.int64)
    for pi, perm in enumerate(perms):
        for j, (a, b) in enumerate(pairs):
            x, y = perm[a], perm[b]
            lut[pi, j] = pidx[(x, y) if x < y else (y, x)]
    return lut


def graphs_up_to_iso(max_n: int) -> dict[int, list[int]]:
    """All graphs on exactly n vertices for n = 1..max_n, one edge-bitmask
    per isomorphism class (bit i is pair i in lexicographic order).

    Built by vertex augmentation: every graph on n vertices is some graph on
    n - 1 vertices plus one vertex with an arbitrary neighborhood. Canonical
    form is the minimum bitmask over all vertex permutations, vectorized."""
    levels: dict[int, list[int]] = {1: [0]}
    for n in range(2, max_n + 1):
        npairs = n * (n - 1) // 2
        pairs = list(itertools.combinations(range(n), 2))
        pidx = {p: i for i, p in enumerate(pairs)}
        embed = [pidx[p] for p in itertools.combinations(range(n - 1), 2)]
        lut = _perm_lut(n)
        weights = (1 << np.arange(npairs, dtype=np.int64)).astype(np.int64)
        candidates = set()
        for pm in levels[n - 1]:
            base = 0
            for i, j in enumerate(embed):
                if pm >> i & 1:
                    base |= 1 << j
            for nbrs in range(1 << (n - 1)):
                mask = base
                for v in range(n - 1):
                    if nbrs >> v & 1:
                        mask |= 1 << pidx[(v, n - 1)]
                candidates.add(mask)
        canonical = set()
        for mask in candidates:
            bits = np.array([(mask >> i) & 1 for i in range(npairs)], dtype=np.int64)
            canonical.add(int((bits[lut] @ weights).min()))
        levels[n] = sorted(canonical)
    return levels


def mask_to_graph(n: int, mask: int) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    return Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w, _ in g.adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def connected_labeled_graphs(n: int):
    """Every connected graph on exactly the labeled vertex set 0..n-1."""
    all_pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(all_pairs)):
        g = Graph.from_edges(
            n, [all_pairs[i] for i in range(len(all_pairs)) if bits >> i & 1]
        )
        if is_connected(g):
            yield g
