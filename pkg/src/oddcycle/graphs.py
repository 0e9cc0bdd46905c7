"""Simple undirected graphs with canonical edge ids, plus the structural
primitives everything else is built on: block decomposition, bipartiteness,
line graphs, and bounded odd-cycle enumeration.

Edge ids are positions in the lexicographically sorted edge list and are
stable: every certificate, orientation, and coloring downstream refers to
these ids.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    ContractViolation,
    EnumerationBudgetError,
    GraphParseError,
    GraphValidationError,
)

__all__ = [
    "Graph",
    "BlockDecomposition",
    "LineGraphMap",
    "parse_graph",
    "serialize_graph",
    "blocks",
    "bipartition",
    "line_graph",
    "odd_cycles",
    "subgraph_on_edges",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "complete_bipartite",
    "star_graph",
    "theta_graph",
    "crown_graph",
    "bowtie_graph",
    "diamond_graph",
    "glue_at_vertex",
]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``edges[i]`` is the endpoint pair of edge i."""

    n: int
    edges: tuple[tuple[int, int], ...]
    # adj[v] = tuple of (neighbor, edge id), sorted by neighbor
    adj: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False, compare=False)

    @staticmethod
    def from_edges(n: int, pairs) -> "Graph":
        canon = []
        seen = set()
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"vertex out of range in edge ({u}, {v})")
            if u == v:
                raise GraphValidationError(f"loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphValidationError(f"duplicate edge {e}")
            seen.add(e)
            canon.append(e)
        canon.sort()
        adj = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(canon):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return Graph(n, tuple(canon), tuple(tuple(sorted(a)) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def incident(self, v: int) -> tuple[int, ...]:
        """Edge ids at v, sorted."""
        return tuple(sorted(eid for _, eid in self.adj[v]))

    def edge_id(self, u: int, v: int) -> int:
        for nbr, eid in self.adj[u]:
            if nbr == v:
                return eid
        raise KeyError(f"no edge ({u}, {v})")

    def has_edge(self, u: int, v: int) -> bool:
        return any(nbr == v for nbr, _ in self.adj[u])

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        if v == u:
            return w
        if v == w:
            return u
        raise KeyError(f"edge {eid} not incident to vertex {v}")


# ---------------------------------------------------------------------------
# parsing and serialization


def _parse_edgelist(text: str, n: int | None) -> Graph:
    pairs = []
    max_v = -1
    offset = 0
    for line in text.splitlines(keepends=True):
        stripped = line.strip()
        if stripped:
            tokens = stripped.split()
            if len(tokens) != 2:
                raise GraphParseError(f"expected 'u v', got {stripped!r}", offset)
            try:
                u, v = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise GraphParseError(f"non-integer vertex in {stripped!r}", offset)
            if u < 0 or v < 0:
                raise GraphParseError("negative vertex id", offset)
            pairs.append((u, v))
            max_v = max(max_v, u, v)
        offset += len(line.encode())
    if n is None:
        n = max_v + 1
    return Graph.from_edges(n, pairs)


_G6_MAX = 62  # single-byte vertex count; larger graphs are out of scope


def _parse_graph6(text: str) -> Graph:
    data = text.strip()
    base = 0
    if data.startswith(">>graph6<<"):
        base = len(">>graph6<<")
        data = data[base:]
    if not data:
        raise GraphParseError("empty graph6 string", base)
    n = ord(data[0]) - 63
    if not (0 <= n <= _G6_MAX):
        raise GraphParseError(f"unsupported vertex count byte {data[0]!r}", base)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[1:]
    if len(body) < need:
        raise GraphParseError("graph6 string truncated", base + len(data))
    if body[need:].strip():
        raise GraphParseError("trailing data after graph6 string", base + 1 + need)
    bits = []
    for i, ch in enumerate(body[:need]):
        val = ord(ch) - 63
        if not (0 <= val < 64):
            raise GraphParseError(f"invalid graph6 byte {ch!r}", base + 1 + i)
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    return Graph.from_edges(n, pairs)


def parse_graph(text: str, format: str = "edgelist", n: int | None = None) -> Graph:
    """Parse graph text. ``format`` is 'graph6' or 'edgelist' ('u v' lines)."""
    if format == "edgelist":
        return _parse_edgelist(text, n)
    if format == "graph6":
        return _parse_graph6(text)
    raise GraphParseError(f"unknown format {format!r}", 0)


def serialize_graph(g: Graph, format: str = "edgelist") -> str:
    if format == "edgelist":
        return "".join(f"{u} {v}\n" for u, v in g.edges)
    if format == "graph6":
        if g.n > _G6_MAX:
            raise GraphValidationError(f"graph6 writer limited to {_G6_MAX} vertices")
        present = {(u, v) for u, v in g.edges}
        bits = []
        for j in range(1, g.n):
            for i in range(j):
                bits.append(1 if (i, j) in present else 0)
        while len(bits) % 6:
            bits.append(0)
        out = [chr(g.n + 63)]
        for k in range(0, len(bits), 6):
            val = 0
            for b in bits[k : k + 6]:
                val = (val << 1) | b
            out.append(chr(val + 63))
        return "".join(out)
    raise GraphValidationError(f"unknown format {format!r}")


# ---------------------------------------------------------------------------
# block decomposition


@dataclass(frozen=True)
class BlockDecomposition:
    """Biconnected components. Blocks partition the edge set; bridges are
    single-edge blocks. ``tree`` holds (block index, cut vertex) incidences
    of the block-cut tree."""

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    tree: tuple[tuple[int, int], ...]

    def block_vertices(self, g: Graph, i: int) -> frozenset[int]:
        return frozenset(v for eid in self.blocks[i] for v in g.edges[eid])

    def blocks_at(self, g: Graph, v: int) -> list[int]:
        return [i for i in range(len(self.blocks)) if v in self.block_vertices(g, i)]


def blocks(g: Graph) -> BlockDecomposition:
    """Iterative Hopcroft-Tarjan biconnected component decomposition."""
    disc = [-1] * g.n
    low = [0] * g.n
    timer = itertools.count()
    edge_stack: list[int] = []
    out_blocks: list[frozenset[int]] = []
    cuts: set[int] = set()

    for root in range(g.n):
        if disc[root] != -1 or not g.adj[root]:
            continue
        disc[root] = low[root] = next(timer)
        root_children = 0
        # frames: (vertex, parent edge id, iterator over adj)
        stack = [(root, -1, iter(g.adj[root]))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for w, eid in it:
                if eid == pe:
                    continue
                if disc[w] == -1:
                    edge_stack.append(eid)
                    disc[w] = low[w] = next(timer)
                    stack.append((w, eid, iter(g.adj[w])))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    # back edge to an ancestor
                    edge_stack.append(eid)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    # u separates the subtree at v: pop one block
                    blk = set()
                    while True:
                        eid = edge_stack.pop()
                        blk.add(eid)
                        if eid == pe:
                            break
                    out_blocks.append(frozenset(blk))
                    if u != root or root_children > 1:
                        cuts.add(u)
        if root_children > 1:
            cuts.add(root)

    out_blocks.sort(key=lambda b: sorted(b))
    tree = []
    for i, blk in enumerate(out_blocks):
        verts = {v for eid in blk for v in g.edges[eid]}
        for z in sorted(verts & cuts):
            tree.append((i, z))
    return BlockDecomposition(tuple(out_blocks), frozenset(cuts), tuple(tree))


# ---------------------------------------------------------------------------
# bipartiteness


def bipartition(g: Graph) -> tuple[int, ...] | None:
    """BFS 2-coloring: per-vertex side in {0, 1}, or None if an odd cycle exists."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w, _ in g.adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return tuple(color)


# ---------------------------------------------------------------------------
# line graph


@dataclass(frozen=True)
class LineGraphMap:
    """Adjacency structure of L(G): vertices are G-edge ids; two ids are
    adjacent iff the edges share an endpoint. ``clique_of[v]`` lists the edge
    ids at G-vertex v (the vertex cliques of L(G))."""

    m: int
    pairs: tuple[tuple[int, int], ...]
    clique_of: tuple[tuple[int, ...], ...]
    neighbors: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)


def line_graph(g: Graph) -> LineGraphMap:
    pairs = set()
    cliques = []
    nbrs: list[set[int]] = [set() for _ in range(g.m)]
    for v in range(g.n):
        inc = g.incident(v)
        cliques.append(inc)
        for a, b in itertools.combinations(inc, 2):
            pairs.add((a, b))
            nbrs[a].add(b)
            nbrs[b].add(a)
    return LineGraphMap(
        g.m,
        tuple(sorted(pairs)),
        tuple(cliques),
        tuple(tuple(sorted(s)) for s in nbrs),
    )


# ---------------------------------------------------------------------------
# odd cycle enumeration


def odd_cycles(g: Graph, max_count: int = 20000) -> list[frozenset[int]]:
    """All simple odd cycles, each as its edge-id set.

    Exponential: intended for oracle-scale graphs (roughly <= 16 vertices).
    Cycles are deduplicated by rooting at their smallest vertex and fixing a
    traversal direction. Raises EnumerationBudgetError past ``max_count``.
    """
    found: list[frozenset[int]] = []
    path: list[int] = []
    on_path = [False] * g.n

    def extend(root: int, v: int) -> None:
        for w, eid in g.adj[v]:
            if w == root and len(path) >= 3:
                if path[1] < path[-1]:  # one direction per cycle
                    if len(path) % 2 == 1:
                        cyc = {eid}
                        for a, b in zip(path, path[1:]):
                            cyc.add(g.edge_id(a, b))
                        found.append(frozenset(cyc))
                        if len(found) > max_count:
                            raise EnumerationBudgetError(
                                "too many odd cycles", max_count
                            )
            elif w > root and not on_path[w]:
                path.append(w)
                on_path[w] = True
                extend(root, w)
                path.pop()
                on_path[w] = False

    for root in range(g.n):
        path.append(root)
        on_path[root] = True
        extend(root, root)
        path.pop()
        on_path[root] = False
    return found


# ---------------------------------------------------------------------------
# subgraphs and builders


def subgraph_on_edges(g: Graph, edge_ids) -> tuple[Graph, dict[int, int], dict[int, int]]:
    """Subgraph induced by an edge set, with relabeled vertices.

    Returns (subgraph, vertex map original->sub, edge map sub id->original id).
    """
    eids = sorted(edge_ids)
    verts = sorted({v for eid in eids for v in g.edges[eid]})
    vmap = {v: i for i, v in enumerate(verts)}
    pairs = [(vmap[g.edges[eid][0]], vmap[g.edges[eid][1]]) for eid in eids]
    sub = Graph.from_edges(len(verts), pairs)
    emap = {}
    for eid in eids:
        u, v = g.edges[eid]
        emap[sub.edge_id(vmap[u], vmap[v])] = eid
    return sub, vmap, emap


def path_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphValidationError("cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, itertools.combinations(range(k), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(k: int) -> Graph:
    """Center 0 joined to k leaves."""
    return Graph.from_edges(k + 1, [(0, i + 1) for i in range(k)])


def theta_graph(lengths) -> Graph:
    """Two hub vertices 0 and 1 joined by internally disjoint paths with the
    given edge counts. A length-1 entry is the direct hub edge (at most one)."""
    lengths = list(lengths)
    if any(p < 1 for p in lengths):
        raise GraphValidationError("path lengths must be positive")
    if sum(1 for p in lengths if p == 1) > 1:
        raise GraphValidationError("at most one unit path in a simple graph")
    if sum(1 for p in lengths if p == 2) > 1 and len(lengths) >= 2:
        pass  # multiple length-2 paths are fine (crown graphs)
    pairs = []
    nxt = 2
    for p in lengths:
        if p == 1:
            pairs.append((0, 1))
            continue
        prev = 0
        for _ in range(p - 1):
            pairs.append((prev, nxt))
            prev = nxt
            nxt += 1
        pairs.append((prev, 1))
    return Graph.from_edges(nxt, pairs)


def crown_graph(r: int) -> Graph:
    """K2 joined to r independent vertices: hubs 0, 1 and tips 2..r+1.
    Equals a theta graph with one unit path and r paths of length 2."""
    pairs = [(0, 1)]
    for i in range(r):
        pairs.append((0, 2 + i))
        pairs.append((1, 2 + i))
    return Graph.from_edges(r + 2, pairs)


def diamond_graph() -> Graph:
    return crown_graph(2)


def bowtie_graph() -> Graph:
    """Two triangles sharing vertex 0."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def glue_at_vertex(g: Graph, h: Graph, gv: int, hv: int) -> Graph:
    """Disjoint union of g and h with h's vertex ``hv`` identified with g's
    vertex ``gv``. Vertices of h keep their relative order."""
    if not (0 <= gv < g.n and 0 <= hv < h.n):
        raise ContractViolation("glue vertex out of range")
    hmap = {}
    nxt = g.n
    for v in range(h.n):
        if v == hv:
            hmap[v] = gv
        else:
            hmap[v] = nxt
            nxt += 1
    pairs = list(g.edges) + [(hmap[u], hmap[v]) for u, v in h.edges]
    return Graph.from_edges(nxt, pairs)
