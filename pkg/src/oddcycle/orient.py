"""Kernel-perfect orientations of line graphs meeting per-edge outdegree
demands.

Everything here builds an orientation of L(G) in which each adjacent pair of
G-edges carries one or both arcs (2-cycles are deliberately allowed). The
demand on an edge e is an integer cap: the constructed orientation satisfies
outdeg(e) <= cap(e) - 1. Two demand shapes are used:

* uniform t: cap t on every edge;
* anchored (k, v): cap d(v) on edges at the anchor vertex v, cap k elsewhere.

Per-block constructions (bipartite coloring order, a fixed table for K4,
crown and theta builds) are assembled across the block tree by directing all
line-graph edges between two blocks from the outer block to the inner one,
which preserves kernel-perfectness and the outdegree accounting.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    AssemblyError,
    ClassificationError,
    ContractViolation,
)
from .graphs import (
    Graph,
    LineGraphMap,
    bipartition,
    blocks,
    complete_graph,
    crown_graph,
    line_graph,
    subgraph_on_edges,
)
from .recognize import (
    BIPARTITE,
    CROWN,
    K4,
    THETA_ONE_EVEN,
    classify_block,
    classify_graph,
    recognize_theta,
)

__all__ = [
    "LineDigraph",
    "DemandFunction",
    "CertLeaf",
    "CertSplit",
    "konig_edge_color",
    "orient_bipartite",
    "orient_k4",
    "orient_crown",
    "orient_crown_bridge",
    "orient_crown_tip",
    "orient_theta",
    "orient_strong",
    "compose_blocks",
    "orient_graph",
]


# ---------------------------------------------------------------------------
# composition certificates


@dataclass(frozen=True)
class CertLeaf:
    """One block oriented by a named construction."""

    construction: str
    edges: frozenset[int]

    def to_json(self) -> dict:
        return {"leaf": self.construction, "edges": sorted(self.edges)}


@dataclass(frozen=True)
class CertSplit:
    """Edge partition with every crossing line-graph edge oriented from the
    y side into the x side. ``cut_vertex`` is set for block-tree joins."""

    x_child: "CertLeaf | CertSplit"
    y_child: "CertLeaf | CertSplit"
    cut_vertex: int | None = None

    @property
    def x_edges(self) -> frozenset[int]:
        return self.x_child.edges

    @property
    def y_edges(self) -> frozenset[int]:
        return self.y_child.edges

    @property
    def edges(self) -> frozenset[int]:
        return self.x_edges | self.y_edges

    def to_json(self) -> dict:
        out = {
            "x": self.x_child.to_json(),
            "y": self.y_child.to_json(),
        }
        if self.cut_vertex is not None:
            out["cut_vertex"] = self.cut_vertex
        return out


Certificate = CertLeaf | CertSplit


def _lift_cert(cert: Certificate, emap: dict[int, int]) -> Certificate:
    if isinstance(cert, CertLeaf):
        return CertLeaf(cert.construction, frozenset(emap[e] for e in cert.edges))
    return CertSplit(
        _lift_cert(cert.x_child, emap), _lift_cert(cert.y_child, emap), cert.cut_vertex
    )


# ---------------------------------------------------------------------------
# line digraphs and demands


@dataclass(frozen=True)
class LineDigraph:
    """An orientation of L(G): ``arcs`` holds ordered pairs of adjacent
    G-edge ids; both directions may be present for the same pair."""

    base: LineGraphMap
    arcs: frozenset[tuple[int, int]]
    certificate: Certificate | None = field(default=None, compare=False)
    out_map: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        outs: list[list[int]] = [[] for _ in range(self.base.m)]
        domain = set(self.base.pairs)
        covered = set()
        for e, f in self.arcs:
            key = (e, f) if e < f else (f, e)
            if key not in domain:
                raise ContractViolation(f"arc ({e}, {f}) joins non-adjacent edges")
            covered.add(key)
            outs[e].append(f)
        if covered != domain:
            missing = sorted(domain - covered)[0]
            raise ContractViolation(f"pair {missing} left unoriented")
        object.__setattr__(self, "out_map", tuple(tuple(sorted(o)) for o in outs))

    def outdeg(self, e: int) -> int:
        return len(self.out_map[e])

    def out_neighbors(self, e: int) -> tuple[int, ...]:
        return self.out_map[e]

    def max_outdeg(self) -> int:
        return max((len(o) for o in self.out_map), default=0)

    def bidirected_pairs(self) -> list[tuple[int, int]]:
        return [(e, f) for e, f in self.base.pairs if (e, f) in self.arcs and (f, e) in self.arcs]

    def to_json(self) -> dict:
        out = {"arcs": sorted(self.arcs)}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


@dataclass(frozen=True)
class DemandFunction:
    """Per-edge cap: constructed orientations satisfy outdeg(e) <= value - 1."""

    kind: str
    values: tuple[int, ...]
    k: int
    v: int | None = None

    @staticmethod
    def uniform(g: Graph, t: int) -> "DemandFunction":
        return DemandFunction("uniform", tuple(t for _ in range(g.m)), t)

    @staticmethod
    def at_vertex(g: Graph, k: int, v: int) -> "DemandFunction":
        vals = tuple(
            g.degree(v) if v in g.edges[e] else k for e in range(g.m)
        )
        return DemandFunction("anchored", vals, k, v)

    def cap(self, e: int) -> int:
        return self.values[e] - 1

    def check(self, d: LineDigraph) -> None:
        for e in range(len(self.values)):
            if d.outdeg(e) > self.cap(e):
                raise AssemblyError(
                    f"outdegree {d.outdeg(e)} exceeds cap {self.cap(e)}", e
                )


def _make(g: Graph, arcs, cert: Certificate | None = None) -> LineDigraph:
    return LineDigraph(line_graph(g), frozenset(arcs), cert)


# ---------------------------------------------------------------------------
# bipartite blocks: proper edge coloring turned into a linear order per vertex


def konig_edge_color(g: Graph, v: int | None = None) -> dict[int, int]:
    """Proper edge coloring of a bipartite graph with max-degree many colors.

    When ``v`` is given, colors are permuted afterwards so the edges at v use
    exactly 1..d(v). Colors are 1-based.
    """
    if bipartition(g) is None:
        raise ContractViolation("graph is not bipartite")
    delta = g.max_degree()
    color = [0] * g.m
    at: list[dict[int, int]] = [dict() for _ in range(g.n)]  # vertex -> color -> eid

    def first_free(u: int) -> int:
        for c in range(1, delta + 1):
            if c not in at[u]:
                return c
        raise AssertionError("no free color at a vertex of degree < delta")

    def assign(eid: int, c: int) -> None:
        a, b = g.edges[eid]
        old = color[eid]
        if old:
            del at[a][old]
            del at[b][old]
        color[eid] = c
        at[a][c] = eid
        at[b][c] = eid

    for eid in range(g.m):
        a, b = g.edges[eid]
        ca = first_free(a)
        if ca not in at[b]:
            assign(eid, ca)
            continue
        cb = first_free(b)
        # flip the maximal ca/cb alternating path starting at b; in a
        # bipartite graph it cannot reach a, so ca becomes free at both ends
        cur, want = b, ca
        chain = []
        while want in at[cur]:
            e2 = at[cur][want]
            chain.append(e2)
            cur = g.other_end(e2, cur)
            want = cb if want == ca else ca
        for e2 in chain:
            x, y = g.edges[e2]
            swapped = cb if color[e2] == ca else ca
            del at[x][color[e2]]
            del at[y][color[e2]]
            color[e2] = swapped
        for e2 in chain:
            x, y = g.edges[e2]
            at[x][color[e2]] = e2
            at[y][color[e2]] = e2
        assign(eid, ca)

    if v is not None and g.adj[v]:
        present = sorted(color[eid] for eid in g.incident(v))
        perm = {c: i + 1 for i, c in enumerate(present)}
        rest_targets = [c for c in range(1, delta + 1) if c not in set(perm.values())]
        rest_sources = [c for c in range(1, delta + 1) if c not in perm]
        perm.update(dict(zip(rest_sources, rest_targets)))
        color = [perm[c] for c in color]
    return {eid: color[eid] for eid in range(g.m)}


def orient_bipartite(g: Graph, v: int, k: int | None = None) -> LineDigraph:
    """Kernel-perfect orientation of L(G) for bipartite G with outdeg caps
    max-degree - 1 everywhere and d(v) - 1 on the edges at v.

    Each vertex's incident edges are linearly ordered by a proper edge
    coloring: arcs run low color to high where the shared endpoint is on v's
    side of the bipartition, high to low on the other side.
    """
    side = bipartition(g)
    if side is None:
        raise ContractViolation("graph is not bipartite")
    if not (0 <= v < g.n):
        raise ContractViolation(f"vertex {v} out of range")
    delta = g.max_degree()
    if k is not None and k < delta:
        raise ContractViolation(f"demand {k} below max degree {delta}")
    col = konig_edge_color(g, v)
    x_side = side[v]
    arcs = []
    for u in range(g.n):
        inc = g.incident(u)
        for a, b in itertools.combinations(inc, 2):
            lo, hi = (a, b) if col[a] < col[b] else (b, a)
            arcs.append((lo, hi) if side[u] == x_side else (hi, lo))
    d = _make(g, arcs, CertLeaf("bipartite-konig", frozenset(range(g.m))))
    DemandFunction.at_vertex(g, max(delta, k or delta), v).check(d)
    return d


# ---------------------------------------------------------------------------
# K4: a fixed 13-arc table over the canonical labeling, distinguished vertex 3

_K4_TABLE = (
    # linear orders at vertices 0, 1, 3; one bidirected pair at vertex 2
    ((0, 1), (0, 2)),
    ((0, 2), (0, 3)),
    ((0, 1), (0, 3)),
    ((1, 2), (0, 1)),
    ((1, 2), (1, 3)),
    ((0, 1), (1, 3)),
    ((0, 2), (2, 3)),
    ((2, 3), (1, 2)),
    ((1, 2), (0, 2)),
    ((0, 2), (1, 2)),
    ((0, 3), (2, 3)),
    ((2, 3), (1, 3)),
    ((0, 3), (1, 3)),
)


def orient_k4(block: Graph | None = None, v: int | None = None) -> LineDigraph:
    """The stored kernel-perfect orientation of L(K4), relabeled so the
    table's distinguished vertex lands on ``v``: max outdegree 3 overall and
    outdegree <= 2 on the three edges at v, with exactly one bidirected pair."""
    if block is None:
        block = complete_graph(4)
    if v is None:
        v = 3
    if block.n != 4 or block.m != 6:
        raise ContractViolation("block is not K4")
    others = sorted(set(range(4)) - {v})
    relabel = {0: others[0], 1: others[1], 2: others[2], 3: v}
    arcs = []
    for (a1, b1), (a2, b2) in _K4_TABLE:
        e = block.edge_id(relabel[a1], relabel[b1])
        f = block.edge_id(relabel[a2], relabel[b2])
        arcs.append((e, f))
    return _make(block, arcs, CertLeaf("k4-table", frozenset(range(6))))


# ---------------------------------------------------------------------------
# crowns (K2 joined to r independent vertices), including the triangle r = 1


def _crown_hubs(block: Graph) -> tuple[int, int]:
    delta = block.max_degree()
    hubs = [u for u in range(block.n) if block.degree(u) == delta]
    if len(hubs) != 2 or not block.has_edge(*hubs):
        raise ContractViolation("block is not a crown with two hub vertices")
    return hubs[0], hubs[1]


def orient_crown(block: Graph, v: int, k: int) -> LineDigraph:
    """Anchored orientation of a crown block.

    Hub anchors need k >= max(3, max degree). Degree-2 anchors need
    k >= max(4, max degree); k = 3 at a degree-2 anchor of a diamond or
    larger crown is refused because no such orientation exists.
    """
    report = classify_block(block)
    if report.verdict != CROWN:
        raise ContractViolation("block is not a crown")
    all_edges = frozenset(range(block.m))
    if block.m == 3:
        # triangle: transitive order with the edge opposite v on top
        if k < 3:
            raise ContractViolation("triangle demands k >= 3")
        top = next(e for e in range(3) if v not in block.edges[e])
        mid, bot = sorted(set(range(3)) - {top})
        arcs = [(top, mid), (top, bot), (mid, bot)]
        d = _make(block, arcs, CertLeaf("crown-triangle", all_edges))
        DemandFunction.at_vertex(block, k, v).check(d)
        return d

    u1, u2 = _crown_hubs(block)
    delta = block.max_degree()
    h = block.edge_id(u1, u2)
    rest = sorted(set(range(block.m)) - {h})
    sub, vmap, emap = subgraph_on_edges(block, rest)

    if v in (u1, u2):
        if k < max(3, delta):
            raise ContractViolation(f"hub anchor demands k >= max(3, {delta})")
        inner = orient_bipartite(sub, vmap[v])
        arcs = {(emap[a], emap[b]) for a, b in inner.arcs}
        arcs |= {(f, h) for f in rest}  # the hub edge becomes a sink
        cert = CertSplit(
            CertLeaf("hub-edge-sink", frozenset({h})),
            _lift_cert(inner.certificate, emap),
        )
        d = _make(block, arcs, cert)
    else:
        if block.degree(v) != 2:
            raise ContractViolation("anchor must be a hub or a degree-2 vertex")
        if k < max(4, delta):
            raise ContractViolation(
                "no kernel-perfect orientation meets a cap of 3 off a degree-2 "
                f"anchor on this block; demands k >= max(4, {delta})"
            )
        inner = orient_bipartite(sub, vmap[v])
        arcs = {(emap[a], emap[b]) for a, b in inner.arcs}
        v_edges = set(block.incident(v))
        # at most one out-neighbor of a v-edge avoids v; it gets a 2-cycle
        e_star = None
        for ve in sorted(v_edges):
            for f in inner.out_neighbors(sub.edge_id(vmap[block.edges[ve][0]], vmap[block.edges[ve][1]])):
                orig = emap[f]
                if v not in block.edges[orig]:
                    if e_star is not None and e_star != orig:
                        raise AssertionError("two escape edges; bound violated upstream")
                    e_star = orig
        for f in rest:
            if f in v_edges:
                arcs.add((h, f))
            elif f == e_star:
                arcs.add((h, f))
                arcs.add((f, h))
            else:
                arcs.add((f, h))
        d = _make(block, arcs, CertLeaf("crown-tip", all_edges))
    DemandFunction.at_vertex(block, k, v).check(d)
    return d


def orient_crown_bridge(r: int, k: int) -> LineDigraph:
    """Crown with r tips, anchored at a hub (the canonical crown's vertex 0)."""
    if r < 1:
        raise ContractViolation("crown needs r >= 1")
    return orient_crown(crown_graph(r), 0, k)


def orient_crown_tip(r: int, k: int) -> LineDigraph:
    """Crown with r tips, anchored at a degree-2 tip (canonical vertex 2)."""
    if r < 2:
        raise ContractViolation("tip anchor needs r >= 2")
    return orient_crown(crown_graph(r), 2, k)


# ---------------------------------------------------------------------------
# theta blocks


def _cycle_edge_sequence(block: Graph, start: int) -> list[int]:
    a, b = block.edges[start]
    seq = [start]
    prev, cur = a, b
    while cur != a:
        (n1, e1), (n2, e2) = block.adj[cur]
        if n1 == prev:
            prev, cur, eid = cur, n2, e2
        else:
            prev, cur, eid = cur, n1, e1
        seq.append(eid)
    return seq


def _orient_cycle(block: Graph, v: int) -> LineDigraph:
    """Acyclic orientation of the line graph of a cycle: one source edge not
    at v takes outdegree 2, every other edge at most 1."""
    source = next(e for e in range(block.m) if v not in block.edges[e])
    seq = _cycle_edge_sequence(block, source)
    arcs = [(seq[i], seq[i + 1]) for i in range(len(seq) - 1)]
    arcs.append((seq[0], seq[-1]))
    return _make(block, arcs, CertLeaf("cycle-dag", frozenset(range(block.m))))


def orient_theta(block: Graph, v: int, p: int) -> LineDigraph:
    """Anchored orientation of a theta block having a unit path, all other
    path lengths even, and some path longer than 2 (crowns go elsewhere).
    Requires p >= max(3, max degree).

    Recursive: detach an edge whose endpoints both have degree 2 and which
    avoids v, orient the remainder block-by-block, then give the detached
    edge both of its line-graph arcs outward. When no such edge exists the
    block is a crown plus one length-4 path with v in its middle; then the
    hub-hub edge is deleted, the bipartite remainder is oriented, and the
    hub-hub edge is re-attached as a sink.
    """
    sig = recognize_theta(block)
    if sig is None or not sig.includes_unit:
        raise ContractViolation("block is not a theta graph with a unit path")
    rest = [q for q in sig.path_lengths if q != 1]
    if any(q % 2 for q in rest):
        raise ContractViolation("non-unit path lengths must be even")
    delta = block.max_degree()
    if p < max(3, delta):
        raise ContractViolation(f"theta demands p >= max(3, {delta})")
    if not (0 <= v < block.n):
        raise ContractViolation(f"vertex {v} out of range")

    if delta == 2:
        return _orient_cycle(block, v)  # bare odd cycle, the base case
    if rest and max(rest) <= 2:
        raise ContractViolation("crown-shaped theta: use the crown construction")

    detach = None
    for e in range(block.m):
        a, b = block.edges[e]
        if v != a and v != b and block.degree(a) == 2 and block.degree(b) == 2:
            detach = e
            break

    lg = line_graph(block)
    all_edges = frozenset(range(block.m))
    if detach is not None:
        keep = sorted(all_edges - {detach})
        sub, vmap, emap = subgraph_on_edges(block, keep)
        inner = orient_strong(sub, vmap[v], p)
        arcs = {(emap[a], emap[b]) for a, b in inner.arcs}
        for f in lg.neighbors[detach]:
            arcs.add((detach, f))
        cert = CertSplit(
            _lift_cert(inner.certificate, emap),
            CertLeaf("detached-path-edge", frozenset({detach})),
        )
        d = _make(block, arcs, cert)
    else:
        # v sits mid-path on the single length-4 path; all other paths are
        # length 2, so the graph minus the hub-hub edge is bipartite
        x1, x2 = sig.hubs
        h = block.edge_id(x1, x2)
        keep = sorted(all_edges - {h})
        sub, vmap, emap = subgraph_on_edges(block, keep)
        inner = orient_bipartite(sub, vmap[v])
        arcs = {(emap[a], emap[b]) for a, b in inner.arcs}
        for f in lg.neighbors[h]:
            arcs.add((f, h))
        cert = CertSplit(
            CertLeaf("hub-edge-sink", frozenset({h})),
            _lift_cert(inner.certificate, emap),
        )
        d = _make(block, arcs, cert)
    DemandFunction.at_vertex(block, p, v).check(d)
    return d


# ---------------------------------------------------------------------------
# block dispatch and composition


def _orient_block(block: Graph, v: int, k: int) -> LineDigraph:
    if block.m == 1:
        return _make(block, [], CertLeaf("single-edge", frozenset({0})))
    report = classify_block(block)
    if report.verdict == BIPARTITE:
        return orient_bipartite(block, v, max(k, block.max_degree()))
    if report.verdict == K4:
        if k < 4:
            raise ContractViolation("K4 blocks demand k >= 4")
        return orient_k4(block, v)
    if report.verdict == CROWN:
        return orient_crown(block, v, k)
    if report.verdict == THETA_ONE_EVEN:
        return orient_theta(block, v, k)
    raise ClassificationError("block admits two odd cycles sharing two edges")


def _peel_layout(g: Graph, decomp, v: int):
    """Root the block forest and order blocks so children precede parents.

    Returns (order, anchor per block, parent cut vertex per block). The block
    containing v is its component's root and v anchors it; every other block
    is anchored at the cut vertex on its path to the root.
    """
    nb = len(decomp.blocks)
    bverts = [decomp.block_vertices(g, i) for i in range(nb)]
    at_cut: dict[int, list[int]] = {}
    for bi, z in decomp.tree:
        at_cut.setdefault(z, []).append(bi)

    seen = [False] * nb
    order: list[int] = []
    anchor: dict[int, int] = {}
    parent_cut: dict[int, int | None] = {}

    roots = sorted(range(nb), key=lambda i: (v not in bverts[i], i))
    for root in roots:
        if seen[root]:
            continue
        anchor[root] = v if v in bverts[root] else min(bverts[root])
        parent_cut[root] = None
        seen[root] = True
        post: list[int] = []
        stack = [(root, iter(sorted(z for z in bverts[root] if z in at_cut)))]
        while stack:
            bi, cuts = stack[-1]
            advanced = False
            for z in cuts:
                for bj in sorted(at_cut.get(z, ())):
                    if not seen[bj]:
                        seen[bj] = True
                        anchor[bj] = z
                        parent_cut[bj] = z
                        stack.append(
                            (bj, iter(sorted(w for w in bverts[bj] if w in at_cut)))
                        )
                        advanced = True
                        break
                if advanced:
                    break
            if not advanced:
                stack.pop()
                post.append(bi)
        order.extend(post)
    return order, anchor, parent_cut


class _LiftedPart:
    """Arc set plus certificate in the host graph's edge ids."""

    __slots__ = ("arcs", "certificate")

    def __init__(self, arcs, certificate):
        self.arcs = arcs
        self.certificate = certificate


def compose_blocks(
    g: Graph,
    v: int,
    k: int,
    parts: dict,
    decomp=None,
) -> LineDigraph:
    """Assemble per-block orientations into one orientation of L(G).

    ``parts`` maps block index to an object carrying ``arcs`` and
    ``certificate`` already in g's edge ids (LineDigraph works when the block
    is the whole graph). Blocks are peeled leaf-first toward the block
    containing v;
    all line-graph edges between two blocks run from the earlier-peeled block
    into the later one. Each non-root part must have been built with its
    attachment cut vertex as anchor; violations surface as AssemblyError.
    """
    if k < g.max_degree():
        raise ContractViolation(f"composition demands k >= max degree {g.max_degree()}")
    if decomp is None:
        decomp = blocks(g)
    if len(parts) != len(decomp.blocks):
        raise ContractViolation("need exactly one orientation per block")
    order, _, parent_cut = _peel_layout(g, decomp, v)

    arcs: set[tuple[int, int]] = set()
    for part in parts.values():
        arcs |= part.arcs
    pos = {bi: i for i, bi in enumerate(order)}
    for z in decomp.cut_vertices:
        inc = set(g.incident(z))
        here = sorted(
            (i for i in range(len(decomp.blocks)) if decomp.blocks[i] & inc),
            key=pos.__getitem__,
        )
        for ai in range(len(here)):
            for bi in range(ai + 1, len(here)):
                for e in sorted(decomp.blocks[here[ai]] & inc):
                    for f in sorted(decomp.blocks[here[bi]] & inc):
                        arcs.add((e, f))

    cert = parts[order[-1]].certificate or CertLeaf("block", decomp.blocks[order[-1]])
    for bi in reversed(order[:-1]):
        inner = parts[bi].certificate or CertLeaf("block", decomp.blocks[bi])
        cert = CertSplit(cert, inner, cut_vertex=parent_cut[bi])
    d = _make(g, arcs, cert)
    DemandFunction.at_vertex(g, k, v).check(d)
    return d


def orient_strong(g: Graph, v: int, k: int) -> LineDigraph:
    """Kernel-perfect orientation of L(G) with outdeg <= k - 1 everywhere and
    outdeg <= d(v) - 1 on the edges at v, for any graph whose blocks are
    bipartite, K4, crowns, or unit-even thetas. Requires k >= max degree."""
    if g.m == 0:
        return _make(g, [], CertLeaf("empty", frozenset()))
    if k < g.max_degree():
        raise ContractViolation(f"demand {k} below max degree {g.max_degree()}")
    decomp = blocks(g)
    _, anchor, _ = _peel_layout(g, decomp, v)
    parts: dict[int, _LiftedPart] = {}
    for bi, blk in enumerate(decomp.blocks):
        sub, vmap, emap = subgraph_on_edges(g, blk)
        local = _orient_block(sub, vmap[anchor[bi]], k)
        parts[bi] = _LiftedPart(
            frozenset((emap[a], emap[b]) for a, b in local.arcs),
            _lift_cert(local.certificate, emap),
        )
    return compose_blocks(g, v, k, parts, decomp)


def orient_graph(g: Graph, t: int) -> tuple[LineDigraph, Certificate]:
    """Top-level constructor: kernel-perfect orientation of L(G) with
    outdeg(e) <= t - 1 for every edge, for any graph in the class and
    t >= max(4, max degree). Fails with a witness pair otherwise."""
    cls = classify_graph(g)
    if not cls.in_gstar:
        raise ClassificationError(
            "two odd cycles share at least two edges", witness=cls.witness
        )
    if t < max(4, g.max_degree()):
        raise ContractViolation(
            f"t must be at least max(4, {g.max_degree()})"
        )
    d = orient_strong(g, 0, t) if g.n else _make(g, [], CertLeaf("empty", frozenset()))
    DemandFunction.uniform(g, t).check(d)
    return d, d.certificate
