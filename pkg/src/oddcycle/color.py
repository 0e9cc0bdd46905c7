"""List edge coloring driven by kernel-perfect orientations.

The core loop colors greedily by color value: for the smallest color c still
on offer, the edges offering c are an induced subdigraph whose kernel gets
colored c; the rest lose c from their lists but also lose an out-neighbor,
so the invariant |list(e)| >= outdeg(e) + 1 survives and the loop finishes.
An m-tuple variant keeps edges alive until they have collected m colors,
which mirrors running the same argument on the m-fold clique blow-up.

The diamond anchored at a degree-2 vertex is the one block the orientation
machinery provably cannot serve; its dedicated case analysis lives here too,
as does the top-level solver dispatching on maximum degree.
"""

from __future__ import annotations

from ._search import MaskDigraph, find_kernel_mask
from .errors import (
    ClassificationError,
    ContractViolation,
    DemandError,
    KernelAbsenceError,
)
from .graphs import (
    Graph,
    blocks,
    diamond_graph,
    line_graph,
    subgraph_on_edges,
)
from .orient import CertLeaf, LineDigraph, orient_graph, orient_strong
from .recognize import classify_graph

__all__ = [
    "find_kernel",
    "bbs_color",
    "tuple_color",
    "diamond_color",
    "choose_edges",
    "validate_edge_coloring",
]


# ---------------------------------------------------------------------------
# kernels


class _KernelFinder:
    """Kernel extraction for induced subdigraphs of one orientation.

    With a composition certificate, kernels are assembled along the recorded
    partitions: all arcs cross from the y side into the x side, so a kernel
    of the x part plus a kernel of the unattacked y remainder is a kernel of
    the whole. Leaves fall back to backtracking search.
    """

    def __init__(self, d: LineDigraph, cert=None):
        self.d = d
        self.cert = cert if cert is not None else d.certificate
        self.mask = MaskDigraph(d.base.m, d.arcs)
        self.nbr = [0] * d.base.m
        for e, f in d.base.pairs:
            self.nbr[e] |= 1 << f
            self.nbr[f] |= 1 << e

    def _brute(self, zmask: int) -> int | None:
        return find_kernel_mask(self.mask, zmask)

    def _via_cert(self, node, zmask: int) -> int | None:
        if isinstance(node, CertLeaf):
            return self._brute(zmask)
        xmask = 0
        for e in node.x_edges:
            xmask |= 1 << e
        sx = self._via_cert(node.x_child, zmask & xmask)
        if sx is None:
            return None
        rest = zmask & ~xmask
        zy = 0
        while rest:
            bit = rest & (-rest)
            rest &= ~bit
            if not self.nbr[bit.bit_length() - 1] & sx:
                zy |= bit
        sy = self._via_cert(node.y_child, zy)
        if sy is None:
            return None
        return sx | sy

    def kernel(self, z) -> frozenset[int]:
        zmask = 0
        for e in z:
            zmask |= 1 << e
        got = self._via_cert(self.cert, zmask) if self.cert is not None else None
        if got is None:
            got = self._brute(zmask)
        if got is None:
            raise KernelAbsenceError("no kernel in the induced subdigraph", z)
        return frozenset(e for e in z if got >> e & 1)


def find_kernel(d: LineDigraph, z, cert=None) -> frozenset[int]:
    """Kernel of d[z]. Uses the composition certificate when one is carried
    or passed, backtracking search otherwise. Raises KernelAbsenceError when
    d[z] has no kernel (the input was not kernel-perfect)."""
    return _KernelFinder(d, cert).kernel(frozenset(z))


# ---------------------------------------------------------------------------
# list coloring from an orientation


def _normalize_lists(g: Graph, lists) -> dict[int, frozenset[int]]:
    out = {}
    for e in range(g.m):
        if e not in lists or not lists[e]:
            raise DemandError("missing or empty color list", e)
        out[e] = frozenset(lists[e])
    return out


def validate_edge_coloring(g: Graph, coloring, lists=None, tuples: bool = False):
    """Assert a (tuple) coloring is proper and drawn from the lists."""
    lg = line_graph(g)
    for e in range(g.m):
        assert e in coloring, f"edge {e} uncolored"
        if lists is not None:
            got = coloring[e] if tuples else {coloring[e]}
            assert set(got) <= set(lists[e]), f"edge {e} off-list"
    for e, f in lg.pairs:
        if tuples:
            assert not set(coloring[e]) & set(coloring[f]), f"overlap on {e},{f}"
        else:
            assert coloring[e] != coloring[f], f"clash on {e},{f}"


def bbs_color(g: Graph, d: LineDigraph, lists, cert=None) -> dict[int, int]:
    """Proper coloring from lists of sizes outdeg + 1, by kernel induction.

    Requires |lists(e)| >= outdeg(e) + 1 for every edge; the orientation must
    be kernel-perfect (all constructions from this library are).
    """
    lists = _normalize_lists(g, lists)
    # the guarantee needs |list| >= outdeg + 1 everywhere; smaller lists are
    # still attempted (they can succeed, e.g. pairwise disjoint lists) and
    # fail with a demand error only when the shortfall actually bites
    guaranteed = all(len(lists[e]) >= d.outdeg(e) + 1 for e in range(g.m))
    finder = _KernelFinder(d, cert)
    remaining = {e: set(lists[e]) for e in range(g.m)}
    alive = set(range(g.m))
    colors: dict[int, int] = {}
    while alive:
        empty = next((e for e in alive if not remaining[e]), None)
        if empty is not None:
            raise DemandError("list exhausted; demand was below outdegree + 1", empty)
        c = min(min(remaining[e]) for e in alive)
        offering = {e for e in alive if c in remaining[e]}
        kernel = finder.kernel(offering)
        for e in kernel:
            colors[e] = c
            alive.discard(e)
        for e in offering - kernel:
            remaining[e].discard(c)
        if guaranteed:
            for e in alive:  # the induction invariant, checked every round
                live_out = sum(1 for f in d.out_neighbors(e) if f in alive)
                assert len(remaining[e]) >= live_out + 1, (e, remaining[e])
    validate_edge_coloring(g, colors, lists)
    return colors


def tuple_color(
    g: Graph, d: LineDigraph, lists, m: int, cert=None
) -> dict[int, frozenset[int]]:
    """m-tuple coloring: each edge receives m colors from its list, adjacent
    edges disjoint sets. Requires |lists(e)| >= m * (outdeg(e) + 1).

    Same loop as bbs_color with multiplicity bookkeeping: an edge re-enters
    later kernels until it has been selected m times. Equivalent to running
    the single-color argument on the orientation with every line-graph vertex
    blown up into an m-clique.
    """
    if m < 1:
        raise ContractViolation("tuple size must be at least 1")
    lists = _normalize_lists(g, lists)
    finder = _KernelFinder(d, cert)
    remaining = {e: set(lists[e]) for e in range(g.m)}
    need = {e: m for e in range(g.m)}
    chosen: dict[int, set[int]] = {e: set() for e in range(g.m)}
    alive = set(range(g.m))
    while alive:
        if any(not remaining[e] for e in alive):
            bad = next(e for e in alive if not remaining[e])
            raise DemandError("list exhausted before multiplicity met", bad)
        c = min(min(remaining[e]) for e in alive)
        offering = {e for e in alive if c in remaining[e]}
        kernel = finder.kernel(offering)
        for e in kernel:
            chosen[e].add(c)
            need[e] -= 1
            remaining[e].discard(c)
            if need[e] == 0:
                alive.discard(e)
        for e in offering - kernel:
            remaining[e].discard(c)
    out = {e: frozenset(chosen[e]) for e in range(g.m)}
    validate_edge_coloring(g, out, lists, tuples=True)
    return out


# ---------------------------------------------------------------------------
# the diamond anchored at a degree-2 vertex

# canonical diamond (crown with two tips): hubs 0 and 1, tips 2 and 3
_DIAMOND = diamond_graph()


def _lowbit(x: int) -> int:
    return x & (-x)


def _c4_kernel(out: tuple[int, ...], zmask: int) -> int:
    # candidate independent sets of the 4-cycle 0-1-2-3-0, largest first
    for s in (0b0101, 0b1010, 0b0001, 0b0010, 0b0100, 0b1000, 0):
        if s & ~zmask:
            continue
        ok = True
        rest = zmask & ~s
        while rest:
            bit = _lowbit(rest)
            rest &= ~bit
            if not out[bit.bit_length() - 1] & s:
                ok = False
                break
        if ok:
            return s
    raise AssertionError("4-cycle orientation should be kernel-perfect")


def _c4_bbs(masks: list[int], out: tuple[int, ...]) -> list[int]:
    """Tiny kernel-induction colorer for the cycle e1-e2-f1-f2 (indices
    0-1-2-3). ``out`` gives out-neighbor masks; lists are bitmasks."""
    colors = [0, 0, 0, 0]
    alive = 0b1111
    while alive:
        union = 0
        rest = alive
        while rest:
            bit = _lowbit(rest)
            rest &= ~bit
            union |= masks[bit.bit_length() - 1]
        c = _lowbit(union)
        offering = 0
        rest = alive
        while rest:
            bit = _lowbit(rest)
            rest &= ~bit
            if masks[bit.bit_length() - 1] & c:
                offering |= bit
        kern = _c4_kernel(out, offering)
        rest = kern
        while rest:
            bit = _lowbit(rest)
            rest &= ~bit
            colors[bit.bit_length() - 1] = c
        alive &= ~kern
        rest = offering & ~kern
        while rest:
            bit = _lowbit(rest)
            rest &= ~bit
            masks[bit.bit_length() - 1] &= ~c
    return colors


# orientations of the leftover 4-cycle after coloring the hub edge:
# all lists still >= 2 -> directed cycle; the anchored list shrank to 1 ->
# an acyclic orientation with outdegrees matching sizes (2, 1, 2, 3)
_C4_ROUND = (0b0010, 0b0100, 0b1000, 0b0001)
_C4_DAG = (0b0010, 0, 0b0010, 0b0101)


def _diamond_core(me1: int, me2: int, mh: int, mf1: int, mf2: int):
    """Color the diamond from list bitmasks with sizes (2, 2, 3, 3, 3) for
    (e1, e2, h, f1, f2): e1, e2 at the anchor tip; h the hub edge; f_i the
    matching partner of e_i. Returns single-bit masks in the same order."""
    common = me1 & mf1
    if common:
        c = _lowbit(common)
        a = _lowbit(me2 & ~c)
        b = _lowbit(mh & ~c & ~a)
        dd = _lowbit(mf2 & ~c & ~b)
        return c, a, b, c, dd
    common = me2 & mf2
    if common:
        c = _lowbit(common)
        a = _lowbit(me1 & ~c)
        b = _lowbit(mh & ~c & ~a)
        dd = _lowbit(mf1 & ~c & ~b)
        return a, c, b, dd, c
    # both matchings have disjoint lists: color h outside the first tip list
    gamma = _lowbit(mh & ~me1)
    masks = [me1, me2 & ~gamma, mf1 & ~gamma, mf2 & ~gamma]
    out = _C4_ROUND if masks[1] & (masks[1] - 1) else _C4_DAG
    ce1, ce2, cf1, cf2 = _c4_bbs(masks, out)
    return ce1, ce2, gamma, cf1, cf2


def _trim(colors: frozenset[int], size: int) -> frozenset[int]:
    return frozenset(sorted(colors)[:size])


def diamond_color(lists, g: Graph | None = None, v: int | None = None) -> dict[int, int]:
    """List edge coloring of a diamond whose two edges at the degree-2
    vertex ``v`` have lists of size >= 2 and the rest size >= 3.

    This block admits no orientation meeting those caps, so the coloring is
    found by case analysis instead: a matching with a shared color collapses
    to a greedy path, otherwise the hub edge takes a color outside one tip
    list and the remaining 4-cycle is finished by kernel induction.
    """
    if g is None:
        g = _DIAMOND
    if g.n != 4 or g.m != 5:
        raise ContractViolation("graph is not a diamond")
    if v is None:
        v = min(u for u in range(4) if g.degree(u) == 2)
    if g.degree(v) != 2:
        raise ContractViolation("anchor must have degree 2")
    lists = _normalize_lists(g, lists)

    e1, e2 = sorted(g.incident(v))
    hubs = [u for u in range(4) if g.degree(u) == 3]
    h = g.edge_id(hubs[0], hubs[1])
    w1 = g.other_end(e1, v)
    f1 = next(e for e in range(5) if e not in (e1, e2, h) and w1 not in g.edges[e])
    f2 = next(e for e in range(5) if e not in (e1, e2, h, f1))

    sizes = {e1: 2, e2: 2, h: 3, f1: 3, f2: 3}
    for e, size in sizes.items():
        if len(lists[e]) < size:
            raise DemandError(f"list must have at least {size} colors", e)
    trimmed = {e: _trim(lists[e], sizes[e]) for e in sizes}

    universe = sorted(set().union(*trimmed.values()))
    index = {c: i for i, c in enumerate(universe)}

    def mask(e):
        m = 0
        for c in trimmed[e]:
            m |= 1 << index[c]
        return m

    bits = _diamond_core(mask(e1), mask(e2), mask(h), mask(f1), mask(f2))
    colors = {}
    for e, bit in zip((e1, e2, h, f1, f2), bits):
        assert bit and bit & (bit - 1) == 0
        colors[e] = universe[bit.bit_length() - 1]
    validate_edge_coloring(g, colors, lists)
    return colors


# ---------------------------------------------------------------------------
# top-level solver


def _backtrack_color(g: Graph, lists) -> dict[int, int] | None:
    lg = line_graph(g)
    order = sorted(range(g.m))
    colors: dict[int, int] = {}

    def rec(i: int):
        if i == len(order):
            return True
        e = order[i]
        for c in sorted(lists[e]):
            if all(colors.get(f) != c for f in lg.neighbors[e]):
                colors[e] = c
                if rec(i + 1):
                    return True
                del colors[e]
        return False

    return colors if rec(0) else None


def _component_subgraphs(g: Graph):
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root] or not g.adj[root]:
            continue
        comp = {root}
        stack = [root]
        seen[root] = True
        while stack:
            u = stack.pop()
            for w, _ in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    stack.append(w)
        eids = sorted({eid for u in comp for _, eid in g.adj[u]})
        yield subgraph_on_edges(g, eids)


def _required_list_size(comp: Graph) -> int:
    delta = comp.max_degree()
    if delta == 2 and comp.m == comp.n and comp.m % 2 == 1:
        return 3  # odd cycle: chromatic index exceeds max degree
    return delta


def _is_diamond(g: Graph) -> bool:
    return g.n == 4 and g.m == 5 and sorted(g.degree(u) for u in range(4)) == [2, 2, 3, 3]


def _color_block_from_lists(sub: Graph, v: int, lists) -> dict[int, int]:
    if sub.m == 1:
        if not lists[0]:
            raise DemandError("empty list", 0)
        return {0: min(lists[0])}
    if _is_diamond(sub) and sub.degree(v) == 2:
        return diamond_color(lists, sub, v)
    d = orient_strong(sub, v, max(3, sub.max_degree()))
    return bbs_color(sub, d, lists)


def _color_subcubic_component(comp: Graph, lists) -> dict[int, int]:
    decomp = blocks(comp)
    at_cut: dict[int, list[int]] = {}
    for bi, z in decomp.tree:
        at_cut.setdefault(z, []).append(bi)
    bverts = [decomp.block_vertices(comp, i) for i in range(len(decomp.blocks))]

    remaining = set(range(len(decomp.blocks)))
    peel: list[tuple[int, int]] = []  # (block, attachment cut vertex)
    while len(remaining) > 1:
        leaf = min(
            bi
            for bi in remaining
            if sum(
                1
                for z in bverts[bi]
                if z in at_cut and sum(1 for bj in at_cut[z] if bj in remaining) > 1
            )
            <= 1
        )
        z = next(
            z
            for z in sorted(bverts[leaf])
            if z in at_cut and sum(1 for bj in at_cut[z] if bj in remaining) > 1
        )
        peel.append((leaf, z))
        remaining.discard(leaf)
    base = remaining.pop()

    colors: dict[int, int] = {}

    def fill(bi: int, anchor_orig: int | None):
        sub, vmap, emap = subgraph_on_edges(comp, decomp.blocks[bi])
        local_lists = {se: set(lists[oe]) for se, oe in emap.items()}
        if anchor_orig is None:
            # base block: prefer a hub anchor so the orientation route works
            v_local = 0
            if _is_diamond(sub):
                v_local = min(u for u in range(4) if sub.degree(u) == 3)
        else:
            v_local = vmap[anchor_orig]
            used = {
                colors[eid]
                for eid in comp.incident(anchor_orig)
                if eid in colors
            }
            for se, oe in emap.items():
                if anchor_orig in comp.edges[oe]:
                    local_lists[se] -= used
        got = _color_block_from_lists(sub, v_local, local_lists)
        for se, c in got.items():
            colors[emap[se]] = c

    fill(base, None)
    for bi, z in reversed(peel):
        fill(bi, z)
    return colors


def choose_edges(g: Graph, lists) -> dict[int, int]:
    """Proper edge coloring from lists, for any graph in the class.

    Per connected component the lists must have at least chromatic-index
    many colors: max degree, except 3 for odd cycle components. Dispatch:
    max degree >= 4 goes through a whole-component orientation; at most 2 is
    cycles and paths; K4 components use exhaustive search over the lists;
    the remaining subcubic components peel leaf blocks off the block tree,
    anchoring each at its attachment vertex.
    """
    cls = classify_graph(g)
    if not cls.in_gstar:
        raise ClassificationError(
            "two odd cycles share at least two edges", witness=cls.witness
        )
    lists = _normalize_lists(g, lists)
    out: dict[int, int] = {}
    for comp, _, emap in _component_subgraphs(g):
        need = _required_list_size(comp)
        local = {}
        for se, oe in emap.items():
            if len(lists[oe]) < need:
                raise DemandError(f"component needs lists of size {need}", oe)
            local[se] = lists[oe]
        delta = comp.max_degree()
        if comp.n == 4 and comp.m == 6:
            got = _backtrack_color(comp, local)
            assert got is not None, "K4 must be colorable from 3-lists"
        elif delta >= 4:
            d, _ = orient_graph(comp, delta)
            got = bbs_color(comp, d, local)
        elif delta <= 2:
            d = orient_strong(comp, 0, max(3, delta) if need == 3 else delta)
            got = bbs_color(comp, d, local)
        else:
            got = _color_subcubic_component(comp, local)
        for se, c in got.items():
            out[emap[se]] = c
    validate_edge_coloring(g, out, lists)
    return out
