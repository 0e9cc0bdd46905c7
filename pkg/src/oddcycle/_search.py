"""Backtracking kernel search on small digraphs, shared by the coloring
pipeline, the game engine, and the oracles.

Vertices are positions in a fixed index list; sets are Python int bitmasks.
A kernel of an induced subdigraph Z is an independent S within Z such that
every vertex of Z - S has an out-arc into S.
"""

from __future__ import annotations

__all__ = ["MaskDigraph", "find_kernel_mask"]


class MaskDigraph:
    """Bitmask view of a digraph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "out", "inn")

    def __init__(self, n: int, arcs):
        self.n = n
        self.adj = [0] * n  # underlying (symmetrized) adjacency
        self.out = [0] * n
        self.inn = [0] * n
        for a, b in arcs:
            self.out[a] |= 1 << b
            self.inn[b] |= 1 << a
            self.adj[a] |= 1 << b
            self.adj[b] |= 1 << a


def find_kernel_mask(d: MaskDigraph, z: int) -> int | None:
    """Kernel of d[z] as a bitmask, or None if none exists.

    Branches on the lowest undecided vertex: into S, or out of S (then it
    must attack S eventually). Deterministic: prefers putting the lowest
    vertex into S, so results are reproducible.
    """
    adj, out, inn = d.adj, d.out, d.inn

    # stack entries: (candidates still allowed into S, chosen S, unsatisfied)
    stack = [(z, 0, 0)]
    while stack:
        cand, s, need = stack.pop()
        if cand == 0:
            if need == 0:
                return s
            continue
        u_bit = cand & (-cand)
        u = u_bit.bit_length() - 1

        # branch pushed first = explored last: u stays out of S
        need2 = need | u_bit
        cand2 = cand & ~u_bit
        if out[u] & (s | cand2):  # u can still be dominated later
            stack.append((cand2, s, need2))

        # u joins S: its neighbors are expelled; attackers of u are satisfied
        s1 = s | u_bit
        expelled = adj[u] & cand
        need1 = (need | expelled) & ~inn[u]
        cand1 = cand & ~adj[u] & ~u_bit
        ok = True
        rest = need1
        future = s1 | cand1
        while rest:
            w_bit = rest & (-rest)
            rest &= ~w_bit
            if not out[w_bit.bit_length() - 1] & future:
                ok = False
                break
        if ok:
            stack.append((cand1, s1, need1))
    return None
