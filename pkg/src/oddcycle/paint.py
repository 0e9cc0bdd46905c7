"""Online list coloring on line graphs: the marking game between Lister and
Painter.

Each round Lister marks a nonempty set of alive edges (spending one unit of
each marked edge's budget) and Painter deletes an independent subset of the
marked edges. Painter wins when everything is deleted; Lister wins when some
edge is still alive with its budget exhausted, since deleting it later would
need one more mark.

The kernel Painter plays a kernel of the orientation induced on the marked
set: every marked survivor keeps an out-neighbor that was deleted, so budgets
stay above live outdegrees and Painter never gets caught. The exact solver
explores both sides exhaustively at toy scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ._search import MaskDigraph, find_kernel_mask
from .errors import KernelAbsenceError, ProtocolError, SizeCapError
from .graphs import Graph, line_graph
from .orient import LineDigraph

__all__ = [
    "GameState",
    "GameResult",
    "painter_move",
    "kernel_painter",
    "play_game",
    "kernel_painter_always_wins",
    "PaintabilityResult",
    "exhaustive_paintability",
    "replay_strategy",
]


@dataclass
class GameState:
    """Mutable state of one marking game."""

    alive: set[int]
    budget: dict[int, int]
    multiplicity: dict[int, int]
    round: int = 0

    @staticmethod
    def fresh(m: int, f, mult: int = 1) -> "GameState":
        budget = {e: (f if isinstance(f, int) else f[e]) for e in range(m)}
        return GameState(set(range(m)), budget, {e: mult for e in range(m)})


@dataclass(frozen=True)
class GameResult:
    winner: str  # "Painter" or "Lister"
    transcript: tuple[dict, ...]


def painter_move(d: LineDigraph, state: GameState, marked, cert=None) -> frozenset[int]:
    """The kernel Painter's reply: a kernel of the orientation induced on the
    marked set. Raises on kernel absence, which signals a non-kernel-perfect
    orientation rather than a losing position."""
    marked = frozenset(marked)
    if not marked or not marked <= state.alive:
        raise ProtocolError("marked set must be a nonempty subset of alive edges")
    from .color import find_kernel

    return find_kernel(d, marked, cert)


def kernel_painter(d: LineDigraph, cert=None):
    """Painter strategy closure for play_game."""

    def strategy(state: GameState, marked: frozenset[int]) -> frozenset[int]:
        return painter_move(d, state, marked, cert)

    return strategy


def play_game(
    g: Graph,
    d: LineDigraph | None,
    f,
    lister_strategy,
    painter_strategy=None,
    m: int = 1,
    max_rounds: int = 10_000,
) -> GameResult:
    """Run one game. ``lister_strategy(state)`` yields the marked set each
    round; the default Painter is the kernel strategy on ``d``.

    With m > 1 an edge must be selected m times before it is removed; every
    mark still costs one budget unit. Malformed moves raise ProtocolError.
    """
    if painter_strategy is None:
        if d is None:
            raise ProtocolError(
                "no orientation given: no kernel strategy exists; "
                "use exhaustive_paintability for an exact answer"
            )
        painter_strategy = kernel_painter(d)
    state = GameState.fresh(g.m, f, m)
    transcript = []
    while state.alive:
        if state.round >= max_rounds:
            raise ProtocolError("game exceeded the round cap")
        marked = frozenset(lister_strategy(state))
        if not marked or not marked <= state.alive:
            raise ProtocolError("Lister must mark a nonempty set of alive edges")
        for e in marked:
            state.budget[e] -= 1
        selected = frozenset(painter_strategy(state, marked))
        if not selected <= marked:
            raise ProtocolError("Painter must select among the marked edges")
        lg_pairs = set(d.base.pairs) if d is not None else set(line_graph(g).pairs)
        for a, b in itertools.combinations(sorted(selected), 2):
            if (a, b) in lg_pairs:
                raise ProtocolError("Painter selection must be independent")
        for e in selected:
            state.multiplicity[e] -= 1
            if state.multiplicity[e] == 0:
                state.alive.discard(e)
        state.round += 1
        transcript.append({"marked": sorted(marked), "selected": sorted(selected)})
        if any(state.budget[e] <= 0 for e in state.alive):
            return GameResult("Lister", tuple(transcript))
    return GameResult("Painter", tuple(transcript))


# ---------------------------------------------------------------------------
# exhaustive play


def _submasks(mask: int):
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def kernel_painter_always_wins(d: LineDigraph, f, m: int = 1) -> bool:
    """Adversarial search over every Lister line against the deterministic
    kernel Painter. True iff no Lister play ever beats it."""
    n = d.base.m
    md = MaskDigraph(n, d.arcs)
    kernel_cache: dict[int, int] = {}

    def kernel_of(marked: int) -> int:
        got = kernel_cache.get(marked)
        if got is None:
            got = find_kernel_mask(md, marked)
            if got is None:
                raise KernelAbsenceError(
                    "orientation is not kernel-perfect",
                    {e for e in range(n) if marked >> e & 1},
                )
            kernel_cache[marked] = got
        return got

    init_budget = tuple((f if isinstance(f, int) else f[e]) for e in range(n))
    init_mult = tuple(m for _ in range(n))
    memo: dict[tuple, bool] = {}

    def wins(alive: int, budget: tuple, mult: tuple) -> bool:
        if alive == 0:
            return True
        key = (alive, budget, mult)
        got = memo.get(key)
        if got is not None:
            return got
        result = True
        for marked in _submasks(alive):
            nb = list(budget)
            rest = marked
            while rest:
                bit = rest & (-rest)
                rest &= ~bit
                nb[bit.bit_length() - 1] -= 1
            sel = kernel_of(marked)
            nm = list(mult)
            alive2 = alive
            rest = sel
            while rest:
                bit = rest & (-rest)
                rest &= ~bit
                e = bit.bit_length() - 1
                nm[e] -= 1
                if nm[e] == 0:
                    alive2 &= ~bit
            caught = False
            rest = alive2
            while rest:
                bit = rest & (-rest)
                rest &= ~bit
                if nb[bit.bit_length() - 1] <= 0:
                    caught = True
                    break
            if caught or not wins(alive2, tuple(nb), tuple(nm)):
                result = False
                break
        memo[key] = result
        return result

    return wins((1 << n) - 1, init_budget, init_mult)


@dataclass(frozen=True)
class PaintabilityResult:
    paintable: bool
    tree: dict | None = None


def exhaustive_paintability(
    g: Graph,
    f,
    m: int = 1,
    max_edges: int = 8,
    max_total_budget: int = 24,
    want_tree: bool = False,
) -> PaintabilityResult:
    """Exact alternating min-max over all Lister marks and all independent
    Painter replies (the empty reply included), memoized on game states.

    True means Painter has a winning strategy when every edge e may be marked
    at most f(e) times, in m-fold mode ``m`` selections delete an edge. The
    optional strategy tree maps each Lister mark to Painter's reply and the
    follow-up tree.
    """
    n = g.m
    budgets = tuple((f if isinstance(f, int) else f[e]) for e in range(n))
    if n > max_edges:
        raise SizeCapError(f"exact solver capped at {max_edges} edges, got {n}")
    if sum(budgets) * m > max_total_budget:
        raise SizeCapError(
            f"total budget {sum(budgets) * m} above cap {max_total_budget}"
        )
    lg = line_graph(g)
    nbr = [0] * n
    for e, fe in lg.pairs:
        nbr[e] |= 1 << fe
        nbr[fe] |= 1 << e

    def independent(mask: int) -> bool:
        rest = mask
        while rest:
            bit = rest & (-rest)
            rest &= ~bit
            if nbr[bit.bit_length() - 1] & mask & ~bit:
                return False
        return True

    memo: dict[tuple, bool] = {}

    def wins(alive: int, budget: tuple, mult: tuple) -> bool:
        if alive == 0:
            return True
        key = (alive, budget, mult)
        got = memo.get(key)
        if got is not None:
            return got
        result = True
        for marked in _submasks(alive):
            nb = list(budget)
            rest = marked
            while rest:
                bit = rest & (-rest)
                rest &= ~bit
                nb[bit.bit_length() - 1] -= 1
            nb = tuple(nb)
            reply_wins = False
            for sel in itertools.chain(_submasks(marked), (0,)):
                if not independent(sel):
                    continue
                nm = list(mult)
                alive2 = alive
                rest = sel
                while rest:
                    bit = rest & (-rest)
                    rest &= ~bit
                    e = bit.bit_length() - 1
                    nm[e] -= 1
                    if nm[e] == 0:
                        alive2 &= ~bit
                caught = False
                rest = alive2
                while rest:
                    bit = rest & (-rest)
                    rest &= ~bit
                    if nb[bit.bit_length() - 1] <= 0:
                        caught = True
                        break
                if not caught and wins(alive2, nb, tuple(nm)):
                    reply_wins = True
                    break
            if not reply_wins:
                result = False
                break
        memo[key] = result
        return result

    init = ((1 << n) - 1 if n else 0, budgets, tuple(m for _ in range(n)))
    paintable = wins(*init)
    tree = None
    if want_tree and paintable:
        tree = _build_tree(n, nbr, memo, wins, *init)
    return PaintabilityResult(paintable, tree)


def _build_tree(n, nbr, memo, wins, alive, budget, mult) -> dict:
    """Nested move map for a winning Painter: marked set -> reply and
    continuation. Exponential; meant for toy instances only."""
    out = {}
    for marked in _submasks(alive):
        nb = list(budget)
        rest = marked
        while rest:
            bit = rest & (-rest)
            rest &= ~bit
            nb[bit.bit_length() - 1] -= 1
        nb = tuple(nb)
        for sel in itertools.chain(_submasks(marked), (0,)):
            ok = True
            rest = sel
            while rest:
                bit = rest & (-rest)
                rest &= ~bit
                if nbr[bit.bit_length() - 1] & sel & ~bit:
                    ok = False
                    break
            if not ok:
                continue
            nm = list(mult)
            alive2 = alive
            rest = sel
            while rest:
                bit = rest & (-rest)
                rest &= ~bit
                e = bit.bit_length() - 1
                nm[e] -= 1
                if nm[e] == 0:
                    alive2 &= ~bit
            if any(nb[e] <= 0 for e in range(n) if alive2 >> e & 1):
                continue
            if wins(alive2, nb, tuple(nm)):
                key = ",".join(
                    str(e) for e in range(n) if marked >> e & 1
                )  # JSON-safe move key
                sub = (
                    _build_tree(n, nbr, memo, wins, alive2, nb, tuple(nm))
                    if alive2
                    else {}
                )
                out[key] = {
                    "select": [e for e in range(n) if sel >> e & 1],
                    "then": sub,
                }
                break
    return out


def replay_strategy(g: Graph, f, tree: dict, lister_moves, m: int = 1) -> str:
    """Replay a strategy tree against a concrete Lister (an iterable or
    callable producing marked sets); returns the winner."""
    state = GameState.fresh(g.m, f, m)
    node = tree
    moves = iter(lister_moves) if not callable(lister_moves) else None
    while state.alive:
        marked = (
            frozenset(next(moves)) if moves is not None else frozenset(lister_moves(state))
        )
        if not marked or not marked <= state.alive:
            raise ProtocolError("Lister must mark alive edges")
        for e in marked:
            state.budget[e] -= 1
        entry = node.get(",".join(str(e) for e in sorted(marked)))
        if entry is None:
            raise ProtocolError("strategy tree has no reply for this mark")
        for e in entry["select"]:
            state.multiplicity[e] -= 1
            if state.multiplicity[e] == 0:
                state.alive.discard(e)
        node = entry["then"]
        if any(state.budget[e] <= 0 for e in state.alive):
            return "Lister"
    return "Painter"
