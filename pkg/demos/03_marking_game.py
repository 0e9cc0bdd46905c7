"""The online coloring game: Lister marks, Painter deletes a kernel.

With budgets f(e) = outdeg(e) + 1 over a kernel-perfect orientation, the
kernel Painter never loses: every marked survivor keeps a deleted
out-neighbor, so its budget stays ahead of its live outdegree. At toy scale
an exact solver settles budgets with no orientation behind them.
"""

import random

from oddcycle import (
    exhaustive_paintability,
    kernel_painter,
    kernel_painter_always_wins,
    orient_graph,
    play_game,
)
from oddcycle.graphs import crown_graph, cycle_graph

rng = random.Random(7)

print("=== a random Lister against the kernel Painter on a 5-cycle ===")
g = cycle_graph(5)
d, cert = orient_graph(g, t=4)
budgets = {e: d.outdeg(e) + 1 for e in range(g.m)}
print("budgets:", budgets)


def chatty_lister(state):
    alive = sorted(state.alive)
    marked = rng.sample(alive, rng.randint(1, len(alive)))
    return marked


result = play_game(g, d, budgets, chatty_lister, kernel_painter(d, cert))
for i, round_ in enumerate(result.transcript, 1):
    print(f"round {i}: marked {round_['marked']} -> deleted {round_['selected']}")
print("winner:", result.winner)

print("\n=== no Lister line beats the kernel Painter (exhaustive) ===")
print("Painter always wins:", kernel_painter_always_wins(d, budgets))

print("\n=== exact answers where no orientation exists ===")
print("4-cycle, budget 2 everywhere:", exhaustive_paintability(cycle_graph(4), 2).paintable)
print("5-cycle, budget 2 everywhere:", exhaustive_paintability(cycle_graph(5), 2).paintable)

diamond = crown_graph(2)
tip_budgets = {e: (2 if 2 in diamond.edges[e] else 3) for e in range(diamond.m)}
print(
    "diamond with tip budgets (2,2,3,3,3), which no orientation can meet:",
    exhaustive_paintability(diamond, tip_budgets).paintable,
)
print("(the game is still winnable; the orientation route is what fails there)")
