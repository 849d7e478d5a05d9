"""On trees, cycles and cliques the elimination solver is exactly optimal.
This script draws random instances of each class and compares the solver
against the exhaustive oracle (and, for cliques, the closed form).

Run:  python3 demos/special_classes.py
"""

import random

from targetset import (
    clique_graph,
    clique_optimum,
    cycle_graph,
    exact_solve,
    random_in_degree,
    random_tree,
    tss_solve,
)

rng = random.Random(7)

print("trees (random thresholds in [1, d]):")
for i in range(5):
    n = rng.randint(6, 14)
    g = random_tree(n, seed=rng.randrange(10**6))
    t = random_in_degree(g, seed=rng.randrange(10**6))
    got = tss_solve(g, t).size
    opt = exact_solve(g, t).optimum_size
    print(f"  n={n:3d}  solver={got}  optimum={opt}  {'ok' if got == opt else 'MISMATCH'}")

print("cycles (threshold mixes over {0, 1, 2, 3}):")
for i in range(5):
    n = rng.randint(5, 12)
    g = cycle_graph(n)
    t = [rng.choice((0, 1, 2, 3)) for _ in range(n)]
    got = tss_solve(g, t).size
    opt = exact_solve(g, t).optimum_size
    print(f"  n={n:3d}  solver={got}  optimum={opt}  {'ok' if got == opt else 'MISMATCH'}")

print("cliques (random thresholds in [1, n+2], checked against the closed form):")
for i in range(5):
    n = rng.randint(4, 12)
    g = clique_graph(n)
    t = sorted(rng.randint(1, n + 2) for _ in range(n))
    got = tss_solve(g, t).size
    opt = exact_solve(g, t).optimum_size
    closed = clique_optimum(t)
    status = "ok" if got == opt == closed else "MISMATCH"
    print(f"  n={n:3d}  solver={got}  optimum={opt}  closed_form={closed}  {status}")
