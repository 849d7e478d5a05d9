"""The sharper size bound against the classical one.

On a star with threshold-1 leaves the classical bound grows linearly while
the sharper bound stays at 1, so the ratio grows like (n-1)/2.  On random
connected graphs the sharper bound always dominates both the classical bound
and the solver's actual output.

Run:  python3 demos/bounds_comparison.py
"""

from targetset import (
    bound_new,
    bound_old,
    check_bound_dominance,
    gnp,
    is_connected,
    random_in_degree,
    star_graph,
)

print("stars with threshold-1 leaves and center threshold n//2:")
print(f"{'n':>5} {'sharper':>9} {'classical':>11} {'ratio':>8}")
for n in (5, 9, 17, 33, 65):
    g = star_graph(n)
    t = [n // 2] + [1] * (n - 1)
    bn, bo = bound_new(g, t), bound_old(g, t)
    print(f"{n:>5} {str(bn):>9} {str(bo):>11} {float(bo / bn):>8.2f}")

print("\nrandom connected graphs, thresholds uniform in [1, d]:")
print(f"{'n':>4} {'m':>5} {'solver':>7} {'sharper':>9} {'classical':>11}")
seed = 0
shown = 0
while shown < 6:
    seed += 1
    g = gnp(30 + 5 * shown, 0.15, seed=seed)
    if not is_connected(g):
        continue
    t = random_in_degree(g, seed=seed)
    report = check_bound_dominance(g, t)  # asserts the guaranteed relations
    print(
        f"{g.n:>4} {g.m:>5} {report.tss_size:>7} "
        f"{float(report.bound_new):>9.2f} {float(report.bound_old):>11.2f}"
    )
    shown += 1
