"""Benchmark harness demo: sweep the constant threshold cap t = 1..10 with
t(v) = min(t, d(v)), comparing the elimination solver against the greedy
baseline on one random graph, then sweep edge density with exact optima on
small instances.  Writes CSV next to this script.

Run:  python3 demos/threshold_sweep.py
"""

import io
from pathlib import Path

from targetset import BenchConfig, GraphSource, run_bench, write_csv

out_dir = Path(__file__).resolve().parent

# Threshold sweep on a single source, two algorithms: 20 rows.
cfg = BenchConfig(
    sources=(GraphSource.parse("gnp:400:0.02"),),
    policy="const",
    sweep=tuple(range(1, 11)),
    algorithms=("tss", "greedy"),
    seed=1,
)
rows = run_bench(cfg)
with open(out_dir / "sweep_threshold.csv", "w") as fh:
    write_csv(rows, fh)

print("threshold sweep on gnp:400:0.02 (solution sizes):")
print(f"{'t':>3} {'tss':>6} {'greedy':>7}")
by_t = {}
for row in rows:
    by_t.setdefault(row.t_param, {})[row.algorithm] = row.solution_size
for t_param in sorted(by_t):
    print(f"{t_param:>3} {by_t[t_param]['tss']:>6} {by_t[t_param]['greedy']:>7}")

# Density sweep at n = 30 with random thresholds, exact optimum included.
sources = tuple(GraphSource.parse(f"gnp:30:{p/10}") for p in range(1, 10))
cfg = BenchConfig(
    sources=sources,
    policy="random",
    algorithms=("tss", "exact"),
    seed=2,
    exact_cap=30,
)
rows = run_bench(cfg)
with open(out_dir / "sweep_density.csv", "w") as fh:
    write_csv(rows, fh)

print("\ndensity sweep at n=30, thresholds uniform in [1, d]:")
print(f"{'p':>5} {'tss':>6} {'exact':>6}")
by_src = {}
for row in rows:
    by_src.setdefault(row.graph_name, {})[row.algorithm] = row.solution_size
for name in sorted(by_src, key=lambda s: float(s.rsplit(":", 1)[1])):
    p = name.rsplit(":", 1)[1]
    print(f"{p:>5} {by_src[name]['tss']:>6} {by_src[name]['exact']:>6}")

print(f"\nCSV written to {out_dir / 'sweep_threshold.csv'} and {out_dir / 'sweep_density.csv'}")
