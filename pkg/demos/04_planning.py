#!/usr/bin/env python3
"""Plan code configurations for a loss target, with and without partitioning.

First: the classic sizing question, the smallest n for which C(n, k) holds
the residual loss rate under 1e-5.  Larger blocks need relatively less
redundancy.  Second: when a planned code is partitioned, how many excess
parity packets restore its protection to within delta of the original.
"""

from collections import Counter

from fecpart import BecChannel, CodeSpec, PlanRequest, distribute_excess, min_n_for_target, plan

print("minimal n meeting PLR <= 1e-5 (redundancy ratio in parentheses):\n")
pe_values = (0.01, 0.03, 0.05, 0.07, 0.09, 0.1)
print("  p_e: " + "  ".join(f"{pe:>10}" for pe in pe_values))
for k in (40, 80):
    cells = []
    for pe in pe_values:
        spec = min_n_for_target(k, BecChannel(pe), 1e-5)
        cells.append(f"{spec.n:>4} ({spec.p / spec.k:.2f})")
    print(f"k={k:>3}: " + "  ".join(f"{c:>10}" for c in cells))

print("\na full plan with partitioning, k=40 at p_e=0.01:")
result = plan(PlanRequest(k=40, ch=BecChannel(0.01), partition=True))
ps = result.partition.ps
print(f"  plain:       C({result.spec.n},{result.spec.k})  plr={result.plr:.3e}")
print(f"  partitioned: C({ps.first.n},{ps.first.k}) + C({ps.second.n},{ps.second.k})"
      f"  plr={result.partition.plr:.3e}  excess={ps.excess}")

print("\nexcess packets needed across k (parity 5, delta 0.001):")
for pe in (0.01, 0.05, 0.1):
    ch = BecChannel(pe)
    counts = Counter(
        distribute_excess(CodeSpec(k + 5, k), ch, 0.001).excess
        for k in range(10, 111)
    )
    hist = "  ".join(f"excess={x}: {counts[x]}" for x in sorted(counts))
    print(f"  p_e={pe:<5} {hist}")
print("\nmost cells need no excess at all: partitioning is usually free.")
