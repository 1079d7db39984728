"""Color many random planar cubic graphs and tabulate how the discs behaved."""

import sys

from kleincolor.builder import theorem_harness

count = int(sys.argv[1]) if len(sys.argv) > 1 else 200
rep = theorem_harness(count, max_vertices=60, budget=16, seed=0)
print(rep.format())
# fallbacks: steps where no rotation sequence found a disc through both edges
print("fallback rate per step:", rep.stats.oracle_fallbacks / max(rep.stats.steps_colored, 1))
