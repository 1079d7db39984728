"""Grow a cubic graph from the theta graph and watch the linked-pair cases."""

from collections import Counter

from kleincolor.builder import (
    RotationBudgetExhausted,
    canonical_theta_coloring,
    classify_linked_pair,
    generate_random,
    insert_and_color,
    reduce,
    replay,
)
from kleincolor.oracle import brute_force_edge3_color

h, trace = generate_random(40, seed=11)
print(h, "built in", len(trace), "steps")
print("method 2 steps:", sum(s.kind == "method2" for s in trace.steps))

# reduction finds its own trace back to theta, and replays exactly
tr = reduce(h)
print("reduce gives", len(tr), "steps; replay equal:", replay(tr) == h)

g = tr.base
col = canonical_theta_coloring(g)
cases = Counter()
for step in tr.steps:
    if step.kind == "method1":
        c = classify_linked_pair(g, col, *step.linked)
        cases[c.case.name] += 1
    try:
        g, col, rep = insert_and_color(g, col, step)
    except RotationBudgetExhausted as exc:
        # rotations alone got stuck; the oracle takes over
        print("stuck:", exc)
        g, col = exc.graph, brute_force_edge3_color(exc.graph, limit_edges=400)
        continue
    if rep.rotations:
        print(f"  {rep.case.name}: {rep.rotations} rotation(s), {rep.states} colorings seen")
print(dict(cases))
print("final coloring covers", len(col), "edges; graph matches:", g == h)
