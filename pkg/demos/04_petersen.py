"""The Petersen graph: not 3-edge-colorable, and its predecessor has no common disc."""

from kleincolor import fixtures
from kleincolor.builder import RotationBudgetExhausted, apply_method1, classify_linked_pair, insert_and_color
from kleincolor.gf2 import maclane
from kleincolor.graph import euler_check
from kleincolor.oracle import brute_force_edge3_color, enumerate_discs_brute

p = fixtures.petersen()
print("Petersen:", p.n_vertices, "vertices,", p.n_edges, "edges")
print("3-edge-coloring:", brute_force_edge3_color(p))

basis = [fixtures.PETERSEN_CYCLES[k] for k in fixtures.PETERSEN_BASIS]
print("MacLane functional of the basis", fixtures.PETERSEN_BASIS, "=", maclane(basis, 15))

# Petersen minus one edge, embedded on the torus
g = fixtures.petersen_predecessor()
col = fixtures.petersen_predecessor_coloring()
print("predecessor Euler report:", euler_check(g))
for x, cs in enumerate_discs_brute(g, col).items():
    print(x.name, "discs:", [sorted(c) for c in cs])

c = classify_linked_pair(g, col, 2, 15)
print("linked pair (2, 15):", c.case.name)
face = next(f for f in g.faces if {2, 15} <= set(f.edges))
_, step = apply_method1(g, 2, 15, face)
try:
    insert_and_color(g, col, step)
except RotationBudgetExhausted as exc:
    print("insertion fails:", exc)
    print("white witness:", {e: c.name for e, c in exc.witness.items() if c.name == "W"})
