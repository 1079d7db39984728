"""The 10-vertex prism with its shipped coloring: factors, discs, rotation, faces."""

from kleincolor import fixtures
from kleincolor.gf2 import EdgeSet, circular_sum, face_basis, maclane
from kleincolor.klein import B, G, R, disc_through, discs, face_coloring, factors, rotate, shift_face_coloring

g = fixtures.prism()
col = fixtures.prism_coloring()
print(g)

# 1-factors are the color classes, 2-factors their complements
f = factors(g, col)
for x in (R, B, G):
    print(x.name, "1-factor", sorted(f.one[x]), " 2-factor", sorted(f.two[x]))
print("sum of the 2-factors is empty:", not circular_sum(*f.two.values()))
print("sum of the 1-factors is every edge:", circular_sum(*f.one.values()) == EdgeSet.full(g))

# each 2-factor splits into discs, alternating the other two colors
for x in (R, B, G):
    print(x.name, "discs:", [d.edges for d in discs(g, col, x)])

# swap red and green along the long blue disc
d = disc_through(g, col, 6, B)
after = rotate(g, col, d)
fa = factors(g, after)
print("rotated", d.edges)
print("  red 2-factor  ", sorted(fa.two[R]))
print("  green 2-factor", sorted(fa.two[G]))
print("rotating again restores the coloring:", rotate(g, after, disc_through(g, after, 6, B)) == col)

# faces: outer face white, crossing an edge adds its color
ids = fixtures.prism_face_ids(g)
fc = face_coloring(g, col, g.faces[ids["c0"]])
names = ["c1", "c2", "c3", "c4", "c5", "c6", "c0"]
print("      " + "  ".join(names))
for shift in (None, R, B, G):
    row = fc if shift is None else shift_face_coloring(fc, shift)
    label = "orig" if shift is None else "+" + shift.name
    print(f"{label:<5} " + "   ".join(row[ids[n]].name for n in names))

print("MacLane functional of the face basis:", maclane(face_basis(g).elementary))
