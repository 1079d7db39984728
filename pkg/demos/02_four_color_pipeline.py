"""Triangulate, dualize, 3-edge-color the dual, read off a vertex 4-coloring."""

from kleincolor import fixtures
from kleincolor.builder import color_cubic
from kleincolor.dualize import cycle_matrix, dualize, format_matrix, incidence_matrix
from kleincolor.klein import face_coloring
from kleincolor.maximalize import triangulate
from kleincolor.planar_random import random_planar_graph
from kleincolor.tait import face_colors_to_vertex_colors, four_color, vertex_conflicts

# the five-vertex maximal graph and its cubic dual
g = fixtures.bipyramid()
h, corr = dualize(g)
letters = list("abcdefghi")
print("faces of G against edges:")
print(format_matrix(cycle_matrix(g), [f"c{f.id}" for f in g.faces], letters))
print("vertices of H against edges:")
print(format_matrix(incidence_matrix(h), [f"v{v}" for v in h.vertices], letters))

col, stats = color_cubic(h)
fc = face_coloring(h, col)
vc = face_colors_to_vertex_colors(g, h, corr, fc)
print("edge colors of H:", {e: c.name for e, c in col.items()})
print("vertex colors of G:", vc)

# any simple bridgeless embedded graph works the same way
p = random_planar_graph(40, seed=7)
m, rec = triangulate(p)
print(f"random graph: V={p.n_vertices} E={p.n_edges}, {len(rec.edges)} chords added")
vc = four_color(p)
print("labels used:", sorted(set(vc.values())), " conflicts:", vertex_conflicts(p, vc))
