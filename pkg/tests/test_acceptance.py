"""The eleven acceptance criteria, one test each.

Every test prints (and the terminal summary repeats) one PASS/FAIL line.
"""

import contextlib
import itertools
import time
from collections import Counter

from kleincolor import fixtures
from kleincolor.builder import (
    LinkedPairCase,
    RotationBudgetExhausted,
    apply_method1,
    classify_linked_pair,
    color_cubic,
    generate_random,
    insert_and_color,
    reduce,
    replay,
    replay_all,
)
from kleincolor.cli import main
from kleincolor.dualize import check_cubic, dualize
from kleincolor.gf2 import EdgeSet, circular_sum, face_basis, maclane
from kleincolor.graph import euler_check, is_bridgeless
from kleincolor.klein import (
    EDGE_COLORS,
    B,
    G,
    KleinColor,
    R,
    all_discs,
    cycle_color_sum_identities,
    disc_through,
    discs,
    face_coloring,
    factors,
    klein_add,
    rotate,
    shift_face_coloring,
    validate_proper,
)
from kleincolor.oracle import (
    brute_force_edge3_color,
    brute_force_vertex4_color,
    enumerate_discs_brute,
)
from kleincolor.planar_random import random_planar_graph
from kleincolor.tait import four_color, vertex_conflicts

from conftest import ACCEPTANCE, u


@contextlib.contextmanager
def criterion(n, title):
    notes = []
    try:
        yield notes
    except BaseException as exc:
        line = f"criterion {n:>2} FAIL  {title}: {type(exc).__name__}: {exc}"
        ACCEPTANCE[n] = line
        print(line)
        raise
    line = f"criterion {n:>2} PASS  {title}" + (f" ({'; '.join(notes)})" if notes else "")
    ACCEPTANCE[n] = line
    print(line)


def test_01_klein_table():
    with criterion(1, "Klein addition table") as notes:
        table = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
        cells = list(itertools.product(KleinColor, repeat=2))
        t = time.perf_counter()
        got = [klein_add(x, y) for x, y in cells]
        dt = time.perf_counter() - t
        assert got == [table[x][y] for x, y in cells]
        assert dt < 1e-3, dt
        notes.append(f"16/16 entries, {dt * 1e6:.0f} us")


def test_02_worked_example():
    with criterion(2, "worked example factors and factor identities") as notes:
        g, col = fixtures.prism(), fixtures.prism_coloring()
        t = time.perf_counter()
        f = factors(g, col)
        H = EdgeSet.full(g)
        assert f.one[R].members == u(2, 5, 7, 8, 15)
        assert f.one[B].members == u(3, 4, 9, 12, 13)
        assert f.one[G].members == u(1, 6, 10, 11, 14)
        assert f.two[R].members == u(1, 3, 4, 6, 9, 10, 11, 12, 13, 14)
        assert f.two[B].members == u(1, 2, 5, 6, 7, 8, 10, 11, 14, 15)
        assert f.two[G].members == u(2, 3, 4, 5, 7, 8, 9, 12, 13, 15)
        assert not circular_sum(f.two[R], f.two[G], f.two[B])  # 2-factors cancel
        assert circular_sum(f.one[R], f.one[G], f.one[B]) == H  # 1-factors cover H
        for x in EDGE_COLORS:  # each pair covers H
            assert f.one[x] ^ f.two[x] == H
        dt = time.perf_counter() - t
        assert dt < 10e-3, dt
        notes.append(f"{dt * 1e3:.2f} ms")


def test_03_disc_structure():
    with criterion(3, "disc structure") as notes:
        g, col = fixtures.prism(), fixtures.prism_coloring()
        assert {d.edge_set for d in discs(g, col, G)} == {u(2, 3, 8, 9, 12, 15), u(4, 5, 7, 13)}
        corpus = [
            (fixtures.theta(), None),
            (g, col),
            (fixtures.petersen_predecessor(), fixtures.petersen_predecessor_coloring()),
            (dualize(fixtures.k4())[0], None),
            (dualize(fixtures.bipyramid())[0], None),
            (dualize(fixtures.prism_primal())[0], None),
        ]
        count = 0
        for h, c in corpus:
            c = c or brute_force_edge3_color(h)
            for d in all_discs(h, c):
                assert len(d) % 2 == 0
                count += 1
        notes.append(f"{count} discs on {len(corpus)} fixtures, all even")


def test_04_rotation_regression():
    with criterion(4, "disc rotation regression") as notes:
        g, col = fixtures.prism(), fixtures.prism_coloring()
        d = disc_through(g, col, 6, B)
        assert d.edge_set == u(6, 7, 8, 10, 14, 15)
        after = rotate(g, col, d)
        f = factors(g, after)
        assert f.two[R].members == u(1, 3, 4, 7, 8, 9, 11, 12, 13, 15)
        assert f.two[G].members == u(2, 3, 4, 5, 6, 9, 10, 12, 13, 14)
        assert f.two[B].members == u(1, 2, 5, 6, 7, 8, 10, 11, 14, 15)
        assert rotate(g, after, disc_through(g, after, 6, B)) == col
        notes.append("blue disc {u6,u7,u8,u10,u14,u15}")


def test_05_face_coloring():
    with criterion(5, "face coloring table and color-class sums") as notes:
        g, col = fixtures.prism(), fixtures.prism_coloring()
        ids = fixtures.prism_face_ids(g)
        fc = face_coloring(g, col, g.faces[ids["c0"]])
        rows = {
            None: "GBGRBWW",
            R: "BGBWGRR",
            B: "RWRGWBB",
            G: "WRWBRGG",
        }
        names = ["c1", "c2", "c3", "c4", "c5", "c6", "c0"]
        for shift, row in rows.items():
            got = fc if shift is None else shift_face_coloring(fc, shift)
            assert "".join(got[ids[n]].name for n in names) == row
            assert cycle_color_sum_identities(g, got, col)
        notes.append("4 gauges")


def test_06_maclane():
    with criterion(6, "MacLane functional") as notes:
        graphs = [fixtures.theta(), fixtures.k4(), fixtures.prism()]
        graphs += [generate_random(2 + 2 * (s % 20), s)[0] for s in range(50)]
        for h in graphs:
            assert maclane(face_basis(h).elementary) == 0
        cycles = [fixtures.PETERSEN_CYCLES[k] for k in fixtures.PETERSEN_BASIS]
        tally = Counter(e for c in cycles for e in c)
        independent = sum((tally.get(e, 0) - 1) * (tally.get(e, 0) - 2) for e in range(1, 16))
        assert maclane(cycles, 15) == independent == 10
        notes.append(f"0 on {len(graphs)} planar bases, 10 on the Petersen basis")


def test_07_oracle_equivalence():
    with criterion(7, "builder vs oracle on 100 graphs, n <= 14") as notes:
        t = time.perf_counter()
        fallbacks = 0
        for s in range(100):
            h, _ = generate_random(2 + 2 * (s % 7), 1000 + s)
            col, stats = color_cubic(h)
            fallbacks += stats.oracle_fallbacks
            assert validate_proper(h, col) == []
            ref = brute_force_edge3_color(h)
            assert ref is not None and validate_proper(h, ref) == []
            brute = enumerate_discs_brute(h, col)
            for x in EDGE_COLORS:
                assert brute[x] == {d.edge_set for d in discs(h, col, x)}
        dt = time.perf_counter() - t
        assert dt < 60, dt
        notes.append(f"{dt:.1f} s, {fallbacks} fallbacks")


def test_08_petersen_negative():
    with criterion(8, "Petersen and its predecessor") as notes:
        t = time.perf_counter()
        assert brute_force_edge3_color(fixtures.petersen()) is None
        dt = time.perf_counter() - t
        assert dt < 1, dt
        g, col = fixtures.petersen_predecessor(), fixtures.petersen_predecessor_coloring()
        c = classify_linked_pair(g, col, 2, 15)
        assert c.case == LinkedPairCase.CASE3 and c.common is None
        face = next(f for f in g.faces if {2, 15} <= set(f.edges))
        _, step = apply_method1(g, 2, 15, face)
        try:
            insert_and_color(g, col, step)
        except RotationBudgetExhausted as exc:
            assert exc.complete
            notes.append(f"oracle {dt * 1e3:.0f} ms; no disc through (u2, u15), {exc.states} colorings searched")
        else:
            raise AssertionError("insertion unexpectedly succeeded")


def test_09_four_coloring():
    with criterion(9, "end-to-end four-coloring") as notes:
        graphs = [fixtures.triangle(), fixtures.k4(), fixtures.bipyramid()]
        graphs += [random_planar_graph(4 + s % 47, 2000 + s) for s in range(50)]
        worst = 0.0
        checked = 0
        for g in graphs:
            t = time.perf_counter()
            vc = four_color(g)
            dt = time.perf_counter() - t
            worst = max(worst, dt)
            assert dt < 1, dt
            assert set(vc.values()) <= {0, 1, 2, 3}
            assert vertex_conflicts(g, vc) == []
            if g.n_vertices <= 18:
                assert brute_force_vertex4_color(g) is not None
                checked += 1
        assert len(set(four_color(fixtures.triangle()).values())) == 3
        assert len(set(four_color(fixtures.k4()).values())) == 4
        notes.append(f"{len(graphs)} graphs, slowest {worst * 1e3:.0f} ms, oracle on {checked}")


def test_10_construction_calculus():
    with criterion(10, "reduce/replay round trip") as notes:
        steps = 0
        for s in range(100):
            h, trace = generate_random(2 + 2 * (s % 25), 3000 + s)
            tr = reduce(h)
            back = replay(tr)
            assert len(tr) == len(trace)
            assert (back.n_vertices, back.n_edges, len(back.faces)) == (
                h.n_vertices, h.n_edges, len(h.faces)
            )
            for x in replay_all(tr):
                assert check_cubic(x) and euler_check(x).ok and is_bridgeless(x)
                assert 2 * x.n_edges == 3 * x.n_vertices
                steps += 1
        notes.append(f"{steps} intermediate graphs checked")


def test_11_theorem_harness(capsys):
    with criterion(11, "fuzz 500 graphs, n <= 60, budget 16") as notes:
        t = time.perf_counter()
        code = main(["fuzz", "--count", "500", "--max-vertices", "60", "--budget", "16", "--seed", "0"])
        out = capsys.readouterr().out
        dt = time.perf_counter() - t
        rep = dict(line.split("=", 1) for line in out.splitlines() if "=" in line and " " not in line)
        assert code == 0
        assert rep["samples"] == rep["proper"] == "500"
        assert dt < 300, dt
        notes.append(
            f"{dt:.0f} s; cases {rep['case1']}/{rep['case2']}/{rep['case3']}/{rep['case4']}, "
            f"max depth {rep['max_rotation_depth']}, oracle_fallbacks={rep['oracle_fallbacks']} "
            f"(reachable space exhausted in {rep['fallbacks_space_exhausted']})"
        )
