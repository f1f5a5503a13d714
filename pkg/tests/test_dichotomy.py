"""Complexity classification and the colored dispatch decider."""

import random

import pytest

from semicover.build import build_F, build_W, build_WD, cycle, path
from semicover.cover import find_cover
from semicover.dichotomy import (Classification, FamilyShape, OutOfScope,
                                 classify, decide_colored, recognize_shape,
                                 shade_vertex_colors)
from semicover.graph import GraphBuilder, disjoint_union
from util import assert_cover_ok, perturb, random_lift

POLY_TARGETS = ([build_F(0, c) for c in range(4)]
                + [build_F(1, c) for c in range(3)]
                + [build_F(2, 0)]
                + [build_W(0, 0, k, 0, 0) for k in (1, 2, 3)])

HARD_TARGETS = [build_F(2, 1), build_F(3, 0), build_W(1, 1, 1, 1, 1),
                build_WD(1, 2, 1), build_W(2, 2, 2, 1, 1)]


def test_polynomial_table():
    for h in POLY_TARGETS:
        cls = classify(h)
        assert cls.polynomial, h.links
        assert cls.verdict == "P"
        assert all(v == "P" for v in cls.pieces.values())


def test_hard_table():
    for h in HARD_TARGETS:
        cls = classify(h)
        assert not cls.polynomial, h.links
        assert cls.verdict == "NP-complete"
        assert any(v == "NP-complete" for v in cls.pieces.values())


def test_rules_cite_inequalities():
    cls = classify(build_F(2, 1))
    joined = " ".join(cls.rules)
    assert "F(2,1)" in joined and ">= 2" in joined and ">= 3" in joined
    cls = classify(build_W(1, 1, 1, 1, 1))
    joined = " ".join(cls.rules)
    assert "k+2m+l" in joined and ">= 3" in joined
    cls = classify(build_WD(1, 2, 1))
    joined = " ".join(cls.rules)
    assert "m+l" in joined and ">= 3" in joined


def test_nonregular_hard_side():
    cls = classify(build_W(2, 2, 2, 1, 1))
    assert not cls.polynomial
    joined = " ".join(cls.rules)
    assert "F(2,2)" in joined and "NP-complete" in joined
    assert cls.pieces.get("vertex 1 color 0") == "P"
    assert cls.pieces.get("vertex 0 color 0") == "NP-complete"


def test_classify_scope():
    with pytest.raises(OutOfScope):
        classify(cycle(3))
    with pytest.raises(OutOfScope):
        classify(GraphBuilder().build())
    with pytest.raises(OutOfScope):
        classify(disjoint_union([build_F(0, 1), build_F(0, 1)]))


def test_recognize_family_shapes():
    assert recognize_shape(build_F(1, 1)) == FamilyShape("F", (1, 1))
    assert recognize_shape(build_F(0, 0)) == FamilyShape("F", (0, 0))
    assert recognize_shape(build_W(1, 0, 2, 0, 1)) == FamilyShape("W", (1, 0, 2, 0, 1))
    assert recognize_shape(build_WD(2, 1, 1)) == FamilyShape("WD", (2, 1, 1))
    assert recognize_shape(build_WD(1, 2, 1)) == FamilyShape("WD", (1, 2, 1))


def test_recognize_w_orders_heavier_side_first():
    shape = recognize_shape(build_W(0, 0, 1, 1, 1))
    assert shape.kind == "W"
    assert shape.params == (1, 1, 1, 0, 0)


def test_recognize_other_shapes():
    b = GraphBuilder()
    b.add_vertex()
    b.add_loop(0, colors=(1, 1))
    b.add_loop(0, colors=(2, 2))
    assert recognize_shape(b.build()).kind == "other"
    b = GraphBuilder()
    b.add_vertex()
    b.add_vertex()
    b.add_semi(0)
    b.add_semi(1)
    assert recognize_shape(b.build()).kind == "other"
    with pytest.raises(OutOfScope):
        recognize_shape(cycle(3))


def test_shading_zeroes_vertex_colors():
    b = GraphBuilder()
    b.add_vertex(color=1)
    b.add_vertex(color=2)
    b.add_edge(0, 1)
    b.add_loop(0)
    b.add_semi(1)
    g = b.build()
    s = shade_vertex_colors(g)
    assert all(c == 0 for c in s.vertex_color)
    assert s.n_links == g.n_links and s.n_darts == g.n_darts
    darts0 = {s.dart_color[d] for d in s.darts_at[0]}
    darts1 = {s.dart_color[d] for d in s.darts_at[1]}
    assert darts0.isdisjoint(darts1)


def test_shading_preserves_cover_answers():
    rng = random.Random(53)
    b = GraphBuilder()
    b.add_vertex(color=1)
    b.add_vertex(color=2)
    b.add_edge(0, 1)
    b.add_edge(0, 1)
    b.add_semi(0)
    b.add_semi(1)
    h = b.build()
    agree = yes = 0
    for _ in range(40):
        g = random_lift(h, rng.randrange(1, 3), rng)
        if rng.random() < 0.5:
            g = perturb(g, rng)
        before = find_cover(g, h) is not None
        after = find_cover(shade_vertex_colors(g), shade_vertex_colors(h)) is not None
        assert before == after
        agree += 1
        yes += before
    assert agree == 40 and 0 < yes


def test_decide_colored_dispatch_methods():
    v = decide_colored(cycle(4), build_F(0, 1))
    assert v.answer and v.method != "brute-force-fallback"
    v = decide_colored(cycle(4), build_W(0, 0, 2, 0, 0))
    assert v.answer and v.method == "2-SAT"
    v = decide_colored(path(2), build_W(1, 0, 1, 0, 0))
    assert v.method != "brute-force-fallback"
    v = decide_colored(build_F(3, 0), build_F(3, 0))
    assert v.answer and v.method == "brute-force-fallback"


def test_decide_colored_fuzz_against_search():
    rng = random.Random(59)
    targets = POLY_TARGETS[1:] + HARD_TARGETS[:2]
    hits = 0
    for trial in range(200):
        h = targets[trial % len(targets)]
        if rng.random() < 0.55:
            g = random_lift(h, rng.randrange(1, 4), rng)
        else:
            g = perturb(random_lift(h, rng.randrange(1, 3), rng), rng)
        if g.n_darts > 14:
            continue
        v = decide_colored(g, h)
        expect = find_cover(g, h) is not None
        assert v.answer == expect
        if v.answer:
            assert_cover_ok(g, h, v.witness)
            hits += 1
    assert hits > 50


def test_decide_colored_scope_and_budget():
    from semicover.cover import ResourceLimit
    with pytest.raises(OutOfScope):
        decide_colored(cycle(6), cycle(3))
    big = random_lift(build_F(3, 0), 6, random.Random(2))
    with pytest.raises(ResourceLimit):
        decide_colored(big, build_F(3, 0), budget=10)
