"""Dart model basics: builder, accessors, predicates, subgraphs, text format."""

import random

import pytest

from semicover.build import build_F, build_W, complete, complete_bipartite, cycle, path, petersen
from semicover.graph import (EDGE, LOOP, SEMI, GraphBuilder, GraphFormatError,
                             components, degree_signature, disjoint_union,
                             induced_link_subgraph, induced_vertex_subgraph,
                             is_bipartite, is_connected, is_regular, is_simple,
                             parse_graph, serialize_graph, type_signature,
                             validate)
from util import random_graph


def test_builder_and_degrees():
    gb = GraphBuilder()
    a = gb.add_vertex()
    b = gb.add_vertex(color=2, name="right")
    gb.add_semi(a, color=5)
    gb.add_loop(a)
    gb.add_edge(a, b)
    g = gb.build()
    assert g.n == 2
    assert g.n_darts == 5
    assert g.n_links == 3
    assert g.degree(0) == 4  # semi 1 + loop 2 + edge 1
    assert g.degree(1) == 1
    assert g.vertex_color == (0, 2)
    assert g.names[1] == "right"
    kinds = sorted(g.link_kind(l) for l in range(g.n_links))
    assert kinds == sorted([SEMI, LOOP, EDGE])


def test_partner_and_link_ends():
    g = build_F(1, 1)
    semi = next(l for l in range(g.n_links) if g.link_kind(l) == SEMI)
    loop = next(l for l in range(g.n_links) if g.link_kind(l) == LOOP)
    assert g.partner(g.links[semi][0]) is None
    d1, d2 = g.links[loop]
    assert g.partner(d1) == d2 and g.partner(d2) == d1


def test_isolated_vertices_allowed():
    gb = GraphBuilder()
    gb.add_vertex()
    gb.add_vertex()
    g = gb.build()
    assert g.n == 2 and g.n_darts == 0
    assert not is_connected(g)
    assert len(components(g)) == 2
    assert validate(g) == []


def test_family_shapes():
    f = build_F(2, 3)
    assert f.n == 1 and f.degree(0) == 2 + 6
    assert sum(1 for l in range(f.n_links) if f.link_kind(l) == SEMI) == 2
    assert sum(1 for l in range(f.n_links) if f.link_kind(l) == LOOP) == 3

    w = build_W(2, 2, 2, 1, 1)
    assert w.n == 2
    assert sorted((w.degree(0), w.degree(1))) == [5, 8]

    with pytest.raises(ValueError):
        build_W(1, 1, 0, 1, 1)


def test_standard_graphs():
    c5 = cycle(5)
    assert c5.n == 5 and is_regular(c5) and c5.degree(0) == 2
    assert is_connected(c5) and is_simple(c5) and not is_bipartite(c5)
    assert is_bipartite(cycle(6))

    p = petersen()
    assert p.n == 10 and is_regular(p) and p.degree(0) == 3
    assert is_simple(p) and not is_bipartite(p)

    k4 = complete(4)
    assert k4.n == 4 and all(k4.degree(v) == 3 for v in range(4))

    k23 = complete_bipartite(2, 3)
    assert is_bipartite(k23) and k23.n_links == 6

    p4 = path(4, semi_ends=True)
    assert p4.degree(0) == 2 and p4.degree(1) == 2
    assert sum(1 for l in range(p4.n_links) if p4.link_kind(l) == SEMI) == 2


def test_is_simple_rejections():
    gb = GraphBuilder()
    a = gb.add_vertex()
    gb.add_loop(a)
    assert not is_simple(gb.build())

    gb = GraphBuilder()
    a, b = gb.add_vertex(), gb.add_vertex()
    gb.add_edge(a, b)
    gb.add_edge(a, b)
    assert not is_simple(gb.build())

    gb = GraphBuilder()
    a = gb.add_vertex()
    gb.add_semi(a)
    assert not is_simple(gb.build())


def test_signatures():
    w = build_W(1, 0, 1, 0, 1)  # semi + bar at each vertex
    assert degree_signature(w, 0) == degree_signature(w, 1)
    assert type_signature(w, 0) == type_signature(w, 1)

    w2 = build_W(2, 0, 1, 0, 0)
    assert degree_signature(w2, 0) != degree_signature(w2, 1)

    gb = GraphBuilder()
    a = gb.add_vertex()
    b = gb.add_vertex()
    gb.add_semi(a, color=1)
    gb.add_loop(a)
    gb.add_semi(b)
    gb.add_loop(b)
    g = gb.build()
    # same degrees, different dart colors
    assert degree_signature(g, 0) != degree_signature(g, 1) or \
        type_signature(g, 0) != type_signature(g, 1)


def test_components_and_union():
    g = disjoint_union([cycle(3), cycle(4), build_F(1, 1)])
    assert g.n == 8
    comps = components(g)
    assert [c.graph.n for c in comps] == [3, 4, 1]
    # dart ids translate back faithfully
    for comp in comps:
        for local, glob in enumerate(comp.dart_ids):
            assert g.vertex_of[glob] == comp.vertex_ids[comp.graph.vertex_of[local]]


def test_induced_link_subgraph():
    gb = GraphBuilder()
    a, b = gb.add_vertex(), gb.add_vertex()
    gb.add_edge(a, b, colors=(1, 1))
    gb.add_edge(a, b, colors=(2, 2))
    gb.add_semi(a, color=1)
    g = gb.build()
    sub, darts = induced_link_subgraph(g, [1])
    assert sub.n == 2 and sub.n_links == 2
    assert all(g.dart_color[d] == 1 for d in darts)
    sub2, _ = induced_link_subgraph(g, [2])
    assert sub2.n_links == 1


def test_induced_vertex_subgraph():
    g = build_W(1, 1, 2, 1, 1)
    sub, verts, darts = induced_vertex_subgraph(g, [0])
    assert sub.n == 1
    assert list(verts) == [0]
    # keeps the semi and the loop, drops the bars
    assert sub.n_links == 2
    assert sub.degree(0) == 3


def test_parse_serialize_roundtrip_known():
    text = """\
# a colored multigraph
vertex a
vertex b color=3
edge a b colors=1,2
loop a
semi b color=4
"""
    g = parse_graph(text)
    assert g.n == 2 and g.n_links == 3
    assert g.vertex_color == (0, 3)
    out = serialize_graph(g)
    g2 = parse_graph(out)
    assert serialize_graph(g2) == out
    assert g2.n == g.n and g2.n_darts == g.n_darts


def test_parse_serialize_roundtrip_random():
    rng = random.Random(11)
    for _ in range(60):
        g = random_graph(rng, rng.randrange(1, 6), rng.randrange(0, 8),
                         colors=(0, 1, 2))
        out = serialize_graph(g)
        g2 = parse_graph(out)
        assert serialize_graph(g2) == out
        assert (g2.n, g2.n_darts, g2.n_links) == (g.n, g.n_darts, g.n_links)


def test_parse_errors():
    with pytest.raises(GraphFormatError):
        parse_graph("edge a b")  # undeclared
    with pytest.raises(GraphFormatError):
        parse_graph("vertex a\nvertex a")
    with pytest.raises(GraphFormatError):
        parse_graph("vertex a\nvertex b\nedge a a")
    with pytest.raises(GraphFormatError):
        parse_graph("flurb x")
    with pytest.raises(GraphFormatError):
        parse_graph("vertex a\nsemi a color=zebra")
    err = None
    try:
        parse_graph("vertex a\n\nbroken line here")
    except GraphFormatError as e:
        err = e
    assert err is not None and err.line == 3


def test_empty_graph_roundtrip():
    g = parse_graph("")
    assert g.n == 0 and g.n_darts == 0
    assert serialize_graph(g) == ""
