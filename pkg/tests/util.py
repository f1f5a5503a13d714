"""Shared test helpers: random instances and independent brute-force oracles.

The oracles here deliberately avoid the library's search and matching
code so that agreement between the two is meaningful evidence.
"""

from __future__ import annotations

import random
from itertools import permutations, product

from semicover.graph import EDGE, LOOP, SEMI, Graph, GraphBuilder


def random_graph(rng: random.Random, n: int, m: int, colors=(0,),
                 semis: bool = True, loops: bool = True) -> Graph:
    """Random multigraph with n vertices and m links."""
    gb = GraphBuilder()
    for _ in range(n):
        gb.add_vertex()
    for _ in range(m):
        roll = rng.random()
        if semis and roll < 0.2:
            gb.add_semi(rng.randrange(n), color=rng.choice(colors))
        elif loops and roll < 0.4:
            gb.add_loop(rng.randrange(n),
                        colors=(rng.choice(colors), rng.choice(colors)))
        else:
            u = rng.randrange(n)
            w = rng.randrange(n)
            if u == w:
                if loops:
                    gb.add_loop(u, colors=(rng.choice(colors), rng.choice(colors)))
                else:
                    gb.add_semi(u, color=rng.choice(colors))
            else:
                gb.add_edge(u, w, colors=(rng.choice(colors), rng.choice(colors)))
    return gb.build()


def random_lift(h: Graph, k: int, rng: random.Random) -> Graph:
    """A random k-fold cover of h, built fiber by fiber.

    Semi-edges lift to a mix of semi-edges and matching edges inside the
    fiber, loops lift to loops and cycles, edges lift to a bijection
    between the two fibers.  The result covers h by construction.
    """
    gb = GraphBuilder()
    fiber: list[list[int]] = []
    for v in range(h.n):
        fiber.append([gb.add_vertex(color=h.vertex_color[v]) for _ in range(k)])
    for ds in h.links:
        if len(ds) == 1:
            d = ds[0]
            v = h.vertex_of[d]
            col = h.dart_color[d]
            idx = list(range(k))
            rng.shuffle(idx)
            while idx:
                if len(idx) >= 2 and rng.random() < 0.6:
                    a = idx.pop()
                    b = idx.pop()
                    gb.add_edge(fiber[v][a], fiber[v][b], colors=(col, col))
                else:
                    gb.add_semi(fiber[v][idx.pop()], color=col)
        else:
            d1, d2 = ds
            u, w = h.vertex_of[d1], h.vertex_of[d2]
            c1, c2 = h.dart_color[d1], h.dart_color[d2]
            perm = list(range(k))
            rng.shuffle(perm)
            if u == w:
                # permutation cycles: fixed points become loops
                seen = [False] * k
                for s in range(k):
                    if seen[s]:
                        continue
                    cyc = [s]
                    seen[s] = True
                    t = perm[s]
                    while t != s:
                        cyc.append(t)
                        seen[t] = True
                        t = perm[t]
                    if len(cyc) == 1:
                        gb.add_loop(fiber[u][s], colors=(c1, c2))
                    else:
                        for i, a in enumerate(cyc):
                            b = cyc[(i + 1) % len(cyc)]
                            gb.add_edge(fiber[u][a], fiber[u][b], colors=(c1, c2))
            else:
                for a in range(k):
                    gb.add_edge(fiber[u][a], fiber[w][perm[a]], colors=(c1, c2))
    return gb.build()


def perturb(g: Graph, rng: random.Random) -> Graph:
    """Rebuild g with one random link rewired; often breaks cover structure."""
    gb = GraphBuilder()
    for v in range(g.n):
        gb.add_vertex(color=g.vertex_color[v])
    links = list(range(g.n_links))
    victim = rng.choice(links) if links else None
    for l in links:
        ds = g.links[l]
        cols = tuple(g.dart_color[d] for d in ds)
        if l == victim and g.n > 1:
            ends = [rng.randrange(g.n) for _ in ds]
            if len(ds) == 1:
                gb.add_semi(ends[0], color=cols[0])
            elif ends[0] == ends[1]:
                gb.add_loop(ends[0], colors=(cols[0], cols[1]))
            else:
                gb.add_edge(ends[0], ends[1], colors=(cols[0], cols[1]))
        elif len(ds) == 1:
            gb.add_semi(g.vertex_of[ds[0]], color=cols[0])
        elif g.vertex_of[ds[0]] == g.vertex_of[ds[1]]:
            gb.add_loop(g.vertex_of[ds[0]], colors=(cols[0], cols[1]))
        else:
            gb.add_edge(g.vertex_of[ds[0]], g.vertex_of[ds[1]],
                        colors=(cols[0], cols[1]))
    return gb.build()


def brute_cover_exists(g: Graph, h: Graph) -> bool:
    """Exponential covering check: all vertex maps, all dart bijections.

    Independent of the library's search; only for very small graphs.
    """
    if g.n == 0:
        return True
    if h.n == 0:
        return False

    hlink_of = h.link_of

    def dart_maps_ok(assign: dict[int, int]) -> bool:
        for ds in g.links:
            if len(ds) == 1:
                ld = hlink_of[assign[ds[0]]]
                if len(h.links[ld]) != 1:
                    return False
            else:
                # image must be a whole link: a 2-dart link, or an edge
                # collapsing both darts onto one semi-edge
                a, b = assign[ds[0]], assign[ds[1]]
                if a == b:
                    if len(h.links[hlink_of[a]]) != 1:
                        return False
                elif hlink_of[a] != hlink_of[b]:
                    return False
        return True

    for vmap in product(range(h.n), repeat=g.n):
        if any(g.vertex_color[v] != h.vertex_color[vmap[v]] for v in range(g.n)):
            continue
        if any(len(g.darts_at[v]) != len(h.darts_at[vmap[v]]) for v in range(g.n)):
            continue
        per_vertex = []
        ok = True
        for v in range(g.n):
            gs = g.darts_at[v]
            hs = h.darts_at[vmap[v]]
            opts = [dict(zip(gs, pi)) for pi in permutations(hs)
                    if all(g.dart_color[a] == h.dart_color[b]
                           for a, b in zip(gs, pi))]
            if not opts:
                ok = False
                break
            per_vertex.append(opts)
        if not ok:
            continue
        for combo in product(*per_vertex):
            assign: dict[int, int] = {}
            for m in combo:
                assign.update(m)
            if dart_maps_ok(assign):
                return True
    return False


def edge_colorable(g: Graph, k: int) -> bool:
    """Proper k-edge-coloring of a simple graph, by backtracking."""
    edges = []
    for l, ds in enumerate(g.links):
        if len(ds) != 2 or g.vertex_of[ds[0]] == g.vertex_of[ds[1]]:
            return False  # loops and semis never color properly
        edges.append((g.vertex_of[ds[0]], g.vertex_of[ds[1]]))
    used = [set() for _ in range(g.n)]

    def rec(i: int) -> bool:
        if i == len(edges):
            return True
        u, w = edges[i]
        for c in range(k):
            if c not in used[u] and c not in used[w]:
                used[u].add(c)
                used[w].add(c)
                if rec(i + 1):
                    return True
                used[u].remove(c)
                used[w].remove(c)
        return False

    return rec(0)


def has_perfect_matching_brute(g: Graph) -> bool:
    """Backtracking perfect matching over the edges of a simple graph."""
    if g.n % 2:
        return False
    adj = [set() for _ in range(g.n)]
    for ds in g.links:
        if len(ds) == 2:
            u, w = g.vertex_of[ds[0]], g.vertex_of[ds[1]]
            if u != w:
                adj[u].add(w)
                adj[w].add(u)
    covered = [False] * g.n

    def rec() -> bool:
        try:
            v = covered.index(False)
        except ValueError:
            return True
        covered[v] = True
        for w in sorted(adj[v]):
            if not covered[w]:
                covered[w] = True
                if rec():
                    return True
                covered[w] = False
        covered[v] = False
        return False

    return rec()


def two_colorable(g: Graph) -> bool:
    """Independent bipartiteness check by BFS 2-coloring."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = [s]
        while queue:
            u = queue.pop()
            for d in g.darts_at[u]:
                p = g.partner(d)
                if p is None:
                    continue
                w = g.vertex_of[p]
                if w == u:
                    return False
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def partition_oracle(xs: list[int], q: int) -> bool:
    """Can the multiset xs be split into q parts of equal sum?"""
    total = sum(xs)
    if q < 1 or total % q:
        return False
    cap = total // q
    items = sorted(xs, reverse=True)
    if items and items[0] > cap:
        return False
    fills = [0] * q

    def rec(i: int) -> bool:
        if i == len(items):
            return True
        seen = set()
        for j in range(q):
            if fills[j] in seen:
                continue
            seen.add(fills[j])
            if fills[j] + items[i] <= cap:
                fills[j] += items[i]
                if rec(i + 1):
                    return True
                fills[j] -= items[i]
        return False

    return rec(0)


def connected_multigraphs(max_darts: int) -> list[Graph]:
    """All connected multigraphs with at most max_darts darts, one per
    isomorphism class.  Semi-edges, loops and parallel edges included."""
    from semicover.canon import CanonicalSet
    from semicover.graph import is_connected

    out: list[Graph] = []
    seen = CanonicalSet()
    for n in range(1, max_darts // 2 + 2):
        slots = ([("s", v) for v in range(n)]
                 + [("l", v) for v in range(n)]
                 + [("e", u, v) for u in range(n) for v in range(u + 1, n)])
        counts = [0] * len(slots)

        def emit() -> None:
            gb = GraphBuilder()
            for _ in range(n):
                gb.add_vertex()
            for slot, c in zip(slots, counts):
                for _ in range(c):
                    if slot[0] == "s":
                        gb.add_semi(slot[1])
                    elif slot[0] == "l":
                        gb.add_loop(slot[1])
                    else:
                        gb.add_edge(slot[1], slot[2])
            g = gb.build()
            if is_connected(g) and seen.add(g):
                out.append(g)

        def rec(i: int, budget: int) -> None:
            if i == len(slots):
                emit()
                return
            weight = 1 if slots[i][0] == "s" else 2
            c = 0
            while c * weight <= budget:
                counts[i] = c
                rec(i + 1, budget - c * weight)
                c += 1
            counts[i] = 0

        rec(0, max_darts)
    return out


def assert_cover_ok(g: Graph, h: Graph, f, **kw) -> None:
    from semicover.cover import verify_cover
    bad = verify_cover(g, h, f, **kw)
    assert bad == [], f"witness violations: {bad}"
