"""Matching and factorization helpers used by the polynomial deciders.

Bipartite matchings are computed by augmenting paths over explicit link
lists, so parallel links keep their identity.  General graphs go through
networkx's blossom implementation.  Regular multigraphs are split into
spanning factors by Eulerian orientation plus repeated perfect matchings.
"""

from __future__ import annotations

import networkx as nx

from .graph import EDGE, LOOP, SEMI, Graph


def kuhn_matching(n_left: int, n_right: int,
                  links: list[tuple[int, int, int]]) -> list[int | None]:
    """Maximum bipartite matching over identified links.

    links are (left, right, link_id) triples.  Returns, per left vertex,
    the matched link id or None.  Deterministic: left vertices are
    processed in order and links in list order.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n_left)]
    for u, w, lid in links:
        adj[u].append((w, lid))
    match_right: list[tuple[int, int] | None] = [None] * n_right

    def augment(u: int, seen: list[bool]) -> bool:
        for w, lid in adj[u]:
            if seen[w]:
                continue
            seen[w] = True
            if match_right[w] is None or augment(match_right[w][0], seen):
                match_right[w] = (u, lid)
                return True
        return False

    for u in range(n_left):
        augment(u, [False] * n_right)
    match_left: list[int | None] = [None] * n_left
    for w, entry in enumerate(match_right):
        if entry is not None:
            match_left[entry[0]] = entry[1]
    return match_left


def konig_split(n_left: int, n_right: int, links: list[tuple[int, int, int]],
                k: int) -> list[list[tuple[int, int, int]]] | None:
    """Split a k-regular bipartite multigraph into k perfect matchings.

    Returns k lists of (left, right, link_id) or None if the input is not
    k-regular bipartite (then no split exists).
    """
    if n_left != n_right:
        return None
    deg_l = [0] * n_left
    deg_r = [0] * n_right
    for u, w, _ in links:
        deg_l[u] += 1
        deg_r[w] += 1
    if any(d != k for d in deg_l) or any(d != k for d in deg_r):
        return None
    remaining = list(links)
    out = []
    for _ in range(k):
        match_left = kuhn_matching(n_left, n_right, remaining)
        if any(m is None for m in match_left):
            return None
        chosen = {m for m in match_left}
        matching = [t for t in remaining if t[2] in chosen]
        remaining = [t for t in remaining if t[2] not in chosen]
        out.append(matching)
    return out


def exact_link_cover(g: Graph, *, force_all_semis: bool = False) -> list[int] | None:
    """Links covering every vertex exactly once; semi-edges self-cover.

    Loops are unusable.  With force_all_semis every semi-edge must be part
    of the cover (then a vertex carrying two semi-edges is infeasible),
    which is the exact preimage shape of a single target semi-edge.
    """
    semis_at: list[list[int]] = [[] for _ in range(g.n)]
    for l in range(g.n_links):
        if g.link_kind(l) == SEMI:
            semis_at[g.vertex_of[g.links[l][0]]].append(l)

    if force_all_semis:
        if any(len(s) > 1 for s in semis_at):
            return None
        saturated = {v for v in range(g.n) if semis_at[v]}
        need = [v for v in range(g.n) if v not in saturated]
        matching = _perfect_matching_over(g, set(need))
        if matching is None:
            return None
        return sorted(matching + [s[0] for s in semis_at if s])

    optional = {v for v in range(g.n) if semis_at[v]}
    matching = _matching_saturating(g, optional)
    if matching is None:
        return None
    covered = {v for l in matching for v in g.link_ends(l)}
    return sorted(matching + [semis_at[v][0] for v in range(g.n)
                              if v in optional and v not in covered])


def _edge_choices(g: Graph, allowed: set[int]) -> dict[tuple[int, int], int]:
    """Lowest link id per unordered vertex pair, edges inside allowed only."""
    choice: dict[tuple[int, int], int] = {}
    for l in range(g.n_links):
        if g.link_kind(l) != EDGE:
            continue
        u, w = g.link_ends(l)
        if u in allowed and w in allowed:
            key = (min(u, w), max(u, w))
            if key not in choice:
                choice[key] = l
    return choice


def _perfect_matching_over(g: Graph, need: set[int]) -> list[int] | None:
    """Perfect matching on the induced edge graph over `need`, as link ids."""
    if not need:
        return []
    choice = _edge_choices(g, need)
    gx = nx.Graph()
    gx.add_nodes_from(sorted(need))
    gx.add_edges_from(sorted(choice))
    matching = nx.max_weight_matching(gx, maxcardinality=True)
    if 2 * len(matching) != len(need):
        return None
    return [choice[(min(u, w), max(u, w))] for u, w in matching]


def _matching_saturating(g: Graph, optional: set[int]) -> list[int] | None:
    """Matching covering every vertex outside `optional`, or None.

    Maximizing total edge weight with weight = number of non-optional ends
    maximizes the number of saturated non-optional vertices.
    """
    need = [v for v in range(g.n) if v not in optional]
    if not need:
        return []
    choice = _edge_choices(g, set(range(g.n)))
    gx = nx.Graph()
    gx.add_nodes_from(range(g.n))
    for (u, w), _ in sorted(choice.items()):
        gx.add_edge(u, w, weight=(u not in optional) + (w not in optional))
    matching = nx.max_weight_matching(gx)
    saturated = {v for pair in matching for v in pair}
    if any(v not in saturated for v in need):
        return None
    return [choice[(min(u, w), max(u, w))] for u, w in matching
            if (u not in optional) or (w not in optional)]


def eulerian_orientation(g: Graph, link_ids: list[int]) -> dict[int, tuple[int, int]]:
    """Orient each listed link as (out_dart, in_dart), balanced per vertex.

    The listed links must induce even degree everywhere (loops and parallel
    edges allowed, semi-edges not).  Closed walks are peeled off greedily;
    orienting along them keeps in-degree equal to out-degree.
    """
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for l in link_ids:
        for d in g.links[l]:
            incident[g.vertex_of[d]].append(d)
    for lst in incident:
        lst.sort()
    ptr = [0] * g.n
    used: set[int] = set()
    orient: dict[int, tuple[int, int]] = {}
    for start in range(g.n):
        while True:
            while ptr[start] < len(incident[start]) and \
                    g.link_of[incident[start][ptr[start]]] in used:
                ptr[start] += 1
            if ptr[start] >= len(incident[start]):
                break
            v = start
            while True:
                while ptr[v] < len(incident[v]) and g.link_of[incident[v][ptr[v]]] in used:
                    ptr[v] += 1
                if ptr[v] >= len(incident[v]):
                    break
                d = incident[v][ptr[v]]
                l = g.link_of[d]
                used.add(l)
                d2 = g.partner(d)
                orient[l] = (d, d2)
                v = g.vertex_of[d2]
    return orient


def two_factor_orientations(g: Graph, link_ids: list[int] | None = None,
                            ) -> list[dict[int, tuple[int, int]]] | None:
    """Split a 2c-regular loop-allowing multigraph into c oriented 2-factors.

    Each factor maps every vertex to its (out_dart, in_dart) pair.  Returns
    None when the links do not induce a 2c-regular semi-free graph.
    """
    if link_ids is None:
        link_ids = list(range(g.n_links))
    if any(g.link_kind(l) == SEMI for l in link_ids):
        return None
    deg = [0] * g.n
    for l in link_ids:
        for v in g.link_ends(l):
            deg[v] += 1
    degs = set(deg)
    if len(degs) > 1 or (degs and (degs.pop() % 2)):
        return None
    c = (deg[0] // 2) if g.n else 0
    if c == 0:
        return [] if not link_ids else None
    orient = eulerian_orientation(g, link_ids)
    triples = [(g.vertex_of[out], g.vertex_of[inn], l)
               for l, (out, inn) in sorted(orient.items())]
    split = konig_split(g.n, g.n, triples, c)
    if split is None:
        return None
    factors = []
    for matching in split:
        factor: dict[int, tuple[int, int]] = {}
        for u, w, l in matching:
            out, inn = orient[l]
            factor[u] = (out, factor[u][1]) if u in factor else (out, -1)
            factor[w] = (factor[w][0], inn) if w in factor else (-1, inn)
        factors.append(factor)
    return factors
