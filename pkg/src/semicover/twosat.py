"""2-SAT via strongly connected components of the implication graph.

Literals are encoded as integers: variable i appears positively as 2*i and
negated as 2*i+1.  A clause is a pair of literals (a or b); unit clauses
repeat the literal.  Solving is linear in variables plus clauses.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def lit(var: int, positive: bool = True) -> int:
    return 2 * var + (0 if positive else 1)


def neg(literal: int) -> int:
    return literal ^ 1


def two_sat_solve(n_vars: int, clauses: Iterable[Sequence[int]]) -> list[bool] | None:
    """Satisfying assignment for the clause set, or None when unsatisfiable."""
    m = 2 * n_vars
    graph: list[list[int]] = [[] for _ in range(m)]
    for a, b in clauses:
        graph[neg(a)].append(b)
        graph[neg(b)].append(a)

    # Tarjan, iterative.  Components are numbered in completion order, so
    # an implication path u -> v gives comp[v] <= comp[u].
    index = [-1] * m
    low = [0] * m
    on_stack = [False] * m
    comp = [-1] * m
    stack: list[int] = []
    counter = 0
    n_comp = 0
    for root in range(m):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for i in range(pi, len(graph[v])):
                w = graph[v][i]
                if index[w] == -1:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comp
                    if w == v:
                        break
                n_comp += 1
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])

    out = []
    for i in range(n_vars):
        if comp[2 * i] == comp[2 * i + 1]:
            return None
        out.append(comp[2 * i] < comp[2 * i + 1])
    return out
