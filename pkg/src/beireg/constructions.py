"""Fixed labelings of the named trees used throughout the tests and demos."""

from __future__ import annotations

from .graph import Tree


def _tree(edges) -> Tree:
    n = max(max(e) for e in edges)
    return Tree(n, frozenset(edges))


def jewel_tree() -> Tree:
    """The 10-vertex jewel: center 1, supports 2, 3, 4, two leaves on each support."""
    return _tree([(1, 2), (1, 3), (1, 4), (2, 5), (2, 6), (3, 7), (3, 8), (4, 9), (4, 10)])


def fig2_tree() -> Tree:
    """Two adjacent centers 1, 2; supports 3, 4, 5 on 1 and 6, 7, 8 on 2; leaves 9..20."""
    edges = [(1, 2)]
    edges += [(1, s) for s in (3, 4, 5)] + [(2, s) for s in (6, 7, 8)]
    leaf = 9
    for s in range(3, 9):
        edges += [(s, leaf), (s, leaf + 1)]
        leaf += 2
    return _tree(edges)


def gamma_tree(d: int) -> Tree:
    """``d`` copies of the branch ``Gamma_v`` glued at the hub ``v = 1``.

    Copy ``i`` has ``u_i`` on the hub, ``a_i`` and ``b_i`` on ``u_i``, and two
    leaves on each of ``a_i`` and ``b_i``.
    """
    if d < 1:
        raise ValueError("need at least one copy")
    edges = []
    nxt = 2
    for _ in range(d):
        u, a, b = nxt, nxt + 1, nxt + 2
        edges += [(1, u), (u, a), (u, b)]
        edges += [(a, nxt + 3), (a, nxt + 4), (b, nxt + 5), (b, nxt + 6)]
        nxt += 7
    return _tree(edges)


def two_jewel_chain() -> Tree:
    """Centers 1 and 3 bridged by the degree-3 vertex 2, which carries one leaf.

    Each center has two supports with two leaves apiece; 16 vertices.
    """
    edges = [(1, 2), (2, 3), (2, 4)]
    edges += [(1, 5), (1, 6), (3, 7), (3, 8)]
    leaf = 9
    for s in (5, 6, 7, 8):
        edges += [(s, leaf), (s, leaf + 1)]
        leaf += 2
    return _tree(edges)


def caterpillar(degrees: list[int]) -> Tree:
    """Caterpillar whose spine interior has the given degrees (each >= 2).

    The spine is ``1, 2, ..., k+2`` for ``k = len(degrees)``; surplus degree
    is made up with pendant leaves.
    """
    k = len(degrees)
    if k == 0:
        return _tree([(1, 2)])
    if any(d < 2 for d in degrees):
        raise ValueError("interior spine vertices need degree >= 2")
    edges = [(i, i + 1) for i in range(1, k + 2)]
    nxt = k + 3
    for idx, d in enumerate(degrees):
        v = idx + 2
        for _ in range(d - 2):
            edges.append((v, nxt))
            nxt += 1
    return _tree(edges)
