"""Generalized jewels and the tree invariants built on them.

A vertex ``c`` is a jewel center when at least three of its neighbors have
degree >= 3.  The profile gathers everything the regularity bounds need:
internal-vertex count, the centers with their ``D(c)``, the components of
the subgraph induced on the centers, and the degree-3 bridging vertices
``C_G`` that sit between two centers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .graph import (
    GraphError,
    SimpleGraph,
    Tree,
    induced_subgraph,
    spine,
    validate_tree,
)


def n_geq(g: SimpleGraph, v: int, i: int) -> frozenset[int]:
    """Neighbors of ``v`` whose degree is at least ``i``."""
    return frozenset(u for u in g.neighbors(v) if g.degree(u) >= i)


def d_value(g: SimpleGraph, v: int) -> int:
    return len(n_geq(g, v, 3))


def jewel_centers(g: SimpleGraph) -> list[int]:
    return [v for v in g.vertices if d_value(g, v) >= 3]


@dataclass(frozen=True)
class JewelProfile:
    n: int
    iv: int
    centers: tuple[tuple[int, int], ...]
    components: tuple[int, ...]
    component_vertices: tuple[tuple[int, ...], ...]
    c_g: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.centers)

    @property
    def d_g(self) -> int:
        return sum(d for _, d in self.centers)

    @property
    def p(self) -> int:
        return len(self.components)

    @property
    def e_g(self) -> int:
        # two-vertex components of the center graph are its isolated edges
        return sum(1 for k in self.components if k == 2)

    @property
    def mu(self) -> int:
        return len(self.c_g)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "iv": self.iv,
            "centers": [{"vertex": c, "D": d} for c, d in self.centers],
            "D_G": self.d_g,
            "s": self.s,
            "components": list(self.components),
            "component_vertices": [list(c) for c in self.component_vertices],
            "p": self.p,
            "e_G": self.e_g,
            "C_G": list(self.c_g),
            "mu": self.mu,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "JewelProfile":
        return cls(
            n=d["n"],
            iv=d["iv"],
            centers=tuple((c["vertex"], c["D"]) for c in d["centers"]),
            components=tuple(d["components"]),
            component_vertices=tuple(tuple(c) for c in d["component_vertices"]),
            c_g=tuple(d["C_G"]),
        )


def jewel_profile(t: SimpleGraph) -> JewelProfile:
    t = validate_tree(t)
    dv = {v: d_value(t, v) for v in t.vertices}
    centers = [v for v in t.vertices if dv[v] >= 3]
    cset = set(centers)

    parent = {c: c for c in centers}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in t.edges:
        if u in cset and v in cset:
            parent[find(u)] = find(v)
    groups: dict[int, list[int]] = {}
    for c in centers:
        groups.setdefault(find(c), []).append(c)
    comps = sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0])

    c_g = tuple(
        v
        for v in t.vertices
        if t.degree(v) == 3 and dv[v] == 2 and n_geq(t, v, 3) <= cset
    )
    return JewelProfile(
        n=t.n,
        iv=t.iv(),
        centers=tuple((c, dv[c]) for c in centers),
        components=tuple(len(g) for g in comps),
        component_vertices=tuple(comps),
        c_g=c_g,
    )


def jewel_subgraph(t: SimpleGraph, c: int) -> tuple[SimpleGraph, list[int]]:
    """The jewel centered at ``c``: induced on the union of ``N[u]`` over its supports."""
    supports = n_geq(t, c, 3)
    if len(supports) < 3:
        raise GraphError(f"vertex {c} is not a jewel center (D={len(supports)})")
    vs: set[int] = set()
    for u in supports:
        vs |= t.closed_neighborhood(u)
    return induced_subgraph(t, vs)


def is_caterpillar(t: SimpleGraph) -> int | None:
    """Spine length if ``t`` is a caterpillar, else ``None``."""
    t = validate_tree(t)
    internal = t.internal_vertices()
    if internal:
        sub, _ = induced_subgraph(t, internal)
        # a tree on the internal vertices; it is a path iff max degree <= 2
        if any(sub.degree(v) > 2 for v in sub.vertices):
            return None
    return spine(t).length


# ---------------------------------------------------------------- caterpillar trimming

class Replacement(NamedTuple):
    vertex: int | None  # attachment vertex, labeled as in the input tree
    star_size: int
    spine_length: int


@dataclass(frozen=True)
class CaterpillarTrim:
    trimmed: Tree
    length_credit: int
    replaced: tuple[Replacement, ...] = ()
    # original label of each trimmed-tree vertex; None for star vertices added by trimming
    labels: tuple[int | None, ...] = field(default=(), compare=False)

    def to_dict(self) -> dict:
        return {
            "credit": self.length_credit,
            "replaced": [r._asdict() for r in self.replaced],
            "n_after": self.trimmed.n,
        }


def _branch(t: Tree, v: int, w: int) -> set[int]:
    """Vertices of the component of ``t - v`` that contains ``w``."""
    seen = {v, w}
    stack = [w]
    while stack:
        a = stack.pop()
        for b in t.neighbors(a):
            if b not in seen:
                seen.add(b)
                stack.append(b)
    seen.discard(v)
    return seen


def _attached_caterpillar(t: Tree, v: int, w: int) -> list[int] | None:
    """Internal spine ``[v_{l-1}, ..., v_1]`` of the caterpillar hanging at ``v`` through ``w``.

    ``None`` unless the branch plus ``v`` is a caterpillar whose spine starts
    at ``v``, has length >= 3, and every internal spine vertex has degree >= 3.
    """
    branch = _branch(t, v, w)
    internal = [u for u in branch if t.degree(u) >= 2]
    if len(internal) < 2:
        return None
    iset = set(internal)
    if any(t.degree(u) < 3 for u in internal):
        return None
    # internal vertices must induce a path with w at one end
    ideg = {u: len(t.neighbors(u) & iset) for u in internal}
    if any(d > 2 for d in ideg.values()) or ideg[w] != 1:
        return None
    order = [w]
    prev = None
    while True:
        nxt = [u for u in t.neighbors(order[-1]) & iset if u != prev]
        if not nxt:
            break
        prev = order[-1]
        order.append(nxt[0])
    if len(order) != len(internal):
        return None
    return order


def _find_trim(t: Tree) -> tuple[int, int, list[int]] | None:
    best = None
    for v in t.vertices:
        for w in sorted(t.neighbors(v)):
            path = _attached_caterpillar(t, v, w)
            if path is None:
                continue
            key = (-len(path), v, w)
            if best is None or key < best[0]:
                best = (key, v, w, path)
    if best is None:
        return None
    return best[1], best[2], best[3]


def trim_caterpillars(t: SimpleGraph) -> CaterpillarTrim:
    """Replace attached caterpillars by stars until none qualifies.

    A caterpillar with spine ``v = v_l, ..., v_0`` (``l >= 3``, every
    ``deg(v_i) >= 3`` for ``1 <= i <= l-1``) hanging at ``v`` is swapped for
    ``K_{1,t}`` glued to ``v`` by a leaf, ``t = sum deg(v_i) - 2l + 3``.
    Each swap lowers the regularity by exactly ``l - 2``, which is
    accumulated in ``length_credit``.  The longest qualifying caterpillar is
    trimmed first.
    """
    cur = validate_tree(t)
    labels: list[int | None] = list(cur.vertices)
    credit = 0
    replaced = []
    while True:
        found = _find_trim(cur)
        if found is None:
            break
        v, w, path = found
        l = len(path) + 1
        star = sum(cur.degree(u) for u in path) - 2 * l + 3
        drop = _branch(cur, v, w)
        keep = [u for u in cur.vertices if u not in drop]
        sub, kept = induced_subgraph(cur, keep)
        pos = {u: i + 1 for i, u in enumerate(kept)}
        c = sub.n + 1
        es = set(sub.edges) | {(pos[v], c)} | {(c, c + k) for k in range(1, star)}
        replaced.append(Replacement(labels[v - 1], star, l))
        labels = [labels[u - 1] for u in kept] + [None] * star
        cur = Tree(sub.n + star, frozenset(es))
        credit += l - 2
    return CaterpillarTrim(cur, credit, tuple(replaced), tuple(labels))
