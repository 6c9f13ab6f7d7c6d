"""Labeled simple graphs on ``{1..n}`` and the trees built from them.

Graphs are immutable; every edit returns a new graph on the same vertex
set.  Deleting a vertex leaves it in place as an isolated vertex.
"""

from __future__ import annotations

import heapq
import random
import re
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph data or an edit whose precondition fails."""


class ParseError(GraphError):
    pass


class NotATreeError(GraphError):
    pass


Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset[Edge]
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        cleaned = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"edge {e} outside 1..{self.n}")
            cleaned.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(cleaned))
        adj: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in cleaned:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: int | None = None) -> "SimpleGraph":
        es = [tuple(e) for e in edges]
        if n is None:
            n = max((max(e) for e in es), default=0)
        return cls(n, frozenset(es))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self._adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def leaves(self) -> list[int]:
        return [v for v in self.vertices if self.degree(v) == 1]

    def isolated(self) -> list[int]:
        return [v for v in self.vertices if self.degree(v) == 0]

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            dq = deque([s])
            while dq:
                a = dq.popleft()
                for b in self._adj[a]:
                    if b not in seen:
                        seen.add(b)
                        comp.append(b)
                        dq.append(b)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def distances_from(self, s: int) -> dict[int, int]:
        dist = {s: 0}
        dq = deque([s])
        while dq:
            a = dq.popleft()
            for b in self._adj[a]:
                if b not in dist:
                    dist[b] = dist[a] + 1
                    dq.append(b)
        return dist

    def to_edge_list(self) -> str:
        lines = [f"vertices: {self.n}"]
        lines += [f"{u} {v}" for u, v in self.sorted_edges()]
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.sorted_edges()})"


class Tree(SimpleGraph):
    """A connected acyclic :class:`SimpleGraph`.  Build with :func:`validate_tree`."""

    def __post_init__(self):
        super().__post_init__()
        if self.n == 0:
            raise NotATreeError("empty graph")
        if len(self.edges) != self.n - 1:
            raise NotATreeError(
                f"{len(self.edges)} edges on {self.n} vertices "
                + ("(contains a cycle)" if len(self.edges) >= self.n else "(disconnected)")
            )
        if not self.is_connected():
            raise NotATreeError("disconnected")

    @property
    def graph(self) -> SimpleGraph:
        return SimpleGraph(self.n, self.edges)

    def internal_vertices(self) -> list[int]:
        return [v for v in self.vertices if self.degree(v) >= 2]

    def iv(self) -> int:
        return len(self.internal_vertices())


def validate_tree(g: SimpleGraph) -> Tree:
    if isinstance(g, Tree):
        return g
    return Tree(g.n, g.edges)


# ---------------------------------------------------------------- parsing

_HEADER = re.compile(r"^vertices\s*:\s*(\S+)$", re.IGNORECASE)


def parse_graph(text: str) -> SimpleGraph:
    """Parse the edge-list format: optional ``vertices: n`` header, then ``u v`` per line."""
    declared = None
    edges: set[Edge] = set()
    seen_edge = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _HEADER.match(line)
        if m:
            if declared is not None or seen_edge:
                raise ParseError(f"line {lineno}: header must come first and only once")
            try:
                declared = int(m.group(1))
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {m.group(1)!r}") from None
            if declared < 1:
                raise ParseError(f"line {lineno}: vertex count must be positive")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer label in {raw!r}") from None
        if u < 1 or v < 1:
            raise ParseError(f"line {lineno}: labels must be positive")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at {u}")
        edges.add(_norm(u, v))
        seen_edge = True
    top = max((v for e in edges for v in e), default=0)
    if declared is None:
        if top == 0:
            raise ParseError("no edges and no vertex count")
        declared = top
    elif top > declared:
        raise ParseError(f"label {top} exceeds declared vertex count {declared}")
    return SimpleGraph(declared, frozenset(edges))


# ---------------------------------------------------------------- edits

def induced_subgraph(g: SimpleGraph, W: Iterable[int]) -> tuple[SimpleGraph, list[int]]:
    """Induced subgraph on ``W`` relabeled to ``1..|W|`` in increasing order.

    Returns the graph and ``labels`` with ``labels[i-1]`` the original label
    of new vertex ``i``.
    """
    labels = sorted(set(W))
    for w in labels:
        if not 1 <= w <= g.n:
            raise GraphError(f"vertex {w} not in graph")
    pos = {w: i + 1 for i, w in enumerate(labels)}
    es = frozenset((pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos)
    return SimpleGraph(len(labels), es), labels


def relabel(g: SimpleGraph, W: Iterable[int]) -> SimpleGraph:
    return induced_subgraph(g, W)[0]


def delete_edge(g: SimpleGraph, u: int, v: int) -> SimpleGraph:
    e = _norm(u, v)
    if e not in g.edges:
        raise GraphError(f"{e} is not an edge")
    return SimpleGraph(g.n, g.edges - {e})


def add_edge(g: SimpleGraph, u: int, v: int) -> SimpleGraph:
    e = _norm(u, v)
    if e in g.edges:
        raise GraphError(f"{e} is already an edge")
    return SimpleGraph(g.n, g.edges | {e})


def delete_vertex(g: SimpleGraph, v: int) -> SimpleGraph:
    """``G \\ v``: drop every edge at ``v``; ``v`` stays as an isolated vertex."""
    if not 1 <= v <= g.n:
        raise GraphError(f"vertex {v} not in graph")
    return SimpleGraph(g.n, frozenset(e for e in g.edges if v not in e))


def drop_isolated(g: SimpleGraph) -> SimpleGraph:
    return relabel(g, [v for v in g.vertices if g.degree(v) > 0])


def disjoint_union(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    shifted = {(u + g.n, v + g.n) for u, v in h.edges}
    return SimpleGraph(g.n + h.n, g.edges | shifted)


def _complete(vs: Iterable[int]) -> set[Edge]:
    return {_norm(a, b) for a, b in combinations(sorted(set(vs)), 2)}


def g_e_completion(g: SimpleGraph, i: int, j: int) -> SimpleGraph:
    """``G_e`` for ``e = {i, j}``: join every pair inside ``N(i)`` and inside ``N(j)``."""
    if i == j:
        raise GraphError("e must join two distinct vertices")
    extra = _complete(g.neighbors(i)) | _complete(g.neighbors(j))
    return SimpleGraph(g.n, g.edges | extra)


def attach_clique(g: SimpleGraph, v: int, s: int) -> SimpleGraph:
    """``G_s^v``: glue ``v`` to one vertex of a fresh ``K_s``."""
    if s < 2:
        raise GraphError("clique size must be at least 2")
    fresh = list(range(g.n + 1, g.n + s))
    return SimpleGraph(g.n + s - 1, g.edges | _complete([v, *fresh]))


def attach_star_via_leaf(g: SimpleGraph, v: int, s: int) -> SimpleGraph:
    """``Gbar_s^v``: glue ``v`` to a leaf of a fresh ``K_{1,s}``.

    The fresh center is ``n+1``; it gets ``s-1`` fresh leaves.
    """
    if s < 2:
        raise GraphError("star size must be at least 2")
    c = g.n + 1
    es = set(g.edges) | {(v, c)} | {(c, c + k) for k in range(1, s)}
    return SimpleGraph(g.n + s, frozenset(es))


def attach_pendants(g: SimpleGraph, v: int, k: int) -> SimpleGraph:
    es = set(g.edges) | {(v, g.n + i) for i in range(1, k + 1)}
    return SimpleGraph(g.n + k, frozenset(es))


@dataclass(frozen=True)
class EhhTriple:
    g_prime: SimpleGraph
    g_doubleprime: SimpleGraph
    g_tilde: SimpleGraph


def ehh_transform(g: SimpleGraph, v: int) -> EhhTriple:
    """Graphs ``G'``, ``G''`` and ``G~`` of the EHH exact sequence at ``v``.

    ``v`` is not chosen here; callers pick it from a leaf order.
    """
    if not 1 <= v <= g.n:
        raise GraphError(f"vertex {v} not in graph")
    gp = SimpleGraph(g.n, g.edges | _complete(g.closed_neighborhood(v)))
    return EhhTriple(gp, delete_vertex(g, v), delete_vertex(gp, v))


# ---------------------------------------------------------------- paths

@dataclass(frozen=True)
class SpinePath:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def tree_path(t: SimpleGraph, a: int, b: int) -> list[int]:
    parent = {a: 0}
    dq = deque([a])
    while dq:
        x = dq.popleft()
        if x == b:
            break
        for y in t.neighbors(x):
            if y not in parent:
                parent[y] = x
                dq.append(y)
    if b not in parent:
        raise GraphError(f"no path from {a} to {b}")
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return path[::-1]


def spine(t: Tree) -> SpinePath:
    """A longest path; ties go to the lexicographically smallest endpoint pair.

    The path is listed from its smaller endpoint.
    """
    if t.n == 1:
        return SpinePath((1,))
    # double BFS gives the diameter; then scan endpoints in order
    far = max(t.distances_from(1).items(), key=lambda kv: (kv[1], -kv[0]))[0]
    diam = max(t.distances_from(far).values())
    for a in t.vertices:
        if t.degree(a) != 1:
            continue
        dist = t.distances_from(a)
        hits = [b for b, d in dist.items() if d == diam and b > a]
        if hits:
            return SpinePath(tuple(tree_path(t, a, min(hits))))
    raise AssertionError("diameter not realised by a leaf pair")


def diameter_brute(g: SimpleGraph) -> int:
    return max(max(g.distances_from(v).values()) for v in g.vertices)


# ---------------------------------------------------------------- decomposition

def split_at_degree_two(t: Tree) -> list[Tree]:
    """Decompose at every degree-2 vertex until none is left.

    Two edges stay in one piece iff they meet at a vertex of degree >= 3, so
    a cut vertex of degree 2 ends up as a leaf in both of its pieces.  Pieces
    are relabeled in increasing order and returned sorted by their smallest
    original vertex.
    """
    return [p for p, _ in split_with_labels(t)]


def split_with_labels(t: Tree) -> list[tuple[Tree, list[int]]]:
    if t.n == 1:
        return [(t, [1])]
    parent = {e: e for e in t.edges}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for v in t.vertices:
        if t.degree(v) >= 3:
            inc = [_norm(v, u) for u in t.neighbors(v)]
            r = find(inc[0])
            for e in inc[1:]:
                parent[find(e)] = r
    groups: dict[Edge, set[int]] = {}
    for e in t.edges:
        groups.setdefault(find(e), set()).update(e)
    out = []
    for vs in sorted(groups.values(), key=min):
        sub, labels = induced_subgraph(t, vs)
        out.append((validate_tree(sub), labels))
    return out


# ---------------------------------------------------------------- Prüfer

def prufer_decode(seq: Sequence[int], n: int | None = None) -> Tree:
    seq = list(seq)
    if n is None:
        n = len(seq) + 2
    if n < 2 or len(seq) != n - 2:
        raise GraphError(f"sequence of length {len(seq)} cannot encode a tree on {n} vertices")
    for a in seq:
        if not 1 <= a <= n:
            raise GraphError(f"label {a} out of range 1..{n}")
    deg = [1] * (n + 1)
    for a in seq:
        deg[a] += 1
    leaves = [v for v in range(1, n + 1) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for a in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, a))
        deg[a] -= 1
        if deg[a] == 1:
            heapq.heappush(leaves, a)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Tree(n, frozenset(edges))


def prufer_encode(t: Tree) -> list[int]:
    deg = {v: t.degree(v) for v in t.vertices}
    adj = {v: set(t.neighbors(v)) for v in t.vertices}
    leaves = [v for v in t.vertices if deg[v] == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(t.n - 2):
        leaf = heapq.heappop(leaves)
        (nb,) = adj[leaf]
        seq.append(nb)
        adj[nb].discard(leaf)
        deg[nb] -= 1
        if deg[nb] == 1:
            heapq.heappush(leaves, nb)
    return seq


def random_tree(n: int, seed: int) -> Tree:
    """Uniform labeled tree on ``n`` vertices, deterministic per seed."""
    if n < 1:
        raise GraphError("need at least one vertex")
    if n == 1:
        return Tree(1, frozenset())
    rng = random.Random(seed)
    return prufer_decode([rng.randint(1, n) for _ in range(n - 2)], n)


def all_labeled_trees(n: int) -> Iterable[Tree]:
    """Every labeled tree on ``n`` vertices, one per Prüfer sequence."""
    from itertools import product

    if n == 1:
        yield Tree(1, frozenset())
        return
    for seq in product(range(1, n + 1), repeat=n - 2):
        yield prufer_decode(seq, n)


# ---------------------------------------------------------------- named graphs

def path_graph(n: int) -> Tree:
    return Tree(n, frozenset((i, i + 1) for i in range(1, n)))


def star_graph(r: int) -> Tree:
    """``K_{1,r}`` with center 1."""
    return Tree(r + 1, frozenset((1, i) for i in range(2, r + 2)))


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset(_complete(range(1, n + 1))))
