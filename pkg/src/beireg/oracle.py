"""Brute-force regularity of ``S/J_G`` for small graphs.

The lex initial ideal of ``J_G`` (order ``x_1 > ... > x_n > y_1 > ... > y_n``)
is squarefree and generated by the admissible-path monomials; since the
initial ideal is squarefree, ``reg S/J_G = reg S/in(J_G)``.  That
regularity is read off Hochster's formula,

    beta_{i,W}(S/I) = dim H~_{|W|-i-1}(Delta_W),

over the vertex sets ``W`` of the lcm lattice of ``I``, where ``Delta`` is the
Stanley-Reisner complex of ``I`` and ``Delta_W`` its restriction to ``W``.

Ring variables are numbered ``1..2n``: ``k`` is ``x_k`` and ``n+k`` is
``y_k``.  Internally a set of variables is an int bitmask with variable
``k`` at bit ``k-1``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable

from .graph import SimpleGraph, drop_isolated

DEFAULT_CHARACTERISTIC = 32003
DEFAULT_MAX_VARS = 20
DEFAULT_LATTICE_CAP = 2_000_000


class OracleCapExceeded(RuntimeError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = DEFAULT_CHARACTERISTIC

    def __post_init__(self):
        if not _is_prime(self.characteristic):
            raise ValueError(f"characteristic {self.characteristic} is not a prime")


GF2 = FieldSpec(2)
DEFAULT_FIELD = FieldSpec()


def max_vars_from_env(default: int = DEFAULT_MAX_VARS) -> int:
    raw = os.environ.get("BEIREG_MAX_VARS")
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low)
        mask ^= low
    return out


def _popcount(mask: int) -> int:
    return mask.bit_count()


def _minimalize(masks: Iterable[int]) -> list[int]:
    out: list[int] = []
    for m in sorted(set(masks), key=int.bit_count):
        for o in out:
            if o & m == o:
                break
        else:
            out.append(m)
    return out


# ---------------------------------------------------------------- initial ideal

@dataclass(frozen=True)
class EdgeBinomial:
    """``f_ij = x_i y_j - x_j y_i`` for an edge ``{i, j}``, ``i < j``."""

    i: int
    j: int

    def leading_term(self, n: int) -> frozenset[int]:
        return frozenset((self.i, n + self.j))


def edge_binomials(g: SimpleGraph) -> list[EdgeBinomial]:
    return [EdgeBinomial(u, v) for u, v in g.sorted_edges()]


@dataclass(frozen=True)
class AdmissiblePath:
    i: int
    j: int
    interior: tuple[int, ...]
    monomial: frozenset[int]

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.i, *self.interior, self.j)


def _connected_within(g: SimpleGraph, a: int, b: int, allowed: set[int]) -> bool:
    seen = {a}
    stack = [a]
    while stack:
        x = stack.pop()
        if x == b:
            return True
        for y in g.neighbors(x):
            if y in allowed and y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def _path_monomial(n: int, i: int, j: int, interior: Iterable[int]) -> frozenset[int]:
    mono = {i, n + j}
    for k in interior:
        mono.add(k if k > j else n + k)
    return frozenset(mono)


def admissible_paths(g: SimpleGraph) -> list[AdmissiblePath]:
    """All admissible paths ``i -> j`` with ``i < j``.

    A path is admissible when its vertices are distinct, every interior
    vertex lies outside ``[i, j]``, and no proper subset of the interior
    already connects ``i`` to ``j``.  The last condition is checked by
    removing one interior vertex at a time.
    """
    n = g.n
    out = []
    for i in g.vertices:
        for j in range(i + 1, n + 1):
            allowed = {k for k in g.vertices if k < i or k > j}
            # DFS over simple paths i -> j through allowed vertices
            stack = [(i, (i,))]
            while stack:
                x, path = stack.pop()
                for y in g.neighbors(x):
                    if y == j:
                        interior = path[1:]
                        if _minimal_path(g, i, j, interior):
                            out.append(AdmissiblePath(i, j, interior, _path_monomial(n, i, j, interior)))
                    elif y in allowed and y not in path:
                        stack.append((y, path + (y,)))
    out.sort(key=lambda p: (p.i, p.j, p.interior))
    return out


def _minimal_path(g: SimpleGraph, i: int, j: int, interior: tuple[int, ...]) -> bool:
    if not interior:
        return True
    if g.has_edge(i, j):
        return False
    rest = set(interior)
    for k in interior:
        if _connected_within(g, i, j, (rest - {k}) | {j}):
            return False
    return True


def _var_name(k: int, n: int) -> str:
    return f"x{k}" if k <= n else f"y{k - n}"


@dataclass(frozen=True)
class SquarefreeMonomialIdeal:
    num_vars: int
    generators: tuple[frozenset[int], ...]

    @classmethod
    def from_sets(cls, num_vars: int, sets: Iterable[Iterable[int]]) -> "SquarefreeMonomialIdeal":
        masks = []
        for s in sets:
            s = frozenset(s)
            if not s:
                raise ValueError("the unit ideal is not supported")
            if not all(1 <= k <= num_vars for k in s):
                raise ValueError(f"generator {sorted(s)} uses a variable outside 1..{num_vars}")
            masks.append(sum(1 << (k - 1) for k in s))
        return cls.from_masks(num_vars, masks)

    @classmethod
    def from_masks(cls, num_vars: int, masks: Iterable[int]) -> "SquarefreeMonomialIdeal":
        gens = tuple(
            frozenset(b.bit_length() for b in _bits(m))
            for m in sorted(_minimalize(masks), key=lambda m: sorted(b.bit_length() for b in _bits(m)))
        )
        return cls(num_vars, gens)

    @property
    def masks(self) -> list[int]:
        return [sum(1 << (k - 1) for k in g) for g in self.generators]

    def is_zero(self) -> bool:
        return not self.generators

    def describe(self) -> str:
        half = self.num_vars // 2
        terms = ["*".join(_var_name(k, half) for k in sorted(g)) for g in self.generators]
        return "<" + ", ".join(terms) + ">"


def initial_ideal(g: SimpleGraph) -> SquarefreeMonomialIdeal:
    """Lex initial ideal of ``J_G``, minimally generated."""
    return SquarefreeMonomialIdeal.from_sets(2 * g.n, [p.monomial for p in admissible_paths(g)])


# ---------------------------------------------------------------- homology

def _rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                inv = pow(row[c], p - 2, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                break
            f = row[c]
            for k, v in prow.items():
                nv = (row.get(k, 0) - f * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def _rank_gf2(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length()
            if top in pivots:
                r ^= pivots[top]
            else:
                pivots[top] = r
                break
    return len(pivots)


def _faces(W: int, nonfaces: list[int]) -> dict[int, list[int]]:
    """Faces of the complex on ``W`` avoiding ``nonfaces``, grouped by dimension."""
    verts = _bits(W)
    touching = {v: [m for m in nonfaces if m & v] for v in verts}
    by_dim: dict[int, list[int]] = {-1: [0]}

    def grow(start: int, face: int, dim: int):
        for k in range(start, len(verts)):
            v = verts[k]
            new = face | v
            if any(m & new == m for m in touching[v]):
                continue
            by_dim.setdefault(dim + 1, []).append(new)
            grow(k + 1, new, dim + 1)

    grow(0, 0, -1)
    return by_dim


def _homology_masks(W: int, nonfaces: list[int], p: int) -> dict[int, int]:
    inside = [m for m in nonfaces if m & W == m]
    by_dim = _faces(W, inside)
    ranks: dict[int, int] = {}
    for d, faces in by_dim.items():
        if d < 0:
            continue
        lower = {f: k for k, f in enumerate(by_dim[d - 1])}
        if p == 2:
            rows2 = []
            for f in faces:
                r = 0
                for b in _bits(f):
                    r |= 1 << lower[f ^ b]
                rows2.append(r)
            ranks[d] = _rank_gf2(rows2)
        else:
            rows = []
            for f in faces:
                row = {}
                sign = 1
                for b in _bits(f):
                    row[lower[f ^ b]] = sign % p
                    sign = -sign
                rows.append(row)
            ranks[d] = _rank_mod_p(rows, p)
    out = {}
    for d, faces in by_dim.items():
        h = len(faces) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def reduced_homology_dims(
    vertices: Iterable[int],
    nonfaces: Iterable[Iterable[int]],
    field: FieldSpec = DEFAULT_FIELD,
) -> dict[int, int]:
    """Reduced homology of the complex of subsets of ``vertices`` containing no nonface.

    Only nonzero dimensions are returned, keyed by degree (``-1`` included).
    """
    W = 0
    for v in vertices:
        W |= 1 << (v - 1)
    masks = [sum(1 << (k - 1) for k in nf) for nf in nonfaces]
    return _homology_masks(W, [m for m in masks if m & W == m], field.characteristic)


def face_counts(vertices: Iterable[int], nonfaces: Iterable[Iterable[int]]) -> dict[int, int]:
    W = 0
    for v in vertices:
        W |= 1 << (v - 1)
    masks = [sum(1 << (k - 1) for k in nf) for nf in nonfaces]
    return {d: len(fs) for d, fs in _faces(W, [m for m in masks if m & W == m]).items()}


# ---------------------------------------------------------------- Hochster

@dataclass
class BettiTable:
    """Multigraded Betti numbers ``beta_{i,W}(S/I)`` keyed by ``(i, W)``.

    ``complete`` is False when the table only holds the entries visited by
    a pruned regularity search.
    """

    num_vars: int
    entries: dict[tuple[int, frozenset[int]], int] = field(default_factory=dict)
    complete: bool = True

    @property
    def regularity(self) -> int:
        return max((len(W) - i for (i, W) in self.entries), default=0)

    def graded(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {(0, 0): 1}
        for (i, W), b in self.entries.items():
            out[(i, len(W))] = out.get((i, len(W)), 0) + b
        return out

    def to_dict(self) -> dict:
        graded = self.graded()
        return {
            "num_vars": self.num_vars,
            "complete": self.complete,
            "regularity": max(j - i for (i, j) in graded),
            "graded": [{"i": i, "j": j, "beta": b} for (i, j), b in sorted(graded.items())],
            "multigraded": [
                {"i": i, "support": sorted(W), "beta": b}
                for (i, W), b in sorted(self.entries.items(), key=lambda kv: (kv[0][0], sorted(kv[0][1])))
            ],
        }


def lcm_lattice(masks: list[int], cap: int = DEFAULT_LATTICE_CAP) -> dict[int, int]:
    """Union-closure of the generator supports.

    Maps each lattice element to the fewest generators whose union it is.
    """
    depth = {m: 1 for m in masks}
    frontier = list(depth)
    k = 1
    while frontier:
        k += 1
        nxt = []
        for w in frontier:
            for m in masks:
                u = w | m
                if u not in depth:
                    depth[u] = k
                    nxt.append(u)
                    if len(depth) > cap:
                        raise OracleCapExceeded(f"lcm lattice exceeds {cap} elements")
        frontier = nxt
    return depth


def _face_size_bound(W: int, inside: list[int]) -> int:
    """Upper bound on the size of a face of ``Delta_W``.

    Each generator in a disjoint family must lose a vertex.
    """
    used = 0
    packed = 0
    for m in sorted(inside, key=int.bit_count):
        if not m & used:
            used |= m
            packed += 1
    return W.bit_count() - packed


def _retracts_to_smaller(W: int, inside: list[int]) -> bool:
    """True when some vertex ``v`` of ``Delta_W`` has a cone as its link.

    Then ``Delta_W`` is homotopy equivalent to ``Delta_{W - v}``, whose
    homology sits in the same degrees, so ``W`` adds nothing new to the
    regularity.
    """
    for v in _bits(W):
        link = _minimalize(m & ~v for m in inside)
        covered = 0
        for m in link:
            covered |= m
        if (W & ~v) & ~covered:
            return True
    return False


def hochster_regularity(
    ideal: SquarefreeMonomialIdeal,
    field: FieldSpec = DEFAULT_FIELD,
    *,
    full_table: bool = False,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
) -> tuple[int, BettiTable]:
    """``reg(S/I)`` via Hochster's formula over the lcm lattice of ``I``.

    Without ``full_table`` the search visits lattice elements in decreasing
    order of the Taylor bound ``|W| - (fewest generators covering W)`` and
    stops once that bound cannot beat the best value found; ``W`` whose
    complex retracts onto a smaller restriction are skipped.  With
    ``full_table`` every lattice element is evaluated.
    """
    p = field.characteristic
    masks = ideal.masks
    table = BettiTable(ideal.num_vars, complete=full_table)
    if not masks:
        return 0, table
    depth = lcm_lattice(masks, lattice_cap)
    order = sorted(depth, key=lambda W: (depth[W] - W.bit_count(), W))
    best = 0
    for W in order:
        size = W.bit_count()
        if not full_table and size - depth[W] <= best:
            break
        inside = [m for m in masks if m & W == m]
        if not full_table and (
            _face_size_bound(W, inside) <= best or _retracts_to_smaller(W, inside)
        ):
            continue
        hom = _homology_masks(W, inside, p)
        for h, dim in hom.items():
            i = size - h - 1
            table.entries[(i, frozenset(b.bit_length() for b in _bits(W)))] = dim
            best = max(best, h + 1)
    return best, table


def oracle_reg(
    g: SimpleGraph,
    field: FieldSpec = DEFAULT_FIELD,
    *,
    max_vars: int | None = None,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
) -> int:
    """Ground-truth ``reg(S/J_G)``; isolated vertices are ignored."""
    return oracle_with_table(g, field, max_vars=max_vars, lattice_cap=lattice_cap)[0]


def oracle_with_table(
    g: SimpleGraph,
    field: FieldSpec = DEFAULT_FIELD,
    *,
    max_vars: int | None = None,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
    full_table: bool = False,
) -> tuple[int, BettiTable]:
    if max_vars is None:
        max_vars = max_vars_from_env()
    core = drop_isolated(g)
    if 2 * core.n > max_vars:
        raise OracleCapExceeded(
            f"{core.n} non-isolated vertices need {2 * core.n} ring variables (cap {max_vars})"
        )
    return hochster_regularity(initial_ideal(core), field, full_table=full_table, lattice_cap=lattice_cap)
