"""Finite binary structures: autonomous sets, primality, rigidity, orientations.

Every structure type exposes ``n`` and ``relations`` (a tuple of ``n x n``
boolean arrays), and the generic functions below only rely on those two
attributes.  Orders are stored reflexively.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "BoundExceeded", "NotDimension2", "FiniteBinaryStructure", "FinitePoset",
    "FiniteGraph", "FiniteBichain", "is_autonomous", "autonomous_closure",
    "autonomous_sets", "is_prime", "is_prime_bruteforce", "endomorphisms",
    "is_semirigid", "self_embeddings", "is_embedding_rigid",
    "comparability_graph", "incomparability_graph", "transitive_orientations",
    "transitive_orientation", "intersection_order", "realizer2",
    "finite_orthogonal_exists", "structure_to_json", "structure_from_json",
    "to_dot", "natural_posets",
]

DEFAULT_ENDO_BOUND = 7
DEFAULT_ORIENT_BOUND = 8


class BoundExceeded(ValueError):
    """An exhaustive search was asked to run above its size bound."""


class NotDimension2(ValueError):
    """The poset is not the intersection of two linear orders."""


def _check_bound(n: int, bound: int | None, what: str) -> None:
    if bound is not None and n > bound:
        raise BoundExceeded(f"{what} on n={n} exceeds bound {bound}")


def _as_matrix(m, n: int) -> np.ndarray:
    a = np.asarray(m, dtype=bool)
    if a.shape != (n, n):
        raise ValueError(f"relation has shape {a.shape}, expected {(n, n)}")
    a = a.copy()
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class FiniteBinaryStructure:
    n: int
    relations: tuple[np.ndarray, ...]

    def __post_init__(self):
        if not self.relations:
            raise ValueError("a binary structure needs at least one relation")
        object.__setattr__(self, "relations",
                           tuple(_as_matrix(r, self.n) for r in self.relations))

    def __eq__(self, other):
        return (isinstance(other, FiniteBinaryStructure) and self.n == other.n
                and len(self.relations) == len(other.relations)
                and all(np.array_equal(a, b) for a, b in zip(self.relations, other.relations)))

    __hash__ = None

    def restrict(self, subset: Sequence[int]) -> "FiniteBinaryStructure":
        idx = np.asarray(subset, dtype=int)
        return FiniteBinaryStructure(len(idx), tuple(r[np.ix_(idx, idx)] for r in self.relations))


@dataclass(frozen=True, eq=False)
class FinitePoset:
    """A reflexive, antisymmetric, transitive relation on ``range(n)``."""

    n: int
    order: np.ndarray

    def __post_init__(self):
        m = _as_matrix(self.order, self.n)
        if not m.diagonal().all():
            raise ValueError("order is not reflexive")
        if (m & m.T & ~np.eye(self.n, dtype=bool)).any():
            raise ValueError("order is not antisymmetric")
        mi = m.astype(np.int64)
        if ((mi @ mi > 0) & ~m).any():
            raise ValueError("order is not transitive")
        object.__setattr__(self, "order", m)

    @classmethod
    def from_strict_pairs(cls, n: int, pairs: Iterable[tuple[int, int]],
                          close: bool = False) -> "FinitePoset":
        m = np.eye(n, dtype=bool)
        for x, y in pairs:
            m[x, y] = True
        if close:
            m = _transitive_closure(m)
        return cls(n, m)

    @property
    def relations(self) -> tuple[np.ndarray, ...]:
        return (self.order,)

    @property
    def strict(self) -> np.ndarray:
        return self.order & ~np.eye(self.n, dtype=bool)

    def strict_pairs(self) -> list[tuple[int, int]]:
        xs, ys = np.nonzero(self.strict)
        return sorted(zip(xs.tolist(), ys.tolist()))

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.n, self.order.T)

    def __eq__(self, other):
        return isinstance(other, FinitePoset) and self.n == other.n and np.array_equal(self.order, other.order)

    def __hash__(self):
        return hash((self.n, self.order.tobytes()))


@dataclass(frozen=True, eq=False)
class FiniteGraph:
    n: int
    edges: frozenset[frozenset[int]] = field(default_factory=frozenset)

    def __post_init__(self):
        es = frozenset(frozenset(e) for e in self.edges)
        for e in es:
            if len(e) != 2:
                raise ValueError(f"loops are not allowed: {set(e)}")
            if not all(0 <= v < self.n for v in e):
                raise ValueError(f"edge {set(e)} outside range({self.n})")
        object.__setattr__(self, "edges", es)

    @classmethod
    def from_adjacency(cls, adj: np.ndarray) -> "FiniteGraph":
        a = np.asarray(adj, dtype=bool)
        xs, ys = np.nonzero(np.triu(a, 1))
        return cls(a.shape[0], frozenset(frozenset(p) for p in zip(xs.tolist(), ys.tolist())))

    @property
    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        for e in self.edges:
            x, y = tuple(e)
            a[x, y] = a[y, x] = True
        return a

    @property
    def relations(self) -> tuple[np.ndarray, ...]:
        return (self.adjacency,)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def __eq__(self, other):
        return isinstance(other, FiniteGraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))


@dataclass(frozen=True, eq=False)
class FiniteBichain:
    """Two linear orders on ``range(n)``, each given as a rank vector.

    ``first[x]`` is the rank of ``x`` in the first order.  The canonical form
    relabels points by their first rank, so ``first`` becomes the identity and
    ``second`` is the permutation ``sigma`` of the bichain ``B_sigma``.
    """

    first: tuple[int, ...]
    second: tuple[int, ...]

    def __post_init__(self):
        f, s = tuple(int(v) for v in self.first), tuple(int(v) for v in self.second)
        if len(f) != len(s):
            raise ValueError("orders must live on the same ground set")
        for name, r in (("first", f), ("second", s)):
            if sorted(r) != list(range(len(r))):
                raise ValueError(f"{name} is not a permutation of range({len(r)})")
        object.__setattr__(self, "first", f)
        object.__setattr__(self, "second", s)

    @classmethod
    def of_permutation(cls, sigma: Sequence[int]) -> "FiniteBichain":
        """``B_sigma`` for a 0-indexed one-line permutation."""
        return cls(tuple(range(len(sigma))), tuple(sigma))

    @classmethod
    def from_orders(cls, l1: np.ndarray, l2: np.ndarray) -> "FiniteBichain":
        """Build from two reflexive linear-order matrices (rank = #predecessors)."""
        r1 = np.asarray(l1, dtype=bool).sum(axis=0) - 1
        r2 = np.asarray(l2, dtype=bool).sum(axis=0) - 1
        return cls(tuple(r1.tolist()), tuple(r2.tolist()))

    @property
    def n(self) -> int:
        return len(self.first)

    @staticmethod
    def _order(ranks: Sequence[int]) -> np.ndarray:
        r = np.asarray(ranks)
        return r[:, None] <= r[None, :]

    @property
    def relations(self) -> tuple[np.ndarray, np.ndarray]:
        return self._order(self.first), self._order(self.second)

    def canonical(self) -> "FiniteBichain":
        """Relabel by first rank; returns ``B_sigma`` form."""
        inv = [0] * self.n
        for x, r in enumerate(self.first):
            inv[r] = x
        return FiniteBichain(tuple(range(self.n)), tuple(self.second[inv[i]] for i in range(self.n)))

    @property
    def permutation(self) -> tuple[int, ...]:
        return self.canonical().second

    def swap(self) -> "FiniteBichain":
        return FiniteBichain(self.second, self.first)

    def __eq__(self, other):
        return isinstance(other, FiniteBichain) and (self.first, self.second) == (other.first, other.second)

    def __hash__(self):
        return hash((self.first, self.second))


def _transitive_closure(m: np.ndarray) -> np.ndarray:
    c = np.asarray(m, dtype=bool) | np.eye(len(m), dtype=bool)
    for k in range(len(c)):
        c = c | (c[:, k:k + 1] & c[k:k + 1, :])
    return c


# --------------------------------------------------------- autonomous sets

def is_autonomous(S, subset: Iterable[int]) -> bool:
    X = sorted(set(subset))
    if len(X) <= 1:
        return True
    inside = np.zeros(S.n, dtype=bool)
    inside[X] = True
    outside = ~inside
    for r in S.relations:
        # every outside v must see all of X the same way, in both directions
        to_x = r[np.ix_(outside, inside)]
        from_x = r[np.ix_(inside, outside)]
        if (to_x.any(axis=1) != to_x.all(axis=1)).any():
            return False
        if (from_x.any(axis=0) != from_x.all(axis=0)).any():
            return False
    return True


def autonomous_closure(S, subset: Iterable[int]) -> frozenset[int]:
    """The least autonomous set containing ``subset``."""
    inside = np.zeros(S.n, dtype=bool)
    inside[list(subset)] = True
    if inside.sum() <= 1:
        return frozenset(np.nonzero(inside)[0].tolist())
    rels = S.relations
    while True:
        grow = np.zeros(S.n, dtype=bool)
        for r in rels:
            to_x = r[:, inside]
            from_x = r[inside, :]
            grow |= to_x.any(axis=1) != to_x.all(axis=1)
            grow |= from_x.any(axis=0) != from_x.all(axis=0)
        grow &= ~inside
        if not grow.any():
            return frozenset(np.nonzero(inside)[0].tolist())
        inside |= grow


def autonomous_sets(S) -> list[frozenset[int]]:
    """All autonomous subsets by brute force over ``2^n`` subsets (reference oracle)."""
    out = []
    for mask in range(1 << S.n):
        X = [i for i in range(S.n) if mask >> i & 1]
        if is_autonomous(S, X):
            out.append(frozenset(X))
    return out


def is_prime(S) -> bool:
    """No autonomous set ``X`` with ``2 <= |X| < n``.

    The least autonomous set containing each pair is computed by closure; the
    structure is prime iff every such closure is the whole ground set.
    """
    n = S.n
    if n <= 2:
        return True
    for x, y in itertools.combinations(range(n), 2):
        if len(autonomous_closure(S, (x, y))) < n:
            return False
    return True


def is_prime_bruteforce(S) -> bool:
    return all(len(X) <= 1 or len(X) == S.n for X in autonomous_sets(S))


# ------------------------------------------------------- endomorphism search

def _maps(S, injective: bool, embedding: bool) -> Iterator[tuple[int, ...]]:
    n = S.n
    rels = [np.asarray(r, dtype=bool) for r in S.relations]
    f = [0] * n
    used = [False] * n

    def ok(v: int, t: int) -> bool:
        for r in rels:
            for u in range(v + 1):
                fu = t if u == v else f[u]
                if embedding:
                    if r[u, v] != r[fu, t] or r[v, u] != r[t, fu]:
                        return False
                else:
                    if r[u, v] and not r[fu, t]:
                        return False
                    if r[v, u] and not r[t, fu]:
                        return False
        return True

    def rec(v: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(f)
            return
        for t in range(n):
            if injective and used[t]:
                continue
            if ok(v, t):
                f[v] = t
                used[t] = True
                yield from rec(v + 1)
                used[t] = False

    yield from rec(0)


def endomorphisms(S, bound: int | None = DEFAULT_ENDO_BOUND) -> list[tuple[int, ...]]:
    """All maps ``f`` with ``x rho y => f(x) rho f(y)`` for every relation."""
    _check_bound(S.n, bound, "endomorphism search")
    return list(_maps(S, injective=False, embedding=False))


def _is_trivial_map(f: Sequence[int]) -> bool:
    return all(f[i] == i for i in range(len(f))) or len(set(f)) <= 1


def is_semirigid(S, bound: int | None = DEFAULT_ENDO_BOUND) -> bool:
    """Whether the only endomorphisms are the identity and constant maps."""
    _check_bound(S.n, bound, "endomorphism search")
    return all(_is_trivial_map(f) for f in _maps(S, injective=False, embedding=False))


def self_embeddings(S, bound: int | None = DEFAULT_ENDO_BOUND) -> list[tuple[int, ...]]:
    _check_bound(S.n, bound, "embedding search")
    return list(_maps(S, injective=True, embedding=True))


def is_embedding_rigid(S, bound: int | None = DEFAULT_ENDO_BOUND) -> bool:
    _check_bound(S.n, bound, "embedding search")
    ident = tuple(range(S.n))
    return all(f == ident for f in _maps(S, injective=True, embedding=True))


def finite_orthogonal_exists(n: int, bound: int = DEFAULT_ENDO_BOUND) -> bool:
    """Whether some linear order on ``n`` points is orthogonal to the natural one.

    Up to ``bound`` this is an exhaustive semirigidity search over all
    bichains ``B_sigma``; above it a simple permutation is searched for, which
    is equivalent for finite bichains.
    """
    if n <= bound:
        return any(is_semirigid(FiniteBichain.of_permutation(s), bound=None)
                   for s in itertools.permutations(range(n)))
    from .perms import is_simple

    return any(is_simple(s) for s in itertools.permutations(range(n)))


# ------------------------------------------------------ posets and graphs

def comparability_graph(P: FinitePoset) -> FiniteGraph:
    s = P.strict
    return FiniteGraph.from_adjacency(s | s.T)


def incomparability_graph(P: FinitePoset) -> FiniteGraph:
    comp = P.order | P.order.T
    return FiniteGraph.from_adjacency(~comp)


def _is_transitive_arcs(n: int, arcs: np.ndarray) -> bool:
    a = arcs.astype(np.int64)
    return not ((a @ a > 0) & ~arcs).any()


def transitive_orientations(G: FiniteGraph, bound: int | None = DEFAULT_ORIENT_BOUND) -> list[FinitePoset]:
    """Every orientation of ``G`` whose arc set is transitive, as posets.

    Edge-by-edge backtracking; a partial orientation is abandoned as soon as
    two arcs ``x->y->z`` appear with ``xz`` missing or oriented ``z->x``.
    """
    _check_bound(G.n, bound, "orientation enumeration")
    n = G.n
    adj = G.adjacency
    edges = G.sorted_edges()
    arcs = np.zeros((n, n), dtype=bool)
    out: list[FinitePoset] = []

    def consistent(x: int, y: int) -> bool:
        # new arc x->y
        for z in range(n):
            if arcs[y, z] and (not adj[x, z] or arcs[z, x]):
                return False
            if arcs[z, x] and (not adj[z, y] or arcs[y, z]):
                return False
        return True

    def rec(k: int) -> None:
        if k == len(edges):
            if _is_transitive_arcs(n, arcs):
                out.append(FinitePoset(n, arcs | np.eye(n, dtype=bool)))
            return
        u, v = edges[k]
        for x, y in ((u, v), (v, u)):
            if consistent(x, y):
                arcs[x, y] = True
                rec(k + 1)
                arcs[x, y] = False

    rec(0)
    return out


def transitive_orientation(G: FiniteGraph) -> FinitePoset | None:
    """One transitive orientation, or ``None`` if ``G`` is not a comparability graph.

    Implication classes are peeled off one at a time (lowest remaining edge
    first, oriented low -> high), forcing within the graph of remaining edges.
    """
    n = G.n
    remaining = G.adjacency.copy()
    arcs = np.zeros((n, n), dtype=bool)
    while remaining.any():
        xs, ys = np.nonzero(np.triu(remaining, 1))
        start = (int(xs[0]), int(ys[0]))
        cls = {start}
        stack = [start]
        while stack:
            a, b = stack.pop()
            # same tail: a->c forced when c ~ a, c !~ b
            for c in np.nonzero(remaining[a])[0].tolist():
                if c != b and not remaining[b, c] and (a, c) not in cls:
                    cls.add((a, c))
                    stack.append((a, c))
            # same head: c->b forced when c ~ b, c !~ a
            for c in np.nonzero(remaining[b])[0].tolist():
                if c != a and not remaining[a, c] and (c, b) not in cls:
                    cls.add((c, b))
                    stack.append((c, b))
        for a, b in cls:
            if (b, a) in cls:
                return None
        for a, b in cls:
            arcs[a, b] = True
            remaining[a, b] = remaining[b, a] = False
    if not _is_transitive_arcs(n, arcs):
        return None
    return FinitePoset(n, arcs | np.eye(n, dtype=bool))


def intersection_order(B: FiniteBichain) -> FinitePoset:
    l1, l2 = B.relations
    return FinitePoset(B.n, l1 & l2)


def realizer2(P: FinitePoset) -> FiniteBichain:
    """Two linear extensions whose intersection is ``P``.

    Raises :class:`NotDimension2` when the incomparability graph has no
    transitive orientation.
    """
    q = transitive_orientation(incomparability_graph(P))
    if q is None:
        raise NotDimension2("incomparability graph is not a comparability graph")
    qs = q.strict
    l1 = P.order | qs
    l2 = P.order | qs.T
    for l in (l1, l2):
        if not (l | l.T).all() or not _is_transitive_arcs(P.n, l):
            raise NotDimension2("orientation did not produce linear extensions")
    B = FiniteBichain.from_orders(l1, l2)
    assert intersection_order(B) == P
    return B


def natural_posets(n: int) -> Iterator[FinitePoset]:
    """All orders on ``range(n)`` contained in the natural order.

    Every finite poset is isomorphic to at least one of these (label along a
    linear extension), so this covers all posets up to isomorphism.
    """
    pairs = list(itertools.combinations(range(n), 2))
    strict = np.zeros((n, n), dtype=bool)

    def rec(k: int) -> Iterator[FinitePoset]:
        if k == len(pairs):
            if _is_transitive_arcs(n, strict):
                yield FinitePoset(n, strict | np.eye(n, dtype=bool))
            return
        x, y = pairs[k]
        yield from rec(k + 1)
        strict[x, y] = True
        yield from rec(k + 1)
        strict[x, y] = False

    yield from rec(0)


# ---------------------------------------------------------------- I/O

def structure_to_json(S) -> dict:
    if isinstance(S, FinitePoset):
        return {"n": S.n, "strict_pairs": [list(p) for p in S.strict_pairs()]}
    if isinstance(S, FiniteGraph):
        return {"n": S.n, "edges": [list(e) for e in S.sorted_edges()]}
    if isinstance(S, FiniteBichain):
        return {"n": S.n, "first": list(S.first), "second": list(S.second)}
    return {"n": S.n, "relations": [r.astype(int).tolist() for r in S.relations]}


def structure_from_json(data: dict | str):
    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["n"])
    if "strict_pairs" in data:
        return FinitePoset.from_strict_pairs(n, [tuple(p) for p in data["strict_pairs"]])
    if "edges" in data:
        return FiniteGraph(n, frozenset(frozenset(e) for e in data["edges"]))
    if "first" in data:
        return FiniteBichain(tuple(data["first"]), tuple(data["second"]))
    if "relations" in data:
        return FiniteBinaryStructure(n, tuple(np.array(r, dtype=bool) for r in data["relations"]))
    raise ValueError("unrecognised structure JSON")


_DOT_STYLES = ["solid", "dashed", "dotted", "bold"]


def to_dot(S, labels: Sequence[str] | None = None, name: str = "S") -> str:
    """Graphviz text.  Graphs are undirected; other structures draw one
    arc style per relation, omitting loops (and, for orders, non-covering arcs)."""
    labels = list(labels) if labels is not None else [str(i) for i in range(S.n)]
    lines = []
    if isinstance(S, FiniteGraph):
        lines.append(f"graph {name} {{")
        lines += [f'  {i} [label="{labels[i]}"];' for i in range(S.n)]
        lines += [f"  {x} -- {y};" for x, y in S.sorted_edges()]
    else:
        lines.append(f"digraph {name} {{")
        lines += [f'  {i} [label="{labels[i]}"];' for i in range(S.n)]
        for k, r in enumerate(S.relations):
            strict = r & ~np.eye(S.n, dtype=bool)
            if isinstance(S, (FinitePoset, FiniteBichain)):
                si = strict.astype(np.int64)
                strict = strict & ~(si @ si > 0)  # covering pairs only
            style = _DOT_STYLES[k % len(_DOT_STYLES)]
            for x, y in zip(*np.nonzero(strict)):
                lines.append(f"  {x} -> {y} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
