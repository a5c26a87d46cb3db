"""Witness constructions: pendant paths, fences, and lazy countable bichains.

Two layers live here.

*Finite objects.*  ``G(A)`` is the one-way path ``0 - 1 - 2 - ...`` with a
pendant vertex hung on every ``a`` in ``A``; ``P(A)`` is the fence order on the
same vertices (even spine points below their odd neighbours, pendants above
even and below odd attachment points).  Truncations of both are built as
:mod:`structures` objects, and :class:`FenceRealizer` gives the two linear
orders realizing the infinite fence by an explicit block rule.

*Countable witnesses.*  A :class:`LazyBichain` is a countable set carrying two
well orders of types ``alpha`` and ``beta``.  Each element is identified with
its rank in the first order, so the bichain is a bijection ``forward`` from
the ordinals below ``alpha`` onto those below ``beta``, plus an enumerator
listing the elements in a fixed order.  :func:`build_witness` assembles a
bichain for every orthogonal pair out of a handful of operations:

========================  =====================================================
fence                     ``(w, w)``: both orders of the fence, dual taken
block-sum                 ``(w, w^(n))``: fences placed on the parts of a
                          partition of the naturals, blocks stacked
pad-front                 ``(a, b) -> (a, g + b)``, ``g`` infinite
append-top                ``(a, b) -> (a, b + g + 1)``, ``g`` infinite
add-point                 ``(a, b) -> (a, b + 1)``
interleave                ``(a, b)`` with ``w+1 <= a <= b``, ``b >= w+2``
swap                      ``(a, b) -> (b, a)``
========================  =====================================================
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

import numpy as np

from .ordinal import (
    OMEGA, ONE, ZERO, Decision, Ordinal, cnf_add, cnf_mul, decide_orthogonal,
    divide_by_omega, enumerate_below, enumeration_index, finite_part, ind,
    left_subtract, limit_part, ordinal, render,
)
from .perms import first_simple, pattern_embeds
from .structures import (
    BoundExceeded, FiniteBichain, FiniteGraph, FinitePoset, comparability_graph,
    intersection_order, is_prime, is_semirigid, realizer2,
)
from .words import (
    ExplicitWord, GapSetWord, IntegerSet, WordStream, cantor_pair, cantor_unpair,
    sturmian_seed_set, translate_almost_included,
)

__all__ = [
    "as_integer_set", "PendantPathGraph", "PosetPA", "build_GA", "build_PA",
    "realize_PA", "FenceRealizer", "TranslateEmbeddingReport", "check_translate_embedding",
    "check_pz1", "LazyBichain",
    "NotOrthogonalError", "fence_witness", "block_sum_witness", "pad_front",
    "append_top", "add_point", "interleave_witness", "finite_witness",
    "build_witness", "truncate", "VerificationReport", "verify_witness",
    "residue_partition", "witness_to_json",
]


def as_integer_set(A) -> WordStream:
    """Accept a word stream or a finite iterable of naturals."""
    if isinstance(A, WordStream):
        return A
    members = sorted({int(a) for a in A})
    if members and members[0] < 0:
        raise ValueError("sets of naturals only")
    bits = np.zeros(members[-1] + 1 if members else 0, dtype=np.uint8)
    bits[members] = 1
    return ExplicitWord(tuple(bits.tolist()))


class _PrefixCounts:
    """Membership and prefix counts ``|A ∩ [0, x)|`` over a growing window."""

    def __init__(self, A: WordStream):
        self.A = A
        self._bits = np.zeros(0, dtype=np.uint8)
        self._cum = np.zeros(1, dtype=np.int64)

    def _ensure(self, x: int) -> None:
        if x > len(self._bits):
            n = max(x, 2 * len(self._bits), 64)
            self._bits = self.A.bits(n)
            self._cum = np.concatenate([[0], np.cumsum(self._bits, dtype=np.int64)])

    def has(self, x: int) -> bool:
        if x < 0:
            return False
        self._ensure(x + 1)
        return bool(self._bits[x])

    def count(self, x: int) -> int:
        if x <= 0:
            return 0
        self._ensure(x)
        return int(self._cum[x])


# ================================================================ G(A), P(A)

Vertex = Hashable  # spine point ``n`` or pendant ``(a, 1)``


def _vertices(A: WordStream, N: int) -> list[Vertex]:
    return list(range(N + 1)) + [(a, 1) for a in A.elements(N + 1)]


@dataclass(frozen=True)
class PendantPathGraph:
    """Truncation of ``G(A)`` to the spine ``0..N`` and its pendants."""

    A: WordStream
    N: int
    vertices: tuple[Vertex, ...]
    graph: FiniteGraph

    @property
    def pendant_on_one(self) -> bool:
        """``1 in A``: the pendant on 1 and the spine point 0 are twins."""
        return self.N >= 1 and 1 in self.A

    def index(self, v: Vertex) -> int:
        return self.vertices.index(v)

    @property
    def labels(self) -> list[str]:
        return [_vertex_label(v) for v in self.vertices]


@dataclass(frozen=True)
class PosetPA:
    """Truncation of the fence poset ``P(A)``, vertices as in ``G(A)``."""

    A: WordStream
    N: int
    vertices: tuple[Vertex, ...]
    poset: FinitePoset

    @property
    def labels(self) -> list[str]:
        return [_vertex_label(v) for v in self.vertices]


def _vertex_label(v: Vertex) -> str:
    return f"p{v[0]}" if isinstance(v, tuple) else str(v)


def build_GA(A, N: int) -> PendantPathGraph:
    if N < 1:
        raise ValueError("N must be >= 1")
    A = as_integer_set(A)
    verts = _vertices(A, N)
    pos = {v: i for i, v in enumerate(verts)}
    edges = {frozenset((n, n + 1)) for n in range(N)}
    edges |= {frozenset((a, pos[(a, 1)])) for a in A.elements(N + 1)}
    return PendantPathGraph(A, N, tuple(verts), FiniteGraph(len(verts), frozenset(edges)))


def _fence_pairs(A: WordStream, N: int, pos: dict) -> list[tuple[int, int]]:
    pairs = []
    for x in range(0, N + 1, 2):
        if x > 0:
            pairs.append((x, x - 1))
        if x + 1 <= N:
            pairs.append((x, x + 1))
    for a in A.elements(N + 1):
        p = pos[(a, 1)]
        pairs.append((a, p) if a % 2 == 0 else (p, a))
    return pairs


def build_PA(A, N: int) -> PosetPA:
    """Pairs ``(x, y)`` below mean ``x < y``; the fence has height one, so
    no closure is needed."""
    if N < 1:
        raise ValueError("N must be >= 1")
    A = as_integer_set(A)
    verts = _vertices(A, N)
    pos = {v: i for i, v in enumerate(verts)}
    P = FinitePoset.from_strict_pairs(len(verts), _fence_pairs(A, N, pos))
    return PosetPA(A, N, tuple(verts), P)


def realize_PA(A, N: int) -> FiniteBichain:
    """A realizer of the ``P(A)`` truncation, oriented so that the first order
    lists the even spine points increasingly (the type-``w`` side)."""
    PA = build_PA(A, N)
    B = realizer2(PA.poset)
    if N >= 2 and B.first[0] > B.first[2]:
        B = B.swap()
    return B


class FenceRealizer:
    """Explicit linear orders ``L`` (type ``w``) and ``M`` (type ``w``) on
    the infinite fence with ``L ∩ M* = P(A)``.

    ``L`` lists blocks ``k = 0, 1, ...``, block ``k`` being
    ``2k, 2k-1, p(2k), p(2k+1)`` (omitting absent pendants and ``-1``).
    ``M`` lists groups ``p(2k), 2k+1, 2k, p(2k+1)``.  Codes are
    ``("s", n)`` for spine points and ``("p", a)`` for pendants.
    """

    def __init__(self, A):
        self.A = as_integer_set(A)
        self._c = _PrefixCounts(self.A)

    # -- L
    def block_start(self, k: int) -> int:
        return 0 if k == 0 else 2 * k - 1 + self._c.count(2 * k)

    def block(self, k: int) -> list[tuple[str, int]]:
        out = [("s", 2 * k)]
        if k >= 1:
            out.append(("s", 2 * k - 1))
        if self._c.has(2 * k):
            out.append(("p", 2 * k))
        if self._c.has(2 * k + 1):
            out.append(("p", 2 * k + 1))
        return out

    @staticmethod
    def _block_of(code) -> int:
        kind, x = code
        if kind == "s":
            return x // 2 if x % 2 == 0 else (x + 1) // 2
        return x // 2

    def rank_L(self, code) -> int:
        k = self._block_of(code)
        return self.block_start(k) + self.block(k).index(tuple(code))

    def code_L(self, r: int):
        lo, hi = 0, r + 1  # block_start(r + 1) > r
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.block_start(mid) <= r:
                lo = mid
            else:
                hi = mid - 1
        return self.block(lo)[r - self.block_start(lo)]

    # -- M, the dual of the type-w* order
    def group_start(self, k: int) -> int:
        return 2 * k + self._c.count(2 * k)

    def group(self, k: int) -> list[tuple[str, int]]:
        out = []
        if self._c.has(2 * k):
            out.append(("p", 2 * k))
        out += [("s", 2 * k + 1), ("s", 2 * k)]
        if self._c.has(2 * k + 1):
            out.append(("p", 2 * k + 1))
        return out

    def rank_M(self, code) -> int:
        k = code[1] // 2
        return self.group_start(k) + self.group(k).index(tuple(code))

    def code_M(self, r: int):
        lo, hi = 0, r
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.group_start(mid) <= r:
                lo = mid
            else:
                hi = mid - 1
        return self.group(lo)[r - self.group_start(lo)]

    # -- the pendant path in "delayed pendant" order: s0, s1, then s_m
    #    followed by p(m-2); no truncation then ends in a pair of twins
    def path_position(self, code) -> int:
        kind, x = code
        if kind == "p":
            return self.path_position(("s", x + 2)) + 1
        return x if x < 2 else x + self._c.count(x - 2)

    def path_code(self, i: int):
        if i < 2:
            return ("s", i)
        lo, hi = 2, i
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.path_position(("s", mid)) <= i:
                lo = mid
            else:
                hi = mid - 1
        return ("s", lo) if self.path_position(("s", lo)) == i else ("p", lo - 2)

    def bichain_on(self, codes: Sequence) -> FiniteBichain:
        """``(L, M*)`` restricted to ``codes`` -- a realizer of ``P(A)`` there."""
        r1 = np.array([self.rank_L(c) for c in codes])
        r2 = -np.array([self.rank_M(c) for c in codes])
        return FiniteBichain(tuple(np.argsort(np.argsort(r1)).tolist()),
                             tuple(np.argsort(np.argsort(r2)).tolist()))

    @staticmethod
    def code_of_vertex(v: Vertex):
        return ("p", v[0]) if isinstance(v, tuple) else ("s", v)

    @staticmethod
    def label(code) -> str:
        return f"{code[0]}{code[1]}"


# ============================================================ translations

@dataclass(frozen=True)
class TranslateEmbeddingReport:
    """Window-scale comparison of translate inclusion and almost embedding."""

    translate: dict
    translate_positive: bool
    embedding_found: bool
    window: int
    N: int

    @property
    def agree(self) -> bool:
        return self.translate_positive == self.embedding_found


def check_translate_embedding(A, B, kmax: int, N: int, prefix: int = 2, window: int = 2000,
              bound: int = 14) -> TranslateEmbeddingReport:
    """Compare "some translate of A is almost included in B" with "G(A) minus
    a finite prefix embeds (as an induced subgraph) into G(B)".

    The translate side is exact for eventually periodic inputs and window
    evidence otherwise; the embedding side searches ``G(A)`` restricted to
    spine ``prefix..N`` inside ``G(B)`` truncated at ``N + kmax``.
    """
    from networkx.algorithms.isomorphism import GraphMatcher

    if N > bound:
        raise BoundExceeded(f"embedding search on N={N} exceeds bound {bound}")
    A, B = as_integer_set(A), as_integer_set(B)
    results = {k: translate_almost_included(A, B, k, window) for k in range(-kmax, kmax + 1)}
    positive = any(r.positive for r in results.values())

    GA = build_GA(A, N)
    keep = [i for i, v in enumerate(GA.vertices)
            if (v[0] if isinstance(v, tuple) else v) >= prefix]
    src = _to_networkx(GA.graph, keep)
    dst = _to_networkx(build_GA(B, N + kmax).graph, None)
    found = GraphMatcher(dst, src).subgraph_is_isomorphic()
    return TranslateEmbeddingReport(results, positive, bool(found), window, N)


check_pz1 = check_translate_embedding


def _to_networkx(G: FiniteGraph, keep):
    import networkx as nx

    g = nx.Graph()
    nodes = range(G.n) if keep is None else keep
    s = set(nodes)
    g.add_nodes_from(nodes)
    g.add_edges_from((x, y) for x, y in G.sorted_edges() if x in s and y in s)
    return g


# ============================================================ lazy bichains

class NotOrthogonalError(ValueError):
    def __init__(self, decision: Decision):
        super().__init__(f"{render(decision.alpha)} and {render(decision.beta)}: "
                         f"{decision} [{decision.reason}]")
        self.decision = decision


def _cached(fn):
    return functools.lru_cache(maxsize=None)(fn)


@dataclass(frozen=True, eq=False)
class LazyBichain:
    """A countable bichain of type ``(alpha, beta)``.

    Elements are named by their first-order rank ``x < alpha``.
    ``forward(x)`` is the second-order rank; ``backward`` is its inverse.
    ``enumerator(i)`` is the ``i``-th element of a fixed listing of the ground
    set, ``index_of`` its inverse, and ``code(x)`` a readable tag.
    """

    alpha: Ordinal
    beta: Ordinal
    forward: Callable[[Ordinal], Ordinal]
    backward: Callable[[Ordinal], Ordinal]
    enumerator: Callable[[int], Ordinal]
    index_of: Callable[[Ordinal], int]
    code: Callable[[Ordinal], str]
    trace: tuple[str, ...] = ()

    def rank1(self, x: Ordinal) -> Ordinal:
        return x

    def rank2(self, x: Ordinal) -> Ordinal:
        return self.forward(x)

    def less1(self, x: Ordinal, y: Ordinal) -> bool:
        return x < y

    def less2(self, x: Ordinal, y: Ordinal) -> bool:
        return self.forward(x) < self.forward(y)

    def sample(self, n: int) -> list[Ordinal]:
        if self.alpha.is_finite:
            n = min(n, int(self.alpha))
        return [self.enumerator(i) for i in range(n)]

    def swap(self) -> "LazyBichain":
        f, b, e, ix, c = self.forward, self.backward, self.enumerator, self.index_of, self.code
        return LazyBichain(
            self.beta, self.alpha, b, f,
            _cached(lambda i: f(e(i))),
            lambda y: ix(b(y)),
            lambda y: c(b(y)),
            self.trace + ("swap",),
        )


def _fin(x: Ordinal) -> int | None:
    return int(x) if x.is_finite else None


def _fence_parts(A):
    fr = FenceRealizer(A)
    fwd = _cached(lambda r: fr.rank_M(fr.code_L(r)))
    bwd = _cached(lambda r: fr.rank_L(fr.code_M(r)))
    return fr, fwd, bwd


def _seed_set(seed: int) -> WordStream:
    return sturmian_seed_set(seed)


def fence_witness(seed: int = 0, A=None) -> LazyBichain:
    """``(w, w)``: the fence of an aperiodic ``A`` (no 0 or 1), ordered by
    ``L`` and by the dual of its type-``w*`` partner.

    The listing walks the pendant path with delayed pendants, so every
    truncation of size >= 4 is prime.
    """
    fr, fwd, bwd = _fence_parts(_seed_set(seed) if A is None else A)
    return LazyBichain(
        OMEGA, OMEGA,
        lambda x: ordinal(fwd(int(x))),
        lambda y: ordinal(bwd(int(y))),
        _cached(lambda i: ordinal(fr.rank_L(fr.path_code(i)))),
        lambda x: fr.path_position(fr.code_L(int(x))),
        lambda x: fr.label(fr.code_L(int(x))),
        (f"omega-omega-fence({seed if A is None else 'custom'})",),
    )


def block_sum_witness(n: int) -> LazyBichain:
    """``(w, w^n)`` for ``n >= 2``.

    The naturals are split into parts ``X_xi`` for ``xi < w^(n-1)``: ``X_0``
    is the odd numbers, and ``2*pair(i, j)`` is the ``j``-th point of the part
    indexed by the ``(i+1)``-th ordinal of the listing.  Each part carries
    the fence order of its own sparse set (row of the triangular-number
    family), and the parts are stacked in the order of their indices.
    """
    if n < 2:
        raise ValueError("block sums need n >= 2; use fence_witness for w")
    top = Ordinal(((ordinal(n - 1), 1),))
    fences: dict[int, tuple] = {}

    def fence(b: int):
        if b not in fences:
            fences[b] = _fence_parts(GapSetWord(offset=2, row=b))
        return fences[b]

    def locate(x: int) -> tuple[int, int, Ordinal]:
        if x % 2:
            return 0, (x - 1) // 2, ZERO
        i, j = cantor_unpair(x // 2)
        return i + 1, j, enumerate_below(top, i + 2)[i + 1]

    @_cached
    def forward(x: Ordinal) -> Ordinal:
        b, j, xi = locate(int(x))
        return cnf_add(cnf_mul(OMEGA, xi), ordinal(fence(b)[1](j)))

    @_cached
    def backward(y: Ordinal) -> Ordinal:
        xi, r = divide_by_omega(y)
        b = enumeration_index(top, xi)
        j = fence(b)[2](r)
        return ordinal(2 * j + 1 if b == 0 else 2 * cantor_pair(b - 1, j))

    def code(x: Ordinal) -> str:
        b, j, xi = locate(int(x))
        fr = fence(b)[0]
        return f"[{render(xi)}]{fr.label(fr.code_L(j))}"

    return LazyBichain(OMEGA, Ordinal(((ordinal(n), 1),)), forward, backward,
                       ordinal, int, code, (f"block-sum({n})",))


def pad_front(base: LazyBichain, gamma: Ordinal) -> LazyBichain:
    """``(a, b) -> (a, gamma + b)`` for infinite ``gamma`` and ``a``.

    The odd naturals become an initial segment of type ``gamma`` of the second
    order; the rest (evens and infinite ranks, a copy of ``a``) keeps the base
    bichain after it.
    """
    if gamma.is_finite or base.alpha.is_finite:
        raise ValueError("pad_front needs infinite gamma and alpha")
    depth = len(base.trace)

    def psi(t: Ordinal) -> Ordinal:  # base element -> new element
        return ordinal(2 * int(t)) if t.is_finite else t

    def psi_inv(x: Ordinal) -> Ordinal:
        return ordinal(int(x) // 2) if x.is_finite else x

    def is_pad(x: Ordinal) -> bool:
        return x.is_finite and int(x) % 2 == 1

    @_cached
    def forward(x: Ordinal) -> Ordinal:
        if is_pad(x):
            return enumerate_below(gamma, int(x) // 2 + 1)[int(x) // 2]
        return cnf_add(gamma, base.forward(psi_inv(x)))

    @_cached
    def backward(y: Ordinal) -> Ordinal:
        if y < gamma:
            return ordinal(2 * enumeration_index(gamma, y) + 1)
        return psi(base.backward(left_subtract(gamma, y)))

    def enumerator(i: int) -> Ordinal:
        return ordinal(i) if i % 2 else psi(base.enumerator(i // 2))

    def index_of(x: Ordinal) -> int:
        return int(x) if is_pad(x) else 2 * base.index_of(psi_inv(x))

    def code(x: Ordinal) -> str:
        return f"pad{depth}.{int(x) // 2}" if is_pad(x) else base.code(psi_inv(x))

    return LazyBichain(base.alpha, cnf_add(gamma, base.beta), forward, backward,
                       enumerator, index_of, code,
                       base.trace + (f"pad-front({render(gamma)})",))


def append_top(base: LazyBichain, gamma: Ordinal) -> LazyBichain:
    """``(a, b) -> (a, b + gamma + 1)`` for infinite ``gamma`` and ``a``.

    In the first order, 0 is ``u``, 1 is ``v`` and the odd numbers from 3 on
    form ``X``.  The second order puts the base bichain (on the evens from 2
    and the infinite ranks) first, then ``u``, then ``X`` in type ``gamma``,
    and ``v`` last.
    """
    if gamma.is_finite or base.alpha.is_finite:
        raise ValueError("append_top needs infinite gamma and alpha")
    beta = base.beta
    depth = len(base.trace)
    top = cnf_add(beta, gamma)

    def psi(t: Ordinal) -> Ordinal:
        return ordinal(2 * int(t) + 2) if t.is_finite else t

    def psi_inv(x: Ordinal) -> Ordinal:
        return ordinal(int(x) // 2 - 1) if x.is_finite else x

    def own(x: Ordinal) -> bool:
        return x.is_finite and (int(x) < 2 or int(x) % 2 == 1)

    @_cached
    def forward(x: Ordinal) -> Ordinal:
        if own(x):
            k = int(x)
            if k == 0:
                return beta
            if k == 1:
                return top
            m = (k - 3) // 2
            return cnf_add(beta, cnf_add(ONE, enumerate_below(gamma, m + 1)[m]))
        return base.forward(psi_inv(x))

    @_cached
    def backward(y: Ordinal) -> Ordinal:
        if y < beta:
            return psi(base.backward(y))
        if y == beta:
            return ZERO
        if y == top:
            return ONE
        eps = left_subtract(ONE, left_subtract(beta, y))
        return ordinal(2 * enumeration_index(gamma, eps) + 3)

    def enumerator(i: int) -> Ordinal:
        if i < 2 or i % 2:
            return ordinal(i)
        return psi(base.enumerator((i - 2) // 2))

    def index_of(x: Ordinal) -> int:
        return int(x) if own(x) else 2 + 2 * base.index_of(psi_inv(x))

    def code(x: Ordinal) -> str:
        if own(x):
            k = int(x)
            return f"u{depth}" if k == 0 else f"v{depth}" if k == 1 else f"x{depth}.{(k - 3) // 2}"
        return base.code(psi_inv(x))

    return LazyBichain(base.alpha, cnf_add(top, ONE), forward, backward, enumerator,
                       index_of, code, base.trace + (f"append-top({render(gamma)})",))


def add_point(base: LazyBichain) -> LazyBichain:
    """``(a, b) -> (a, b + 1)`` for infinite ``a``.

    A new point goes last in the second order and, in the first order,
    between the first two consecutive naturals ``r, r+1`` whose second ranks
    lie below the limit part of ``b``.
    """
    if base.alpha.is_finite:
        raise ValueError("add_point needs an infinite alpha")
    beta = base.beta
    lim = limit_part(beta)
    r = 0
    while not (base.forward(ordinal(r)) < lim and base.forward(ordinal(r + 1)) < lim):
        r += 1
    depth = len(base.trace)

    def psi(t: Ordinal) -> Ordinal:
        return ordinal(int(t) + 1) if t.is_finite and int(t) > r else t

    def psi_inv(x: Ordinal) -> Ordinal:
        return ordinal(int(x) - 1) if x.is_finite and int(x) > r + 1 else x

    new = ordinal(r + 1)

    @_cached
    def forward(x: Ordinal) -> Ordinal:
        return beta if x == new else base.forward(psi_inv(x))

    @_cached
    def backward(y: Ordinal) -> Ordinal:
        return new if y == beta else psi(base.backward(y))

    def enumerator(i: int) -> Ordinal:
        return new if i == 0 else psi(base.enumerator(i - 1))

    def index_of(x: Ordinal) -> int:
        return 0 if x == new else 1 + base.index_of(psi_inv(x))

    def code(x: Ordinal) -> str:
        return f"v{depth}" if x == new else base.code(psi_inv(x))

    return LazyBichain(base.alpha, cnf_add(beta, ONE), forward, backward, enumerator,
                       index_of, code, base.trace + ("add-point",))


def interleave_witness(alpha: Ordinal, beta: Ordinal, seed: int = 0) -> LazyBichain:
    """``(alpha, beta)`` with ``w+1 <= alpha <= beta`` and ``beta >= w+2``.

    Write ``alpha = w+1+a'`` and ``beta = w+1+b'``.  The ground set is a
    fenced copy ``V`` of the naturals, the point ``w`` and two sets of odd
    naturals ``W_a = {4t+1 : t < |a'|}``, ``W_b = {4t+3 : t < |b'|}``.  In the
    first order the naturals outside ``W_b`` carry ``V``'s first order,
    ``W_b`` sits in place, then ``w``, then ``W_a`` listed in the ordinals of
    ``a'``; the second order is symmetric.
    """
    wp1 = OMEGA + 1
    if not (wp1 <= alpha <= beta) or beta < OMEGA + 2:
        raise ValueError("interleave needs w+1 <= alpha <= beta and beta >= w+2")
    a_rest, b_rest = left_subtract(wp1, alpha), left_subtract(wp1, beta)
    size_a, size_b = _fin(a_rest), _fin(b_rest)
    fr, pi, pi_inv = _fence_parts(_seed_set(seed))

    def count_wa(x: int) -> int:
        c = max(0, (x + 2) // 4)
        return c if size_a is None else min(c, size_a)

    def count_wb(x: int) -> int:
        c = max(0, x // 4)
        return c if size_b is None else min(c, size_b)

    def in_wa(x: int) -> bool:
        return x % 4 == 1 and (size_a is None or (x - 1) // 4 < size_a)

    def in_wb(x: int) -> bool:
        return x % 4 == 3 and (size_b is None or (x - 3) // 4 < size_b)

    def nth_outside(count, b: int) -> int:
        """The ``b``-th natural not counted by ``count``."""
        lo, hi = b, 2 * b + 4
        while lo < hi:
            mid = (lo + hi) // 2
            if mid + 1 - count(mid + 1) >= b + 1:
                hi = mid
            else:
                lo = mid + 1
        return lo

    @_cached
    def forward(x: Ordinal) -> Ordinal:
        if x == OMEGA:
            return OMEGA
        if OMEGA < x:
            return ordinal(4 * enumeration_index(a_rest, left_subtract(wp1, x)) + 1)
        k = int(x)
        if in_wb(k):
            t = (k - 3) // 4
            return cnf_add(wp1, enumerate_below(b_rest, t + 1)[t])
        return ordinal(nth_outside(count_wa, pi(k - count_wb(k))))

    @_cached
    def backward(y: Ordinal) -> Ordinal:
        if y == OMEGA:
            return OMEGA
        if OMEGA < y:
            return ordinal(4 * enumeration_index(b_rest, left_subtract(wp1, y)) + 3)
        k = int(y)
        if in_wa(k):
            t = (k - 1) // 4
            return cnf_add(wp1, enumerate_below(a_rest, t + 1)[t])
        return ordinal(nth_outside(count_wb, pi_inv(k - count_wa(k))))

    def code(x: Ordinal) -> str:
        if x == OMEGA:
            return "top"
        if OMEGA < x:
            return f"Wa{int(forward(x))}"
        k = int(x)
        if in_wb(k):
            return f"Wb{k}"
        return "V." + fr.label(fr.code_L(k - count_wb(k)))

    return LazyBichain(
        alpha, beta, forward, backward,
        lambda i: enumerate_below(alpha, i + 1)[i],
        lambda x: enumeration_index(alpha, x),
        code,
        (f"omega-omega-fence({seed})", f"interleave({render(a_rest)}, {render(b_rest)})"),
    )


def finite_witness(n: int) -> LazyBichain:
    """``(n, n)`` from the first simple permutation of size ``n``."""
    sigma = first_simple(n)
    if sigma is None:
        raise ValueError(f"no simple permutation of size {n}")
    inv = [0] * n
    for i, v in enumerate(sigma):
        inv[v] = i
    a = ordinal(n)
    return LazyBichain(
        a, a,
        lambda x: ordinal(sigma[int(x)]),
        lambda y: ordinal(inv[int(y)]),
        ordinal, int,
        lambda x: f"e{int(x)}",
        (f"finite-simple({' '.join(str(v + 1) for v in sigma)})",),
    )


def _predecessor(b: Ordinal) -> Ordinal:
    return cnf_add(limit_part(b), ordinal(finite_part(b) - 1))


def _drop_last(b: Ordinal) -> Ordinal:
    """``g`` with ``b = g + ind(b)``."""
    *head, (e, c) = b.terms
    return Ordinal(tuple(head) + (((e, c - 1),) if c > 1 else ()))


def build_witness(alpha, beta, seed: int = 0) -> LazyBichain:
    """A countable bichain of type ``(alpha, beta)`` for an orthogonal pair.

    Raises :class:`NotOrthogonalError` (carrying the decision) otherwise.
    """
    alpha, beta = ordinal(alpha), ordinal(beta)
    decision = decide_orthogonal(alpha, beta)
    if not decision.orthogonal:
        raise NotOrthogonalError(decision)
    if beta < alpha:
        return build_witness(beta, alpha, seed).swap()
    if alpha.is_finite:
        return finite_witness(int(alpha))
    if alpha == OMEGA:
        if beta == OMEGA:
            return fence_witness(seed)
        i = ind(beta)
        if i == ONE:
            gamma = left_subtract(OMEGA, _predecessor(beta))
            w = fence_witness(seed)
            if not gamma.is_finite:
                return append_top(w, gamma)
            for _ in range(int(gamma) + 1):
                w = add_point(w)
            return w
        n = int(i.terms[0][0])
        w = fence_witness(seed) if n == 1 else block_sum_witness(n)
        prefix = _drop_last(beta)
        return pad_front(w, prefix) if prefix else w
    if alpha == beta == OMEGA + 1:
        return add_point(add_point(fence_witness(seed)).swap())
    return interleave_witness(alpha, beta, seed)


# ============================================================ finite views

def truncate(w: LazyBichain, n: int) -> FiniteBichain:
    """The first ``n`` listed elements, relabelled by first rank."""
    if n < 1:
        raise ValueError("n must be >= 1")
    xs = sorted(w.sample(n))
    ys = [w.forward(x) for x in xs]
    order = sorted(range(len(ys)), key=ys.__getitem__)
    second = [0] * len(ys)
    for rank, i in enumerate(order):
        second[i] = rank
    return FiniteBichain(tuple(range(len(xs))), tuple(second))


@dataclass
class VerificationReport:
    n: int
    results: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    def __str__(self) -> str:
        lines = [f"{name}: {'ok' if v else 'FAILED'}" + (f" ({self.details[name]})" if name in self.details else "")
                 for name, v in self.results.items()]
        return "\n".join(lines)


BASIC_CHECKS = ("enumerator-injective", "rank-injective", "roundtrip", "coherence", "coverage")
FENCE_CHECKS = ("prime", "semirigid", "monotone")


def verify_witness(w: LazyBichain, n: int, checks: Sequence[str] | None = None,
                   prime_range: tuple[int, int] = (4, 20), monotone_upto: int = 10) -> VerificationReport:
    """Finite-sample sanity checks of a witness (evidence, not a proof)."""
    if checks is None:
        checks = BASIC_CHECKS + (FENCE_CHECKS if w.alpha == w.beta == OMEGA else ())
    rep = VerificationReport(n)
    xs = w.sample(n)
    ys = [w.forward(x) for x in xs]
    for name in checks:
        if name == "enumerator-injective":
            rep.results[name] = len(set(xs)) == len(xs)
        elif name == "rank-injective":
            ok1 = len(set(xs)) == len(xs) and all(x < w.alpha for x in xs)
            ok2 = len(set(ys)) == len(ys) and all(y < w.beta for y in ys)
            rep.results[name] = ok1 and ok2
        elif name == "roundtrip":
            rep.results[name] = all(w.backward(y) == x for x, y in zip(xs, ys))
        elif name == "coherence":
            B = truncate(w, n)
            srt = sorted(xs)
            ranks = [w.forward(x) for x in srt]
            rep.results[name] = all(
                (B.second[i] < B.second[j]) == (ranks[i] < ranks[j])
                for i in range(len(srt)) for j in range(i + 1, len(srt)))
        elif name == "coverage":
            m = min(n, 25)
            firsts = enumerate_below(w.alpha, min(m, _fin(w.alpha) or m))
            seconds = enumerate_below(w.beta, min(m, _fin(w.beta) or m))
            ok = all(w.enumerator(w.index_of(x)) == x for x in firsts)
            ok &= all(w.forward(w.backward(y)) == y and
                      w.enumerator(w.index_of(w.backward(y))) == w.backward(y) for y in seconds)
            rep.results[name] = ok
        elif name == "prime":
            lo, hi = prime_range
            bad = [k for k in range(lo, min(hi, n) + 1) if not is_prime(truncate(w, k))]
            rep.results[name] = not bad
            if bad:
                rep.details[name] = f"non-prime sizes {bad}"
        elif name == "semirigid":
            lo, _ = prime_range
            bad = [k for k in range(lo, min(6, n) + 1) if not is_semirigid(truncate(w, k))]
            rep.results[name] = not bad
            if bad:
                rep.details[name] = f"not semirigid at sizes {bad}"
        elif name == "monotone":
            top = min(monotone_upto, n)
            ts = [truncate(w, k).permutation for k in range(1, top + 1)]
            rep.results[name] = all(pattern_embeds(a, b) for a, b in zip(ts, ts[1:]))
        else:
            raise ValueError(f"unknown check {name!r}")
    return rep


def residue_partition(N: int, n: int) -> list[list[int]]:
    """``{0..N}`` split by residue mod ``n`` (the finite ordinals' classes)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [list(range(i, N + 1, n)) for i in range(n)]


def witness_to_json(w: LazyBichain, n: int) -> dict:
    return {
        "alpha": render(w.alpha),
        "beta": render(w.beta),
        "trace": list(w.trace),
        "elements": [
            {"id": i, "code": w.code(x), "rank1": render(x), "rank2": render(w.forward(x))}
            for i, x in enumerate(w.sample(n))
        ],
    }
