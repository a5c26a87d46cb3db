"""Permutations: common intervals, simplicity, patterns and counting.

Permutations are tuples of 0-indexed values in one-line notation.  Text
input/output uses the usual 1-indexed notation (``"2413"`` or ``"2 4 1 3"``).
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Sequence

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

from .structures import BoundExceeded, FiniteBichain

__all__ = [
    "Permutation", "E_MINUS_2", "parse_permutation", "format_permutation",
    "check_permutation", "inverse", "reverse_complement", "common_intervals",
    "common_intervals_naive", "count_common_intervals", "is_simple",
    "is_simple_naive", "count_simple", "simple_ratio_table", "pattern_embeds",
    "patterns", "age", "first_simple",
]

Permutation = tuple[int, ...]

E_MINUS_2 = math.exp(-2)
DEFAULT_COUNT_BOUND = 10
DEFAULT_PATTERN_BOUND = 12


def check_permutation(s: Sequence[int]) -> Permutation:
    p = tuple(int(v) for v in s)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"{s!r} is not a permutation of range({len(p)})")
    return p


def parse_permutation(text: str) -> Permutation:
    """``"2413"`` (n <= 9) or ``"2 4 1 3"`` -> ``(1, 3, 0, 2)``."""
    text = text.strip()
    parts = text.replace(",", " ").split() if (" " in text or "," in text) else list(text)
    return check_permutation(int(v) - 1 for v in parts)


def format_permutation(p: Sequence[int], compact: bool | None = None) -> str:
    if compact is None:
        compact = len(p) <= 9
    return ("" if compact else " ").join(str(v + 1) for v in p)


def inverse(p: Sequence[int]) -> Permutation:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def reverse_complement(p: Sequence[int]) -> Permutation:
    n = len(p)
    return tuple(n - 1 - v for v in reversed(p))


# ------------------------------------------------------------ common intervals
#
# Sweep the right end j.  For each start i <= j keep
#     f(i) = max(p[i..j]) - min(p[i..j]) - (j - i)  >= 0,
# which is zero exactly on common intervals.  Monotone stacks turn the
# max/min updates into range additions on a segment tree holding
# (min, count of min) with non-propagated lazy tags.

# The helpers are iterative on purpose: numba's on-disk cache cannot reload
# recursive functions safely.

@njit(cache=True)
def _seg_pull(mn, cnt, tag, node):
    node >>= 1
    while node >= 1:
        l, r = mn[2 * node], mn[2 * node + 1]
        if l < r:
            mn[node], cnt[node] = l + tag[node], cnt[2 * node]
        elif r < l:
            mn[node], cnt[node] = r + tag[node], cnt[2 * node + 1]
        else:
            mn[node], cnt[node] = l + tag[node], cnt[2 * node] + cnt[2 * node + 1]
        node >>= 1


@njit(cache=True)
def _seg_add(mn, cnt, tag, size, a, b, v):
    # add v on positions [a, b]
    l, r = a + size, b + size + 1
    l0, r0 = l, r - 1
    while l < r:
        if l & 1:
            mn[l] += v
            tag[l] += v
            l += 1
        if r & 1:
            r -= 1
            mn[r] += v
            tag[r] += v
        l >>= 1
        r >>= 1
    _seg_pull(mn, cnt, tag, l0)
    _seg_pull(mn, cnt, tag, r0)


@njit(cache=True)
def _seg_query(mn, cnt, tag, size, a, b):
    # (min, count) over [a, b]; stack of (node, lo, hi, inherited tags)
    stack = np.empty((128, 4), dtype=np.int64)
    stack[0, 0], stack[0, 1], stack[0, 2], stack[0, 3] = 1, 0, size - 1, 0
    top = 1
    best, count = np.int64(1) << 60, np.int64(0)
    while top:
        top -= 1
        node, lo, hi, acc = stack[top, 0], stack[top, 1], stack[top, 2], stack[top, 3]
        if b < lo or hi < a:
            continue
        if a <= lo and hi <= b:
            m = mn[node] + acc
            if m < best:
                best, count = m, cnt[node]
            elif m == best:
                count += cnt[node]
            continue
        mid = (lo + hi) // 2
        acc2 = acc + tag[node]
        stack[top, 0], stack[top, 1], stack[top, 2], stack[top, 3] = 2 * node, lo, mid, acc2
        stack[top + 1, 0], stack[top + 1, 1], stack[top + 1, 2], stack[top + 1, 3] = 2 * node + 1, mid + 1, hi, acc2
        top += 2
    return best, count


@njit(cache=True)
def _seg_zeros(mn, tag, size, a, b, out):
    # positions in [a, b] whose value is 0, in increasing order
    stack = np.empty((128, 4), dtype=np.int64)
    stack[0, 0], stack[0, 1], stack[0, 2], stack[0, 3] = 1, 0, size - 1, 0
    top = 1
    k = 0
    while top:
        top -= 1
        node, lo, hi, acc = stack[top, 0], stack[top, 1], stack[top, 2], stack[top, 3]
        if b < lo or hi < a or mn[node] + acc > 0:
            continue
        if lo == hi:
            out[k] = lo
            k += 1
            continue
        mid = (lo + hi) // 2
        acc2 = acc + tag[node]
        # right child first so the left one is popped first
        stack[top, 0], stack[top, 1], stack[top, 2], stack[top, 3] = 2 * node + 1, mid + 1, hi, acc2
        stack[top + 1, 0], stack[top + 1, 1], stack[top + 1, 2], stack[top + 1, 3] = 2 * node, lo, mid, acc2
        top += 2
    return k


@njit(cache=True)
def _sweep(p, mode):
    """mode 0: count all common intervals; 1: stop at the first nontrivial
    one (count -1 if found); 2: also list them as (starts, ends)."""
    n = p.shape[0]
    size = 1
    while size < n:
        size *= 2
    mn = np.zeros(2 * size, dtype=np.int64)
    cnt = np.zeros(2 * size, dtype=np.int64)
    tag = np.zeros(2 * size, dtype=np.int64)
    # leaves start at 0 with count 1; positions > j are masked by the query range
    for node in range(size, 2 * size):
        cnt[node] = 1
    for node in range(size - 1, 0, -1):
        cnt[node] = cnt[2 * node] + cnt[2 * node + 1]
    max_pos = np.empty(n, dtype=np.int64)
    min_pos = np.empty(n, dtype=np.int64)
    nmax = 0
    nmin = 0
    total = 0
    out = np.empty(n, dtype=np.int64)
    pairs_i = np.empty(0, dtype=np.int64)
    pairs_j = np.empty(0, dtype=np.int64)
    if mode == 2:
        pairs_i = np.empty(4 * n + 16, dtype=np.int64)
        pairs_j = np.empty(4 * n + 16, dtype=np.int64)
    for j in range(n):
        v = p[j]
        while nmax > 0 and p[max_pos[nmax - 1]] < v:
            top = max_pos[nmax - 1]
            lo_i = max_pos[nmax - 2] + 1 if nmax >= 2 else 0
            _seg_add(mn, cnt, tag, size, lo_i, top, v - p[top])
            nmax -= 1
        max_pos[nmax] = j
        nmax += 1
        while nmin > 0 and p[min_pos[nmin - 1]] > v:
            top = min_pos[nmin - 1]
            lo_i = min_pos[nmin - 2] + 1 if nmin >= 2 else 0
            _seg_add(mn, cnt, tag, size, lo_i, top, p[top] - v)
            nmin -= 1
        min_pos[nmin] = j
        nmin += 1
        if j > 0:
            _seg_add(mn, cnt, tag, size, 0, j - 1, -1)
        m, c = _seg_query(mn, cnt, tag, size, 0, j)
        # m == 0 always (the singleton [j, j])
        total += c
        if mode == 1:
            nontrivial = c - 1
            if j == n - 1 and n > 1:
                nontrivial -= 1  # the whole range
            if nontrivial > 0:
                return -1, pairs_i, pairs_j
        elif mode == 2:
            k = _seg_zeros(mn, tag, size, 0, j, out)
            if total > pairs_i.shape[0]:
                grow = max(2 * pairs_i.shape[0], total)
                ni = np.empty(grow, dtype=np.int64)
                nj = np.empty(grow, dtype=np.int64)
                ni[: total - k] = pairs_i[: total - k]
                nj[: total - k] = pairs_j[: total - k]
                pairs_i, pairs_j = ni, nj
            for t in range(k):
                pairs_i[total - k + t] = out[t]
                pairs_j[total - k + t] = j
    return total, pairs_i[:total], pairs_j[:total]


def _as_array(p: Sequence[int]) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(p, dtype=np.int64))


def common_intervals(p: Sequence[int]) -> list[tuple[int, int]]:
    """All position ranges ``(i, j)`` (inclusive) whose image is a range of
    values, trivial ones included, sorted."""
    if len(p) == 0:
        return []
    total, pi, pj = _sweep(_as_array(p), 2)
    return sorted(zip(pi.tolist(), pj.tolist()))


def count_common_intervals(p: Sequence[int]) -> int:
    if len(p) == 0:
        return 0
    return int(_sweep(_as_array(p), 0)[0])


def common_intervals_naive(p: Sequence[int]) -> list[tuple[int, int]]:
    """Reference O(n^3) enumeration."""
    n = len(p)
    out = []
    for i in range(n):
        for j in range(i, n):
            vals = p[i:j + 1]
            if max(vals) - min(vals) == j - i:
                out.append((i, j))
    return out


def is_simple(p: Sequence[int]) -> bool:
    """No common interval of length between 2 and ``n - 1``."""
    if len(p) <= 2:
        return True
    return _sweep(_as_array(p), 1)[0] != -1


def is_simple_naive(p: Sequence[int]) -> bool:
    n = len(p)
    return all(j - i + 1 in (1, n) for i, j in common_intervals_naive(p))


# ------------------------------------------------------------------ counting

def _count_with_prefix(n: int, first: int) -> int:
    """Simple permutations of ``range(n)`` starting with ``first``.

    Depth-first over prefixes; a prefix is dropped as soon as it ends a
    nontrivial common interval, since that interval survives any completion.
    """
    prefix = [first]
    used = [False] * n
    used[first] = True

    def rec(k: int) -> int:
        if k == n:
            return 1
        total = 0
        for v in range(n):
            if used[v]:
                continue
            lo = hi = v
            bad = False
            for i in range(k - 1, -1, -1):
                x = prefix[i]
                if x < lo:
                    lo = x
                elif x > hi:
                    hi = x
                if hi - lo == k - i and not (i == 0 and k == n - 1):
                    bad = True
                    break
            if bad:
                continue
            used[v] = True
            prefix.append(v)
            total += rec(k + 1)
            prefix.pop()
            used[v] = False
        return total

    return rec(1)


def count_simple(n: int, bound: int | None = DEFAULT_COUNT_BOUND) -> int:
    """Exact number ``q(n)`` of simple permutations of ``range(n)``."""
    if bound is not None and n > bound:
        raise BoundExceeded(f"count_simple({n}) exceeds bound {bound}")
    if n <= 2:
        return math.factorial(n) if n else 1
    return sum(_count_with_prefix(n, first) for first in range(n))


def first_simple(n: int) -> Permutation | None:
    """The lexicographically first simple permutation of ``range(n)``.

    ``None`` when there is none (only ``n == 3``).  Uses the same prefix
    pruning as the counter, so it is fast well beyond the counting range.
    """
    if n <= 2:
        return tuple(range(n))
    prefix: list[int] = []
    used = [False] * n

    def rec(k: int) -> bool:
        if k == n:
            return True
        for v in range(n):
            if used[v]:
                continue
            lo = hi = v
            ok = True
            for i in range(k - 1, -1, -1):
                x = prefix[i]
                lo, hi = min(lo, x), max(hi, x)
                if hi - lo == k - i and not (i == 0 and k == n - 1):
                    ok = False
                    break
            if ok:
                used[v] = True
                # the unused values fill the remaining positions, so they must
                # not form a value range of size >= 2 either
                rest = [u for u in range(n) if not used[u]]
                if len(rest) >= 2 and rest[-1] - rest[0] == len(rest) - 1:
                    used[v] = False
                    continue
                prefix.append(v)
                if rec(k + 1):
                    return True
                prefix.pop()
                used[v] = False
        return False

    return tuple(prefix) if rec(0) else None


def simple_ratio_table(ns: Iterable[int], bound: int | None = DEFAULT_COUNT_BOUND) -> list[dict]:
    rows = []
    for n in ns:
        q = count_simple(n, bound=bound)
        ratio = q / math.factorial(n)
        rows.append({"n": n, "q": q, "ratio": ratio, "e^-2": E_MINUS_2, "gap": E_MINUS_2 - ratio})
    return rows


# ------------------------------------------------------------------ patterns

def _standardize(vals: Sequence[int]) -> Permutation:
    order = sorted(range(len(vals)), key=vals.__getitem__)
    out = [0] * len(vals)
    for rank, i in enumerate(order):
        out[i] = rank
    return tuple(out)


def pattern_embeds(s: Sequence[int], t: Sequence[int], bound: int | None = DEFAULT_PATTERN_BOUND) -> bool:
    """Whether some subsequence of ``t`` is order-isomorphic to ``s``."""
    k, n = len(s), len(t)
    if k > n:
        return False
    if bound is not None and n > bound:
        raise BoundExceeded(f"pattern search in length {n} exceeds bound {bound}")
    if k == 0:
        return True
    chosen: list[int] = []

    def rec(start: int) -> bool:
        m = len(chosen)
        if m == k:
            return True
        for pos in range(start, n - (k - m) + 1):
            v = t[pos]
            # relative order of the new entry must match s against all chosen ones
            if all((t[c] < v) == (s[i] < s[m]) for i, c in enumerate(chosen)):
                chosen.append(pos)
                if rec(pos + 1):
                    return True
                chosen.pop()
        return False

    return rec(0)


def patterns(t: Sequence[int], k: int) -> set[Permutation]:
    """All patterns of ``t`` of length exactly ``k``."""
    return {_standardize([t[i] for i in idx]) for idx in itertools.combinations(range(len(t)), k)}


def age(B: FiniteBichain | Sequence[int], k: int, bound: int | None = DEFAULT_PATTERN_BOUND) -> set[Permutation]:
    """Permutations of length 1..k whose bichain embeds into ``B``."""
    tau = B.permutation if isinstance(B, FiniteBichain) else check_permutation(B)
    if k > len(tau):
        raise ValueError(f"k={k} exceeds |B|={len(tau)}")
    if bound is not None and k > bound:
        raise BoundExceeded(f"age up to size {k} exceeds bound {bound}")
    out: set[Permutation] = set()
    for size in range(1, k + 1):
        out |= patterns(tau, size)
    return out
