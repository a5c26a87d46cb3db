"""Infinite binary words and the integer sets they encode.

A word ``w`` is identified with the set ``{i : w[i] == 1}``; translating the
set by ``-k`` is shifting the word by ``k``.  Word kinds:

* :class:`MechanicalWord` -- exact Sturmian words from a surd slope/intercept;
* :class:`PeriodicWord` -- eventually periodic words (exact decisions apply);
* :class:`ExplicitWord` -- a finite bit list, zero afterwards;
* :class:`GapSetWord` -- subsets of the triangular numbers (increasing gaps);
* :class:`DilatedWord`, :class:`ShiftedWord` -- derived sets.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .surd import Surd

__all__ = [
    "WordStream", "IntegerSet", "MechanicalWord", "PeriodicWord", "ExplicitWord",
    "GapSetWord", "DilatedWord", "ShiftedWord", "mechanical_word", "is_balanced",
    "shift", "Inclusion", "InclusionReport", "translate_almost_included",
    "almost_disjoint_family", "eventually_periodic_witness", "PeriodicWitness",
    "bits_to_str", "cantor_pair", "cantor_unpair", "SQRT2_MINUS_1",
    "GOLDEN_CONJUGATE", "sturmian_seed_set",
]

SQRT2_MINUS_1 = Surd.quadratic(-1, 1, 2)
GOLDEN_CONJUGATE = Surd.quadratic(-1, 1, 5, 2)


def bits_to_str(bits: Sequence[int]) -> str:
    return "".join("1" if b else "0" for b in bits)


def _bits(w) -> np.ndarray:
    if isinstance(w, str):
        return np.frombuffer(w.encode(), dtype=np.uint8) - ord("0")
    return np.asarray(w, dtype=np.uint8)


def cantor_pair(i: int, j: int) -> int:
    return (i + j) * (i + j + 1) // 2 + j


def cantor_unpair(z: int) -> tuple[int, int]:
    s = (math.isqrt(8 * z + 1) - 1) // 2
    j = z - s * (s + 1) // 2
    return s - j, j


class WordStream:
    """Base class: an infinite 0/1 word indexed by the naturals."""

    def bit(self, i: int) -> int:
        raise NotImplementedError

    def bits(self, n: int) -> np.ndarray:
        return np.fromiter((self.bit(i) for i in range(n)), dtype=np.uint8, count=n)

    def shift(self, k: int) -> "WordStream":
        if k < 0:
            raise ValueError("shift amount must be >= 0")
        return self if k == 0 else ShiftedWord(self, k)

    def __contains__(self, i: int) -> bool:
        return i >= 0 and bool(self.bit(i))

    def elements(self, bound: int) -> list[int]:
        """Members below ``bound``, sorted."""
        return np.nonzero(self.bits(bound))[0].tolist()

    def window(self, n: int) -> str:
        return bits_to_str(self.bits(n))


IntegerSet = WordStream


@dataclass(frozen=True)
class MechanicalWord(WordStream):
    """Bits ``floor((i+2)a + r) - floor((i+1)a + r)`` for ``i >= 0``.

    With ``r = 0`` this is the characteristic word of slope ``a`` read from
    its first letter.
    """

    slope: Surd
    intercept: Surd = field(default_factory=Surd)

    def __post_init__(self):
        s, r = Surd.of(self.slope), Surd.of(self.intercept)
        if s.is_rational:
            raise ValueError(f"slope {s} is rational")
        if not (0 < s < 1):
            raise ValueError(f"slope {s} is outside (0, 1)")
        object.__setattr__(self, "slope", s)
        object.__setattr__(self, "intercept", r)

    def _floors(self, start: int, count: int) -> list[int]:
        """``floor(i*a + r)`` for ``i`` in ``start .. start+count-1``."""
        a, r = self.slope, self.intercept
        den_a, ca = a._scaled()
        den_r, cr = r._scaled()
        den = den_a * den_r // math.gcd(den_a, den_r)
        coeff_a = {d: c * (den // den_a) for d, c in ca.items()}
        coeff_r = {d: c * (den // den_r) for d, c in cr.items()}
        radicands = sorted((set(coeff_a) | set(coeff_r)) - {1})
        bits = 64
        scale = 1 << bits
        roots = {d: math.isqrt(d * scale * scale) for d in radicands}
        out = []
        for i in range(start, start + count):
            lo = hi = (coeff_a.get(1, 0) * i + coeff_r.get(1, 0)) * scale
            for d in radicands:
                c = coeff_a.get(d, 0) * i + coeff_r.get(d, 0)
                s = roots[d]
                if c > 0:
                    lo += c * s
                    hi += c * (s + 1)
                elif c < 0:
                    lo += c * (s + 1)
                    hi += c * s
            f_lo = lo // (den * scale)
            if f_lo == hi // (den * scale):
                out.append(f_lo)
            else:
                out.append((a * i + r).floor())
        return out

    def bit(self, i: int) -> int:
        f = self._floors(i + 1, 2)
        return f[1] - f[0]

    def bits(self, n: int) -> np.ndarray:
        if n <= 0:
            return np.zeros(0, dtype=np.uint8)
        f = np.array(self._floors(1, n + 1), dtype=object)
        return (f[1:] - f[:-1]).astype(np.uint8)

    def shift(self, k: int) -> "MechanicalWord":
        if k < 0:
            raise ValueError("shift amount must be >= 0")
        return MechanicalWord(self.slope, self.intercept + self.slope * k)


@dataclass(frozen=True)
class PeriodicWord(WordStream):
    """``prefix`` followed by ``period`` repeated forever."""

    prefix: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(int(b) for b in _bits(self.prefix)))
        object.__setattr__(self, "period", tuple(int(b) for b in _bits(self.period)))
        if not self.period:
            raise ValueError("period must be nonempty")

    def bit(self, i: int) -> int:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def bits(self, n: int) -> np.ndarray:
        p = len(self.prefix)
        head = np.array(self.prefix[:n], dtype=np.uint8)
        rest = max(0, n - p)
        reps = -(-rest // len(self.period)) if rest else 0
        tail = np.tile(np.array(self.period, dtype=np.uint8), reps)[:rest]
        return np.concatenate([head, tail]).astype(np.uint8)

    def shift(self, k: int) -> "PeriodicWord":
        if k < 0:
            raise ValueError("shift amount must be >= 0")
        if k <= len(self.prefix):
            return PeriodicWord(self.prefix[k:], self.period)
        r = (k - len(self.prefix)) % len(self.period)
        return PeriodicWord((), self.period[r:] + self.period[:r])


@dataclass(frozen=True)
class ExplicitWord(WordStream):
    """A finite bit list; every later bit is 0 (a finite set)."""

    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(b) for b in _bits(self.letters)))

    def bit(self, i: int) -> int:
        return self.letters[i] if i < len(self.letters) else 0

    def bits(self, n: int) -> np.ndarray:
        out = np.zeros(max(n, 0), dtype=np.uint8)
        m = min(n, len(self.letters))
        out[:m] = self.letters[:m]
        return out

    def shift(self, k: int) -> "ExplicitWord":
        if k < 0:
            raise ValueError("shift amount must be >= 0")
        return ExplicitWord(self.letters[k:])

    def as_periodic(self) -> PeriodicWord:
        return PeriodicWord(self.letters, (0,))


@dataclass(frozen=True)
class GapSetWord(WordStream):
    """``{T_j + offset : j in S}`` where ``T_j = j(j+1)/2`` are the triangular
    numbers (gaps strictly increasing).

    ``S`` is ``{j : j % modulus == residue}`` when ``row`` is None, and the
    ``row``-th row ``{cantor_pair(row, t) : t >= 0}`` of the pairing
    otherwise (countably many pairwise disjoint infinite index sets).
    """

    offset: int = 0
    modulus: int = 1
    residue: int = 0
    row: int | None = None

    def _selected(self, j: int) -> bool:
        if self.row is not None:
            return cantor_unpair(j)[0] == self.row
        return j % self.modulus == self.residue

    def bit(self, i: int) -> int:
        y = i - self.offset
        if y < 0:
            return 0
        j = (math.isqrt(8 * y + 1) - 1) // 2
        return int(j * (j + 1) // 2 == y and self._selected(j))

    def bits(self, n: int) -> np.ndarray:
        out = np.zeros(max(n, 0), dtype=np.uint8)
        j = 0
        while True:
            x = j * (j + 1) // 2 + self.offset
            if x >= n:
                return out
            if x >= 0 and self._selected(j):
                out[x] = 1
            j += 1


@dataclass(frozen=True)
class DilatedWord(WordStream):
    """``{scale*x + offset : x in base}``."""

    base: WordStream
    scale: int = 1
    offset: int = 0

    def bit(self, i: int) -> int:
        y = i - self.offset
        if y < 0 or y % self.scale:
            return 0
        return self.base.bit(y // self.scale)

    def bits(self, n: int) -> np.ndarray:
        out = np.zeros(max(n, 0), dtype=np.uint8)
        m = max(0, -(-(n - self.offset) // self.scale))
        if m:
            src = self.base.bits(m)
            pos = np.arange(m) * self.scale + self.offset
            keep = (pos >= 0) & (pos < n)
            out[pos[keep]] = src[keep]
        return out


@dataclass(frozen=True)
class ShiftedWord(WordStream):
    base: WordStream
    k: int

    def bit(self, i: int) -> int:
        return self.base.bit(i + self.k)

    def bits(self, n: int) -> np.ndarray:
        return self.base.bits(n + self.k)[self.k:]

    def shift(self, k: int) -> WordStream:
        if k < 0:
            raise ValueError("shift amount must be >= 0")
        return self.base.shift(self.k + k)


def mechanical_word(slope: Surd, intercept: Surd | int = 0, n: int = 0) -> str:
    return MechanicalWord(slope, Surd.of(intercept)).window(n)


def shift(w: WordStream, k: int) -> WordStream:
    return w.shift(k)


def is_balanced(w, maxlen: int) -> bool:
    """All factors of equal length ``<= maxlen`` have 1-counts within 1."""
    b = _bits(w).astype(np.int64)
    if maxlen > len(b):
        raise ValueError("maxlen exceeds the word length")
    c = np.concatenate([[0], np.cumsum(b)])
    for ell in range(1, maxlen + 1):
        counts = c[ell:] - c[:-ell]
        if counts.max() - counts.min() > 1:
            return False
    return True


# ------------------------------------------------------ almost inclusion

class Inclusion(enum.Enum):
    INCLUDED_IN_WINDOW = "IncludedInWindow"
    VIOLATIONS = "Violations"
    DECIDED_TRUE = "DecidedTrue"
    DECIDED_FALSE = "DecidedFalse"


@dataclass(frozen=True)
class InclusionReport:
    """Outcome of an almost-inclusion test.

    Window results are evidence only: a finite window can neither confirm
    nor refute almost inclusion of infinite sets.
    """

    status: Inclusion
    violations: int | None = None
    window: int | None = None

    @property
    def exact(self) -> bool:
        return self.status in (Inclusion.DECIDED_TRUE, Inclusion.DECIDED_FALSE)

    @property
    def positive(self) -> bool:
        return self.status in (Inclusion.DECIDED_TRUE, Inclusion.INCLUDED_IN_WINDOW)


def _periodic_form(w: WordStream) -> PeriodicWord | None:
    if isinstance(w, PeriodicWord):
        return w
    if isinstance(w, ExplicitWord):
        return w.as_periodic()
    return None


def translate_almost_included(A: IntegerSet, B: IntegerSet, k: int, window: int) -> InclusionReport:
    """Is ``A + k`` almost included in ``B``?

    Counts ``i < window`` with ``i in A``, ``i + k >= 0`` and ``i + k not in
    B``.  For two eventually periodic sets the answer is decided exactly by
    checking one joint period past both prefixes.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    pa, pb = _periodic_form(A), _periodic_form(B)
    if pa is not None and pb is not None:
        start = max(len(pa.prefix), len(pb.prefix) - k, -k, 0)
        span = math.lcm(len(pa.period), len(pb.period))
        bad = any(pa.bit(i) and not pb.bit(i + k) for i in range(start, start + span))
        return InclusionReport(Inclusion.DECIDED_FALSE if bad else Inclusion.DECIDED_TRUE)
    a = A.bits(window)
    lo = max(0, -k)
    b = B.bits(window + max(k, 0))
    idx = np.arange(lo, window)
    viol = int(np.count_nonzero(a[idx] & (1 - b[idx + k])))
    status = Inclusion.INCLUDED_IN_WINDOW if viol == 0 else Inclusion.VIOLATIONS
    return InclusionReport(status, viol, window)


def almost_disjoint_family(m: int, mode: str = "GapSet") -> list[WordStream]:
    """``m`` sets no translate of one of which is almost included in another.

    ``GapSet``: residue classes (mod ``m``) of the indices of the triangular
    numbers, so members are pairwise disjoint and any translate by ``k != 0``
    meets the triangular numbers finitely often.  ``Sturmian``: slope
    ``sqrt2 - 1`` with intercepts ``frac(i*sqrt3)``, ``i = 1..m``.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    if mode == "GapSet":
        return [GapSetWord(0, m, i) for i in range(m)]
    if mode == "Sturmian":
        sqrt3 = Surd({3: 1})
        return [MechanicalWord(SQRT2_MINUS_1, (sqrt3 * i).frac()) for i in range(1, m + 1)]
    raise ValueError(f"unknown mode {mode!r}")


def sturmian_seed_set(seed: int = 0, scale: int = 2, offset: int = 2) -> DilatedWord:
    """An aperiodic subset of ``{offset, offset+scale, ...}`` read off the
    ``seed``-th Sturmian family member (avoids 0 and 1 for the defaults)."""
    base = almost_disjoint_family(seed + 2, "Sturmian")[seed]
    return DilatedWord(base, scale, offset)


@dataclass(frozen=True)
class PeriodicWitness:
    prefix_len: int
    period: str


def eventually_periodic_witness(w, min_repeats: int = 3) -> PeriodicWitness | None:
    """Smallest ``(period, prefix)`` explaining the window, or ``None``.

    A candidate period ``p <= len(w)/3`` must hold from the prefix on, cover
    at least half of the window and repeat at least ``min_repeats`` times.
    Window evidence only.
    """
    b = _bits(w)
    n = len(b)
    for p in range(1, n // 3 + 1):
        mism = np.nonzero(b[p:] != b[:-p])[0]
        start = int(mism[-1]) + 1 if len(mism) else 0
        tail = n - start
        if tail >= max(min_repeats * p, (n + 1) // 2):
            return PeriodicWitness(start, bits_to_str(b[start:start + p]))
    return None
