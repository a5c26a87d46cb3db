"""Ordinals below epsilon_0 in Cantor normal form.

An :class:`Ordinal` is a tuple of ``(exponent, coefficient)`` terms with
strictly descending exponents; the empty tuple is 0.  Values are immutable
and hashable, so they can be used as dictionary keys and cached freely.

>>> w = OMEGA
>>> str(w * 2 + 1)
'w*2+1'
>>> str(parse_ordinal("w+1+w"))
'w*2'
>>> decide_orthogonal(parse_ordinal("w"), parse_ordinal("w^w")).reason
'omega-beta-eq-beta'
"""

from __future__ import annotations

import bisect
import enum
import functools
import random
import re
from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "Ordinal", "Cmp", "ZERO", "ONE", "OMEGA", "OrdinalSyntaxError",
    "ordinal", "omega_power", "parse_ordinal", "render", "pretty",
    "cnf_compare", "cnf_add", "cnf_mul", "left_subtract", "ind",
    "omega_fixed", "Verdict", "Decision", "decide_orthogonal", "size",
    "OrdinalEnumeration", "enumerate_below", "enumeration_index",
    "residue_class_member", "finite_part", "limit_part", "divide_by_omega",
    "random_ordinal",
]


class Cmp(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@functools.total_ordering
@dataclass(frozen=True)
class Ordinal:
    """Cantor normal form ``w^e0*c0 + ... + w^ek*ck`` with ``e0 > ... > ek``."""

    terms: tuple[tuple["Ordinal", int], ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for exp, coeff in self.terms:
            if not isinstance(coeff, int) or coeff < 1:
                raise ValueError(f"coefficient must be a positive integer, got {coeff!r}")
            if prev is not None and cnf_compare(exp, prev) is not Cmp.LT:
                raise ValueError("exponents must be strictly descending")
            prev = exp

    def __lt__(self, other: "Ordinal") -> bool:
        if not isinstance(other, Ordinal):
            return NotImplemented
        return cnf_compare(self, other) is Cmp.LT

    def __add__(self, other: "Ordinal | int") -> "Ordinal":
        return cnf_add(self, ordinal(other))

    def __radd__(self, other: int) -> "Ordinal":
        return cnf_add(ordinal(other), self)

    def __mul__(self, other: "Ordinal | int") -> "Ordinal":
        return cnf_mul(self, ordinal(other))

    def __rmul__(self, other: int) -> "Ordinal":
        return cnf_mul(ordinal(other), self)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Ordinal({render(self)!r})"

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0])

    @property
    def is_limit(self) -> bool:
        """0 counts as a limit ordinal."""
        return not self.terms or bool(self.terms[-1][0])

    @property
    def is_successor(self) -> bool:
        return not self.is_limit

    def __int__(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    @property
    def leading_exponent(self) -> "Ordinal":
        return self.terms[0][0] if self.terms else ZERO

    @property
    def last_exponent(self) -> "Ordinal":
        return self.terms[-1][0] if self.terms else ZERO


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def ordinal(value: "Ordinal | int") -> Ordinal:
    """Coerce a natural number (or an Ordinal) to an Ordinal."""
    if isinstance(value, Ordinal):
        return value
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise TypeError(f"cannot make an ordinal from {value!r}")
    return Ordinal(((ZERO, value),)) if value else ZERO


def omega_power(exponent: "Ordinal | int", coefficient: int = 1) -> Ordinal:
    return Ordinal(((ordinal(exponent), coefficient),))


# ---------------------------------------------------------------- comparison

def cnf_compare(a: Ordinal, b: Ordinal) -> Cmp:
    if a is b:
        return Cmp.EQ
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = cnf_compare(ea, eb)
        if c is not Cmp.EQ:
            return c
        if ca != cb:
            return Cmp.LT if ca < cb else Cmp.GT
    if len(a.terms) == len(b.terms):
        return Cmp.EQ
    return Cmp.LT if len(a.terms) < len(b.terms) else Cmp.GT


# ---------------------------------------------------------------- arithmetic

def cnf_add(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return a
    lead = b.terms[0][0]
    kept = []
    for exp, coeff in a.terms:
        c = cnf_compare(exp, lead)
        if c is Cmp.GT:
            kept.append((exp, coeff))
        elif c is Cmp.EQ:
            return Ordinal(tuple(kept) + ((lead, coeff + b.terms[0][1]),) + b.terms[1:])
        else:
            break
    return Ordinal(tuple(kept) + b.terms)


def cnf_mul(a: Ordinal, b: Ordinal) -> Ordinal:
    if not a.terms or not b.terms:
        return ZERO
    a_lead, a_coeff = a.terms[0]
    out: list[tuple[Ordinal, int]] = []
    for exp, coeff in b.terms:
        if exp.terms:
            # a * w^e = w^(a_lead + e) for e > 0
            out.append((cnf_add(a_lead, exp), coeff))
        else:
            # finite tail: a * k = w^a_lead * (a_coeff*k) + rest of a
            out.append((a_lead, a_coeff * coeff))
            out.extend(a.terms[1:])
    return Ordinal(tuple(out))


def left_subtract(a: Ordinal, b: Ordinal) -> Ordinal:
    """The unique ``d`` with ``a + d == b``; requires ``a <= b``."""
    if b < a:
        raise ValueError(f"{a} > {b}")
    if not a.terms:
        return b
    i = 0
    while i < len(a.terms) and i < len(b.terms) and a.terms[i] == b.terms[i]:
        i += 1
    if i == len(b.terms):
        return ZERO
    if i == len(a.terms):
        return Ordinal(b.terms[i:])
    (ea, ca), (eb, cb) = a.terms[i], b.terms[i]
    if ea == eb:
        # ca < cb here
        return Ordinal(((eb, cb - ca),) + b.terms[i + 1:])
    return Ordinal(b.terms[i:])


def finite_part(g: Ordinal) -> int:
    if g.terms and not g.terms[-1][0].terms:
        return g.terms[-1][1]
    return 0


def limit_part(g: Ordinal) -> Ordinal:
    if finite_part(g):
        return Ordinal(g.terms[:-1])
    return g


def divide_by_omega(g: Ordinal) -> tuple[Ordinal, int]:
    """Split ``g = w*q + r`` with ``r`` finite; returns ``(q, r)``."""
    r = finite_part(g)
    q_terms = tuple((left_subtract(ONE, e), c) for e, c in limit_part(g).terms)
    return Ordinal(q_terms), r


def ind(g: Ordinal) -> Ordinal:
    """Right indecomposable part: ``w^(last exponent)``, or 0 for 0."""
    if not g.terms:
        return ZERO
    return omega_power(g.terms[-1][0])


def omega_fixed(g: Ordinal) -> bool:
    """Whether ``w * g == g``.  Only defined for nonzero ``g``."""
    if not g.terms:
        raise ValueError("omega_fixed is only defined for nonzero ordinals")
    return cnf_mul(OMEGA, g) == g


def size(g: Ordinal) -> int:
    """Number of terms plus recursive exponent sizes plus coefficient sum."""
    return sum(1 + size(e) + c for e, c in g.terms)


# -------------------------------------------------------------- orthogonality

class Verdict(enum.Enum):
    ORTHOGONAL = "Orthogonal"
    NOT_ORTHOGONAL = "NotOrthogonal"


REASONS = {
    "alpha-ge-omega-plus-1": "w+1 <= alpha",
    "alpha-omega-beta-lt-omega-beta": "alpha = w and beta < w*beta",
    "omega-beta-eq-beta": "ωβ = β",
    "mixed-cardinality": "one finite, one infinite",
    "finite-unequal": "finite of different sizes",
    "finite-oracle": "finite oracle",
}


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    reason: str
    alpha: Ordinal
    beta: Ordinal

    @property
    def orthogonal(self) -> bool:
        return self.verdict is Verdict.ORTHOGONAL

    def __str__(self) -> str:
        return f"{self.verdict.value} ({REASONS[self.reason]})"


def decide_orthogonal(a: Ordinal, b: Ordinal, finite_bound: int = 7) -> Decision:
    """Decide whether ``a`` and ``b`` are orthogonal.

    Infinite pairs use the ordinal criterion directly.  Equal finite pairs
    are settled by searching for a semirigid bichain on ``n`` points (see
    :func:`orthogonal_ordinals.structures.finite_orthogonal_exists`).
    """
    if b < a:
        a, b = b, a
    if a.is_finite != b.is_finite:
        return Decision(Verdict.NOT_ORTHOGONAL, "mixed-cardinality", a, b)
    if a.is_finite:
        if a != b:
            return Decision(Verdict.NOT_ORTHOGONAL, "finite-unequal", a, b)
        from .structures import finite_orthogonal_exists

        ok = finite_orthogonal_exists(int(a), bound=finite_bound)
        return Decision(Verdict.ORTHOGONAL if ok else Verdict.NOT_ORTHOGONAL,
                        "finite-oracle", a, b)
    if not a < OMEGA + 1:
        return Decision(Verdict.ORTHOGONAL, "alpha-ge-omega-plus-1", a, b)
    # a is exactly w here
    if b < cnf_mul(OMEGA, b):
        return Decision(Verdict.ORTHOGONAL, "alpha-omega-beta-lt-omega-beta", a, b)
    return Decision(Verdict.NOT_ORTHOGONAL, "omega-beta-eq-beta", a, b)


def residue_class_member(g: Ordinal, n: int, i: int) -> bool:
    """Whether ``g = lam + i + k*n`` for a limit ``lam`` and finite ``k``."""
    if n < 1:
        raise ValueError("modulus must be >= 1")
    if not 0 <= i < n:
        raise ValueError(f"residue {i} not in [0, {n})")
    return finite_part(g) % n == i


# ---------------------------------------------------------------- enumeration

@functools.lru_cache(maxsize=None)
def _of_size(s: int, bound: Ordinal) -> tuple[Ordinal, ...]:
    """All ordinals of size exactly ``s`` strictly below ``bound``, sorted."""
    if not bound.terms:
        return ()
    if s == 0:
        return (ZERO,)
    be, bc = bound.terms[0]
    b_tail = Ordinal(bound.terms[1:])
    found: list[Ordinal] = []
    for se in range(0, s - 1):
        exps = list(_of_size(se, be))
        if size(be) == se:
            exps.append(be)
        for c in range(1, s - se):
            st = s - 1 - se - c
            for e in exps:
                if e == be:
                    if c > bc:
                        continue
                    tail_bound = omega_power(e) if c < bc else b_tail
                else:
                    tail_bound = omega_power(e)
                for tail in _of_size(st, tail_bound):
                    found.append(Ordinal(((e, c),) + tail.terms))
    found.sort()
    return tuple(found)


class OrdinalEnumeration:
    """A fixed bijection from ``range(a)`` (or all of N) onto the ordinals < a.

    Ordinals are listed by :func:`size`, ties broken by the usual order.
    """

    def __init__(self, a: Ordinal):
        self.bound = a
        self._items: list[Ordinal] = []
        self._starts: list[int] = []  # index of the first item of each size
        self._next_size = 0
        self._finite = int(a) if a.is_finite else None

    def __len__(self) -> int:
        if self._finite is None:
            raise TypeError("enumeration of an infinite ordinal has no length")
        return self._finite

    def _grow(self) -> bool:
        if self._finite is not None and len(self._items) >= self._finite:
            return False
        self._starts.append(len(self._items))
        self._items.extend(_of_size(self._next_size, self.bound))
        self._next_size += 1
        return True

    def __getitem__(self, i: int) -> Ordinal:
        if i < 0:
            raise IndexError(i)
        while len(self._items) <= i:
            if not self._grow():
                raise IndexError(f"{self.bound} has only {self._finite} elements")
        return self._items[i]

    def __iter__(self) -> Iterator[Ordinal]:
        i = 0
        while True:
            try:
                yield self[i]
            except IndexError:
                return
            i += 1

    def index(self, x: Ordinal) -> int:
        if not x < self.bound:
            raise ValueError(f"{x} is not below {self.bound}")
        s = size(x)
        while self._next_size <= s:
            self._grow()
        block = _of_size(s, self.bound)
        return self._starts[s] + bisect.bisect_left(block, x)

    def take(self, n: int) -> list[Ordinal]:
        if n > 0:
            self[n - 1]
        return self._items[:n]


@functools.lru_cache(maxsize=256)
def _enumeration(a: Ordinal) -> OrdinalEnumeration:
    return OrdinalEnumeration(a)


def enumerate_below(a: Ordinal, n: int) -> list[Ordinal]:
    """First ``n`` ordinals below ``a`` in the fixed size-then-order listing."""
    if a.is_finite and n > int(a):
        raise ValueError(f"cannot list {n} ordinals below {a}")
    return _enumeration(a).take(n)


def enumeration_index(a: Ordinal, x: Ordinal) -> int:
    """Inverse of :func:`enumerate_below`: the position of ``x``."""
    return _enumeration(a).index(x)


def random_ordinal(rng: random.Random, depth: int = 3, max_coeff: int = 9,
                   max_terms: int = 3) -> Ordinal:
    """A random CNF whose exponent trees have height at most ``depth``."""
    if depth <= 0:
        return ordinal(rng.randint(0, max_coeff))
    exps = {random_ordinal(rng, depth - 1, max_coeff, max_terms)
            for _ in range(rng.randint(0, max_terms))}
    terms = tuple((e, rng.randint(1, max_coeff)) for e in sorted(exps, reverse=True))
    return Ordinal(terms)


# ------------------------------------------------------------ parse / render

class OrdinalSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    for m in _TOKEN.finditer(text):
        if m.group(1) is not None:
            tokens.append(("nat", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            ch = m.group(2)
            if ch in "wω":
                tokens.append(("w", "w", m.start(2)))
            elif ch in "^*+()":
                tokens.append((ch, ch, m.start(2)))
            elif ch in "·":
                tokens.append(("*", ch, m.start(2)))
            else:
                raise OrdinalSyntaxError(f"unexpected character {ch!r}", text, m.start(2))
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self, kind: str) -> str:
        k, v, pos = self.tokens[self.i]
        if k != kind:
            what = repr(v) if v else "end of input"
            raise OrdinalSyntaxError(f"expected {kind!r}, found {what}", self.text, pos)
        self.i += 1
        return v

    def error(self, message: str) -> OrdinalSyntaxError:
        return OrdinalSyntaxError(message, self.text, self.tokens[self.i][2])

    def nat(self) -> int:
        return int(self.take("nat"))

    def expr(self) -> Ordinal:
        value = self.term()
        while self.peek() == "+":
            self.take("+")
            value = cnf_add(value, self.term())
        return value

    def term(self) -> Ordinal:
        if self.peek() == "nat":
            return ordinal(self.nat())
        if self.peek() != "w":
            raise self.error("expected a natural number or 'w'")
        self.take("w")
        exponent = ONE
        if self.peek() == "^":
            self.take("^")
            if self.peek() == "(":
                self.take("(")
                exponent = self.expr()
                self.take(")")
            elif self.peek() == "w":
                self.take("w")
                exponent = OMEGA
            else:
                exponent = ordinal(self.nat())
        coeff = 1
        if self.peek() == "*":
            self.take("*")
            pos = self.tokens[self.i][2]
            coeff = self.nat()
            if coeff == 0:
                raise OrdinalSyntaxError("coefficient 0 is not allowed", self.text, pos)
        return omega_power(exponent, coeff) if exponent.terms else ordinal(coeff)


def parse_ordinal(text: str) -> Ordinal:
    """Parse ``w^2*3+w+4``-style expressions; sums are evaluated, not checked."""
    p = _Parser(text)
    value = p.expr()
    p.take("end")
    return value


def _render_exponent(e: Ordinal) -> str:
    s = render(e)
    if e.is_finite or e == OMEGA:
        return s
    return f"({s})"


def render(g: Ordinal) -> str:
    if not g.terms:
        return "0"
    parts = []
    for e, c in g.terms:
        if not e.terms:
            parts.append(str(c))
            continue
        base = "w" if e == ONE else f"w^{_render_exponent(e)}"
        parts.append(base if c == 1 else f"{base}*{c}")
    return "+".join(parts)


_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def pretty(g: Ordinal) -> str:
    """Human-facing rendering with ``ω`` and ``·``."""
    if not g.terms:
        return "0"
    parts = []
    for e, c in g.terms:
        if not e.terms:
            parts.append(str(c))
            continue
        if e == ONE:
            base = "ω"
        elif e.is_finite:
            base = "ω" + str(int(e)).translate(_SUPERSCRIPT)
        elif e == OMEGA:
            base = "ω^ω"
        else:
            base = f"ω^({pretty(e)})"
        parts.append(base if c == 1 else f"{base}·{c}")
    return "+".join(parts)
