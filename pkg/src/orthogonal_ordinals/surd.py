"""Exact sums of rational multiples of square roots, with exact floors.

``Surd({1: 1/2, 5: 1/2})`` is ``(1 + sqrt 5) / 2``.  Radicands are kept
squarefree, so the representation is canonical; floors are found by
bracketing each ``sqrt d`` between integer square roots at increasing
precision.  Nothing here touches floating point.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = ["Surd", "parse_surd", "SurdSyntaxError"]

Number = Union[int, Fraction, "Surd"]


def _squarefree_split(d: int) -> tuple[int, int]:
    """``d = k*k*m`` with ``m`` squarefree; returns ``(k, m)``."""
    k, m = 1, d
    f = 2
    while f * f <= m:
        while m % (f * f) == 0:
            m //= f * f
            k *= f
        f += 1
    return k, m


@dataclass(frozen=True)
class Surd:
    terms: tuple[tuple[int, Fraction], ...] = ()

    def __init__(self, coeffs: dict[int, Fraction | int] | tuple = ()):
        acc: dict[int, Fraction] = {}
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for d, c in items:
            if d < 0:
                raise ValueError("negative radicand")
            c = Fraction(c)
            if d == 0 or c == 0:
                continue
            k, m = _squarefree_split(d)
            acc[m] = acc.get(m, Fraction(0)) + c * k
        object.__setattr__(self, "terms", tuple(sorted((d, c) for d, c in acc.items() if c)))

    @classmethod
    def quadratic(cls, p: int, q: int, d: int, r: int = 1) -> "Surd":
        """``(p + q*sqrt(d)) / r``."""
        if r == 0:
            raise ZeroDivisionError("r = 0")
        return cls({1: Fraction(p, r), d: Fraction(q, r)})

    @classmethod
    def of(cls, x: Number) -> "Surd":
        return x if isinstance(x, Surd) else cls({1: Fraction(x)})

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self.terms)

    @property
    def rational_part(self) -> Fraction:
        return self.coeffs.get(1, Fraction(0))

    @property
    def is_rational(self) -> bool:
        return all(d == 1 for d, _ in self.terms)

    def __add__(self, other: Number) -> "Surd":
        o = Surd.of(other)
        c = self.coeffs
        for d, v in o.terms:
            c[d] = c.get(d, Fraction(0)) + v
        return Surd(c)

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd({d: -c for d, c in self.terms})

    def __sub__(self, other: Number) -> "Surd":
        return self + (-Surd.of(other))

    def __rsub__(self, other: Number) -> "Surd":
        return Surd.of(other) - self

    def __mul__(self, other: Number) -> "Surd":
        o = Surd.of(other)
        out: list[tuple[int, Fraction]] = []
        for d1, c1 in self.terms:
            for d2, c2 in o.terms:
                out.append((d1 * d2, c1 * c2))
        return Surd(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "Surd":
        o = Surd.of(other)
        if not o.is_rational:
            raise ValueError("division by an irrational surd is not supported")
        r = o.rational_part
        if r == 0:
            raise ZeroDivisionError("division by zero")
        return Surd({d: c / r for d, c in self.terms})

    # ---------------------------------------------------------- ordering

    def _scaled(self):
        """``(den, {d: a_d})`` with integer ``a_d`` and ``self = sum(a_d sqrt d) / den``."""
        den = 1
        for _, c in self.terms:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return den, {d: int(c * den) for d, c in self.terms}

    def floor(self) -> int:
        den, a = self._scaled()
        if all(d == 1 for d in a):
            return a.get(1, 0) // den
        bits = 64
        while True:
            scale = 1 << bits
            lo = hi = a.get(1, 0) * scale
            for d, c in a.items():
                if d == 1:
                    continue
                s = math.isqrt(d * scale * scale)  # s <= sqrt(d)*scale < s+1
                if c > 0:
                    lo += c * s
                    hi += c * (s + 1)
                else:
                    lo += c * (s + 1)
                    hi += c * s
            f_lo = lo // (den * scale)
            # irrational value: it never equals hi, so floor(hi) works as an upper bracket
            if f_lo == hi // (den * scale):
                return f_lo
            bits *= 2

    def __floor__(self) -> int:
        return self.floor()

    def sign(self) -> int:
        if not self.terms:
            return 0
        if self.is_rational:
            return 1 if self.rational_part > 0 else -1
        return -1 if self.floor() < 0 else 1

    def __lt__(self, other: Number) -> bool:
        return (self - Surd.of(other)).sign() < 0

    def __le__(self, other: Number) -> bool:
        return (self - Surd.of(other)).sign() <= 0

    def __gt__(self, other: Number) -> bool:
        return (self - Surd.of(other)).sign() > 0

    def __ge__(self, other: Number) -> bool:
        return (self - Surd.of(other)).sign() >= 0

    def frac(self) -> "Surd":
        return self - self.floor()

    def __float__(self) -> float:
        return float(sum(c * math.sqrt(d) for d, c in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for d, c in self.terms:
            if d == 1:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"sqrt{d}")
            elif c == -1:
                parts.append(f"-sqrt{d}")
            else:
                parts.append(f"{c}*sqrt{d}")
        return "+".join(parts).replace("+-", "-")


class SurdSyntaxError(ValueError):
    pass


_TOK = re.compile(r"\s*(?:(sqrt)\s*(\d+)|(sqrt)\s*\(\s*(\d+)\s*\)|(\d+)|(.))")


def parse_surd(text: str) -> Surd:
    """Parse the slope micro-grammar: ``sqrt<d>``, naturals, ``+ - * /``, parentheses.

    >>> str(parse_surd("(sqrt5-1)/2"))
    '-1/2+1/2*sqrt5'
    """
    toks: list[tuple[str, object, int]] = []
    for m in _TOK.finditer(text):
        if m.group(1) or m.group(3):
            d = int(m.group(2) or m.group(4))
            toks.append(("num", Surd({d: 1}), m.start()))
        elif m.group(5):
            toks.append(("num", Surd.of(int(m.group(5))), m.start()))
        elif m.group(6):
            ch = m.group(6)
            if ch not in "+-*/()":
                raise SurdSyntaxError(f"unexpected {ch!r} at position {m.start(6)}")
            toks.append((ch, ch, m.start(6)))
    toks.append(("end", None, len(text)))
    pos = 0

    def peek() -> str:
        return toks[pos][0]

    def take(kind: str):
        nonlocal pos
        k, v, at = toks[pos]
        if k != kind:
            raise SurdSyntaxError(f"expected {kind!r} at position {at} in {text!r}")
        pos += 1
        return v

    def expr() -> Surd:
        v = term()
        while peek() in "+-":
            op = take(peek())
            v = v + term() if op == "+" else v - term()
        return v

    def term() -> Surd:
        v = unary()
        while peek() in "*/":
            op = take(peek())
            v = v * unary() if op == "*" else v / unary()
        return v

    def unary() -> Surd:
        if peek() == "-":
            take("-")
            return -unary()
        if peek() == "(":
            take("(")
            v = expr()
            take(")")
            return v
        return take("num")

    value = expr()
    take("end")
    return value
