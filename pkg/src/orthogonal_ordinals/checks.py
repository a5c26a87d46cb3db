"""Exhaustive and randomized consistency suites behind ``check --suite``.

Each suite returns a :class:`SuiteResult`; nothing here prints.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .constructions import build_GA, build_PA, realize_PA
from .ordinal import OMEGA, ZERO, ind, omega_fixed, omega_power, random_ordinal
from .perms import is_simple
from .structures import (
    FiniteBichain, comparability_graph, intersection_order, is_prime,
    is_semirigid, natural_posets, transitive_orientations,
)
from .surd import Surd
from .words import (
    GOLDEN_CONJUGATE, SQRT2_MINUS_1, MechanicalWord, is_balanced, sturmian_seed_set,
)

__all__ = ["SuiteResult", "SUITES", "run_suite", "finite_equiv", "bichain_vs_intersection", "dual_orientations",
           "fact", "sturmian", "ga_prime"]


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {"suite": self.name, "ok": self.ok, "checked": self.checked,
                "failures": self.failures[:20], "info": self.info}


def finite_equiv(max_n: int = 6) -> SuiteResult:
    """Every ``B_sigma`` with ``n <= max_n``: semirigid = prime = simple."""
    res = SuiteResult("finite-equiv")
    for n in range(1, max_n + 1):
        for s in itertools.permutations(range(n)):
            B = FiniteBichain.of_permutation(s)
            a, b, c = is_semirigid(B, bound=None), is_prime(B), is_simple(s)
            res.checked += 1
            if not a == b == c:
                res.failures.append(f"{s}: semirigid={a} prime={b} simple={c}")
    return res


def bichain_vs_intersection(max_n: int = 6, random_cases: int = 1000, random_max_n: int = 9, seed: int = 0) -> SuiteResult:
    """A bichain is prime iff the intersection of its two orders is."""
    res = SuiteResult("bichain-vs-intersection")

    def one(s):
        B = FiniteBichain.of_permutation(s)
        res.checked += 1
        if is_prime(B) != is_prime(intersection_order(B)):
            res.failures.append(str(s))

    for n in range(1, max_n + 1):
        for s in itertools.permutations(range(n)):
            one(s)
    rng = random.Random(seed)
    for _ in range(random_cases):
        s = list(range(rng.randint(1, random_max_n)))
        rng.shuffle(s)
        one(tuple(s))
    return res


def dual_orientations(max_n: int = 6) -> SuiteResult:
    """Prime posets: the transitive orientations of the comparability graph
    are exactly the order and its dual (two of them once there is an edge)."""
    res = SuiteResult("dual-orientations")
    primes = 0
    for n in range(1, max_n + 1):
        for P in natural_posets(n):
            if not is_prime(P):
                continue
            primes += 1
            res.checked += 1
            found = transitive_orientations(comparability_graph(P))
            expected = {P, P.dual()}
            if len(found) != len(expected) or set(found) != expected:
                res.failures.append(f"n={n} pairs={P.strict_pairs()}: {len(found)} orientations")
            elif n >= 3 and len(found) != 2:
                res.failures.append(f"n={n} pairs={P.strict_pairs()}: not exactly two")
    res.info["prime_posets"] = primes
    return res


def fact(samples: int = 10_000, seed: int = 0, depth: int = 3, max_coeff: int = 9) -> SuiteResult:
    """``w * g == g`` iff ``ind(g) >= w^w`` for random nonzero ``g``."""
    res = SuiteResult("fact")
    rng = random.Random(seed)
    ww = omega_power(OMEGA)
    fixed = 0
    while res.checked < samples:
        g = random_ordinal(rng, depth, max_coeff)
        if g == ZERO:
            continue
        res.checked += 1
        a, b = omega_fixed(g), not ind(g) < ww
        fixed += a
        if a != b:
            res.failures.append(str(g))
    res.info["omega_fixed"] = fixed
    return res


def sturmian(length: int = 2000, maxlen: int = 50, kmax: int = 50) -> SuiteResult:
    """Balance, density and exact shift coherence of two mechanical words."""
    res = SuiteResult("sturmian")
    for name, slope in (("sqrt2-1", SQRT2_MINUS_1), ("(sqrt5-1)/2", GOLDEN_CONJUGATE)):
        w = MechanicalWord(slope)
        bits = w.bits(length + kmax)
        res.checked += 1
        if not is_balanced(bits[:length], maxlen):
            res.failures.append(f"{name}: unbalanced")
        ones = int(bits[:length].sum())
        dev = Surd.of(ones) - slope * length
        if not (-2 <= dev <= 2):
            res.failures.append(f"{name}: density off by {float(dev):.3f}")
        for k in range(1, kmax + 1):
            res.checked += 1
            shifted = w.shift(k).bits(length)
            if not (shifted == bits[k:k + length]).all():
                res.failures.append(f"{name}: shift {k} incoherent")
    return res


def ga_prime(max_n: int = 16, seed: int = 0) -> SuiteResult:
    """Fence truncations for an aperiodic even seed set: comparability graph
    is ``G(A)``, ``G(A)`` is prime, and the realizer intersects to ``P(A)``."""
    res = SuiteResult("ga-prime")
    A = sturmian_seed_set(seed)
    for N in range(6, max_n + 1, 2):
        res.checked += 1
        G, P = build_GA(A, N), build_PA(A, N)
        if comparability_graph(P.poset) != G.graph:
            res.failures.append(f"N={N}: Comp(P(A)) != G(A)")
        if not is_prime(G.graph):
            res.failures.append(f"N={N}: G(A) not prime")
        if intersection_order(realize_PA(A, N)) != P.poset:
            res.failures.append(f"N={N}: realizer does not intersect to P(A)")
    res.info["A"] = A.elements(max_n + 1)
    return res


# CLI names; the two short ones are kept for compatibility with existing scripts
SUITES = {
    "finite-equiv": finite_equiv,
    "zaguia": bichain_vs_intersection,
    "gallai": dual_orientations,
    "bichain-vs-intersection": bichain_vs_intersection,
    "dual-orientations": dual_orientations,
    "fact": fact,
    "sturmian": sturmian,
    "ga-prime": ga_prime,
}


def run_suite(name: str, max_n: int | None = None) -> SuiteResult:
    fn = SUITES[name]
    if max_n is None:
        return fn()
    if name == "fact":
        return fn(samples=max_n)
    if name == "sturmian":
        return fn(length=max_n)
    return fn(max_n=max_n)
