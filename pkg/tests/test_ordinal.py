import random

import pytest
from hypothesis import given, settings, strategies as st

from orthogonal_ordinals.ordinal import (
    OMEGA, ONE, ZERO, Cmp, OrdinalSyntaxError, Verdict, cnf_add, cnf_compare, cnf_mul,
    decide_orthogonal, divide_by_omega, enumerate_below, enumeration_index, ind,
    left_subtract, omega_fixed, omega_power, ordinal, parse_ordinal, random_ordinal,
    render, residue_class_member,
)

W = OMEGA
P = parse_ordinal


def terms(g):
    return [(e, c) for e, c in g.terms]


@st.composite
def ordinals(draw, depth=2):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_ordinal(random.Random(seed), depth=draw(st.integers(0, depth)), max_coeff=4)


# --- parsing and rendering -------------------------------------------------

def test_parse_literal():
    g = P("w^2*3+w+4")
    assert terms(g) == [(ordinal(2), 3), (ONE, 1), (ZERO, 4)]


def test_parse_evaluates_noncanonical_sums():
    assert P("w+1+w") == cnf_mul(W, ordinal(2))
    assert P("1+w") == W


def test_parse_nested_exponent():
    assert terms(P("w^(w)")) == [(W, 1)]


@pytest.mark.parametrize("bad", ["", "w^^", "w+", "(w", "x", "w*-1"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(OrdinalSyntaxError):
        P(bad)


@settings(max_examples=200, deadline=None)
@given(ordinals(depth=3))
def test_render_roundtrip(g):
    assert P(render(g)) == g


# --- comparison and arithmetic ---------------------------------------------

def test_compare_examples():
    assert cnf_compare(W, W) is Cmp.EQ
    assert cnf_compare(W + 1, W * 2) is Cmp.LT
    assert cnf_compare(omega_power(W), omega_power(3, 99)) is Cmp.GT


def test_arithmetic_examples():
    assert cnf_add(ONE, W) == W
    assert cnf_mul(W, W + 1) == omega_power(2) + W
    assert cnf_mul(omega_power(2), ordinal(2)) == omega_power(2, 2)


@settings(max_examples=150, deadline=None)
@given(ordinals(), ordinals(), ordinals())
def test_addition_and_multiplication_associative(a, b, c):
    assert cnf_add(cnf_add(a, b), c) == cnf_add(a, cnf_add(b, c))
    assert cnf_mul(cnf_mul(a, b), c) == cnf_mul(a, cnf_mul(b, c))


@settings(max_examples=150, deadline=None)
@given(ordinals(), ordinals(), ordinals())
def test_left_distributive(a, b, c):
    assert cnf_mul(a, cnf_add(b, c)) == cnf_add(cnf_mul(a, b), cnf_mul(a, c))


@settings(max_examples=150, deadline=None)
@given(ordinals(), ordinals())
def test_left_subtract_inverts_addition(a, b):
    lo, hi = sorted([a, b])
    assert cnf_add(lo, left_subtract(lo, hi)) == hi


@settings(max_examples=100, deadline=None)
@given(ordinals())
def test_divide_by_omega(g):
    q, r = divide_by_omega(g)
    assert cnf_add(cnf_mul(W, q), ordinal(r)) == g


def test_finite_arithmetic_matches_integers():
    for a in range(6):
        for b in range(6):
            assert int(cnf_add(ordinal(a), ordinal(b))) == a + b
            assert int(cnf_mul(ordinal(a), ordinal(b))) == a * b


# --- ind and the omega-fixed-point fact ------------------------------------

def test_ind_examples():
    assert ind(ZERO) == ZERO
    assert ind(P("w^2+w+3")) == ONE
    assert ind(P("w^w*5+w^w")) == omega_power(W)


def _ind_by_prefixes(g):
    """Least nonzero d with g = g' + d, trying every CNF prefix g'."""
    ts = list(g.terms)
    best = None
    head = ZERO
    for e, c in ts:
        for cc in range(c):
            prefix = cnf_add(head, omega_power(e, cc)) if cc else head
            d = left_subtract(prefix, g)
            assert cnf_add(prefix, d) == g
            if d != ZERO and (best is None or d < best):
                best = d
        head = cnf_add(head, omega_power(e, c))
    return best


@settings(max_examples=150, deadline=None)
@given(ordinals(depth=3))
def test_ind_matches_prefix_oracle(g):
    if g == ZERO:
        assert ind(g) == ZERO
    else:
        assert ind(g) == _ind_by_prefixes(g)


def test_omega_fixed_examples():
    assert omega_fixed(omega_power(W))
    assert not omega_fixed(W)
    assert not omega_fixed(P("w^w+w^3"))
    assert cnf_mul(W, P("w^w+w^3")) == P("w^w+w^4")


@settings(max_examples=300, deadline=None)
@given(ordinals(depth=3))
def test_omega_fixed_iff_ind_at_least_omega_omega(g):
    if g == ZERO:
        return
    assert omega_fixed(g) == (cnf_mul(W, g) == g) == (not ind(g) < omega_power(W))


# --- decision ---------------------------------------------------------------

@pytest.mark.parametrize("a,b,verdict,reason", [
    ("w", "w", Verdict.ORTHOGONAL, "alpha-omega-beta-lt-omega-beta"),
    ("w", "w^w", Verdict.NOT_ORTHOGONAL, "omega-beta-eq-beta"),
    ("w+1", "w^w*7+w", Verdict.ORTHOGONAL, "alpha-ge-omega-plus-1"),
    ("5", "7", Verdict.NOT_ORTHOGONAL, "finite-unequal"),
    ("4", "w", Verdict.NOT_ORTHOGONAL, "mixed-cardinality"),
    ("3", "3", Verdict.NOT_ORTHOGONAL, "finite-oracle"),
    ("4", "4", Verdict.ORTHOGONAL, "finite-oracle"),
])
def test_decide_examples(a, b, verdict, reason):
    d = decide_orthogonal(P(a), P(b))
    assert (d.verdict, d.reason) == (verdict, reason)


def test_decide_display():
    assert str(decide_orthogonal(W, P("w^w"))) == "NotOrthogonal (ωβ = β)"
    assert str(decide_orthogonal(P("3"), P("3"))) == "NotOrthogonal (finite oracle)"


@settings(max_examples=150, deadline=None)
@given(ordinals(depth=2), ordinals(depth=2))
def test_decide_symmetric(a, b):
    if a.is_finite and b.is_finite and a == b and int(a) > 6:
        return
    assert decide_orthogonal(a, b).verdict == decide_orthogonal(b, a).verdict


# --- enumeration and residues ----------------------------------------------

def test_enumerate_examples():
    assert enumerate_below(W, 4) == [ordinal(i) for i in range(4)]
    assert enumerate_below(ordinal(5), 5) == [ordinal(i) for i in range(5)]
    # size-then-order: 2 (size 2) precedes w (size 3)
    assert enumerate_below(omega_power(2), 3) == [ZERO, ONE, ordinal(2)]


def test_enumerate_finite_bound_exhausts():
    with pytest.raises(ValueError):
        enumerate_below(ordinal(3), 4)


@pytest.mark.parametrize("bound", ["w", "w^2", "w^w+w^3", "w^(w+1)*2"])
def test_enumeration_injective_bounded_and_indexed(bound):
    a = P(bound)
    xs = enumerate_below(a, 300)
    assert len(set(xs)) == len(xs)
    assert all(x < a for x in xs)
    for i, x in enumerate(xs[:60]):
        assert enumeration_index(a, x) == i


def test_enumeration_is_deterministic():
    assert enumerate_below(P("w^w"), 100) == enumerate_below(P("w^w"), 100)


def test_enumeration_reaches_every_small_ordinal():
    a = omega_power(2)
    xs = set(enumerate_below(a, 400))
    for i in range(4):
        for j in range(4):
            assert cnf_add(cnf_mul(W, ordinal(i)), ordinal(j)) in xs


def test_residue_examples():
    assert residue_class_member(P("w*2+5"), 2, 1)
    assert residue_class_member(P("w^3"), 2, 0)
    assert residue_class_member(ordinal(7), 3, 1)
    with pytest.raises(ValueError):
        residue_class_member(W, 0, 0)
