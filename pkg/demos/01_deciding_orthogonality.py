"""Which pairs of well orders can be orthogonal?

Two linear orders on one set are orthogonal when the only maps preserving
both are the identity and the constants.  For a pair of ordinals the answer
depends on very little arithmetic: multiplication by w on the left, and the
last term of the Cantor normal form.

Run:  python demos/01_deciding_orthogonality.py
"""

# %% Ordinals are Cantor normal forms, written with "w" for omega
from orthogonal_ordinals.ordinal import (
    OMEGA, cnf_mul, decide_orthogonal, ind, omega_fixed, parse_ordinal, pretty,
)

g = parse_ordinal("w^2*3+w+4")
print("parsed:", pretty(g), "  terms:", [(pretty(e), c) for e, c in g.terms])

# Sums are evaluated, so absorbed terms vanish: 1 + w = w.
print("w+1+w =", pretty(parse_ordinal("w+1+w")))

# %% Left multiplication by w shifts every exponent by one ...
for text in ["w+3", "w^2+w", "w^w+w^3", "w^w", "w^w*5+w^w"]:
    x = parse_ordinal(text)
    print(f"w * ({pretty(x)}) = {pretty(cnf_mul(OMEGA, x))}")

# ... except that exponents >= w absorb the shift.  So w*g = g exactly when
# every exponent is >= w, i.e. when the last term ind(g) is at least w^w.
for text in ["w^w+w^3", "w^w*5+w^w", "w^(w+1)+w^w*2"]:
    x = parse_ordinal(text)
    print(f"{pretty(x):>16}: ind = {pretty(ind(x)):>6}, fixed by w* = {omega_fixed(x)}")

# %% The decision itself
pairs = [("w", "w"), ("w", "w+1"), ("w", "w^w"), ("w", "w^w+w^3"),
         ("w+1", "w^w"), ("w+1", "w+1"), ("5", "7"), ("3", "3"), ("4", "4")]
for a, b in pairs:
    d = decide_orthogonal(parse_ordinal(a), parse_ordinal(b))
    print(f"({pretty(d.alpha)}, {pretty(d.beta)}): {d}")

# Infinite pairs: orthogonal iff w+1 <= alpha, or alpha = w and beta < w*beta.
# Finite pairs (n, n): orthogonal iff a simple permutation of size n exists,
# which fails only for n = 3.
