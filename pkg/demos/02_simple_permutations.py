"""Finite orthogonal pairs are simple permutations.

A bichain (two orders on {0..n-1}) relabelled along its first order is a
permutation.  Its autonomous sets are the common intervals, so the bichain is
prime exactly when the permutation is simple, and prime bichains are the
semirigid ones.  This demo checks that on small n and counts simple permutations.

Run:  python demos/02_simple_permutations.py
"""

# %%
import itertools
import math
import random
import time

from orthogonal_ordinals.perms import (
    E_MINUS_2, common_intervals, count_simple, first_simple, format_permutation,
    is_simple, simple_ratio_table,
)
from orthogonal_ordinals.structures import FiniteBichain, is_prime, is_semirigid

# %% Common intervals of 2413 and of a non-simple permutation
for text in ["2413", "3142", "2143", "1234"]:
    p = tuple(int(c) - 1 for c in text)
    ivs = [(i, j) for i, j in common_intervals(p) if 0 < j - i < len(p) - 1]
    print(f"{text}: nontrivial common intervals {ivs or 'none'} -> simple={is_simple(p)}")

# %% Three definitions agree on every bichain with n <= 5
agree = 0
for n in range(1, 6):
    for s in itertools.permutations(range(n)):
        B = FiniteBichain.of_permutation(s)
        agree += is_simple(s) == is_prime(B) == is_semirigid(B)
print("agreeing bichains:", agree, "of", sum(math.factorial(n) for n in range(1, 6)))

# %% How many simple permutations are there?
for row in simple_ratio_table(range(1, 10)):
    print(f"n={row['n']}: q={row['q']:>6}  q/n!={row['ratio']:.4f}")
print(f"limit e^-2 = {E_MINUS_2:.4f}")
# Note the dip from n=4 (0.0833) to n=5 (0.0500); from there on the ratio
# climbs towards e^-2.

# %% One simple permutation per size (none for n = 3)
for n in [4, 5, 6, 12]:
    print(n, format_permutation(first_simple(n), compact=False))

# %% The sweep handles large inputs
rng = random.Random(0)
p = list(range(100_000))
rng.shuffle(p)
is_simple([1, 3, 0, 2])  # compile
t = time.perf_counter()
print("random n=1e5 simple?", is_simple(p), f"({time.perf_counter() - t:.3f}s)")
print("count_simple(9) =", count_simple(9))
