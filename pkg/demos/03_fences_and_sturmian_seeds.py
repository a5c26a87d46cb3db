"""Fences with pendants: the building block of the infinite witnesses.

G(A) is the one-way path 0-1-2-... with an extra leaf hanging off every
a in A.  Orienting the path as a zig-zag (evens below their odd neighbours)
gives a poset P(A) of dimension two.  Reading the two linear orders of a
realizer off P(A) gives a bichain of type (w, w).  Which pendant patterns
can embed into which is governed by translations of A.  Aperiodic A, cut
from a Sturmian word, keeps the fence prime and rigid.

Run:  python demos/03_fences_and_sturmian_seeds.py
"""

# %%
from orthogonal_ordinals.constructions import (
    FenceRealizer, build_GA, build_PA, check_translate_embedding, realize_PA,
)
from orthogonal_ordinals.structures import comparability_graph, intersection_order, is_prime
from orthogonal_ordinals.words import (
    SQRT2_MINUS_1, MechanicalWord, PeriodicWord, eventually_periodic_witness,
    is_balanced, sturmian_seed_set,
)

# %% A Sturmian word: balanced and aperiodic
w = MechanicalWord(SQRT2_MINUS_1)
print("sqrt2-1 word:", w.window(40))
print("balanced up to length 50:", is_balanced(w.bits(2000), 50))
print("periodic witness in 1000 letters:", eventually_periodic_witness(w.window(1000)))

# %% Seed set A: even numbers read off the word, avoiding 0 and 1
A = sturmian_seed_set(0)
print("A =", A.elements(60))

# %% Small truncations of G(A) and P(A)
for N in (8, 12, 16):
    G, P = build_GA(A, N), build_PA(A, N)
    B = realize_PA(A, N)
    print(f"N={N}: {G.graph.n} vertices, prime={is_prime(G.graph)}, "
          f"Comp(P)=G: {comparability_graph(P.poset) == G.graph}, "
          f"realizer exact: {intersection_order(B) == P.poset}")

print("labels:", build_GA(A, 12).labels)

# %% The explicit infinite realizer, restricted to the first vertices
fr = FenceRealizer(A)
print("L order :", [fr.label(fr.code_L(r)) for r in range(14)])
print("M order :", [fr.label(fr.code_M(r)) for r in range(14)])

# %% Translations versus embeddings (finite windows only)
evens = PeriodicWord("00", "10")      # {2, 4, 6, ...}
odds = PeriodicWord("000", "10")      # {3, 5, 7, ...}
pairs = PeriodicWord("00", "1100")    # {2, 3, 6, 7, ...}
for name, X, Y, k in [("evens->evens", evens, evens, 0), ("evens->odds", evens, odds, 1),
                      ("pairs->evens", pairs, evens, 2)]:
    rep = check_translate_embedding(X, Y, kmax=k, N=10)
    print(f"{name}: translate={rep.translate_positive} embedding={rep.embedding_found}")
