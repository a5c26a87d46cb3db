"""Explicit countable witnesses for orthogonal pairs.

Every orthogonal pair (alpha, beta) gets a lazily evaluated bichain.  Its
elements are named by their rank in the first order; a rank function gives
the position in the second order.  The construction is assembled from a
few moves, and the trace records which ones were used:

* the pendant fence for (w, w);
* a block sum of fences for (w, w^n);
* padding an initial segment in front;
* appending a top segment or a single point;
* interleaving, for w+1 <= alpha <= beta.

Only finite truncations can be checked here; the infinite object is
described, not certified.

Run:  python demos/04_witness_bichains.py
"""

# %%
import json
import tempfile
from pathlib import Path

from orthogonal_ordinals.constructions import (
    NotOrthogonalError, build_witness, truncate, verify_witness, witness_to_json,
)
from orthogonal_ordinals.ordinal import parse_ordinal, pretty
from orthogonal_ordinals.perms import format_permutation, is_simple
from orthogonal_ordinals.structures import to_dot

# %% Build a few witnesses and look at their recipes
for a, b in [("w", "w"), ("w", "w+1"), ("w", "w^w+w^3"), ("w", "w^2+w*2+1"),
             ("w+1", "w+1"), ("w+1", "w^w*7+w"), ("4", "4")]:
    w = build_witness(parse_ordinal(a), parse_ordinal(b))
    print(f"({pretty(w.alpha)}, {pretty(w.beta)}): {' ; '.join(w.trace)}")

# %% Non-orthogonal input is refused with the reason
try:
    build_witness(parse_ordinal("w"), parse_ordinal("w^w"))
except NotOrthogonalError as e:
    print("refused:", e.decision)

# %% The (w, w) fence: every truncation from size 4 on is a simple permutation
w = build_witness(parse_ordinal("w"), parse_ordinal("w"))
for n in (4, 8, 12, 16):
    p = truncate(w, n).permutation
    print(n, format_permutation(p, compact=False), "simple:", is_simple(p))

print(verify_witness(w, 20))

# %% A witness with a tail above w: the point named w sits on top of the first order
w = build_witness(parse_ordinal("w+1"), parse_ordinal("w^w"))
for x in w.sample(8):
    print(f"{w.code(x):>10}: rank1={pretty(x):>4}  rank2={pretty(w.rank2(x))}")

# %% Export: JSON for the first elements, DOT for the truncation
data = witness_to_json(w, 10)
out = Path(tempfile.gettempdir()) / "witness_demo.json"
out.write_text(json.dumps(data, indent=1, ensure_ascii=False))
print("wrote", out)
print(to_dot(truncate(w, 6), name="W6"))
