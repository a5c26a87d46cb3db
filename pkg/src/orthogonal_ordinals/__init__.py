"""Orthogonal well orders: decide, construct and verify.

Two linear orders on one set are *orthogonal* when the identity and the
constant maps are the only maps preserving both.  For ordinals the question
has a short answer (``w+1 <= alpha``, or ``alpha = w`` and ``beta < w*beta``,
for infinite pairs); this package computes it, builds explicit witness
bichains for every orthogonal pair, and checks the finite theory (prime
bichain = orthogonal pair = simple permutation) by brute force.

Modules: :mod:`.ordinal`, :mod:`.structures`, :mod:`.perms`, :mod:`.words`,
:mod:`.surd`, :mod:`.constructions`, :mod:`.cli`.
"""

from .ordinal import (
    OMEGA, ONE, ZERO, Decision, Ordinal, Verdict, cnf_add, cnf_compare, cnf_mul,
    decide_orthogonal, enumerate_below, ind, omega_fixed, parse_ordinal, pretty,
    render, residue_class_member,
)
from .structures import (
    FiniteBichain, FiniteBinaryStructure, FiniteGraph, FinitePoset,
    comparability_graph, intersection_order, is_autonomous, is_embedding_rigid,
    is_prime, is_semirigid, realizer2, transitive_orientations,
)
from .perms import age, common_intervals, count_simple, is_simple, pattern_embeds
from .surd import Surd, parse_surd
from .words import (
    MechanicalWord, PeriodicWord, almost_disjoint_family,
    eventually_periodic_witness, is_balanced, mechanical_word,
    translate_almost_included,
)
from .constructions import (
    LazyBichain, build_GA, build_PA, build_witness, realize_PA, truncate,
    verify_witness,
)

__version__ = "0.1.0"
