import json

import pytest

from orthogonal_ordinals.constructions import (
    FenceRealizer, NotOrthogonalError, build_GA, build_PA, build_witness, check_translate_embedding,
    fence_witness, realize_PA, residue_partition, truncate, verify_witness, witness_to_json,
)
from orthogonal_ordinals.ordinal import OMEGA, ZERO, cnf_mul, ordinal, parse_ordinal
from orthogonal_ordinals.perms import pattern_embeds
from orthogonal_ordinals.structures import (
    BoundExceeded, comparability_graph, intersection_order, is_prime,
)
from orthogonal_ordinals.words import ExplicitWord, PeriodicWord, sturmian_seed_set

P = parse_ordinal
EVENS_FROM_2 = PeriodicWord("00", "10")
ODDS_FROM_3 = PeriodicWord("000", "10")
SEED = sturmian_seed_set(0)


# --- G(A) and P(A) ------------------------------------------------------------

def test_ga_examples():
    G = build_GA({2, 4}, 5)
    assert G.graph.n == 8 and len(G.graph.edges) == 7
    adj = G.graph.adjacency
    assert [adj[i].sum() for i in (G.index((2, 1)), G.index((4, 1)))] == [1, 1]
    assert adj[G.index(2), G.index((2, 1))]
    path = build_GA(set(), 4)
    assert path.graph.n == 5 and path.graph.sorted_edges() == [(0, 1), (1, 2), (2, 3), (3, 4)]
    assert build_GA({1}, 3).pendant_on_one


def test_ga_with_pendant_on_one_is_not_prime():
    G = build_GA({1, 4}, 6)
    assert G.pendant_on_one
    assert not is_prime(G.graph)


def test_pa_example_pairs():
    PA = build_PA({2}, 4)
    ix = PA.vertices.index
    strict = set(PA.poset.strict_pairs())
    for x, y in [(2, 1), (0, 1), (2, 3), (4, 3), (2, (2, 1))]:
        assert (ix(x), ix(y)) in strict


@pytest.mark.parametrize("A,N", [({2, 5}, 8), ({2}, 6), (EVENS_FROM_2, 10), (SEED, 14)])
def test_comparability_of_pa_is_ga(A, N):
    assert comparability_graph(build_PA(A, N).poset) == build_GA(A, N).graph


@pytest.mark.parametrize("A,N", [({2}, 6), ({2, 5}, 8), (SEED, 12), (SEED, 16)])
def test_realize_pa_intersects_to_pa(A, N):
    assert intersection_order(realize_PA(A, N)) == build_PA(A, N).poset


def test_ga_prime_for_seed_set():
    for N in range(6, 17, 2):
        assert is_prime(build_GA(SEED, N).graph)


def test_realizer_second_order_reverses_spine():
    # the second order walks each spine parity class downwards
    N = 14
    B = realize_PA(SEED, N)
    PA = build_PA(SEED, N)
    for parity in (0, 1):
        spine = [PA.vertices.index(m) for m in range(parity, N + 1, 2)]
        firsts = [B.first[i] for i in spine]
        seconds = [B.second[i] for i in spine]
        assert firsts == sorted(firsts)
        assert seconds == sorted(seconds, reverse=True)


@pytest.mark.parametrize("N", [6, 9, 12, 16])
def test_fence_realizer_restricts_to_a_realizer(N):
    fr = FenceRealizer(SEED)
    PA = build_PA(SEED, N)
    codes = [fr.code_of_vertex(v) for v in PA.vertices]
    assert intersection_order(fr.bichain_on(codes)) == PA.poset


def test_fence_realizer_ranks_are_bijective():
    fr = FenceRealizer(SEED)
    for r in range(300):
        assert fr.rank_L(fr.code_L(r)) == r
        assert fr.rank_M(fr.code_M(r)) == r
        assert fr.path_position(fr.path_code(r)) == r


# --- translation versus embedding ----------------------------------------------

def test_translate_embedding_identity():
    rep = check_translate_embedding(EVENS_FROM_2, EVENS_FROM_2, kmax=0, N=10)
    assert rep.translate_positive and rep.embedding_found and rep.agree


def test_translate_embedding_shift():
    rep = check_translate_embedding(EVENS_FROM_2, ODDS_FROM_3, kmax=1, N=10)
    assert rep.translate[1].positive and rep.embedding_found and rep.agree


def test_translate_embedding_no_embedding():
    A = PeriodicWord("00", "1100")       # {4t+2, 4t+3}: adjacent pendants
    rep = check_translate_embedding(A, EVENS_FROM_2, kmax=2, N=12)
    assert not rep.translate_positive and not rep.embedding_found and rep.agree


def test_translate_embedding_bound():
    with pytest.raises(BoundExceeded):
        check_translate_embedding(EVENS_FROM_2, EVENS_FROM_2, kmax=0, N=20)


# --- witnesses ------------------------------------------------------------------

ORTHOGONAL = [
    ("w", "w"), ("w", "w+1"), ("w", "w^w+w^3"), ("w+1", "w^w"),
    ("w+1", "w^w*7+w"), ("w+1", "w+1"), ("w", "w^2+w*2+1"), ("w+1", "w*2+1"),
    ("w^2", "w"), ("w", "w^3"), ("4", "4"), ("w*3+2", "w^2*5"),
]


@pytest.mark.parametrize("a,b", ORTHOGONAL)
def test_witness_passes_basic_checks(a, b):
    w = build_witness(P(a), P(b))
    assert (w.alpha, w.beta) == (P(a), P(b))
    rep = verify_witness(w, 120)
    assert rep.ok, str(rep)


@pytest.mark.parametrize("a,b", [("w", "w^w"), ("w", "w^w*2"), ("5", "7"), ("3", "3"), ("w", "6")])
def test_witness_rejects_non_orthogonal(a, b):
    with pytest.raises(NotOrthogonalError) as e:
        build_witness(P(a), P(b))
    assert not e.value.decision.orthogonal


def test_fence_truncations_prime_and_monotone():
    w = build_witness(OMEGA, OMEGA)
    assert is_prime(truncate(w, 12))
    rep = verify_witness(w, 20)
    assert rep.results == {k: True for k in rep.results} and "prime" in rep.results
    for n in range(1, 12):
        assert pattern_embeds(truncate(w, n).permutation, truncate(w, n + 1).permutation)


def test_truncation_basics():
    w = fence_witness()
    assert truncate(w, 1).n == 1
    B = truncate(w, 8)
    assert sorted(B.first) == sorted(B.second) == list(range(8))


def test_omega_plus_one_squared_top_element():
    w = build_witness(OMEGA + 1, OMEGA + 1)
    assert w.enumerator(1) == OMEGA                 # the top appears early
    for n in (10, 40, 100):
        finite = sorted(int(x) for x in w.sample(n) if x.is_finite)
        # downward closed up to a short tail: pendants are listed late
        head = next((i for i, v in enumerate(finite) if v != i), len(finite))
        assert head >= len(finite) - 3
        later = {int(x) for x in w.sample(n + 10) if x.is_finite}
        assert set(range(max(finite))) <= later


def test_append_top_trace():
    w = build_witness(OMEGA, P("w^2+w*2+1"))
    assert w.trace == ("omega-omega-fence(0)", "append-top(w^2+w*2)")


def test_rank2_single_top_value():
    w = build_witness(OMEGA + 1, P("w*2+1"))
    big = [y for y in (w.forward(x) for x in w.sample(50)) if not y < cnf_mul(OMEGA, ordinal(2))]
    assert len(big) == 1


def test_block_sum_blocks_use_all_of_beta():
    w = build_witness(OMEGA, P("w^2"))
    ys = {w.forward(x) for x in w.sample(200)}
    assert any(not y < OMEGA * 3 for y in ys)
    assert all(y < P("w^2") for y in ys)


def test_seed_changes_fence():
    a, b = fence_witness(0), fence_witness(1)
    assert truncate(a, 30) != truncate(b, 30)
    assert verify_witness(b, 20).ok


def test_finite_witness_is_simple():
    w = build_witness(ordinal(5), ordinal(5))
    assert w.trace == ("finite-simple(2 4 1 5 3)",)
    assert is_prime(truncate(w, 5))


def test_witness_json_schema():
    data = witness_to_json(build_witness(OMEGA, OMEGA + 1), 6)
    assert set(data) == {"alpha", "beta", "trace", "elements"}
    assert data["alpha"] == "w" and data["beta"] == "w+1"
    assert [e["id"] for e in data["elements"]] == list(range(6))
    for e in data["elements"]:
        assert set(e) == {"id", "code", "rank1", "rank2"}
        parse_ordinal(e["rank1"]), parse_ordinal(e["rank2"])
    json.dumps(data)


def test_residue_partition():
    assert residue_partition(5, 2) == [[0, 2, 4], [1, 3, 5]]
    parts = residue_partition(6, 3)
    assert len(parts) == 3
    flat = sorted(x for p in parts for x in p)
    assert flat == list(range(7))
