"""Randomised invariants over the chain models and fixtures."""
from hypothesis import given, settings, strategies as st

from mtlideals import ideals as I
from mtlideals.explorer import enumerate_li_ideals
from mtlideals.fixtures import FIXTURES
from mtlideals.search import all_chain_models
from mtlideals.subsets import ElementSubset, format_subset, parse_subset
from mtlideals.textformat import dump_algebra, parse_algebra

MODELS = [f.load() for f in FIXTURES.values()] + all_chain_models(6)


@st.composite
def alg_and_subset(draw):
    alg = draw(st.sampled_from(MODELS))
    mask = draw(st.integers(0, (1 << alg.n) - 1))
    return alg, ElementSubset(alg.n, mask)


@settings(max_examples=300, deadline=None)
@given(alg_and_subset())
def test_generated_ideal_is_least(pair):
    alg, A = pair
    G = I.generated_ideal(alg, A)
    assert A.issubset(G) and I.is_li_ideal(alg, G)
    for B in enumerate_li_ideals(alg).ideals:
        if A.issubset(B):
            assert G.issubset(B)


@settings(max_examples=300, deadline=None)
@given(alg_and_subset())
def test_generated_ideal_idempotent_and_monotone(pair):
    alg, A = pair
    G = I.generated_ideal(alg, A)
    assert I.generated_ideal(alg, G) == G
    assert G.issubset(I.generated_ideal(alg, A | ElementSubset.of(alg.n, [alg.top])))


@settings(max_examples=300, deadline=None)
@given(alg_and_subset())
def test_ideals_are_down_sets_closed_under_join(pair):
    alg, A = pair
    if I.is_li_ideal(alg, A):
        for x in A:
            for y in range(alg.n):
                if alg.leq[y][x]:
                    assert y in A
            for y in A:
                assert alg.join[x][y] in A
                assert alg.neg[alg.neg[x]] in A


@settings(max_examples=300, deadline=None)
@given(alg_and_subset())
def test_filter_formulations_agree(pair):
    alg, F = pair
    a = I.condition(alg, F, "F0", "F1", "F2")
    b = I.condition(alg, F, "F3", "F4")
    assert bool(a) == bool(b)


@settings(max_examples=300, deadline=None)
@given(alg_and_subset())
def test_dual_on_involutive_algebras(pair):
    alg, A = pair
    D = I.dual(alg, A)
    assert len(D) <= len(A)
    if alg.klass.is_imtl:
        assert I.dual(alg, D) == A
        if alg.klass.is_lia:
            assert bool(I.is_filter(alg, A)) == bool(I.is_li_ideal(alg, D))


@settings(max_examples=300, deadline=None)
@given(alg_and_subset())
def test_predicates_deterministic_and_witness_is_first(pair):
    alg, A = pair
    for rule in ("LI8", "LI10", "LI11", "LI13", "PRIME", "F1", "F2"):
        cx = I.counterexamples(alg, A, rule)
        v = I.condition(alg, A, rule)
        assert bool(v) == (not cx)
        if cx:
            assert v.witness == cx[0] == min(cx)


@settings(max_examples=200, deadline=None)
@given(alg_and_subset())
def test_subset_text_round_trip(pair):
    alg, A = pair
    text = format_subset(alg, A)
    assert parse_subset(alg, text) == A
    assert parse_subset(alg, ",".join(alg.names(A))) == A


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(MODELS))
def test_file_round_trip(alg):
    assert parse_algebra(dump_algebra(alg)) == alg


@settings(max_examples=200, deadline=None)
@given(alg_and_subset())
def test_lia_finite_additive_iff_proper(pair):
    alg, A = pair
    if alg.klass.is_lia and A.mask:
        fap = I.has_finite_additive_property(alg, A)
        assert fap == (not I.generated_ideal(alg, A).is_full)
