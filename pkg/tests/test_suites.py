import pytest

from conftest import S
from mtlideals.errors import SuiteNotApplicable
from mtlideals.fixtures import FIXTURES
from mtlideals.search import all_chain_models
from mtlideals.subsets import ElementSubset
from mtlideals.suites import (
    SUITES, THEOREM_SUITES, applicable_suites, default_polarity, run_all_suites, run_theorem_suite,
)

MODELS = [f.load() for f in FIXTURES.values()] + all_chain_models(5)


def test_max_ultra_claim_refuted_on_ex31(algs):
    r = run_theorem_suite(algs["ex3.1"], "MaxUltraClaim")
    e = algs["ex3.1"]
    assert [cx.subset for cx in r.counterexamples] == [S(e, "0")]
    cx = r.counterexamples[0]
    assert cx.clauses == {"ultra": False, "maximal": True}


def test_t32_on_ex31(algs):
    r = run_theorem_suite(algs["ex3.1"], "T3.2")
    assert r.holds and len(r.instances) == 2


def test_l42_on_ex43(algs):
    a = algs["ex4.3"]
    r = run_theorem_suite(a, "L4.2")
    assert r.polarity == "counterexample" and r.meets_expectation
    subsets = [cx.subset for cx in r.counterexamples]
    assert ElementSubset.full(a.n) in subsets
    assert len(r.instances) == 2 ** a.n


def test_l42_counterexamples_match_oracle(algs, raws):
    a, r = algs["ex4.3"], raws["ex4.3"]
    expect = set()
    for F in r.subsets():
        D = frozenset(r.neg(x) for x in F)
        if r.is_filter(F) != r.is_ideal(D):
            expect.add(F)
    got = {frozenset(a.names(cx.subset)) for cx in run_theorem_suite(a, "L4.2").counterexamples}
    assert got == expect


def test_t417_on_ex43(algs):
    assert run_theorem_suite(algs["ex4.3"], "T4.17").holds


@pytest.mark.parametrize("alg", MODELS, ids=lambda a: a.name)
def test_theorem_suites_hold(alg):
    for sid in applicable_suites(alg):
        if sid in THEOREM_SUITES:
            r = run_theorem_suite(alg, sid)
            assert r.holds, (sid, [(cx.subset, cx.clauses) for cx in r.counterexamples])


@pytest.mark.parametrize("alg", MODELS, ids=lambda a: a.name)
def test_l42_polarity_matches_class(alg):
    r = run_theorem_suite(alg, "L4.2")
    assert r.meets_expectation
    if not alg.klass.is_imtl:
        assert ElementSubset.full(alg.n) in [cx.subset for cx in r.counterexamples]


def test_suite_applicability(algs):
    with pytest.raises(SuiteNotApplicable):
        run_theorem_suite(algs["ex4.3"], "T3.2")
    with pytest.raises(KeyError):
        run_theorem_suite(algs["ex3.1"], "T9.9")
    assert set(applicable_suites(algs["ex3.1"])) == set(SUITES)
    assert all(SUITES[s][1] == "mtl" for s in applicable_suites(algs["ex4.3"]))


def test_default_polarities(algs):
    assert default_polarity(algs["ex3.1"], "MaxUltraClaim") == "explore"
    assert default_polarity(algs["ex3.1"], "L4.2") == "holds"
    assert default_polarity(algs["ex4.3"], "L4.2") == "counterexample"
    assert default_polarity(algs["ex4.3"], "T4.17") == "holds"


@pytest.mark.parametrize("name", list(FIXTURES))
def test_fixture_expectations_met(algs, name):
    f = FIXTURES[name]
    results = run_all_suites(algs[name], expect_counterexample=f.expect_counterexample)
    assert all(r.meets_expectation for r in results)
    for r in results:
        if r.suite_id in f.expect_counterexample:
            assert r.counterexamples


def test_t33_finite_statement_on_lia(algs):
    for name in ("ex3.1", "trivial1", "chain2"):
        assert run_theorem_suite(algs[name], "T3.3").holds


def test_t211_clause_vectors_consistent():
    for alg in MODELS:
        if alg.klass.is_lia:
            for inst in run_theorem_suite(alg, "T2.11").instances:
                assert len(set(inst.clauses.values())) == 1
