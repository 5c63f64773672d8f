import pytest

from conftest import S
from mtlideals.errors import NotApplicable
from mtlideals.explorer import (
    brute_force_ideals, down_sets, enumerate_filters, enumerate_li_ideals, inventory, up_sets,
)
from mtlideals.fixtures import FIXTURES
from mtlideals.search import all_chain_models
from mtlideals.subsets import ElementSubset, all_subsets


def _named(alg, subsets):
    return [frozenset(alg.names(A)) for A in subsets]


@pytest.mark.parametrize("name", list(FIXTURES))
def test_ideals_match_oracle(algs, raws, name):
    a, r = algs[name], raws[name]
    assert set(_named(a, enumerate_li_ideals(a).ideals)) == set(r.ideals())


def test_known_inventories(algs):
    e = algs["ex3.1"]
    assert enumerate_li_ideals(e).ideals == [S(e, "0"), ElementSubset.full(4)]
    a = algs["ex4.3"]
    assert enumerate_li_ideals(a).ideals == [S(a, "0"), S(a, "0", "a"), ElementSubset.full(6)]
    b = algs["ex4.6"]
    assert enumerate_li_ideals(b).ideals == [S(b, "0"), ElementSubset.full(4)]
    t = algs["trivial1"]
    assert enumerate_li_ideals(t).ideals == [ElementSubset.full(1)]


def test_inventory_sorted_and_covering(algs):
    a = algs["ex4.3"]
    inv = enumerate_li_ideals(a)
    keys = [A.sort_key() for A in inv.ideals]
    assert keys == sorted(keys)
    assert inv.edges == [(0, 1), (1, 2)]


@pytest.mark.parametrize("alg", [f.load() for f in FIXTURES.values()] + all_chain_models(5),
                         ids=lambda a: a.name)
def test_pruned_equals_brute_force(alg):
    assert enumerate_li_ideals(alg, brute_check=True).ideals == brute_force_ideals(alg)


def test_down_sets_of_chain_and_count(algs):
    # a chain of n elements has n + 1 down-sets
    for name in ("ex3.1", "ex4.3", "ex4.6", "chain2", "trivial1"):
        a = algs[name]
        assert len(down_sets(a)) == a.n + 1
        assert len(up_sets(a)) == a.n + 1


@pytest.mark.parametrize("name", list(FIXTURES))
def test_down_sets_match_brute_force(algs, name):
    a = algs[name]
    brute = sorted(A.mask for A in all_subsets(a.n)
                   if all(y in A for x in A for y in range(a.n) if a.leq[y][x]))
    assert sorted(down_sets(a)) == brute


@pytest.mark.parametrize("name", list(FIXTURES))
def test_filters_match_oracle(algs, raws, name):
    a, r = algs[name], raws[name]
    got = enumerate_filters(a, brute_check=True)
    assert set(_named(a, got)) == {F for F in r.subsets() if r.is_filter(F)}
    assert ElementSubset.of(a.n, [a.top]) in got


def test_ex43_filters(algs):
    a = algs["ex4.3"]
    fs = enumerate_filters(a)
    assert ElementSubset.full(a.n) in fs
    assert S(a, "1", "c") not in fs


def test_ex31_classification(algs):
    e = algs["ex3.1"]
    (zero, c0), (full, cL) = inventory(e).entries
    assert zero == S(e, "0")
    assert c0.is_maximal and c0.is_prime and c0.is_proper and not c0.is_ultra
    assert c0.witnesses["ultra"] == ("LI6", (e.index("a"),))
    assert not cL.is_proper and not cL.is_maximal and not cL.is_prime


def test_ex43_classification(algs):
    a = algs["ex4.3"]
    c = dict(inventory(a).entries)[S(a, "0", "a")]
    assert c.is_li and c.is_maximal and c.is_prime and not c.is_ili and not c.is_boolean


def test_classification_invariants():
    for alg in [f.load() for f in FIXTURES.values()] + all_chain_models(5):
        for A, c in inventory(alg).entries:
            assert c.is_li
            assert not c.is_prime or c.is_proper
            assert not c.is_maximal or c.is_proper
            assert not c.is_ultra or c.is_proper
            for flag, value in c.flags().items():
                if not value:
                    assert flag in c.witnesses


def test_enumeration_needs_residuated_lattice():
    from mtlideals.algebra import derive_order
    from mtlideals.fixtures import load_fixture
    a = load_fixture("ex4.6")
    t = [list(r) for r in a.otimes]
    t[1][2] = t[2][1] = 0
    bad = derive_order("broken", a.elements, a.bottom, a.top, a.imp, t)
    with pytest.raises(NotApplicable):
        enumerate_li_ideals(bad)
