import pytest

from mtlideals.algebra import classify, derive_order
from mtlideals.errors import AlgebraError, MissingProduct, NotALattice, NotAPartialOrder
from mtlideals.fixtures import FIXTURES, load_fixture
from mtlideals.search import all_chain_models


def _chain_order(alg):
    """Names sorted by number of elements below, for chains."""
    return sorted(alg.elements, key=lambda e: sum(alg.leq[j][alg.index(e)] for j in range(alg.n)))


def test_ex31_is_the_chain_0_a_b_1(algs):
    a = algs["ex3.1"]
    assert _chain_order(a) == ["0", "a", "b", "1"]
    i = a.index
    assert a.imp[i("a")][i("b")] == i("1")
    assert a.imp[i("b")][i("a")] == i("b")


def test_ex43_is_the_chain_0_to_1(algs):
    assert _chain_order(algs["ex4.3"]) == ["0", "a", "b", "c", "d", "1"]


def test_ex43_negation_values(algs):
    a = algs["ex4.3"]
    assert [a.elements[a.neg[i]] for i in range(6)] == ["1", "c", "b", "a", "0", "0"]


def test_trivial_algebra():
    a = derive_order("t", ["0"], 0, 0, [[0]])
    assert a.leq == ((True,),)
    assert a.meet == a.join == a.imp == ((0,),)
    assert a.otimes_derived
    k = classify(a)
    assert k.is_lia and k.failures == []


def test_derived_product_on_lia_matches_lukasiewicz(algs):
    a = algs["ex3.1"]
    assert a.otimes_derived
    # on the 4-chain with indices 0..3, x*y = max(0, x+y-3)
    assert a.otimes == tuple(tuple(max(0, x + y - 3) for y in range(4)) for x in range(4))


def test_missing_product_rejected_when_not_lia():
    # Goedel 3-chain: imp given without product, but negation is not involutive
    with pytest.raises(MissingProduct) as e:
        derive_order("g3", ["0", "a", "1"], 0, 2, [[2, 2, 2], [0, 2, 2], [0, 1, 2]])
    assert e.value.witness == (1,)


def test_not_reflexive():
    with pytest.raises(NotAPartialOrder) as e:
        derive_order("bad", ["0", "1"], 0, 1, [[0, 1], [0, 1]])
    assert e.value.witness == (0,)


def test_not_antisymmetric():
    with pytest.raises(NotAPartialOrder) as e:
        derive_order("bad", ["0", "a", "1"], 0, 2, [[2, 2, 2], [2, 2, 2], [0, 0, 2]])
    assert e.value.witness == (0, 1)


def test_not_transitive():
    # 0<=a, a<=b but not 0<=b
    imp = [[3, 3, 0, 3], [0, 3, 3, 3], [0, 0, 3, 3], [0, 0, 0, 3]]
    with pytest.raises(NotAPartialOrder) as e:
        derive_order("bad", ["0", "a", "b", "1"], 0, 3, imp)
    assert e.value.witness == (0, 1, 2)


def test_bottom_must_be_least():
    # order is the chain 0 < 1 but "1" is declared bottom
    with pytest.raises(NotALattice):
        derive_order("bad", ["0", "1"], 1, 1, [[1, 1], [0, 1]])


def test_non_lattice_rejected():
    # 0 < a, b < c < d, c and d? use the poset 0 < a,b < c,d < 1: a,b have two minimal upper bounds
    els = ["0", "a", "b", "c", "d", "1"]
    up = {"0": set(els), "a": {"a", "c", "d", "1"}, "b": {"b", "c", "d", "1"},
          "c": {"c", "1"}, "d": {"d", "1"}, "1": {"1"}}
    imp = [[5 if els[y] in up[els[x]] else 0 for y in range(6)] for x in range(6)]
    with pytest.raises(NotALattice) as e:
        derive_order("bad", els, 0, 5, imp, otimes=[[0] * 6] * 6)
    assert e.value.witness == (1, 2)


def test_bad_table_shape():
    with pytest.raises(AlgebraError):
        derive_order("bad", ["0", "1"], 0, 1, [[1, 1]])
    with pytest.raises(AlgebraError):
        derive_order("bad", ["0", "1"], 0, 1, [[1, 7], [0, 1]])


@pytest.mark.parametrize("name,lia,mtl", [
    ("ex3.1", True, True), ("ex4.3", False, True), ("ex4.6", False, True),
    ("trivial1", True, True), ("chain2", True, True),
])
def test_fixture_classes(algs, name, lia, mtl):
    k = algs[name].klass
    assert (k.is_lia, k.is_mtl) == (lia, mtl)


def test_ex43_lia_failure_witness(algs):
    # d'' = 0' = 1, so the involution fails first at d
    k = algs["ex4.3"].klass
    assert k.failure("NEG-involution") == ("d",)
    assert k.failure("IMTL-inv") == ("d",)


def test_non_associative_product_recorded():
    a = load_fixture("ex4.6")
    t = [list(r) for r in a.otimes]
    t[1][2] = t[2][1] = 0  # a*b = 0 breaks associativity / adjunction
    b = derive_order("broken", a.elements, a.bottom, a.top, a.imp, t)
    k = b.klass
    assert not k.is_residuated_lattice and not k.is_mtl and not k.is_lia
    assert k.failure("RL-assoc") is not None or k.failure("RL-adj") is not None


def _models():
    return [load_fixture(n) for n in FIXTURES] + all_chain_models(5)


@pytest.mark.parametrize("alg", _models(), ids=lambda a: a.name)
def test_class_monotonicity_and_witnesses(alg):
    k = alg.klass
    assert not k.is_lia or k.is_imtl
    assert not k.is_imtl or k.is_mtl
    assert not k.is_mtl or k.is_residuated_lattice
    flags = {"is_residuated_lattice": "RL-", "is_mtl": "MTL", "is_imtl": "IMTL", "is_lia": ""}
    if not all(getattr(k, f) for f in flags):
        assert k.failures


@pytest.mark.parametrize("alg", _models(), ids=lambda a: a.name)
def test_adjunction_exhaustive(alg):
    n, I, T, le = alg.n, alg.imp, alg.otimes, alg.le
    if alg.klass.is_residuated_lattice:
        assert all(le(z, I[x][y]) == le(T[z][x], y) for x in range(n) for y in range(n) for z in range(n))


@pytest.mark.parametrize("alg", _models(), ids=lambda a: a.name)
def test_rederiving_order_is_idempotent(alg):
    again = derive_order(alg.name, alg.elements, alg.bottom, alg.top, alg.imp,
                         None if alg.otimes_derived else alg.otimes)
    assert again == alg
