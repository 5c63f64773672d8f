"""Ideal and filter predicates, duality and generated ideals.

Every closure rule is written once as a generator of violations in
lexicographic order of the element-index tuple, so a predicate's witness is
always the first violation and :func:`counterexamples` can list all of them.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .errors import CrossCheckError, NotApplicable
from .subsets import ElementSubset, check_carrier


@dataclass(frozen=True)
class Verdict:
    ok: bool
    rule: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok


PASS = Verdict(True)


def _pairs(n):
    return product(range(n), repeat=2)


def _triples(n):
    return product(range(n), repeat=3)


# --- closure rules -----------------------------------------------------------
# Each takes (alg, A) and yields violating index tuples.

def _li1(alg, A):
    if alg.bottom not in A:
        yield (alg.bottom,)


def _li8(alg, A):
    I, N = alg.imp, alg.neg
    for x, y in _pairs(alg.n):
        if x in A and y not in A and N[I[N[x]][N[y]]] in A:
            yield (x, y)


def _li2(alg, A):
    I, N = alg.imp, alg.neg
    for x, y in _pairs(alg.n):
        if y in A and x not in A and N[I[x][y]] in A:
            yield (x, y)


def _li3(alg, A):
    for x, y in _pairs(alg.n):
        if x in A and y not in A and alg.leq[y][x]:
            yield (x, y)


def _li4(alg, A):
    for x, y in _pairs(alg.n):
        if x in A and y in A and alg.join[x][y] not in A:
            yield (x, y)


def _li5(alg, A):
    for x, y in _pairs(alg.n):
        if x in A and y in A and alg.oplus[x][y] not in A:
            yield (x, y)


def _li6(alg, A):
    for x in range(alg.n):
        if (x in A) == (alg.neg[x] in A):
            yield (x,)


def _li7(alg, A):
    I, N = alg.imp, alg.neg
    for x, y, z in _triples(alg.n):
        u = N[I[x][y]]
        if z in A and u not in A and N[I[N[I[u][y]]][z]] in A:
            yield (x, y, z)


def _t211_ii(alg, A):
    I, N = alg.imp, alg.neg
    for x, y in _pairs(alg.n):
        u = N[I[x][y]]
        if u not in A and N[I[u][y]] in A:
            yield (x, y)


def _t211_iii(alg, A):
    I, N = alg.imp, alg.neg
    for x, y, z in _triples(alg.n):
        if N[I[N[I[x][y]]][z]] in A and N[I[N[I[x][z]]][N[I[y][z]]]] not in A:
            yield (x, y, z)


def _li9(alg, A):
    N = alg.neg
    for x in range(alg.n):
        if x in A and N[N[x]] not in A:
            yield (x,)


def _li10(alg, A):
    I, N = alg.imp, alg.neg
    for x, y in _pairs(alg.n):
        if x not in A and N[I[x][N[I[y][x]]]] in A:
            yield (x, y)


def _li11(alg, A):
    for x in range(alg.n):
        if alg.meet[x][alg.neg[x]] not in A:
            yield (x,)


def _li12(alg, A):
    I, N = alg.imp, alg.neg
    for x in range(alg.n):
        if x not in A and N[I[x][N[x]]] in A:
            yield (x,)


def _li13(alg, A):
    I, N = alg.imp, alg.neg
    for x, y in _pairs(alg.n):
        if x not in A and y not in A and not (N[I[x][y]] in A and N[I[y][x]] in A):
            yield (x, y)


def _prime(alg, A):
    for x, y in _pairs(alg.n):
        if x not in A and y not in A and alg.meet[x][y] in A:
            yield (x, y)


def _prime_zero(alg, A):
    for x, y in _pairs(alg.n):
        if x not in A and y not in A and alg.meet[x][y] == alg.bottom:
            yield (x, y)


def _prime_mtl(alg, A):
    I, N = alg.imp, alg.neg
    for x, y in _pairs(alg.n):
        if N[I[x][y]] not in A and N[I[y][x]] not in A:
            yield (x, y)


def _dichotomy(alg, A):
    for x in range(alg.n):
        if x not in A and alg.neg[x] not in A:
            yield (x,)


def _proper(alg, A):
    if A.is_full:
        yield ()


def _f0(alg, A):
    if A.mask == 0:
        yield ()


def _f1(alg, A):
    for x, y in _pairs(alg.n):
        if x in A and y in A and alg.otimes[x][y] not in A:
            yield (x, y)


def _f2(alg, A):
    for x, y in _pairs(alg.n):
        if x in A and y not in A and alg.leq[x][y]:
            yield (x, y)


def _f3(alg, A):
    if alg.top not in A:
        yield (alg.top,)


def _f4(alg, A):
    for x, y in _pairs(alg.n):
        if x in A and y not in A and alg.imp[x][y] in A:
            yield (x, y)


RULES = {
    "LI1": _li1, "LI2": _li2, "LI3": _li3, "LI4": _li4, "LI5": _li5,
    "LI6": _li6, "LI7": _li7, "LI8": _li8, "LI9": _li9, "LI10": _li10,
    "LI11": _li11, "LI12": _li12, "LI13": _li13,
    "T2.11-ii": _t211_ii, "T2.11-iii": _t211_iii,
    "PRIME": _prime, "PRIME-0": _prime_zero, "PRIME-MTL": _prime_mtl,
    "DICHOTOMY": _dichotomy, "PROPER": _proper,
    "F0": _f0, "F1": _f1, "F2": _f2, "F3": _f3, "F4": _f4,
}


def counterexamples(alg, A: ElementSubset, rule: str):
    """All violations of one rule, in lexicographic witness order."""
    check_carrier(alg, A)
    return list(RULES[rule](alg, A))


def condition(alg, A: ElementSubset, *rules: str) -> Verdict:
    """Conjunction of raw rules; witness is the first violation of the first failing rule."""
    check_carrier(alg, A)
    for rule in rules:
        for w in RULES[rule](alg, A):
            return Verdict(False, rule, w)
    return PASS


def _require(alg, what):
    k = alg.klass
    ok = {"rl": k.is_residuated_lattice, "mtl": k.is_mtl, "lia": k.is_lia}[what]
    if not ok:
        raise NotApplicable(f"{alg.name} is not {dict(rl='a residuated lattice', mtl='an MTL-algebra', lia='a lattice implication algebra')[what]}")


def _agree(label, *verdicts):
    if len({bool(v) for v in verdicts}) > 1:
        raise CrossCheckError(f"{label}: equivalent formulations disagree: {verdicts}")


# --- predicates --------------------------------------------------------------

def is_li_ideal(alg, A: ElementSubset, cross_check: bool = True) -> Verdict:
    """0 in A and A closed under the LI8 rule.

    On lattice implication algebras the LI2 formulation is evaluated too and
    must give the same verdict.
    """
    check_carrier(alg, A)
    _require(alg, "rl")
    v = condition(alg, A, "LI1", "LI8")
    if cross_check and alg.klass.is_lia:
        _agree("LI8/LI2", v, condition(alg, A, "LI1", "LI2"))
    return v


def _as_ideal(alg, A):
    v = is_li_ideal(alg, A)
    if not v:
        return Verdict(False, "NotLI", v.witness)
    return None


def is_li7_ideal(alg, A: ElementSubset) -> Verdict:
    """Raw LI1 + LI7 test, meaningful on lattice implication algebras."""
    return condition(alg, A, "LI1", "LI7")


def is_ili_ideal(alg, A: ElementSubset, cross_check: bool = True) -> Verdict:
    not_li = _as_ideal(alg, A)
    if not_li is not None:
        return not_li
    v = condition(alg, A, "LI10")
    if cross_check and alg.klass.is_lia:
        _agree("ILI", v, is_li7_ideal(alg, A),
               condition(alg, A, "T2.11-ii"), condition(alg, A, "T2.11-iii"))
    return v


def is_proper(alg, A: ElementSubset) -> Verdict:
    return condition(alg, A, "PROPER")


def is_prime(alg, A: ElementSubset, cross_check: bool = True) -> Verdict:
    not_li = _as_ideal(alg, A)
    if not_li is not None:
        return not_li
    v = condition(alg, A, "PROPER", "PRIME")
    if cross_check and not A.is_full:
        if alg.klass.is_lia:
            _agree("prime/meet-zero", v, condition(alg, A, "PRIME-0"))
        if alg.klass.is_mtl:
            _agree("prime/implication", v, condition(alg, A, "PRIME-MTL"))
    return v


def is_ultra(alg, A: ElementSubset) -> Verdict:
    not_li = _as_ideal(alg, A)
    if not_li is not None:
        return not_li
    v = condition(alg, A, "LI6")
    if v and A.is_full:
        raise CrossCheckError("ultra ideal equals the whole carrier")
    return v


def is_boolean(alg, A: ElementSubset) -> Verdict:
    not_li = _as_ideal(alg, A)
    return not_li if not_li is not None else condition(alg, A, "LI11")


def is_obstinate(alg, A: ElementSubset) -> Verdict:
    not_li = _as_ideal(alg, A)
    return not_li if not_li is not None else condition(alg, A, "LI13")


def is_maximal(alg, A: ElementSubset, all_ideals) -> Verdict:
    """Proper ideal not strictly inside another proper ideal of ``all_ideals``.

    ``all_ideals`` must be the complete ideal list; it is not recomputed.
    """
    check_carrier(alg, A)
    if A not in all_ideals:
        return Verdict(False, "NotLI", None)
    if A.is_full:
        return Verdict(False, "PROPER", ())
    for B in all_ideals:
        if not B.is_full and B != A and A.issubset(B):
            return Verdict(False, "MAXIMAL", tuple(B))
    return PASS


def is_filter(alg, F: ElementSubset, cross_check: bool = True) -> Verdict:
    """Nonempty, product-closed, upward closed.

    On MTL-algebras the 1 in F / modus ponens formulation must agree.
    """
    v = condition(alg, F, "F0", "F1", "F2")
    if cross_check and alg.klass.is_mtl:
        _agree("filter/F3F4", v, condition(alg, F, "F3", "F4"))
    return v


def dual(alg, A: ElementSubset) -> ElementSubset:
    check_carrier(alg, A)
    return ElementSubset.of(alg.n, (alg.neg[a] for a in A))


# --- generated ideals ----------------------------------------------------------

def _closure(alg, start: int) -> int:
    """Least superset of ``start`` closed under LI8, as a bitmask fixpoint."""
    I, N, n = alg.imp, alg.neg, alg.n
    S = start | (1 << alg.bottom)
    changed = True
    while changed:
        changed = False
        for x in range(n):
            if not (S >> x) & 1:
                continue
            for y in range(n):
                if not (S >> y) & 1 and (S >> N[I[N[x]][N[y]]]) & 1:
                    S |= 1 << y
                    changed = True
    return S


def generated_ideal(alg, A: ElementSubset, cross_check: bool = True) -> ElementSubset:
    """Least LI-ideal containing A.

    On lattice implication algebras the result is compared with the
    nested-implication and finite-sum descriptions.
    """
    check_carrier(alg, A)
    _require(alg, "rl")
    G = ElementSubset(alg.n, _closure(alg, A.mask))
    if cross_check and alg.klass.is_lia and A.mask:
        t26 = generated_ideal_formula_t26(alg, A)
        t28 = generated_ideal_formula_t28(alg, A)
        if not (G == t26 == t28):
            raise CrossCheckError(f"generated ideal disagreement: {G} {t26} {t28}")
    return G


def _nonempty_lia(alg, A):
    check_carrier(alg, A)
    _require(alg, "lia")
    if not A.mask:
        raise ValueError("generator set must be nonempty")


def generated_ideal_formula_t26(alg, A: ElementSubset, naive_depth: Optional[int] = None) -> ElementSubset:
    """x such that a_n' -> (... -> (a_1' -> x')...) = 1 for some a_i in A.

    The nested value is propagated as a reachable set of values under the
    maps v -> a' -> v, which is exact for sequences of any length. With
    ``naive_depth`` all sequences up to that length are tried instead.
    """
    _nonempty_lia(alg, A)
    I, N, one = alg.imp, alg.neg, alg.top
    gens = [N[a] for a in A]
    members = []
    for x in range(alg.n):
        if naive_depth is None:
            frontier = {I[g][N[x]] for g in gens}
            seen = set(frontier)
            while frontier:
                frontier = {I[g][v] for g in gens for v in frontier} - seen
                seen |= frontier
            hit = one in seen
        else:
            hit = False
            for length in range(1, naive_depth + 1):
                for seq in product(gens, repeat=length):
                    v = N[x]
                    for g in seq:
                        v = I[g][v]
                    if v == one:
                        hit = True
                        break
                if hit:
                    break
        if hit:
            members.append(x)
    return ElementSubset.of(alg.n, members)


def oplus_closure(alg, A: ElementSubset) -> set:
    """All finite sums a_1 (+) ... (+) a_n with n >= 1 and a_i in A."""
    P = alg.oplus
    gens = list(A)
    sums = set(gens)
    frontier = set(gens)
    while frontier:
        frontier = {P[s][a] for s in frontier for a in gens} - sums
        sums |= frontier
    return sums


def generated_ideal_formula_t28(alg, A: ElementSubset) -> ElementSubset:
    """x below some finite sum of members of A."""
    _nonempty_lia(alg, A)
    sums = oplus_closure(alg, A)
    return ElementSubset.of(alg.n, (x for x in range(alg.n) if any(alg.leq[x][s] for s in sums)))


def has_finite_additive_property(alg, A: ElementSubset, cross_check: bool = True) -> bool:
    check_carrier(alg, A)
    _require(alg, "lia")
    fap = alg.top not in oplus_closure(alg, A)
    if cross_check and A.mask:
        proper = not generated_ideal(alg, A, cross_check=False).is_full
        _agree("finite additive property/proper generated ideal", fap, proper)
    return fap
