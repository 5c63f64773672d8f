"""Machine-checked theorem suites.

A suite evaluates the clauses of one equivalence/implication theorem on
every enumerated ideal (or every subset) and records the instances where
the stated pattern breaks.  Clauses are evaluated from the raw closure
rules, never through the cross-checking predicates, so a broken theorem
shows up as a counterexample instead of an exception.

Each suite has an expected polarity: ``holds`` (no counterexample may
exist), ``counterexample`` (at least one must exist) or ``explore``
(reported only).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from . import ideals as I
from .errors import SuiteNotApplicable
from .explorer import enumerate_li_ideals
from .subsets import ElementSubset, all_subsets


@dataclass
class Instance:
    subset: ElementSubset
    clauses: dict
    ok: bool


@dataclass
class TheoremSuiteResult:
    suite_id: str
    description: str
    polarity: str
    instances: list = field(default_factory=list)

    @property
    def counterexamples(self):
        return [i for i in self.instances if not i.ok]

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    @property
    def meets_expectation(self) -> bool:
        if self.polarity == "holds":
            return self.holds
        if self.polarity == "counterexample":
            return not self.holds
        return True


class _Ctx:
    """Per-algebra cache of ideals and clause values."""

    def __init__(self, alg):
        self.alg = alg

    @cached_property
    def ideals(self):
        return enumerate_li_ideals(self.alg).ideals

    @cached_property
    def maximal(self):
        return [A for A in self.ideals if I.is_maximal(self.alg, A, self.ideals)]

    def c(self, A, *rules):
        return bool(I.condition(self.alg, A, *rules))

    def li(self, A):
        return self.c(A, "LI1", "LI8")

    def prime(self, A):
        return not A.is_full and self.c(A, "PRIME")

    def is_max(self, A):
        return A in self.maximal

    def ili(self, A):
        return self.c(A, "LI10")


def _all_equal(clauses):
    return len(set(clauses.values())) == 1


def _implies(p, q):
    return (not p) or q


# Each suite: (id, requires, scope, description, evaluator(ctx, A) -> (clauses, ok))
# scope: "ideals", "proper-ideals", "nonempty-subsets", "subsets"

def _t25(x, A):
    cl = {"LI3": x.c(A, "LI3"), "LI4": x.c(A, "LI4")}
    return cl, all(cl.values())


def _t27(x, A):
    cl = {"LI-ideal": x.li(A), "LI3+LI5": x.c(A, "LI3", "LI5")}
    return cl, _all_equal(cl)


def _t211(x, A):
    cl = {
        "(i) ILI": x.c(A, "LI1", "LI7"),
        "(ii)": x.c(A, "T2.11-ii"),
        "(iii)": x.c(A, "T2.11-iii"),
        "(iv)": x.c(A, "LI10"),
    }
    return cl, _all_equal(cl)


def _t213(x, A):
    cl = {"(i) prime": x.c(A, "PRIME"), "(ii) meet=0": x.c(A, "PRIME-0")}
    return cl, _all_equal(cl)


def _t214(x, A):
    cl = {"maximal": x.is_max(A), "prime": x.prime(A)}
    return cl, _implies(cl["maximal"], cl["prime"])


def _t215(x, A):
    cl = {"prime+ILI": x.prime(A) and x.ili(A), "x or x'": x.c(A, "DICHOTOMY")}
    return cl, _all_equal(cl)


def _t216(x, A):
    cl = {"maximal+ILI": x.is_max(A) and x.ili(A), "LI13": x.c(A, "LI13")}
    return cl, _all_equal(cl)


def _t32(x, A):
    proper = not A.is_full
    cl = {
        "(i) ultra": x.c(A, "LI6"),
        "(ii) prime proper ILI": x.prime(A) and x.ili(A),
        "(iii) proper, x or x'": proper and x.c(A, "DICHOTOMY"),
        "(iv) maximal ILI": x.is_max(A) and x.ili(A),
        "(v) proper LI13": proper and x.c(A, "LI13"),
    }
    return cl, _all_equal(cl)


def _t33(x, A):
    alg = x.alg
    fap = I.has_finite_additive_property(alg, A, cross_check=False)
    gen_proper = not I.generated_ideal(alg, A, cross_check=False).is_full
    extends = any(A.issubset(M) for M in x.maximal)
    cl = {"finite additive": fap, "<A> proper": gen_proper, "in a maximal ideal": extends}
    ok = fap == gen_proper and _implies(fap, extends)
    if x.li(A) and not A.is_full:
        ok = ok and extends
    return cl, ok


def _t44(x, A):
    cl = {k: x.c(A, k) for k in ("LI3", "LI9", "LI4")}
    return cl, all(cl.values())


def _t47(x, A):
    cl = {"ILI": x.ili(A), "LI11": x.c(A, "LI11")}
    return cl, _implies(cl["ILI"], cl["LI11"])


def _t49(x, A):
    cl = {"LI11": x.c(A, "LI11"), "LI12": x.c(A, "LI12")}
    return cl, _implies(cl["LI11"], cl["LI12"])


def _t410(x, A):
    cl = {"LI10": x.c(A, "LI10"), "LI11": x.c(A, "LI11")}
    return cl, _all_equal(cl)


def _t412(x, A):
    cl = {"prime": x.c(A, "PRIME"), "(x->y)' or (y->x)'": x.c(A, "PRIME-MTL")}
    return cl, _all_equal(cl)


def _t413(x, A):
    cl = {"prime+Boolean": x.prime(A) and x.c(A, "LI11"), "x or x'": x.c(A, "DICHOTOMY")}
    return cl, _all_equal(cl)


def _t417(x, A):
    proper = not A.is_full
    cl = {
        "(i) ultra": x.c(A, "LI6"),
        "(ii) proper, x or x'": proper and x.c(A, "DICHOTOMY"),
        "(iii) prime proper Boolean": x.prime(A) and x.c(A, "LI11"),
        "(iv) prime proper ILI": x.prime(A) and x.ili(A),
        "(v) proper obstinate": proper and x.c(A, "LI13"),
    }
    return cl, _all_equal(cl)


def _p415(x, A):
    cl = {"ultra": x.c(A, "LI6"), "proper": not A.is_full}
    return cl, _implies(cl["ultra"], cl["proper"])


def _l42(x, A):
    D = I.dual(x.alg, A)
    cl = {"filter": x.c(A, "F0", "F1", "F2"), "dual is LI-ideal": x.li(D)}
    return cl, _all_equal(cl)


def _max_ultra_claim(x, A):
    cl = {"ultra": x.c(A, "LI6"), "maximal": x.is_max(A)}
    return cl, _all_equal(cl)


SUITES = {
    s[0]: s
    for s in [
        ("T2.5", "lia", "ideals", "LI-ideals are down-sets closed under joins", _t25),
        ("T2.7", "lia", "nonempty-subsets", "LI-ideal iff LI3 and LI5", _t27),
        ("T2.11", "lia", "ideals", "ILI-ideal characterisations agree", _t211),
        ("T2.13", "lia", "proper-ideals", "prime iff meet-zero criterion", _t213),
        ("T2.14", "lia", "ideals", "maximal ideals are prime", _t214),
        ("T2.15", "lia", "proper-ideals", "prime and ILI iff x or x' in A", _t215),
        ("T2.16", "lia", "proper-ideals", "maximal and ILI iff obstinate", _t216),
        ("T3.2", "lia", "ideals", "five characterisations of ultra ideals agree", _t32),
        ("T3.3", "lia", "nonempty-subsets", "finite additive sets extend to maximal ideals", _t33),
        ("T4.4", "mtl", "ideals", "LI-ideals satisfy LI3, LI9, LI4", _t44),
        ("T4.7", "mtl", "ideals", "ILI-ideals are Boolean", _t47),
        ("T4.9", "mtl", "ideals", "Boolean ideals satisfy LI12", _t49),
        ("T4.10", "mtl", "ideals", "LI10 iff LI11", _t410),
        ("T4.12", "mtl", "proper-ideals", "prime iff (x->y)' or (y->x)' in A", _t412),
        ("T4.13", "mtl", "proper-ideals", "prime and Boolean iff x or x' in A", _t413),
        ("T4.17", "mtl", "ideals", "five characterisations of ultra ideals agree", _t417),
        ("P4.15", "mtl", "ideals", "ultra ideals are proper", _p415),
        ("L4.2", "mtl", "subsets", "F filter iff F' is an LI-ideal", _l42),
        ("MaxUltraClaim", "lia", "ideals", "ultra iff maximal proper (refuted claim)", _max_ultra_claim),
    ]
}

# suites that state theorems; all must hold wherever applicable
THEOREM_SUITES = ("T2.5", "T2.7", "T2.11", "T2.13", "T2.14", "T2.15", "T2.16", "T3.2",
                  "T3.3", "T4.4", "T4.7", "T4.9", "T4.10", "T4.12", "T4.13", "T4.17", "P4.15")


def is_applicable(alg, suite_id) -> bool:
    req = SUITES[suite_id][1]
    return alg.klass.is_lia if req == "lia" else alg.klass.is_mtl


def applicable_suites(alg):
    return [s for s in SUITES if is_applicable(alg, s)]


def default_polarity(alg, suite_id) -> str:
    if suite_id == "MaxUltraClaim":
        return "explore"
    if suite_id == "L4.2":
        if alg.klass.is_lia:
            return "holds"
        # a finite MTL-algebra whose negation is not involutive has a
        # non-surjective negation, so the dual of the whole carrier contains 1
        # but not every element and cannot be an ideal
        return "explore" if alg.klass.is_imtl else "counterexample"
    return "holds"


def _scope(ctx, scope):
    n = ctx.alg.n
    if scope == "ideals":
        return ctx.ideals
    if scope == "proper-ideals":
        return [A for A in ctx.ideals if not A.is_full]
    if scope == "subsets":
        return list(all_subsets(n))
    return [A for A in all_subsets(n) if A.mask]


def run_theorem_suite(alg, suite_id: str, polarity: str | None = None, _ctx=None) -> TheoremSuiteResult:
    if suite_id not in SUITES:
        raise KeyError(f"unknown suite {suite_id!r}; known: {', '.join(SUITES)}")
    sid, req, scope, desc, fn = SUITES[suite_id]
    if not is_applicable(alg, suite_id):
        raise SuiteNotApplicable(
            f"suite {sid} needs {'a lattice implication algebra' if req == 'lia' else 'an MTL-algebra'}; "
            f"{alg.name} is {alg.klass.label}")
    ctx = _ctx or _Ctx(alg)
    result = TheoremSuiteResult(sid, desc, polarity or default_polarity(alg, sid))
    for A in _scope(ctx, scope):
        clauses, ok = fn(ctx, A)
        result.instances.append(Instance(A, clauses, ok))
    return result


def run_all_suites(alg, suite_ids=None, expect_counterexample=frozenset()):
    """Run the given (default: all applicable) suites sharing one ideal cache."""
    ctx = _Ctx(alg)
    ids = suite_ids or applicable_suites(alg)
    out = []
    for sid in ids:
        pol = "counterexample" if sid in expect_counterexample else None
        out.append(run_theorem_suite(alg, sid, polarity=pol, _ctx=ctx))
    return out
