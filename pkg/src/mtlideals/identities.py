"""Catalog of derived identities and exhaustive verification.

Identities are tagged with the weakest class they are claimed for
(``RL`` residuated lattice, ``MTL``, ``LIA``); on a given algebra only
those whose class holds are asserted, the rest are evaluated for
information.  Indexed identities (arbitrary joins/meets) quantify over
an element x and a nonempty subset of the carrier.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Optional


@dataclass(frozen=True)
class Identity:
    id: str
    arity: int
    applies_to: str  # "RL" | "MTL" | "LIA"
    text: str
    holds: Callable
    indexed: bool = False
    # documented discrepancy: evaluated and reported, never required to pass
    required: bool = True


@dataclass
class CheckResult:
    id: str
    applies_to: str
    asserted: bool
    passed: bool
    witness: Optional[tuple] = None  # element names
    cases: int = 0

    @property
    def status(self) -> str:
        if not self.asserted:
            return "info-pass" if self.passed else "info-fail"
        return "pass" if self.passed else "FAIL"


@dataclass
class CheckReport:
    algebra: str
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results if r.asserted)

    @property
    def failures(self):
        return [r for r in self.results if r.asserted and not r.passed]


def _imp_le(p, q):
    return (not p) or q


def _catalog():
    C = []

    def ident(id, arity, cls, text, required=True, indexed=False):
        def deco(fn):
            C.append(Identity(id, arity, cls, text, fn, indexed=indexed, required=required))
            return fn
        return deco

    # lattice implication algebras: the product term is (x->y')'
    P = lambda A, x, y: A.lia_product(x, y)

    @ident("T2.2-1", 1, "LIA", "0->x=1, 1->x=x, x->1=1")
    def _(A, x):
        I = A.imp
        return I[A.bottom][x] == A.top and I[A.top][x] == x and I[x][A.top] == A.top

    @ident("T2.2-2", 1, "LIA", "x'=x->0")
    def _(A, x):
        return A.neg[x] == A.imp[x][A.bottom]

    @ident("T2.2-3", 3, "LIA", "x->y <= (y->z)->(x->z)")
    def _(A, x, y, z):
        I = A.imp
        return A.le(I[x][y], I[I[y][z]][I[x][z]])

    @ident("T2.2-4", 2, "LIA", "x v y = (x->y)->y")
    def _(A, x, y):
        return A.join[x][y] == A.imp[A.imp[x][y]][y]

    @ident("T2.2-5", 3, "LIA", "x<=y implies y->z <= x->z and z->x <= z->y")
    def _(A, x, y, z):
        I = A.imp
        return _imp_le(A.le(x, y), A.le(I[y][z], I[x][z]) and A.le(I[z][x], I[z][y]))

    @ident("T2.2-6", 3, "LIA", "x->(y v z) = (x->y) v (x->z)")
    def _(A, x, y, z):
        I = A.imp
        return I[x][A.join[y][z]] == A.join[I[x][y]][I[x][z]]

    @ident("T2.2-7", 3, "LIA", "x->(y ^ z) = (x->y) ^ (y->z)  [as printed; see T2.2-9]",
           required=False)
    def _(A, x, y, z):
        I = A.imp
        return I[x][A.meet[y][z]] == A.meet[I[x][y]][I[y][z]]

    @ident("T2.2-8", 2, "LIA", "(x->y) v (y->x) = 1")
    def _(A, x, y):
        return A.join[A.imp[x][y]][A.imp[y][x]] == A.top

    @ident("T2.2-9", 3, "LIA", "x->(y ^ z) = (x->y) ^ (x->z)")
    def _(A, x, y, z):
        I = A.imp
        return I[x][A.meet[y][z]] == A.meet[I[x][y]][I[x][z]]

    @ident("T2.2-10", 3, "LIA", "x->(y->z) = y->(x->z)")
    def _(A, x, y, z):
        I = A.imp
        return I[x][I[y][z]] == I[y][I[x][z]]

    @ident("T2.2-11", 2, "LIA", "((x->y)->y)->y = x->y")
    def _(A, x, y):
        I = A.imp
        return I[I[I[x][y]][y]][y] == I[x][y]

    @ident("T2.3-12", 2, "LIA", "x*y = y*x, x+y = y+x")
    def _(A, x, y):
        return P(A, x, y) == P(A, y, x) and A.oplus[x][y] == A.oplus[y][x]

    @ident("T2.3-13", 3, "LIA", "* and + associative")
    def _(A, x, y, z):
        S = A.oplus
        return (P(A, x, P(A, y, z)) == P(A, P(A, x, y), z)
                and S[x][S[y][z]] == S[S[x][y]][z])

    @ident("T2.3-14", 1, "LIA", "x*x' = 0, x+x' = 1")
    def _(A, x):
        return P(A, x, A.neg[x]) == A.bottom and A.oplus[x][A.neg[x]] == A.top

    @ident("T2.3-15", 2, "LIA", "x*(x->y) = x ^ y")
    def _(A, x, y):
        return P(A, x, A.imp[x][y]) == A.meet[x][y]

    @ident("T2.3-16", 3, "LIA", "x->(y->z) = (x*y)->z")
    def _(A, x, y, z):
        I = A.imp
        return I[x][I[y][z]] == I[P(A, x, y)][z]

    @ident("T2.3-17", 3, "LIA", "x <= y->z iff x*y <= z")
    def _(A, x, y, z):
        return A.le(x, A.imp[y][z]) == A.le(P(A, x, y), z)

    @ident("T2.3-18", 4, "LIA", "x<=a, y<=b imply x*y <= a*b and x+y <= a+b")
    def _(A, x, y, a, b):
        if not (A.le(x, a) and A.le(y, b)):
            return True
        return A.le(P(A, x, y), P(A, a, b)) and A.le(A.oplus[x][y], A.oplus[a][b])

    @ident("L3", 3, "LIA", "distributive lattice")
    def _(A, x, y, z):
        M, J = A.meet, A.join
        return J[x][M[y][z]] == M[J[x][y]][J[x][z]] and M[x][J[y][z]] == J[M[x][y]][M[x][z]]

    @ident("L4", 2, "LIA", "(x ^ y)' = x' v y', (x v y)' = x' ^ y'")
    def _(A, x, y):
        N = A.neg
        return (N[A.meet[x][y]] == A.join[N[x]][N[y]]
                and N[A.join[x][y]] == A.meet[N[x]][N[y]])

    # residuated lattices; * is the supplied product
    @ident("R1", 2, "RL", "x <= y iff x->y = 1")
    def _(A, x, y):
        return A.le(x, y) == (A.imp[x][y] == A.top)

    @ident("R2", 2, "RL", "x = 1->x, x->(y->x) = 1, y <= (y->x)->x")
    def _(A, x, y):
        I = A.imp
        return I[A.top][x] == x and I[x][I[y][x]] == A.top and A.le(y, I[I[y][x]][x])

    @ident("R3", 3, "RL", "x <= y->z iff y <= x->z")
    def _(A, x, y, z):
        return A.le(x, A.imp[y][z]) == A.le(y, A.imp[x][z])

    @ident("R4", 3, "RL", "x->(y->z) = (x*y)->z = y->(x->z)")
    def _(A, x, y, z):
        I = A.imp
        return I[x][I[y][z]] == I[A.otimes[x][y]][z] == I[y][I[x][z]]

    @ident("R5", 3, "RL", "x<=y implies z->x <= z->y and y->z <= x->z")
    def _(A, x, y, z):
        I = A.imp
        return _imp_le(A.le(x, y), A.le(I[z][x], I[z][y]) and A.le(I[y][z], I[x][z]))

    @ident("R6", 3, "RL", "z->y <= (x->z)->(x->y), z->y <= (y->x)->(z->x)")
    def _(A, x, y, z):
        I = A.imp
        return A.le(I[z][y], I[I[x][z]][I[x][y]]) and A.le(I[z][y], I[I[y][x]][I[z][x]])

    @ident("R7", 3, "RL", "(x->y)*(y->z) <= x->z")
    def _(A, x, y, z):
        I = A.imp
        return A.le(A.otimes[I[x][y]][I[y][z]], I[x][z])

    @ident("R8", 1, "RL", "x' = x''', x <= x''")
    def _(A, x):
        N = A.neg
        return N[x] == N[N[N[x]]] and A.le(x, N[N[x]])

    @ident("R9", 2, "RL", "x' ^ y' = (x v y)'")
    def _(A, x, y):
        N = A.neg
        return A.meet[N[x]][N[y]] == N[A.join[x][y]]

    @ident("R10", 1, "RL", "x v x' = 1 implies x ^ x' = 0")
    def _(A, x):
        N = A.neg
        return _imp_le(A.join[x][N[x]] == A.top, A.meet[x][N[x]] == A.bottom)

    @ident("R11", 1, "RL", "(V y_i)->x = ^ (y_i->x)", indexed=True)
    def _(A, x, ys):
        return A.imp[A.join_all(ys)][x] == A.meet_all(A.imp[y][x] for y in ys)

    @ident("R12", 1, "RL", "x*(V y_i) = V (x*y_i)", indexed=True)
    def _(A, x, ys):
        T = A.otimes
        return T[x][A.join_all(ys)] == A.join_all(T[x][y] for y in ys)

    @ident("R13", 1, "RL", "x->(^ y_i) = ^ (x->y_i)", indexed=True)
    def _(A, x, ys):
        return A.imp[x][A.meet_all(ys)] == A.meet_all(A.imp[x][y] for y in ys)

    @ident("R14", 1, "RL", "V (y_i->x) <= (^ y_i)->x", indexed=True)
    def _(A, x, ys):
        return A.le(A.join_all(A.imp[y][x] for y in ys), A.imp[A.meet_all(ys)][x])

    @ident("M1", 2, "MTL", "x*y <= x ^ y")
    def _(A, x, y):
        return A.le(A.otimes[x][y], A.meet[x][y])

    @ident("M2", 3, "MTL", "x<=y implies x*z <= y*z")
    def _(A, x, y, z):
        return _imp_le(A.le(x, y), A.le(A.otimes[x][z], A.otimes[y][z]))

    @ident("M3", 3, "MTL", "y->z <= (x v y)->(x v z)")
    def _(A, x, y, z):
        J = A.join
        return A.le(A.imp[y][z], A.imp[J[x][y]][J[x][z]])

    @ident("M4", 2, "MTL", "x' v y' = (x ^ y)'")
    def _(A, x, y):
        N = A.neg
        return A.join[N[x]][N[y]] == N[A.meet[x][y]]

    @ident("M5", 3, "MTL", "(x ^ y)->z = (x->z) v (y->z)")
    def _(A, x, y, z):
        I = A.imp
        return I[A.meet[x][y]][z] == A.join[I[x][z]][I[y][z]]

    @ident("M6", 2, "MTL", "x v y = ((x->y)->y) ^ ((y->x)->x)")
    def _(A, x, y):
        I = A.imp
        return A.join[x][y] == A.meet[I[I[x][y]][y]][I[I[y][x]][x]]

    @ident("M7", 3, "MTL", "x->(y v z) = (x->y) v (x->z)")
    def _(A, x, y, z):
        I = A.imp
        return I[x][A.join[y][z]] == A.join[I[x][y]][I[x][z]]

    @ident("M8", 3, "MTL", "distributive lattice")
    def _(A, x, y, z):
        M, J = A.meet, A.join
        return M[x][J[y][z]] == J[M[x][y]][M[x][z]] and J[x][M[y][z]] == M[J[x][y]][J[x][z]]

    return tuple(C)


CATALOG = _catalog()


def get_identity(id: str) -> Identity:
    for ident in CATALOG:
        if ident.id == id:
            return ident
    raise KeyError(id)


def index_sets(n: int, cap: Optional[int] = None):
    """Nonempty subsets used for indexed joins/meets.

    Default: the full power set when n <= 8, otherwise sizes 1 to 3.
    """
    if cap is None:
        cap = n if n <= 8 else 3
    for k in range(1, min(cap, n) + 1):
        yield from combinations(range(n), k)


def _applies(cls, klass) -> bool:
    return {"RL": klass.is_residuated_lattice, "MTL": klass.is_mtl, "LIA": klass.is_lia}[cls]


def check_identity(alg, ident: Identity, subset_cap: Optional[int] = None) -> CheckResult:
    n = alg.n
    cases = 0
    witness = None
    if ident.indexed:
        sets = list(index_sets(n, subset_cap))
        for x in range(n):
            for ys in sets:
                cases += 1
                if not ident.holds(alg, x, ys):
                    witness = (alg.elements[x], "{" + ", ".join(alg.names(ys)) + "}")
                    break
            if witness:
                break
    else:
        for t in product(range(n), repeat=ident.arity):
            cases += 1
            if not ident.holds(alg, *t):
                witness = alg.names(t)
                break
    asserted = ident.required and _applies(ident.applies_to, alg.klass)
    return CheckResult(ident.id, ident.applies_to, asserted, witness is None, witness, cases)


def verify_identities(alg, catalog=CATALOG, subset_cap: Optional[int] = None,
                      workers: int = 1) -> CheckReport:
    """Evaluate every identity exhaustively; results stay in catalog order."""
    alg.klass  # classify once before fanning out
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(lambda i: check_identity(alg, i, subset_cap), catalog))
    else:
        results = [check_identity(alg, i, subset_cap) for i in catalog]
    return CheckReport(alg.name, results)
