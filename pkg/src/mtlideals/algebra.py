"""Finite algebras given by operation tables.

An algebra is supplied as an implication table (and usually a product
table).  Everything else (order, meet, join, negation, the additive
operation) is derived from those tables, so there is one source of truth.
Elements are referred to by index internally; names only appear at the
edges (parsing, reports).
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Sequence

from .errors import AlgebraError, MissingProduct, NotALattice, NotAPartialOrder

Table = tuple  # tuple[tuple[int, ...], ...]


def _freeze(rows) -> Table:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class FiniteAlgebra:
    """Immutable finite algebra with all derived tables filled in.

    Build instances with :func:`derive_order`; the constructor itself does
    no validation.
    """

    name: str
    elements: tuple
    bottom: int
    top: int
    imp: Table
    otimes: Table
    leq: tuple
    meet: Table
    join: Table
    neg: tuple
    oplus: Table
    otimes_derived: bool = field(default=False)

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise KeyError(f"unknown element {name!r} in algebra {self.name}") from None

    def names(self, indices) -> tuple:
        return tuple(self.elements[i] for i in indices)

    @cached_property
    def klass(self) -> "AlgebraClass":
        return classify(self)

    # small evaluation helpers used by identity and ideal code
    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def lia_product(self, x: int, y: int) -> int:
        """(x -> y')', the product term of a lattice implication algebra."""
        return self.neg[self.imp[x][self.neg[y]]]

    def meet_all(self, xs) -> int:
        acc = self.top
        for x in xs:
            acc = self.meet[acc][x]
        return acc

    def join_all(self, xs) -> int:
        acc = self.bottom
        for x in xs:
            acc = self.join[acc][x]
        return acc


@dataclass
class AlgebraClass:
    is_lattice: bool = True
    is_residuated_lattice: bool = False
    is_mtl: bool = False
    is_imtl: bool = False
    is_lia: bool = False
    failures: list = field(default_factory=list)  # (axiom id, witness names)

    @property
    def label(self) -> str:
        if self.is_lia:
            return "lattice implication algebra"
        if self.is_imtl:
            return "IMTL-algebra (not LIA)"
        if self.is_mtl:
            return "MTL-algebra (not LIA)"
        if self.is_residuated_lattice:
            return "residuated lattice (not MTL)"
        return "lattice (not residuated)"

    def failure(self, axiom: str):
        for a, w in self.failures:
            if a == axiom:
                return w
        return None


def _check_table(rows, n, what):
    if len(rows) != n or any(len(r) != n for r in rows):
        raise AlgebraError(f"{what} table must be {n}x{n}")
    for x, row in enumerate(rows):
        for y, v in enumerate(row):
            if not (isinstance(v, int) and 0 <= v < n):
                raise AlgebraError(f"{what}[{x}][{y}] = {v!r} is not an element index", (x, y))


def _bound(leq, n, x, y, lower):
    """Unique glb (lower=True) or lub of x, y under leq, or None."""
    if lower:
        cands = [z for z in range(n) if leq[z][x] and leq[z][y]]
        best = [z for z in cands if all(leq[w][z] for w in cands)]
    else:
        cands = [z for z in range(n) if leq[x][z] and leq[y][z]]
        best = [z for z in cands if all(leq[z][w] for w in cands)]
    return best[0] if len(best) == 1 else None


def derive_order(
    name: str,
    elements: Sequence[str],
    bottom: int,
    top: int,
    imp,
    otimes=None,
) -> FiniteAlgebra:
    """Validate the tables and derive order, lattice and negation structure.

    The order is read off the implication: x <= y iff x -> y = top.  When
    ``otimes`` is omitted it is derived as (x -> y')', which is only valid
    for lattice implication algebras; if the LIA axioms then fail,
    :class:`MissingProduct` is raised.
    """
    elements = tuple(str(e) for e in elements)
    n = len(elements)
    if n < 1:
        raise AlgebraError("carrier must be nonempty")
    if len(set(elements)) != n:
        raise AlgebraError("element names must be distinct")
    for what, v in (("bottom", bottom), ("top", top)):
        if not (isinstance(v, int) and 0 <= v < n):
            raise AlgebraError(f"{what} {v!r} is not an element index")
    imp = _freeze(imp)
    _check_table(imp, n, "imp")
    if otimes is not None:
        otimes = _freeze(otimes)
        _check_table(otimes, n, "otimes")

    leq = tuple(tuple(imp[x][y] == top for y in range(n)) for x in range(n))
    for x in range(n):
        if not leq[x][x]:
            raise NotAPartialOrder(f"not reflexive at {elements[x]}", (x,))
    for x, y in product(range(n), repeat=2):
        if x != y and leq[x][y] and leq[y][x]:
            raise NotAPartialOrder(
                f"not antisymmetric at ({elements[x]}, {elements[y]})", (x, y))
    for x, y, z in product(range(n), repeat=3):
        if leq[x][y] and leq[y][z] and not leq[x][z]:
            raise NotAPartialOrder(
                f"not transitive at ({elements[x]}, {elements[y]}, {elements[z]})", (x, y, z))
    for x in range(n):
        if not leq[bottom][x]:
            raise NotALattice(f"bottom {elements[bottom]} is not below {elements[x]}", (x,))
        if not leq[x][top]:
            raise NotALattice(f"top {elements[top]} is not above {elements[x]}", (x,))

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for x, y in product(range(n), repeat=2):
        m = _bound(leq, n, x, y, lower=True)
        j = _bound(leq, n, x, y, lower=False)
        if m is None or j is None:
            kind = "greatest lower" if m is None else "least upper"
            raise NotALattice(f"no unique {kind} bound for ({elements[x]}, {elements[y]})", (x, y))
        meet[x][y], join[x][y] = m, j

    neg = tuple(imp[x][bottom] for x in range(n))
    oplus = tuple(tuple(imp[neg[x]][y] for y in range(n)) for x in range(n))
    alg = FiniteAlgebra(
        name=name, elements=elements, bottom=bottom, top=top, imp=imp,
        otimes=otimes, leq=leq, meet=_freeze(meet), join=_freeze(join),
        neg=neg, oplus=oplus,
    )
    if otimes is None:
        bad = lia_axiom_failures(alg, first_only=True)
        if bad:
            axiom, wit = bad[0]
            raise MissingProduct(
                f"no product table and {axiom} fails at {alg.names(wit)}, "
                "so (x->y')' cannot be used", wit)
        derived = _freeze([[alg.lia_product(x, y) for y in range(n)] for x in range(n)])
        alg = dataclasses.replace(alg, otimes=derived, otimes_derived=True)
    return alg


def _first(n, arity, pred):
    for t in product(range(n), repeat=arity):
        if not pred(*t):
            return t
    return None


def lia_axiom_failures(alg: FiniteAlgebra, first_only: bool = False) -> list:
    """Lattice implication algebra axioms (on ' = x->0), as (id, witness) pairs."""
    I, N, J, M, le = alg.imp, alg.neg, alg.join, alg.meet, alg.le
    one = alg.top
    checks = [
        ("NEG-involution", 1, lambda x: N[N[x]] == x),
        ("NEG-antitone", 2, lambda x, y: not le(x, y) or le(N[y], N[x])),
        ("I1", 3, lambda x, y, z: I[x][I[y][z]] == I[y][I[x][z]]),
        ("I2", 1, lambda x: I[x][x] == one),
        ("I3", 2, lambda x, y: I[x][y] == I[N[y]][N[x]]),
        ("I4", 2, lambda x, y: not (I[x][y] == one and I[y][x] == one) or x == y),
        ("I5", 2, lambda x, y: I[I[x][y]][y] == I[I[y][x]][x]),
        ("L1", 3, lambda x, y, z: I[J[x][y]][z] == M[I[x][z]][I[y][z]]),
        ("L2", 3, lambda x, y, z: I[M[x][y]][z] == J[I[x][z]][I[y][z]]),
    ]
    out = []
    for axiom, arity, pred in checks:
        w = _first(alg.n, arity, pred)
        if w is not None:
            out.append((axiom, w))
            if first_only:
                break
    return out


def classify(alg: FiniteAlgebra) -> AlgebraClass:
    """Check the axiom packages by exhaustive quantification.

    Each failing axiom is recorded with its lexicographically first witness.
    A class whose prerequisite fails gets a ``requires:`` failure entry, so
    every false flag carries at least one record.
    """
    n, I, T, J, le = alg.n, alg.imp, alg.otimes, alg.join, alg.le
    one, zero = alg.top, alg.bottom
    cls = AlgebraClass()
    fail = []

    def run(checks):
        ok = True
        for axiom, arity, pred in checks:
            w = _first(n, arity, pred)
            if w is not None:
                fail.append((axiom, alg.names(w)))
                ok = False
        return ok

    rl = run([
        ("RL-comm", 2, lambda x, y: T[x][y] == T[y][x]),
        ("RL-assoc", 3, lambda x, y, z: T[x][T[y][z]] == T[T[x][y]][z]),
        ("RL-unit", 1, lambda x: T[one][x] == x and T[x][one] == x),
        ("RL-adj", 3, lambda x, y, z: le(z, I[x][y]) == le(T[z][x], y)),
    ])
    cls.is_residuated_lattice = rl

    prelin = run([("MTL-prelin", 2, lambda x, y: J[I[x][y]][I[y][x]] == one)])
    cls.is_mtl = rl and prelin
    if not rl:
        fail.append(("requires:residuated-lattice", ()))

    inv = run([("IMTL-inv", 1, lambda x: I[I[x][zero]][zero] == x)])
    cls.is_imtl = cls.is_mtl and inv
    if not cls.is_mtl:
        fail.append(("requires:MTL", ()))

    lia_ok = True
    for axiom, w in lia_axiom_failures(alg):
        fail.append((axiom, alg.names(w)))
        lia_ok = False
    if not alg.otimes_derived:
        lia_ok &= run([("LIA-product", 2, lambda x, y: T[x][y] == alg.lia_product(x, y))])
    cls.is_lia = cls.is_imtl and lia_ok
    if not cls.is_imtl:
        fail.append(("requires:IMTL", ()))

    cls.failures = fail
    return cls
