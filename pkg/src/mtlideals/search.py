"""Exhaustive search of MTL-chains, i.e. finite t-norms with their residua.

On a chain 0 < e_1 < ... < 1 the product is fixed by its values on the
interior elements.  Tables are generated in lexicographic (row-major)
order by backtracking over the upper triangle with monotonicity pruning;
associativity is checked on complete tables.  The implication is the
residuum x -> y = max{z : z * x <= y}, which always exists on a finite
chain, and prelinearity holds automatically.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product
from typing import Optional

from . import ideals as I
from .algebra import derive_order
from .errors import UnsupportedShape
from .explorer import enumerate_filters, enumerate_li_ideals
from .subsets import ElementSubset

MIN_ORDER, MAX_ORDER = 2, 6


def chain_names(k: int):
    if k == 1:
        return ["0"]
    return ["0"] + [chr(ord("a") + i) for i in range(k - 2)] + ["1"]


@dataclass
class ModelSearchSpec:
    order: int
    target: str = "any"
    shape: str = "chain"
    max_models: Optional[int] = None
    time_budget: Optional[float] = None  # seconds

    def __post_init__(self):
        if self.shape != "chain":
            raise UnsupportedShape(f"lattice shape {self.shape!r} is not supported (chains only)")
        if not MIN_ORDER <= self.order <= MAX_ORDER:
            raise ValueError(f"order must be in {MIN_ORDER}..{MAX_ORDER}, got {self.order}")
        if self.target not in TARGETS:
            raise ValueError(f"unknown target {self.target!r}; known: {', '.join(TARGETS)}")


def tnorm_tables(k: int):
    """All commutative, associative, monotone tables with unit k-1 on the chain 0..k-1."""
    top = k - 1
    inner = list(range(1, top))
    cells = [(i, j) for i in inner for j in inner if i <= j]
    t = [[0] * k for _ in range(k)]
    for x in range(k):
        t[top][x] = t[x][top] = x

    def assoc():
        return all(t[x][t[y][z]] == t[t[x][y]][z] for x, y, z in product(inner, repeat=3))

    def rec(c):
        if c == len(cells):
            if assoc():
                yield tuple(tuple(r) for r in t)
            return
        i, j = cells[c]
        lo = max(t[i - 1][j], t[i][j - 1])
        for v in range(lo, min(i, j) + 1):
            t[i][j] = t[j][i] = v
            yield from rec(c + 1)
        t[i][j] = t[j][i] = 0

    yield from rec(0)


def residuum(table):
    k = len(table)
    return [[max(z for z in range(k) if table[z][x] <= y) for y in range(k)] for x in range(k)]


def chain_algebra(table, name=None):
    k = len(table)
    name = name or "chain%d:%s" % (k, "/".join("".join(str(v) for v in r) for r in table))
    return derive_order(name, chain_names(k), 0, k - 1, residuum(table), table)


# --- targets: return a witnessing subset (or True for 'any') or None -------------

def _t_any(alg):
    return True


def _t_max_not_ultra(alg):
    ideals = enumerate_li_ideals(alg).ideals
    for A in ideals:
        if I.is_maximal(alg, A, ideals) and not I.is_ultra(alg, A):
            return A
    return None


def _t_dual_filter(alg):
    for F in enumerate_filters(alg):
        if not I.is_li_ideal(alg, I.dual(alg, F)):
            return F
    return None


def _t_li_not_ili(alg):
    for A in enumerate_li_ideals(alg).ideals:
        if not I.is_ili_ideal(alg, A):
            return A
    return None


def _t_non_lia(alg):
    return True if not alg.klass.is_lia else None


TARGETS = {
    "any": _t_any,
    "maximal-proper-not-ultra": _t_max_not_ultra,
    "dual-filter-not-ideal": _t_dual_filter,
    "li-not-ili": _t_li_not_ili,
    "not-lia": _t_non_lia,
}


class ModelSearch:
    """Iterable search run; ``completed`` tells whether the table space was exhausted.

    Yields (algebra, witness) for every chain model satisfying the target,
    where ``witness`` is an :class:`ElementSubset` or ``None`` for targets
    without one. Emission order is the lexicographic order of the product
    tables. A budget ends the stream early with ``completed`` False.
    """

    def __init__(self, spec: ModelSearchSpec):
        self.spec = spec
        self.completed = False
        self.examined = 0

    def __iter__(self):
        spec = self.spec
        start = time.monotonic()
        emitted = 0
        pred = TARGETS[spec.target]
        for table in tnorm_tables(spec.order):
            if spec.max_models is not None and emitted >= spec.max_models:
                return
            if spec.time_budget is not None and time.monotonic() - start > spec.time_budget:
                return
            self.examined += 1
            alg = chain_algebra(table)
            hit = pred(alg)
            if hit is None:
                continue
            yield alg, (hit if isinstance(hit, ElementSubset) else None)
            emitted += 1
        self.completed = True


def search_models(spec: ModelSearchSpec):
    return iter(ModelSearch(spec))


def all_chain_models(max_order: int = 4, min_order: int = MIN_ORDER):
    out = []
    for k in range(min_order, max_order + 1):
        out.extend(alg for alg, _ in search_models(ModelSearchSpec(k)))
    return out
