"""Enumerate and classify all LI-ideals and filters of a finite algebra."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import ideals as I
from .errors import CrossCheckError
from .subsets import ElementSubset, all_subsets, check_carrier

BRUTE_FORCE_LIMIT = 12


@dataclass
class IdealClassification:
    is_li: bool
    is_proper: bool = False
    is_prime: bool = False
    is_ultra: bool = False
    is_obstinate: bool = False
    is_boolean: bool = False
    is_ili: bool = False
    is_maximal: bool = False
    witnesses: dict = field(default_factory=dict)  # flag -> (rule, index tuple)

    FLAGS = ("li", "proper", "prime", "ultra", "obstinate", "boolean", "ili", "maximal")

    def flags(self) -> dict:
        return {f: getattr(self, "is_" + f) for f in self.FLAGS}


@dataclass
class IdealInventory:
    algebra: str
    entries: list  # (ElementSubset, IdealClassification | None)
    edges: list = field(default_factory=list)  # covering pairs (i, j): entries[i] < entries[j]

    @property
    def ideals(self):
        return [A for A, _ in self.entries]

    def __len__(self):
        return len(self.entries)


def _linear_extension(alg):
    return sorted(range(alg.n), key=lambda x: (sum(alg.leq[y][x] for y in range(alg.n)), x))


def down_sets(alg):
    """All down-sets of the order, as bitmasks.

    Elements are decided along a linear extension, so an element can be
    included exactly when everything below it already is.
    """
    order = _linear_extension(alg)
    below = [0] * alg.n
    for x in range(alg.n):
        for y in range(alg.n):
            if y != x and alg.leq[y][x]:
                below[x] |= 1 << y
    out = []

    def rec(k, mask):
        if k == len(order):
            out.append(mask)
            return
        x = order[k]
        rec(k + 1, mask)
        if below[x] & ~mask == 0:
            rec(k + 1, mask | (1 << x))

    rec(0, 0)
    return out


def up_sets(alg):
    full = (1 << alg.n) - 1
    # complements of down-sets are exactly the up-sets
    return [full & ~m for m in down_sets(alg)]


def _covering(subsets):
    edges = []
    for i, A in enumerate(subsets):
        for j, B in enumerate(subsets):
            if i == j or not A.issubset(B) or A == B:
                continue
            if not any(k not in (i, j) and A.issubset(C) and C.issubset(B) and C not in (A, B)
                       for k, C in enumerate(subsets)):
                edges.append((i, j))
    return edges


def brute_force_ideals(alg):
    return sorted((A for A in all_subsets(alg.n) if I.is_li_ideal(alg, A)),
                  key=ElementSubset.sort_key)


def enumerate_li_ideals(alg, brute_check: bool = False) -> IdealInventory:
    """Every LI-ideal, sorted by (size, bitmask), with the inclusion covering relation.

    Ideals are down-sets, so only down-sets are tested against the closure
    rule. ``brute_check`` compares with a scan of all 2**n subsets.
    """
    I._require(alg, "rl")
    found = [ElementSubset(alg.n, m) for m in down_sets(alg)]
    found = sorted((A for A in found if I.is_li_ideal(alg, A)), key=ElementSubset.sort_key)
    if brute_check:
        if alg.n > BRUTE_FORCE_LIMIT:
            raise ValueError(f"brute-force check limited to n <= {BRUTE_FORCE_LIMIT}")
        if found != brute_force_ideals(alg):
            raise CrossCheckError(f"pruned enumeration disagrees with brute force on {alg.name}")
    return IdealInventory(alg.name, [(A, None) for A in found], _covering(found))


def enumerate_filters(alg, brute_check: bool = False):
    found = [ElementSubset(alg.n, m) for m in up_sets(alg)]
    found = sorted((F for F in found if I.is_filter(alg, F)), key=ElementSubset.sort_key)
    if brute_check:
        brute = sorted((F for F in all_subsets(alg.n) if I.is_filter(alg, F)),
                       key=ElementSubset.sort_key)
        if found != brute:
            raise CrossCheckError(f"pruned filter enumeration disagrees with brute force on {alg.name}")
    return found


def classify_ideal(alg, A: ElementSubset, all_ideals) -> IdealClassification:
    check_carrier(alg, A)
    li = I.is_li_ideal(alg, A)
    if not li:
        return IdealClassification(False, witnesses={"li": (li.rule, li.witness)})
    verdicts = {
        "proper": I.is_proper(alg, A),
        "prime": I.is_prime(alg, A),
        "ultra": I.is_ultra(alg, A),
        "obstinate": I.is_obstinate(alg, A),
        "boolean": I.is_boolean(alg, A),
        "ili": I.is_ili_ideal(alg, A),
        "maximal": I.is_maximal(alg, A, all_ideals),
    }
    c = IdealClassification(True, **{"is_" + k: bool(v) for k, v in verdicts.items()})
    c.witnesses = {k: (v.rule, v.witness) for k, v in verdicts.items() if not v}
    return c


def classify_inventory(alg, inv: IdealInventory) -> IdealInventory:
    ideals = inv.ideals
    entries = [(A, classify_ideal(alg, A, ideals)) for A in ideals]
    return IdealInventory(inv.algebra, entries, list(inv.edges))


def inventory(alg, brute_check: bool = False) -> IdealInventory:
    """Enumerate and classify in one step."""
    return classify_inventory(alg, enumerate_li_ideals(alg, brute_check=brute_check))
