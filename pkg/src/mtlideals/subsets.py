"""Subsets of a finite carrier, stored as bitmasks (bit i = element i)."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import CarrierMismatch


@dataclass(frozen=True, order=False)
class ElementSubset:
    n: int
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#x} does not fit a carrier of size {self.n}")

    @classmethod
    def of(cls, n: int, indices) -> "ElementSubset":
        mask = 0
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f"index {i} outside carrier of size {n}")
            mask |= 1 << i
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "ElementSubset":
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> "ElementSubset":
        return cls(n, 0)

    def __contains__(self, i: int) -> bool:
        return (self.mask >> i) & 1 == 1

    def __iter__(self):
        m, i = self.mask, 0
        while m:
            if m & 1:
                yield i
            m >>= 1
            i += 1

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    @property
    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1

    def issubset(self, other: "ElementSubset") -> bool:
        return self.mask & ~other.mask == 0

    def sort_key(self):
        return (len(self), self.mask)

    def __or__(self, other):
        return ElementSubset(self.n, self.mask | other.mask)

    def __and__(self, other):
        return ElementSubset(self.n, self.mask & other.mask)

    def __repr__(self):
        return f"ElementSubset(n={self.n}, {sorted(self)})"


def check_carrier(alg, A: ElementSubset):
    if A.n != alg.n:
        raise CarrierMismatch(
            f"subset over {A.n} elements used with {alg.name} ({alg.n} elements)")


def subset_from_names(alg, names) -> ElementSubset:
    return ElementSubset.of(alg.n, (alg.index(s) for s in names))


def parse_subset(alg, text: str) -> ElementSubset:
    """Comma-separated element names, optionally wrapped in braces."""
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    parts = [p.strip() for p in text.split(",") if p.strip()]
    return subset_from_names(alg, parts)


def format_subset(alg, A: ElementSubset) -> str:
    return "{" + ", ".join(alg.elements[i] for i in A) + "}"


def all_subsets(n: int):
    for m in range(1 << n):
        yield ElementSubset(n, m)
