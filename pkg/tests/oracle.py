"""Independent reference implementations for tests.

Works on name-keyed dictionaries read straight from the fixture text and
follows the definitions literally, without reusing any package code path.
"""
from itertools import chain, combinations


class Raw:
    def __init__(self, text):
        lines = [l.split("#")[0].split() for l in text.splitlines()]
        lines = [l for l in lines if l]
        head = {l[0]: l[1:] for l in lines if l[0] in ("elements", "bottom", "top")}
        self.els = head["elements"]
        self.zero, self.one = head["bottom"][0], head["top"][0]
        n = len(self.els)
        tables, cur = {}, None
        for l in lines:
            if len(l) == 1 and l[0].endswith(":"):
                cur = l[0][:-1]
                tables[cur] = []
            elif cur and len(l) == n and l[0] not in ("elements",):
                tables[cur].append(l)
        self.imp = {(x, y): tables["imp"][i][j] for i, x in enumerate(self.els) for j, y in enumerate(self.els)}
        if "otimes" in tables:
            self.prod = {(x, y): tables["otimes"][i][j]
                         for i, x in enumerate(self.els) for j, y in enumerate(self.els)}
        else:
            self.prod = {(x, y): self.neg(self.imp[x, self.neg(y)]) for x in self.els for y in self.els}

    def neg(self, x):
        return self.imp[x, self.zero]

    def le(self, x, y):
        return self.imp[x, y] == self.one

    def meet(self, x, y):
        lower = [z for z in self.els if self.le(z, x) and self.le(z, y)]
        return next(z for z in lower if all(self.le(w, z) for w in lower))

    def join(self, x, y):
        upper = [z for z in self.els if self.le(x, z) and self.le(y, z)]
        return next(z for z in upper if all(self.le(z, w) for w in upper))

    def oplus(self, x, y):
        return self.imp[self.neg(x), y]

    def subsets(self):
        s = self.els
        return [frozenset(c) for c in chain.from_iterable(combinations(s, k) for k in range(len(s) + 1))]

    def is_ideal(self, A):
        if self.zero not in A:
            return False
        for x in A:
            for y in self.els:
                if self.neg(self.imp[self.neg(x), self.neg(y)]) in A and y not in A:
                    return False
        return True

    def ideals(self):
        return [A for A in self.subsets() if self.is_ideal(A)]

    def least_ideal(self, A):
        out = frozenset(self.els)
        for B in self.ideals():
            if set(A) <= B:
                out &= B
        return out

    def is_filter(self, F):
        if not F:
            return False
        return (all(self.prod[x, y] in F for x in F for y in F)
                and all(y in F for x in F for y in self.els if self.le(x, y)))

    def maximal_ideals(self):
        proper = [A for A in self.ideals() if len(A) < len(self.els)]
        return [A for A in proper if not any(A < B for B in proper)]
