"""Built-in algebras: the worked examples plus two degenerate chains.

Tables are kept verbatim in the file format so they can be compared
against the printed Cayley tables row by row.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .textformat import parse_algebra


@dataclass(frozen=True)
class Fixture:
    name: str
    source: str
    description: str
    # suites expected to produce a counterexample on this algebra
    expect_counterexample: frozenset = field(default_factory=frozenset)

    def load(self):
        return parse_algebra(self.source)


EX3_1 = """\
# four-element lattice implication algebra (Lukasiewicz chain 0<a<b<1)
algebra ex3.1
elements 0 a b 1
bottom 0
top 1
imp:
1 1 1 1
b 1 1 1
a b 1 1
0 a b 1
"""

EX4_3 = """\
# six-element MTL-algebra on the chain 0<a<b<c<d<1
algebra ex4.3
elements 0 a b c d 1
bottom 0
top 1
imp:
1 1 1 1 1 1
c 1 1 1 1 1
b b 1 1 1 1
a a b 1 1 1
0 a b c 1 1
0 a b c d 1
otimes:
0 0 0 0 0 0
0 0 0 0 a a
0 0 0 b b b
0 0 b c c c
0 a b c d d
0 a b c d 1
"""

EX4_6 = """\
# four-element MTL-algebra on the chain 0<a<b<1
algebra ex4.6
elements 0 a b 1
bottom 0
top 1
imp:
1 1 1 1
0 1 1 1
0 b 1 1
0 a b 1
otimes:
0 0 0 0
0 a a a
0 a a b
0 a b 1
"""

TRIVIAL1 = """\
algebra trivial1
elements 0
bottom 0
top 0
imp:
0
"""

CHAIN2 = """\
algebra chain2
elements 0 1
bottom 0
top 1
imp:
1 1
0 1
"""

FIXTURES = {
    f.name: f
    for f in [
        Fixture("ex3.1", EX3_1, "4-element LIA; {0} maximal but not ultra",
                frozenset({"MaxUltraClaim"})),
        Fixture("ex4.3", EX4_3, "6-element MTL-algebra; duality lemma fails",
                frozenset({"L4.2"})),
        Fixture("ex4.6", EX4_6, "4-element MTL-algebra; {0} is an ILI-ideal"),
        Fixture("trivial1", TRIVIAL1, "one-element algebra (0 = 1)"),
        Fixture("chain2", CHAIN2, "two-element Boolean chain"),
    ]
}


def load_fixture(name: str):
    try:
        return FIXTURES[name].load()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
