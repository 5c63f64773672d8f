"""Line-oriented algebra files.

::

    # comment
    algebra ex3.1
    elements 0 a b 1
    bottom 0
    top 1
    imp:
    1 1 1 1
    b 1 1 1
    a b 1 1
    0 a b 1
    otimes:        (optional, same shape)
    ...

Row x, column y of ``imp:`` is x -> y.
"""
from __future__ import annotations

from pathlib import Path

from .algebra import FiniteAlgebra, derive_order
from .errors import ParseError


def parse_algebra(text: str) -> FiniteAlgebra:
    """Parse the file format; parse errors cite 1-based line numbers.

    Derivation errors (not an order, not a lattice, ...) propagate unchanged.
    """
    name = elements = bottom = top = None
    tables = {}
    section = None
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        last_line = lineno
        head, _, rest = line.partition(" ")
        rest = rest.split()
        if line.endswith(":") and len(line.split()) == 1:
            key = line[:-1]
            if key not in ("imp", "otimes"):
                raise ParseError(f"unknown section {key!r}", lineno)
            if key in tables:
                raise ParseError(f"duplicate section {key!r}", lineno)
            if elements is None:
                raise ParseError("'elements' must precede tables", lineno)
            tables[key] = []
            section = key
            continue
        if head == "algebra":
            if len(rest) != 1:
                raise ParseError("expected 'algebra <name>'", lineno)
            name, section = rest[0], None
        elif head == "elements":
            if not rest:
                raise ParseError("empty element list", lineno)
            if len(set(rest)) != len(rest):
                raise ParseError("duplicate element names", lineno)
            elements, section = rest, None
        elif head in ("bottom", "top"):
            if len(rest) != 1:
                raise ParseError(f"expected '{head} <element>'", lineno)
            if elements is None or rest[0] not in elements:
                raise ParseError(f"{head} {rest[0]!r} is not a listed element", lineno)
            if head == "bottom":
                bottom = elements.index(rest[0])
            else:
                top = elements.index(rest[0])
            section = None
        elif section is not None:
            row = line.split()
            rows = tables[section]
            if len(rows) >= len(elements):
                raise ParseError(f"too many rows in {section}: table", lineno)
            if len(row) != len(elements):
                raise ParseError(f"expected {len(elements)} entries, got {len(row)}", lineno)
            try:
                rows.append([elements.index(v) for v in row])
            except ValueError:
                bad = next(v for v in row if v not in elements)
                raise ParseError(f"unknown element {bad!r}", lineno) from None
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno)

    for what, v in (("algebra", name), ("elements", elements), ("bottom", bottom), ("top", top)):
        if v is None:
            raise ParseError(f"missing '{what}' header", last_line or None)
    if "imp" not in tables:
        raise ParseError("missing 'imp:' section", last_line or None)
    for key, rows in tables.items():
        if len(rows) != len(elements):
            raise ParseError(f"{key}: table has {len(rows)} rows, expected {len(elements)}", last_line)
    return derive_order(name, elements, bottom, top, tables["imp"], tables.get("otimes"))


def load_algebra(path) -> FiniteAlgebra:
    return parse_algebra(Path(path).read_text(encoding="utf-8"))


def _rows(alg, table):
    width = max(len(e) for e in alg.elements)
    return [" ".join(alg.elements[v].ljust(width) for v in row).rstrip() for row in table]


def dump_algebra(alg: FiniteAlgebra) -> str:
    """Inverse of :func:`parse_algebra`. A derived product table is not written."""
    lines = [
        f"algebra {alg.name}",
        "elements " + " ".join(alg.elements),
        f"bottom {alg.elements[alg.bottom]}",
        f"top {alg.elements[alg.top]}",
        "imp:",
        *_rows(alg, alg.imp),
    ]
    if not alg.otimes_derived:
        lines += ["otimes:", *_rows(alg, alg.otimes)]
    return "\n".join(lines) + "\n"
