"""Human, tab-separated and structured renderings of results.

Machine output is one header line followed by one tab-separated record
per row; it contains no timings or other run-dependent data, so it is
byte-stable for identical inputs.
"""
from __future__ import annotations

import json

from .subsets import format_subset

CLASS_FLAGS = (
    ("lattice", "is_lattice"),
    ("residuated lattice", "is_residuated_lattice"),
    ("MTL-algebra", "is_mtl"),
    ("IMTL-algebra", "is_imtl"),
    ("lattice implication algebra", "is_lia"),
)


def names(alg, idx):
    if idx is None:
        return "-"
    return ",".join(alg.elements[i] for i in idx) if idx else "-"


def tsv(header, rows):
    lines = ["\t".join(header)]
    lines += ["\t".join(str(c) for c in r) for r in rows]
    return "\n".join(lines)


def cayley(alg, table, symbol):
    w = max(len(e) for e in alg.elements + (symbol,))
    fmt = lambda s: s.rjust(w)
    head = fmt(symbol) + " | " + " ".join(fmt(e) for e in alg.elements)
    lines = [head, "-" * len(head)]
    for x, row in enumerate(table):
        lines.append(fmt(alg.elements[x]) + " | " + " ".join(fmt(alg.elements[v]) for v in row))
    return "\n".join(lines)


def aligned(header, rows):
    cols = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cols) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cols)


# --- verify ------------------------------------------------------------------

def verify_human(alg, report):
    k = alg.klass
    out = [f"algebra {alg.name}: {alg.n} elements ({' '.join(alg.elements)})",
           f"class: {k.label}"]
    for label, attr in CLASS_FLAGS:
        out.append(f"  {label:<30} {'yes' if getattr(k, attr) else 'no'}")
    if k.failures:
        out.append("axiom failures (first witness):")
        for axiom, w in k.failures:
            out.append(f"  {axiom:<28} {', '.join(w) if w else '-'}")
    out += ["", cayley(alg, alg.imp, "->"), "",
            cayley(alg, alg.otimes, "*") + ("   (derived as (x->y')')" if alg.otimes_derived else ""), ""]
    asserted = [r for r in report.results if r.asserted]
    out.append(f"identities: {len(asserted)} asserted, "
               f"{sum(r.passed for r in asserted)} pass, "
               f"{len(report.results) - len(asserted)} not asserted")
    rows = [[r.id, r.applies_to, r.status, ", ".join(r.witness) if r.witness else "-"]
            for r in report.results]
    out.append(aligned(["id", "class", "status", "witness"], rows))
    out.append("")
    out.append("OK: all applicable identities pass" if report.ok and k.is_residuated_lattice
               else "FAILED")
    return "\n".join(out)


def verify_machine(alg, report):
    k = alg.klass
    rows = [["class", attr[3:], int(getattr(k, attr)), "-"] for _, attr in CLASS_FLAGS]
    rows += [["axiom", a, "fail", ",".join(w) if w else "-"] for a, w in k.failures]
    rows += [["identity", r.id, r.status, ",".join(r.witness) if r.witness else "-"]
             for r in report.results]
    return tsv(["kind", "id", "status", "witness"], rows)


def verify_doc(alg, report):
    k = alg.klass
    return {
        "algebra": algebra_doc(alg),
        "class": {attr: getattr(k, attr) for _, attr in CLASS_FLAGS},
        "identities": [
            {"id": r.id, "applies_to": r.applies_to, "asserted": r.asserted,
             "passed": r.passed, "cases": r.cases}
            for r in report.results
        ],
        "ideals": [],
        "suites": [],
        "witnesses": [{"context": a, "elements": list(w)} for a, w in k.failures]
        + [{"context": r.id, "elements": list(r.witness)} for r in report.results if r.witness],
    }


def algebra_doc(alg):
    return {
        "name": alg.name,
        "elements": list(alg.elements),
        "bottom": alg.elements[alg.bottom],
        "top": alg.elements[alg.top],
        "imp": [[alg.elements[v] for v in r] for r in alg.imp],
        "otimes": [[alg.elements[v] for v in r] for r in alg.otimes],
        "otimes_derived": alg.otimes_derived,
    }


# --- ideals ------------------------------------------------------------------

IDEAL_FLAGS = ("li", "proper", "prime", "ultra", "obstinate", "boolean", "ili", "maximal")


def _witness_text(alg, c):
    parts = []
    for flag, (rule, w) in sorted(c.witnesses.items(), key=lambda kv: IDEAL_FLAGS.index(kv[0])):
        if flag == "maximal" and rule == "MAXIMAL":
            parts.append(f"maximal:{rule}(<{names(alg, w)}>)")
        else:
            parts.append(f"{flag}:{rule}({names(alg, w)})")
    return " ".join(parts) or "-"


def ideals_machine(alg, inv):
    rows = []
    for A, c in inv.entries:
        f = c.flags()
        rows.append([format_subset(alg, A)] + [int(f[k]) for k in IDEAL_FLAGS] + [_witness_text(alg, c)])
    return tsv(["subset", *IDEAL_FLAGS, "witness"], rows)


def ideals_human(alg, inv):
    rows = []
    for A, c in inv.entries:
        f = c.flags()
        rows.append([format_subset(alg, A)] + ["yes" if f[k] else "." for k in IDEAL_FLAGS[1:]]
                    + [_witness_text(alg, c)])
    out = [f"algebra {alg.name} ({alg.klass.label}): {len(inv)} LI-ideals", "",
           aligned(["ideal", *IDEAL_FLAGS[1:], "witnesses"], rows)]
    if inv.edges:
        out += ["", "covering relation:"]
        for i, j in inv.edges:
            out.append(f"  {format_subset(alg, inv.entries[i][0])} < {format_subset(alg, inv.entries[j][0])}")
    return "\n".join(out)


def ideals_doc(alg, inv):
    return {
        "algebra": algebra_doc(alg),
        "ideals": [
            {"subset": [alg.elements[i] for i in A], **c.flags()} for A, c in inv.entries
        ],
        "covers": [[i, j] for i, j in inv.edges],
        "suites": [],
        "witnesses": [
            {"context": format_subset(alg, A), "flag": flag, "rule": rule,
             "elements": [alg.elements[i] for i in w] if w else []}
            for A, c in inv.entries for flag, (rule, w) in c.witnesses.items()
        ],
    }


# --- suites ------------------------------------------------------------------

def _suite_verdict(r):
    if r.holds:
        return "holds"
    return f"counterexample ({len(r.counterexamples)})"


def _first_cx(alg, r):
    if r.holds:
        return "-"
    cx = r.counterexamples[0]
    failing = ",".join(f"{k}={int(v)}" for k, v in cx.clauses.items())
    return f"{format_subset(alg, cx.subset)} [{failing}]"


def suites_machine(alg, results):
    rows = [[r.suite_id, r.polarity, _suite_verdict(r), int(r.meets_expectation),
             len(r.instances), _first_cx(alg, r)] for r in results]
    return tsv(["suite", "expected", "result", "meets", "instances", "counterexample"], rows)


def suites_human(alg, results):
    rows = [[r.suite_id, r.polarity, _suite_verdict(r),
             "ok" if r.meets_expectation else "UNEXPECTED", len(r.instances), _first_cx(alg, r)]
            for r in results]
    ok = all(r.meets_expectation for r in results)
    return "\n".join([
        f"algebra {alg.name} ({alg.klass.label}): {len(results)} suites", "",
        aligned(["suite", "expected", "result", "status", "instances", "first counterexample"], rows),
        "", "OK: every suite matches its expected polarity" if ok else "FAILED",
    ])


def suites_doc(alg, results):
    return {
        "algebra": algebra_doc(alg),
        "ideals": [],
        "suites": [
            {"id": r.suite_id, "description": r.description, "expected": r.polarity,
             "holds": r.holds, "meets_expectation": r.meets_expectation,
             "instances": len(r.instances)}
            for r in results
        ],
        "witnesses": [
            {"context": r.suite_id, "subset": [alg.elements[i] for i in cx.subset],
             "clauses": cx.clauses}
            for r in results for cx in r.counterexamples
        ],
    }


def dump_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)
