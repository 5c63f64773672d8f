"""Command-line interface.

Exit codes: 0 all expectations met, 1 mathematical failure (or a
counterexample against the expected polarity), 2 input or usage error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import ideals as I
from . import report as R
from .errors import AlgebraError, CrossCheckError, ParseError
from .explorer import enumerate_li_ideals, inventory
from .fixtures import FIXTURES, load_fixture
from .identities import verify_identities
from .search import TARGETS, ModelSearch, ModelSearchSpec
from .subsets import ElementSubset, all_subsets, format_subset, parse_subset
from .suites import SUITES, applicable_suites, run_all_suites
from .textformat import load_algebra

COMMANDS = ("verify", "ideals", "generate", "theorems", "search", "duality", "fixtures")


@dataclass
class RunConfig:
    command: str
    fixture: Optional[str] = None
    file: Optional[str] = None
    subset: Optional[str] = None
    suites: list = field(default_factory=list)
    brute_check: bool = False
    format: str = "human"
    workers: int = 1
    order: int = 4
    target: str = "any"
    limit: Optional[int] = None
    time_budget: Optional[float] = None
    json_path: Optional[str] = None
    out_dir: Optional[str] = None


class UsageError(Exception):
    pass


@dataclass
class Outcome:
    text: str
    code: int = 0
    doc: Optional[dict] = None
    machine: Optional[str] = None
    figures: list = field(default_factory=list)  # (suffix, callable(path))


def _load(cfg):
    if cfg.fixture and cfg.file:
        raise UsageError("give either a fixture or --file, not both")
    if cfg.file:
        return load_algebra(cfg.file), frozenset()
    if not cfg.fixture:
        raise UsageError("an algebra is required: a fixture name or --file PATH")
    if cfg.fixture not in FIXTURES:
        raise UsageError(f"unknown fixture {cfg.fixture!r}; known: {', '.join(FIXTURES)}")
    return load_fixture(cfg.fixture), FIXTURES[cfg.fixture].expect_counterexample


def _subset(alg, text):
    try:
        return parse_subset(alg, text)
    except KeyError as e:
        raise UsageError(str(e.args[0])) from None


def cmd_verify(cfg) -> Outcome:
    alg, _ = _load(cfg)
    rep = verify_identities(alg, workers=cfg.workers)
    ok = rep.ok and alg.klass.is_residuated_lattice
    figs = [("cayley", lambda p: _plots().plot_cayley_tables(alg, p))]
    return Outcome(R.verify_human(alg, rep), 0 if ok else 1, R.verify_doc(alg, rep),
                   R.verify_machine(alg, rep), figs)


def cmd_ideals(cfg) -> Outcome:
    alg, _ = _load(cfg)
    inv = inventory(alg, brute_check=cfg.brute_check)
    text = R.ideals_human(alg, inv)
    if cfg.brute_check:
        text += f"\n\nbrute-force check: pruned enumeration equals the scan of all {2 ** alg.n} subsets"
    figs = [("ideals", lambda p: _plots().plot_ideal_lattice(alg, inv, p))]
    return Outcome(text, 0, R.ideals_doc(alg, inv), R.ideals_machine(alg, inv), figs)


def _intersection_oracle(alg, A, ideals):
    acc = ElementSubset.full(alg.n)
    for B in ideals:
        if A.issubset(B):
            acc = acc & B
    return acc


def cmd_generate(cfg) -> Outcome:
    alg, _ = _load(cfg)
    if cfg.subset is None:
        raise UsageError("generate needs --set")
    A = _subset(alg, cfg.subset)
    G = I.generated_ideal(alg, A, cross_check=False)
    ideals = enumerate_li_ideals(alg).ideals
    routes = [("fixpoint", G), ("intersection of ideals", _intersection_oracle(alg, A, ideals))]
    if alg.klass.is_lia and A.mask:
        routes += [("nested implications", I.generated_ideal_formula_t26(alg, A)),
                   ("finite sums", I.generated_ideal_formula_t28(alg, A))]
    agree = all(S == G for _, S in routes)
    lines = [f"<{format_subset(alg, A)}> = {format_subset(alg, G)}"]
    lines += [f"  {name:<24} {format_subset(alg, S)}" for name, S in routes]
    lines.append(f"{len(routes)} constructions agree" if agree else "constructions DISAGREE")
    if alg.klass.is_lia:
        fap = I.has_finite_additive_property(alg, A, cross_check=False)
        lines.append(f"finite additive property: {'yes' if fap else 'no'}")
    machine = R.tsv(["generator", "method", "result"],
                    [[format_subset(alg, A), name, format_subset(alg, S)] for name, S in routes])
    doc = {"algebra": R.algebra_doc(alg), "generator": list(alg.names(A)),
           "generated": {name: list(alg.names(S)) for name, S in routes},
           "ideals": [], "suites": [], "witnesses": []}
    return Outcome("\n".join(lines), 0 if agree else 1, doc, machine)


def cmd_theorems(cfg) -> Outcome:
    alg, expect = _load(cfg)
    ids = cfg.suites or applicable_suites(alg)
    for s in ids:
        if s not in SUITES:
            raise UsageError(f"unknown suite {s!r}; known: {', '.join(SUITES)}")
    results = run_all_suites(alg, ids, expect_counterexample=expect)
    ok = all(r.meets_expectation for r in results)
    figs = [("suites", lambda p: _plots().plot_suite_summary(alg, results, p))]
    return Outcome(R.suites_human(alg, results), 0 if ok else 1, R.suites_doc(alg, results),
                   R.suites_machine(alg, results), figs)


def cmd_duality(cfg) -> Outcome:
    alg, expect = _load(cfg)
    cfg.suites = ["L4.2"]
    out = cmd_theorems(cfg)
    rows = []
    for F in all_subsets(alg.n):
        D = I.dual(alg, F)
        f, d = bool(I.is_filter(alg, F)), bool(I.is_li_ideal(alg, D))
        rows.append([format_subset(alg, F), int(f), format_subset(alg, D), int(d), int(f == d)])
    out.machine = R.tsv(["subset", "filter", "dual", "dual_li", "agree"], rows)
    bad = [r for r in rows if not r[4]]
    out.text += f"\n\n{len(rows)} subsets, {len(bad)} where filter and dual-ideal disagree"
    for r in bad[:20]:
        out.text += f"\n  F={r[0]} filter={'yes' if r[1] else 'no'}  F'={r[2]} LI-ideal={'yes' if r[3] else 'no'}"
    return out


def _table_text(alg):
    return "/".join(" ".join(alg.elements[v] for v in row) for row in alg.otimes)


def cmd_search(cfg) -> Outcome:
    try:
        spec = ModelSearchSpec(cfg.order, cfg.target, max_models=cfg.limit, time_budget=cfg.time_budget)
    except ValueError as e:
        raise UsageError(str(e)) from None
    run = ModelSearch(spec)
    rows, lines, docs = [], [], []
    for k, (alg, w) in enumerate(run, start=1):
        wtext = format_subset(alg, w) if w is not None else "-"
        rows.append([k, spec.order, _table_text(alg), alg.klass.label, wtext])
        lines.append(f"#{k} {alg.klass.label}   witness {wtext}")
        lines.append("   " + R.cayley(alg, alg.otimes, "*").replace("\n", "\n   "))
        docs.append({"otimes": [[alg.elements[v] for v in r] for r in alg.otimes],
                     "class": alg.klass.label,
                     "witness": list(alg.names(w)) if w is not None else None})
    status = "search complete" if run.completed else "search stopped by budget (partial results)"
    lines.append(f"{len(rows)} model(s) of order {spec.order} for target {spec.target!r}; "
                 f"{run.examined} table(s) examined; {status}")
    doc = {"algebra": None, "search": {"order": spec.order, "target": spec.target,
                                       "completed": run.completed, "models": docs},
           "ideals": [], "suites": [], "witnesses": []}
    return Outcome("\n".join(lines), 0, doc,
                   R.tsv(["index", "order", "otimes", "class", "witness"], rows))


def cmd_fixtures(cfg) -> Outcome:
    rows = [[f.name, f.description] for f in FIXTURES.values()]
    return Outcome(R.aligned(["fixture", "description"], rows), 0, None, R.tsv(["fixture", "description"], rows))


def _plots():
    from . import plotting
    return plotting


HANDLERS = {
    "verify": cmd_verify, "ideals": cmd_ideals, "generate": cmd_generate,
    "theorems": cmd_theorems, "search": cmd_search, "duality": cmd_duality,
    "fixtures": cmd_fixtures,
}


def build_parser():
    p = argparse.ArgumentParser(prog="mtlideals", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, algebra=True):
        if algebra:
            sp.add_argument("fixture_pos", nargs="?", metavar="FIXTURE", help="built-in fixture name")
            sp.add_argument("--fixture", help="built-in fixture name")
            sp.add_argument("--file", help="algebra file")
        sp.add_argument("--format", choices=("human", "machine"), default="human")
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--json", dest="json_path", metavar="PATH", help="write a structured export")
        sp.add_argument("--out", dest="out_dir", metavar="DIR",
                        help="write report bundle (.tsv, .json, .png figures) into DIR")

    sp = sub.add_parser("verify", help="classify the algebra and check the identity catalog")
    common(sp)
    sp = sub.add_parser("ideals", help="enumerate and classify all LI-ideals")
    common(sp)
    sp.add_argument("--brute-check", action="store_true", help="compare with a 2^n subset scan")
    sp = sub.add_parser("generate", help="generated LI-ideal of a set")
    common(sp)
    sp.add_argument("--set", dest="subset", required=True, help="comma-separated element names")
    sp = sub.add_parser("theorems", help="run theorem suites")
    common(sp)
    sp.add_argument("--suite", dest="suites", action="append", default=[],
                    help="suite id (repeatable); default: all applicable")
    sp = sub.add_parser("duality", help="filter / dual-ideal correspondence over all subsets")
    common(sp)
    sp = sub.add_parser("search", help="search t-norm chains for a target property")
    common(sp, algebra=False)
    sp.add_argument("--order", type=int, default=4)
    sp.add_argument("--target", default="any", choices=sorted(TARGETS))
    sp.add_argument("--limit", type=int)
    sp.add_argument("--time-budget", type=float, help="seconds")
    sp = sub.add_parser("fixtures", help="list built-in fixtures")
    common(sp, algebra=False)
    return p


def config_from_args(ns) -> RunConfig:
    fixture = getattr(ns, "fixture", None)
    pos = getattr(ns, "fixture_pos", None)
    if fixture and pos and fixture != pos:
        raise UsageError("fixture given twice")
    return RunConfig(
        command=ns.command, fixture=fixture or pos, file=getattr(ns, "file", None),
        subset=getattr(ns, "subset", None), suites=getattr(ns, "suites", []) or [],
        brute_check=getattr(ns, "brute_check", False), format=ns.format, workers=ns.workers,
        order=getattr(ns, "order", 4), target=getattr(ns, "target", "any"),
        limit=getattr(ns, "limit", None), time_budget=getattr(ns, "time_budget", None),
        json_path=ns.json_path, out_dir=ns.out_dir,
    )


def _write_bundle(cfg, outcome):
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = cfg.command
    if cfg.fixture or cfg.file:
        stem = f"{cfg.fixture or Path(cfg.file).stem}_{cfg.command}"
    written = []
    if outcome.machine is not None:
        (out / f"{stem}.tsv").write_text(outcome.machine + "\n", encoding="utf-8")
        written.append(out / f"{stem}.tsv")
    if outcome.doc is not None:
        (out / f"{stem}.json").write_text(R.dump_json(outcome.doc) + "\n", encoding="utf-8")
        written.append(out / f"{stem}.json")
    for suffix, draw in outcome.figures:
        path = out / f"{stem}_{suffix}.png"
        draw(path)
        written.append(path)
    return written


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        outcome = HANDLERS[cfg.command](cfg)
    except (UsageError, ParseError, OSError) as e:
        print(f"error: {e}", file=stderr)
        return 2
    except (AlgebraError, CrossCheckError) as e:
        kind = type(e).__name__
        print(f"{kind}: {e}", file=stderr if cfg.format == "machine" else stdout)
        return 1
    text = outcome.machine if cfg.format == "machine" and outcome.machine is not None else outcome.text
    print(text, file=stdout)
    if cfg.json_path and outcome.doc is not None:
        Path(cfg.json_path).write_text(R.dump_json(outcome.doc) + "\n", encoding="utf-8")
    if cfg.out_dir:
        for path in _write_bundle(cfg, outcome):
            print(f"wrote {path}", file=stderr)
    return outcome.code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        cfg = config_from_args(ns)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
