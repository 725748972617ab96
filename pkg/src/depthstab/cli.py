"""Command-line interface.

Exit codes: 0 success, 1 an asserted theorem verdict failed, 2 usage,
parse or size-cap errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from pathlib import Path

from . import __version__
from .cache import ENV_VAR, DiskCache
from .corpus import DEFAULT_SEED, balanced_corpus, control_corpus, load_corpus, write_corpus
from .errors import DepthStabError, NoEdges, ParseError, SizeLimitExceeded, TheoremViolation
from .homology import FieldSpec
from .hypergraph import FAMILIES, Hypergraph, check_matrix_balanced, generate, is_balanced, minimal_vertex_covers, parse
from .koszul import betti_table, depth_via_koszul
from .monomial import MonomialIdeal, cover_ideal, format_monomial, power
from .polytope import (
    EdgeSplitSystem,
    check_vertex_integrality,
    integer_point,
    polytope_checks,
    vertices_closed,
    verify_monotone_feasibility,
)
from .stability import depth_function, dstab, reports_to_csv, verify
from .takayama import depth_power_balanced, depth_via_takayama

log = logging.getLogger("depthstab")

SUITES = ("t1", "t2", "ntf", "polytope", "all")


class UsageError(DepthStabError):
    pass


def _read_hypergraph(path: str) -> Hypergraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse(text)


def _read_ideal(path: str) -> MonomialIdeal:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        gens = [tuple(int(x) for x in g) for g in data]
        if not gens:
            raise ParseError("ideal file lists no generators")
        return MonomialIdeal.from_list(len(gens[0]), gens)
    except (OSError, ValueError, TypeError) as exc:
        raise ParseError(f"cannot read ideal from {path}: {exc}") from exc


def _cache(args):
    d = args.cache_dir or os.environ.get(ENV_VAR)
    return DiskCache(d) if d else None


def _field(args) -> FieldSpec:
    return FieldSpec(args.char)


def _emit(obj, args):
    print(json.dumps(obj, indent=2, sort_keys=True))


def _subject(args):
    """(hypergraph or None, ideal) from the positional file or --ideal."""
    if getattr(args, "ideal", None):
        return None, _read_ideal(args.ideal)
    if not args.input:
        raise UsageError("give a hypergraph file or --ideal FILE")
    h = _read_hypergraph(args.input)
    return h, cover_ideal(h)


# -- commands ------------------------------------------------------------------

def cmd_check_balanced(args) -> int:
    h = _read_hypergraph(args.input)
    v = is_balanced(h, args.max_n, args.max_m)
    mv = check_matrix_balanced(h.incidence_matrix(), args.max_n, args.max_m)
    out = {"balanced": v.balanced, "matrix_balanced": mv.balanced}
    if v.cycle:
        out["cycle"] = {"vertices": list(v.cycle.vertices), "edges": [j + 1 for j in v.cycle.edges]}
        print(f"UNBALANCED: odd cycle {' - '.join(map(str, v.cycle.vertices))} "
              f"through edges {', '.join(str(j + 1) for j in v.cycle.edges)}", file=sys.stderr)
    if not mv.balanced:
        out["submatrix"] = {"rows": [r + 1 for r in mv.rows], "cols": [c + 1 for c in mv.cols]}
    out["verdict"] = "BALANCED" if v.balanced else "UNBALANCED"
    _emit(out, args)
    return 0


def cmd_covers(args) -> int:
    h = _read_hypergraph(args.input)
    _emit([sorted(c) for c in minimal_vertex_covers(h)], args)
    return 0


def cmd_cover_ideal(args) -> int:
    h = _read_hypergraph(args.input)
    j = cover_ideal(h)
    if args.text:
        print(str(j))
    else:
        _emit(j.to_list(), args)
    return 0


def cmd_depth(args) -> int:
    h, ideal = _subject(args)
    k = _field(args)
    if h is not None and is_balanced(h, args.max_n, args.max_m) and h.edges:
        d = depth_power_balanced(h, args.t, k, _cache(args), check=False)
    else:
        if h is not None and not h.edges:
            raise NoEdges("J(H) is the unit ideal when H has no edges")
        d = depth_via_takayama(power(ideal, args.t), k, _cache(args))
    print(d)
    return 0


def cmd_depth_function(args) -> int:
    h = _read_hypergraph(args.input)
    values = depth_function(h, args.t_max, _field(args), _cache(args))
    _emit({str(t): d for t, d in values.items()}, args)
    return 0


def cmd_dstab(args) -> int:
    h = _read_hypergraph(args.input)
    if not is_balanced(h, args.max_n, args.max_m):
        raise UsageError("dstab is defined through the monotone depth function of a balanced hypergraph")
    print(dstab(h, _field(args), _cache(args)))
    return 0


def cmd_betti(args) -> int:
    _, ideal = _subject(args)
    k = _field(args)
    table = betti_table(ideal, k)
    rows = [{"i": j, "degree": list(a), "dim": d} for (j, a), d in sorted(table.items())]
    _emit({"betti": rows, "depth": depth_via_koszul(ideal, k)}, args)
    return 0


def _system(args, h: Hypergraph) -> EdgeSplitSystem:
    upper = [int(x) - 1 for x in args.upper.split(",") if x] if args.upper else []
    return EdgeSplitSystem.of(h, upper, args.t)


def cmd_polytope(args) -> int:
    h = _read_hypergraph(args.input)
    s = _system(args, h)
    if args.action == "vertices":
        _emit([[str(x) for x in v] for v in vertices_closed(s)], args)
    elif args.action == "integrality":
        v = check_vertex_integrality(s)
        _emit({"integral": v.integral, "witness": None if v.integral else [str(x) for x in v.witness]}, args)
    else:
        if args.t_max:
            rep = verify_monotone_feasibility(s, args.t_max)
            _emit({"feasible": list(rep.feasible), "monotone": rep.monotone}, args)
        else:
            pt = integer_point(s)
            _emit({"point": list(pt) if pt is not None else None}, args)
    return 0


def cmd_gen(args) -> int:
    params = {}
    for name in ("n", "left", "right", "density", "m"):
        val = getattr(args, name)
        if val is not None:
            params[name] = val
    h = generate(args.family, seed=args.seed, **params)
    text = h.to_json() + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_corpus(args) -> int:
    write_corpus(args.output, args.seed)
    return 0


# -- verify ----------------------------------------------------------------------

def _instances(args) -> list[tuple[str, Hypergraph, dict | None]]:
    if args.inputs:
        return [(Path(p).stem, _read_hypergraph(p), None) for p in args.inputs]
    if args.corpus:
        return list(load_corpus(args.corpus))
    if args.family:
        params = {k: v for k, v in (("n", args.n), ("left", args.left), ("right", args.right),
                                    ("density", args.density), ("m", args.m)) if v is not None}
        h = generate(args.family, seed=args.seed, **params)
        tag = "_".join(f"{k}{v}" for k, v in params.items())
        return [(f"{args.family}_{tag}_s{args.seed}", h, None)]
    items = [(name, h, None) for name, h in balanced_corpus(args.seed)]
    if not args.no_controls:
        items += [(name, h, None) for name, h in control_corpus()]
    return items


def _verify_one(job):
    name, h, suites, char, t_max, s_ntf, cache_dir = job
    cache = DiskCache(cache_dir) if cache_dir else None
    k = FieldSpec(char)
    core = tuple(s for s in ("t1", "t2", "ntf") if s in suites)
    report = verify(h, k, t_max=t_max, s_ntf_max=s_ntf, instance=name, cache=cache, suites=core)
    out = report.to_dict()
    if "polytope" in suites:
        poly = polytope_checks(h, t_max or h.n + 2)
        out["polytope"] = asdict(poly)
        if report.balanced:
            report.violations += poly.violations()
    out["violations"] = report.violations
    return out, reports_to_csv([report]).splitlines()[1:]


def _digest(h: Hypergraph) -> str:
    return hashlib.sha256(h.to_json().encode()).hexdigest()


def cmd_verify(args) -> int:
    suites = ("t1", "t2", "ntf", "polytope") if args.suite == "all" else (args.suite,)
    instances = _instances(args)
    cache_dir = args.cache_dir or os.environ.get(ENV_VAR)
    jobs = [(name, h, suites, args.char, args.t_max, args.s_ntf_max, cache_dir) for name, h, _ in instances]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one, jobs))
    else:
        results = [_verify_one(j) for j in jobs]

    mismatches = []
    for (name, _, expected), (rep, _) in zip(instances, results):
        for key, want in (expected or {}).items():
            got = rep["balanced"] if key == "balanced" else rep["verdicts"].get(key)
            if got is not None and got != want:
                mismatches.append(f"{name}: {key} expected {want}, got {got}")
    violations = [f"{r['instance']}: {v}" for r, _ in results for v in r["violations"]]

    config = {
        "command": "verify", "suite": args.suite, "char": args.char, "seed": args.seed,
        "t_max": args.t_max, "s_ntf_max": args.s_ntf_max, "version": __version__,
    }
    doc = {
        "config": config,
        "inputs": [{"name": name, "sha256": _digest(h)} for name, h, _ in instances],
        "reports": [r for r, _ in results],
        "violations": violations,
        "manifest_mismatches": mismatches,
    }
    from .stability import CSV_HEADER

    csv_text = ",".join(CSV_HEADER) + "\n" + "".join(line + "\n" for _, rows in results for line in rows)
    json_text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(json_text, encoding="utf-8")
        (out / "report.csv").write_text(csv_text, encoding="utf-8")
    else:
        sys.stdout.write(csv_text if args.format == "csv" else json_text)
    for line in violations + mismatches:
        print(f"VIOLATION {line}", file=sys.stderr)
    return 1 if violations or mismatches else 0


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, default=0, help="field characteristic: 0 or a prime")
    common.add_argument("--cache-dir", default=None, help=f"Betti cache directory (or ${ENV_VAR})")
    common.add_argument("--max-n", type=int, default=12, help="vertex cap for brute-force searches")
    common.add_argument("--max-m", type=int, default=16, help="edge cap for brute-force searches")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="depthstab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    add("check-balanced", cmd_check_balanced, "balancedness verdict with witness").add_argument("input")
    add("covers", cmd_covers, "minimal vertex covers").add_argument("input")
    sp = add("cover-ideal", cmd_cover_ideal, "generators of J(H)")
    sp.add_argument("input")
    sp.add_argument("--text", action="store_true", help="print as a polynomial ideal")

    sp = add("depth", cmd_depth, "depth R/J(H)^t (or R/I^t with --ideal)")
    sp.add_argument("input", nargs="?")
    sp.add_argument("--ideal", help="monomial ideal file: list of exponent vectors")
    sp.add_argument("--t", type=int, default=1)

    sp = add("depth-function", cmd_depth_function, "t -> depth R/J(H)^t")
    sp.add_argument("input")
    sp.add_argument("--t-max", type=int, required=True)

    add("dstab", cmd_dstab, "index of depth stability").add_argument("input")

    sp = add("betti", cmd_betti, "multigraded Betti numbers (Koszul oracle)")
    sp.add_argument("input", nargs="?")
    sp.add_argument("--ideal")

    sp = add("polytope", cmd_polytope, "edge-split systems")
    sp.add_argument("action", choices=("vertices", "integrality", "feasibility"))
    sp.add_argument("input")
    sp.add_argument("--upper", default="", help="comma-separated 1-based edge indices on the <= side")
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--t-max", type=int, default=None)

    sp = add("verify", cmd_verify, "run theorem checks over instances")
    sp.add_argument("inputs", nargs="*")
    sp.add_argument("--suite", choices=SUITES, default="all")
    sp.add_argument("--corpus", help="corpus directory with manifest.json")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--family", choices=FAMILIES)
    for name, typ in (("n", int), ("left", int), ("right", int), ("density", float), ("m", int)):
        sp.add_argument(f"--{name}", type=typ)
    sp.add_argument("--t-max", type=int, default=None)
    sp.add_argument("--s-ntf-max", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--out", help="directory for report.json and report.csv")
    sp.add_argument("--no-controls", action="store_true", help="skip unbalanced controls in the generated corpus")

    sp = add("gen", cmd_gen, "generate a seeded instance")
    sp.add_argument("--family", choices=FAMILIES, required=True)
    sp.add_argument("--seed", type=int, default=0)
    for name, typ in (("n", int), ("left", int), ("right", int), ("density", float), ("m", int)):
        sp.add_argument(f"--{name}", type=typ)
    sp.add_argument("-o", "--output")

    sp = add("corpus", cmd_corpus, "write the seeded corpus and manifest")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("-o", "--output", default="corpus")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except TheoremViolation as exc:
        print(f"THEOREM VIOLATION: {exc}", file=sys.stderr)
        if exc.report is not None:
            print(exc.report.to_json(), file=sys.stderr)
        return 1
    except (ParseError, SizeLimitExceeded, UsageError, DepthStabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
