"""Command-line front end: task configs, JSON/table reports, CI exit codes.

Exit codes: 0 = all verification tasks passed (and no verdict needed an
uncertified entry), 1 = some verification failed, 2 = configuration error
(bad JSON, parse errors, unknown names).
"""

import argparse
import json
import sys
import time

from .catalog import builtin_catalog, load_catalog
from .homological import (
    dualizing_module,
    ext_table,
    gorenstein_shift,
    minimal_free_resolution,
    shift_iso_check,
    tor_table,
)
from .local import (
    check_cohomology_base_change,
    check_homology_base_change,
    local_cohomology_duality,
    local_cohomology_koszul,
)
from .mates import corpus_names, decide_from_json, verify_corpus
from .modules import (
    DegreeWindow,
    PresentedModule,
    hilbert_series,
    is_free,
    restrict_scalars,
    torsion_submodule,
)
from .poly import GradedPolyRing, ParseError

SCHEMA = 1


class ConfigError(ValueError):
    pass


def parse_window(text):
    try:
        lo, hi = text.split(":")
        return DegreeWindow(int(lo), int(hi))
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"bad window {text!r}: expected LO:HI") from exc


def _resolve_ring(spec, catalog):
    if isinstance(spec, str):
        return catalog.group(spec).ring
    if isinstance(spec, dict) and "generators" in spec:
        return GradedPolyRing([(g["name"], g["degree"])
                               for g in spec["generators"]])
    raise ConfigError(f"cannot resolve ring from {spec!r}")


def _resolve_module(spec, catalog, default_ring=None):
    """Module description: {"ring": ..., "generators": [...], "relations":
    [[poly strings per slot], ...]}; "S" / "Q" shorthands need a ring."""
    if spec in ("S", None):
        if default_ring is None:
            raise ConfigError("module 'S' needs a ring context")
        return PresentedModule.free(default_ring, (0,))
    if spec == "Q":
        if default_ring is None:
            raise ConfigError("module 'Q' needs a ring context")
        return PresentedModule.quotient_ring(default_ring,
                                             list(default_ring.gens()))
    if not isinstance(spec, dict):
        raise ConfigError(f"cannot resolve module from {spec!r}")
    ring = _resolve_ring(spec["ring"], catalog) if "ring" in spec else default_ring
    if ring is None:
        raise ConfigError("module spec needs a ring")
    gens = spec.get("generators", [0])
    rels = []
    try:
        for row in spec.get("relations", []):
            rels.append([ring.parse(p) for p in row])
    except ParseError as exc:
        raise ConfigError(f"bad polynomial in module spec: {exc}") from exc
    try:
        return PresentedModule(ring, gens, rels)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _inclusion(catalog, name):
    try:
        return catalog.inclusion(name)
    except KeyError as exc:
        raise ConfigError(str(exc)) from exc


# -- task runners ----------------------------------------------------------------

def task_resolve(catalog, args, window, depth, tower_depth):
    m = _resolve_module(args.get("module"), catalog)
    res = minimal_free_resolution(m)
    return {
        "steps": [list(s) for s in res.step_degrees],
        "length": res.length,
    }, None


def task_ext(catalog, args, window, depth, tower_depth):
    ring = _resolve_ring(args["ring"], catalog) if "ring" in args else None
    m = _resolve_module(args.get("module"), catalog, ring)
    n = _resolve_module(args.get("other", "S"), catalog, m.ring)
    table = ext_table(m, n, window)
    return {"table": table.to_json()}, None


def task_tor(catalog, args, window, depth, tower_depth):
    ring = _resolve_ring(args["ring"], catalog) if "ring" in args else None
    m = _resolve_module(args.get("module"), catalog, ring)
    n = _resolve_module(args.get("other", "S"), catalog, m.ring)
    table = tor_table(m, n, window)
    return {"table": table.to_json()}, None


def task_gorenstein(catalog, args, window, depth, tower_depth):
    names = [args["inclusion"]] if args.get("inclusion") else \
        sorted(catalog.inclusions)
    results = {}
    ok = True
    for name in names:
        inc = _inclusion(catalog, name)
        rep = gorenstein_shift(inc.theta, expected=inc.codim)
        results[name] = rep.to_json()
        ok = ok and bool(rep.match)
    return {"inclusions": results}, ok


def task_shift_iso(catalog, args, window, depth, tower_depth):
    inc = _inclusion(catalog, args["inclusion"])
    m = _resolve_module(args.get("module", "S"), catalog, inc.big.ring)
    ok, rep = shift_iso_check(inc.theta, m, window)
    return rep, ok


def task_freeness(catalog, args, window, depth, tower_depth):
    names = [args["inclusion"]] if args.get("inclusion") else \
        sorted(catalog.inclusions)
    results = {}
    ok = True
    for name in names:
        inc = _inclusion(catalog, name)
        m_r = restrict_scalars(inc.theta,
                               PresentedModule.free(inc.small.ring, (0,)))
        free, degrees = is_free(m_r)
        equal_rank = inc.big.rank == inc.small.rank
        agree = free == equal_rank
        results[name] = {
            "free": free,
            "basis_degrees": list(degrees) if degrees else None,
            "equal_rank": equal_rank,
            "agree": agree,
        }
        ok = ok and agree
    return {"inclusions": results}, ok


def task_local_cohomology(catalog, args, window, depth, tower_depth):
    ring = _resolve_ring(args["ring"], catalog) if "ring" in args else None
    m = _resolve_module(args.get("module", "S"), catalog, ring)
    tower = local_cohomology_koszul(m, list(m.ring.gens()), window, tower_depth)
    dual = local_cohomology_duality(m, window)
    mismatches = []
    for i in range(tower.nrows + 1):
        for d in window:
            if tower.is_certified(i, d) and tower.dim(i, d) != dual.dim(i, d):
                mismatches.append([i, d, tower.dim(i, d), dual.dim(i, d)])
    ok = not mismatches
    return {
        "koszul": tower.to_json(),
        "duality": dual.to_json(),
        "mismatches": mismatches,
    }, ok


def task_base_change(catalog, args, window, depth, tower_depth):
    inc = _inclusion(catalog, args["inclusion"])
    m = _resolve_module(args.get("module", "S"), catalog, inc.small.ring)
    ok1, rep1 = check_cohomology_base_change(inc.theta, m, window, tower_depth)
    ok2, rep2 = check_homology_base_change(inc.theta, m, window)
    return {"cohomology": rep1, "homology": rep2}, ok1 and ok2


def task_torsion(catalog, args, window, depth, tower_depth):
    ring = _resolve_ring(args["ring"], catalog) if "ring" in args else None
    m = _resolve_module(args.get("module"), catalog, ring)
    t = torsion_submodule(m, list(m.ring.gens()))
    dual = local_cohomology_duality(m, window)
    mismatches = [[d, t.piece_dim(d), dual.dim(0, d)]
                  for d in window if t.piece_dim(d) != dual.dim(0, d)]
    return {
        "torsion_dims": {str(d): t.piece_dim(d) for d in window
                         if t.piece_dim(d)},
        "mismatches": mismatches,
    }, not mismatches


def task_mates_verify(catalog, args, window, depth, tower_depth):
    if args.get("file"):
        with open(args["file"], "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        report = decide_from_json(doc, depth=depth)
        return report, report["passed"]
    names = [args["corpus"]] if args.get("corpus") else corpus_names()
    out = {}
    ok = True
    for name in names:
        if name not in corpus_names():
            raise ConfigError(f"unknown corpus {name!r}")
        rep = verify_corpus(name, depth=depth)
        out[name] = rep
        ok = ok and rep["passed"]
    return out, ok


def task_full_suite(catalog, args, window, depth, tower_depth):
    results = {}
    ok = True

    gor, gok = task_gorenstein(catalog, {}, window, depth, tower_depth)
    results["gorenstein"] = {
        name: rep["detected"] for name, rep in gor["inclusions"].items()}
    ok = ok and gok

    fr, fok = task_freeness(catalog, {}, window, depth, tower_depth)
    results["freeness"] = {
        name: rep["agree"] for name, rep in fr["inclusions"].items()}
    ok = ok and fok

    shift_results = {}
    for name in sorted(catalog.inclusions):
        inc = catalog.inclusion(name)
        sok, _rep = shift_iso_check(
            inc.theta, PresentedModule.free(inc.big.ring, (0,)), window)
        shift_results[name] = sok
        ok = ok and sok
    results["shift_iso_on_S"] = shift_results

    mates, mok = task_mates_verify(catalog, {}, window, depth, tower_depth)
    results["mates"] = {name: rep["passed"] for name, rep in mates.items()}
    ok = ok and mok

    lc_window = DegreeWindow(max(window.lo, -20), min(window.hi, 10))
    lc_results = {}
    for gname in sorted(catalog.groups):
        ring = catalog.group(gname).ring
        if not ring.ngens:
            continue
        _out, lok = task_local_cohomology(
            catalog, {"module": "S", "ring": gname}, lc_window, depth,
            tower_depth)
        lc_results[gname] = lok
        ok = ok and lok
    results["local_cohomology_on_S"] = lc_results
    return results, ok


TASKS = {
    "resolve": task_resolve,
    "ext": task_ext,
    "tor": task_tor,
    "gorenstein": task_gorenstein,
    "shift-iso": task_shift_iso,
    "local-cohomology": task_local_cohomology,
    "base-change": task_base_change,
    "torsion": task_torsion,
    "freeness": task_freeness,
    "mates-verify": task_mates_verify,
    "full-suite": task_full_suite,
}


def run(config):
    """Execute a TaskConfig dict; returns (report dict, exit code)."""
    try:
        catalog_spec = config.get("catalog", "builtin")
        catalog = builtin_catalog() if catalog_spec == "builtin" \
            else load_catalog(catalog_spec)
        report = {"schema": SCHEMA, "tasks": [], "pass": True}
        for task in config.get("tasks", []):
            kind = task.get("kind")
            if kind not in TASKS:
                raise ConfigError(f"unknown task kind {kind!r}")
            window = parse_window(task.get("window", config.get("window",
                                                                "-40:40")))
            depth = int(task.get("depth", config.get("depth", 8)))
            tower = int(task.get("tower_depth", config.get("tower_depth", 12)))
            t0 = time.perf_counter()
            result, verdict = TASKS[kind](catalog, task, window, depth, tower)
            entry = {
                "kind": kind,
                "inputs": {k: v for k, v in task.items() if k != "kind"},
                "result": result,
                "pass": verdict,
                "time_s": round(time.perf_counter() - t0, 6),
            }
            report["tasks"].append(entry)
            if verdict is False:
                report["pass"] = False
    except (ConfigError, ParseError, KeyError) as exc:
        return {"schema": SCHEMA, "error": str(exc)}, 2
    except ValueError as exc:
        return {"schema": SCHEMA, "error": str(exc)}, 2
    return report, 0 if report["pass"] else 1


def _format_table(report, out):
    if "error" in report:
        print(f"error: {report['error']}", file=out)
        return
    for task in report["tasks"]:
        verdict = {True: "pass", False: "FAIL", None: "done"}[task["pass"]]
        print(f"[{verdict}] {task['kind']} ({task['time_s']:.2f}s)", file=out)
        result = task["result"]
        if task["kind"] == "gorenstein":
            for name, rep in sorted(result["inclusions"].items()):
                print(f"    {name:16s} shift={rep['detected']} "
                      f"expected={rep['expected']} match={rep['match']}",
                      file=out)
        elif task["kind"] in ("ext", "tor"):
            entries = result["table"]["entries"]
            for i, d, v in entries:
                print(f"    ({i}, {d}) -> {v}", file=out)
        elif isinstance(result, dict):
            for key in sorted(result):
                val = result[key]
                if isinstance(val, dict) and len(val) > 8:
                    val = f"<{len(val)} entries>"
                print(f"    {key}: {val}", file=out)
    print(f"overall: {'pass' if report.get('pass') else 'FAIL'}", file=out)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="extor",
        description="Exact workbench for graded change-of-rings homological "
                    "algebra and mates-calculus verification.")
    parser.add_argument("--catalog", default="builtin",
                        help="'builtin' or path to a catalog JSON file")
    parser.add_argument("--window", default="-40:40", help="LO:HI")
    parser.add_argument("--depth", type=int, default=8,
                        help="mates rewrite search depth")
    parser.add_argument("--tower-depth", type=int, default=12,
                        help="Koszul tower depth")
    parser.add_argument("--format", choices=("json", "table"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run a TaskConfig JSON file")
    run_p.add_argument("config")

    for kind in TASKS:
        p = sub.add_parser(kind)
        if kind in ("resolve", "ext", "tor", "torsion", "local-cohomology"):
            p.add_argument("--ring", help="catalog group name")
            p.add_argument("--module", help="module JSON or 'S'/'Q'",
                           default="S")
        if kind in ("ext", "tor"):
            p.add_argument("--other", help="second module JSON or 'S'/'Q'",
                           default="S")
        if kind in ("gorenstein", "freeness", "mates-verify"):
            pass
        if kind in ("gorenstein", "freeness"):
            p.add_argument("--inclusion", help="e.g. 'SU(3)>SU(2)'; "
                                               "default: all")
        if kind in ("shift-iso", "base-change"):
            p.add_argument("--inclusion", required=True)
            p.add_argument("--module", default="S")
        if kind == "mates-verify":
            p.add_argument("--corpus", help="builtin corpus name;"
                                            " default: all")
            p.add_argument("--file", help="signature+diagram JSON file")

    args = parser.parse_args(argv)

    if args.command == "run":
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                config = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            print(json.dumps({"schema": SCHEMA, "error": str(exc)}))
            return 2
    else:
        task = {"kind": args.command}
        for key in ("ring", "module", "other", "inclusion", "corpus", "file"):
            val = getattr(args, key.replace("-", "_"), None)
            if val is not None:
                task[key] = val
        if isinstance(task.get("module"), str) and \
                task["module"].lstrip().startswith("{"):
            task["module"] = json.loads(task["module"])
        if isinstance(task.get("other"), str) and \
                task["other"].lstrip().startswith("{"):
            task["other"] = json.loads(task["other"])
        config = {
            "schema": SCHEMA,
            "catalog": args.catalog,
            "window": args.window,
            "depth": args.depth,
            "tower_depth": args.tower_depth,
            "tasks": [task],
        }

    report, code = run(config)
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        _format_table(report, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
