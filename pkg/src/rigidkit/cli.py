"""``rigidkit`` command line."""
from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources
from pathlib import Path

from . import development as dev3
from .colored import Z2, ColoredGraph, GraphError, zk
from .cone import ConeRun
from .fixed_lattice import RossRun, decide_run
from .gamma import component_images
from .generators import GenSpec, cone_family, path_plus_chords, random_colored, random_suite, ross_family
from .graphio import ParseError, load, parse, serialize
from .oracle import OracleBoundError, OracleGraph, cone_laman, oracle_bound, ross

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


# -- loading and routing ---------------------------------------------------

def read_graph(path: str) -> ColoredGraph:
    try:
        if path == "-":
            return parse(sys.stdin.read())
        return load(path)
    except OSError as err:
        raise InputError(f"{path}: {err.strerror}") from None
    except ParseError as err:
        raise InputError(f"{path}: {err}") from None


def check_model(graph: ColoredGraph, model: str, k: int | None) -> None:
    if model == "fixed-lattice":
        if not graph.group.is_z2:
            raise InputError(f"model fixed-lattice needs a Z^2 graph, file has {graph.group}")
        if k is not None:
            raise InputError("--k only applies to the cone model")
        return
    if k is None:
        raise InputError("the cone model needs --k")
    if k < 2:
        raise InputError("--k must be at least 2")
    if graph.group.is_z2 or graph.group.modulus != k:
        raise InputError(f"--k {k} does not match the file's group {graph.group}")


def _components(comps) -> list[dict]:
    return [c.as_dict() for c in comps]


def _discarded(run) -> list[dict]:
    return [{"edge": e, "reason": r} for e, r in run.discarded]


def _base_doc(command: str, graph: ColoredGraph, model: str | None, k: int | None) -> dict:
    g = graph.group
    return {
        "command": command,
        "model": model,
        "k": k,
        "group": "z2" if g.is_z2 else f"zk {g.modulus}",
        "n": graph.n,
        "m": graph.m,
    }


def use_development(model: str, k: int | None, no_dev: bool) -> bool:
    return model == "cone" and k == 3 and not no_dev


def do_decide(graph, model, k, minimal=True, no_dev=False) -> dict:
    doc = _base_doc("decide", graph, model, k)
    doc["minimal"] = minimal
    if model == "fixed-lattice":
        target = 2 * graph.n - 2
        if minimal:
            run = decide_run(graph) if graph.m == target else None
            ok = run is not None and not run.discarded and len(run.kept) == target
            yes, no = "ross-graph", "not-ross"
        else:
            run = RossRun(graph).run()
            ok = len(run.kept) == target
            yes, no = "rigid", "not-rigid"
        doc["path"] = "general"
    else:
        target = 2 * graph.n - 1
        if minimal and use_development(model, k, no_dev):
            ok = dev3.cone3_decide(graph)
            run = None
            doc["path"] = "development"
        elif minimal:
            run = ConeRun(graph).run(stop_on_discard=True) if graph.m == target else None
            ok = run is not None and not run.discarded and len(run.kept) == target
            doc["path"] = "general"
        else:
            run = ConeRun(graph).run()
            ok = len(run.kept) == target
            doc["path"] = "general"
        yes, no = ("cone-laman", "not-cone-laman") if minimal else ("rigid", "not-rigid")
    if run is None and graph.m != target and doc.get("path") == "general":
        doc["note"] = f"edge count {graph.m} differs from {target}"
    doc["verdict"] = yes if ok else no
    doc["positive"] = ok
    if run is not None:
        doc["kept"] = list(run.kept)
        doc["discarded"] = _discarded(run)
    return doc


def _run(graph, model):
    return (RossRun if model == "fixed-lattice" else ConeRun)(graph).run()


def do_extract(graph, model, k) -> dict:
    doc = _base_doc("extract", graph, model, k)
    run = _run(graph, model)
    doc["kept"] = list(run.kept)
    doc["discarded"] = _discarded(run)
    doc["path"] = "general"
    return doc


def do_components(graph, model, k, no_dev=False) -> dict:
    doc = _base_doc("components", graph, model, k)
    if use_development(model, k, no_dev):
        comps, other = dev3.cone3_components(graph)
        doc["components"] = _components(comps)
        doc["diagnostics"] = {"non_symmetric_lifted_components": [
            {"vertices": sorted(s.vertices), "edges": sorted(s.edges)} for s in other]}
        doc["path"] = "development"
    else:
        run = _run(graph, model)
        doc["components"] = _components(run.components())
        doc["kept"] = list(run.kept)
        doc["discarded"] = _discarded(run)
        doc["path"] = "general"
    return doc


def do_image(graph) -> dict:
    doc = _base_doc("image", graph, None, None)
    parts = component_images(graph)
    doc["images"] = [{"vertices": vs, "trivial": t} for vs, t in parts]
    doc["verdict"] = "trivial" if all(t for _, t in parts) else "non-trivial"
    return doc


def _family(graph):
    return ross() if graph.group.is_z2 else cone_laman(graph.group.modulus)


def compare_with_oracle(graph: ColoredGraph, bound: int | None = None) -> list[str]:
    """Differences between the algorithms and the oracle on one graph."""
    og = OracleGraph(graph, bound)
    fam = _family(graph)
    model = "fixed-lattice" if graph.group.is_z2 else "cone"
    k = None if graph.group.is_z2 else graph.group.modulus
    out = []
    want_tight = graph.m == 2 * graph.n - fam.ell and og.is_sparse(fam)
    variants = [False, True] if k == 3 else [True]
    for no_dev in variants:
        got = do_decide(graph, model, k, True, no_dev)["positive"]
        if got != want_tight:
            out.append(f"decide ({'general' if no_dev else 'development'} path)"
                       f" gave {got}, oracle {want_tight}")
    run = _run(graph, model)
    if len(run.kept) != og.rank(fam):
        out.append(f"extract kept {len(run.kept)} edges, oracle maximum {og.rank(fam)}")
    if not og.is_sparse(fam, sum(1 << e for e in run.kept)):
        out.append("extracted edge set is not sparse")
    want = [sorted(c.vertices) for c in og.components(fam)]
    for no_dev in variants:
        got = [c["vertices"] for c in do_components(graph, model, k, no_dev)["components"]]
        if got != want:
            out.append(f"components {got} differ from oracle {want}")
    return out


def do_check(graph) -> dict:
    doc = _base_doc("check", graph, "fixed-lattice" if graph.group.is_z2 else "cone",
                    None if graph.group.is_z2 else graph.group.modulus)
    mism = compare_with_oracle(graph)
    doc["mismatches"] = mism
    doc["verdict"] = "match" if not mism else "mismatch"
    return doc


def corpus_graphs():
    """Bundled figure graphs by name."""
    base = resources.files("rigidkit") / "data"
    for entry in sorted(base.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".graph"):
            yield entry.name[:-6], parse(entry.read_text())


def do_check_corpus(random_count: int, seed: int) -> dict:
    doc = {"command": "check", "corpus": True, "graphs": 0, "mismatches": []}
    items = list(corpus_graphs())
    items += [(f"random-{seed}-{i}", g)
              for i, g in enumerate(random_suite(seed, random_count))]
    for name, g in items:
        doc["graphs"] += 1
        for msg in compare_with_oracle(g):
            doc["mismatches"].append(f"{name}: {msg}")
    doc["verdict"] = "match" if not doc["mismatches"] else "mismatch"
    return doc


# -- output ----------------------------------------------------------------

def _fmt_ids(ids) -> str:
    return " ".join(map(str, ids)) if ids else "-"


def render_text(doc: dict) -> str:
    lines = []
    if "verdict" in doc:
        lines.append(f"verdict: {doc['verdict']}")
    if "path" in doc:
        lines.append(f"path: {doc['path']}")
    if "note" in doc:
        lines.append(f"note: {doc['note']}")
    if "kept" in doc:
        lines.append(f"kept: {_fmt_ids(doc['kept'])}")
    if doc.get("discarded"):
        lines.append("discarded: " + ", ".join(
            f"{d['edge']} ({d['reason']})" for d in doc["discarded"]))
    if "components" in doc:
        lines.append(f"components: {len(doc['components'])}")
        for c in doc["components"]:
            lines.append(f"  vertices {_fmt_ids(c['vertices'])}; edges {_fmt_ids(c['edges'])}")
    if "images" in doc:
        for part in doc["images"]:
            kind = "trivial" if part["trivial"] else "non-trivial"
            lines.append(f"  {kind}: vertices {_fmt_ids(part['vertices'])}")
    if "graphs" in doc:
        lines.append(f"graphs checked: {doc['graphs']}")
    if doc.get("mismatches"):
        lines.extend(f"  {m}" for m in doc["mismatches"])
    if "lemmas" in doc:
        for r in doc["lemmas"]:
            status = "ok" if r["failures"] == 0 else "FAIL"
            extra = f", {r['skipped']} skipped" if r["skipped"] else ""
            lines.append(f"  {r['name']}: {status} ({r['instances']} instances{extra})")
            lines.extend(f"    reproducer: {p}" for p in r["reproducers"])
    if "report" in doc:
        for name, info in doc["report"].items():
            bound = "" if info["limit"] is None else f" (limit {info['limit']})"
            lines.append(f"  {name}: slope {info['slope']:.2f}{bound}; {info['png']}")
    if "seconds" in doc:
        lines.append(f"time: {doc['seconds']:.4f}s")
    return "\n".join(lines)


def emit(doc: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(render_text(doc))


# -- argument parsing --------------------------------------------------------

def _model_args(p: argparse.ArgumentParser, dev: bool = True) -> None:
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--model", required=True, choices=["fixed-lattice", "cone"])
    p.add_argument("--k", type=int, help="rotation order (cone model)")
    if dev:
        p.add_argument("--no-dev", action="store_true",
                       help="for k=3, use the general cone algorithm")
    p.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rigidkit",
                                 description="Rigidity of periodic and cone frameworks.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("decide", help="is the graph minimally rigid?")
    _model_args(p)
    p.add_argument("--minimal", dest="minimal", action="store_true", default=True,
                   help="ask for a Ross / cone-Laman graph (default)")
    p.add_argument("--no-minimal", dest="minimal", action="store_false",
                   help="ask whether the graph contains a spanning one")
    p.add_argument("--strict", action="store_true", help="exit 1 on a negative verdict")

    p = sub.add_parser("extract", help="maximum independent edge set")
    _model_args(p, dev=False)

    p = sub.add_parser("components", help="rigid components")
    _model_args(p)

    p = sub.add_parser("image", help="per-component cycle-image triviality")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("develop", help="write the development of a Z/3Z graph")
    p.add_argument("file")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--format", choices=["graph", "dot"], default="graph")

    p = sub.add_parser("check", help="compare the algorithms with the oracle")
    p.add_argument("file", nargs="?")
    p.add_argument("--corpus", action="store_true",
                   help="check the bundled graphs plus seeded random graphs")
    p.add_argument("--random", type=int, default=1000, help="random graphs for --corpus")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("gen", help="generate a graph file")
    p.add_argument("family", choices=["random", "ross", "cone", "chords"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, help="edge count (random)")
    p.add_argument("--k", type=int, help="Z/kZ modulus (random, cone); omit for Z^2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--color-range", type=int, default=2)
    p.add_argument("--out")

    p = sub.add_parser("lemmas", help="run the structural lemma suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--z3-graphs", type=int, default=1000)
    p.add_argument("--colorings", type=int, default=8)
    p.add_argument("--out", help="directory for counterexample files")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("report", help="scaling sweeps: CSV tables and PNG plots")
    p.add_argument("--out", default="report")
    p.add_argument("--quick", action="store_true", help="small sizes only")
    p.add_argument("--json", action="store_true")
    return ap


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def run(args) -> int:
    t0 = time.perf_counter()
    cmd = args.cmd
    if cmd in ("decide", "extract", "components"):
        graph = read_graph(args.file)
        check_model(graph, args.model, args.k)
        if cmd == "decide":
            doc = do_decide(graph, args.model, args.k, args.minimal, args.no_dev)
        elif cmd == "extract":
            doc = do_extract(graph, args.model, args.k)
        else:
            doc = do_components(graph, args.model, args.k, args.no_dev)
        doc["seconds"] = time.perf_counter() - t0
        emit(doc, args.json)
        if cmd == "decide" and args.strict and not doc["positive"]:
            return EXIT_NEGATIVE
        return EXIT_OK
    if cmd == "image":
        doc = do_image(read_graph(args.file))
        doc["seconds"] = time.perf_counter() - t0
        emit(doc, args.json)
        return EXIT_OK
    if cmd == "develop":
        graph = read_graph(args.file)
        if graph.group.is_z2 or graph.group.modulus != 3:
            raise InputError("develop needs a Z/3Z graph")
        d = dev3.develop(graph)
        text = dev3.to_dot(d) if args.format == "dot" else serialize(dev3.lifted_graph(d))
        _write(text, args.out)
        return EXIT_OK
    if cmd == "check":
        if args.corpus:
            doc = do_check_corpus(args.random, args.seed)
        elif args.file:
            graph = read_graph(args.file)
            if graph.m > oracle_bound():
                raise InputError(f"{graph.m} edges exceed the oracle bound {oracle_bound()}"
                                 " (set RIGIDKIT_ORACLE_BOUND to raise it)")
            doc = do_check(graph)
        else:
            raise InputError("check needs a file or --corpus")
        doc["seconds"] = time.perf_counter() - t0
        emit(doc, args.json)
        return EXIT_OK if doc["verdict"] == "match" else EXIT_NEGATIVE
    if cmd == "gen":
        _write(serialize(generate(args)), args.out)
        return EXIT_OK
    if cmd == "lemmas":
        from .lemmas import lemma_suite
        results = lemma_suite(args.seed, {"z3_graphs": args.z3_graphs,
                                          "colorings": args.colorings}, args.out)
        doc = {"command": "lemmas", "lemmas": [r.as_dict() for r in results],
               "verdict": "pass" if all(r.ok for r in results) else "fail",
               "seconds": time.perf_counter() - t0}
        emit(doc, args.json)
        return EXIT_OK if doc["verdict"] == "pass" else EXIT_NEGATIVE
    if cmd == "report":
        from .report import run_report
        doc = {"command": "report", "report": run_report(args.out, args.quick),
               "seconds": time.perf_counter() - t0}
        emit(doc, args.json)
        return EXIT_OK
    raise AssertionError(cmd)


def generate(args) -> ColoredGraph:
    if args.n < 1:
        raise InputError("--n must be at least 1")
    if args.family == "ross":
        return ross_family(args.n)
    if args.family == "cone":
        if args.k is None or args.k < 2:
            raise InputError("cone family needs --k >= 2")
        return cone_family(args.n, args.k)
    if args.family == "chords":
        return path_plus_chords(args.n, args.seed)
    if args.m is None or args.m < 0:
        raise InputError("random family needs --m >= 0")
    if args.k is not None and args.k < 2:
        raise InputError("--k must be at least 2")
    group = Z2 if args.k is None else zk(args.k)
    return random_colored(GenSpec(args.seed, args.n, args.m, group, args.color_range))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except (InputError, GraphError, OracleBoundError) as err:
        print(f"rigidkit: error: {err}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
