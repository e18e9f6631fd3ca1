"""``addcolor`` command line.

Exit codes: 0 success or verified, 1 verification failed or decision "no",
2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from . import families, gadgets, oracle, orderings, pipelines
from .core import FiniteAbelianGroup, Graph, GraphError, Labeling
from .io import FormatError, GraphDocument, graph_to_json, load_graph, load_json, vertex_map
from .listcolor import ListAssignment, SearchExhausted, list_additive_solve, tree_list_solve
from .modular import coloring_from_partition
from .verify import Certificate, bipartition, verify_additive

log = logging.getLogger("addcolor")

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(GraphError):
    pass


def _emit(args: argparse.Namespace, payload: Any) -> None:
    text = json.dumps(payload, indent=2)
    if getattr(args, "output", None):
        Path(args.output).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _budget(args: argparse.Namespace) -> oracle.SearchBudget:
    base = oracle.DEFAULT_BUDGET
    return oracle.SearchBudget(
        max_vertices=args.max_vertices or base.max_vertices,
        max_assignments=args.max_assignments or base.max_assignments,
        wall_clock=args.timeout,
    )


def _unwrap(obj: Any, *keys: str) -> Any:
    if isinstance(obj, dict):
        for key in keys:
            if key in obj:
                return obj[key]
    return obj


def _parse_moduli(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"cannot parse moduli {text!r}; expected e.g. 7,8,9,11") from None


def _labels(doc: GraphDocument, path: str | None, group: FiniteAbelianGroup | None) -> Labeling:
    if path:
        raw = vertex_map(load_json(path), doc.graph.n, "labels")
    elif doc.labels is not None:
        raw = vertex_map(doc.labels, doc.graph.n, "labels")
    else:
        raise UsageError("no labels: pass --labels or include \"labels\" in the graph file")
    if group is None:
        if not all(isinstance(x, int) for x in raw):
            raise UsageError("integer labels expected (pass --group for group labels)")
        return Labeling.integers(raw)
    return Labeling.in_group(group, raw)


def _partition(doc: GraphDocument, path: str | None) -> list[list[int]] | None:
    if path:
        parts = _unwrap(load_json(path), "partition", "parts")
        if not isinstance(parts, list) or not all(isinstance(p, list) for p in parts):
            raise UsageError(f"{path}: expected a list of vertex lists")
        return [[int(v) for v in p] for p in parts]
    return doc.partition


def _coloring(doc: GraphDocument, path: str | None) -> list[int]:
    if path:
        raw = _unwrap(load_json(path), "coloring", "colors", "partition")
    elif doc.partition is not None:
        raw = doc.partition
    else:
        raise UsageError("norin needs --coloring (or a partition in the graph file)")
    if isinstance(raw, list) and raw and all(isinstance(p, list) for p in raw):
        return coloring_from_partition(doc.graph.n, raw)
    return [int(c) for c in vertex_map(raw, doc.graph.n, "coloring")]


def _lists(doc: GraphDocument, path: str | None) -> list:
    if path:
        raw = _unwrap(load_json(path), "lists")
        return vertex_map(raw, doc.graph.n, "lists")
    if doc.lists is not None:
        return vertex_map(doc.lists, doc.graph.n, "lists")
    raise UsageError("no lists: pass --lists or include \"lists\" in the graph file")


def _certificate_exit(args: argparse.Namespace, cert: Certificate) -> int:
    _emit(args, cert.to_json())
    if not cert.verdict:
        log.warning("verification failed: %d conflicting edges", len(cert.conflicts))
    return EXIT_OK if cert.verdict else EXIT_NO


def cmd_verify(args: argparse.Namespace) -> int:
    doc = load_graph(args.graph)
    group = FiniteAbelianGroup.parse(args.group) if args.group else None
    cert = verify_additive(doc.graph, _labels(doc, args.labels, group))
    return _certificate_exit(args, cert)


def cmd_color(args: argparse.Namespace) -> int:
    doc = load_graph(args.graph)
    G = doc.graph
    method = args.method
    if method == "planar3":
        cert = pipelines.color_planar3(G, _partition(doc, args.partition))
    elif method == "planar4":
        cert = pipelines.color_planar4(G, _partition(doc, args.partition))
    elif method == "norin":
        order = None
        if args.order:
            order = [int(v) for v in _unwrap(load_json(args.order), "order")]
        cert = pipelines.color_norin(G, _coloring(doc, args.coloring), _parse_moduli(args.moduli), order)
    elif method == "girth13":
        decomposition = None
        if args.decomposition:
            raw = load_json(args.decomposition)
            if not isinstance(raw, dict) or "I" not in raw:
                raise UsageError(f"{args.decomposition}: expected {{\"I\": [...], \"F\": [...]}}")
            I = [int(v) for v in raw["I"]]
            F = [int(v) for v in raw.get("F", [v for v in range(G.n) if v not in set(I)])]
            decomposition = (I, F)
        cert = pipelines.color_girth13(G, decomposition)
    elif method in ("listbip", "tree"):
        lists = _lists(doc, args.lists)
        offsets = vertex_map(_unwrap(load_json(args.offsets), "offsets", "q"), G.n, "offsets") if args.offsets else None
        if method == "tree":
            f = tree_list_solve(G, lists, offsets)
        else:
            if bipartition(G) is None:
                raise UsageError("listbip needs a bipartite graph")
            f = list_additive_solve(G, ListAssignment.make(G.n, lists, offsets), k=args.indegree)
        cert = verify_additive(G, f, method)
        if offsets is not None:
            from .listcolor import list_edge_violations

            bad = tuple(list_edge_violations(G, f.values, offsets))
            cert = Certificate(f, cert.sums, not bad, bad, method, cert.max_label)
        doc_out = cert.to_json()
        if offsets is not None:
            doc_out["offsets"] = {str(v): _num(q) for v, q in enumerate(offsets)}
        _emit(args, _jsonable(doc_out))
        return EXIT_OK if cert.verdict else EXIT_NO
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown method {method}")
    bad = cert.details.get("stratification_violations")
    if bad:
        log.warning("stratification violations: %s", bad[:5])
    return _certificate_exit(args, cert)


def _num(x: Any) -> Any:
    from fractions import Fraction

    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    return x


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_jsonable(v) for v in obj]
    return _num(obj)


def cmd_order(args: argparse.Namespace) -> int:
    doc = load_graph(args.graph)
    G = doc.graph
    if args.hyper:
        if args.sides:
            raw = load_json(args.sides)
            X = [int(v) for v in _unwrap(raw, "X")]
            Y = [int(v) for v in raw["Y"]] if isinstance(raw, dict) and "Y" in raw else [v for v in range(G.n) if v not in set(X)]
        else:
            sides = bipartition(G)
            if sides is None:
                raise UsageError("--hyper needs a bipartite graph")
            X, Y = sides
        H, xs = orderings.bipartite_hypergraph(G, X, Y)
        res = orderings.hyper_order(H)
        payload = {
            "order": [xs[v] for v in res.order],
            "width": res.width,
            "backward_degrees": list(res.backward_degrees),
            "hyperedges": len(H.hyperedges),
        }
        if res.width > 12:
            log.warning("hypergraph width %d exceeds 12; the input is not planar", res.width)
    else:
        res = orderings.degeneracy_order(G)
        payload = {"order": list(res.order), "width": res.width, "backward_degrees": list(res.backward_degrees)}
    _emit(args, payload)
    return EXIT_OK


def cmd_eta(args: argparse.Namespace) -> int:
    G = load_graph(args.graph).graph
    budget = _budget(args)
    eta = oracle.eta_exact(G, args.max_k, budget)
    payload: dict[str, Any] = {"eta": eta if eta is not None else f">{args.max_k}"}
    if eta is not None:
        payload["witness"] = oracle.additive_labeling(G, eta, budget).display_values()
    _emit(args, payload)
    return EXIT_OK if eta is not None else EXIT_NO


def cmd_exists(args: argparse.Namespace) -> int:
    G = load_graph(args.graph).graph
    group = FiniteAbelianGroup.parse(args.group)
    ok, witness = oracle.group_additive_exists(G, group, _budget(args))
    payload: dict[str, Any] = {"group": str(group), "exists": ok}
    if witness is not None:
        payload["witness"] = witness.display_values()
    _emit(args, payload)
    return EXIT_OK if ok else EXIT_NO


def cmd_decide(args: argparse.Namespace) -> int:
    G = load_graph(args.graph).graph
    result = gadgets.z2_decide(G)
    payload: dict[str, Any] = {"problem": "z2", "colorable": result.colorable, "reason": result.reason}
    if result.witness is not None:
        payload["certificate"] = verify_additive(G, result.witness, "z2").to_json()
    _emit(args, payload)
    return EXIT_OK if result.colorable else EXIT_NO


def cmd_gadget(args: argparse.Namespace) -> int:
    if args.with_coloring:
        G, meta, f = gadgets.gr_explicit_coloring(args.r)
    else:
        G, meta = gadgets.build_gr(args.r)
    payload: dict[str, Any] = {
        "graph": graph_to_json(G),
        "copies": [
            {"a": cp.a, "b": cp.b, "c": cp.c, "v": cp.v, "X": list(cp.X), "Y": list(cp.Y)} for cp in meta.copies
        ],
        "hub": list(meta.hub),
    }
    code = EXIT_OK
    if args.with_coloring:
        cert = verify_additive(G, f, f"gr_explicit_Z{args.r + 1}")
        payload["certificate"] = cert.to_json()
        code = EXIT_OK if cert.verdict else EXIT_NO
    if args.nonexistence:
        group = FiniteAbelianGroup.parse(args.nonexistence)
        report = gadgets.gr_nonexistence(args.r, group, _budget(args))
        payload["nonexistence"] = {
            "group": str(group),
            "nonexistent": report.nonexistent,
            "assignments": report.assignments,
            "method": report.method,
        }
        if not report.nonexistent:
            code = EXIT_NO
    _emit(args, payload)
    return code


def cmd_reduce(args: argparse.Namespace) -> int:
    G = load_graph(args.graph).graph
    Gp = gadgets.np_reduction(G)
    payload: dict[str, Any] = {"graph": graph_to_json(Gp), "group": None}
    group = FiniteAbelianGroup.parse(args.group) if args.group else FiniteAbelianGroup.cyclic(args.order)
    payload["group"] = str(group)
    if args.coloring:
        c = vertex_map(_unwrap(load_json(args.coloring), "coloring", "colors"), G.n, "coloring")
        f = gadgets.lift_coloring(G, c, group.element(args.a) if isinstance(args.a, int) else args.a, group)
        cert = verify_additive(Gp, f, "np_lift")
        payload["certificate"] = cert.to_json()
        _emit(args, payload)
        return EXIT_OK if cert.verdict else EXIT_NO
    _emit(args, payload)
    return EXIT_OK


def cmd_antimagic(args: argparse.Namespace) -> int:
    G = load_graph(args.graph).graph
    found = oracle.antimagic_vertex_search(G, _budget(args))
    _emit(args, {"found": found is not None, "bijection": list(found) if found else None})
    return EXIT_OK if found is not None else EXIT_NO


def cmd_generate(args: argparse.Namespace) -> int:
    fam = families.generate_family(args.family, args.size, args.seed)
    _emit(args, graph_to_json(fam.graph, partition=fam.partition))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="addcolor", description="Additive colorings of graphs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, graph: bool = True) -> argparse.ArgumentParser:
        if graph:
            p.add_argument("--graph", required=True, help="graph JSON or edge-list file")
        p.add_argument("--output", "-o", help="write JSON here instead of stdout")
        return p

    def budgets(p: argparse.ArgumentParser) -> None:
        p.add_argument("--max-vertices", type=int)
        p.add_argument("--max-assignments", type=int)
        p.add_argument("--timeout", type=float, help="wall-clock cap in seconds")

    p = common(sub.add_parser("verify", help="check a labeling"))
    p.add_argument("--labels")
    p.add_argument("--group", help="labels live in this group, e.g. 3 or 2x2")
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("color", help="run a construction"))
    p.add_argument("--method", required=True, choices=["planar3", "planar4", "norin", "girth13", "listbip", "tree"])
    p.add_argument("--partition")
    p.add_argument("--coloring")
    p.add_argument("--moduli", default="7,8,9,11")
    p.add_argument("--order", help="JSON vertex order for norin")
    p.add_argument("--decomposition")
    p.add_argument("--lists")
    p.add_argument("--offsets")
    p.add_argument("--indegree", type=int)
    p.set_defaults(func=cmd_color)

    p = common(sub.add_parser("order", help="degeneracy / hypergraph ordering"))
    p.add_argument("--hyper", action="store_true")
    p.add_argument("--sides", help="JSON with X (and optionally Y)")
    p.set_defaults(func=cmd_order)

    p = common(sub.add_parser("eta", help="exact additive chromatic number"))
    p.add_argument("--max-k", type=int, default=6)
    budgets(p)
    p.set_defaults(func=cmd_eta)

    p = common(sub.add_parser("exists", help="additive coloring over a finite Abelian group"))
    p.add_argument("--group", required=True)
    budgets(p)
    p.set_defaults(func=cmd_exists)

    p = sub.add_parser("decide", help="decision procedures")
    dsub = p.add_subparsers(dest="problem", required=True)
    q = common(dsub.add_parser("z2"))
    q.set_defaults(func=cmd_decide)

    p = sub.add_parser("gadget", help="gadget constructions")
    gsub = p.add_subparsers(dest="gadget", required=True)
    q = common(gsub.add_parser("gr"), graph=False)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--with-coloring", action="store_true")
    q.add_argument("--nonexistence", metavar="GROUP", help="also search for a coloring over GROUP")
    budgets(q)
    q.set_defaults(func=cmd_gadget)

    p = sub.add_parser("reduce", help="reductions")
    rsub = p.add_subparsers(dest="reduction", required=True)
    q = common(rsub.add_parser("np"))
    q.add_argument("--order", type=int, default=3, help="cyclic group order (ignored with --group)")
    q.add_argument("--group")
    q.add_argument("--coloring", help="proper colouring to lift")
    q.add_argument("--a", type=int, default=1, help="nonzero lifting element")
    q.set_defaults(func=cmd_reduce)

    p = common(sub.add_parser("antimagic", help="vertex-antimagic bijection search"))
    budgets(p)
    p.set_defaults(func=cmd_antimagic)

    p = common(sub.add_parser("generate", help="emit a graph family member"), graph=False)
    p.add_argument("--family", required=True, choices=families.FAMILY_NAMES)
    p.add_argument("--size", type=int)
    p.add_argument("--seed", type=int, default=families.DEFAULT_SEED)
    p.set_defaults(func=cmd_generate)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except oracle.BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except SearchExhausted as exc:
        if "budget" in exc.status:
            print(f"budget exceeded: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        print(f"no solution: {exc}", file=sys.stderr)
        return EXIT_NO
    except (FormatError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
