"""Command-line interface.

Exit codes: 0 success (or all checks passed), 1 a verification suite
reported failures, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .eccentric import eccentric_graph, eccentricity_matrix
from .errors import EcclabError, InputError
from .families import FAMILIES, FamilySpec, build_family
from .intmatrix import determinant
from .products import ProductIndexMap, cartesian_product, kronecker_product_graph
from .serialize import (
    GraphDocument,
    graph_to_dict,
    graph_to_dot,
    load_graph,
    matrix_to_dict,
    save_graph,
)
from .suites import SUITE_NAMES, report_to_dict, run_suite
from .trees import ENUMERATION_MAX_VERTICES, random_tree

GEN_FAMILIES = FAMILIES + ("random-tree",)


def _write_output(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w") as fh:
            fh.write(text)


def _emit_document(doc: GraphDocument, output: Optional[str]) -> None:
    if output is None:
        json.dump(graph_to_dict(doc), sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        save_graph(doc, output)


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "random-tree":
        if len(args.params) != 1:
            raise InputError("random-tree takes exactly one parameter (vertex count)")
        t = random_tree(args.params[0], seed=args.seed)
        name = f"random-tree({args.params[0]}, seed={args.seed})"
        doc = GraphDocument(graph=t.graph, name=name)
    else:
        spec = FamilySpec(family=args.family, params=tuple(args.params))
        name = f"{args.family}({', '.join(map(str, args.params))})"
        doc = GraphDocument(graph=build_family(spec), name=name)
    _emit_document(doc, args.output)
    return 0


def cmd_ecc(args: argparse.Namespace) -> int:
    doc = load_graph(args.input)
    if args.matrix:
        matrix = eccentricity_matrix(doc.graph)
        _write_output(json.dumps(matrix_to_dict(matrix), indent=2) + "\n", args.output)
        return 0
    eg = eccentric_graph(doc.graph)
    out_doc = GraphDocument(graph=eg, name=doc.name, labels=doc.labels)
    if args.format == "dot":
        _write_output(graph_to_dot(out_doc), args.output)
    else:
        _emit_document(out_doc, args.output)
    return 0


def cmd_product(args: argparse.Namespace) -> int:
    docs = [load_graph(p) for p in args.inputs]
    graphs = [d.graph for d in docs]
    if args.kind == "cartesian":
        product, index_map = cartesian_product(graphs)
    else:
        if len(graphs) != 2:
            raise InputError("kronecker products take exactly two inputs")
        product = kronecker_product_graph(graphs[0], graphs[1])
        index_map = ProductIndexMap((graphs[0].num_vertices, graphs[1].num_vertices))
    name = f"{args.kind} product, row-major factor sizes {list(index_map.factor_sizes)}"
    _emit_document(GraphDocument(graph=product, name=name), args.output)
    return 0


def cmd_det(args: argparse.Namespace) -> int:
    doc = load_graph(args.input)
    sys.stdout.write(str(determinant(eccentricity_matrix(doc.graph))) + "\n")
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    report = run_suite(
        args.suite,
        trees_max_n=args.trees_max_n,
        samples=args.samples,
        seed=args.seed,
        jobs=args.jobs,
    )
    status = "PASS" if report.passed else "FAIL"
    print(f"{status} {report.check_name}: {report.pass_count} passed, "
          f"{report.fail_count} failed in {report.wall_time:.2f}s (seed {report.seed})")
    print(f"  corpus: {report.corpus}")
    if report.first_failure_witness is not None:
        print(f"  first failure: {json.dumps(report.first_failure_witness)}")
    report_path = args.report or f"{args.suite}-report.json"
    with open(report_path, "w") as fh:
        json.dump(report_to_dict(report), fh, indent=2)
        fh.write("\n")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ecclab",
        description="Eccentric graphs, eccentricity matrices, and product structure checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a named family graph as JSON")
    p_gen.add_argument("family", choices=GEN_FAMILIES)
    p_gen.add_argument("params", type=int, nargs="*")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("-o", "--output")
    p_gen.set_defaults(func=cmd_gen)

    p_ecc = sub.add_parser("ecc", help="eccentric graph or eccentricity matrix of a graph")
    p_ecc.add_argument("input")
    group = p_ecc.add_mutually_exclusive_group()
    group.add_argument("--matrix", action="store_true")
    group.add_argument("--graph", action="store_true")
    p_ecc.add_argument("--format", choices=("json", "dot"), default="json")
    p_ecc.add_argument("-o", "--output")
    p_ecc.set_defaults(func=cmd_ecc)

    p_prod = sub.add_parser("product", help="Cartesian or Kronecker product of graphs")
    p_prod.add_argument("inputs", nargs="+")
    p_prod.add_argument("--kind", choices=("cartesian", "kronecker"), default="cartesian")
    p_prod.add_argument("-o", "--output")
    p_prod.set_defaults(func=cmd_product)

    p_det = sub.add_parser("det", help="exact determinant of the eccentricity matrix")
    p_det.add_argument("input")
    p_det.set_defaults(func=cmd_det)

    p_check = sub.add_parser("check", help="run a named verification suite")
    p_check.add_argument("suite", choices=SUITE_NAMES)
    p_check.add_argument("--trees-max-n", type=int, default=ENUMERATION_MAX_VERTICES)
    p_check.add_argument("--samples", type=int, default=None)
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument(
        "--jobs", type=int, default=int(os.environ.get("ECCLAB_JOBS", "1"))
    )
    p_check.add_argument("--report", help="path for the JSON report")
    p_check.set_defaults(func=cmd_check)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EcclabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
