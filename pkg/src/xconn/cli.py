"""Command line entry point ``xconn``.

Exit codes: 0 pass, 1 fail, 2 unknown (budget exhausted).
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys

from . import formulas, harness
from .extra import (FINITE, INFINITE, WorkLimitExceeded, build_block_cut, build_layer_path_cut,
                    kappa_g_oracle, kappa_g_search)
from .families import build
from .graph import Graph, GraphError, read_edge_list, write_edge_list
from .invariants import girth, hypothesis_report, vertex_connectivity
from .pmc import (is_t_diagnosable_exhaustive, is_t_diagnosable_sampled, theorem41_preconditions,
                  witness_pair)
from .products import ProductGraph, cartesian_product, strong_product


def _load(spec: str):
    if os.path.isfile(spec):
        with open(spec, encoding="utf-8") as fh:
            return read_edge_list(fh.read(), name=os.path.basename(spec))
    return build(spec)


def _graph(obj) -> Graph:
    return obj.graph if isinstance(obj, ProductGraph) else obj


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows(rows: list[dict], fmt: str) -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
    lines = ["  ".join(c.ljust(widths[c]) for c in cols)]
    lines += ["  ".join(str(r[c]).ljust(widths[c]) for c in cols) for r in rows]
    return "\n".join(lines) + "\n"


def cmd_gen(args) -> int:
    obj = _load(args.spec)
    comments = [obj.numbering_comment()] if isinstance(obj, ProductGraph) else [args.spec]
    _write(write_edge_list(_graph(obj), comments), args.out)
    return 0


def cmd_product(args) -> int:
    G1, G2 = _graph(_load(args.spec1)), _graph(_load(args.spec2))
    P = (strong_product if args.kind == "strong" else cartesian_product)(G1, G2)
    _write(write_edge_list(P.graph, [P.numbering_comment()]), args.out)
    return 0


def cmd_invariant(args) -> int:
    G = _graph(_load(args.spec))
    row = {"graph": args.spec}
    everything = args.report or not (args.girth or args.kappa)
    if everything:
        row.update(hypothesis_report(G).as_row())
    else:
        if args.girth:
            gv = girth(G)
            row["girth"] = "inf" if gv == float("inf") else gv
        if args.kappa:
            row["kappa"] = vertex_connectivity(G)
    _write(_rows([row], args.format), None)
    return 0


def _result_row(spec, res) -> dict:
    return {
        "graph": spec,
        "g": res.g,
        "method": res.method,
        "status": res.status,
        "value": res.display_value(),
        "S": " ".join(map(str, sorted(res.witness.S))) if res.witness else "",
        "component_sizes": " ".join(map(str, res.witness.component_sizes)) if res.witness else "",
        "nodes": res.nodes_explored,
        "elapsed_ms": int(res.elapsed * 1000),
    }


def cmd_extra(args) -> int:
    G = _graph(_load(args.spec))
    results = []
    try:
        if args.method in ("search", "both"):
            results.append(kappa_g_search(G, args.g, budget_nodes=args.budget_nodes,
                                          timeout=args.timeout))
        if args.method in ("oracle", "both"):
            results.append(kappa_g_oracle(G, args.g, size_cap=args.size_cap,
                                          max_work=args.max_work))
    except WorkLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _write(_rows([_result_row(args.spec, r) for r in results], args.format), None)
    if args.emit_cert and results[0].witness is not None:
        _write(results[0].witness.to_text(), args.emit_cert)
    if any(not r.known for r in results):
        return 2
    if len({(r.status, r.value) for r in results}) > 1:
        return 1
    return 0


def cmd_gadget(args) -> int:
    obj = _load(args.spec)
    if not isinstance(obj, ProductGraph):
        print("error: gadget cuts need a product spec", file=sys.stderr)
        return 2
    if args.block:
        cert = build_block_cut(obj, g=args.g)
    else:
        cert = build_layer_path_cut(obj, args.g, axis=args.axis)
    _write(cert.to_text(), args.emit_cert)
    return 0 if cert.valid else 1


def cmd_formula(args) -> int:
    rows = [{"formula": name, "g": args.g, "k1": args.k1, "k2": args.k2, "value": v}
            for name, v in formulas.formula_table(args.g, args.k1, args.k2, args.which)]
    _write(_rows(rows, args.format), None)
    if args.plot:
        from .plotting import plot_formula_curves
        plot_formula_curves(args.plot)
    return 0


def cmd_pmc(args) -> int:
    G = _graph(_load(args.spec))
    if args.exhaustive_t is not None:
        v = is_t_diagnosable_exhaustive(G, args.g, args.exhaustive_t, strict=args.strict)
    elif args.sample_t is not None:
        v = is_t_diagnosable_sampled(G, args.g, args.sample_t, args.samples, seed=args.seed,
                                     strict=args.strict, workers=args.workers)
    else:
        res = kappa_g_search(G, args.g, budget_nodes=args.budget_nodes, timeout=args.timeout)
        if res.status != FINITE:
            print(f"kappa_{args.g}: {res.display_value()}")
            return 2 if res.status != INFINITE else 1
        A = harness.smallest_boundary_set(G, args.g)
        if A is None:
            print("no connected (g+1)-set has a g-extra cut as boundary")
            return 1
        wp = witness_pair(G, A, args.g)
        pre = theorem41_preconditions(G, args.g, res.value, A)
        row = {
            "kappa_g": res.value, "A": " ".join(map(str, sorted(A))),
            "F1": len(wp.pair.R1), "F2": len(wp.pair.R2),
            "indistinguishable": not wp.pair.distinguishable,
            "upper_bound": wp.certified_upper_bound, "preconditions": pre,
        }
        _write(_rows([row], args.format), None)
        return 0
    ce = v.counterexample
    row = {"mode": v.mode, "g": v.g, "t": v.t, "holds": v.holds, "pairs": v.pairs_checked,
           "R1": " ".join(map(str, sorted(ce.R1))) if ce else "",
           "R2": " ".join(map(str, sorted(ce.R2))) if ce else ""}
    _write(_rows([row], args.format), None)
    return 0 if v.holds else 1


def cmd_verify(args) -> int:
    report = harness.run_suite(args.suite, budget_nodes=args.budget_nodes, timeout=args.timeout,
                               seed=args.seed, workers=args.workers)
    _write(harness.emit_report(report, args.format), args.out)
    if args.witnesses:
        _write(harness.emit_witnesses(report), args.witnesses)
    if args.plot:
        from .plotting import plot_report
        plot_report(report, args.plot)
    return report.exit_code


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="xconn", description="g-extra connectivity of graph products")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, budget=True):
        sp.add_argument("--format", choices=("table", "csv"), default="table")
        if budget:
            sp.add_argument("--budget-nodes", type=int, default=None)
            sp.add_argument("--timeout", type=float, default=None)

    sp = sub.add_parser("gen", help="write a family graph as an edge list")
    sp.add_argument("spec")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("product", help="write a product of two graphs as an edge list")
    sp.add_argument("spec1")
    sp.add_argument("spec2")
    sp.add_argument("--kind", choices=("strong", "cartesian"), default="strong")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_product)

    sp = sub.add_parser("invariant", help="girth, connectivity and hypothesis report")
    sp.add_argument("spec")
    sp.add_argument("--girth", action="store_true")
    sp.add_argument("--kappa", action="store_true")
    sp.add_argument("--report", action="store_true")
    common(sp, budget=False)
    sp.set_defaults(func=cmd_invariant)

    sp = sub.add_parser("extra", help="exact g-extra connectivity")
    sp.add_argument("spec")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--method", choices=("oracle", "search", "both"), default="search")
    sp.add_argument("--size-cap", type=int, default=None)
    sp.add_argument("--max-work", type=int, default=50_000_000)
    sp.add_argument("--emit-cert")
    common(sp)
    sp.set_defaults(func=cmd_extra)

    sp = sub.add_parser("gadget", help="layer-path or block cut certificate on a product")
    sp.add_argument("spec")
    sp.add_argument("--g", type=int, default=1)
    sp.add_argument("--axis", type=int, choices=(1, 2), default=1)
    sp.add_argument("--block", action="store_true")
    sp.add_argument("--emit-cert")
    sp.set_defaults(func=cmd_gadget)

    sp = sub.add_parser("formula", help="evaluate closed forms")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--k1", type=int, required=True)
    sp.add_argument("--k2", type=int, required=True)
    sp.add_argument("--which", nargs="+", choices=formulas.FORMULA_NAMES)
    sp.add_argument("--plot")
    common(sp, budget=False)
    sp.set_defaults(func=cmd_formula)

    sp = sub.add_parser("pmc", help="PMC distinguishability checks")
    sp.add_argument("spec")
    sp.add_argument("--g", type=int, required=True)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--witness", action="store_true")
    mode.add_argument("--exhaustive-t", type=int)
    mode.add_argument("--sample-t", type=int)
    sp.add_argument("--samples", type=int, default=100_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--strict", action="store_true", help="fault sets must disconnect G")
    common(sp)
    sp.set_defaults(func=cmd_pmc)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=harness.SUITES, default="smoke")
    sp.add_argument("--out")
    sp.add_argument("--witnesses", help="write per-case witness cuts to this file")
    sp.add_argument("--plot", help="write an expected-vs-computed figure")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, harness.ManifestError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
