"""Verification suites binding solver output to the closed forms.

A suite manifest has one case per line::

    <spec1> <spec2> <g> <method> <budget>

``method`` selects the check:

=================  ==========================================================
flow               kappa(strong) by max-flow, expected kappa0 formula (g = 0)
search / oracle    kappa_g(strong) by one solver; ``budget`` is its node /
                   subset limit (0 = default)
both               both solvers, which must agree with each other
witness            PMC upper-bound pair; expected ``M + g``
sample             Monte-Carlo refutation at ``t = M + g``; budget = samples
identity ...       formula checks (identity, symmetry, monotone, cycle) over
                   ``k1:a-b`` x ``k2:a-b``
=================  ==========================================================

``@include <suite>`` splices another manifest in.  Blank lines and ``#``
comments are ignored.
"""

from __future__ import annotations

import csv
import io
import platform
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from importlib import resources

from . import formulas
from .extra import FINITE, kappa_g_oracle, kappa_g_search
from .families import generate
from .graph import Graph, boundary_mask, from_mask
from .invariants import HypothesisReport, hypothesis_report, vertex_connectivity
from .pmc import is_t_diagnosable_sampled, theorem41_preconditions, witness_pair
from .products import strong_product

SUITES = ("smoke", "g1", "g2", "g3", "pmc", "formulas", "full")
CSV_COLUMNS = ("factor1", "factor2", "g", "expected", "computed", "status", "nodes", "elapsed_ms")

PASS, FAIL, UNKNOWN, SKIPPED = "pass", "fail", "unknown", "skipped(hypothesis)"

EXTRA_METHODS = ("flow", "search", "oracle", "both")
PMC_METHODS = ("witness", "sample")
FORMULA_METHODS = ("identity", "symmetry", "monotone", "cycle")


class ManifestError(ValueError):
    pass


@dataclass(frozen=True)
class CaseSpec:
    factor1: str
    factor2: str
    g: int
    method: str
    budget: int


@dataclass
class VerificationCase:
    factor1_spec: str
    factor2_spec: str
    g: int
    method: str
    expected: object = None
    computed: object = None
    status: str = UNKNOWN
    nodes: int = 0
    elapsed_ms: int = 0
    detail: str = ""
    witness: tuple[int, ...] | None = None

    def row(self) -> dict:
        return {
            "factor1": self.factor1_spec,
            "factor2": self.factor2_spec,
            "g": self.g,
            "expected": "" if self.expected is None else self.expected,
            "computed": "" if self.computed is None else self.computed,
            "status": self.status,
            "nodes": self.nodes,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass
class Report:
    suite: str
    cases: list[VerificationCase] = field(default_factory=list)
    environment: dict = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        statuses = {c.status for c in self.cases}
        if FAIL in statuses:
            return 1
        if UNKNOWN in statuses:
            return 2
        return 0


# -- manifests --------------------------------------------------------------

def _manifest_text(name: str) -> str:
    try:
        return resources.files("xconn").joinpath("suites", f"{name}.txt").read_text()
    except FileNotFoundError:
        raise ManifestError(f"unknown suite {name!r}") from None


def parse_manifest(text: str, _seen: tuple[str, ...] = ()) -> list[CaseSpec]:
    cases = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("@include"):
            target = line.split()[1]
            if target in _seen:
                raise ManifestError(f"include cycle through {target!r}")
            cases.extend(parse_manifest(_manifest_text(target), _seen + (target,)))
            continue
        parts = line.split()
        if len(parts) != 5:
            raise ManifestError(f"line {lineno}: expected 5 fields, got {raw!r}")
        f1, f2, g, method, budget = parts
        if method not in EXTRA_METHODS + PMC_METHODS + FORMULA_METHODS:
            raise ManifestError(f"line {lineno}: unknown method {method!r}")
        try:
            cases.append(CaseSpec(f1, f2, int(g), method, int(budget)))
        except ValueError:
            raise ManifestError(f"line {lineno}: g and budget must be integers") from None
    return cases


def load_suite(name: str) -> list[CaseSpec]:
    if name not in SUITES:
        raise ManifestError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return parse_manifest(_manifest_text(name), (name,))


# -- case execution ---------------------------------------------------------

def _factor_reports(spec: CaseSpec) -> tuple[Graph, Graph, HypothesisReport, HypothesisReport]:
    G1, G2 = generate(spec.factor1), generate(spec.factor2)
    return G1, G2, hypothesis_report(G1), hypothesis_report(G2)


def _qualifies(rep: HypothesisReport, g: int) -> bool:
    return rep.qualifies_for_g is not None and rep.qualifies_for_g >= g


def _extra_case(spec: CaseSpec, case: VerificationCase, budget_nodes, timeout) -> None:
    G1, G2, r1, r2 = _factor_reports(spec)
    if not (_qualifies(r1, spec.g) and _qualifies(r2, spec.g)):
        case.status = SKIPPED
        case.detail = f"factor qualifies_for_g = ({r1.qualifies_for_g}, {r2.qualifies_for_g})"
        return
    case.expected = formulas.kappa_strong(spec.g, r1.k, r2.k, r1.girth, r2.girth, strict=True)
    G = strong_product(G1, G2).graph
    if spec.method == "flow":
        if spec.g != 0:
            raise ManifestError("flow cases need g = 0")
        case.computed = vertex_connectivity(G)
        case.status = PASS if case.computed == case.expected else FAIL
        return
    budget = spec.budget or budget_nodes
    kappa = vertex_connectivity(G)
    results = []
    if spec.method in ("search", "both"):
        results.append(kappa_g_search(G, spec.g, budget_nodes=budget, timeout=timeout, kappa=kappa))
    if spec.method in ("oracle", "both"):
        results.append(kappa_g_oracle(G, spec.g, max_work=spec.budget or 50_000_000))
    case.nodes = sum(r.nodes_explored for r in results)
    if any(r.status != FINITE for r in results):
        known = [r for r in results if r.known]
        case.status = FAIL if known else UNKNOWN
        case.computed = "/".join(r.display_value() for r in results)
        return
    values = {r.value for r in results}
    case.computed = results[0].value
    case.witness = tuple(sorted(results[0].witness.S))
    ok = len(values) == 1 and case.computed == case.expected and all(r.witness.valid for r in results)
    case.status = PASS if ok else FAIL
    if len(values) > 1:
        case.detail = "solvers disagree: " + "/".join(str(r.value) for r in results)


def smallest_boundary_set(G: Graph, g: int) -> frozenset[int] | None:
    """Connected (g+1)-set whose boundary is the smallest valid g-extra cut.

    Ties go to the lexicographically smallest set.
    """
    from .extra import is_g_extra_cut

    best = None
    size = g + 1

    def grow(a, ext, root):
        nonlocal best
        if a.bit_count() == size:
            s = boundary_mask(G, a)
            key = (s.bit_count(), tuple(from_mask(a)))
            if (best is None or key < best[0]) and is_g_extra_cut(G, from_mask(s), g).valid:
                best = (key, a)
            return
        # extension sets in the style of exclusive-neighbourhood enumeration
        while ext:
            low = ext & -ext
            ext ^= low
            v = low.bit_length() - 1
            new = (G.masks[v] & ~((1 << (root + 1)) - 1)) & ~a & ~boundary_mask(G, a) & ~(1 << root)
            grow(a | low, ext | new, root)

    for r in range(G.n):
        above = ~((1 << (r + 1)) - 1)
        grow(1 << r, G.masks[r] & above, r)
    return None if best is None else frozenset(from_mask(best[1]))


def _pmc_case(spec: CaseSpec, case: VerificationCase, budget_nodes, timeout, seed) -> None:
    G1, G2, r1, r2 = _factor_reports(spec)
    if not (_qualifies(r1, spec.g) and _qualifies(r2, spec.g)) or spec.g < 1:
        case.status = SKIPPED
        case.detail = f"factor qualifies_for_g = ({r1.qualifies_for_g}, {r2.qualifies_for_g})"
        return
    case.expected = formulas.diagnosability_formula(spec.g, r1.k, r2.k, r1.girth, r2.girth,
                                                    strict=True)
    G = strong_product(G1, G2).graph
    if spec.method == "witness":
        res = kappa_g_search(G, spec.g, budget_nodes=budget_nodes, timeout=timeout)
        case.nodes = res.nodes_explored
        if res.status != FINITE:
            case.status = UNKNOWN
            case.computed = res.display_value()
            return
        A = smallest_boundary_set(G, spec.g)
        wp = witness_pair(G, A, spec.g)
        pre = theorem41_preconditions(G, spec.g, res.value, A)
        case.computed = wp.certified_upper_bound
        case.witness = tuple(sorted(A))
        ok = (not wp.pair.distinguishable and wp.F1_admissible and wp.F2_admissible and pre
              and case.computed == case.expected and res.value + spec.g == case.expected)
        case.status = PASS if ok else FAIL
        case.detail = f"|F1|={len(wp.pair.R1)} |F2|={len(wp.pair.R2)} preconditions={pre}"
    else:
        verdict = is_t_diagnosable_sampled(G, spec.g, case.expected, spec.budget, seed=seed)
        case.nodes = verdict.pairs_checked
        case.computed = case.expected if verdict.holds else f"<{case.expected}"
        case.status = PASS if verdict.holds else FAIL
        case.detail = f"sampled seed={seed} admissible pairs={verdict.pairs_checked}"


def _parse_range(token: str) -> range:
    _, _, body = token.partition(":")
    lo, _, hi = body.partition("-")
    return range(int(lo), int(hi) + 1)


def _formula_case(spec: CaseSpec, case: VerificationCase) -> None:
    k1s, k2s = _parse_range(spec.factor1), _parse_range(spec.factor2)
    g = spec.g
    total = ok = 0
    for k1 in k1s:
        for k2 in k2s:
            total += 1
            if spec.method == "identity":
                good = formulas.M(g, k1, k2) == formulas.kappa_strong(g, k1, k2)
            elif spec.method == "symmetry":
                good = (formulas.M(g, k1, k2) == formulas.M(g, k2, k1)
                        and formulas.kappa_strong(g, k1, k2) == formulas.kappa_strong(g, k2, k1))
            elif spec.method == "monotone":
                vals = [formulas.kappa_strong(h, k1, k2) for h in range(g + 1)]
                good = vals == sorted(vals)
            else:  # cycle: ranges are cycle lengths; compare where girth >= g + 4
                if min(k1, k2) < g + 4:
                    total -= 1
                    continue
                good = formulas.cycle_product_formula(g, k1, k2) == formulas.M(g, 2, 2)
            ok += good
    case.expected = total
    case.computed = ok
    case.status = PASS if ok == total else FAIL


def run_case(spec: CaseSpec, budget_nodes=None, timeout=None, seed=0) -> VerificationCase:
    case = VerificationCase(spec.factor1, spec.factor2, spec.g, spec.method)
    t0 = time.perf_counter()
    if spec.method in EXTRA_METHODS:
        _extra_case(spec, case, budget_nodes, timeout)
    elif spec.method in PMC_METHODS:
        _pmc_case(spec, case, budget_nodes, timeout, seed)
    else:
        _formula_case(spec, case)
    case.elapsed_ms = int(round((time.perf_counter() - t0) * 1000))
    return case


def _run_case_args(args):
    return run_case(*args)


def run_suite(name: str, budget_nodes: int | None = None, timeout: float | None = None,
              seed: int = 0, workers: int = 1, cases: list[CaseSpec] | None = None) -> Report:
    specs = load_suite(name) if cases is None else cases
    env = {
        "suite": name,
        "budget_nodes": budget_nodes,
        "timeout": timeout,
        "seed": seed,
        "workers": workers,
        "python": platform.python_version(),
        "started": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }
    jobs = [(s, budget_nodes, timeout, seed) for s in specs]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_case_args, jobs))
    else:
        results = [run_case(*j) for j in jobs]
    return Report(name, results, env)


# -- output -----------------------------------------------------------------

def emit_report(report: Report, fmt: str = "table") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        for c in report.cases:
            w.writerow(c.row())
        return buf.getvalue()
    if fmt != "table":
        raise ValueError(f"unknown format {fmt!r}")
    rows = [dict(c.row(), method=c.method) for c in report.cases]
    cols = ("factor1", "factor2", "g", "method", "expected", "computed", "status", "nodes",
            "elapsed_ms")
    widths = {c: max([len(c)] + [len(str(r[c])) for r in rows]) for c in cols}
    lines = [f"# {k}: {v}" for k, v in report.environment.items()]
    lines.append("  ".join(c.ljust(widths[c]) for c in cols))
    lines.append("  ".join("-" * widths[c] for c in cols))
    for r in rows:
        lines.append("  ".join(str(r[c]).ljust(widths[c]) for c in cols))
    counts = {}
    for c in report.cases:
        counts[c.status] = counts.get(c.status, 0) + 1
    lines.append("# " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    return "\n".join(lines) + "\n"


def emit_witnesses(report: Report) -> str:
    """Witness cut per case, one line each, for archival diffing."""
    out = []
    for c in report.cases:
        w = "-" if c.witness is None else " ".join(map(str, c.witness))
        out.append(f"{c.factor1_spec} {c.factor2_spec} {c.g} {c.method}: {w}")
    return "\n".join(out) + "\n"
