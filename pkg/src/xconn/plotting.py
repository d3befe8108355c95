"""Figures written next to the delimited reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from . import formulas  # noqa: E402

STATUS_COLORS = {
    "pass": "#2b8a3e",
    "fail": "#c92a2a",
    "unknown": "#e67700",
    "skipped(hypothesis)": "#868e96",
}


def _numeric(v):
    try:
        return float(v)
    except (TypeError, ValueError):
        return None


def plot_report(report, path, title=None):
    """Expected vs computed value per case, bars coloured by status."""
    cases = [c for c in report.cases if _numeric(c.expected) is not None]
    fig, ax = plt.subplots(figsize=(max(6, 0.45 * len(cases) + 2), 4))
    xs = range(len(cases))
    exp = [_numeric(c.expected) for c in cases]
    got = [_numeric(c.computed) or 0.0 for c in cases]
    ax.bar([x - 0.2 for x in xs], exp, width=0.4, color="#dee2e6", edgecolor="k", label="expected")
    ax.bar([x + 0.2 for x in xs], got, width=0.4, edgecolor="k", label="computed",
           color=[STATUS_COLORS.get(c.status, "#495057") for c in cases])
    ax.set_xticks(list(xs))
    ax.set_xticklabels([f"{c.factor1_spec} x {c.factor2_spec}\ng={c.g} {c.method}" for c in cases],
                       rotation=60, ha="right", fontsize=7)
    ax.set_ylabel("value")
    ax.set_title(title or f"suite {report.suite}")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_formula_curves(path, k_max=8):
    """kappa_g(strong) against k for equal factor degrees, g = 0..3."""
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ks = list(range(2, k_max + 1))
    for g in range(4):
        ax.plot(ks, [formulas.kappa_strong(g, k, k) for k in ks], marker="o", ms=3, label=f"g={g}")
    ax.set_xlabel("k1 = k2")
    ax.set_ylabel("kappa_g")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
