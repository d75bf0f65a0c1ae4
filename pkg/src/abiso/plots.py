"""Figure rendering for verification reports.

Every suite gets a pass/fail breakdown by group order; suites whose cases
carry integer values additionally get an expected-versus-actual scatter.
Figures are written as PNG files next to the delimited case dump.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

from .report import VerificationReport  # noqa: E402

PASS_COLOR = "#2e7d32"
FAIL_COLOR = "#c62828"


def _group_order(literal: str) -> int:
    total = 1
    for tok in literal.replace(",", "x").split("x"):
        if tok.isdigit():
            total *= int(tok)
    return total


def render_pass_fail_by_order(report: VerificationReport, path: Path) -> Path:
    counts: dict[int, list[int]] = {}
    for c in report.cases:
        bucket = counts.setdefault(_group_order(c.group), [0, 0])
        bucket[0 if c.passed else 1] += 1
    orders = sorted(counts)
    passed = [counts[o][0] for o in orders]
    failed = [counts[o][1] for o in orders]
    xs = range(len(orders))

    fig, ax = plt.subplots(figsize=(max(6, len(orders) * 0.35), 4))
    ax.bar(xs, passed, color=PASS_COLOR, label="pass")
    ax.bar(xs, failed, bottom=passed, color=FAIL_COLOR, label="fail")
    ax.set_xticks(list(xs))
    ax.set_xticklabels([str(o) for o in orders], rotation=90, fontsize=7)
    ax.set_xlabel("group order")
    ax.set_ylabel("cases")
    ax.set_title(f"{report.suite}: {report.summary['passed']}/{report.summary['total']} cases pass")
    ax.legend(loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_value_scatter(report: VerificationReport, path: Path) -> Path | None:
    pts = [
        (_group_order(c.group), c.expected, c.actual, c.passed)
        for c in report.cases
        if isinstance(c.expected, int) and not isinstance(c.expected, bool)
    ]
    if not pts:
        return None
    fig, ax = plt.subplots(figsize=(6, 4.5))
    ok = [(e, a) for _, e, a, p in pts if p]
    bad = [(e, a) for _, e, a, p in pts if not p]
    if ok:
        ax.scatter([e for e, _ in ok], [a for _, a in ok], s=12, c=PASS_COLOR,
                   alpha=0.6, label="pass")
    if bad:
        ax.scatter([e for e, _ in bad], [a for _, a in bad], s=18, c=FAIL_COLOR,
                   marker="x", label="fail")
    top = max(max(e for _, e, _, _ in pts), max(a for _, _, a, _ in pts), 1)
    if top > 50:
        ax.set_xscale("symlog")
        ax.set_yscale("symlog")
    ax.plot([0, top], [0, top], lw=0.8, ls="--", c="gray")
    ax.set_xlabel("expected value")
    ax.set_ylabel("actual value")
    ax.set_title(f"{report.suite}: expected vs actual")
    ax.legend(loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_report_figures(report: VerificationReport, outdir: str | Path) -> list[Path]:
    """All figures for a report; returns the files written."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = [render_pass_fail_by_order(report, outdir / f"{report.suite}-by-order.png")]
    scatter = render_value_scatter(report, outdir / f"{report.suite}-values.png")
    if scatter is not None:
        written.append(scatter)
    return written
