"""Figures written next to the line-delimited reports."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "figure.figsize": (6.0, 3.7),
    "font.size": 10,
    "axes.labelsize": 10,
    "axes.titlesize": 11,
    "legend.fontsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
}


def _save(fig, path) -> str:
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return str(path)


def plot_campaign(report, path) -> str:
    """Inputs tested and inputs with findings, per degree."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        degrees = sorted(report.tested_by_degree)
        flagged = {}
        seen = set()
        for f in report.findings:
            if f.input not in seen:
                seen.add(f.input)
                flagged[len(f.input) - 1] = flagged.get(len(f.input) - 1, 0) + 1
        xs = list(range(len(degrees)))
        ax.bar([x - 0.2 for x in xs], [report.tested_by_degree[d] for d in degrees], 0.4, label="tested")
        ax.bar([x + 0.2 for x in xs], [flagged.get(d, 0) for d in degrees], 0.4, label="with findings")
        ax.set_xticks(xs)
        ax.set_xticklabels([str(d) for d in degrees])
        ax.set_yscale("symlog")
        ax.set_xlabel("degree")
        ax.set_ylabel("polynomials")
        ax.set_title(f"{report.campaign}: {len(report.findings)} findings / {report.tested} tested")
        ax.legend(frameon=False)
        return _save(fig, path)


def plot_binrep(coeffs, rep, path) -> str:
    """x_i midpoints with their integer ceilings."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        idx = list(range(1, len(rep) + 1))
        ax.plot(idx, [float(e.midpoint) for e in rep], "o-", label="x_i")
        ax.step(idx, [e.ceil_x for e in rep], where="mid", linestyle="--", label="ceil x_i")
        ax.set_xticks(idx)
        ax.set_xlabel("i")
        ax.set_ylabel("x_i")
        ax.set_title("binomial representation of " + ",".join(str(c) for c in coeffs))
        ax.legend(frameon=False)
        return _save(fig, path)


def plot_triangle(name, rows_, path) -> str:
    """Row profiles T_{d,k} against k on a log scale."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        for d, row in enumerate(rows_, start=1):
            if d == 1:
                continue
            ax.plot(range(len(row)), [max(v, 1) for v in row], marker=".", label=f"d={d}")
        ax.set_yscale("log")
        ax.set_xlabel("k")
        ax.set_ylabel("T(d, k)")
        ax.set_title(f"{name} triangle")
        if len(rows_) <= 12:
            ax.legend(frameon=False, ncol=2)
        return _save(fig, path)
