"""Figures for reports, written straight to image files (Agg backend)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .algebra import GradedAlgebra, component  # noqa: E402
from .paratrophic import build_p, quantification_set, shifted_degree  # noqa: E402

DPI = 150


def _block_order(a: GradedAlgebra, sigma):
    """Row and column orders that make ``P(sigma, alpha)`` block-diagonal."""
    rows, cols, row_cuts, col_cuts, labels = [], [], [], [], []
    for g in quantification_set(a, sigma):
        r = component(a, shifted_degree(a, sigma, g))
        c = component(a, g)
        if not r and not c:
            continue
        rows.extend(r)
        cols.extend(c)
        row_cuts.append(len(rows))
        col_cuts.append(len(cols))
        labels.append(a.group.format(g))
    return rows, cols, row_cuts, col_cuts, labels


def plot_paratrophic(a: GradedAlgebra, sigma, alpha, path: str, title: str | None = None) -> str:
    """Heat map of ``P(sigma, alpha)`` with rows/columns grouped by degree.

    With ``alpha=None`` the symbolic nonzero pattern is drawn instead.
    """
    p = build_p(a, sigma)
    rows, cols, row_cuts, col_cuts, labels = _block_order(a, sigma)
    if alpha is None:
        values = p.matrix.pattern().astype(float)
    else:
        values = np.array([[float(x) for x in row] for row in p.evaluate(alpha)])
    data = values[np.ix_(rows, cols)] if rows and cols else np.zeros((a.dimension, a.dimension))

    size = min(10.0, 3.0 + 0.25 * a.dimension)
    fig, ax = plt.subplots(figsize=(size, size))
    vmax = float(np.abs(data).max()) or 1.0
    ax.imshow(np.ma.masked_equal(data, 0.0), cmap="coolwarm", vmin=-vmax, vmax=vmax,
              interpolation="nearest")
    for cut in row_cuts[:-1]:
        ax.axhline(cut - 0.5, color="0.4", lw=0.8)
    for cut in col_cuts[:-1]:
        ax.axvline(cut - 0.5, color="0.4", lw=0.8)
    if a.dimension <= 32:
        ax.set_xticks(range(len(cols)))
        ax.set_xticklabels([a.names[c] for c in cols], rotation=90, fontsize=7)
        ax.set_yticks(range(len(rows)))
        ax.set_yticklabels([a.names[r] for r in rows], fontsize=7)
    ax.set_xlabel("columns grouped by degree g: " + ", ".join(labels), fontsize=8)
    ax.set_ylabel("rows grouped by degree sigma*g^-1", fontsize=8)
    ax.set_title(title or f"P(sigma={a.group.format(sigma)}, alpha)", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    plt.close(fig)
    return path


def plot_scan(a: GradedAlgebra, decisions: dict, path: str) -> str:
    """Bar chart of ``|J_sigma|`` per support degree, coloured by the Frobenius verdict."""
    sigmas = list(decisions)
    sizes = [len(component(a, s)) for s in sigmas]
    colours = ["tab:green" if decisions[s].verdict else "tab:red" for s in sigmas]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.5 * len(sigmas) + 2), 3.5))
    ax.bar(range(len(sigmas)), sizes, color=colours)
    ax.set_xticks(range(len(sigmas)))
    ax.set_xticklabels([a.group.format(s) for s in sigmas], rotation=45 if len(sigmas) > 6 else 0,
                       fontsize=8)
    ax.set_xlabel("sigma")
    ax.set_ylabel("dim A_sigma")
    ax.set_title("sigma-graded Frobenius (green = yes)", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    plt.close(fig)
    return path
