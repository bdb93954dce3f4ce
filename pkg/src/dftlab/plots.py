"""Figure rendering for the CLI report paths.  Every function writes a file
next to the delimited output; nothing here is needed for the numerics."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = [
    "ac_curve_figure",
    "staircase_figure",
    "screening_figure",
    "fit_figure",
    "scan_heatmap_figure",
]


def ac_curve_figure(curve, decomp, path):
    """Adiabatic connection integrand with the exchange line and the
    correlation areas shaded."""
    fig, ax = plt.subplots(figsize=(6, 4.2))
    lam, uxc = curve.lambdas, curve.uxc
    ax.plot(lam, uxc, "k-", lw=1.8, label=r"$U_{xc}(\lambda)$")
    ax.axhline(curve.ex, color="gray", ls="--", lw=1.0, label=r"$E_x$")
    ax.fill_between(lam, uxc, curve.ex, color="tab:blue", alpha=0.25,
                    label=rf"$E_c$ = {decomp.ec:.6f}")
    ax.fill_between(lam, np.full_like(lam, uxc[-1]), uxc, color="tab:green",
                    alpha=0.25, label=rf"$T_c$ = {decomp.tc:.6f}")
    ax.set_xlabel(r"coupling strength $\lambda$")
    ax.set_ylabel(r"$U_{xc}(\lambda)$")
    ax.set_xlim(0.0, 1.0)
    ax.legend(loc="best", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def staircase_figure(ev, path, title=None):
    """Counting functions (top) and remainders (bottom) on the energy grid."""
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6, 6), sharex=True)
    ax1.plot(ev.energies, ev.n_exact, "k-", lw=1.2, label="exact count")
    ax1.plot(ev.energies, ev.n_classical, "b-", lw=1.2, label="classical")
    ax1.plot(ev.energies, ev.n_weyl2, "r-", lw=1.2, label="two-term Weyl")
    ax1.set_ylabel("counting function")
    ax1.legend(loc="upper left", fontsize=9)
    if title:
        ax1.set_title(title)
    ax2.plot(ev.energies, ev.r_cl, "b-", lw=1.0, label="classical remainder")
    ax2.plot(ev.energies, ev.r_w2, "r-", lw=1.0, label="two-term remainder")
    ax2.axhline(0.0, color="gray", lw=0.6)
    ax2.set_xlabel("energy")
    ax2.set_ylabel("remainder")
    ax2.legend(loc="upper left", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def screening_figure(sol, path):
    """Thomas-Fermi screening function on linear and log scales."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(8, 3.6))
    ax1.plot(sol.x, sol.phi, "k-", lw=1.4)
    ax1.set_xlabel("x")
    ax1.set_ylabel(r"$\phi(x)$")
    ax1.set_xlim(0, 20)
    ax2.loglog(sol.x, sol.phi, "k-", lw=1.4, label=r"$\phi$")
    ax2.loglog(sol.x, 144.0 / sol.x**3, "r--", lw=1.0, label=r"$144/x^3$")
    ax2.set_xlabel("x")
    ax2.legend(fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def fit_figure(fit, path):
    """Asymptotic fit against the ingested (Z, value) data."""
    from .tf_largez import BASIS_TERMS

    z, val = fit.data[:, 0], fit.data[:, 1]
    zz = np.linspace(z.min(), z.max(), 400)
    model = sum(c * BASIS_TERMS[b](zz) for c, b in zip(fit.coefficients, fit.basis))
    fig, ax = plt.subplots(figsize=(6, 4.2))
    ax.plot(z, val, "ko", ms=4, label="data")
    ax.plot(zz, model, "r-", lw=1.2,
            label=" + ".join(f"{c:.4g}*{b}" for c, b in zip(fit.coefficients, fit.basis)))
    ax.set_xlabel("Z")
    ax.set_ylabel("value")
    ax.legend(fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def scan_heatmap_figure(u_over_t, dv_over_t, values, path, label):
    """Heatmap of a scanned quantity over the (u/t, dv/t) plane."""
    fig, ax = plt.subplots(figsize=(5.6, 4.4))
    uu = np.unique(u_over_t)
    vv = np.unique(dv_over_t)
    grid = np.asarray(values).reshape(len(uu), len(vv))
    pc = ax.pcolormesh(vv, uu, grid, shading="nearest")
    fig.colorbar(pc, ax=ax, label=label)
    ax.set_xlabel("dv / t")
    ax.set_ylabel("u / t")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
