"""Thomas-Fermi neutral atom and large-Z asymptotics: the universal screening
function phi'' = phi^(3/2)/sqrt(x) by shooting, the scaled atomic density,
the leading large-Z exchange coefficient, and a linear least-squares harness
for asymptotic-series fits of ingested exchange data.
"""

from __future__ import annotations

import csv
import functools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import simpson

from .errors import InvalidInputError, SingularFitError, SolverError
from .lieb_oxford import RadialDensity, lda_exchange

__all__ = [
    "TFSolution",
    "AsymptoticFit",
    "TF_LENGTH_CONSTANT",
    "KINETIC_Z53_COEFFICIENT",
    "LEADING_EXCHANGE_COEFFICIENT",
    "ETF_IONIZATION_EV",
    "BASIS_TERMS",
    "CLOSED_SHELL_Z",
    "solve_tf_atom",
    "tf_density",
    "verify_leading_exchange",
    "fit_asymptotics",
    "bohr_coefficient",
    "read_exchange_csv",
]

#: b in r = b * Z^(-1/3) x
TF_LENGTH_CONSTANT = 0.885341

#: coefficient of the Z^(5/3) kinetic term; -9 C2 / 11 is the leading exchange term
KINETIC_Z53_COEFFICIENT = 0.269900
LEADING_EXCHANGE_COEFFICIENT = -9.0 * KINETIC_Z53_COEFFICIENT / 11.0

#: extended-Thomas-Fermi large-Z ionization potential, stored for reports only
ETF_IONIZATION_EV = 3.15

#: atoms with all shells filled, usable as an ingestion filter
CLOSED_SHELL_Z = frozenset({2, 4, 10, 12, 18, 20, 30, 36, 38, 48, 54, 56, 70, 80, 86, 88, 102, 112, 118, 120})


@dataclass(frozen=True)
class TFSolution:
    """Screening function phi on a grid of the dimensionless TF variable x."""

    x: np.ndarray
    phi: np.ndarray
    dphi: np.ndarray = field(repr=False, default=None)
    initial_slope: float = float("nan")

    def __post_init__(self):
        if self.phi[0] > 1.0 + 1e-9 or abs(self.initial_slope) >= 10.0:
            raise InvalidInputError("not a screening-function profile")


@dataclass(frozen=True)
class AsymptoticFit:
    basis: tuple[str, ...]
    coefficients: np.ndarray
    residual: float
    data: np.ndarray  # (n, 2) array of (Z, value)
    filter_applied: str = "none"


def _tf_rhs(s: float, phi: float, dphi: float) -> float:
    # ODE rewritten in s = sqrt(x): phi_ss = phi_s / s + 4 s phi^(3/2)
    return dphi / s + 4.0 * s * max(phi, 0.0) ** 1.5


def _integrate_shot(slope: float, s0: float, s_max: float, h: float,
                    record: bool = False):
    """Fixed-step RK4 in s = sqrt(x) from the series launch.

    Returns (status, trajectory) where status is +1 if phi turned upward
    (slope too shallow), -1 if phi crossed zero (slope too steep), 0 if it
    reached s_max while decreasing.
    """
    x0 = s0 * s0
    phi = 1.0 + slope * x0 + (4.0 / 3.0) * x0**1.5 + 0.4 * slope * x0**2.5
    dphi_dx = slope + 2.0 * x0**0.5 + slope * x0**1.5
    dphi = 2.0 * s0 * dphi_dx  # d phi / d s
    s = s0
    n_steps = int(math.ceil((s_max - s0) / h))
    traj = [(s, phi, dphi)] if record else None
    for _ in range(n_steps):
        k1p, k1d = dphi, _tf_rhs(s, phi, dphi)
        k2p = dphi + 0.5 * h * k1d
        k2d = _tf_rhs(s + 0.5 * h, phi + 0.5 * h * k1p, k2p)
        k3p = dphi + 0.5 * h * k2d
        k3d = _tf_rhs(s + 0.5 * h, phi + 0.5 * h * k2p, k3p)
        k4p = dphi + h * k3d
        k4d = _tf_rhs(s + h, phi + h * k3p, k4p)
        phi += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
        dphi += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d)
        s += h
        if phi <= 0.0:
            return -1, traj
        if dphi >= 0.0:
            return +1, traj
        if record:
            traj.append((s, phi, dphi))
    return 0, traj


@functools.lru_cache(maxsize=8)
def solve_tf_atom(x_max: float = 50.0, h: float = 2.5e-4, s0: float = 1e-3) -> TFSolution:
    """Shoot on the initial slope B of phi = 1 + B x + (4/3) x^(3/2) + ...

    phi'' = phi^(3/2)/sqrt(x) with phi(0) = 1, phi(inf) = 0.  Integration runs
    in s = sqrt(x), which removes the coordinate singularity at the origin.
    A slope too steep drives phi through zero; too shallow makes phi turn
    upward; bisection pinches the separatrix.
    """
    s_max = math.sqrt(x_max)
    lo, hi = -2.0, -1.0  # too steep / too shallow
    st_lo, _ = _integrate_shot(lo, s0, s_max, h)
    st_hi, _ = _integrate_shot(hi, s0, s_max, h)
    if st_lo != -1 or st_hi != +1:
        raise SolverError("shooting bracket invalid: endpoints do not straddle the separatrix")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        status, _ = _integrate_shot(mid, s0, s_max, h)
        if status == -1:
            lo = mid
        else:
            hi = mid
    slope = 0.5 * (lo + hi)
    status, traj = _integrate_shot(slope, s0, s_max, h, record=True)
    arr = np.array(traj)
    s, phi, dphi_ds = arr[:, 0], arr[:, 1], arr[:, 2]
    x = s * s
    dphi_dx = dphi_ds / (2.0 * s)
    return TFSolution(x=x, phi=phi, dphi=dphi_dx, initial_slope=slope)


def tf_density(sol: TFSolution, z: float, x_tail_max: float = 3000.0) -> RadialDensity:
    """Neutral-atom TF density n(r) = (Z / 4 pi b^3) (phi(x)/x)^(3/2), x = r/b,
    b = 0.885341 Z^(-1/3).

    Beyond the solved grid a phi ~ C/x^3 tail is attached; its amplitude is set
    so the tail mass equals the exact ODE identity phi(X) - X phi'(X), keeping
    the particle number accurate despite the truncation.
    """
    if z <= 0.0:
        raise InvalidInputError(f"need Z > 0, got {z}")
    x_end = sol.x[-1]
    phi_end = sol.phi[-1]
    dphi_end = sol.dphi[-1]
    # psi(x) = phi^(3/2) sqrt(x); tail mass from int x phi'' dx = [x phi' - phi]
    tail_mass = phi_end - x_end * dphi_end
    x_tail = np.geomspace(x_end * 1.001, x_tail_max, 400)
    # tail shape x^(-4) in psi; amplitude D reproduces the exact tail mass
    d_amp = 3.0 * x_end**3 * tail_mass
    psi_tail = d_amp * x_tail**-4.0

    x = np.concatenate((sol.x, x_tail))
    psi = np.concatenate((sol.phi**1.5 * np.sqrt(sol.x), psi_tail))
    b = TF_LENGTH_CONSTANT * z ** (-1.0 / 3.0)
    r = b * x
    n = z / (4.0 * math.pi * b**3) * psi / (x * x)
    return RadialDensity(
        r=r, n=n, n_electrons=z, polarized=False, family="tf-atom",
        params={"Z": z}, tail_rate=None, norm_tol=1e-3,
    )


def verify_leading_exchange(sol: TFSolution, z_list=(1.0, 10.0, 100.0), rtol: float = 5e-3):
    """Check E_X^LDA[n_TF] against the leading large-Z term -(9 C2 / 11) Z^(5/3).

    Returns a list of dict rows with the computed ratio per Z.
    """
    rows = []
    for z in z_list:
        d = tf_density(sol, z)
        ex_lda = lda_exchange(d)
        expected = LEADING_EXCHANGE_COEFFICIENT * z ** (5.0 / 3.0)
        rows.append({
            "Z": z,
            "ex_lda": ex_lda,
            "expected": expected,
            "coefficient": ex_lda / z ** (5.0 / 3.0),
            "pass": abs(ex_lda - expected) <= rtol * abs(expected),
        })
    return rows


#: named basis terms for large-Z fits
BASIS_TERMS = {
    "Z^{7/3}": lambda z: z ** (7.0 / 3.0),
    "Z^2": lambda z: z**2,
    "Z^{5/3}": lambda z: z ** (5.0 / 3.0),
    "ZlogZ": lambda z: z * np.log(z),
    "Z": lambda z: z,
    "Z^{4/3}": lambda z: z ** (4.0 / 3.0),
}


def fit_asymptotics(
    data,
    basis: tuple[str, ...] = ("ZlogZ", "Z"),
    closed_shell_only: bool = False,
    z_min: float | None = None,
    extra_terms: dict | None = None,
) -> AsymptoticFit:
    """Linear least squares of value ~ sum_k c_k * term_k(Z) with column scaling.

    data: iterable of (Z, value).  closed_shell_only keeps only closed-shell Z,
    and z_min drops light atoms (the fit convention is closed-shell, Z > 12).
    extra_terms allows user-supplied basis functions keyed by label.
    """
    terms = dict(BASIS_TERMS)
    if extra_terms:
        terms.update(extra_terms)
    unknown = [b for b in basis if b not in terms]
    if unknown:
        raise InvalidInputError(f"unknown basis terms: {unknown}")

    arr = np.asarray(list(data), dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise InvalidInputError("data must be (Z, value) pairs")
    filters = []
    if closed_shell_only:
        arr = arr[np.isin(arr[:, 0].astype(int), list(CLOSED_SHELL_Z))]
        filters.append("closed-shell")
    if z_min is not None:
        arr = arr[arr[:, 0] > z_min]
        filters.append(f"Z>{z_min:g}")
    z = arr[:, 0]
    if len(np.unique(z)) != len(z):
        raise InvalidInputError("Z values must be distinct")
    if len(z) <= len(basis):
        raise InvalidInputError(
            f"need more than {len(basis)} data points after filtering, have {len(z)}"
        )

    a = np.column_stack([terms[b](z) for b in basis])
    col_scale = np.linalg.norm(a, axis=0)
    if np.any(col_scale == 0.0):
        raise SingularFitError("zero basis column")
    coef_scaled, _, rank, _ = np.linalg.lstsq(a / col_scale, arr[:, 1], rcond=None)
    if rank < len(basis):
        raise SingularFitError(f"design matrix rank {rank} < {len(basis)}")
    coef = coef_scaled / col_scale
    residual = float(np.linalg.norm(a @ coef - arr[:, 1]))
    return AsymptoticFit(
        basis=tuple(basis), coefficients=coef, residual=residual, data=arr,
        filter_applied=",".join(filters) if filters else "none",
    )


def bohr_coefficient() -> dict:
    """Labeled constants for the non-interacting (Bohr) atom's logarithmic
    beyond-LDA exchange term and its ratio to the real-atom value 1/(4 pi^2)."""
    bohr = 1.0 / (3.0 * math.pi**2)
    real = 1.0 / (4.0 * math.pi**2)
    return {
        "bohr_zlogz_coefficient": bohr,
        "real_atom_zlogz_coefficient": real,
        "ratio": bohr / real,  # exactly 4/3
    }


def read_exchange_csv(path) -> np.ndarray:
    """Read (Z, e_x, e_x_lda) rows; '#' lines are comments.  Returns the
    beyond-LDA pairs (Z, e_x - e_x_lda)."""
    rows = []
    with open(path, newline="") as fh:
        reader = csv.reader(line for line in fh if not line.lstrip().startswith("#"))
        header = next(reader, None)
        if header is None or [c.strip().lower() for c in header[:3]] != ["z", "e_x", "e_x_lda"]:
            raise InvalidInputError(f"{path}: expected header 'Z,e_x,e_x_lda'")
        for rec in reader:
            if not rec:
                continue
            z, ex, ex_lda = (float(c) for c in rec[:3])
            rows.append((z, ex - ex_lda))
    if not rows:
        raise InvalidInputError(f"{path}: no data rows")
    return np.asarray(rows)
