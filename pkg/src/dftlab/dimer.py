"""Two-site Hubbard model: exact singlet solutions, density-constrained search,
adiabatic connection curves, restricted Hartree-Fock, and correlation-energy
decompositions.

Conventions: gauge v1 + v2 = 0, so the on-site potential difference dv = v2 - v1
fully specifies the external potential.  The ordered singlet basis is
{both electrons on site 1, both on site 2, covalent singlet}.  Occupations are
n1 = 2*c1^2 + c3^2, n2 = 2*c2^2 + c3^2 and dn = n2 - n1.

Hartree/exchange convention for the dimer (asymmetric case included):
U_H(dn) = u*(1 + dn^2/4) and E_X = -U_H/2, the two-electron singlet relation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import simpson

from .errors import (
    InternalConsistencyError,
    InvalidInputError,
    InversionFailureError,
)

__all__ = [
    "DimerParams",
    "SingletState",
    "ACCurve",
    "EnergyDecomposition",
    "HFDimerSolution",
    "ConvexityReport",
    "solve_ground_state",
    "occupations",
    "occupation_difference",
    "kinetic_expectation",
    "interaction_expectation",
    "hartree_energy",
    "exchange_energy",
    "ts_noninteracting",
    "constrained_search",
    "adiabatic_connection",
    "convexity_report",
    "decompose_energies",
    "solve_hf",
    "hf_kinetic_correlation",
]

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class DimerParams:
    """Hopping t > 0, on-site repulsion u >= 0, potential difference dv = v2 - v1,
    and coupling scale lam >= 0 multiplying u."""

    t: float
    u: float
    dv: float = 0.0
    lam: float = 1.0

    def __post_init__(self):
        vals = (self.t, self.u, self.dv, self.lam)
        if not all(math.isfinite(v) for v in vals):
            raise InvalidInputError(f"non-finite dimer parameters: {vals}")
        if self.t <= 0.0:
            raise InvalidInputError(f"hopping must be positive, got t={self.t}")
        if self.u < 0.0:
            raise InvalidInputError(f"on-site repulsion must be >= 0, got u={self.u}")
        if self.lam < 0.0:
            raise InvalidInputError(f"coupling scale must be >= 0, got lam={self.lam}")


@dataclass(frozen=True)
class SingletState:
    """Normalized amplitudes in the ordered singlet basis and the ground energy."""

    c: tuple[float, float, float]
    energy: float

    def __post_init__(self):
        norm = sum(x * x for x in self.c)
        if abs(norm - 1.0) > 1e-12:
            raise InvalidInputError(f"state not normalized: |c|^2 = {norm!r}")


@dataclass(frozen=True)
class ACCurve:
    """Adiabatic connection integrand U_XC(lambda) at fixed occupation difference."""

    dn_target: float
    lambdas: np.ndarray
    uxc: np.ndarray
    ex: float
    t: float = float("nan")
    u: float = float("nan")


@dataclass(frozen=True)
class EnergyDecomposition:
    ex: float
    ec: float
    tc: float
    uc: float
    ts: float
    t_full: float


@dataclass(frozen=True)
class HFDimerSolution:
    theta: float
    e_hf: float
    t_hf: float


@dataclass(frozen=True)
class ConvexityReport:
    min_second_diff: float
    tol: float
    violated: bool
    second_diffs: np.ndarray = field(repr=False, default=None)


def _lowest_root_cubic(s1: float, s2: float, s3: float) -> float:
    """Smallest real root of e^3 - s1 e^2 + s2 e - s3 = 0 (all roots real).

    Trigonometric solution of the depressed cubic plus two Newton polish steps.
    """
    m = s1 / 3.0
    p = s2 - 3.0 * m * m
    q = -2.0 * m**3 + s2 * m - s3
    if p < 0.0:
        r = 2.0 * math.sqrt(-p / 3.0)
        arg = -4.0 * q / (r * r * r)
        arg = max(-1.0, min(1.0, arg))
        phi = math.acos(arg) / 3.0
        # the three roots are r*cos(phi - 2*pi*k/3); the minimum is at k=1
        y = min(r * math.cos(phi - 2.0 * math.pi * k / 3.0) for k in range(3))
    else:
        # p >= 0 only at exact triple degeneracy (p is -variance of the roots)
        y = math.copysign(abs(q) ** (1.0 / 3.0), -q)
    e = y + m
    for _ in range(2):
        f = ((e - s1) * e + s2) * e - s3
        df = (3.0 * e - 2.0 * s1) * e + s2
        if df != 0.0:
            e -= f / df
    return e


def solve_ground_state(p: DimerParams) -> SingletState:
    """Lowest eigenpair of the 3x3 singlet Hamiltonian
    [[lam*u - dv, 0, -sqrt(2) t], [0, lam*u + dv, -sqrt(2) t], [-sqrt(2) t, -sqrt(2) t, 0]].
    """
    a = p.lam * p.u - p.dv
    c = p.lam * p.u + p.dv
    b = -SQRT2 * p.t
    s1 = a + c
    s2 = a * c - 2.0 * b * b
    s3 = -b * b * (a + c)
    e = _lowest_root_cubic(s1, s2, s3)
    # ground state lies strictly below every diagonal entry (t > 0 couples all
    # basis states), so the resolvent components are positive
    c1 = -b / (a - e)
    c2 = -b / (c - e)
    norm = math.sqrt(c1 * c1 + c2 * c2 + 1.0)
    return SingletState(c=(c1 / norm, c2 / norm, 1.0 / norm), energy=e)


def occupations(s: SingletState) -> tuple[float, float]:
    c1, c2, c3 = s.c
    return 2.0 * c1 * c1 + c3 * c3, 2.0 * c2 * c2 + c3 * c3


def occupation_difference(s: SingletState) -> float:
    """dn = n2 - n1 = 2*(c2^2 - c1^2), in (-2, 2)."""
    c1, c2, _ = s.c
    return 2.0 * (c2 * c2 - c1 * c1)


def kinetic_expectation(s: SingletState, t: float) -> float:
    """<T> = -2*sqrt(2)*t*c3*(c1 + c2)."""
    c1, c2, c3 = s.c
    return -2.0 * SQRT2 * t * c3 * (c1 + c2)


def interaction_expectation(s: SingletState, u: float) -> float:
    """<V_ee> = u*(c1^2 + c2^2), the double-occupancy expectation."""
    c1, c2, _ = s.c
    return u * (c1 * c1 + c2 * c2)


def hartree_energy(u: float, dn: float) -> float:
    """Dimer Hartree energy U_H(dn) = u*(1 + dn^2/4)."""
    return u * (1.0 + 0.25 * dn * dn)


def exchange_energy(u: float, dn: float) -> float:
    """Two-electron singlet exchange E_X = -U_H/2 = -(u/2)*(1 + dn^2/4)."""
    return -0.5 * hartree_energy(u, dn)


def ts_noninteracting(t: float, dn: float) -> float:
    """Non-interacting constrained-search kinetic minimum T_S = -2t*sqrt(1 - (dn/2)^2)."""
    return -2.0 * t * math.sqrt(max(0.0, 1.0 - 0.25 * dn * dn))


def constrained_search(
    dn_target: float,
    t: float,
    u: float,
    lam: float = 1.0,
    tol_dn: float = 1e-10,
    max_doublings: int = 60,
    dv_hint: float | None = None,
) -> tuple[float, float, SingletState]:
    """Find dv whose ground state at coupling lam has occupation difference dn_target.

    Returns (F_lambda, dv, state) with F_lambda = <T> + lam*<V_ee>.  Relies on dn
    being strictly decreasing in dv for the non-degenerate singlet ground state;
    bracketing by doubling, then bisection.
    """
    if not math.isfinite(dn_target) or abs(dn_target) >= 2.0 - 1e-9:
        raise InvalidInputError(f"occupation difference target out of range: {dn_target}")

    def dn_of(dv):
        return occupation_difference(solve_ground_state(DimerParams(t, u, dv, lam)))

    # f(dv) = dn(dv) - dn_target is strictly decreasing, f(-inf) > 0 > f(+inf)
    if dv_hint is None:
        half = 10.0 * max(t, u, 1.0)
        lo, hi = -half, half
    else:
        w = max(1e-2, 1e-2 * max(t, u, 1.0))
        lo, hi = dv_hint - w, dv_hint + w
    f_lo = dn_of(lo) - dn_target
    f_hi = dn_of(hi) - dn_target
    for _ in range(max_doublings):
        if f_lo >= 0.0 and f_hi <= 0.0:
            break
        width = hi - lo
        if f_lo < 0.0:
            lo -= width
            f_lo = dn_of(lo) - dn_target
        if f_hi > 0.0:
            hi += width
            f_hi = dn_of(hi) - dn_target
    else:
        raise InversionFailureError(
            f"could not bracket dv for dn_target={dn_target} (t={t}, u={u}, lam={lam})"
        )

    dv = 0.5 * (lo + hi)
    f_mid = dn_of(dv) - dn_target
    scale = max(abs(lo), abs(hi), 1.0)
    while abs(f_mid) > tol_dn:
        if hi - lo < 1e-14 * scale:
            raise InversionFailureError(
                f"bisection interval collapsed before reaching tol_dn={tol_dn} "
                f"(dn residual {f_mid:.3e} at dv={dv!r})"
            )
        if f_mid > 0.0:
            lo = dv
        else:
            hi = dv
        dv = 0.5 * (lo + hi)
        f_mid = dn_of(dv) - dn_target

    state = solve_ground_state(DimerParams(t, u, dv, lam))
    f_lam = kinetic_expectation(state, t) + lam * interaction_expectation(state, u)
    return f_lam, dv, state


def adiabatic_connection(
    t: float, u: float, dv_physical: float = 0.0, n_lambda: int = 101
) -> ACCurve:
    """U_XC(lambda) on a uniform lambda grid in [0, 1] at the physical density.

    The target occupation difference is that of the lam=1 ground state of
    (t, u, dv_physical).  U_XC(lam) = <Psi^lam|V_ee|Psi^lam> - U_H(dn), with the
    physical interaction strength u throughout.
    """
    if n_lambda < 3:
        raise InvalidInputError(f"need at least 3 lambda points, got {n_lambda}")
    physical = solve_ground_state(DimerParams(t, u, dv_physical, 1.0))
    dn = occupation_difference(physical)
    u_h = hartree_energy(u, dn)
    lambdas = np.linspace(0.0, 1.0, n_lambda)
    uxc = np.empty(n_lambda)
    dv_prev = None
    for i, lam in enumerate(lambdas):
        _, dv_prev, state = constrained_search(dn, t, u, lam, dv_hint=dv_prev)
        uxc[i] = interaction_expectation(state, u) - u_h
    return ACCurve(
        dn_target=dn, lambdas=lambdas, uxc=uxc, ex=exchange_energy(u, dn), t=t, u=u
    )


def convexity_report(curve: ACCurve, tol: float | None = None) -> ConvexityReport:
    """Second central finite differences of U_XC over lambda; flags a violation when
    the minimum falls below -tol (default 1e-7 * max|U_XC|)."""
    if len(curve.lambdas) < 5:
        raise InvalidInputError("convexity check needs at least 5 grid points")
    if tol is None:
        tol = 1e-7 * float(np.max(np.abs(curve.uxc)))
    d2 = curve.uxc[:-2] - 2.0 * curve.uxc[1:-1] + curve.uxc[2:]
    mn = float(np.min(d2))
    return ConvexityReport(min_second_diff=mn, tol=tol, violated=mn < -tol, second_diffs=d2)


def decompose_energies(curve: ACCurve, t: float, u: float) -> EnergyDecomposition:
    """Correlation energy components from the adiabatic connection curve.

    E_C = integral of U_C(lambda) = U_XC(lambda) - E_X over [0, 1] (composite
    Simpson), U_C = U_C(1), T_C = E_C - U_C.  Cross-checked against the exact
    identity T_C = T_full - T_S; disagreement beyond ten times the estimated
    quadrature error raises InternalConsistencyError.
    """
    lam = curve.lambdas
    uc_lam = curve.uxc - curve.ex
    ec = float(simpson(uc_lam, x=lam))
    uc = float(uc_lam[-1])
    tc = ec - uc
    ts = ts_noninteracting(t, curve.dn_target)
    _, _, state1 = constrained_search(curve.dn_target, t, u, 1.0)
    t_full = kinetic_expectation(state1, t)

    # Richardson-style quadrature error estimate from the half-resolution grid
    if len(lam) >= 5 and (len(lam) - 1) % 4 == 0:
        ec_coarse = float(simpson(uc_lam[::2], x=lam[::2]))
        quad_err = abs(ec - ec_coarse) / 15.0
    else:
        quad_err = abs(ec - float(np.trapezoid(uc_lam, lam)))
    # floor: the constrained-search tolerance (1e-10 in dn) also feeds the
    # endpoint state, so the identity cannot be sharper than ~tol_dn * energy scale
    quad_err = max(quad_err, 1e-12 * (1.0 + abs(ec)), 1e-10 * max(1.0, abs(t), abs(u)))

    mismatch = abs(tc - (t_full - ts))
    if mismatch > 10.0 * quad_err:
        raise InternalConsistencyError(
            f"T_C mismatch {mismatch:.3e} exceeds 10x quadrature estimate {quad_err:.3e}"
        )
    return EnergyDecomposition(ex=curve.ex, ec=ec, tc=tc, uc=uc, ts=ts, t_full=t_full)


def _hf_energy(phi: float, t: float, u: float, dv: float) -> float:
    # phi = 2*theta; cos^4 + sin^4 = 1 - sin(phi)^2/2
    s = math.sin(phi)
    return -dv * math.cos(phi) - 2.0 * t * s + u * (1.0 - 0.5 * s * s)


def solve_hf(p: DimerParams) -> HFDimerSolution:
    """Restricted Hartree-Fock for the dimer: minimize the single-determinant
    energy E(theta) = -dv*cos(2 theta) - 2t*sin(2 theta) + u*(cos^4 + sin^4)
    over the orbital mixing angle theta in [0, pi/2]."""
    t, u, dv = p.t, p.lam * p.u, p.dv
    # golden-section on phi = 2*theta in [0, pi] (single interior minimum),
    # then Newton refinement to 1e-12 in theta
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    lo, hi = 0.0, math.pi
    x1 = hi - inv_phi * (hi - lo)
    x2 = lo + inv_phi * (hi - lo)
    f1, f2 = _hf_energy(x1, t, u, dv), _hf_energy(x2, t, u, dv)
    while hi - lo > 1e-10:
        if f1 < f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - inv_phi * (hi - lo)
            f1 = _hf_energy(x1, t, u, dv)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + inv_phi * (hi - lo)
            f2 = _hf_energy(x2, t, u, dv)
    phi = 0.5 * (lo + hi)
    for _ in range(50):
        s, c = math.sin(phi), math.cos(phi)
        d1 = dv * s - 2.0 * t * c - u * s * c
        d2 = dv * c + 2.0 * t * s - u * (c * c - s * s)
        if d2 <= 0.0:
            break
        step = d1 / d2
        phi -= step
        if abs(step) < 2e-12:
            break
    phi = min(max(phi, 0.0), math.pi)
    theta = 0.5 * phi
    return HFDimerSolution(
        theta=theta, e_hf=_hf_energy(phi, t, u, dv), t_hf=-2.0 * t * math.sin(phi)
    )


def hf_kinetic_correlation(p: DimerParams) -> tuple[float, float, float]:
    """(t_full, t_hf, tc_hf): exact and HF kinetic energies and their difference."""
    exact = solve_ground_state(p)
    t_full = kinetic_expectation(exact, p.t)
    hf = solve_hf(p)
    return t_full, hf.t_hf, t_full - hf.t_hf
