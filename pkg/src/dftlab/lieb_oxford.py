"""Lieb-Oxford-type lower bounds on exchange for analytic closed-shell radial
densities: the n^(4/3) integral, Hartree energy, closed-form exchange, LDA
exchange, and per-constant bound verdicts.

Analytic density families (hydrogenic 1s, exponential, Gaussian) carry their
decay rate so radial integrals get an analytic tail correction beyond the grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import cumulative_simpson, simpson

from .errors import ApplicabilityError, InvalidInputError, UnsupportedShellError

__all__ = [
    "RadialDensity",
    "BoundCheck",
    "BoundReport",
    "BOUND_CONSTANTS",
    "LDA_X_CONSTANT",
    "default_radial_grid",
    "hydrogenic_1s",
    "exponential_density",
    "gaussian_density",
    "scale_density",
    "integral_n43",
    "hartree_energy",
    "exchange_closed_shell",
    "lda_exchange",
    "check_bounds",
]

#: LDA exchange prefactor (3/4)(3/pi)^(1/3), prints as 0.7386
LDA_X_CONSTANT = 0.75 * (3.0 / math.pi) ** (1.0 / 3.0)


def default_radial_grid(r_min: float = 1e-6, r_max: float = 60.0, n: int = 2000) -> np.ndarray:
    return np.geomspace(r_min, r_max, n)


@dataclass(frozen=True)
class RadialDensity:
    """Spherically symmetric density n(r) on an ascending radial grid.

    tail_rate, if set, is the exponential decay rate beta with n ~ n(r_max) *
    exp(-beta (r - r_max)) beyond the grid; integrals then include the analytic
    tail.  norm_tol loosens the particle-number closure for tabulated profiles
    (the Thomas-Fermi atom has a slow power-law tail).
    """

    r: np.ndarray
    n: np.ndarray
    n_electrons: float
    polarized: bool
    family: str = "grid"
    params: dict = field(default_factory=dict)
    tail_rate: float | None = None
    norm_tol: float = 1e-6

    def __post_init__(self):
        r = np.asarray(self.r, dtype=float)
        n = np.asarray(self.n, dtype=float)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "n", n)
        if r.ndim != 1 or r.size < 3 or r.shape != n.shape:
            raise InvalidInputError("radial grid and density must be matching 1D arrays")
        if r[0] < 0.0 or np.any(np.diff(r) <= 0.0):
            raise InvalidInputError("radial grid must be ascending and non-negative")
        if np.any(n < 0.0) or not np.all(np.isfinite(n)):
            raise InvalidInputError("density must be finite and non-negative")
        total = radial_integral(self, power=2, exponent=1.0)
        if self.n_electrons > 0.0:
            rel = abs(total - self.n_electrons) / self.n_electrons
            if rel > self.norm_tol:
                raise InvalidInputError(
                    f"density integrates to {total!r}, expected {self.n_electrons} "
                    f"(relative error {rel:.2e} > {self.norm_tol})"
                )


def _tail_moment(r_max: float, value: float, rate: float, power: int) -> float:
    """Analytic integral of r^power * value * exp(-rate (r - r_max)) over [r_max, inf)."""
    if rate is None or rate <= 0.0 or value == 0.0:
        return 0.0
    acc = 0.0
    coef = 1.0
    for j in range(power + 1):
        acc += coef * r_max ** (power - j) / rate ** (j + 1)
        coef *= power - j
    return value * acc


def radial_integral(d: RadialDensity, power: int = 2, exponent: float = 1.0) -> float:
    """4 pi * integral of r^power * n(r)^exponent dr, with the family tail."""
    y = d.r**power * d.n**exponent
    total = float(simpson(y, x=d.r))
    if d.tail_rate is not None:
        total += _tail_moment(d.r[-1], d.n[-1] ** exponent, exponent * d.tail_rate, power)
    return 4.0 * math.pi * total


def hydrogenic_1s(
    zeta: float = 1.0,
    n_electrons: float = 1.0,
    polarized: bool | None = None,
    r: np.ndarray | None = None,
) -> RadialDensity:
    """1s density n(r) = N zeta^3 exp(-2 zeta r) / pi."""
    if zeta <= 0.0:
        raise InvalidInputError(f"need zeta > 0, got {zeta}")
    if r is None:
        r = default_radial_grid(r_max=max(60.0, 60.0 / zeta))
    if polarized is None:
        polarized = n_electrons == 1.0
    n = n_electrons * zeta**3 * np.exp(-2.0 * zeta * r) / math.pi
    return RadialDensity(
        r=r, n=n, n_electrons=n_electrons, polarized=polarized,
        family="hydrogenic-1s", params={"zeta": zeta}, tail_rate=2.0 * zeta,
    )


def exponential_density(
    alpha: float,
    n_electrons: float = 2.0,
    polarized: bool = False,
    r: np.ndarray | None = None,
) -> RadialDensity:
    """n(r) = N alpha^3 exp(-alpha r) / (8 pi)."""
    if alpha <= 0.0:
        raise InvalidInputError(f"need alpha > 0, got {alpha}")
    if r is None:
        r = default_radial_grid(r_max=max(60.0, 120.0 / alpha))
    n = n_electrons * alpha**3 * np.exp(-alpha * r) / (8.0 * math.pi)
    return RadialDensity(
        r=r, n=n, n_electrons=n_electrons, polarized=polarized,
        family="exponential", params={"alpha": alpha}, tail_rate=alpha,
    )


def gaussian_density(
    alpha: float,
    n_electrons: float = 2.0,
    polarized: bool = False,
    r: np.ndarray | None = None,
) -> RadialDensity:
    """n(r) = N (alpha/pi)^(3/2) exp(-alpha r^2)."""
    if alpha <= 0.0:
        raise InvalidInputError(f"need alpha > 0, got {alpha}")
    if r is None:
        r = default_radial_grid(r_max=max(30.0, 30.0 / math.sqrt(alpha)))
    n = n_electrons * (alpha / math.pi) ** 1.5 * np.exp(-alpha * r * r)
    # Gaussian tail beyond r_max is below double precision for the default grid
    return RadialDensity(
        r=r, n=n, n_electrons=n_electrons, polarized=polarized,
        family="gaussian", params={"alpha": alpha}, tail_rate=None,
    )


def scale_density(d: RadialDensity, gamma: float) -> RadialDensity:
    """Uniform scaling n_gamma(r) = gamma^3 n(gamma r), represented on r/gamma."""
    if gamma <= 0.0:
        raise InvalidInputError(f"need gamma > 0, got {gamma}")
    return RadialDensity(
        r=d.r / gamma, n=gamma**3 * d.n, n_electrons=d.n_electrons,
        polarized=d.polarized, family=d.family,
        params={**d.params, "gamma": gamma * d.params.get("gamma", 1.0)},
        tail_rate=None if d.tail_rate is None else gamma * d.tail_rate,
        norm_tol=d.norm_tol,
    )


def integral_n43(d: RadialDensity) -> float:
    """Integral of n^(4/3) over all space."""
    return radial_integral(d, power=2, exponent=4.0 / 3.0)


def hartree_energy(d: RadialDensity) -> float:
    """U = (1/2) * integral of n(r) v_H(r) with
    v_H(r) = Q(r)/r + 4 pi * integral_r^inf s n(s) ds, Q(r) = 4 pi * integral_0^r s^2 n ds."""
    r, n = d.r, d.n
    q = 4.0 * math.pi * cumulative_simpson(r * r * n, x=r, initial=0.0)
    outer = 4.0 * math.pi * cumulative_simpson(r * n, x=r, initial=0.0)
    tail1 = 0.0
    if d.tail_rate is not None:
        tail1 = 4.0 * math.pi * _tail_moment(r[-1], n[-1], d.tail_rate, 1)
    v_h = np.where(r > 0.0, q / np.where(r > 0.0, r, 1.0), 0.0) + (outer[-1] + tail1 - outer)
    u = 0.5 * 4.0 * math.pi * float(simpson(r * r * n * v_h, x=r))
    if d.tail_rate is not None:
        # beyond the grid v_H ~ N/r, so the remaining piece is (N/2) * 4 pi * int r n dr
        u += 0.5 * d.n_electrons * 4.0 * math.pi * _tail_moment(r[-1], n[-1], d.tail_rate, 1)
    return u


def exchange_closed_shell(d: RadialDensity) -> float:
    """Exact exchange for the two closed-form occupations: a doubly occupied
    orbital (N=2, unpolarized) gives E_X = -U/2; a single spin-orbital (N=1,
    polarized) gives E_X = -U (full self-interaction cancellation)."""
    if d.n_electrons == 2.0 and not d.polarized:
        return -0.5 * hartree_energy(d)
    if d.n_electrons == 1.0 and d.polarized:
        return -hartree_energy(d)
    raise UnsupportedShellError(
        f"no closed-form exchange for N={d.n_electrons}, polarized={d.polarized}; "
        "supply e_x externally"
    )


def lda_exchange(d: RadialDensity) -> float:
    """E_X^LDA = -(3/4)(3/pi)^(1/3) * integral of n^(4/3)."""
    return -LDA_X_CONSTANT * integral_n43(d)


@dataclass(frozen=True)
class BoundConstant:
    name: str
    value: float
    spin: str  # "polarized" | "unpolarized" | "any"
    source_label: str
    informational: bool = False


BOUND_CONSTANTS: tuple[BoundConstant, ...] = (
    BoundConstant("C1", 1.092, "polarized",
                  "optimal one-electron (fully polarized) bound"),
    BoundConstant("CX_conjecture", 0.867, "unpolarized",
                  "conjectured universal exchange bound, 1.092/2^(1/3)"),
    BoundConstant("CX_proven", 0.991, "unpolarized",
                  "proven spin-unpolarized exchange bound, 1.249/2^(1/3)"),
    BoundConstant("CX_polarized_general", 1.249, "polarized",
                  "proven exchange bound for states with negative truncated "
                  "correlations; informational for N=1", informational=True),
    BoundConstant("CLO_upper_estimate", 1.5765, "any",
                  "current upper estimate of the optimal universal constant"),
    BoundConstant("CLO_original", 1.68, "any",
                  "original universal lower-bound constant"),
)


@dataclass(frozen=True)
class BoundCheck:
    name: str
    constant: float
    source_label: str
    ratio: float
    passed: bool
    informational: bool = False


@dataclass(frozen=True)
class BoundReport:
    family: str
    params: dict
    n_electrons: float
    polarized: bool
    i43: float
    u_hartree: float
    e_x: float
    checks: tuple[BoundCheck, ...]

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "n_electrons": float(self.n_electrons),
            "polarized": bool(self.polarized),
            "i43": float(self.i43),
            "u": float(self.u_hartree),
            "e_x": float(self.e_x),
            "checks": [
                {
                    "name": c.name,
                    "constant": c.constant,
                    "source_label": c.source_label,
                    "ratio": float(c.ratio),
                    "pass": bool(c.passed),
                    "informational": c.informational,
                }
                for c in self.checks
            ],
        }


def check_bounds(
    d: RadialDensity,
    e_x: float | None = None,
    constants: tuple[str, ...] | None = None,
) -> BoundReport:
    """Evaluate e_x >= -C * integral(n^(4/3)) for every applicable constant.

    e_x defaults to the closed-shell exchange of the density.  Selecting a
    constant whose spin class does not match the density raises
    ApplicabilityError; by default only applicable constants are evaluated.
    """
    if e_x is None:
        e_x = exchange_closed_shell(d)
    i43 = integral_n43(d)
    u = hartree_energy(d)
    spin = "polarized" if d.polarized else "unpolarized"
    selected = []
    for bc in BOUND_CONSTANTS:
        applicable = bc.spin in ("any", spin)
        if constants is None:
            if applicable:
                selected.append(bc)
        elif bc.name in constants:
            if not applicable:
                raise ApplicabilityError(
                    f"constant {bc.name} applies to {bc.spin} densities, "
                    f"but this density is {spin}"
                )
            selected.append(bc)
    checks = tuple(
        BoundCheck(
            name=bc.name,
            constant=bc.value,
            source_label=bc.source_label,
            ratio=e_x / (-bc.value * i43),
            passed=e_x >= -bc.value * i43,
            informational=bc.informational,
        )
        for bc in selected
    )
    return BoundReport(
        family=d.family, params=dict(d.params), n_electrons=d.n_electrons,
        polarized=d.polarized, i43=i43, u_hartree=u, e_x=e_x, checks=checks,
    )
