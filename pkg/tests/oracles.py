"""Independent reference implementations used to validate the package.

Everything here is deliberately built differently from the library code:
the dimer is diagonalized in the full 6-dimensional two-electron Fock
sector with dense numpy.linalg.eigh, and the restricted HF minimum is
located by brute-force sampling.  No library internals are reused.
"""

import math

import numpy as np

# spin-orbital order: (site1,up), (site1,down), (site2,up), (site2,down)
_N_ORB = 4


def _apply(state, orb, dagger):
    """Act with c_orb (dagger=False) or c_orb^dagger on a bitmask state.
    Returns (sign, new_state) or None if annihilated."""
    occ = (state >> orb) & 1
    if dagger == bool(occ):
        return None
    sign = -1 if bin(state & ((1 << orb) - 1)).count("1") % 2 else 1
    return sign, state ^ (1 << orb)


def _two_electron_sector():
    return [s for s in range(1 << _N_ORB) if bin(s).count("1") == 2]


def dimer_operators(t, u, dv, lam=1.0):
    """Kinetic, potential, and interaction matrices in the N=2 sector.

    Site potentials are v1 = -dv/2, v2 = +dv/2 and the interaction is scaled
    by lam (adiabatic-connection coupling).
    """
    states = _two_electron_sector()
    idx = {s: i for i, s in enumerate(states)}
    dim = len(states)
    kin = np.zeros((dim, dim))
    pot = np.zeros((dim, dim))
    inter = np.zeros((dim, dim))
    for s in states:
        i = idx[s]
        for orb in range(_N_ORB):
            if (s >> orb) & 1:
                pot[i, i] += -0.5 * dv if orb < 2 else 0.5 * dv
        if (s & 0b0001) and (s & 0b0010):
            inter[i, i] += lam * u
        if (s & 0b0100) and (s & 0b1000):
            inter[i, i] += lam * u
        # hopping -t (c1s^dag c2s + c2s^dag c1s) for both spins
        for dst, src in ((0, 2), (2, 0), (1, 3), (3, 1)):
            first = _apply(s, src, False)
            if first is None:
                continue
            sg1, s1 = first
            second = _apply(s1, dst, True)
            if second is None:
                continue
            sg2, s2 = second
            kin[idx[s2], i] += -t * sg1 * sg2
    return kin, pot, inter, states


def dimer_ground_state(t, u, dv, lam=1.0):
    """Full-sector diagonalization.  Returns a dict with energy, occupation
    difference dn = n2 - n1, kinetic and interaction expectations."""
    kin, pot, inter, states = dimer_operators(t, u, dv, lam)
    w, v = np.linalg.eigh(kin + pot + inter)
    g = v[:, 0]
    n1 = np.zeros(len(states))
    n2 = np.zeros(len(states))
    for i, s in enumerate(states):
        n1[i] = ((s >> 0) & 1) + ((s >> 1) & 1)
        n2[i] = ((s >> 2) & 1) + ((s >> 3) & 1)
    return {
        "energy": w[0],
        "dn": float(g @ (np.diag(n2 - n1)) @ g),
        "kinetic": float(g @ kin @ g),
        "interaction": float(g @ inter @ g) / lam if lam != 0.0 else 0.0,
        "spectrum": w,
    }


def hf_brute_force(t, u, dv, n_theta=2_000_001):
    """Restricted HF by dense sampling of the orbital mixing angle."""
    theta = np.linspace(0.0, 0.5 * math.pi, n_theta)
    a, b = np.cos(theta), np.sin(theta)
    energy = -dv * (a * a - b * b) - 4.0 * t * a * b + u * (a**4 + b**4)
    i = int(np.argmin(energy))
    return {"theta": theta[i], "e_hf": float(energy[i]), "t_hf": float(-4.0 * t * a[i] * b[i])}


def constrained_dv_scan(dn_target, t, u, lam, n_dv=601, dv_span=30.0):
    """Locate the dv reproducing dn_target: coarse scan finds the sign change
    of dn(dv) - dn_target, bisection pinches it, all through the full-sector
    oracle (dn is monotone in dv)."""
    gap = lambda dv: dimer_ground_state(t, u, dv, lam)["dn"] - dn_target
    dvs = np.linspace(-dv_span, dv_span, n_dv)
    lo = hi = None
    prev_dv, prev_gap = None, None
    for dv in dvs:
        g = gap(dv)
        if prev_gap is not None and prev_gap * g <= 0.0:
            lo, hi = prev_dv, dv
            break
        prev_dv, prev_gap = dv, g
    if lo is None:
        raise RuntimeError("no crossing found in oracle dv scan")
    g_lo = gap(lo)
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        g_mid = gap(mid)
        if g_lo * g_mid <= 0.0:
            hi = mid
        else:
            lo, g_lo = mid, g_mid
    return 0.5 * (lo + hi)
