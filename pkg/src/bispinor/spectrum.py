"""Closed-form spectrum of the deformed Rashba Hamiltonian: eigenvalues,
bi-orthogonal eigenspinors, projectors, angle (flip) relations, associated
expectations, spin vectors and the current-density continuity check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .momenta import rashba
from .multivector import SIGMA1, SIGMA2, SIGMA3

_SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True)
class FiniteSpinor:
    """Two complex amplitudes tensored with a formal plane-wave label.

    The plane-wave factor e^(i * wave_sign * p.x) is kept as a label
    (momentum, wave_sign); inner products carry a delta factor realized as
    label equality.
    """

    amplitudes: tuple[complex, complex]
    momentum: tuple[float, float]
    wave_sign: int = 1

    def __post_init__(self):
        amps = tuple(complex(a) for a in self.amplitudes)
        mom = tuple(float(x) for x in self.momentum)
        if len(amps) != 2 or len(mom) != 2:
            raise ValueError("finite spinor needs 2 amplitudes and a 2d momentum")
        if self.wave_sign not in (1, -1):
            raise ValueError("wave_sign must be +1 or -1")
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "momentum", mom)

    def amplitude_array(self) -> np.ndarray:
        return np.array(self.amplitudes, dtype=complex)

    def same_label(self, other: "FiniteSpinor") -> bool:
        return (self.wave_sign == other.wave_sign
                and self.momentum == other.momentum)


def biortho_inner(a: FiniteSpinor, b: FiniteSpinor) -> complex:
    """Inner product, conjugate-linear in the first argument, with the
    delta-normalized momentum factor reduced to label matching."""
    if not a.same_label(b):
        return 0.0 + 0.0j
    return complex(np.vdot(a.amplitude_array(), b.amplitude_array()))


@dataclass(frozen=True)
class EigenSystem:
    """Closed-form eigendata of R^+_gamma(p) and its adjoint partner."""

    gamma: float
    beta: float
    momentum: tuple[float, float]
    wave_sign: int
    lambda_plus: float
    lambda_minus: float
    phi_plus: float
    phi_minus: float
    psi_plus: FiniteSpinor
    psi_minus: FiniteSpinor
    dual_plus: FiniteSpinor
    dual_minus: FiniteSpinor


def eigenvalues(beta: float, p) -> tuple[float, float]:
    """lambda_pm = (p^2 + beta^2)/2 +- beta |p| (closed form)."""
    p = np.asarray(p, dtype=float)
    pnorm = float(np.hypot(p[0], p[1]))
    base = 0.5 * (pnorm * pnorm + beta * beta)
    return base + beta * pnorm, base - beta * pnorm


def eigenvalue_oracle(h: np.ndarray) -> tuple[float, float]:
    """Roots of the characteristic polynomial of a 2x2 matrix via the
    quadratic formula (independent of the closed-form eigenvalue formula);
    returned sorted descending by real part."""
    tr = h[0, 0] + h[1, 1]
    det = h[0, 0] * h[1, 1] - h[0, 1] * h[1, 0]
    disc = np.sqrt(tr * tr / 4.0 - det + 0j)
    roots = sorted((tr / 2.0 + disc, tr / 2.0 - disc), key=lambda z: -z.real)
    return complex(roots[0]), complex(roots[1])


def _phi_numden(gamma: float, p, branch: int) -> tuple[float, float]:
    p = np.asarray(p, dtype=float)
    omega = np.sqrt(1.0 - gamma * gamma)
    pnorm = np.hypot(p[0], p[1])
    num = omega * omega * p[0] * pnorm - branch * gamma * p[1] * p[1]
    den = omega * p[1] * pnorm + branch * gamma * omega * p[0] * p[1]
    return num, den


def phi_angles(gamma: float, p) -> tuple[float, float]:
    """The angles (phi_plus, phi_minus) with the quadrant fixed by the
    two-argument arctangent of (numerator, denominator); this is the branch
    under which the printed eigenspinors satisfy the eigen-identity."""
    out = []
    for branch in (1, -1):
        num, den = _phi_numden(gamma, p, branch)
        out.append(float(np.arctan2(num, den)))
    return tuple(out)


def phi_angles_principal(gamma: float, p) -> tuple[float, float]:
    """Principal-branch angles tan^-1(num/den), folded into (-pi/2, pi/2].

    The angle relations under momentum and gamma flips hold exactly on this
    branch (they are tan-level identities); the eigen branch above can differ
    from it by pi.
    """
    out = []
    for branch in (1, -1):
        num, den = _phi_numden(gamma, p, branch)
        raw = float(np.arctan2(num, den))
        folded = (raw + np.pi / 2.0) % np.pi - np.pi / 2.0
        out.append(folded)
    return tuple(out)


def eigensystem(gamma: float, beta: float, p, wave_sign: int = 1) -> EigenSystem:
    """Closed-form eigensystem of R^+_gamma at momentum label p.

    psi_pm are eigenvectors of R^+_gamma(p); dual_pm are the bi-orthogonal
    partners, eigenvectors of R^+_{-gamma}(p) = (R^+_gamma(p))^dagger.  For
    wave_sign = -1 (the e^{-ip.x} family) the finite parts are those of the
    +1 family evaluated at -p, which is the choice that keeps the
    eigen-identity exact.
    """
    if not abs(gamma) < 1.0:
        raise ValueError(
            "deformation parameter must satisfy |gamma| < 1 (omega would vanish)"
        )
    p = np.asarray(p, dtype=float).reshape(2)
    if np.hypot(p[0], p[1]) == 0.0 or beta == 0.0:
        raise ValueError("degenerate splitting")
    if wave_sign not in (1, -1):
        raise ValueError("wave_sign must be +1 or -1")

    q = wave_sign * p
    fp, fm = phi_angles(gamma, q)
    lam_p, lam_m = eigenvalues(beta, p)
    mom = (float(p[0]), float(p[1]))

    psi_plus = FiniteSpinor((np.exp(1j * fp) / _SQRT2, 1.0 / _SQRT2), mom, wave_sign)
    psi_minus = FiniteSpinor((-np.exp(1j * fm) / _SQRT2, 1.0 / _SQRT2), mom, wave_sign)
    dual_plus = FiniteSpinor((1.0 / _SQRT2, np.exp(-1j * fm) / _SQRT2), mom, wave_sign)
    dual_minus = FiniteSpinor((-1.0 / _SQRT2, np.exp(-1j * fp) / _SQRT2), mom, wave_sign)

    return EigenSystem(
        gamma=float(gamma), beta=float(beta), momentum=mom, wave_sign=wave_sign,
        lambda_plus=float(lam_p), lambda_minus=float(lam_m),
        phi_plus=fp, phi_minus=fm,
        psi_plus=psi_plus, psi_minus=psi_minus,
        dual_plus=dual_plus, dual_minus=dual_minus,
    )


@dataclass(frozen=True)
class ProjectorPair:
    pi1: np.ndarray
    pi2: np.ndarray


def projectors(es: EigenSystem) -> ProjectorPair:
    """Finite parts of the bi-orthogonal spectral projectors of R^+_gamma(p)."""
    ep = np.exp(1j * es.phi_plus)
    em = np.exp(1j * es.phi_minus)
    den = ep + em
    if abs(den) < 1e-9:
        raise ValueError("projector singular")
    pi1 = np.array([[ep, ep * em], [1.0, em]], dtype=complex) / den
    pi2 = np.array([[em, -ep * em], [-1.0, ep]], dtype=complex) / den
    return ProjectorPair(pi1=pi1, pi2=pi2)


def flip_relations(gamma: float, p) -> dict[str, float]:
    """Residuals (modulo 2 pi) of the angle relations under momentum and
    gamma flips, evaluated on the principal branch:

    (a) phi_-+(p, g) = phi_+-(-p, g) = phi_+-(p, -g)
    (b) phi_pm(-p, -g) = phi_pm(p, g)
    (c) phi_pm(-p1, p2) + phi_-+(p1, p2) = 0 = phi_pm(p1, -p2) + phi_pm(p1, p2)
    """
    p = np.asarray(p, dtype=float).reshape(2)

    def wrap(x: float) -> float:
        return abs(float(np.angle(np.exp(1j * x))))

    fp, fm = phi_angles_principal(gamma, p)
    fp_mp, fm_mp = phi_angles_principal(gamma, -p)
    fp_mg, fm_mg = phi_angles_principal(-gamma, p)
    fp_mpmg, fm_mpmg = phi_angles_principal(-gamma, -p)
    fp_m1, fm_m1 = phi_angles_principal(gamma, np.array([-p[0], p[1]]))
    fp_m2, fm_m2 = phi_angles_principal(gamma, np.array([p[0], -p[1]]))

    res_a = max(wrap(fm - fp_mp), wrap(fm - fp_mg),
                wrap(fp - fm_mp), wrap(fp - fm_mg))
    res_b = max(wrap(fp_mpmg - fp), wrap(fm_mpmg - fm))
    res_c = max(wrap(fp_m1 + fm), wrap(fm_m1 + fp),
                wrap(fp_m2 + fp), wrap(fm_m2 + fm))
    return {"a": res_a, "b": res_b, "c": res_c}


def associated_expectation(c_plus: complex, c_minus: complex,
                           k: np.ndarray, es: EigenSystem) -> complex:
    """Expectation <assoc | K | psi> / <assoc | psi> for the mixture
    psi = c+ psi_+ + c- psi_- and its associated state built from the duals."""
    a = c_plus * es.psi_plus.amplitude_array() + c_minus * es.psi_minus.amplitude_array()
    d = c_plus * es.dual_plus.amplitude_array() + c_minus * es.dual_minus.amplitude_array()
    den = np.vdot(d, a)
    if abs(den) < 1e-12:
        raise ValueError("vanishing associated norm")
    return complex(np.vdot(d, np.asarray(k, dtype=complex) @ a) / den)


def spin_vector(psi: FiniteSpinor) -> tuple[float, float, float]:
    """Pauli expectations of the finite part in the conventional inner product."""
    a = psi.amplitude_array()
    return tuple(float(np.vdot(a, s @ a).real) for s in (SIGMA1, SIGMA2, SIGMA3))


def continuity_residual(gamma: float, beta: float, mix, sample_grid,
                        dt: float, dx: float, t0: float = 0.2) -> float:
    """Finite-difference residual of d(rho)/dt + div<J> for a superposition
    of plane-wave eigenstates of the deformed Rashba model.

    ``mix`` is a sequence of (coefficient, FiniteSpinor, energy) triples.
    The current has the paramagnetic piece plus the beta-dependent spin piece
    with weights (-beta sigma2, beta/omega sigma1).  Central differences of
    step dt / dx give a second-order-accurate residual.
    """
    if dt <= 0 or dx <= 0:
        raise ValueError("steps must be positive")
    mix = list(mix)
    if not mix:
        raise ValueError("empty mixture")

    def psi_at(x, t):
        out = np.zeros(2, dtype=complex)
        for c, sp, energy in mix:
            phase = sp.wave_sign * (sp.momentum[0] * x[0] + sp.momentum[1] * x[1])
            out += c * sp.amplitude_array() * np.exp(1j * phase - 1j * energy * t)
        return out

    return _continuity_residual_field(psi_at, sample_grid, dt, dx, t0,
                                      gamma=gamma, beta=beta)


def _continuity_residual_field(psi_at, sample_grid, dt, dx, t0,
                               gamma=None, beta=None):
    if gamma is None or beta is None:
        raise ValueError("model parameters required")
    omega = np.sqrt(1.0 - gamma * gamma)

    def rho(x, t):
        v = psi_at(x, t)
        return float(np.vdot(v, v).real)

    def current(x, t):
        v = psi_at(x, t)
        vx1p = psi_at((x[0] + dx, x[1]), t)
        vx1m = psi_at((x[0] - dx, x[1]), t)
        vx2p = psi_at((x[0], x[1] + dx), t)
        vx2m = psi_at((x[0], x[1] - dx), t)
        d1 = (vx1p - vx1m) / (2.0 * dx)
        d2 = (vx2p - vx2m) / (2.0 * dx)
        j1 = float(np.vdot(v, d1).imag) - beta * float(np.vdot(v, SIGMA2 @ v).real)
        j2 = float(np.vdot(v, d2).imag) + (beta / omega) * float(np.vdot(v, SIGMA1 @ v).real)
        return j1, j2

    worst = 0.0
    for point in sample_grid:
        x = (float(point[0]), float(point[1]))
        drho = (rho(x, t0 + dt) - rho(x, t0 - dt)) / (2.0 * dt)
        j1p, _ = current((x[0] + dx, x[1]), t0)
        j1m, _ = current((x[0] - dx, x[1]), t0)
        _, j2p = current((x[0], x[1] + dx), t0)
        _, j2m = current((x[0], x[1] - dx), t0)
        div = (j1p - j1m) / (2.0 * dx) + (j2p - j2m) / (2.0 * dx)
        worst = max(worst, abs(drho + div))
    return worst


def rashba_matrix(gamma: float, beta: float, p) -> np.ndarray:
    """Convenience: the matrix R^+_gamma(p)."""
    return rashba(gamma, beta, 1).evaluate(p)
