"""Galilean linearization matrices, Clifford momenta and the Hamiltonian
factories (generalized, Rashba and magnetic/Zeeman variants).

All operators act on plane waves, so they are realized as matrix-valued
functions of the classical momentum label p (hbar = m = 1, unit charge).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .multivector import make_deformed_basis


@dataclass(frozen=True)
class LinearizationSet:
    """The 4x4 matrices of the first-order (linearized) Schroedinger system."""

    l: np.ndarray
    l_prime: np.ndarray
    n: np.ndarray
    n_prime: np.ndarray
    m: tuple[np.ndarray, ...]           # M_1..M_5
    m_prime: tuple[np.ndarray, ...]     # M_1'..M_5'
    lam: np.ndarray                     # Lambda = offdiag(1, 1)
    gamma_matrices: tuple[np.ndarray, ...]  # gamma_1..gamma_4


def build_linearization(gamma: float = 0.0) -> LinearizationSet:
    """Construct the linearization matrices; the defining relations

    L'L = 0,  N'N = 0,  L'N + N'L = 2,  L'M_j + M_j'L = 0,
    N'M_i + M_i'N = 0,  M_i'M_j + M_j'M_i = -2 delta_ij

    hold for every deformation parameter since they are similarity images of
    the undeformed system.
    """
    basis = make_deformed_basis(gamma)
    e1, e2, e3 = basis.vectors
    z2 = np.zeros((2, 2), dtype=complex)
    i2 = np.eye(2, dtype=complex)

    def offdiag(a, b):
        return np.block([[z2, a], [b, z2]])

    gammas = tuple(offdiag(e, e) for e in (e1, e2, e3))
    gamma4 = np.diag([1.0, 1.0, -1.0, -1.0]).astype(complex)
    lam = offdiag(i2, i2)
    lam_inv = lam  # Lambda is its own inverse

    m5 = -1j * lam
    m5_prime = -1j * lam_inv
    m4 = lam @ gamma4
    m4_prime = -gamma4 @ lam_inv
    m = tuple(lam @ g for g in gammas) + (m4, m5)
    m_prime = tuple(-g @ lam_inv for g in gammas) + (m4_prime, m5_prime)

    # Invert the identifications M4 = i(L + N/2), M5 = L - N/2.
    l = (m5 - 1j * m4) / 2.0
    n = -1j * m4 - m5
    l_prime = (m5_prime - 1j * m4_prime) / 2.0
    n_prime = -1j * m4_prime - m5_prime

    return LinearizationSet(
        l=l, l_prime=l_prime, n=n, n_prime=n_prime,
        m=m, m_prime=m_prime, lam=lam, gamma_matrices=gammas + (gamma4,),
    )


@dataclass(frozen=True)
class CliffordMomentum:
    """The shifted momentum 1-blade p -> sum_j e_j^gamma (p_j + Q_j)."""

    gamma: float
    shift: tuple[complex, complex, complex] = (0.0, 0.0, 0.0)

    def evaluate(self, p) -> np.ndarray:
        p3 = _pad3(p)
        e1, e2, e3 = make_deformed_basis(self.gamma).vectors
        q = self.shift
        return (e1 * (p3[0] + q[0]) + e2 * (p3[1] + q[1]) + e3 * (p3[2] + q[2]))

    def __call__(self, p) -> np.ndarray:
        return self.evaluate(p)


def _pad3(p) -> np.ndarray:
    p = np.asarray(p, dtype=float).reshape(-1)
    if p.size == 2:
        p = np.append(p, 0.0)
    if p.size != 3:
        raise ValueError("momentum must have 2 or 3 components")
    return p


@dataclass(frozen=True)
class MomentumHamiltonian:
    """Half the product of two Clifford momenta, stored structurally.

    evaluate(p) assembles the matrix from the structured coefficients:
    a kinetic scalar, three bivector interaction coefficients, and an
    optional Zeeman coefficient on e3^gamma.  ``left_shift`` belongs to the
    left factor of the product and ``right_shift`` to the right one.
    """

    gamma: float
    left_shift: tuple[complex, complex, complex]
    right_shift: tuple[complex, complex, complex]
    zeeman: float = 0.0
    beta: float = 0.0
    sign: int = 0

    def kinetic(self, p) -> complex:
        p3 = _pad3(p)
        ls, rs = self.left_shift, self.right_shift
        return 0.5 * sum((p3[j] + ls[j]) * (p3[j] + rs[j]) for j in range(3))

    def interaction(self, p) -> dict[str, complex]:
        """Coefficients over the bivector blades {e12, e23, e31}."""
        p3 = _pad3(p)
        l = [p3[j] + self.left_shift[j] for j in range(3)]
        r = [p3[j] + self.right_shift[j] for j in range(3)]
        return {
            "e12": 0.5 * (l[0] * r[1] - l[1] * r[0]),
            "e23": 0.5 * (l[1] * r[2] - l[2] * r[1]),
            "e31": 0.5 * (l[2] * r[0] - l[0] * r[2]),
        }

    def evaluate(self, p) -> np.ndarray:
        basis = make_deformed_basis(self.gamma)
        _, _, _, e3g, e12g, e23g, e31g, _ = basis.generators
        coeffs = self.interaction(p)
        out = self.kinetic(p) * np.eye(2, dtype=complex)
        out = out + coeffs["e12"] * e12g + coeffs["e23"] * e23g + coeffs["e31"] * e31g
        if self.zeeman != 0.0:
            out = out + self.zeeman * e3g
        return out

    def __call__(self, p) -> np.ndarray:
        return self.evaluate(p)


def factorize(a: CliffordMomentum, b: CliffordMomentum):
    """Hamiltonians H^AB = (1/2) B(p) A(p) and H^BA = (1/2) A(p) B(p)."""
    if a.gamma != b.gamma:
        raise ValueError("mismatched deformation parameters")
    h_ab = MomentumHamiltonian(gamma=a.gamma, left_shift=b.shift, right_shift=a.shift)
    h_ba = MomentumHamiltonian(gamma=a.gamma, left_shift=a.shift, right_shift=b.shift)
    return h_ab, h_ba


def rashba(gamma: float, beta: float, sign: int = 1) -> MomentumHamiltonian:
    """The deformed Rashba Hamiltonian R^sign_gamma.

    sign=+1 gives (1/2) P^B P^A with A = -i(0,0,beta), B = +i(0,0,beta);
    sign=-1 flips beta.  The adjoint of the +gamma operator equals the
    -gamma one entrywise.
    """
    if not abs(gamma) < 1.0:
        raise ValueError(
            "deformation parameter must satisfy |gamma| < 1 (omega would vanish)"
        )
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    b3 = 1j * beta * sign
    return MomentumHamiltonian(
        gamma=gamma,
        left_shift=(0.0, 0.0, b3),
        right_shift=(0.0, 0.0, -b3),
        beta=beta,
        sign=sign,
    )


def magnetic(gamma: float, beta: float, a_vec, b3: float,
             branch: int = 1) -> MomentumHamiltonian:
    """Rashba Hamiltonian with a constant in-plane gauge shift and Zeeman term.

    H^branch = (1/2)[(p1+A1)^2 + (p2+A2)^2 + beta^2]
               + branch * i beta [e31 (p1+A1) - e23 (p2+A2)] + e3 B3,

    realized as half the ordered product of the two shifted Clifford momenta
    p_j + A_j +- i beta delta_j3, plus the Zeeman coefficient.
    """
    if not abs(gamma) < 1.0:
        raise ValueError(
            "deformation parameter must satisfy |gamma| < 1 (omega would vanish)"
        )
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    a_vec = np.asarray(a_vec, dtype=float).reshape(2)
    shift3 = 1j * beta * branch
    return MomentumHamiltonian(
        gamma=gamma,
        left_shift=(a_vec[0], a_vec[1], shift3),
        right_shift=(a_vec[0], a_vec[1], -shift3),
        zeeman=float(b3),
        beta=beta,
        sign=branch,
    )


def momentum_factors(h: MomentumHamiltonian) -> tuple[CliffordMomentum, CliffordMomentum]:
    """The (left, right) Clifford momentum factors of a structured Hamiltonian."""
    return (
        CliffordMomentum(gamma=h.gamma, shift=h.left_shift),
        CliffordMomentum(gamma=h.gamma, shift=h.right_shift),
    )
