"""Bi-orthogonal vector pairs in C^2 and rank-one synthesis of the deformed
generators.

Given orthonormal seed vectors v1, v2 and an invertible transform T, the
families phi_j = T v_j and chi_j = (T^-1)^dagger v_j satisfy
<phi_j | chi_k> = <v_j | v_k> identically, so orthonormal seeds give a
bi-orthogonal system for any invertible T (Hermiticity of T is not needed).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .multivector import deformation_transform

_SEED_TOL = 1e-10


@dataclass(frozen=True)
class BiorthoPair:
    """A bi-orthogonal pair of bases of C^2 produced by one transform."""

    phi: tuple[np.ndarray, np.ndarray]
    chi: tuple[np.ndarray, np.ndarray]
    source: tuple[np.ndarray, np.ndarray]
    transform: np.ndarray

    def gram(self) -> np.ndarray:
        """Matrix of inner products <phi_j | chi_k>."""
        return np.array(
            [[np.vdot(pj, ck) for ck in self.chi] for pj in self.phi]
        )


def build_pair(v1: np.ndarray, v2: np.ndarray, transform: np.ndarray) -> BiorthoPair:
    """Construct the pair (T v_j, (T^-1)^dagger v_j) from orthonormal seeds."""
    v1 = np.asarray(v1, dtype=complex).reshape(2)
    v2 = np.asarray(v2, dtype=complex).reshape(2)
    t = np.asarray(transform, dtype=complex).reshape(2, 2)

    scale = max(np.abs(t).max(), 1.0)
    if abs(np.linalg.det(t)) < 1e-12 * scale * scale:
        raise ValueError("non-invertible transform")

    gram = np.array([[np.vdot(a, b) for b in (v1, v2)] for a in (v1, v2)])
    if np.abs(gram - np.eye(2)).max() > _SEED_TOL:
        raise ValueError("seed vectors not orthonormal")

    t_inv_dag = np.linalg.inv(t).conj().T
    return BiorthoPair(
        phi=(t @ v1, t @ v2),
        chi=(t_inv_dag @ v1, t_inv_dag @ v2),
        source=(v1, v2),
        transform=t,
    )


# Coefficient tables c^(m)_{jk} of the rank-one synthesis
# sigma_m = i^(m+1) sum_jk c^(m)_{jk} |phi_j><chi_k|,
# pinned by the requirement that theta = 0 reproduces the Pauli matrices.
_SYNTH_COEFFS = (
    np.array([[-1.0, 0.0], [0.0, 1.0]]),   # m=1: (-1)^j delta_jk
    np.array([[0.0, -1.0], [1.0, 0.0]]),   # m=2: (-1)^j (1 - delta_jk)
    np.array([[0.0, 1.0], [1.0, 0.0]]),    # m=3: (1 - delta_jk)
)


def synthesize_generators(pair: BiorthoPair) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Assemble the three deformed vector generators from rank-one projectors.

    Requires the canonical seed family v_j = (1, (-1)^(j-1))/sqrt(2); any
    other seed family is rejected.
    """
    expected = (
        np.array([1.0, 1.0]) / np.sqrt(2.0),
        np.array([1.0, -1.0]) / np.sqrt(2.0),
    )
    for v, want in zip(pair.source, expected):
        if np.abs(v - want).max() > _SEED_TOL:
            raise ValueError("unsupported seed")

    out = []
    for m, coeffs in enumerate(_SYNTH_COEFFS, start=1):
        acc = np.zeros((2, 2), dtype=complex)
        for j in range(2):
            for k in range(2):
                if coeffs[j, k] != 0.0:
                    acc += coeffs[j, k] * np.outer(pair.phi[j], np.conj(pair.chi[k]))
        out.append((1j) ** (m + 1) * acc)
    return tuple(out)


def canonical_pair(theta: float) -> BiorthoPair:
    """Pair from the canonical seeds and the deformation transform at angle theta."""
    v1 = np.array([1.0, 1.0]) / np.sqrt(2.0)
    v2 = np.array([1.0, -1.0]) / np.sqrt(2.0)
    return build_pair(v1, v2, deformation_transform(np.sin(theta)))
