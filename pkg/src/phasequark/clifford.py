"""8x8 Clifford generators for three colored Dirac structures.

All matrices are triple Kronecker products of Pauli matrices.  kron3 uses
the convention that the first factor varies slowest (it carries the 4x4
block index), i.e. kron3(a, b, c) = kron(kron(a, b), c).

The generator set is

    A_k = kron3(s_k, s1, s0)     k = 1..3
    B   = kron3(s0, s3, s0)
    B_k = kron3(s0, s2, s_k)     k = 1..3

These seven matrices are Hermitian involutions and pairwise anticommute,
a rank-7 Clifford family; every entry lies in {0, +-1, +-i}, so identities
between their products hold exactly in complex floating point and are
checked with exact equality.  The middle factor of B_k must be s2: with any
other choice B_k would fail to anticommute with the A_k or with B, and the
mixed momentum-position cross terms of squared Hamiltonians would survive.

Charge conjugation uses C(tau) = -i * kron3(s2, s2, tau) with tau a Pauli
matrix, so C^2 = -1 and C^-1 = -C.  Only tau = s2 satisfies all of

    C B C^-1 = -B,  C conj(A_k) C^-1 = A_k,  C conj(B_k) C^-1 = B_k;

tau = s0, s1, s3 each break the B_k rule for at least one k.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "OperatorMatrix",
    "PAULI",
    "kron3",
    "build_A",
    "build_B",
    "build_Bk",
    "clifford_generators",
    "anticommutator",
    "commutator8",
    "reflect",
    "conjugate_matrix",
    "build_C",
    "charge_conjugation_tau_scan",
    "build_gamma5",
    "build_colored_gamma5",
]

OperatorMatrix = np.ndarray

PAULI: tuple[np.ndarray, ...] = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

_TAU_NAMES = ("s0", "s1", "s2", "s3")


def kron3(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> OperatorMatrix:
    """Triple Kronecker product, first factor outermost (slowest index)."""
    return np.kron(np.kron(np.asarray(a, dtype=complex), b), c)


def kron3_by_index(i: int, j: int, k: int) -> OperatorMatrix:
    """kron3 of Pauli matrices selected by index, e.g. (3, 1, 0)."""
    return kron3(PAULI[i], PAULI[j], PAULI[k])


def build_A(k: int) -> OperatorMatrix:
    """Momentum-sector generator A_k = kron3(s_k, s1, s0)."""
    if k not in (1, 2, 3):
        raise ValueError(f"A index must be 1..3, got {k}")
    return kron3(PAULI[k], PAULI[1], PAULI[0])


def build_B() -> OperatorMatrix:
    """Mass-sector generator B = kron3(s0, s3, s0)."""
    return kron3(PAULI[0], PAULI[3], PAULI[0])


def build_Bk(k: int) -> OperatorMatrix:
    """Position-sector generator B_k = kron3(s0, s2, s_k)."""
    if k not in (1, 2, 3):
        raise ValueError(f"B index must be 1..3, got {k}")
    return kron3(PAULI[0], PAULI[2], PAULI[k])


def clifford_generators() -> list[tuple[str, OperatorMatrix]]:
    """The seven mutually anticommuting involutions (A1..A3, B1..B3, B)."""
    gens = [(f"A{k}", build_A(k)) for k in (1, 2, 3)]
    gens += [(f"B{k}", build_Bk(k)) for k in (1, 2, 3)]
    gens.append(("B", build_B()))
    return gens


def anticommutator(x: np.ndarray, y: np.ndarray) -> OperatorMatrix:
    return x @ y + y @ x


def commutator8(x: np.ndarray, y: np.ndarray) -> OperatorMatrix:
    return x @ y - y @ x


def reflect(x: np.ndarray) -> OperatorMatrix:
    """Conjugation by B; sends every A_k and B_k to its negative."""
    b = build_B()
    return b @ x @ b


def conjugate_matrix(x: np.ndarray) -> OperatorMatrix:
    """Entrywise complex conjugation (the i -> -i substitution)."""
    return np.conj(np.asarray(x, dtype=complex))


def build_C(tau: str = "s2") -> OperatorMatrix:
    """Charge conjugation matrix C = -i * kron3(s2, s2, tau)."""
    if tau not in _TAU_NAMES:
        raise ValueError(f"tau must be one of {_TAU_NAMES}, got {tau!r}")
    return -1j * kron3(PAULI[2], PAULI[2], PAULI[_TAU_NAMES.index(tau)])


def charge_conjugation_tau_scan() -> dict[str, list[int]]:
    """For each tau choice, list the k for which C conj(B_k) C^-1 != B_k.

    The B and A_k rules hold for every tau; only tau = s2 clears the B_k
    rule for all three k, which is why it is the default in build_C.
    """
    failures: dict[str, list[int]] = {}
    for tau in _TAU_NAMES:
        c = build_C(tau)
        cinv = -c
        bad = []
        for k in (1, 2, 3):
            bk = build_Bk(k)
            if not np.array_equal(c @ np.conj(bk) @ cinv, bk):
                bad.append(k)
        failures[tau] = bad
    return failures


def build_gamma5() -> OperatorMatrix:
    """Chirality matrix -i A1 A2 A3 = kron3(s0, s1, s0)."""
    return -1j * (build_A(1) @ build_A(2) @ build_A(3))


def build_colored_gamma5(color: str) -> OperatorMatrix:
    """Colored chirality: -i A_c B_(c+1) B_(c+2), cyclic in the color axis.

    Closed forms: R -> kron3(s1, s1, s1), Y -> kron3(s2, s1, s2),
    B -> kron3(s3, s1, s3).  Each anticommutes with the mass term B.
    """
    order = {"R": (1, 2, 3), "Y": (2, 3, 1), "B": (3, 1, 2)}
    if color not in order:
        raise ValueError(f"color must be one of R, Y, B, got {color!r}")
    c, u, v = order[color]
    return -1j * (build_A(c) @ build_Bk(u) @ build_Bk(v))
