"""Rotation algebra of six-dimensional phase space.

Phase space is coordinatized as v = (p1, p2, p3, x1, x2, x3), momenta first.
The quadratic invariant is p.p + x.x, so the full rotation group of the
space is SO(6).  The subgroup that additionally preserves canonical Poisson
brackets is U(3) = U(1) x SU(3); this module builds its generators, checks
the structure constants, and exponentiates generators into group elements.

Conventions fixed here and used everywhere else in the package:

* Coordinate order (p1, p2, p3, x1, x2, x3); indices in labels are 1-based.
* Antisymmetric plane generators (G(m,n))[i,k] = d(m,i) d(n,k) - d(m,k) d(n,i),
  i.e. +1 in row m column n, -1 in row n column m.
* Symplectic form J = [[0, I3], [-I3, 0]] in (p, x) block order.  A linear
  map M preserves Poisson brackets iff M^T J M = J.
* exp_generator(g, theta) = expm(theta * g.matrix).  With this sign the
  U(1) generator R gives exp(+pi/2 * R): (p, x) -> (-x, p), the momentum
  position interchange whose square is the full reflection -1.  The inverse
  quarter turn exp(-pi/2 * R) realizes (p, x) -> (x, -p).

The eight SU(3) generators F1..F8 close as [Fi, Fk] = 2 f_ikj Fj with
totally antisymmetric structure constants

    f_123 = 1,
    f_147 = f_165 = f_246 = f_257 = f_345 = f_376 = 1/2,
    f_458 = f_678 = sqrt(3)/2,

and the U(1) generator R = R1 + R2 + R3 commutes with all of them.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.linalg import expm

__all__ = [
    "COORD_NAMES",
    "PhaseVector",
    "Generator6",
    "StructureConstants",
    "PairingScheme",
    "DerivedPairing",
    "build_G",
    "build_F",
    "build_R",
    "build_H",
    "build_J",
    "commutator6",
    "structure_constants",
    "verify_su3_table",
    "exp_generator",
    "is_orthogonal",
    "is_symplectic",
    "symplectic_form",
    "pairing",
    "pairing_tags",
    "apply_pairing",
    "derive_pairing_from_rotation",
    "derive_pairing_from_diagonal",
    "diagonal_generator",
]

COORD_NAMES = ("p1", "p2", "p3", "x1", "x2", "x3")

_SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class PhaseVector:
    """A point (p, x) of six-dimensional phase space."""

    p: tuple[float, float, float]
    x: tuple[float, float, float]

    @classmethod
    def from_array(cls, v: Sequence[float]) -> "PhaseVector":
        a = np.asarray(v, dtype=float).reshape(-1)
        if a.shape != (6,):
            raise ValueError(f"phase vector needs 6 components, got {a.shape}")
        return cls(p=(a[0], a[1], a[2]), x=(a[3], a[4], a[5]))

    def as_array(self) -> np.ndarray:
        return np.array([*self.p, *self.x], dtype=float)


@dataclass(frozen=True)
class Generator6:
    """Labeled real antisymmetric 6x6 matrix, an so(6) element."""

    label: str
    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=float)
        if m.shape != (6, 6):
            raise ValueError(f"{self.label}: generator must be 6x6, got {m.shape}")
        if not np.array_equal(m, -m.T):
            raise ValueError(f"{self.label}: generator must be antisymmetric")
        object.__setattr__(self, "matrix", m)


def build_G(m: int, n: int) -> Generator6:
    """Plane rotation generator with +1 at (m, n) and -1 at (n, m), 1-based."""
    if not (1 <= m <= 6 and 1 <= n <= 6):
        raise ValueError(f"G indices must be in 1..6, got ({m}, {n})")
    if m == n:
        raise ValueError(f"G indices must differ, got ({m}, {n})")
    g = np.zeros((6, 6))
    g[m - 1, n - 1] = 1.0
    g[n - 1, m - 1] = -1.0
    return Generator6(label=f"G({m},{n})", matrix=g)


def _gsum(label: str, terms: Iterable[tuple[float, int, int]]) -> Generator6:
    m = np.zeros((6, 6))
    for coeff, a, b in terms:
        m += coeff * build_G(a, b).matrix
    return Generator6(label=label, matrix=m)


# SU(3) basis.  F3 and F8 span the Cartan subalgebra; F6, -F4, -F1 are the
# momentum/position quarter-turn generators H1, H2, H3, and F7, F5, -F2 are
# the simultaneous (p, x) space rotations J1, J2, J3.
_F_TERMS: dict[int, list[tuple[float, int, int]]] = {
    1: [(1, 1, 5), (1, 2, 4)],
    2: [(1, 1, 2), (1, 4, 5)],
    3: [(1, 4, 1), (-1, 5, 2)],
    4: [(1, 3, 4), (1, 1, 6)],
    5: [(1, 1, 3), (1, 4, 6)],
    6: [(1, 6, 2), (1, 5, 3)],
    7: [(1, 3, 2), (1, 6, 5)],
    8: [(1 / _SQRT3, 4, 1), (1 / _SQRT3, 5, 2), (-2 / _SQRT3, 6, 3)],
}


def build_F(i: int) -> Generator6:
    """SU(3) generator F1..F8."""
    if i not in _F_TERMS:
        raise ValueError(f"F index must be in 1..8, got {i}")
    return _gsum(f"F{i}", _F_TERMS[i])


def build_R(i: int | None = None) -> Generator6:
    """U(1) generator R = R1 + R2 + R3, or a single Ri = G(i+3, i)."""
    if i is None:
        return _gsum("R", [(1, 4, 1), (1, 5, 2), (1, 6, 3)])
    if i not in (1, 2, 3):
        raise ValueError(f"R index must be 1..3, got {i}")
    return Generator6(label=f"R{i}", matrix=build_G(i + 3, i).matrix)


def build_H(i: int) -> Generator6:
    """Momentum-position quarter-turn generator: H1 = F6, H2 = -F4, H3 = -F1."""
    if i == 1:
        return Generator6("H1", build_F(6).matrix)
    if i == 2:
        return Generator6("H2", -build_F(4).matrix)
    if i == 3:
        return Generator6("H3", -build_F(1).matrix)
    raise ValueError(f"H index must be 1..3, got {i}")


def build_J(i: int) -> Generator6:
    """Ordinary space rotation about axis i, acting on p and x together."""
    if i == 1:
        return Generator6("J1", build_F(7).matrix)
    if i == 2:
        return Generator6("J2", build_F(5).matrix)
    if i == 3:
        return Generator6("J3", -build_F(2).matrix)
    raise ValueError(f"J index must be 1..3, got {i}")


def commutator6(a: Generator6 | np.ndarray, b: Generator6 | np.ndarray) -> np.ndarray:
    """Matrix commutator [a, b] of 6x6 generators."""
    ma = a.matrix if isinstance(a, Generator6) else np.asarray(a, dtype=float)
    mb = b.matrix if isinstance(b, Generator6) else np.asarray(b, dtype=float)
    return ma @ mb - mb @ ma


# Canonical nonzero structure constants f_ikj, one representative per orbit.
_F_CANONICAL: dict[tuple[int, int, int], float] = {
    (1, 2, 3): 1.0,
    (1, 4, 7): 0.5,
    (1, 6, 5): 0.5,
    (2, 4, 6): 0.5,
    (2, 5, 7): 0.5,
    (3, 4, 5): 0.5,
    (3, 7, 6): 0.5,
    (4, 5, 8): _SQRT3 / 2,
    (6, 7, 8): _SQRT3 / 2,
}


@dataclass(frozen=True)
class StructureConstants:
    """Totally antisymmetric table f[i, k, j] with [Fi, Fk] = 2 f_ikj Fj."""

    table: np.ndarray  # shape (9, 9, 9), 1-based indices, slot 0 unused

    @classmethod
    def build(cls) -> "StructureConstants":
        t = np.zeros((9, 9, 9))
        for (i, k, j), v in _F_CANONICAL.items():
            for perm, sign in _signed_permutations((i, k, j)):
                t[perm] = sign * v
        return cls(table=t)

    def coefficient(self, i: int, k: int, j: int) -> float:
        return float(self.table[i, k, j])

    def canonical_triples(self) -> dict[tuple[int, int, int], float]:
        return dict(_F_CANONICAL)


def _signed_permutations(triple: tuple[int, int, int]):
    for perm in itertools.permutations(range(3)):
        inv = sum(1 for a in range(3) for b in range(a + 1, 3) if perm[a] > perm[b])
        yield tuple(triple[q] for q in perm), (-1.0) ** inv


def structure_constants() -> StructureConstants:
    return StructureConstants.build()


def verify_su3_table(tol: float = 1e-12) -> tuple[bool, float, list[dict]]:
    """Re-derive [Fi, Fk] coefficients from matrix commutators.

    For each of the 28 pairs i < k the commutator is projected onto the
    orthogonal F basis (Frobenius inner product; each generator has squared
    norm 4) and compared against 2 f_ikj from the stored table.  Returns
    (all_ok, max_residual, rows); the residual of a pair combines the
    coefficient mismatch and the norm of any component outside the span.
    """
    F = [build_F(i).matrix for i in range(1, 9)]
    sc = structure_constants()
    rows: list[dict] = []
    worst = 0.0
    for i in range(1, 9):
        for k in range(i + 1, 9):
            c = commutator6(F[i - 1], F[k - 1])
            coeffs = np.array([np.trace(c.T @ F[j - 1]) / 4.0 for j in range(1, 9)])
            expected = np.array([2.0 * sc.coefficient(i, k, j) for j in range(1, 9)])
            span = sum(coeffs[j] * F[j] for j in range(8))
            off_span = float(np.abs(c - span).max())
            resid = max(float(np.abs(coeffs - expected).max()), off_span)
            worst = max(worst, resid)
            rows.append(
                {
                    "pair": (i, k),
                    "coefficients": coeffs.tolist(),
                    "expected": expected.tolist(),
                    "residual": resid,
                }
            )
    return worst <= tol, worst, rows


def exp_generator(g: Generator6 | np.ndarray, theta: float) -> np.ndarray:
    """Group element exp(theta * g) via scaling-and-squaring expm."""
    if not math.isfinite(theta):
        raise ValueError(f"angle must be finite, got {theta}")
    m = g.matrix if isinstance(g, Generator6) else np.asarray(g, dtype=float)
    return expm(theta * m)


def symplectic_form() -> np.ndarray:
    """J = [[0, I3], [-I3, 0]] in (p, x) block order."""
    j = np.zeros((6, 6))
    j[:3, 3:] = np.eye(3)
    j[3:, :3] = -np.eye(3)
    return j


def is_orthogonal(m: np.ndarray, tol: float = 1e-12) -> bool:
    m = np.asarray(m, dtype=float)
    return float(np.abs(m.T @ m - np.eye(6)).max()) <= tol


def is_symplectic(m: np.ndarray, tol: float = 1e-12) -> bool:
    m = np.asarray(m, dtype=float)
    j = symplectic_form()
    return float(np.abs(m.T @ j @ m - j).max()) <= tol


# ---------------------------------------------------------------------------
# Canonical pairings ("colored" momentum/position splits)
# ---------------------------------------------------------------------------

_SIGNED = {
    "p1": (1, 0), "p2": (1, 1), "p3": (1, 2),
    "x1": (1, 3), "x2": (1, 4), "x3": (1, 5),
    "-p1": (-1, 0), "-p2": (-1, 1), "-p3": (-1, 2),
    "-x1": (-1, 3), "-x2": (-1, 4), "-x3": (-1, 5),
}


@dataclass(frozen=True)
class PairingScheme:
    """A split of phase space into canonically conjugate triplets.

    momenta[i] and positions[i] are (sign, coordinate_index) pairs naming the
    signed original coordinate that plays the role of generalized momentum
    and generalized position number i.  Every scheme below satisfies
    {X_i, P_k} = d(i, k) for the standard bracket {x_i, p_k} = d(i, k),
    equivalently matrix() is symplectic.
    """

    label: str
    momenta: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]
    positions: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]

    def matrix(self) -> np.ndarray:
        """Signed permutation sending v to (P1, P2, P3, X1, X2, X3)."""
        m = np.zeros((6, 6))
        for row, (sign, col) in enumerate(self.momenta + self.positions):
            m[row, col] = float(sign)
        return m

    def describe(self) -> dict:
        names = []
        for sign, col in self.momenta + self.positions:
            names.append(("-" if sign < 0 else "") + COORD_NAMES[col])
        return {"label": self.label, "momenta": names[:3], "positions": names[3:]}


def _scheme(label: str, momenta: Sequence[str], positions: Sequence[str]) -> PairingScheme:
    return PairingScheme(
        label=label,
        momenta=tuple(_SIGNED[s] for s in momenta),  # type: ignore[arg-type]
        positions=tuple(_SIGNED[s] for s in positions),  # type: ignore[arg-type]
    )


_BASE_PAIRINGS: dict[str, PairingScheme] = {
    "Standard": _scheme("Standard", ("p1", "p2", "p3"), ("x1", "x2", "x3")),
    "R": _scheme("R", ("p1", "x2", "-x3"), ("x1", "-p2", "p3")),
    "Y": _scheme("Y", ("-x1", "p2", "x3"), ("p1", "x2", "-p3")),
    "B": _scheme("B", ("x1", "-x2", "p3"), ("-p1", "p2", "x3")),
}


def _even_variant(tag: str) -> PairingScheme:
    """Compose a base pairing with the reciprocity quarter turn (p,x)->(x,-p).

    The composed matrix is still a signed permutation; its rows are decoded
    back into signed coordinate slots.  For tag "R" this reproduces the
    printed even pairing ((x1, -p2, p3), (-p1, -x2, x3)).
    """
    base = _BASE_PAIRINGS[tag]
    recip = -build_R().matrix  # exp(-pi/2 * R) evaluated in closed form
    m = base.matrix() @ recip
    slots = []
    for row in range(6):
        col = int(np.flatnonzero(m[row])[0])
        slots.append((int(round(m[row, col])), col))
    return PairingScheme(
        label=f"Even({tag})", momenta=tuple(slots[:3]), positions=tuple(slots[3:])
    )


def pairing_tags() -> tuple[str, ...]:
    return ("Standard", "R", "Y", "B", "Even(Standard)", "Even(R)", "Even(Y)", "Even(B)")


def pairing(tag: str) -> PairingScheme:
    """Look up a pairing scheme by tag, e.g. "R" or "Even(R)"."""
    if tag in _BASE_PAIRINGS:
        return _BASE_PAIRINGS[tag]
    if tag.startswith("Even(") and tag.endswith(")"):
        inner = tag[5:-1]
        if inner in _BASE_PAIRINGS:
            return _even_variant(inner)
    raise ValueError(f"unknown pairing tag {tag!r}; expected one of {pairing_tags()}")


def apply_pairing(scheme: PairingScheme, v: PhaseVector) -> PhaseVector:
    """Read the generalized (momenta, positions) of v under the scheme."""
    return PhaseVector.from_array(scheme.matrix() @ v.as_array())


# ---------------------------------------------------------------------------
# Deriving the colored pairings from group rotations
# ---------------------------------------------------------------------------

_COLOR_AXIS = {"R": 1, "Y": 2, "B": 3}


@dataclass(frozen=True)
class DerivedPairing:
    color: str
    quarter_turn: str          # label of the H generator used
    quarter_turn_angle: float
    ordinary: str              # label of the space rotation completing the map
    ordinary_angle: float
    matrix: np.ndarray
    residual: float            # max |matrix - printed pairing matrix|


def derive_pairing_from_rotation(color: str, tol: float = 1e-12) -> DerivedPairing:
    """Realize pairing(color) as exp(a*Jc) . exp(b*Hc) by direct search.

    The quarter turn exp(+/-pi/2 * Hc) exchanges two momentum/position
    planes; an ordinary rotation about the same axis c then aligns signs
    with the printed pairing.  The search tries both quarter-turn signs and
    ordinary angles over multiples of pi/2, falling back to a fine scan of
    [0, 2pi) if no exact hit appears (it does: angle pi/2 for every color).
    """
    if color not in _COLOR_AXIS:
        raise ValueError(f"color must be one of R, Y, B, got {color!r}")
    axis = _COLOR_AXIS[color]
    h, j = build_H(axis), build_J(axis)
    target = pairing(color).matrix()

    best: tuple[float, float, float, np.ndarray] | None = None
    coarse = [k * math.pi / 2 for k in range(4)]
    fine = [k * 1e-3 * 2 * math.pi for k in range(1000)]
    for h_angle in (math.pi / 2, -math.pi / 2):
        quarter = exp_generator(h, h_angle)
        for j_angle in coarse + fine:
            m = exp_generator(j, j_angle) @ quarter
            r = float(np.abs(m - target).max())
            if best is None or r < best[0]:
                best = (r, h_angle, j_angle, m)
            if r <= tol:
                return DerivedPairing(
                    color=color,
                    quarter_turn=h.label,
                    quarter_turn_angle=h_angle,
                    ordinary=j.label,
                    ordinary_angle=j_angle,
                    matrix=m,
                    residual=r,
                )
    assert best is not None
    return DerivedPairing(color, h.label, best[1], j.label, best[2], best[3], best[0])


def diagonal_generator(name: str) -> Generator6:
    """Cartan-direction combinations that also generate colored pairings."""
    if name == "F3":
        return build_F(3)
    if name == "(F3+sqrt3*F8)/2":
        m = (build_F(3).matrix + _SQRT3 * build_F(8).matrix) / 2
        return Generator6(name, m)
    if name == "(F3-sqrt3*F8)/2":
        m = (build_F(3).matrix - _SQRT3 * build_F(8).matrix) / 2
        return Generator6(name, m)
    raise ValueError(f"unknown diagonal generator {name!r}")


def derive_pairing_from_diagonal(color: str, tol: float = 1e-12) -> DerivedPairing:
    """Find the single diagonal generator whose quarter turn equals pairing(color).

    Scans all three Cartan-direction combinations over angle multiples of
    pi/2.  The exact attributions found by this scan are

        R  <-  exp(+pi/2 * (F3 - sqrt3*F8)/2)
        Y  <-  exp(+pi/2 * (F3 + sqrt3*F8)/2)
        B  <-  exp(-pi/2 * F3)

    Note F3 itself reproduces the blue pairing, not the red one: exp(t*F3)
    leaves the (p3, x3) plane fixed for every t, while the red pairing
    moves x3 into a momentum slot, so no angle can work there.
    """
    if color not in _COLOR_AXIS:
        raise ValueError(f"color must be one of R, Y, B, got {color!r}")
    target = pairing(color).matrix()
    names = ("F3", "(F3+sqrt3*F8)/2", "(F3-sqrt3*F8)/2")
    best: tuple[float, str, float, np.ndarray] | None = None
    for name in names:
        g = diagonal_generator(name)
        for k in range(-2, 3):
            angle = k * math.pi / 2
            m = exp_generator(g, angle)
            r = float(np.abs(m - target).max())
            if best is None or r < best[0]:
                best = (r, name, angle, m)
            if r <= tol:
                return DerivedPairing(
                    color=color,
                    quarter_turn=name,
                    quarter_turn_angle=angle,
                    ordinary="(none)",
                    ordinary_angle=0.0,
                    matrix=m,
                    residual=r,
                )
    assert best is not None
    return DerivedPairing(color, best[1], best[2], "(none)", 0.0, best[3], best[0])
