"""Generalized 8x8 Dirac Hamiltonians over phase space.

Builds the electromagnetic Dirac Hamiltonian, the three colored quark
Hamiltonians obtained from the canonical pairings, their antiparticle
partners from charge conjugation, and the composite single-quark and
quark-antiquark sums whose square is a scalar (the mass-squared law).

Kinds and closed forms (A_k, B_k, B from phasequark.clifford):

    Dirac     A.(p - e*Avec) + B m + e*A0
    ColorR    A1(p1 - e*A1v) + B2 x2 + B3 x3 + B m + e*A0
    ColorY    B1 x1 + A2(p2 - e*A2v) + B3 x3 + B m + e*A0
    ColorB    B1 x1 + B2 x2 + A3(p3 - e*A3v) + B m + e*A0
    AntiR     A1 p1 - B2 x2 - B3 x3 + B m
    AntiY     -B1 x1 + A2 p2 - B3 x3 + B m
    AntiB     -B1 x1 - B2 x2 + A3 p3 + B m
    QuarkSum  A.p + 2 B.x + 3 B m          (ColorR + ColorY + ColorB)
    QQbar     A.P + 2 B.dx + 6 B m         (P = p + pbar, dx = x - xbar)
    Custom    A.a + B.b + beta B + scalar

Charge conjugation is the substitution chain i -> -i, p -> -p, H -> -H
followed by conjugation with C = build_C("s2"); on the colored kinds it
lands exactly on the Anti forms, and on the HamiltonianSpec fields it is
the sign flip of e and x.  Rotations are passive (frame) rotations: coordinates map as
v' = R v and operators as A'_k = R_kl A_l, B'_k = R_kl B_l.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .clifford import build_A, build_B, build_Bk, build_C

__all__ = [
    "EMField",
    "HamiltonianSpec",
    "SpectrumReport",
    "DistinctnessReport",
    "KINDS",
    "build_hamiltonian",
    "build_composite",
    "rotation_matrix",
    "rotated_operators",
    "rotate_hamiltonian",
    "conjugate_hamiltonian",
    "coefficient_pattern",
    "antiparticle_distinctness_check",
    "square_and_spectrum",
]

KINDS = (
    "Dirac",
    "ColorR",
    "ColorY",
    "ColorB",
    "AntiR",
    "AntiY",
    "AntiB",
    "QuarkSum",
    "QQbar",
    "Custom",
)

_COLOR_AXIS = {"R": 0, "Y": 1, "B": 2}
_EM_KINDS = ("Dirac", "ColorR", "ColorY", "ColorB")

_A = [build_A(k) for k in (1, 2, 3)]
_BK = [build_Bk(k) for k in (1, 2, 3)]
_B = build_B()
_I8 = np.eye(8, dtype=complex)


def _vec3(value, name: str) -> tuple[float, float, float]:
    try:
        t = tuple(float(v) for v in value)
    except TypeError as exc:
        raise ValueError(f"{name} must be a 3-vector") from exc
    if len(t) != 3 or not all(math.isfinite(v) for v in t):
        raise ValueError(f"{name} must be 3 finite numbers, got {value!r}")
    return t  # type: ignore[return-value]


@dataclass(frozen=True)
class EMField:
    e: float = 0.0
    A0: float = 0.0
    Avec: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self) -> None:
        for name in ("e", "A0"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"em.{name} must be finite, got {v!r}")
        object.__setattr__(self, "Avec", _vec3(self.Avec, "em.Avec"))

    def to_dict(self) -> dict:
        return {"e": self.e, "A0": self.A0, "Avec": list(self.Avec)}


@dataclass(frozen=True)
class HamiltonianSpec:
    """Declarative description of one Hamiltonian.

    QQbar accepts either the quark/antiquark variables (p, x, pbar, xbar)
    or the total/relative shorthand (P, dx); the shorthand is stored as
    p = P, x = dx with zero antiquark variables, which builds the same
    matrix.  Custom carries explicit coefficients a.A + b.B_k + beta*B +
    scalar*1.
    """

    kind: str
    m: float = 0.0
    p: tuple[float, float, float] = (0.0, 0.0, 0.0)
    x: tuple[float, float, float] = (0.0, 0.0, 0.0)
    pbar: tuple[float, float, float] = (0.0, 0.0, 0.0)
    xbar: tuple[float, float, float] = (0.0, 0.0, 0.0)
    em: EMField | None = None
    a: tuple[float, float, float] = (0.0, 0.0, 0.0)
    b: tuple[float, float, float] = (0.0, 0.0, 0.0)
    beta: float = 0.0
    scalar: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if not (math.isfinite(self.m) and self.m >= 0.0):
            raise ValueError(f"m must be finite and >= 0, got {self.m!r}")
        for name in ("p", "x", "pbar", "xbar", "a", "b"):
            object.__setattr__(self, name, _vec3(getattr(self, name), name))
        for name in ("beta", "scalar"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.em is not None and self.kind not in _EM_KINDS:
            raise ValueError(f"em coupling is only supported for kinds {_EM_KINDS}")

    @classmethod
    def from_dict(cls, d: dict) -> "HamiltonianSpec":
        if not isinstance(d, dict):
            raise ValueError("spec must be a JSON object")
        data = dict(d)
        kind = data.pop("kind", None)
        if kind not in KINDS:
            raise ValueError(f"spec.kind must be one of {KINDS}, got {kind!r}")
        kwargs: dict = {"kind": kind}
        if "P" in data or "dx" in data:
            if kind != "QQbar":
                raise ValueError("P/dx shorthand is only valid for kind QQbar")
            if "p" in data or "x" in data or "pbar" in data or "xbar" in data:
                raise ValueError("give either (P, dx) or (p, x, pbar, xbar), not both")
            kwargs["p"] = data.pop("P", (0.0, 0.0, 0.0))
            kwargs["x"] = data.pop("dx", (0.0, 0.0, 0.0))
        allowed = {
            "Dirac": {"m", "p", "em"},
            "ColorR": {"m", "p", "x", "em"},
            "ColorY": {"m", "p", "x", "em"},
            "ColorB": {"m", "p", "x", "em"},
            "AntiR": {"m", "p", "x"},
            "AntiY": {"m", "p", "x"},
            "AntiB": {"m", "p", "x"},
            "QuarkSum": {"m", "p", "x"},
            "QQbar": {"m", "p", "x", "pbar", "xbar"},
            "Custom": {"a", "b", "beta", "scalar"},
        }[kind]
        for key, value in data.items():
            if key not in allowed:
                raise ValueError(f"field {key!r} is not valid for kind {kind}")
            if key == "em":
                if not isinstance(value, dict):
                    raise ValueError("em must be an object with e, A0, Avec")
                kwargs["em"] = EMField(**value)
            else:
                kwargs[key] = value
        return cls(**kwargs)

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == "Custom":
            out.update(a=list(self.a), b=list(self.b), beta=self.beta, scalar=self.scalar)
            return out
        out["m"] = self.m
        out["p"] = list(self.p)
        if self.kind != "Dirac":
            out["x"] = list(self.x)
        if self.kind == "QQbar":
            out["pbar"] = list(self.pbar)
            out["xbar"] = list(self.xbar)
        if self.em is not None:
            out["em"] = self.em.to_dict()
        return out


def _em(spec: HamiltonianSpec) -> tuple[float, float, tuple[float, float, float]]:
    if spec.em is None:
        return 0.0, 0.0, (0.0, 0.0, 0.0)
    return spec.em.e, spec.em.A0, spec.em.Avec


def _colored(axis: int, sign: float, p, x, m, e, a0, avec,
             a_ops=None, b_ops=None) -> np.ndarray:
    """sign=+1 colored quark form, sign=-1 its antiparticle form."""
    a_ops = _A if a_ops is None else a_ops
    b_ops = _BK if b_ops is None else b_ops
    h = a_ops[axis] * (p[axis] - e * avec[axis])
    for k in range(3):
        if k != axis:
            h = h + sign * b_ops[k] * x[k]
    return h + _B * m + (e * a0) * _I8


def build_hamiltonian(spec: HamiltonianSpec) -> np.ndarray:
    """Assemble the 8x8 matrix for a spec; Hermitian for real inputs."""
    e, a0, avec = _em(spec)
    k = spec.kind
    if k == "Dirac":
        h = sum(_A[i] * (spec.p[i] - e * avec[i]) for i in range(3))
        return h + _B * spec.m + (e * a0) * _I8
    if k.startswith("Color"):
        return _colored(_COLOR_AXIS[k[-1]], +1.0, spec.p, spec.x, spec.m, e, a0, avec)
    if k.startswith("Anti"):
        return _colored(_COLOR_AXIS[k[-1]], -1.0, spec.p, spec.x, spec.m, 0.0, 0.0, avec)
    if k == "QuarkSum":
        h = sum(_A[i] * spec.p[i] + 2.0 * _BK[i] * spec.x[i] for i in range(3))
        return h + 3.0 * spec.m * _B
    if k == "QQbar":
        ptot = [spec.p[i] + spec.pbar[i] for i in range(3)]
        dx = [spec.x[i] - spec.xbar[i] for i in range(3)]
        h = sum(_A[i] * ptot[i] + 2.0 * _BK[i] * dx[i] for i in range(3))
        return h + 6.0 * spec.m * _B
    if k == "Custom":
        h = sum(_A[i] * spec.a[i] + _BK[i] * spec.b[i] for i in range(3))
        return h + spec.beta * _B + spec.scalar * _I8
    raise AssertionError(k)


def build_composite(kind: str, inputs: Mapping) -> np.ndarray:
    """Assemble a composite by literally summing its colored parts.

    kind "QuarkSum" sums ColorR + ColorY + ColorB over a shared (p, x, m);
    kind "QQbar" additionally adds AntiR + AntiY + AntiB evaluated at the
    antiquark variables (pbar, xbar) with the same m.  This is an
    independent route to the same matrices as build_hamiltonian on the
    QuarkSum/QQbar kinds, which use the collapsed closed forms; tests
    compare the two.
    """
    if kind not in ("QuarkSum", "QQbar"):
        raise ValueError(f"composite kind must be QuarkSum or QQbar, got {kind!r}")
    spec = HamiltonianSpec.from_dict({"kind": kind, **dict(inputs)})
    total = np.zeros((8, 8), dtype=complex)
    for color in "RYB":
        total = total + build_hamiltonian(
            HamiltonianSpec(kind=f"Color{color}", m=spec.m, p=spec.p, x=spec.x)
        )
        if kind == "QQbar":
            total = total + build_hamiltonian(
                HamiltonianSpec(kind=f"Anti{color}", m=spec.m, p=spec.pbar, x=spec.xbar)
            )
    return total


# ---------------------------------------------------------------------------
# Rotations
# ---------------------------------------------------------------------------


def rotation_matrix(axis: int | Sequence[float], angle: float) -> np.ndarray:
    """Passive (frame) rotation: about axis 3, p'1 = c p1 + s p2.

    axis is 1, 2, 3 or a unit 3-vector (a non-unit vector is an error).
    Equals exp(-angle * cross(n)) = I cos - sin [n]x + (1 - cos) n n^T.
    """
    if not math.isfinite(angle):
        raise ValueError(f"angle must be finite, got {angle!r}")
    if isinstance(axis, int):
        if axis not in (1, 2, 3):
            raise ValueError(f"axis index must be 1..3, got {axis}")
        n = np.zeros(3)
        n[axis - 1] = 1.0
    else:
        n = np.asarray(axis, dtype=float).reshape(-1)
        if n.shape != (3,) or not np.all(np.isfinite(n)):
            raise ValueError(f"axis must be a finite 3-vector, got {axis!r}")
        if abs(np.linalg.norm(n) - 1.0) > 1e-12:
            raise ValueError(f"axis must be a unit vector, got norm {np.linalg.norm(n)!r}")
    cross = np.array([[0, -n[2], n[1]], [n[2], 0, -n[0]], [-n[1], n[0], 0]])
    c, s = math.cos(angle), math.sin(angle)
    return c * np.eye(3) - s * cross + (1.0 - c) * np.outer(n, n)


def rotated_operators(rot: np.ndarray) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """Primed operator triplets A'_k = R_kl A_l and B'_k = R_kl B_l."""
    rot = np.asarray(rot, dtype=float)
    if rot.shape != (3, 3):
        raise ValueError(f"rotation must be 3x3, got {rot.shape}")
    a_p = [sum(rot[k, l] * _A[l] for l in range(3)) for k in range(3)]
    b_p = [sum(rot[k, l] * _BK[l] for l in range(3)) for k in range(3)]
    return a_p, b_p


def rotate_hamiltonian(spec: HamiltonianSpec, axis: int | Sequence[float],
                       angle: float) -> np.ndarray:
    """Rebuild the Hamiltonian with primed operators and primed coordinates.

    Scalar contractions A.p and B.x are form invariant, so QuarkSum, QQbar
    and Dirac return the unrotated matrix up to roundoff for any rotation;
    the colored kinds are only invariant under rotations about their own
    color axis, and mix pairwise otherwise.
    """
    if spec.kind == "Custom":
        raise ValueError("rotate_hamiltonian does not apply to Custom specs")
    rot = rotation_matrix(axis, angle)
    a_ops, b_ops = rotated_operators(rot)
    e, a0, avec = _em(spec)
    p, x = rot @ np.array(spec.p), rot @ np.array(spec.x)
    avec_r = rot @ np.array(avec)
    k = spec.kind
    if k == "Dirac":
        h = sum(a_ops[i] * (p[i] - e * avec_r[i]) for i in range(3))
        return h + _B * spec.m + (e * a0) * _I8
    if k.startswith("Color") or k.startswith("Anti"):
        sign = +1.0 if k.startswith("Color") else -1.0
        ee, aa0 = (e, a0) if k.startswith("Color") else (0.0, 0.0)
        return _colored(_COLOR_AXIS[k[-1]], sign, p, x, spec.m, ee, aa0, avec_r,
                        a_ops=a_ops, b_ops=b_ops)
    if k == "QuarkSum":
        h = sum(a_ops[i] * p[i] + 2.0 * b_ops[i] * x[i] for i in range(3))
        return h + 3.0 * spec.m * _B
    if k == "QQbar":
        ptot = rot @ (np.array(spec.p) + np.array(spec.pbar))
        dx = rot @ (np.array(spec.x) - np.array(spec.xbar))
        h = sum(a_ops[i] * ptot[i] + 2.0 * b_ops[i] * dx[i] for i in range(3))
        return h + 6.0 * spec.m * _B
    raise AssertionError(k)


# ---------------------------------------------------------------------------
# Charge conjugation
# ---------------------------------------------------------------------------


def conjugate_hamiltonian(spec: HamiltonianSpec) -> tuple[np.ndarray, HamiltonianSpec]:
    """Charge conjugate a Dirac or colored spec.

    Returns (matrix, conjugated_spec).  The matrix is computed through the
    substitution route: negate p, conjugate entries, negate the whole
    operator, then conjugate with C.  The returned spec is the equivalent
    sign flip of e (Dirac) or of e and x (colored kinds); building it
    reproduces the matrix, and for the free colored kinds the matrix equals
    the corresponding Anti kind.
    """
    if spec.kind not in _EM_KINDS:
        raise ValueError(f"conjugate_hamiltonian supports kinds {_EM_KINDS}")
    flipped_p = HamiltonianSpec.from_dict(
        {**spec.to_dict(), "p": [-v for v in spec.p]}
    )
    h_prime = -np.conj(build_hamiltonian(flipped_p))
    c = build_C("s2")
    matrix = c @ h_prime @ (-c)

    out = spec.to_dict()
    if spec.em is not None:
        out["em"] = {**spec.em.to_dict(), "e": -spec.em.e}
    if spec.kind != "Dirac":
        out["x"] = [-v for v in spec.x]
    conj_spec = HamiltonianSpec.from_dict(out)
    # the substitution route must land exactly on the closed form obtained
    # by flipping e (Dirac) or e and x (colored); both are signed
    # rearrangements of the same floats, so equality is exact
    if not np.array_equal(matrix, build_hamiltonian(conj_spec)):
        raise RuntimeError("conjugation routes disagree; convention drift")
    return matrix, conj_spec


def coefficient_pattern(spec: HamiltonianSpec) -> tuple[np.ndarray, np.ndarray, float]:
    """Coefficient maps (Phi, Psi, mass) with H = A.(Phi p) + B.(Psi x) + m B.

    Defined for the free colored and anti kinds, where the Hamiltonian is
    linear in (p, x) through fixed projectors: Phi = e_c e_c^T and
    Psi = +-(I - e_c e_c^T).
    """
    k = spec.kind
    if not (k.startswith("Color") or k.startswith("Anti")) or spec.em is not None:
        raise ValueError("coefficient_pattern applies to free colored/anti kinds")
    axis = _COLOR_AXIS[k[-1]]
    phi = np.zeros((3, 3))
    phi[axis, axis] = 1.0
    psi = (np.eye(3) - phi) * (+1.0 if k.startswith("Color") else -1.0)
    return phi, psi, spec.m


@dataclass(frozen=True)
class DistinctnessReport:
    """Outcome of the antiparticle distinctness search for one color."""

    color: str
    p: tuple[float, float, float]
    x: tuple[float, float, float]
    m: float
    n_samples: int
    seed: int
    min_distance: float
    min_distance_with_reflection: float
    margin: float
    degenerate: bool
    reflected_b_coefficients: tuple[float, float, float]
    target_b_coefficients: tuple[float, float, float]

    @property
    def passed(self) -> bool:
        if self.degenerate:
            return True
        slack = 1e-9 * max(1.0, self.margin)
        return (
            self.min_distance > 0.0
            and self.min_distance >= self.margin - slack
            and self.min_distance_with_reflection >= self.margin - slack
        )

    def to_dict(self) -> dict:
        return {
            "color": self.color,
            "p": list(self.p),
            "x": list(self.x),
            "m": self.m,
            "n_samples": self.n_samples,
            "seed": self.seed,
            "min_distance": self.min_distance,
            "min_distance_with_reflection": self.min_distance_with_reflection,
            "margin": self.margin,
            "degenerate": self.degenerate,
            "reflected_b_coefficients": list(self.reflected_b_coefficients),
            "target_b_coefficients": list(self.target_b_coefficients),
            "passed": self.passed,
        }


def _quaternion_rotations(n: int, seed: int) -> np.ndarray:
    """n rotation matrices from uniformly sampled unit quaternions."""
    rng = np.random.default_rng(seed)
    q = rng.normal(size=(n, 4))
    q /= np.linalg.norm(q, axis=1, keepdims=True)
    w, xq, yq, zq = q.T
    return np.stack(
        [
            np.stack([1 - 2 * (yq * yq + zq * zq), 2 * (xq * yq - zq * w), 2 * (xq * zq + yq * w)], axis=1),
            np.stack([2 * (xq * yq + zq * w), 1 - 2 * (xq * xq + zq * zq), 2 * (yq * zq - xq * w)], axis=1),
            np.stack([2 * (xq * zq - yq * w), 2 * (yq * zq + xq * w), 1 - 2 * (xq * xq + yq * yq)], axis=1),
        ],
        axis=1,
    )


def antiparticle_distinctness_check(
    color: str = "R",
    p: Sequence[float] = (1.0, 0.0, 0.0),
    x: Sequence[float] = (0.0, 1.0, 1.0),
    m: float = 1.0,
    n_samples: int = 10000,
    seed: int = 1729,
) -> DistinctnessReport:
    """Show no rotation or reflection carries Anti(color) onto Color(color).

    A frame transformation acts on the coefficient maps by conjugation,
    Phi -> R^T Phi R and Psi -> R^T Psi R, while the coordinate values ride
    along as p -> R p, x -> R x; reflection (conjugation by B together with
    p -> -p, x -> -x) acts trivially on such bilinear patterns.  The
    distance between two Hamiltonians is the Euclidean norm of the
    difference of their 7 coefficients (A1..A3, B1..B3, B), which equals
    the operator distance in the normalized trace inner product
    <X, Y> = tr(X^+ Y)/8 because the seven generators are orthonormal.

    For every rotation the position block satisfies
        |R^T Psi_anti R x - Psi_color x| >= |P_c x|^2 / |x|,
    the documented margin (P_c projects off the color axis).  The check
    samples n_samples quaternion rotations, with and without reflection,
    and reports the minimum sampled distance next to that margin.
    """
    if color not in _COLOR_AXIS:
        raise ValueError(f"color must be one of R, Y, B, got {color!r}")
    if n_samples < 1:
        raise ValueError("n_samples must be positive")
    axis = _COLOR_AXIS[color]
    pv = np.array(_vec3(p, "p"))
    xv = np.array(_vec3(x, "x"))

    quark = HamiltonianSpec(kind=f"Color{color}", m=m)
    anti = HamiltonianSpec(kind=f"Anti{color}", m=m)
    phi_q, psi_q, _ = coefficient_pattern(quark)
    phi_a, psi_a, _ = coefficient_pattern(anti)
    target_a = phi_q @ pv
    target_b = psi_q @ xv

    rots = _quaternion_rotations(n_samples, seed)
    # row `axis` of each rotation determines the conjugated projectors
    u = rots[:, axis, :]
    a_rot = u * (u @ pv)[:, None]                      # R^T Phi_a R p
    b_rot = -xv[None, :] + u * (u @ xv)[:, None]       # R^T Psi_a R x
    d = np.sqrt(
        ((a_rot - target_a[None, :]) ** 2).sum(axis=1)
        + ((b_rot - target_b[None, :]) ** 2).sum(axis=1)
    )
    # reflection: both coefficient triplets and both coordinates change
    # sign, so the transformed pattern is unchanged and distances repeat
    d_reflected = d

    xnorm = float(np.linalg.norm(xv))
    margin = 0.0 if xnorm == 0.0 else float((psi_q @ xv) @ (psi_q @ xv)) / xnorm
    return DistinctnessReport(
        color=color,
        p=tuple(pv),
        x=tuple(xv),
        m=float(m),
        n_samples=int(n_samples),
        seed=int(seed),
        min_distance=float(d.min()),
        min_distance_with_reflection=float(d_reflected.min()),
        margin=margin,
        degenerate=(margin == 0.0),
        reflected_b_coefficients=tuple(float(v) for v in (psi_a @ xv)),
        target_b_coefficients=tuple(float(v) for v in target_b),
    )


# ---------------------------------------------------------------------------
# Spectra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: tuple[float, ...]
    degeneracies: tuple[tuple[float, int], ...]
    scalar_square: float | None
    scalar_residual: float
    hermiticity_residual: float
    symmetric_about_zero: bool = field(default=False)

    def to_dict(self) -> dict:
        return {
            "eigenvalues": list(self.eigenvalues),
            "degeneracies": [[v, n] for v, n in self.degeneracies],
            "scalar_square": self.scalar_square,
            "scalar_residual": self.scalar_residual,
            "hermiticity_residual": self.hermiticity_residual,
            "symmetric_about_zero": self.symmetric_about_zero,
        }


def square_and_spectrum(h: np.ndarray, scalar_tol: float = 1e-11) -> SpectrumReport:
    """Square the Hamiltonian, detect a scalar square, and diagonalize.

    Raises ValueError for non-Hermitian input.  scalar_square is set when
    H^2 = lam * I within scalar_tol relative to max(1, |lam|); the
    eigenvalues then come out as +-sqrt(lam), fourfold each.
    """
    h = np.asarray(h, dtype=complex)
    if h.shape != (8, 8):
        raise ValueError(f"expected an 8x8 matrix, got {h.shape}")
    herm = float(np.abs(h - h.conj().T).max())
    if herm > 1e-12 * max(1.0, float(np.abs(h).max())):
        raise ValueError(f"matrix is not Hermitian (residual {herm:.3e})")

    sq = h @ h
    lam = float(np.real(np.trace(sq)) / 8.0)
    resid = float(np.abs(sq - lam * np.eye(8)).max())
    scalar = lam if resid <= scalar_tol * max(1.0, abs(lam)) else None

    eig = np.sort(np.linalg.eigvalsh(h))
    groups: list[list[float]] = []
    for v in eig:
        if groups and abs(v - groups[-1][-1]) <= 1e-9 * max(1.0, abs(v)):
            groups[-1].append(float(v))
        else:
            groups.append([float(v)])
    degs = tuple((float(np.mean(g)), len(g)) for g in groups)
    sym = bool(np.abs(eig + eig[::-1]).max() <= 1e-10 * max(1.0, float(np.abs(eig).max())))
    return SpectrumReport(
        eigenvalues=tuple(float(v) for v in eig),
        degeneracies=degs,
        scalar_square=scalar,
        scalar_residual=resid,
        hermiticity_residual=herm,
        symmetric_about_zero=sym,
    )
