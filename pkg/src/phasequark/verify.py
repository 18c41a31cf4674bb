"""Named verification suites over the whole library.

Five suites (su3, clifford, rotation, conjugation, composite) each run a
fixed list of checks.  A check reports its maximum residual and passes
iff that residual is at or below its tolerance; a --tol override replaces
every default tolerance, which is also how tolerance plumbing is tested
(an unreachable tolerance such as 1e-30 must turn honest floating-point
checks into failures).  All randomness is drawn from numpy Generators
seeded with (seed, stable-check-id), so reports are byte-identical for a
fixed seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import __version__, clifford, phase_space
from .hamiltonian import (
    EMField,
    HamiltonianSpec,
    antiparticle_distinctness_check,
    build_composite,
    build_hamiltonian,
    conjugate_hamiltonian,
    rotate_hamiltonian,
    rotated_operators,
    rotation_matrix,
    square_and_spectrum,
)

__all__ = ["CheckResult", "VerificationReport", "run_suite", "SUITES", "DEFAULT_SEED"]

SUITES = ("su3", "clifford", "rotation", "conjugation", "composite")
DEFAULT_SEED = 1729


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_residual: float
    tolerance: float
    details: dict

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "details": self.details,
        }


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    seed: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "tool_version": __version__,
            "all_passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _maxabs(m) -> float:
    arr = np.asarray(m)
    return float(np.abs(arr).max()) if arr.size else 0.0


_F = [phase_space.build_F(i).matrix for i in range(1, 9)]
_R6 = phase_space.build_R().matrix
_J6 = phase_space.symplectic_form()
_I6 = np.eye(6)

_GAMMA = [clifford.build_A(k) for k in (1, 2, 3)] + [
    clifford.build_Bk(k) for k in (1, 2, 3)
] + [clifford.build_B()]
_GAMMA_NAMES = ("A1", "A2", "A3", "B1", "B2", "B3", "B")
_I8 = np.eye(8)


def _random_spec(rng: np.random.Generator, kind: str) -> HamiltonianSpec:
    vals = rng.uniform(-2.0, 2.0, size=12)
    m = float(rng.uniform(0.0, 2.0))
    fields: dict = {"kind": kind, "m": m, "p": vals[0:3].tolist()}
    if kind != "Dirac":
        fields["x"] = vals[3:6].tolist()
    if kind == "QQbar":
        fields["pbar"] = vals[6:9].tolist()
        fields["xbar"] = vals[9:12].tolist()
    return HamiltonianSpec.from_dict(fields)


# ---------------------------------------------------------------------------
# su3 suite
# ---------------------------------------------------------------------------


def _check_commutator_table(rng, samples):
    ok, max_residual, rows = phase_space.verify_su3_table()
    nonzero = sum(
        1 for row in rows if any(abs(c) > 1e-9 for c in row["coefficients"])
    )
    return max_residual, {"pairs": len(rows), "pairs_with_nonzero_bracket": nonzero,
                          "table_consistent": ok}


def _check_jacobi(rng, samples):
    worst = 0.0
    triples = rng.integers(0, 8, size=(50, 3))
    for i, j, k in triples:
        a, b, c = _F[i], _F[j], _F[k]
        acc = (
            phase_space.commutator6(phase_space.commutator6(a, b), c)
            + phase_space.commutator6(phase_space.commutator6(b, c), a)
            + phase_space.commutator6(phase_space.commutator6(c, a), b)
        )
        worst = max(worst, _maxabs(acc))
    return worst, {"triples": 50}


def _check_centrality(rng, samples):
    worst = max(_maxabs(phase_space.commutator6(_R6, f)) for f in _F)
    return worst, {"generators": 8}


def _check_group_membership(rng, samples):
    worst = 0.0
    count = 0
    for g in (*_F, _R6):
        for theta in rng.uniform(-3.1, 3.1, size=10):
            m = phase_space.exp_generator(g, float(theta))
            worst = max(worst, _maxabs(m.T @ m - _I6), _maxabs(m.T @ _J6 @ m - _J6))
            if not (phase_space.is_orthogonal(m) and phase_space.is_symplectic(m)):
                worst = max(worst, 1.0)
            count += 1
    return worst, {"matrices": count}


def _check_group_additivity(rng, samples):
    worst = 0.0
    for _ in range(20):
        g = _F[int(rng.integers(0, 8))]
        t1, t2 = rng.uniform(-2.0, 2.0, size=2)
        lhs = phase_space.exp_generator(g, float(t1)) @ phase_space.exp_generator(g, float(t2))
        rhs = phase_space.exp_generator(g, float(t1 + t2))
        worst = max(worst, _maxabs(lhs - rhs))
    return worst, {"samples": 20}


def _check_quadratic_form(rng, samples):
    worst = 0.0
    for _ in range(100):
        g = (_F + [_R6])[int(rng.integers(0, 9))]
        m = phase_space.exp_generator(g, float(rng.uniform(-3.0, 3.0)))
        v = rng.uniform(-2.0, 2.0, size=6)
        worst = max(worst, abs(float(v @ v) - float((m @ v) @ (m @ v))) / float(v @ v))
    return worst, {"vectors": 100}


def _check_reflection_square(rng, samples):
    recip = phase_space.exp_generator(_R6, math.pi / 2.0)
    reflection = phase_space.exp_generator(_R6, math.pi)
    worst = max(_maxabs(recip @ recip - reflection), _maxabs(reflection + _I6))
    return worst, {"convention": "exp((pi/2) R) maps (p, x) to (-x, p)"}


def _check_pairing_symplectic(rng, samples):
    tags = ("Standard", "R", "Y", "B", "Even(R)")
    worst = 0.0
    for tag in tags:
        m = phase_space.pairing(tag).matrix()
        worst = max(worst, _maxabs(m.T @ _J6 @ m - _J6))
    return worst, {"tags": list(tags)}


def _check_pairing_from_rotation(rng, samples):
    worst = 0.0
    found = {}
    for color in "RYB":
        derived = phase_space.derive_pairing_from_rotation(color)
        worst = max(worst, derived.residual)
        found[color] = {
            "quarter_turn": derived.quarter_turn,
            "quarter_turn_angle": derived.quarter_turn_angle,
            "ordinary": derived.ordinary,
            "ordinary_angle": derived.ordinary_angle,
        }
    return worst, found


def _check_pairing_from_diagonal(rng, samples):
    worst = 0.0
    found = {}
    for color in "RYB":
        derived = phase_space.derive_pairing_from_diagonal(color)
        worst = max(worst, derived.residual)
        found[color] = {
            "generator": derived.quarter_turn,
            "angle": derived.quarter_turn_angle,
        }
    return worst, found


# ---------------------------------------------------------------------------
# clifford suite
# ---------------------------------------------------------------------------


def _check_anticommutation(rng, samples):
    worst = 0.0
    for a in range(7):
        for b in range(7):
            target = 2.0 * _I8 if a == b else np.zeros((8, 8))
            worst = max(
                worst,
                _maxabs(clifford.anticommutator(_GAMMA[a], _GAMMA[b]) - target),
            )
    return worst, {"generators": list(_GAMMA_NAMES)}


def _check_hermitian_involution(rng, samples):
    worst = 0.0
    allowed = np.array([0, 1, -1, 1j, -1j], dtype=complex)
    for g in _GAMMA:
        worst = max(worst, _maxabs(g - g.conj().T), _maxabs(g @ g - _I8))
        entry_ok = np.all(np.isin(g.reshape(-1), allowed))
        if not entry_ok:
            worst = max(worst, 1.0)
    return worst, {"entry_set": "0, +-1, +-i"}


def _check_conjugation_identities(rng, samples):
    c = clifford.build_C("s2")
    c_inv = -c
    worst = _maxabs(c @ clifford.build_B() @ c_inv + clifford.build_B())
    for k in (1, 2, 3):
        ak, bk = clifford.build_A(k), clifford.build_Bk(k)
        worst = max(worst, _maxabs(c @ np.conj(ak) @ c_inv - ak))
        worst = max(worst, _maxabs(c @ np.conj(bk) @ c_inv - bk))
    return worst, {"tau": "s2"}


def _check_tau_uniqueness(rng, samples):
    expected = {"s0": [1, 3], "s1": [1, 2], "s2": [], "s3": [2, 3]}
    scan = clifford.charge_conjugation_tau_scan()
    failures = {tau: sorted(ks) for tau, ks in scan.items()}
    residual = 0.0 if failures == expected else 1.0
    return residual, {"failing_Bk_indices": failures}


def _check_gamma5(rng, samples):
    g5 = clifford.build_gamma5()
    worst = _maxabs(g5 @ g5 - _I8)
    worst = max(worst, _maxabs(clifford.anticommutator(g5, clifford.build_B())))
    for k in (1, 2, 3):
        worst = max(worst, _maxabs(clifford.anticommutator(g5, clifford.build_Bk(k))))
        worst = max(worst, _maxabs(clifford.commutator8(g5, clifford.build_A(k))))
    for color in "RYB":
        gc5 = clifford.build_colored_gamma5(color)
        worst = max(worst, _maxabs(clifford.anticommutator(gc5, clifford.build_B())))
        worst = max(worst, _maxabs(gc5 @ gc5 - _I8))
    target_r = clifford.kron3(clifford.PAULI[1], clifford.PAULI[1], clifford.PAULI[1])
    worst = max(worst, _maxabs(clifford.build_colored_gamma5("R") - target_r))
    return worst, {"colored": ["R", "Y", "B"]}


def _check_random_basis_similarity(rng, samples):
    z = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    q, r = np.linalg.qr(z)
    u = q * (np.diag(r) / np.abs(np.diag(r)))
    worst = 0.0
    rotated = [u @ g @ u.conj().T for g in _GAMMA]
    for a in range(7):
        for b in range(7):
            target = 2.0 * _I8 if a == b else np.zeros((8, 8))
            worst = max(worst, _maxabs(clifford.anticommutator(rotated[a], rotated[b]) - target))
    return worst, {"note": "anticommutation table under a random unitary change of basis"}


# ---------------------------------------------------------------------------
# rotation suite
# ---------------------------------------------------------------------------


def _check_mixing_law(rng, samples):
    p = rng.uniform(-2.0, 2.0, size=3)
    x = rng.uniform(-2.0, 2.0, size=3)
    m = float(rng.uniform(0.0, 2.0))
    spec_r = HamiltonianSpec(kind="ColorR", m=m, p=tuple(p), x=tuple(x))
    spec_y = HamiltonianSpec(kind="ColorY", m=m, p=tuple(p), x=tuple(x))
    h_r = build_hamiltonian(spec_r)
    worst = 0.0
    for phi in rng.uniform(-3.1, 3.1, size=10):
        phi = float(phi)
        c, s = math.cos(phi), math.sin(phi)
        rot = rotation_matrix(3, phi)
        a_p, b_p = rotated_operators(rot)
        pp, xp = rot @ p, rot @ x
        h_r_p = rotate_hamiltonian(spec_r, 3, phi)
        h_y_p = rotate_hamiltonian(spec_y, 3, phi)
        cross = (
            b_p[1] * xp[0] + b_p[0] * xp[1] - a_p[1] * pp[0] - a_p[0] * pp[1]
        )
        worst = max(worst, _maxabs(h_r - (c * c * h_r_p + s * s * h_y_p + s * c * cross)))
    return worst, {"angles": 10}


def _check_color_axis_invariance(rng, samples):
    worst = 0.0
    for color, axis in (("R", 1), ("Y", 2), ("B", 3)):
        spec = _random_spec(rng, f"Color{color}")
        h = build_hamiltonian(spec)
        for phi in rng.uniform(-3.1, 3.1, size=5):
            worst = max(worst, _maxabs(h - rotate_hamiltonian(spec, axis, float(phi))))
    return worst, {"pairs": "ColorR/axis1, ColorY/axis2, ColorB/axis3"}


def _check_full_sum_invariance(rng, samples):
    worst = 0.0
    for _ in range(20):
        spec = _random_spec(rng, "QuarkSum")
        h = build_hamiltonian(spec)
        axis = rng.normal(size=3)
        axis /= np.linalg.norm(axis)
        phi = float(rng.uniform(-math.pi, math.pi))
        worst = max(worst, _maxabs(h - rotate_hamiltonian(spec, axis, phi)))
    return worst, {"samples": 20}


def _check_qqbar_invariance(rng, samples):
    worst = 0.0
    for _ in range(20):
        spec = _random_spec(rng, "QQbar")
        h = build_hamiltonian(spec)
        axis = rng.normal(size=3)
        axis /= np.linalg.norm(axis)
        phi = float(rng.uniform(-math.pi, math.pi))
        worst = max(worst, _maxabs(h - rotate_hamiltonian(spec, axis, phi)))
    return worst, {"samples": 20}


# ---------------------------------------------------------------------------
# conjugation suite
# ---------------------------------------------------------------------------


def _check_c_matrix(rng, samples):
    c = clifford.build_C("s2")
    worst = max(_maxabs(c @ c + _I8), _maxabs(np.imag(c)))
    signed_perm = np.all(np.sum(np.abs(c) > 0, axis=0) == 1) and np.all(
        np.isin(np.real(c).reshape(-1), [0.0, 1.0, -1.0])
    )
    if not signed_perm:
        worst = max(worst, 1.0)
    return worst, {"square": "-identity", "real_signed_permutation": bool(signed_perm)}


def _check_colored_closed_forms(rng, samples):
    worst = 0.0
    for color in "RYB":
        spec = _random_spec(rng, f"Color{color}")
        matrix, conj_spec = conjugate_hamiltonian(spec)
        anti = HamiltonianSpec(kind=f"Anti{color}", m=spec.m, p=spec.p, x=spec.x)
        worst = max(worst, _maxabs(matrix - build_hamiltonian(anti)))
        worst = max(worst, _maxabs(matrix - build_hamiltonian(conj_spec)))
    return worst, {"colors": ["R", "Y", "B"]}


def _check_conjugation_involution(rng, samples):
    worst = 0.0
    specs = [_random_spec(rng, k) for k in ("ColorR", "ColorY", "ColorB", "Dirac")]
    specs.append(
        HamiltonianSpec(
            kind="Dirac", m=1.0, p=(0.5, -1.0, 2.0),
            em=EMField(e=0.75, A0=-0.25, Avec=(0.5, 1.5, -0.5)),
        )
    )
    for spec in specs:
        once_matrix, once_spec = conjugate_hamiltonian(spec)
        twice_matrix, twice_spec = conjugate_hamiltonian(once_spec)
        worst = max(worst, _maxabs(twice_matrix - build_hamiltonian(spec)))
        if twice_spec != spec:
            worst = max(worst, 1.0)
    return worst, {"specs": len(specs)}


def _check_dirac_em(rng, samples):
    worst = 0.0
    for _ in range(5):
        em = EMField(
            e=float(rng.uniform(-2.0, 2.0)),
            A0=float(rng.uniform(-2.0, 2.0)),
            Avec=tuple(rng.uniform(-2.0, 2.0, size=3)),
        )
        spec = HamiltonianSpec(
            kind="Dirac", m=float(rng.uniform(0.0, 2.0)),
            p=tuple(rng.uniform(-2.0, 2.0, size=3)), em=em,
        )
        matrix, conj_spec = conjugate_hamiltonian(spec)
        flipped = HamiltonianSpec.from_dict(
            {**spec.to_dict(), "em": {**em.to_dict(), "e": -em.e}}
        )
        worst = max(worst, _maxabs(matrix - build_hamiltonian(flipped)))
        if conj_spec != flipped:
            worst = max(worst, 1.0)
    free = HamiltonianSpec(kind="Dirac", m=1.5, p=(1.0, -2.0, 0.5))
    matrix, _ = conjugate_hamiltonian(free)
    worst = max(worst, _maxabs(matrix - build_hamiltonian(free)))
    return worst, {"random_fields": 5, "free_dirac_self_conjugate": True}


def _check_distinctness(rng, samples):
    n = int(samples) if samples else 10000
    worst = 0.0
    details = {}
    for index, color in enumerate("RYB"):
        report = antiparticle_distinctness_check(
            color=color, n_samples=n, seed=DEFAULT_SEED + index
        )
        gap = max(
            0.0,
            report.margin - report.min_distance,
            report.margin - report.min_distance_with_reflection,
        )
        if report.margin <= 0.0:
            gap = max(gap, 1.0)
        worst = max(worst, gap)
        details[color] = {
            "min_distance": report.min_distance,
            "margin": report.margin,
            "samples": report.n_samples,
        }
    return worst, details


# ---------------------------------------------------------------------------
# composite suite
# ---------------------------------------------------------------------------


def _check_quark_sum_square(rng, samples):
    worst = 0.0
    for _ in range(200):
        spec = _random_spec(rng, "QuarkSum")
        h = build_hamiltonian(spec)
        lam = (
            sum(v * v for v in spec.p)
            + 4.0 * sum(v * v for v in spec.x)
            + 9.0 * spec.m * spec.m
        )
        worst = max(worst, _maxabs(h @ h - lam * _I8) / max(1.0, abs(lam)))
    return worst, {"samples": 200}


def _check_qqbar_mass_law(rng, samples):
    worst = 0.0
    for _ in range(200):
        spec = _random_spec(rng, "QQbar")
        h = build_hamiltonian(spec)
        big_p = [spec.p[i] + spec.pbar[i] for i in range(3)]
        dx = [spec.x[i] - spec.xbar[i] for i in range(3)]
        lam = (
            sum(v * v for v in big_p)
            + 4.0 * sum(v * v for v in dx)
            + 36.0 * spec.m * spec.m
        )
        worst = max(worst, _maxabs(h @ h - lam * _I8) / max(1.0, abs(lam)))
    return worst, {"samples": 200}


def _check_spectrum_symmetry(rng, samples):
    worst = 0.0
    for _ in range(25):
        spec = _random_spec(rng, "QQbar")
        report = square_and_spectrum(build_hamiltonian(spec))
        if report.scalar_square is None:
            worst = max(worst, 1.0)
            continue
        root = math.sqrt(max(report.scalar_square, 0.0))
        target = np.array([-root] * 4 + [root] * 4)
        worst = max(
            worst,
            float(np.abs(np.array(report.eigenvalues) - target).max()) / max(1.0, root),
        )
        if [n for _, n in report.degeneracies] != [4, 4] and root > 1e-6:
            worst = max(worst, 1.0)
    return worst, {"samples": 25, "pattern": "+-sqrt(lambda) with multiplicity 4"}


def _check_sum_route_equality(rng, samples):
    worst = 0.0
    for _ in range(50):
        for kind in ("QuarkSum", "QQbar"):
            spec = _random_spec(rng, kind)
            direct = build_hamiltonian(spec)
            summed = build_composite(kind, spec.to_dict())
            worst = max(worst, _maxabs(direct - summed))
    return worst, {"samples": 50, "kinds": ["QuarkSum", "QQbar"]}


def _check_translation_invariance(rng, samples):
    worst = 0.0
    for _ in range(30):
        grid = rng.integers(-32, 33, size=15) / 8.0  # dyadic grid keeps sums exact
        p, x, pbar, xbar, shift = (grid[i : i + 3] for i in range(0, 15, 3))
        m = float(rng.integers(0, 9)) / 4.0
        base = build_hamiltonian(
            HamiltonianSpec(kind="QQbar", m=m, p=tuple(p), x=tuple(x),
                            pbar=tuple(pbar), xbar=tuple(xbar))
        )
        shifted = build_hamiltonian(
            HamiltonianSpec(kind="QQbar", m=m, p=tuple(p), x=tuple(x + shift),
                            pbar=tuple(pbar), xbar=tuple(xbar + shift))
        )
        worst = max(worst, _maxabs(base - shifted))
    # witness of single-quark NON-invariance: the shift must move H_q
    q = HamiltonianSpec(kind="QuarkSum", m=1.0, p=(1.0, 2.0, 3.0), x=(0.5, -1.0, 2.0))
    q_shift = HamiltonianSpec(kind="QuarkSum", m=1.0, p=(1.0, 2.0, 3.0),
                              x=(1.5, -1.0, 2.0))
    witness = _maxabs(build_hamiltonian(q) - build_hamiltonian(q_shift))
    if witness < 0.5:
        worst = max(worst, 1.0)
    return worst, {"samples": 30, "witness_shift": [1.0, 0.0, 0.0],
                   "witness_change": witness}


def _check_rest_frame(rng, samples):
    spec = HamiltonianSpec.from_dict({"kind": "QQbar", "P": [0, 0, 0], "dx": [0, 0, 0], "m": 1})
    report = square_and_spectrum(build_hamiltonian(spec))
    worst = abs((report.scalar_square or 0.0) - 36.0)
    target = np.array([-6.0] * 4 + [6.0] * 4)
    worst = max(worst, float(np.abs(np.array(report.eigenvalues) - target).max()))
    return worst, {"scalar_square": report.scalar_square,
                   "degeneracies": [[v, n] for v, n in report.degeneracies]}


def _check_chirality_breaking(rng, samples):
    g5 = clifford.build_gamma5()
    x = rng.uniform(-2.0, 2.0, size=3)
    m = float(rng.uniform(0.5, 2.0))
    mass_term = m * clifford.build_B()
    position_term = sum(clifford.build_Bk(k + 1) * x[k] for k in range(3))
    kinetic = sum(clifford.build_A(k + 1) * x[k] for k in range(3))
    worst = max(
        _maxabs(g5 @ mass_term @ g5 + mass_term),
        _maxabs(g5 @ position_term @ g5 + position_term),
        _maxabs(g5 @ kinetic @ g5 - kinetic),
    )
    return worst, {"note": "mass and position terms anticommute with gamma5; kinetic term commutes"}


# ---------------------------------------------------------------------------
# registry and runner
# ---------------------------------------------------------------------------

_CheckFn = Callable[[np.random.Generator, int | None], tuple[float, dict]]

# (name, stable rng stream id, default tolerance, function)
_REGISTRY: dict[str, list[tuple[str, int, float, _CheckFn]]] = {
    "su3": [
        ("su3/commutator-table", 10, 1e-12, _check_commutator_table),
        ("su3/jacobi-identity", 11, 1e-12, _check_jacobi),
        ("su3/u1-centrality", 12, 1e-12, _check_centrality),
        ("su3/group-membership", 13, 1e-12, _check_group_membership),
        ("su3/group-additivity", 14, 1e-11, _check_group_additivity),
        ("su3/quadratic-form-invariance", 15, 1e-12, _check_quadratic_form),
        ("su3/reflection-square", 16, 1e-12, _check_reflection_square),
        ("su3/pairing-symplectic", 17, 1e-12, _check_pairing_symplectic),
        ("su3/pairing-from-rotation", 18, 1e-12, _check_pairing_from_rotation),
        ("su3/pairing-from-diagonal", 19, 1e-12, _check_pairing_from_diagonal),
    ],
    "clifford": [
        ("clifford/anticommutation-table", 20, 1e-12, _check_anticommutation),
        ("clifford/hermitian-involution", 21, 1e-12, _check_hermitian_involution),
        ("clifford/conjugation-identities", 22, 1e-12, _check_conjugation_identities),
        ("clifford/tau-uniqueness", 23, 1e-12, _check_tau_uniqueness),
        ("clifford/gamma5-chirality", 24, 1e-12, _check_gamma5),
        ("clifford/random-basis-similarity", 25, 1e-12, _check_random_basis_similarity),
    ],
    "rotation": [
        ("rotation/mixing-law-axis3", 30, 1e-12, _check_mixing_law),
        ("rotation/color-axis-invariance", 31, 1e-12, _check_color_axis_invariance),
        ("rotation/full-sum-invariance", 32, 1e-12, _check_full_sum_invariance),
        ("rotation/qqbar-invariance", 33, 1e-12, _check_qqbar_invariance),
    ],
    "conjugation": [
        ("conjugation/c-matrix-properties", 40, 1e-12, _check_c_matrix),
        ("conjugation/colored-closed-forms", 41, 1e-12, _check_colored_closed_forms),
        ("conjugation/involution", 42, 1e-12, _check_conjugation_involution),
        ("conjugation/dirac-em", 43, 1e-13, _check_dirac_em),
        ("conjugation/antiparticle-distinctness", 44, 1e-12, _check_distinctness),
    ],
    "composite": [
        ("composite/quark-sum-square", 50, 1e-11, _check_quark_sum_square),
        ("composite/qqbar-mass-law", 51, 1e-11, _check_qqbar_mass_law),
        ("composite/spectrum-symmetry", 52, 1e-10, _check_spectrum_symmetry),
        ("composite/sum-route-equality", 53, 1e-12, _check_sum_route_equality),
        ("composite/translation-invariance", 54, 0.0, _check_translation_invariance),
        ("composite/rest-frame-example", 55, 1e-12, _check_rest_frame),
        ("composite/chirality-breaking", 56, 1e-12, _check_chirality_breaking),
    ],
}


def run_suite(
    suite: str,
    tol: float | None = None,
    seed: int = DEFAULT_SEED,
    samples: int | None = None,
) -> VerificationReport:
    """Run one named suite (or "all") and collect CheckResults."""
    if suite == "all":
        names = SUITES
    elif suite in _REGISTRY:
        names = (suite,)
    else:
        raise ValueError(f"unknown suite {suite!r}; expected one of {('all',) + SUITES}")
    checks: list[CheckResult] = []
    for name in names:
        for check_name, stream, default_tol, fn in _REGISTRY[name]:
            rng = np.random.default_rng([seed, stream])
            residual, details = fn(rng, samples)
            tolerance = default_tol if tol is None else float(tol)
            checks.append(
                CheckResult(
                    name=check_name,
                    max_residual=float(residual),
                    tolerance=tolerance,
                    details=details,
                )
            )
    return VerificationReport(suite=suite, seed=seed, checks=tuple(checks))
