import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from phasequark import clifford as cf
from phasequark.hamiltonian import (
    EMField,
    HamiltonianSpec,
    antiparticle_distinctness_check,
    build_composite,
    build_hamiltonian,
    conjugate_hamiltonian,
    coefficient_pattern,
    rotate_hamiltonian,
    rotation_matrix,
    square_and_spectrum,
)

A = [cf.build_A(k) for k in (1, 2, 3)]
BK = [cf.build_Bk(k) for k in (1, 2, 3)]
B = cf.build_B()

finite = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)
vec3 = st.tuples(finite, finite, finite)
mass = st.floats(min_value=0.0, max_value=3.0, allow_nan=False)


def test_color_r_example():
    h = build_hamiltonian(
        HamiltonianSpec(kind="ColorR", p=(1, 0, 0), x=(0, 2, 3), m=5)
    )
    assert np.array_equal(h, A[0] + 2 * BK[1] + 3 * BK[2] + 5 * B)


def test_color_b_zero_inputs_give_zero_matrix():
    h = build_hamiltonian(HamiltonianSpec(kind="ColorB"))
    assert np.array_equal(h, np.zeros((8, 8)))


def test_dirac_with_em_coupling():
    em = EMField(e=2.0, A0=0.5, Avec=(1.0, 0.0, -1.0))
    h = build_hamiltonian(HamiltonianSpec(kind="Dirac", p=(1, 2, 3), m=4, em=em))
    expected = (
        A[0] * (1 - 2.0 * 1.0)
        + A[1] * 2
        + A[2] * (3 - 2.0 * (-1.0))
        + 4 * B
        + 2.0 * 0.5 * np.eye(8)
    )
    assert np.array_equal(h, expected)


def test_quark_sum_and_qqbar_closed_forms():
    h = build_hamiltonian(
        HamiltonianSpec(kind="QuarkSum", p=(1, 2, 3), x=(4, 5, 6), m=7)
    )
    expected = sum(A[i] * (i + 1) + 2 * BK[i] * (i + 4) for i in range(3)) + 21 * B
    assert np.array_equal(h, expected)

    h2 = build_hamiltonian(
        HamiltonianSpec(
            kind="QQbar", p=(1, 0, 0), x=(0, 1, 0), pbar=(0, 2, 0), xbar=(0, 0, 3), m=1
        )
    )
    expected2 = A[0] + 2 * A[1] + 2 * (BK[1] - 3 * BK[2]) + 6 * B
    assert np.array_equal(h2, expected2)


def test_qqbar_opposite_quarks_cancel():
    spec = HamiltonianSpec(
        kind="QQbar", p=(1, 2, 3), pbar=(-1, -2, -3), x=(4, 5, 6), xbar=(4, 5, 6), m=0
    )
    assert np.array_equal(build_hamiltonian(spec), np.zeros((8, 8)))


@given(vec3, vec3, mass, st.sampled_from(["ColorR", "ColorY", "ColorB", "QuarkSum"]))
def test_real_specs_build_hermitian_matrices(p, x, m, kind):
    h = build_hamiltonian(HamiltonianSpec(kind=kind, p=p, x=x, m=m))
    assert np.array_equal(h, h.conj().T)


def test_custom_kind():
    spec = HamiltonianSpec(kind="Custom", a=(1, 0, 0), b=(0, 2, 0), beta=3, scalar=4)
    assert np.array_equal(
        build_hamiltonian(spec), A[0] + 2 * BK[1] + 3 * B + 4 * np.eye(8)
    )


# -- spec validation ------------------------------------------------------


def test_from_dict_rejects_unknown_kind():
    with pytest.raises(ValueError, match="kind"):
        HamiltonianSpec.from_dict({"kind": "Chartreuse"})


def test_from_dict_rejects_wrong_fields():
    with pytest.raises(ValueError, match="not valid for kind"):
        HamiltonianSpec.from_dict({"kind": "Dirac", "x": [1, 2, 3]})
    with pytest.raises(ValueError, match="not valid for kind"):
        HamiltonianSpec.from_dict({"kind": "AntiR", "em": {"e": 1.0}})


def test_from_dict_rejects_bad_values():
    with pytest.raises(ValueError):
        HamiltonianSpec.from_dict({"kind": "Dirac", "m": -1.0})
    with pytest.raises(ValueError):
        HamiltonianSpec.from_dict({"kind": "Dirac", "m": float("inf")})
    with pytest.raises(ValueError):
        HamiltonianSpec.from_dict({"kind": "Dirac", "p": [1, 2]})


def test_qqbar_shorthand_and_exclusivity():
    spec = HamiltonianSpec.from_dict({"kind": "QQbar", "P": [1, 2, 3], "dx": [4, 5, 6], "m": 1})
    full = HamiltonianSpec.from_dict(
        {"kind": "QQbar", "p": [1, 2, 3], "x": [4, 5, 6], "m": 1}
    )
    assert np.array_equal(build_hamiltonian(spec), build_hamiltonian(full))
    with pytest.raises(ValueError, match="not both"):
        HamiltonianSpec.from_dict({"kind": "QQbar", "P": [1, 2, 3], "p": [1, 2, 3]})
    with pytest.raises(ValueError, match="only valid for kind QQbar"):
        HamiltonianSpec.from_dict({"kind": "QuarkSum", "P": [1, 2, 3]})


def test_spec_dict_round_trip():
    spec = HamiltonianSpec(
        kind="ColorY", p=(1, 2, 3), x=(4, 5, 6), m=7,
        em=EMField(e=0.5, A0=1.0, Avec=(0, 1, 0)),
    )
    assert HamiltonianSpec.from_dict(spec.to_dict()) == spec


# -- composites -----------------------------------------------------------


def test_composite_sum_route_matches_closed_form():
    inputs = {"p": [1.0, -2.0, 0.5], "x": [0.25, 1.5, -1.0], "m": 1.25}
    direct = build_hamiltonian(HamiltonianSpec.from_dict({"kind": "QuarkSum", **inputs}))
    summed = build_composite("QuarkSum", inputs)
    assert np.abs(direct - summed).max() <= 1e-12

    inputs_qq = {**inputs, "pbar": [0.5, 0.5, 0.5], "xbar": [1.0, 0.0, -1.0]}
    direct_qq = build_hamiltonian(HamiltonianSpec.from_dict({"kind": "QQbar", **inputs_qq}))
    summed_qq = build_composite("QQbar", inputs_qq)
    assert np.abs(direct_qq - summed_qq).max() <= 1e-12


def test_composite_rejects_other_kinds():
    with pytest.raises(ValueError, match="QuarkSum or QQbar"):
        build_composite("Dirac", {"p": [1, 0, 0]})


# -- rotations ------------------------------------------------------------


def test_rotation_matrix_passive_convention():
    phi = 0.3
    rot = rotation_matrix(3, phi)
    c, s = math.cos(phi), math.sin(phi)
    assert np.allclose(rot, np.array([[c, s, 0], [-s, c, 0], [0, 0, 1]]), atol=1e-15)
    assert np.allclose(rotation_matrix((0.0, 0.0, 1.0), phi), rot, atol=1e-15)


def test_rotation_matrix_rejects_bad_axes():
    with pytest.raises(ValueError, match="unit"):
        rotation_matrix((1.0, 1.0, 0.0), 0.5)
    with pytest.raises(ValueError, match="axis index"):
        rotation_matrix(4, 0.5)
    with pytest.raises(ValueError, match="finite"):
        rotation_matrix(3, float("nan"))


def test_color_hamiltonians_invariant_about_own_axis():
    for color, axis in (("R", 1), ("Y", 2), ("B", 3)):
        spec = HamiltonianSpec(kind=f"Color{color}", p=(1, 2, 3), x=(4, 5, 6), m=7)
        h = build_hamiltonian(spec)
        for phi in (0.3, 1.1, -2.2):
            assert np.abs(h - rotate_hamiltonian(spec, axis, phi)).max() <= 1e-12


def test_mixing_law_about_axis3():
    from phasequark.hamiltonian import rotated_operators

    p, x, m = np.array([1.0, -0.5, 2.0]), np.array([0.5, 1.5, -1.0]), 0.75
    spec_r = HamiltonianSpec(kind="ColorR", p=tuple(p), x=tuple(x), m=m)
    spec_y = HamiltonianSpec(kind="ColorY", p=tuple(p), x=tuple(x), m=m)
    h_r = build_hamiltonian(spec_r)
    for phi in (0.3, -1.2, 2.5):
        c, s = math.cos(phi), math.sin(phi)
        rot = rotation_matrix(3, phi)
        a_p, b_p = rotated_operators(rot)
        pp, xp = rot @ p, rot @ x
        cross = b_p[1] * xp[0] + b_p[0] * xp[1] - a_p[1] * pp[0] - a_p[0] * pp[1]
        recomposed = (
            c * c * rotate_hamiltonian(spec_r, 3, phi)
            + s * s * rotate_hamiltonian(spec_y, 3, phi)
            + s * c * cross
        )
        assert np.abs(h_r - recomposed).max() <= 1e-12


@given(vec3, vec3, mass, st.integers(min_value=0, max_value=10 ** 6))
def test_quark_sum_rotation_invariance(p, x, m, pick):
    rng = np.random.default_rng(pick)
    axis = rng.normal(size=3)
    axis /= np.linalg.norm(axis)
    phi = float(rng.uniform(-math.pi, math.pi))
    spec = HamiltonianSpec(kind="QuarkSum", p=p, x=x, m=m)
    h = build_hamiltonian(spec)
    assert np.abs(h - rotate_hamiltonian(spec, tuple(axis), phi)).max() <= 1e-12


def test_rotate_rejects_custom():
    with pytest.raises(ValueError, match="Custom"):
        rotate_hamiltonian(HamiltonianSpec(kind="Custom"), 3, 0.5)


# -- conjugation ----------------------------------------------------------


def test_conjugate_color_r_matches_printed_antiparticle_form():
    spec = HamiltonianSpec(kind="ColorR", p=(1, 0, 0), x=(0, 2, 3), m=5)
    matrix, conj_spec = conjugate_hamiltonian(spec)
    assert np.array_equal(matrix, A[0] - 2 * BK[1] - 3 * BK[2] + 5 * B)
    anti = build_hamiltonian(HamiltonianSpec(kind="AntiR", p=(1, 0, 0), x=(0, 2, 3), m=5))
    assert np.array_equal(matrix, anti)
    assert conj_spec.x == (0.0, -2.0, -3.0)
    assert conj_spec.kind == "ColorR"


@pytest.mark.parametrize("color", ["R", "Y", "B"])
def test_conjugate_all_colors_equal_anti_kinds(color):
    spec = HamiltonianSpec(kind=f"Color{color}", p=(0.5, -1.5, 2.0), x=(1.0, 0.25, -0.75), m=1.5)
    matrix, _ = conjugate_hamiltonian(spec)
    anti = build_hamiltonian(
        HamiltonianSpec(kind=f"Anti{color}", p=spec.p, x=spec.x, m=spec.m)
    )
    assert np.array_equal(matrix, anti)


def test_conjugate_dirac_em_equals_charge_flip():
    em = EMField(e=1.25, A0=-0.5, Avec=(0.75, -1.0, 0.25))
    spec = HamiltonianSpec(kind="Dirac", p=(1.0, -2.0, 0.5), m=2.0, em=em)
    matrix, conj_spec = conjugate_hamiltonian(spec)
    flipped = HamiltonianSpec(kind="Dirac", p=spec.p, m=spec.m,
                              em=EMField(e=-1.25, A0=-0.5, Avec=em.Avec))
    assert np.abs(matrix - build_hamiltonian(flipped)).max() <= 1e-13
    assert conj_spec == flipped


def test_free_dirac_is_self_conjugate():
    spec = HamiltonianSpec(kind="Dirac", p=(1, 2, 3), m=4)
    matrix, conj_spec = conjugate_hamiltonian(spec)
    assert np.array_equal(matrix, build_hamiltonian(spec))
    assert conj_spec == spec


def test_conjugation_is_an_involution():
    spec = HamiltonianSpec(kind="ColorY", p=(1.5, 0.5, -2.0), x=(0.25, 1.0, -1.0), m=0.5)
    _, once = conjugate_hamiltonian(spec)
    twice_matrix, twice = conjugate_hamiltonian(once)
    assert twice == spec
    assert np.array_equal(twice_matrix, build_hamiltonian(spec))


def test_conjugate_rejects_composite_kinds():
    with pytest.raises(ValueError, match="supports kinds"):
        conjugate_hamiltonian(HamiltonianSpec(kind="QuarkSum"))


def test_coefficient_pattern_projectors():
    phi, psi, m = coefficient_pattern(HamiltonianSpec(kind="ColorR", m=2.0))
    assert np.array_equal(phi, np.diag([1.0, 0, 0]))
    assert np.array_equal(psi, np.diag([0.0, 1, 1]))
    assert m == 2.0
    phi_a, psi_a, _ = coefficient_pattern(HamiltonianSpec(kind="AntiR"))
    assert np.array_equal(phi_a, phi)
    assert np.array_equal(psi_a, -psi)
    with pytest.raises(ValueError):
        coefficient_pattern(HamiltonianSpec(kind="Dirac"))


def test_distinctness_generic_case():
    report = antiparticle_distinctness_check("R", n_samples=4000, seed=11)
    assert report.margin == pytest.approx(math.sqrt(2.0))
    assert report.min_distance >= report.margin - 1e-9
    assert report.min_distance_with_reflection >= report.margin - 1e-9
    assert report.passed
    # reflection example: position coefficients come out with flipped signs
    assert report.reflected_b_coefficients == (0.0, -1.0, -1.0)
    assert report.target_b_coefficients == (0.0, 1.0, 1.0)
    assert not report.degenerate


def test_distinctness_degenerate_case():
    report = antiparticle_distinctness_check("R", p=(0, 0, 0), x=(0, 0, 0), m=1.0,
                                             n_samples=100, seed=3)
    assert report.degenerate
    assert report.margin == 0.0
    assert report.min_distance == pytest.approx(0.0)


def test_distinctness_validates_inputs():
    with pytest.raises(ValueError):
        antiparticle_distinctness_check("W")
    with pytest.raises(ValueError):
        antiparticle_distinctness_check("R", n_samples=0)


# -- spectra ---------------------------------------------------------------


def test_rest_frame_spectrum():
    h = build_hamiltonian(HamiltonianSpec.from_dict(
        {"kind": "QQbar", "P": [0, 0, 0], "dx": [0, 0, 0], "m": 1}
    ))
    report = square_and_spectrum(h)
    assert report.scalar_square == pytest.approx(36.0)
    assert report.degeneracies == ((-6.0, 4), (6.0, 4))
    assert report.symmetric_about_zero


def test_moving_frame_spectrum():
    h = build_hamiltonian(HamiltonianSpec.from_dict(
        {"kind": "QQbar", "P": [3, 0, 0], "dx": [0, 2, 0], "m": 0}
    ))
    report = square_and_spectrum(h)
    assert report.scalar_square == pytest.approx(25.0)
    assert [n for _, n in report.degeneracies] == [4, 4]
    assert report.eigenvalues[0] == pytest.approx(-5.0)
    assert report.eigenvalues[-1] == pytest.approx(5.0)


def test_dirac_rest_spectrum():
    h = build_hamiltonian(HamiltonianSpec(kind="Dirac", m=2.5))
    report = square_and_spectrum(h)
    assert report.degeneracies == ((-2.5, 4), (2.5, 4))


def test_spectrum_rejects_non_hermitian():
    with pytest.raises(ValueError, match="Hermitian"):
        square_and_spectrum(np.triu(np.ones((8, 8))))


def test_em_breaks_spectral_symmetry_but_not_hermiticity():
    em = EMField(e=1.0, A0=2.0)
    h = build_hamiltonian(HamiltonianSpec(kind="Dirac", p=(1, 0, 0), m=1, em=em))
    report = square_and_spectrum(h)
    assert not report.symmetric_about_zero
    assert report.scalar_square is None


@given(vec3, vec3, vec3, vec3, mass)
def test_mass_squared_law_property(p, x, pbar, xbar, m):
    spec = HamiltonianSpec(kind="QQbar", p=p, x=x, pbar=pbar, xbar=xbar, m=m)
    h = build_hamiltonian(spec)
    big_p = np.array(p) + np.array(pbar)
    dx = np.array(x) - np.array(xbar)
    lam = float(big_p @ big_p + 4.0 * dx @ dx + 36.0 * m * m)
    assert np.abs(h @ h - lam * np.eye(8)).max() <= 1e-11 * max(1.0, lam)


def test_translation_invariance_of_qqbar_exact():
    base = dict(kind="QQbar", p=(0.5, 1.0, -0.25), pbar=(1.5, -0.5, 0.75), m=1.25)
    x, xbar = np.array([0.125, 2.0, -1.5]), np.array([1.0, -0.375, 0.25])
    shift = np.array([0.625, -2.25, 3.125])
    h0 = build_hamiltonian(HamiltonianSpec(x=tuple(x), xbar=tuple(xbar), **base))
    h1 = build_hamiltonian(
        HamiltonianSpec(x=tuple(x + shift), xbar=tuple(xbar + shift), **base)
    )
    assert np.array_equal(h0, h1)


def test_single_quark_shift_witness_changes_matrix():
    spec = HamiltonianSpec(kind="QuarkSum", p=(1, 2, 3), x=(0.5, -1.0, 2.0), m=1.0)
    shifted = HamiltonianSpec(kind="QuarkSum", p=(1, 2, 3), x=(1.5, -1.0, 2.0), m=1.0)
    diff = build_hamiltonian(shifted) - build_hamiltonian(spec)
    assert np.array_equal(diff, 2.0 * BK[0])
    assert np.abs(diff).max() == 2.0
