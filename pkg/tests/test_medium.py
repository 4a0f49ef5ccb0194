import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy import testing as npt

from core import PRESETS, BrokenPhaseError, PTMediumParams
from core.state import is_unitary
from optics import (
    derive,
    hamiltonian,
    is_pt_symmetric,
    m_opt_analytic,
    m_opt_numeric,
    medium_operator,
    spectrum,
    spectrum_closed_form,
)

FIG2 = PRESETS["fig2"]

phases = st.floats(min_value=0.0, max_value=2 * math.pi, allow_nan=False)
strengths = st.floats(min_value=0.0, max_value=10.0, allow_nan=False)


def random_unbroken(rng: np.random.Generator) -> PTMediumParams:
    while True:
        params = PTMediumParams(
            eta1=rng.uniform(0.0, 5.0),
            phi1=rng.uniform(0.0, 2 * math.pi),
            eta2=rng.uniform(0.1, 10.0),
            phi2=rng.uniform(0.0, 2 * math.pi),
        )
        if params.eta1 * abs(math.sin(params.phi1)) < 0.95 * params.eta2:
            return params


def random_broken(rng: np.random.Generator) -> PTMediumParams:
    while True:
        params = PTMediumParams(
            eta1=rng.uniform(0.1, 10.0),
            phi1=rng.uniform(0.0, 2 * math.pi),
            eta2=rng.uniform(0.0, 5.0),
            phi2=rng.uniform(0.0, 2 * math.pi),
        )
        if params.eta1 * abs(math.sin(params.phi1)) > 1.05 * params.eta2:
            return params


def test_params_validation():
    with pytest.raises(ValueError):
        PTMediumParams(eta1=-1.0, phi1=0.0, eta2=1.0)
    with pytest.raises(ValueError):
        PTMediumParams(eta1=1.0, phi1=0.0, eta2=-1.0)
    with pytest.raises(ValueError):
        PTMediumParams(eta1=1.0, phi1=math.inf, eta2=1.0)


def test_hamiltonian_values():
    npt.assert_allclose(hamiltonian(PTMediumParams(eta1=0.0, phi1=0.3, eta2=1.0)), [[0, 1], [1, 0]], atol=1e-15)
    npt.assert_allclose(
        hamiltonian(PTMediumParams(eta1=1.0, phi1=math.pi / 2, eta2=2.0)), [[1j, 2], [2, -1j]], atol=1e-15
    )


@given(strengths, strengths, phases)
def test_hamiltonian_is_hermitian_without_gain(eta1, eta2, phi2):
    h = hamiltonian(PTMediumParams(eta1=eta1, phi1=0.0, eta2=eta2, phi2=phi2))
    npt.assert_allclose(h, np.conj(h).T, atol=1e-12)


@given(strengths, phases, strengths, phases)
def test_hamiltonian_is_pt_symmetric(eta1, phi1, eta2, phi2):
    assert is_pt_symmetric(hamiltonian(PTMediumParams(eta1=eta1, phi1=phi1, eta2=eta2, phi2=phi2)))


def test_pt_symmetry_on_random_draws():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        assert is_pt_symmetric(hamiltonian(random_unbroken(rng)))


def test_is_pt_symmetric_examples():
    assert not is_pt_symmetric(np.array([[1j, 0], [0, 1j]]))
    assert is_pt_symmetric(np.array([[1, 2], [2, 1]]))


def test_derive_hermitian():
    derived = derive(PTMediumParams(eta1=3.0, phi1=0.0, eta2=2.0))
    assert derived.alpha == 0.0
    assert derived.length == pytest.approx(math.pi / 4)
    assert derived.global_phase == pytest.approx(-3.0 * math.pi / 4)
    assert derived.intensity_gain == 1.0


def test_derive_fig2_preset():
    derived = derive(FIG2)
    assert derived.sin_alpha == pytest.approx(0.02521, abs=1e-4)
    assert derived.sin_alpha == pytest.approx(1.91 * math.sin(0.84 * math.pi) / 36.5, rel=1e-14)


@pytest.mark.parametrize(
    "params",
    [
        PTMediumParams(eta1=1.0, phi1=math.pi / 2, eta2=1.0),
        PTMediumParams(eta1=2.0, phi1=math.pi / 2, eta2=1.0),
        PTMediumParams(eta1=0.0, phi1=0.0, eta2=0.0),
    ],
)
def test_derive_broken_phase(params):
    assert not params.is_unbroken
    with pytest.raises(BrokenPhaseError, match=r"broken PT phase: eta2 <= eta1\*\|sin\(phi1\)\|"):
        derive(params)


def test_spectrum_hermitian():
    low, high = spectrum(PTMediumParams(eta1=1.0, phi1=0.0, eta2=2.0))
    assert low == pytest.approx(-1.0)
    assert high == pytest.approx(3.0)


def test_spectrum_broken_pair():
    low, high = sorted(spectrum(PTMediumParams(eta1=2.0, phi1=math.pi / 2, eta2=1.0)), key=lambda v: v.imag)
    assert low == pytest.approx(-1j * math.sqrt(3))
    assert high == pytest.approx(1j * math.sqrt(3))


def test_spectrum_is_real_in_unbroken_phase():
    rng = np.random.default_rng(17)
    for _ in range(1000):
        params = random_unbroken(rng)
        values = spectrum(params)
        assert max(abs(v.imag) for v in values) <= 1e-12
        npt.assert_allclose([v.real for v in values], spectrum_closed_form(params), atol=1e-10)


def test_spectrum_has_conjugate_pair_in_broken_phase():
    rng = np.random.default_rng(19)
    for _ in range(100):
        low, high = spectrum(random_broken(rng))
        assert abs(low.imag) > 1e-6
        assert low == pytest.approx(high.conjugate(), abs=1e-10)


def test_m_opt_hermitian():
    params = PTMediumParams(eta1=1.5, phi1=0.0, eta2=2.0)
    length = derive(params).length
    expected = np.exp(-1j * 1.5 * length) * np.array([[0, -1j], [-1j, 0]])
    npt.assert_allclose(m_opt_analytic(params), expected, atol=1e-14)


def test_m_opt_fig2_magnitudes():
    m = m_opt_analytic(FIG2)
    assert abs(m[0, 1]) == pytest.approx(1.000318, abs=1e-6)
    assert abs(m[1, 0]) == pytest.approx(1.000318, abs=1e-6)
    assert abs(m[0, 0]) == pytest.approx(0.02522, abs=1e-5)


def test_m_opt_matches_numeric_propagator():
    params = PTMediumParams(eta1=1.0, phi1=math.pi / 2, eta2=2.0)
    npt.assert_allclose(m_opt_analytic(params), m_opt_numeric(params, derive(params).length), atol=1e-10)


def test_m_opt_oracle_on_random_draws():
    rng = np.random.default_rng(1000)
    for _ in range(1000):
        params = random_unbroken(rng)
        analytic = m_opt_analytic(params)
        numeric = m_opt_numeric(params, derive(params).length)
        assert np.max(np.abs(analytic - numeric)) <= 1e-10


def test_m_opt_numeric_at_origin_is_identity():
    npt.assert_allclose(m_opt_numeric(FIG2, 0.0), np.eye(2), atol=1e-15)


def test_m_opt_numeric_is_unitary_for_hermitian_medium():
    params = PTMediumParams(eta1=0.7, phi1=0.0, eta2=1.3, phi2=0.4)
    assert is_unitary(m_opt_numeric(params, derive(params).length))


def test_m_opt_numeric_rejects_negative_distance():
    with pytest.raises(ValueError):
        m_opt_numeric(FIG2, -1.0)


def test_m_opt_analytic_broken_phase():
    with pytest.raises(BrokenPhaseError):
        m_opt_analytic(PTMediumParams(eta1=1.0, phi1=math.pi / 2, eta2=0.5))


def test_medium_operator_variants_agree():
    analytic = medium_operator(FIG2)
    numeric = medium_operator(FIG2, numeric=True)
    assert not analytic.lossless
    npt.assert_allclose(analytic.mat, numeric.mat, atol=1e-10)


@pytest.mark.parametrize("sin_alpha", [-0.7, -0.2, 0.0, 0.3, 0.9])
def test_from_sin_alpha(sin_alpha):
    params = PTMediumParams.from_sin_alpha(sin_alpha, eta2=2.0, phi2=0.4)
    assert derive(params).sin_alpha == pytest.approx(sin_alpha, abs=1e-14)
    assert params.eta2 == 2.0
    assert params.phi2 == 0.4


def test_from_sin_alpha_validation():
    with pytest.raises(ValueError):
        PTMediumParams.from_sin_alpha(1.0)
    with pytest.raises(ValueError):
        PTMediumParams.from_sin_alpha(0.5, eta2=0.0)


def test_hermitian_flag():
    assert PTMediumParams(eta1=1.0, phi1=0.0, eta2=1.0).is_hermitian
    assert not FIG2.is_hermitian


@pytest.mark.parametrize("draw", [random_unbroken, random_broken])
def test_m_opt_numeric_composes_over_distance(draw):
    rng = np.random.default_rng(7)
    for _ in range(200):
        params = draw(rng)
        z1, z2 = rng.uniform(0.0, 0.5, size=2)
        first, second = m_opt_numeric(params, z1), m_opt_numeric(params, z2)
        scale = np.linalg.norm(first) * np.linalg.norm(second)
        npt.assert_allclose(first @ second, m_opt_numeric(params, z1 + z2), rtol=1e-9, atol=1e-11 * scale)


def test_m_opt_analytic_splits_at_any_point():
    params = PTMediumParams.from_sin_alpha(0.6, eta2=1.4, phi2=0.3)
    length = derive(params).length
    for fraction in (0.1, 0.5, 0.85):
        z = fraction * length
        npt.assert_allclose(
            m_opt_numeric(params, z) @ m_opt_numeric(params, length - z), m_opt_analytic(params), atol=1e-10
        )


def test_m_opt_is_not_unitary_with_gain_and_loss():
    rng = np.random.default_rng(23)
    for _ in range(100):
        sin_alpha = rng.choice([-1, 1]) * rng.uniform(0.1, 0.9)
        params = PTMediumParams.from_sin_alpha(sin_alpha, eta2=rng.uniform(0.1, 10.0), phi2=rng.uniform(0, 2 * math.pi))
        operator = m_opt_analytic(params)
        assert not is_unitary(operator)
        assert np.max(np.abs(np.conj(operator).T @ operator - np.eye(2))) > 1e-6


@pytest.mark.parametrize("phi1", [0.0, math.pi])
def test_m_opt_is_unitary_without_gain_and_loss(phi1):
    params = PTMediumParams(eta1=1.7, phi1=phi1, eta2=0.9, phi2=1.1)
    assert is_unitary(m_opt_analytic(params), tolerance=1e-10)
