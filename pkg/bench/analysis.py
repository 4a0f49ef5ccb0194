"""
Detection statistics of the bench: probabilities, the no-signaling violation and the
CHSH-like correlation, together with their closed forms used as oracles.
"""

import math
from typing import Optional, Tuple

from bench.matrix import run_bench
from core import (
    DEFAULT_BS_PHASES,
    Bench,
    DetectionRecord,
    ExperimentSettings,
    MediumPosition,
    ProbabilityTable,
    PTMediumParams,
    ZeroIntensityError,
)
from optics import derive


def probabilities(record: DetectionRecord) -> ProbabilityTable:
    """
    Normalize the detector intensities to joint and marginal probabilities.

    Args:
        record: The four port intensities

    Returns:
        P(n, j) = W_nj / sum(W) with the marginals P_A(j) and P_B(n)

    Raises:
        ZeroIntensityError: If the total intensity is zero
    """
    total: float = record.total
    if not total > 0:
        raise ZeroIntensityError("cannot normalize a detection record with zero total intensity")
    return ProbabilityTable(
        p_uh=record.w_uh / total,
        p_uv=record.w_uv / total,
        p_lh=record.w_lh / total,
        p_lv=record.w_lv / total,
    )


def _run(settings: ExperimentSettings, bench: Optional[Bench]) -> DetectionRecord:
    return run_bench(settings) if bench is None else bench.run(settings)


def has_closed_form(settings: ExperimentSettings) -> bool:
    """
    Whether the closed forms below hold: medium after the BS and default BS phases.
    """
    return settings.medium_position is MediumPosition.AFTER_BS and tuple(settings.bs_phases) == DEFAULT_BS_PHASES


def _require_canonical(settings: ExperimentSettings) -> None:
    if settings.medium_position is not MediumPosition.AFTER_BS:
        raise ValueError("closed forms hold only with the medium after the beam splitter")
    if tuple(settings.bs_phases) != DEFAULT_BS_PHASES:
        raise ValueError("closed forms hold only for the default beam-splitter phases")


def _violation_term(settings: ExperimentSettings, sin_alpha: float) -> float:
    # sin(alpha) [r^2 sin(2 beta - phi2) - t^2 sin(2 beta + phi2)]
    beta, phi2 = settings.hwp_angle, settings.medium.phi2
    return sin_alpha * (
        settings.r**2 * math.sin(2 * beta - phi2) - settings.t**2 * math.sin(2 * beta + phi2)
    )


def p_single_closed_form(settings: ExperimentSettings) -> Tuple[float, float]:
    """
    Polarization marginals in closed form.

    Args:
        settings: Run settings with the medium after the BS and the default BS phases

    Returns:
        (P_A(h), P_A(v)) with P_A(h) = 1/2 - sin(alpha)[r^2 sin(2beta-phi2) - t^2 sin(2beta+phi2)]/(1+sin^2 alpha)

    Raises:
        BrokenPhaseError: If the medium is outside the unbroken phase
        ValueError: If the settings are not those the closed form holds for
    """
    _require_canonical(settings)
    sin_alpha: float = derive(settings.medium).sin_alpha
    pa_h: float = 0.5 - _violation_term(settings, sin_alpha) / (1 + sin_alpha**2)
    return pa_h, 1.0 - pa_h


def w_closed_form(settings: ExperimentSettings) -> DetectionRecord:
    """
    Detector intensities in closed form, in the normalization of initial_state():
    W_uh = G/2 + rt sin(2beta) - I, W_uv = G/2 - rt sin(2beta) + I,
    W_lh = G/2 - rt sin(2beta) - I, W_lv = G/2 + rt sin(2beta) + I,
    with G = (1+sin^2 alpha)/cos^2 alpha and I = sin(alpha)[r^2 sin(2beta-phi2) - t^2 sin(2beta+phi2)]/cos^2 alpha.

    Raises:
        BrokenPhaseError: If the medium is outside the unbroken phase
        ValueError: If the settings are not those the closed form holds for
    """
    _require_canonical(settings)
    derived = derive(settings.medium)
    cos2 = math.cos(derived.alpha) ** 2
    half_gain = derived.intensity_gain / 2
    cross = settings.r * settings.t * math.sin(2 * settings.hwp_angle)
    interference = _violation_term(settings, derived.sin_alpha) / cos2
    # analytically zero intensities can come out as -1e-16
    record = DetectionRecord(
        w_uh=max(0.0, half_gain + cross - interference),
        w_uv=max(0.0, half_gain - cross + interference),
        w_lh=max(0.0, half_gain - cross - interference),
        w_lv=max(0.0, half_gain + cross + interference),
    )
    if settings.mirror_swap:
        return record
    return DetectionRecord(w_uh=record.w_lh, w_uv=record.w_lv, w_lh=record.w_uh, w_lv=record.w_uv)


def w_half_cross_terms(settings: ExperimentSettings) -> Tuple[float, float, float, float]:
    """
    Detector intensities (W_uh, W_uv, W_lh, W_lv) = G + rt sin(2beta) - I and permutations,
    with a total of 4G. Rescaled to that total the pipeline cross terms are twice these,
    so P_A computed from them disagrees with p_single_closed_form.

    Raises:
        BrokenPhaseError: If the medium is outside the unbroken phase
        ValueError: If the settings are not those the closed form holds for
    """
    _require_canonical(settings)
    derived = derive(settings.medium)
    cos2 = math.cos(derived.alpha) ** 2
    gain = derived.intensity_gain
    cross = settings.r * settings.t * math.sin(2 * settings.hwp_angle)
    interference = _violation_term(settings, derived.sin_alpha) / cos2
    return (
        gain + cross - interference,
        gain - cross + interference,
        gain - cross - interference,
        gain + cross + interference,
    )


def signaling_delta(
    medium: PTMediumParams,
    beta: float,
    setting_a: float,
    setting_b: float,
    medium_position: MediumPosition = MediumPosition.AFTER_BS,
    bench: Optional[Bench] = None,
) -> float:
    """
    Change of the polarization marginal P_A(h) when the beam-splitter setting is switched,
    computed from the full pipeline.

    Args:
        medium: The medium constants
        beta: Half-wave-plate angle in radians
        setting_a: First beam-splitter angle (r = sin(setting_a))
        setting_b: Second beam-splitter angle
        medium_position: Where the medium sits relative to the BS
        bench: Bench implementation; the closed-form matrix bench if None

    Returns:
        |P_A(h; setting_a) - P_A(h; setting_b)|

    Raises:
        BrokenPhaseError: If the medium is outside the unbroken phase
    """
    first = ExperimentSettings(bs_angle=setting_a, hwp_angle=beta, medium=medium, medium_position=medium_position)
    second = first.with_angles(setting_b, beta)
    return abs(probabilities(_run(first, bench)).pa_h - probabilities(_run(second, bench)).pa_h)


def chsh_c(
    bs_angle: float,
    beta: float,
    medium: PTMediumParams,
    medium_position: MediumPosition = MediumPosition.AFTER_BS,
    bench: Optional[Bench] = None,
) -> float:
    """
    Correlation C(phi, beta) = P(u,h) - P(u,v) - P(l,h) + P(l,v) from the pipeline.

    Raises:
        BrokenPhaseError: If the medium is outside the unbroken phase
    """
    settings = ExperimentSettings(bs_angle=bs_angle, hwp_angle=beta, medium=medium, medium_position=medium_position)
    return probabilities(_run(settings, bench)).correlation


def chsh_s(
    phi_1: float,
    beta_1: float,
    phi_2: float,
    beta_2: float,
    medium: PTMediumParams,
    medium_position: MediumPosition = MediumPosition.AFTER_BS,
    bench: Optional[Bench] = None,
) -> float:
    """
    CHSH-like combination S = |C(phi_1,beta_1) + C(phi_1,beta_2) + C(phi_2,beta_1) - C(phi_2,beta_2)|.
    phi_1 and phi_2 are beam-splitter setting angles, not the medium phases.

    Raises:
        BrokenPhaseError: If the medium is outside the unbroken phase
    """

    def correlation(phi: float, beta: float) -> float:
        return chsh_c(phi, beta, medium, medium_position, bench)

    return abs(
        correlation(phi_1, beta_1) + correlation(phi_1, beta_2) + correlation(phi_2, beta_1) - correlation(phi_2, beta_2)
    )


def correlation_closed_form(bs_angle: float, beta: float, medium: PTMediumParams) -> float:
    """
    C = sin(2phi) sin(2beta) cos^2(alpha)/(1+sin^2 alpha).
    """
    sin_alpha = derive(medium).sin_alpha
    return math.sin(2 * bs_angle) * math.sin(2 * beta) * (1 - sin_alpha**2) / (1 + sin_alpha**2)


def chsh_bound(medium: PTMediumParams) -> float:
    """
    Largest CHSH-like value of the bench, 2 cos^2(alpha)/(1+sin^2 alpha); 2 for Hermitian media.

    Raises:
        BrokenPhaseError: If the medium is outside the unbroken phase
    """
    sin_alpha = derive(medium).sin_alpha
    return 2 * (1 - sin_alpha**2) / (1 + sin_alpha**2)


def max_violation_closed_form(medium: PTMediumParams) -> float:
    """
    Largest signaling_delta over settings, 2|sin(alpha) cos(phi2)|/(1+sin^2 alpha),
    reached at beta = pi/4 with the settings r = 1 and t = 1.

    Raises:
        BrokenPhaseError: If the medium is outside the unbroken phase
    """
    sin_alpha = derive(medium).sin_alpha
    return 2 * abs(sin_alpha * math.cos(medium.phi2)) / (1 + sin_alpha**2)
