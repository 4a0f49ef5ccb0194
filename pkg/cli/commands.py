"""
Command-line front end: single bench runs, signaling scans, the CHSH-like maximum,
the paraxial validation sweep and the preset summary.
"""

import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple, TypeVar

import click

import factory
from bench import (
    chsh_bound,
    has_closed_form,
    max_chsh,
    max_violation,
    max_violation_closed_form,
    p_single_closed_form,
    probabilities,
    signaling_scan,
    w_closed_form,
)
from cli.config import Command, RunConfig, load_config
from cli.output import emit, render_csv
from core import BrokenPhaseError, DetectionRecord, ExperimentSettings, MediumPosition, ProbabilityTable
from core import config
from core.util import parallel_map
from optics import derive, spectrum_closed_form
from paraxial import DiscrepancyReport, propagated_field, validate_matrix_model, write_field_snapshot

__logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])

CLASSICAL_BOUND = 2.0
PASS_TOLERANCE = 1e-9
DEFAULT_PRESET = "fig2"
RANGE_OPTIONS = ("sin_alpha_range", "beta_range", "phi2_range")


class ConfigError(click.ClickException):
    exit_code = 1


class BrokenPhaseExit(click.ClickException):
    exit_code = 2


class BenchGroup(click.Group):
    """
    Command group that reports bad flags with exit code 1, like every other config error.
    """

    def make_context(
        self, info_name: Optional[str], args: List[str], parent: Optional[click.Context] = None, **extra: Any
    ) -> click.Context:
        try:
            return super().make_context(info_name, args, parent, **extra)
        except click.UsageError as error:
            error.exit_code = 1
            raise

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except click.UsageError as error:
            error.exit_code = 1
            raise


@contextmanager
def _exit_codes() -> Iterator[None]:
    try:
        yield
    except BrokenPhaseError as error:
        raise BrokenPhaseExit(str(error)) from error
    except (OSError, ValueError) as error:
        # json, pydantic and argument validation errors
        raise ConfigError(str(error)) from error


def _options(*options: Callable[[F], F]) -> Callable[[F], F]:
    def decorate(func: F) -> F:
        for option in reversed(options):
            func = option(func)
        return func

    return decorate


run_options = _options(
    click.option(
        "--config",
        "config_file",
        type=click.Path(exists=True, dir_okay=False, path_type=Path),
        help="JSON file with run configuration fields; flags override its values",
    ),
    click.option("--dump-config", is_flag=True, help="Print the resolved configuration as JSON and exit"),
    click.option("--deg", is_flag=True, help="Angle flags are given in degrees"),
    click.option("--preset", type=str, default=None, help="Named medium preset, e.g. fig2"),
    click.option("--eta1", type=float, default=None, help="Diagonal gain/loss strength"),
    click.option("--phi1", type=float, default=None, help="Diagonal phase"),
    click.option("--eta2", type=float, default=None, help="Off-diagonal coupling strength"),
    click.option("--phi2", type=float, default=None, help="Off-diagonal phase"),
    click.option(
        "--medium-position",
        type=click.Choice([position.value for position in MediumPosition]),
        default=None,
        help="Place the medium after or before the beam splitter",
    ),
    click.option("--bench-model", type=click.Choice(factory.BENCH_MODELS), default=None, help="Bench implementation"),
    click.option("--threads", type=int, default=None, help="Worker cap; PTBENCH_THREADS if unset"),
    click.option("--progress/--no-progress", default=None, help="Show a progress bar on stderr"),
    click.option("--output", "-o", type=str, default=None, help="Write the CSV to this file instead of stdout"),
)

settings_options = _options(
    click.option("--bs-angle", type=float, default=None, help="Beam-splitter angle, r = sin, t = cos"),
    click.option("--r", type=float, default=None, help="Reflection coefficient in [0, 1]; overrides --bs-angle"),
    click.option("--beta", "hwp_angle", type=float, default=None, help="Half-wave-plate angle"),
    click.option("--mirror-swap/--no-mirror-swap", default=None, help="Exchange the beams before detection"),
)


def _load(command: Command, options: Dict[str, Any]) -> Optional[RunConfig]:
    """
    Resolve the run configuration from the command options; None after --dump-config.
    """
    config_file: Optional[Path] = options.pop("config_file")
    dump: bool = options.pop("dump_config")
    deg: bool = options.pop("deg")
    for name in RANGE_OPTIONS:
        if options.get(name) is not None:
            start, stop, steps = options[name]
            options[name] = {"start": start, "stop": stop, "steps": steps}
    if "rayleigh_ratios" in options and not options["rayleigh_ratios"]:
        options["rayleigh_ratios"] = None
    options["command"] = command

    run = load_config(config_file, options, deg)
    if dump:
        click.echo(run.model_dump_json(indent=2))
        return None
    __logger.debug(f"Running {command.value} with {run!r}")
    return run


def _closed_form_residual(settings: ExperimentSettings, record: DetectionRecord, table: ProbabilityTable) -> Any:
    if not has_closed_form(settings):
        return "n/a"
    pa_h, _ = p_single_closed_form(settings)
    expected = w_closed_form(settings)
    residuals = [abs(table.pa_h - pa_h)] + [abs(a - b) for a, b in zip(record.as_tuple(), expected.as_tuple())]
    return max(residuals)


@click.group(cls=BenchGroup)
def cli() -> None:
    """
    Simulate the PT-symmetric optical bench.
    """
    __logger.debug("\n" + config.summary())


@cli.command("bench")
@run_options
@settings_options
def bench_command(**options: Any) -> None:
    """
    Run the bench once; print intensities, probabilities and the closed-form residual.
    """
    with _exit_codes():
        run = _load(Command.BENCH, options)
        if run is None:
            return
        settings = run.settings()
        record = factory.bench(run.bench_model).run(settings)
        table = probabilities(record)
        rows: List[Tuple[str, Any]] = [
            ("w_uh", record.w_uh),
            ("w_uv", record.w_uv),
            ("w_lh", record.w_lh),
            ("w_lv", record.w_lv),
            ("p_uh", table.p_uh),
            ("p_uv", table.p_uv),
            ("p_lh", table.p_lh),
            ("p_lv", table.p_lv),
            ("pa_h", table.pa_h),
            ("pa_v", table.pa_v),
            ("pb_u", table.pb_u),
            ("pb_l", table.pb_l),
            ("closed_form_residual", _closed_form_residual(settings, record, table)),
        ]
        emit(render_csv(("quantity", "value"), rows), run.output)


@cli.command("scan")
@run_options
@click.option("--sin-alpha", "sin_alpha_range", type=(float, float, int), default=None, help="START STOP STEPS")
@click.option("--beta-range", type=(float, float, int), default=None, help="START STOP STEPS of the HWP angle")
@click.option("--phi2-range", type=(float, float, int), default=None, help="START STOP STEPS of phi2")
@click.option("--setting-a", type=float, default=None, help="First beam-splitter angle")
@click.option("--setting-b", type=float, default=None, help="Second beam-splitter angle")
def scan_command(**options: Any) -> None:
    """
    Map the no-signaling violation over sin(alpha), the HWP angle and phi2.
    """
    with _exit_codes():
        run = _load(Command.SCAN, options)
        if run is None:
            return
        rows = signaling_scan(
            run.sin_alpha_range.values(),
            run.beta_range.values(),
            run.phi2_range.values(),
            setting_pair=(run.setting_a, run.setting_b),
            eta2=run.eta2,
            medium_position=run.medium_position,
            bench=factory.bench(run.bench_model),
            max_workers=run.threads,
            progress=run.progress,
        )
        text = render_csv(
            ("sin_alpha", "beta", "phi2", "delta"), ((row.sin_alpha, row.beta, row.phi2, row.delta) for row in rows)
        )
        emit(text, run.output)


@cli.command("chsh")
@run_options
@click.option("--grid-resolution", type=int, default=None, help="Grid points per angle before refinement")
def chsh_command(**options: Any) -> None:
    """
    Maximize the CHSH-like quantity and compare it with its closed-form bound.
    """
    with _exit_codes():
        run = _load(Command.CHSH, options)
        if run is None:
            return
        medium = run.medium()
        result = max_chsh(
            medium, run.grid_resolution, run.medium_position, factory.bench(run.bench_model), run.threads
        )
        bound = chsh_bound(medium)
        verdict = "PASS" if result.s_max <= CLASSICAL_BOUND + PASS_TOLERANCE else "FAIL"
        rows: List[Tuple[str, Any]] = [
            ("s_max", result.s_max),
            ("phi_1", result.phi_1),
            ("beta_1", result.beta_1),
            ("phi_2", result.phi_2),
            ("beta_2", result.beta_2),
            ("grid_s_max", result.grid_s_max),
            ("bound", bound),
            ("bound_residual", result.s_max - bound),
            ("classical_bound", CLASSICAL_BOUND),
            ("verdict", verdict),
        ]
        emit(render_csv(("quantity", "value"), rows), run.output)


@cli.command("paraxial")
@run_options
@settings_options
@click.option("--rayleigh-ratio", "rayleigh_ratios", type=float, multiple=True, help="k w^2/L regime, repeatable")
@click.option("--diffraction/--no-diffraction", "include_diffraction", default=None, help="Apply diffraction")
@click.option("--medium-width", type=float, default=None, help="Transverse width of the coupling region")
@click.option("--snapshot", type=str, default=None, help="Write the field after the medium of the first regime")
def paraxial_command(**options: Any) -> None:
    """
    Compare the diffraction-free matrix model with paraxial propagation across k w^2/L regimes.
    """
    with _exit_codes():
        run = _load(Command.PARAXIAL, options)
        if run is None:
            return
        settings = run.settings()

        def validate(ratio: float) -> DiscrepancyReport:
            return validate_matrix_model(
                settings.medium, ratio, settings, run.include_diffraction, run.medium_width
            )

        reports: Sequence[DiscrepancyReport] = parallel_map(validate, run.rayleigh_ratios, run.threads, run.progress)
        text = render_csv(
            ("rayleigh_ratio", "k", "include_diffraction", "max_discrepancy", "pa_h_matrix", "pa_h_paraxial"),
            (
                (
                    report.rayleigh_ratio,
                    report.k,
                    report.include_diffraction,
                    report.max_discrepancy,
                    report.matrix.pa_h,
                    report.paraxial.pa_h,
                )
                for report in reports
            ),
        )
        emit(text, run.output)

        if run.snapshot is not None:
            field = propagated_field(
                settings.medium, run.rayleigh_ratios[0], run.include_diffraction, run.medium_width
            )
            write_field_snapshot(field, run.snapshot)
            __logger.debug(f"Wrote field snapshot to {run.snapshot}")


@cli.command("preset")
@run_options
@click.option("--grid-resolution", type=int, default=None, help="Grid points per angle before refinement")
def preset_command(**options: Any) -> None:
    """
    Summarize a named medium preset: derived constants, spectrum, violation and CHSH maximum.
    """
    with _exit_codes():
        if options.get("preset") is None:
            options["preset"] = DEFAULT_PRESET
        run = _load(Command.PRESET, options)
        if run is None:
            return
        medium = run.medium()
        derived = derive(medium)
        low, high = spectrum_closed_form(medium)
        bench = factory.bench(run.bench_model)
        violation = max_violation(medium, run.grid_resolution, run.medium_position, bench, run.threads)
        chsh = max_chsh(medium, run.grid_resolution, run.medium_position, bench, run.threads)
        rows: List[Tuple[str, Any]] = [
            ("preset", run.preset),
            ("eta1", medium.eta1),
            ("phi1", medium.phi1),
            ("eta2", medium.eta2),
            ("phi2", medium.phi2),
            ("sin_alpha", derived.sin_alpha),
            ("alpha", derived.alpha),
            ("length", derived.length),
            ("global_phase", derived.global_phase),
            ("eigenvalue_low", low),
            ("eigenvalue_high", high),
            ("max_violation", violation.delta_max),
            ("max_violation_closed_form", max_violation_closed_form(medium)),
            ("s_max", chsh.s_max),
            ("chsh_bound", chsh_bound(medium)),
        ]
        emit(render_csv(("quantity", "value"), rows), run.output)
