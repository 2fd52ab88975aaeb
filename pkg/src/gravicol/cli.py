"""
Command-line interface.

Every subcommand builds a Report, renders it as JSON or CSV and writes it only
once the whole computation succeeded. Validation failures exit with status 2,
numerical failures with status 3; both print one line on standard error.
"""

import math
from typing import Any, Callable, Dict, Optional

import click
import numpy as np

from . import __version__
from .collapse.criteria import classify, critical_mass, critical_width
from .collapse.force_models import FieldModel, ForceSelection
from .collapse.frames import (
    einsteinian_phase,
    energy_difference,
    energy_pair,
    energy_velocity_relation,
    newtonian_phase,
    nonlinear_phase_at,
    to_accelerated_frame,
    uncertainty_reduction_time,
)
from .collapse.reduction import critical_spec, estimate_reduction
from .collapse.thermo import (
    ensemble_temperature,
    reduction_temperature_compton,
    schwarzschild_provenance,
    temperature_report,
)
from .collapse.trajectories import fall_closed_form, integrate_bohmian
from .config.loader import Settings, load_settings, sweep_threads
from .ensemble.averages import (
    ENCLOSED_AT_SIGMA0,
    averaged_forces,
    balance_ratio_closed_form,
    enclosed_probability,
    field_estimates,
)
from .errors import NumericalError, ValidationError
from .output.documents import Report
from .output.emit import FORMATS, emit, write_output
from .packet.potentials import (
    force_balance_radius,
    force_from_potential,
    grav_force,
    grav_potential,
    quantum_force,
    quantum_force_scale,
    quantum_potential,
    quantum_potential_from_laplacian,
)
from .particle import ParticleSpec
from .sn.evolver import (
    EvolverSpec,
    dynamical_critical_mass,
    free_width,
    initial_state,
    series_rows,
    sn_evolve,
    time_unit,
)
from .sn.variational import SELF_GRAVITY_CHECK, sn_minimize
from .sweep.engine import SWEEP_COLUMNS, SweepEngine, SweepVariable
from .units.constants import PrefactorMode, UnitKind, UnitSystem, make_units, parse_mode, planck_units
from .utils.logging import bind_run_context, clear_run_context, get_logger, setup_logging

logger = get_logger(__name__)

EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3

ORACLE_QUADRATURE = 1e-8
ORACLE_ENCLOSED = 1e-9
ORACLE_IDENTITY = 1e-12
ORACLE_FRAMES = 1e-6
ORACLE_WIDTH = 1e-6
ORACLE_FREE_SPREADING = 1e-4

Builder = Callable[[Settings, UnitSystem, PrefactorMode], Report]


def common_options(func: Callable) -> Callable:
    """Options shared by every subcommand."""
    options = [
        click.option(
            "--units",
            type=click.Choice([k.value for k in UnitKind]),
            default=UnitKind.SI.value,
            show_default=True,
            help="Unit system for inputs and outputs.",
        ),
        click.option(
            "--mode",
            type=click.Choice([m.value for m in PrefactorMode]),
            default=PrefactorMode.PAPER.value,
            show_default=True,
            help="paper: order-of-magnitude prefactors; exact: all O(1) constants kept.",
        ),
        click.option(
            "--format",
            "--emit",
            "fmt",
            type=click.Choice(list(FORMATS)),
            default="json",
            show_default=True,
            help="Output document format.",
        ),
        click.option(
            "--output",
            "-o",
            default="-",
            show_default=True,
            help="Output path; '-' writes to standard output.",
        ),
        click.option(
            "--log-level",
            type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
            default="WARNING",
            show_default=True,
        ),
        click.option(
            "--band",
            type=float,
            default=None,
            help="Half-width of the transition band in m/m_c (default from settings).",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _run(options: Dict[str, Any], build: Builder) -> None:
    """Build, render and write one report, mapping errors to exit codes."""
    setup_logging(options["log_level"])
    ctx = click.get_current_context()
    bind_run_context(command=ctx.info_name, units=options["units"], mode=options["mode"])
    try:
        settings = load_settings()
        units = make_units(options["units"])
        mode = parse_mode(options["mode"])
        report = build(settings, units, mode)
        text = emit(report, options["fmt"], units, mode, settings.to_dict())
    except ValidationError as e:
        click.echo(f"error: {e}", err=True)
        ctx.exit(EXIT_VALIDATION)
    except NumericalError as e:
        click.echo(f"numerical failure: {e}", err=True)
        ctx.exit(EXIT_NUMERICAL)
    else:
        try:
            write_output(text, options["output"])
        except OSError as e:
            click.echo(f"error: cannot write output: {e}", err=True)
            ctx.exit(EXIT_VALIDATION)
    finally:
        clear_run_context()


def _band(options: Dict[str, Any], settings: Settings) -> float:
    band = options["band"]
    if band is None:
        return settings.transition_band
    if not 0 <= band < 1:
        raise ValidationError(f"band must be in [0, 1), got {band!r}")
    return band


def command(name: str, **kwargs: Any) -> Callable:
    """Register a subcommand that takes the common options."""

    def decorator(func: Callable) -> Callable:
        return cli.command(name, **kwargs)(common_options(func))

    return decorator


@click.group()
@click.version_option(__version__, prog_name="gravicol")
def cli() -> None:
    """Gravitationally induced wave-function collapse in Bohmian mechanics."""


@command("regime")
@click.option("--mass", type=float, required=True, help="Particle mass.")
@click.option("--sigma0", type=float, required=True, help="Initial packet width.")
def regime(mass: float, sigma0: float, **options: Any) -> None:
    """Classify a particle as quantum- or gravity-dominant."""

    def build(settings: Settings, units: UnitSystem, mode: PrefactorMode) -> Report:
        spec = ParticleSpec(mass=mass, sigma0=sigma0)
        band = _band(options, settings)
        classification = classify(spec, units, mode, band)
        report = Report(
            command="regime",
            inputs={"mass": mass, "sigma0": sigma0, "band": band},
            results={
                **classification.to_dict(),
                "m_c_paper": critical_mass(sigma0, units, PrefactorMode.PAPER),
                "m_c_exact": critical_mass(sigma0, units, PrefactorMode.EXACT),
            },
        )
        if mode is PrefactorMode.EXACT:
            # a_q/a_g = (m_c/m)³ at the exact-mode critical mass
            forces = averaged_forces(spec, units, settings.quadrature)
            report.ledger.record(
                "mass_ratio_from_force_balance",
                forces.ratio ** (-1.0 / 3.0),
                classification.ratio,
                ORACLE_QUADRATURE,
            )
        return report

    _run(options, build)


@command("forces")
@click.option("--mass", type=float, required=True)
@click.option("--sigma0", type=float, required=True)
@click.option("--r", "radius", type=float, default=None, help="Radius for local field values.")
def forces(mass: float, sigma0: float, radius: Optional[float], **options: Any) -> None:
    """Averaged and local quantum and self-gravitational forces."""

    def build(settings: Settings, units: UnitSystem, mode: PrefactorMode) -> Report:
        spec = ParticleSpec(mass=mass, sigma0=sigma0)
        averages = averaged_forces(spec, units, settings.quadrature)
        enclosed = enclosed_probability(spec, sigma0, settings.quadrature)
        results: Dict[str, Any] = {
            "averaged": averages.to_dict(),
            "balance_ratio_closed_form": balance_ratio_closed_form(spec, units),
            "field_estimates": field_estimates(spec, units).to_dict(),
            "force_balance_radius": force_balance_radius(spec, units),
            "enclosed_probability_sigma0": enclosed,
        }
        report = Report(
            command="forces",
            inputs={"mass": mass, "sigma0": sigma0, "r": radius},
            results=results,
        )
        report.ledger.record(
            "mean_quantum_accel", averages.mean_quantum_accel, averages.closed_form_quantum,
            ORACLE_QUADRATURE,
        )
        report.ledger.record(
            "mean_grav_accel", averages.mean_grav_accel, averages.closed_form_grav,
            ORACLE_QUADRATURE,
        )
        report.ledger.record("enclosed_probability_sigma0", enclosed, ENCLOSED_AT_SIGMA0, ORACLE_ENCLOSED)

        if radius is not None:
            q = quantum_potential(spec, radius, units)
            f_q = quantum_force(spec, radius, units)
            results["local"] = {
                "r": radius,
                "Q": q,
                "U": grav_potential(spec, radius, units),
                "quantum_force": f_q,
                "grav_force": grav_force(spec, radius, units),
            }
            # finite-difference Laplacian loses digits near the origin and Q's root at √6σ₀
            resolved = 0.05 * sigma0 <= radius <= 2.0 * sigma0
            report.ledger.record(
                "quantum_potential_laplacian",
                quantum_potential_from_laplacian(spec, radius, units),
                q,
                ORACLE_QUADRATURE if resolved else None,
            )
            if radius >= 1e-3 * sigma0:
                report.ledger.record(
                    "quantum_force_gradient",
                    force_from_potential(quantum_potential, spec, radius, units)
                    / quantum_force_scale(spec, units),
                    f_q / quantum_force_scale(spec, units),
                )
        return report

    _run(options, build)


@command("collapse-time")
@click.option("--mass", type=float, required=True)
@click.option("--sigma0", type=float, default=None, help="Packet width; omit with --at-critical.")
@click.option("--at-critical", is_flag=True, help="Place the packet at its critical width.")
def collapse_time(mass: float, sigma0: Optional[float], at_critical: bool, **options: Any) -> None:
    """Fall time, objective reduction time and uncertainty-route time."""

    def build(settings: Settings, units: UnitSystem, mode: PrefactorMode) -> Report:
        if at_critical:
            if sigma0 is not None:
                raise ValidationError("--sigma0 and --at-critical are mutually exclusive")
            spec = critical_spec(mass, units)
        elif sigma0 is None:
            raise ValidationError("either --sigma0 or --at-critical is required")
        else:
            spec = ParticleSpec(mass=mass, sigma0=sigma0)

        estimate = estimate_reduction(spec, units, mode, _band(options, settings))
        report = Report(
            command="collapse-time",
            inputs={"mass": mass, "sigma0": spec.sigma0, "at_critical": at_critical},
            results={
                "tau": estimate.fall_time,
                **estimate.to_dict(),
                "planck": planck_units(units).to_dict(),
            },
        )
        if at_critical:
            report.ledger.record(
                "uncertainty_route_time", estimate.uncertainty_time, estimate.objective_time,
                ORACLE_IDENTITY,
            )
            if mode is PrefactorMode.PAPER:
                report.ledger.record(
                    "fall_route_time", estimate.fall_time, estimate.objective_time, ORACLE_IDENTITY
                )
        return report

    _run(options, build)


@command("temperature")
@click.option("--mass", type=float, required=True)
@click.option("--g", "field", type=float, default=9.8, show_default=True, help="Field magnitude |g|.")
@click.option("--sigma0", type=float, default=None, help="Width for the ensemble temperature.")
def temperature(mass: float, field: float, sigma0: Optional[float], **options: Any) -> None:
    """Reduction temperature with Unruh and Hawking-order comparisons."""

    def build(settings: Settings, units: UnitSystem, mode: PrefactorMode) -> Report:
        report_data = temperature_report(mass, field, units, mode)
        results: Dict[str, Any] = {
            **report_data.to_dict(),
            "schwarzschild": schwarzschild_provenance(mass, units),
        }
        if sigma0 is not None:
            results["T_ensemble"] = ensemble_temperature(
                mass, field, sigma0, units, mode, settings.quadrature
            )
        report = Report(
            command="temperature",
            inputs={"mass": mass, "g": field, "sigma0": sigma0},
            results=results,
        )
        report.ledger.record(
            "compton_chain",
            reduction_temperature_compton(mass, field, units, PrefactorMode.EXACT),
            2.0 * units.hbar * field / units.kB,
            ORACLE_IDENTITY,
        )
        return report

    _run(options, build)


@command("trajectory")
@click.option("--mass", type=float, required=True)
@click.option("--sigma0", type=float, required=True)
@click.option("--r0", type=float, default=1.0, show_default=True, help="Start radius in units of sigma0.")
@click.option(
    "--forces",
    "selection",
    type=click.Choice([s.value for s in ForceSelection]),
    default=ForceSelection.GRAV_ONLY.value,
    show_default=True,
)
@click.option(
    "--field",
    "field_model",
    type=click.Choice([f.value for f in FieldModel]),
    default=FieldModel.MEAN.value,
    show_default=True,
)
@click.option("--t-end", type=float, default=None, help="Horizon; defaults to the fall time.")
@click.option("--samples", type=int, default=201, show_default=True)
def trajectory(
    mass: float,
    sigma0: float,
    r0: float,
    selection: str,
    field_model: str,
    t_end: Optional[float],
    samples: int,
    **options: Any,
) -> None:
    """Radial Bohmian trajectory from rest."""

    def build(settings: Settings, units: UnitSystem, mode: PrefactorMode) -> Report:
        spec = ParticleSpec(mass=mass, sigma0=sigma0)
        if samples < 2:
            raise ValidationError(f"samples must be >= 2, got {samples}")
        start = r0 * sigma0
        horizon = t_end
        if horizon is None:
            # past the free-fall crossing so the center event fires inside the window
            horizon = 1.25 * fall_closed_form(spec, start, 0.0, units, mode).crossing_time
        path = integrate_bohmian(
            spec,
            start,
            ForceSelection(selection),
            units,
            settings.integrator,
            field_model=FieldModel(field_model),
            mode=mode,
            t_end=horizon,
            t_eval=np.linspace(0.0, horizon, samples),
            qspec=settings.quadrature,
        )
        rows = [state.to_dict() for state in path.states]
        report = Report(
            command="trajectory",
            inputs={
                "mass": mass,
                "sigma0": sigma0,
                "r0": start,
                "forces": selection,
                "field": field_model,
                "t_end": horizon,
            },
            results={
                "model": path.model,
                "crossing_time": path.crossing_time,
                "final": path.final.to_dict(),
                "states": rows,
            },
            columns=["t", "r", "v"],
            rows=rows,
        )
        if ForceSelection(selection) is ForceSelection.GRAV_ONLY and FieldModel(field_model) is FieldModel.MEAN:
            closed = fall_closed_form(spec, start, horizon, units, mode)
            if path.crossing_time is not None:
                report.ledger.record(
                    "crossing_time", path.crossing_time, closed.crossing_time, ORACLE_FRAMES
                )
            else:
                report.ledger.record("final_radius", path.final.r, closed.radius, ORACLE_FRAMES)
        return report

    _run(options, build)


@command("frames")
@click.option("--mass", type=float, required=True)
@click.option("--g", "field", type=float, required=True, help="Field along z (signed).")
@click.option("--t", "time", type=float, required=True, help="Time since release.")
@click.option("--x", "position", type=float, default=0.0, show_default=True, help="Position along z.")
@click.option("--phase", "phase_value", type=float, default=0.0, show_default=True, help="Einsteinian phase S.")
@click.option("--energy", type=float, default=0.0, show_default=True, help="Einsteinian energy E = -dS/dt.")
@click.option("--sigma0", type=float, default=None, help="Width for the energy-velocity relation.")
def frames(
    mass: float,
    field: float,
    time: float,
    position: float,
    phase_value: float,
    energy: float,
    sigma0: Optional[float],
    **options: Any,
) -> None:
    """Coordinates, phases and energies seen by the falling and static observers."""

    def build(settings: Settings, units: UnitSystem, mode: PrefactorMode) -> Report:
        x_prime, t_prime = to_accelerated_frame(position, time, field)
        decomposition = newtonian_phase(phase_value, x_prime, t_prime, mass, field)
        pair = energy_pair(-energy, mass, field, time)
        results: Dict[str, Any] = {
            "x_prime": [float(c) for c in x_prime],
            "t_prime": t_prime,
            "phase": decomposition.to_dict(),
            "energy": pair.to_dict(),
            "energy_difference": energy_difference(mass, field, time),
        }
        report = Report(
            command="frames",
            inputs={
                "mass": mass,
                "g": field,
                "t": time,
                "x": position,
                "phase": phase_value,
                "energy": energy,
                "sigma0": sigma0,
            },
            results=results,
        )
        report.ledger.record(
            "phase_round_trip",
            einsteinian_phase(decomposition.newtonian_phase, x_prime, t_prime, mass, field),
            phase_value,
            ORACLE_IDENTITY,
        )
        if pair.E_prime_numeric is not None and pair.E_prime != 0.0:
            report.ledger.record("newtonian_energy", pair.E_prime_numeric, pair.E_prime, ORACLE_FRAMES)

        if field != 0.0:
            tau = uncertainty_reduction_time(mass, abs(field), units)
            results["uncertainty_time"] = tau
            results["nonlinear_phase_at_tau"] = nonlinear_phase_at(mass, abs(field), tau, units)
            report.ledger.record(
                "nonlinear_phase_at_tau", results["nonlinear_phase_at_tau"], 1.0, ORACLE_IDENTITY
            )
            if sigma0 is not None:
                relation = energy_velocity_relation(mass, abs(field), sigma0)
                results["energy_velocity"] = relation.to_dict()
                report.ledger.record(
                    "energy_velocity",
                    abs(relation.energy_difference),
                    relation.kinetic_form,
                    ORACLE_IDENTITY,
                )
        return report

    _run(options, build)


@command("sn-min")
@click.option("--mass", type=float, required=True)
def sn_min(mass: float, **options: Any) -> None:
    """Gaussian variational minimum of the Schrödinger–Newton energy."""

    def build(settings: Settings, units: UnitSystem, mode: PrefactorMode) -> Report:
        minimum = sn_minimize(mass, units, settings.quadrature)
        report = Report(
            command="sn-min",
            inputs={"mass": mass},
            results={
                **minimum.to_dict(),
                "critical_width_paper": critical_width(mass, units, PrefactorMode.PAPER),
            },
        )
        report.ledger.record(
            "dimensionless_width", minimum.dimensionless_width, 1.5 * math.sqrt(math.pi), ORACLE_WIDTH
        )
        report.ledger.record(
            "self_gravity",
            minimum.energy.self_grav,
            minimum.energy.self_grav_closed_form,
            SELF_GRAVITY_CHECK,
        )
        return report

    _run(options, build)


@command("sn-evolve")
@click.option("--mass", type=float, required=True)
@click.option("--sigma0", type=float, required=True)
@click.option("--duration", type=float, default=0.5, show_default=True, help="Horizon in units of m*sigma0^2/hbar.")
@click.option("--steps", type=int, default=500, show_default=True)
@click.option("--points", type=int, default=None, help="Interior grid points (default from settings).")
@click.option("--domain", type=float, default=None, help="Outer wall in units of sigma0 (default from settings).")
@click.option("--sample-every", type=int, default=1, show_default=True)
@click.option("--no-gravity", is_flag=True, help="Switch the self-gravity term off.")
@click.option("--crossover", is_flag=True, help="Also root-find the dynamical crossover mass.")
def sn_evolve_command(
    mass: float,
    sigma0: float,
    duration: float,
    steps: int,
    points: Optional[int],
    domain: Optional[float],
    sample_every: int,
    no_gravity: bool,
    crossover: bool,
    **options: Any,
) -> None:
    """Radial Schrödinger–Newton evolution of an initial Gaussian."""

    def build(settings: Settings, units: UnitSystem, mode: PrefactorMode) -> Report:
        spec = ParticleSpec(mass=mass, sigma0=sigma0)
        if not duration > 0:
            raise ValidationError(f"duration must be positive, got {duration!r}")
        if steps < 1:
            raise ValidationError(f"steps must be >= 1, got {steps}")
        base = settings.evolver
        espec = EvolverSpec(
            points=points if points is not None else base.points,
            domain=domain if domain is not None else base.domain,
            norm_tol=base.norm_tol,
        )
        dt = duration * time_unit(spec, units) / steps
        run = sn_evolve(
            initial_state(spec, espec), spec, dt, steps, units, espec,
            gravity=not no_gravity, sample_every=sample_every,
        )
        first, last = run.series[0], run.series[-1]
        results: Dict[str, Any] = {
            "coupling": run.coupling,
            "time_unit": run.time_unit,
            "gravity": not no_gravity,
            "initial_width": first.w,
            "final_width": last.w,
            "width_change": last.w - first.w,
            "final_energy": {"E_kin": last.E_kin, "E_grav": last.E_grav, "E_total": last.E_total},
            "settings": run.settings,
        }
        rows = series_rows(run)
        report = Report(
            command="sn-evolve",
            inputs={
                "mass": mass,
                "sigma0": sigma0,
                "duration": duration,
                "steps": steps,
                "gravity": not no_gravity,
            },
            results={**results, "series": rows},
            columns=["t", "w", "norm", "E_kin", "E_grav"],
            rows=rows,
        )
        report.ledger.record("norm", last.norm, first.norm, espec.norm_tol * steps)
        if no_gravity:
            report.ledger.record(
                "free_spreading_width", last.w, free_width(spec, last.t, units), ORACLE_FREE_SPREADING
            )
        if crossover:
            report.results["crossover"] = dynamical_critical_mass(sigma0, units, espec).to_dict()
        return report

    _run(options, build)


@command("sweep")
@click.option(
    "--vary",
    type=click.Choice([v.value for v in SweepVariable]),
    required=True,
    help="Input varied across the sweep.",
)
@click.option("--from", "start", type=float, required=True)
@click.option("--to", "stop", type=float, required=True)
@click.option("--count", type=int, required=True)
@click.option("--log/--linear", "log_spacing", default=True, show_default=True)
@click.option("--mass", type=float, default=None, help="Fixed mass when varying sigma0.")
@click.option("--sigma0", type=float, default=None, help="Fixed width when varying mass.")
def sweep(
    vary: str,
    start: float,
    stop: float,
    count: int,
    log_spacing: bool,
    mass: Optional[float],
    sigma0: Optional[float],
    **options: Any,
) -> None:
    """Reduction estimates over a grid of masses or widths."""

    def build(settings: Settings, units: UnitSystem, mode: PrefactorMode) -> Report:
        fixed = settings.sweep.fixed.get(units.kind.value, {})
        fixed_mass = mass if mass is not None else fixed.get("mass", 1.0)
        fixed_sigma0 = sigma0 if sigma0 is not None else fixed.get("sigma0", 1.0)
        engine = SweepEngine(
            units,
            fixed_mass,
            fixed_sigma0,
            mode,
            _band(options, settings),
            sweep_threads(settings),
        )
        rows = engine.run(SweepVariable(vary), start, stop, count, log_spacing)
        return Report(
            command="sweep",
            inputs={
                "vary": vary,
                "from": start,
                "to": stop,
                "count": count,
                "spacing": "log" if log_spacing else "linear",
                "fixed_mass": engine.fixed_mass,
                "fixed_sigma0": engine.fixed_sigma0,
            },
            results={"rows": rows},
            columns=SWEEP_COLUMNS,
            rows=rows,
        )

    _run(options, build)


def main() -> None:
    """Console-script entry point."""
    cli(prog_name="gravicol")


if __name__ == "__main__":
    main()
