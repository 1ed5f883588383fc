"""
Experiment Runner

Runs one configured experiment end to end and writes its CSV artifacts.
Solver failures do not escape: the rows collected before the failure are
written with a trailing ``# solver failure`` comment and the result is
marked failed.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ..analysis.analytic_solutions import (
    error_profile,
    maxwellian_initial,
    reference_invariants,
    soliton_solution,
    two_soliton_initial,
)
from ..analysis.vonneumann import growth_table
from ..core.assembly import fit_initial_coefficients
from ..core.element_forms import beta, frozen_lambda
from ..core.time_integrator import CrankNicolsonIntegrator
from ..exceptions import SolverError
from ..types import ModelParams, Problem, RunDiagnostics, SolverState, TimeParams
from .config import RunConfig
from .output import emit_snapshot, time_label, write_profile, write_table

logger = logging.getLogger(__name__)

TIME_MATCH = 1e-9

SOLITON_COLUMNS = ("t", "I1", "I2", "I3", "L2_e3", "Linf_e3", "amplitude", "peak_x")
INTERACTION_COLUMNS = ("t", "I1", "I2", "I3", "wave1_x", "wave1_u", "wave2_x", "wave2_u")
MAXWELLIAN_COLUMNS = ("mu", "p", "t", "I1", "I2", "I3", "I1_change_pct", "I2_change_pct", "I3_change_pct")
STABILITY_COLUMNS = ("theta", "re_g", "im_g", "abs_g")
CONVERGENCE_COLUMNS = ("h", "dt", "L2", "Linf", "order")


@dataclass
class ExperimentResult:
    """Files and headline numbers of one experiment"""

    problem: Problem
    """Experiment that ran"""

    files: List[Path] = field(default_factory=list)
    """Artifacts written, in order"""

    rows: List[Dict[str, Any]] = field(default_factory=list)
    """Rows of the main table"""

    summary: Dict[str, Any] = field(default_factory=dict)
    """Headline values for the console report"""

    error: Optional[str] = None
    """Solver failure message, if the run aborted"""

    @property
    def failed(self) -> bool:
        return self.error is not None


def _contains(times: Sequence[float], t: float) -> bool:
    return any(math.isclose(t, s, rel_tol=0.0, abs_tol=TIME_MATCH) for s in times)


def _failure_comments(error: Optional[str]) -> Tuple[str, ...]:
    return (f"solver failure: {error}",) if error else ()


def _integrate(
    cfg: RunConfig,
    params: ModelParams,
    tp: TimeParams,
    initial_profile: Callable,
    level: int = 0,
    exact=None,
    observer=None
) -> Tuple[List[RunDiagnostics], Optional[str]]:
    """Fit, run and return (rows, failure message)"""
    mesh = cfg.mesh(level)
    delta0 = fit_initial_coefficients(initial_profile, mesh)
    integrator = CrankNicolsonIntegrator(params, mesh, tp)
    try:
        return integrator.run(delta0, observer=observer, exact=exact), None
    except SolverError as e:
        return list(e.diagnostics), str(e)


def _snapshot_observer(cfg: RunConfig, prefix: str, result: ExperimentResult, last: Dict[str, SolverState]):
    mesh = cfg.mesh()
    snapshots = cfg.snapshot_schedule()
    out_dir = cfg.output_dir()

    def observe(state: SolverState, row: RunDiagnostics):
        last["state"] = state
        if _contains(snapshots, row.t):
            path = out_dir / f"{prefix}_t{time_label(row.t)}.csv"
            result.files.append(emit_snapshot(state, mesh, path, cfg.snapshot_resolution))

    return observe


def run_soliton(cfg: RunConfig) -> ExperimentResult:
    """Single solitary wave: invariants, errors, snapshots and the final error profile"""
    result = ExperimentResult(Problem.SOLITON)
    params, mesh, tp = cfg.model_params(), cfg.mesh(), cfg.time_params()
    exact = soliton_solution(params)
    prefix = f"soliton_p{params.p}"
    last: Dict[str, SolverState] = {}

    diagnostics, error = _integrate(
        cfg, params, tp, lambda x: exact(x, 0.0), exact=exact,
        observer=_snapshot_observer(cfg, prefix, result, last)
    )

    table_times = cfg.table_times()
    for row in diagnostics:
        if _contains(table_times, row.t):
            values = row.to_dict()
            if row.has_errors:
                values["L2_e3"] = row.L2 * 1e3
                values["Linf_e3"] = row.Linf * 1e3
            result.rows.append(values)

    out_dir = cfg.output_dir()
    result.files.append(write_table(
        out_dir / f"{prefix}_table.csv", SOLITON_COLUMNS, result.rows, _failure_comments(error)
    ))

    reference = reference_invariants(params, mesh.a, mesh.b)
    result.files.append(write_table(
        out_dir / f"{prefix}_reference.csv", ("t", "I1", "I2", "I3"),
        [{"t": 0.0, "I1": reference[0], "I2": reference[1], "I3": reference[2]}]
    ))
    result.summary["reference_invariants"] = reference

    if error is None and "state" in last:
        xs, errors = error_profile(last["state"].delta, mesh, lambda x: exact(x, last["state"].t))
        result.files.append(write_profile(out_dir / f"{prefix}_error.csv", xs, errors))

    if result.rows:
        first, final = result.rows[0], result.rows[-1]
        result.summary.update({
            "final": final,
            "amplitude_change": abs(final["amplitude"] - first["amplitude"]),
        })
    result.error = error
    return result


def run_interaction(cfg: RunConfig) -> ExperimentResult:
    """Two solitary waves: invariants across the collision and snapshots"""
    result = ExperimentResult(Problem.INTERACTION)
    params, tp = cfg.model_params(), cfg.time_params()
    prefix = f"interaction_p{params.p}"
    last: Dict[str, SolverState] = {}

    def initial(x):
        return two_soliton_initial(x, cfg.c1, cfg.c2, cfg.x1, cfg.x2, cfg.p, cfg.mu)

    diagnostics, error = _integrate(
        cfg, params, tp, initial, observer=_snapshot_observer(cfg, prefix, result, last)
    )

    table_times = cfg.table_times()
    for row in diagnostics:
        if not _contains(table_times, row.t):
            continue
        values = row.to_dict()
        for rank, (x, u) in enumerate(row.peaks[:2], start=1):
            values[f"wave{rank}_x"] = x
            values[f"wave{rank}_u"] = u
        result.rows.append(values)

    result.files.append(write_table(
        cfg.output_dir() / f"{prefix}_table.csv", INTERACTION_COLUMNS, result.rows,
        _failure_comments(error)
    ))

    if result.rows:
        result.summary["final"] = result.rows[-1]
        result.summary["I1_spread"] = max(r["I1"] for r in result.rows) - min(r["I1"] for r in result.rows)
    result.error = error
    return result


def maxwellian_case(cfg: RunConfig, p: int, mu: float) -> Tuple[List[Dict[str, Any]], Optional[str]]:
    """Rows of one (mu, p) run of the Maxwellian sweep"""
    params = ModelParams.maxwellian(p, mu)
    diagnostics, error = _integrate(
        cfg, params, cfg.time_params(), lambda x: maxwellian_initial(x, cfg.x0)
    )
    rows = []
    for row in diagnostics:
        values = {"mu": mu, "p": p, "t": row.t, "I1": row.I1, "I2": row.I2, "I3": row.I3}
        for name in ("I1", "I2", "I3"):
            start = getattr(diagnostics[0], name)
            values[f"{name}_change_pct"] = 100.0 * (values[name] - start) / abs(start) if start else 0.0
        rows.append(values)
    return rows, error


def _maxwellian_job(args):
    return maxwellian_case(*args)


def run_maxwellian(cfg: RunConfig) -> ExperimentResult:
    """Every (mu, p) pair of the sweep, optionally in parallel processes"""
    result = ExperimentResult(Problem.MAXWELLIAN)
    jobs = [(cfg, p, mu) for p, mu in cfg.maxwellian_cases()]

    if cfg.jobs > 1 and len(jobs) > 1:
        logger.info(f"Running {len(jobs)} Maxwellian cases on {cfg.jobs} workers")
        with ProcessPoolExecutor(max_workers=cfg.jobs) as executor:
            outcomes = list(executor.map(_maxwellian_job, jobs))
    else:
        outcomes = [_maxwellian_job(job) for job in jobs]

    errors = []
    for (_, p, mu), (rows, error) in zip(jobs, outcomes):
        result.rows.extend(rows)
        if error:
            errors.append(f"p={p} mu={mu:g}: {error}")

    result.files.append(write_table(
        cfg.output_dir() / "maxwellian_table.csv", MAXWELLIAN_COLUMNS, result.rows,
        tuple(f"solver failure: {e}" for e in errors)
    ))
    result.summary["max_I1_change_pct"] = max((abs(r["I1_change_pct"]) for r in result.rows), default=0.0)
    result.error = "; ".join(errors) or None
    return result


def run_stability(cfg: RunConfig) -> ExperimentResult:
    """Growth factor of every sampled mode at the configured parameters"""
    result = ExperimentResult(Problem.STABILITY)
    params = cfg.model_params()
    beta_value = beta(params.mu, cfg.h)
    lambda_bar = frozen_lambda(params.amplitude, params, cfg.h)

    table = growth_table(beta_value, lambda_bar, cfg.dt, cfg.n_samples)
    result.rows = [
        {"theta": theta, "re_g": g.real, "im_g": g.imag, "abs_g": abs(g)}
        for theta, g in table
    ]
    result.files.append(write_table(cfg.output_dir() / "stability.csv", STABILITY_COLUMNS, result.rows))
    result.summary.update({
        "beta": beta_value,
        "lambda": lambda_bar,
        "max_deviation": max((abs(r["abs_g"] - 1.0) for r in result.rows), default=0.0),
    })
    return result


def run_convergence(cfg: RunConfig) -> ExperimentResult:
    """Soliton error at t_end on successively halved meshes"""
    result = ExperimentResult(Problem.CONVERGENCE)
    params = cfg.model_params()
    exact = soliton_solution(params)
    error = None

    for level in range(cfg.levels):
        h, dt = cfg.refinement(level)
        diagnostics, error = _integrate(
            cfg, params, cfg.time_params(level), lambda x: exact(x, 0.0), level=level, exact=exact
        )
        if error is not None or not diagnostics:
            break
        final = diagnostics[-1]
        order = None
        if result.rows:
            previous = result.rows[-1]
            order = math.log(previous["L2"] / final.L2) / math.log(previous["h"] / h)
        result.rows.append({"h": h, "dt": dt, "L2": final.L2, "Linf": final.Linf, "order": order})
        logger.info(f"h={h:g} dt={dt:g}: L2={final.L2:.6e}")

    result.files.append(write_table(
        cfg.output_dir() / "convergence.csv", CONVERGENCE_COLUMNS, result.rows,
        _failure_comments(error)
    ))
    errors = [r["L2"] for r in result.rows]
    result.summary.update({
        "orders": [r["order"] for r in result.rows[1:]],
        "monotone": all(b < a for a, b in zip(errors, errors[1:])),
    })
    result.error = error
    return result


RUNNERS: Dict[Problem, Callable[[RunConfig], ExperimentResult]] = {
    Problem.SOLITON: run_soliton,
    Problem.INTERACTION: run_interaction,
    Problem.MAXWELLIAN: run_maxwellian,
    Problem.STABILITY: run_stability,
    Problem.CONVERGENCE: run_convergence,
}


def run_experiment(cfg: RunConfig) -> ExperimentResult:
    """
    Run ``cfg`` and write its CSV artifacts into ``cfg.output_dir()``

    Example:
        ```python
        result = run_experiment(parse_config(["soliton", "--preset", "soliton-p2"]))
        result.summary["final"]["L2_e3"]
        ```
    """
    logger.info(f"Starting {cfg.problem} experiment")
    result = RUNNERS[cfg.problem](cfg)
    if result.failed:
        logger.error(f"{cfg.problem} experiment stopped early: {result.error}")
    else:
        logger.info(f"{cfg.problem} experiment finished, {len(result.files)} files written")
    return result
