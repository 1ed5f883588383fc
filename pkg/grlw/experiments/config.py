"""
Run Configuration

Flat experiment settings assembled from four layers, lowest precedence
first: problem defaults, a shipped preset, a key=value config file and
command-line flags.
"""

import argparse
import logging
import re
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from ..__version__ import __version__
from ..environment import default_output_dir
from ..exceptions import ConfigurationError
from ..types import Mesh, ModelParams, Problem, TimeParams

logger = logging.getLogger(__name__)

PRESET_PACKAGE = "grlw.configs"
PRESET_SUFFIX = ".cfg"

# Short names accepted in config files and on the command line
ALIASES = {
    "tend": "t_end",
    "xmin": "a",
    "xmax": "b",
    "inner_iters": "inner_iterations",
    "out": "output_path",
    "samples": "n_samples",
}

REQUIRED_FIELDS: Dict[Problem, Tuple[str, ...]] = {
    Problem.SOLITON: ("p", "c", "h", "dt", "t_end"),
    Problem.INTERACTION: ("p", "c1", "c2", "x1", "x2", "h", "dt", "t_end", "b"),
    Problem.MAXWELLIAN: (),
    Problem.STABILITY: (),
    Problem.CONVERGENCE: (),
}

PROBLEM_DEFAULTS: Dict[Problem, Dict[str, Any]] = {
    Problem.SOLITON: {"mu": 1.0, "x0": 40.0, "a": 0.0, "b": 100.0},
    Problem.INTERACTION: {"mu": 1.0, "a": 0.0},
    Problem.MAXWELLIAN: {
        "a": 0.0, "b": 100.0, "h": 0.1, "dt": 0.01, "t_end": 0.05, "x0": 40.0,
        "mu_values": (0.1, 0.05, 0.025), "p_values": (2, 3, 4),
    },
    Problem.STABILITY: {"p": 2, "c": 1.0, "mu": 1.0, "h": 0.2, "dt": 0.025},
    Problem.CONVERGENCE: {
        "p": 2, "c": 1.0, "mu": 1.0, "x0": 40.0, "a": 0.0, "b": 100.0,
        "h": 0.4, "dt": 0.001, "t_end": 1.0,
    },
}

# (flag, field) pairs taking one value each
VALUE_FLAGS = [
    ("--p", "p"), ("--c", "c"), ("--c1", "c1"), ("--c2", "c2"),
    ("--x1", "x1"), ("--x2", "x2"), ("--mu", "mu"), ("--h", "h"),
    ("--dt", "dt"), ("--tend", "t_end"), ("--x0", "x0"),
    ("--xmin", "a"), ("--xmax", "b"), ("--inner-iters", "inner_iterations"),
    ("--report-times", "report_times"), ("--snapshot-times", "snapshot_times"),
    ("--out", "output_path"), ("--samples", "n_samples"), ("--levels", "levels"),
    ("--mu-values", "mu_values"), ("--p-values", "p_values"), ("--jobs", "jobs"),
    ("--snapshot-resolution", "snapshot_resolution"),
]


def parse_number(value: Any) -> Any:
    """Accept fractions such as ``64/3`` wherever a real is expected"""
    if isinstance(value, str) and "/" in value:
        try:
            return float(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError):
            return value
    return value


def parse_list(value: Any) -> Any:
    """``"0, 2, 4"`` or ``"0 2 4"`` to a tuple"""
    if isinstance(value, str):
        items = [item for item in re.split(r"[,\s]+", value.strip()) if item]
        return tuple(parse_number(item) for item in items)
    return value


class RunConfig(BaseModel):
    """
    One experiment invocation

    Example:
        ```python
        cfg = parse_config(["soliton", "--preset", "soliton-p2"])
        cfg.mesh().N  # 500
        ```
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    problem: Problem
    p: Optional[int] = None
    mu: Optional[float] = None
    c: Optional[float] = None
    c1: Optional[float] = None
    c2: Optional[float] = None
    x1: Optional[float] = None
    x2: Optional[float] = None
    x0: Optional[float] = None
    a: Optional[float] = None
    b: Optional[float] = None
    h: Optional[float] = None
    dt: Optional[float] = None
    t_end: Optional[float] = None
    inner_iterations: int = 2
    report_times: Optional[Tuple[float, ...]] = None
    snapshot_times: Optional[Tuple[float, ...]] = None
    snapshot_resolution: int = 1
    output_path: Optional[Path] = None
    n_samples: int = 10000
    levels: int = 3
    refine_dt: bool = False
    mu_values: Optional[Tuple[float, ...]] = None
    p_values: Optional[Tuple[int, ...]] = None
    jobs: int = 1

    @field_validator("mu", "c", "c1", "c2", "x1", "x2", "x0", "a", "b", "h", "dt", "t_end", mode="before")
    @classmethod
    def _fraction(cls, value):
        return parse_number(value)

    @field_validator("report_times", "snapshot_times", "mu_values", "p_values", mode="before")
    @classmethod
    def _list(cls, value):
        return parse_list(value)

    @model_validator(mode="after")
    def _check(self) -> 'RunConfig':
        for name in REQUIRED_FIELDS[self.problem]:
            if getattr(self, name) is None:
                raise ConfigurationError(f"Missing required field '{name}' for {self.problem}", key=name)

        if self.jobs < 1:
            raise ConfigurationError("jobs must be >= 1", key="jobs")
        if self.snapshot_resolution < 1:
            raise ConfigurationError("snapshot resolution must be >= 1", key="snapshot_resolution")

        if self.problem is Problem.SOLITON:
            self.model_params()
            self.mesh()
            self.time_params()
        elif self.problem is Problem.INTERACTION:
            for key in ("c1", "c2"):
                if not getattr(self, key) > 0:
                    raise ConfigurationError(f"{key} must be positive", key=key)
            self.model_params()
            self.mesh()
            self.time_params()
        elif self.problem is Problem.MAXWELLIAN:
            for p, mu in self.maxwellian_cases():
                ModelParams.maxwellian(p, mu)
            self.mesh()
            self.time_params()
        elif self.problem is Problem.STABILITY:
            self.model_params()
            if self.n_samples < 2:
                raise ConfigurationError("Stability scan needs at least 2 samples", key="n_samples")
            if not (self.h and self.h > 0 and self.dt and self.dt > 0):
                raise ConfigurationError("Stability scan needs positive h and dt", key="h")
        elif self.problem is Problem.CONVERGENCE:
            if self.levels < 2:
                raise ConfigurationError("Convergence study needs at least 2 levels", key="levels")
            self.model_params()
            for level in range(self.levels):
                self.mesh(level)
                self.time_params(level)
        return self

    def model_params(self) -> ModelParams:
        """Physical parameters; x0 and c fall back to the faster wave for collisions"""
        if self.problem is Problem.INTERACTION:
            return ModelParams(p=self.p, mu=self.mu, c=self.c1, x0=self.x1)
        return ModelParams(
            p=self.p,
            mu=self.mu if self.mu is not None else 1.0,
            c=self.c if self.c is not None else 1.0,
            x0=self.x0 if self.x0 is not None else 40.0
        )

    def refinement(self, level: int = 0) -> Tuple[float, float]:
        """(h, dt) at a refinement level of the convergence study"""
        factor = 2 ** level
        dt = self.dt / factor if self.refine_dt else self.dt
        return self.h / factor, dt

    def mesh(self, level: int = 0) -> Mesh:
        h, _ = self.refinement(level)
        return Mesh.from_spacing(self.a, self.b, h)

    def _times(self, defaults: Sequence[float], t_end: float) -> Tuple[float, ...]:
        times = [t for t in defaults if t <= t_end + 1e-12]
        if not times or abs(times[-1] - t_end) > 1e-12:
            times.append(t_end)
        return tuple(times)

    def table_times(self) -> Tuple[float, ...]:
        """Report times, defaulting to the table rows of the problem"""
        if self.report_times is not None:
            return self.report_times
        return self._times(self.problem.table_times, self.t_end)

    def snapshot_schedule(self) -> Tuple[float, ...]:
        """Snapshot times, defaulting to the problem's plotting times"""
        if self.snapshot_times is not None:
            return self.snapshot_times
        return tuple(t for t in self.problem.snapshot_times if t <= self.t_end + 1e-12)

    def time_params(self, level: int = 0) -> TimeParams:
        _, dt = self.refinement(level)
        times = tuple(sorted(set(self.table_times()) | set(self.snapshot_schedule())))
        if self.problem is Problem.CONVERGENCE:
            times = (self.t_end,)
        return TimeParams(
            dt=dt,
            t_end=self.t_end,
            inner_iterations=self.inner_iterations,
            report_times=times
        )

    def maxwellian_cases(self) -> List[Tuple[int, float]]:
        """(p, mu) pairs of the sweep, mu-major as in the published table"""
        mus = (self.mu,) if self.mu is not None else self.mu_values
        ps = (self.p,) if self.p is not None else self.p_values
        return [(p, mu) for mu in mus for p in ps]

    def output_dir(self) -> Path:
        return self.output_path if self.output_path is not None else default_output_dir()


def normalize_key(key: str) -> str:
    key = key.strip().lower().replace("-", "_")
    return ALIASES.get(key, key)


def parse_key_values(text: str, source: str = "<config>") -> Dict[str, str]:
    """
    Parse a flat ``key = value`` file

    Blank lines and ``#`` comments are ignored; later keys win.
    """
    values: Dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigurationError(f"{source}:{number}: expected key = value, got {raw!r}", key=line)
        key, value = line.split("=", 1)
        values[normalize_key(key)] = value.strip()
    return values


def load_config_file(path: str) -> Dict[str, str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(f"Cannot read config file {path}: {e}", key="config") from e
    return parse_key_values(text, source=str(path))


def available_presets() -> List[str]:
    """Names of the shipped presets"""
    return sorted(
        entry.name[:-len(PRESET_SUFFIX)]
        for entry in resources.files(PRESET_PACKAGE).iterdir()
        if entry.name.endswith(PRESET_SUFFIX)
    )


def load_preset(name: str) -> Dict[str, str]:
    """Key/value pairs of a shipped preset"""
    resource = resources.files(PRESET_PACKAGE).joinpath(f"{name}{PRESET_SUFFIX}")
    if not resource.is_file():
        raise ConfigurationError(
            f"Unknown preset '{name}', choose from {', '.join(available_presets())}", key="preset"
        )
    return parse_key_values(resource.read_text(encoding="utf-8"), source=f"preset {name}")


class ConfigArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises ConfigurationError instead of exiting"""

    def error(self, message: str):
        match = re.search(r"(--[\w-]+)", message)
        raise ConfigurationError(message, key=match.group(1).lstrip("-") if match else None)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-level", default=argparse.SUPPRESS, help="Logging level (default WARNING)")
    common.add_argument("--log-file", default=argparse.SUPPRESS, help="Also log to this file")
    common.add_argument(
        "--no-banner", action="store_true", default=argparse.SUPPRESS, help="Don't show the banner"
    )
    return common


def build_parser() -> ConfigArgumentParser:
    """Parser for ``grlw <problem> [flags]`` and the helper commands"""
    common = _common_options()
    parser = ConfigArgumentParser(
        prog="grlw",
        description="Petrov-Galerkin B-spline solver for the generalized regularized long wave equation",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=[common],
        epilog="""
Examples:
  grlw soliton --preset soliton-p2
  grlw soliton --p 2 --c 1 --h 0.2 --dt 0.025 --mu 1 --x0 40 --xmin 0 --xmax 100 --tend 10
  grlw interaction --preset interaction-p4 --out results/p4
  grlw maxwellian --jobs 3
  grlw stability --samples 10000
"""
    )
    parser.add_argument("--version", action="version", version=f"grlw {__version__}")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    for problem in Problem:
        sub = subparsers.add_parser(
            problem.value, parents=[common], help=f"Run the {problem.value} experiment"
        )
        for flag, field in VALUE_FLAGS:
            sub.add_argument(flag, dest=field, default=argparse.SUPPRESS, metavar=field.upper())
        sub.add_argument("--refine-dt", dest="refine_dt", action="store_true", default=argparse.SUPPRESS,
                         help="Halve dt with h in the convergence study")
        sub.add_argument("--preset", default=None, help="Shipped preset name")
        sub.add_argument("--config", default=None, help="key=value config file")

    subparsers.add_parser("info", parents=[common], help="Show system information")
    subparsers.add_parser("presets", parents=[common], help="List shipped presets")
    return parser


def _move_problem_flag(argv: List[str]) -> List[str]:
    """Rewrite ``--problem X ...`` as ``X ...``"""
    argv = list(argv)
    for i, arg in enumerate(argv):
        if arg == "--problem" and i + 1 < len(argv):
            problem = argv[i + 1]
            del argv[i:i + 2]
            return [problem] + argv
        if arg.startswith("--problem="):
            del argv[i]
            return [arg.split("=", 1)[1]] + argv
    return argv


def parse_arguments(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parse argv, accepting ``--problem`` as an alternative to the subcommand"""
    argv = list(sys.argv[1:] if argv is None else argv)
    return build_parser().parse_args(_move_problem_flag(argv))


def config_from_namespace(args: argparse.Namespace) -> RunConfig:
    """Merge defaults, preset, config file and flags into a RunConfig"""
    try:
        problem = Problem(args.command)
    except ValueError:
        raise ConfigurationError(f"'{args.command}' is not a problem", key="problem")

    layers: Dict[str, Any] = {"problem": problem}
    layers.update(PROBLEM_DEFAULTS[problem])

    if getattr(args, "preset", None):
        preset = load_preset(args.preset)
        preset_problem = preset.pop("problem", problem.value)
        if preset_problem != problem.value:
            raise ConfigurationError(
                f"Preset '{args.preset}' is for {preset_problem}, not {problem}", key="preset"
            )
        layers.update(preset)

    if getattr(args, "config", None):
        file_values = load_config_file(args.config)
        file_problem = file_values.pop("problem", problem.value)
        if file_problem != problem.value:
            raise ConfigurationError(
                f"Config file is for {file_problem}, not {problem}", key="problem"
            )
        layers.update(file_values)

    for _, field in VALUE_FLAGS:
        if hasattr(args, field):
            layers[field] = getattr(args, field)
    if hasattr(args, "refine_dt"):
        layers["refine_dt"] = True

    try:
        cfg = RunConfig(**layers)
    except ValidationError as e:
        error = e.errors()[0]
        key = str(error["loc"][0]) if error.get("loc") else None
        raise ConfigurationError(f"Invalid value for '{key}': {error['msg']}", key=key) from e

    logger.debug(f"Resolved configuration: {cfg.model_dump(exclude_none=True)}")
    return cfg


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """
    Build a RunConfig from command-line arguments

    Example:
        ```python
        cfg = parse_config(["soliton", "--preset", "soliton-p2", "--tend", "4"])
        ```
    """
    args = parse_arguments(argv)
    if args.command is None:
        raise ConfigurationError("No problem given", key="problem")
    return config_from_namespace(args)
