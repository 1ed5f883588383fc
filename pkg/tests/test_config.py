"""
Test Run Configuration
"""

import pytest

from grlw.exceptions import ConfigurationError
from grlw.experiments.config import (
    RunConfig,
    available_presets,
    load_preset,
    normalize_key,
    parse_arguments,
    parse_config,
    parse_key_values,
    parse_list,
    parse_number,
)
from grlw.types import Problem

TABLE_ONE_FLAGS = [
    "soliton", "--p", "2", "--c", "1", "--h", "0.2", "--dt", "0.025", "--mu", "1",
    "--x0", "40", "--xmin", "0", "--xmax", "100", "--tend", "10",
]


class TestParsing:
    """Test value and key parsing helpers"""

    def test_fractions(self):
        """Test fraction strings become floats"""
        assert parse_number("64/3") == pytest.approx(64.0 / 3.0)
        assert parse_number("0.5") == "0.5"
        assert parse_number(2.0) == 2.0

    def test_lists(self):
        """Test comma and space separated lists"""
        assert parse_list("0, 2, 4") == ("0", "2", "4")
        assert parse_list("0 2  4") == ("0", "2", "4")
        assert parse_list((1, 2)) == (1, 2)

    def test_normalize_key(self):
        """Test aliases and dashes"""
        assert normalize_key("tend") == "t_end"
        assert normalize_key(" Inner-Iters ") == "inner_iterations"
        assert normalize_key("xmax") == "b"
        assert normalize_key("snapshot-times") == "snapshot_times"

    def test_key_values(self):
        """Test comments, blank lines and later keys winning"""
        values = parse_key_values("# header\n\np = 2\nh = 0.2  # spacing\np = 3\n")
        assert values == {"p": "3", "h": "0.2"}

    def test_key_values_malformed(self):
        """Test a line without '='"""
        with pytest.raises(ConfigurationError):
            parse_key_values("p 2\n")


class TestRunConfig:
    """Test command-line configuration"""

    def test_table_one_flags(self):
        """Test the single-soliton command line"""
        cfg = parse_config(TABLE_ONE_FLAGS)
        assert cfg.problem is Problem.SOLITON
        assert cfg.p == 2
        assert cfg.mesh().N == 500
        tp = cfg.time_params()
        assert tp.n_steps == 400
        assert tp.inner_iterations == 2
        assert tp.report_times == (0.0, 2.0, 4.0, 5.0, 6.0, 8.0, 10.0)
        params = cfg.model_params()
        assert (params.mu, params.c, params.x0) == (1.0, 1.0, 40.0)

    def test_problem_flag(self):
        """Test --problem as an alternative to the subcommand"""
        argv = ["--problem", "soliton"] + TABLE_ONE_FLAGS[1:]
        assert parse_config(argv) == parse_config(TABLE_ONE_FLAGS)
        assert parse_config(["--problem=stability"]).problem is Problem.STABILITY

    def test_missing_field(self):
        """Test a missing time step names the key"""
        argv = list(TABLE_ONE_FLAGS)
        index = argv.index("--dt")
        del argv[index:index + 2]
        with pytest.raises(ConfigurationError) as exc_info:
            parse_config(argv)
        assert exc_info.value.key == "dt"

    def test_off_grid_final_time(self):
        """Test t_end that is not a multiple of dt"""
        argv = list(TABLE_ONE_FLAGS)
        argv[argv.index("--dt") + 1] = "0.3"
        with pytest.raises(ConfigurationError) as exc_info:
            parse_config(argv)
        assert exc_info.value.key == "dt"

    def test_off_grid_mesh(self):
        """Test (b - a) / h that is not an integer"""
        argv = list(TABLE_ONE_FLAGS)
        argv[argv.index("--h") + 1] = "0.3"
        with pytest.raises(ConfigurationError) as exc_info:
            parse_config(argv)
        assert exc_info.value.key == "h"

    def test_unknown_flag(self):
        """Test an unrecognized option"""
        with pytest.raises(ConfigurationError) as exc_info:
            parse_config(TABLE_ONE_FLAGS + ["--bogus", "1"])
        assert exc_info.value.key == "bogus"

    def test_bad_value(self):
        """Test a value pydantic cannot parse"""
        argv = list(TABLE_ONE_FLAGS)
        argv[argv.index("--p") + 1] = "two"
        with pytest.raises(ConfigurationError) as exc_info:
            parse_config(argv)
        assert exc_info.value.key == "p"

    def test_no_problem(self):
        """Test an empty command line"""
        with pytest.raises(ConfigurationError) as exc_info:
            parse_config([])
        assert exc_info.value.key == "problem"

    def test_interaction_requires_waves(self):
        """Test the interaction problem needs both waves"""
        with pytest.raises(ConfigurationError) as exc_info:
            parse_config(["interaction", "--p", "3", "--h", "0.1", "--dt", "0.01", "--tend", "6"])
        assert exc_info.value.key == "c1"

    def test_snapshot_resolution(self):
        """Test fine-grid snapshot sampling is validated"""
        cfg = parse_config(["soliton", "--preset", "soliton-p2", "--snapshot-resolution", "4"])
        assert cfg.snapshot_resolution == 4
        assert parse_config(["soliton", "--preset", "soliton-p2"]).snapshot_resolution == 1
        with pytest.raises(ConfigurationError) as exc_info:
            parse_config(["soliton", "--preset", "soliton-p2", "--snapshot-resolution", "0"])
        assert exc_info.value.key == "snapshot_resolution"

    def test_direct_construction(self):
        """Test building the model without the parser"""
        cfg = RunConfig(problem=Problem.STABILITY, p=2, c=1.0, mu=1.0, h=0.2, dt=0.025)
        assert cfg.n_samples == 10000
        with pytest.raises(ConfigurationError):
            RunConfig(problem=Problem.STABILITY, p=2, h=0.2, dt=0.025, n_samples=1)


class TestPresets:
    """Test shipped presets and config files"""

    def test_available(self):
        """Test every experiment has a preset"""
        names = available_presets()
        for name in ("soliton-p2", "soliton-p3", "soliton-p4", "interaction-p3",
                     "interaction-p4", "maxwellian", "stability", "convergence"):
            assert name in names

    def test_every_preset_loads(self):
        """Test each preset builds a valid configuration"""
        for name in available_presets():
            problem = load_preset(name)["problem"]
            cfg = parse_config([problem, "--preset", name])
            assert cfg.problem.value == problem

    def test_fraction_preset(self):
        """Test fractional speeds in a preset"""
        cfg = parse_config(["interaction", "--preset", "interaction-p4"])
        assert cfg.c1 == pytest.approx(64.0 / 3.0)
        assert cfg.snapshot_times == (0.0, 2.0, 4.0, 6.0)
        assert cfg.model_params().amplitude == pytest.approx(2.0)

    def test_interaction_corrector_passes(self):
        """Test both collision presets run five corrector passes per step"""
        for name in ("interaction-p3", "interaction-p4"):
            cfg = parse_config(["interaction", "--preset", name])
            assert cfg.inner_iterations == 5
            assert cfg.time_params().inner_iterations == 5
        cfg = parse_config(["interaction", "--preset", "interaction-p3", "--inner-iters", "2"])
        assert cfg.inner_iterations == 2

    def test_maxwellian_sweep(self):
        """Test the (p, mu) sweep order"""
        cfg = parse_config(["maxwellian", "--preset", "maxwellian"])
        cases = cfg.maxwellian_cases()
        assert len(cases) == 9
        assert cases[:3] == [(2, 0.1), (3, 0.1), (4, 0.1)]
        assert cfg.time_params().report_times == (0.0, 0.01, 0.03, 0.05)

    def test_single_maxwellian_case(self):
        """Test --p and --mu pick one case"""
        cfg = parse_config(["maxwellian", "--p", "3", "--mu", "0.05"])
        assert cfg.maxwellian_cases() == [(3, 0.05)]

    def test_unknown_preset(self):
        """Test an unknown preset name"""
        with pytest.raises(ConfigurationError) as exc_info:
            parse_config(["soliton", "--preset", "missing"])
        assert exc_info.value.key == "preset"

    def test_preset_for_other_problem(self):
        """Test a preset used with the wrong subcommand"""
        with pytest.raises(ConfigurationError) as exc_info:
            parse_config(["interaction", "--preset", "soliton-p2"])
        assert exc_info.value.key == "preset"

    def test_layer_precedence(self, tmp_path):
        """Test preset < config file < flags"""
        config = tmp_path / "run.cfg"
        config.write_text("h = 0.1\ndt = 0.05\n", encoding="utf-8")
        cfg = parse_config([
            "soliton", "--preset", "soliton-p2", "--config", str(config), "--dt", "0.01",
        ])
        assert cfg.h == 0.1
        assert cfg.dt == 0.01
        assert cfg.c == 1.0

    def test_missing_config_file(self, tmp_path):
        """Test an unreadable config file"""
        with pytest.raises(ConfigurationError) as exc_info:
            parse_config(["soliton", "--config", str(tmp_path / "absent.cfg")])
        assert exc_info.value.key == "config"

    def test_output_directory(self, out_dir):
        """Test the environment default and the --out override"""
        cfg = parse_config(["stability"])
        assert cfg.output_dir() == out_dir
        cfg = parse_config(["stability", "--out", "elsewhere"])
        assert str(cfg.output_dir()) == "elsewhere"

    def test_common_options(self):
        """Test logging options on the subcommand"""
        args = parse_arguments(["stability", "--log-level", "DEBUG", "--no-banner"])
        assert args.log_level == "DEBUG"
        assert args.no_banner is True
