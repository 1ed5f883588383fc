"""
Test Command Line Interface
"""

import pytest

import grlw.core.time_integrator as time_integrator
from grlw import __version__
from grlw.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from grlw.exceptions import SingularMatrixError


class TestMain:
    """Test exit codes and helper commands"""

    def test_help_without_command(self, capsys):
        """Test an empty command line prints help"""
        assert main(["--no-banner"]) == EXIT_OK
        assert "soliton" in capsys.readouterr().out

    def test_version(self, capsys):
        """Test --version"""
        with pytest.raises(SystemExit) as exc_info:
            main(["--version"])
        assert exc_info.value.code == 0
        assert __version__ in capsys.readouterr().out

    def test_info(self, capsys, out_dir):
        """Test the system information command"""
        assert main(["info", "--no-banner"]) == EXIT_OK
        assert "numpy" in capsys.readouterr().out

    def test_presets(self, capsys):
        """Test the preset listing"""
        assert main(["presets", "--no-banner"]) == EXIT_OK
        assert "soliton-p2" in capsys.readouterr().out

    def test_unknown_problem(self, capsys):
        """Test an invalid subcommand"""
        assert main(["bogus"]) == EXIT_USAGE
        assert "grlw: error" in capsys.readouterr().err

    def test_missing_field(self, capsys):
        """Test a configuration error names the key"""
        assert main(["soliton", "--no-banner", "--p", "2"]) == EXIT_USAGE
        assert "key: c" in capsys.readouterr().err

    def test_stability_run(self, capsys, out_dir):
        """Test a complete run writes its CSV"""
        assert main(["stability", "--no-banner", "--samples", "50"]) == EXIT_OK
        assert (out_dir / "stability.csv").exists()
        assert "max_deviation" in capsys.readouterr().out

    def test_problem_flag(self, out_dir):
        """Test the --problem spelling"""
        assert main(["--problem", "stability", "--no-banner", "--samples", "20"]) == EXIT_OK
        assert (out_dir / "stability.csv").exists()

    def test_output_failure(self, tmp_path):
        """Test an unwritable output directory"""
        blocker = tmp_path / "blocker"
        blocker.write_text("", encoding="utf-8")
        assert main(["stability", "--no-banner", "--samples", "20", "--out", str(blocker)]) == EXIT_FAILURE

    def test_solver_failure(self, out_dir, monkeypatch):
        """Test a failed solve exits with the failure code"""
        def fail(matrix, rhs):
            raise SingularMatrixError("Zero pivot 0.0 at row 0", row=0)

        monkeypatch.setattr(time_integrator, "banded_lu_solve", fail)
        argv = ["soliton", "--no-banner", "--preset", "soliton-p2", "--tend", "0.05"]
        assert main(argv) == EXIT_FAILURE
        assert (out_dir / "soliton_p2_table.csv").exists()

    def test_log_file(self, tmp_path, out_dir):
        """Test --log-file receives run messages"""
        log_file = tmp_path / "logs" / "run.log"
        argv = [
            "stability", "--no-banner", "--samples", "20",
            "--log-level", "INFO", "--log-file", str(log_file),
        ]
        assert main(argv) == EXIT_OK
        assert "Starting stability experiment" in log_file.read_text(encoding="utf-8")
