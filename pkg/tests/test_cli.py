"""
Tests for the command-line front end.
"""

import math

import pandas as pd
import pytest

from lp_affine.bodies import make_rounded_intersection
from lp_affine.cli import (
    ASP_COLUMNS,
    EXIT_CONFIG,
    EXIT_DIVERGENCE,
    EXIT_GEOMETRY,
    EXIT_OK,
    build_grid,
    main,
    parse_p_list,
    parse_schedule,
)
from lp_affine.exceptions import ConfigurationError
from lp_affine.utils import load_config


@pytest.fixture(scope="module")
def config_path(repo_path):
    return str(repo_path / "config.yaml")


@pytest.fixture(scope="module")
def config(config_path):
    return load_config(config_path)


def body_path(repo_path, name):
    return str(repo_path / "bodies" / name)


class TestParsing:
    """Test flag parsers."""

    def test_p_list(self):
        """Test exponent lists with infinities."""
        assert parse_p_list("0, 1, inf, -inf") == [0.0, 1.0, math.inf, -math.inf]

    def test_p_list_invalid(self):
        """Test non-numeric and empty lists are rejected."""
        with pytest.raises(ConfigurationError):
            parse_p_list("1,two")
        with pytest.raises(ConfigurationError):
            parse_p_list(" , ")

    def test_schedule(self):
        """Test geometric schedules."""
        assert parse_schedule("geom:0.4:0.5:3") == pytest.approx([0.4, 0.2, 0.1])

    def test_schedule_invalid(self):
        """Test malformed schedules are rejected."""
        with pytest.raises(ConfigurationError):
            parse_schedule("lin:0.4:0.5:3")
        with pytest.raises(ConfigurationError):
            parse_schedule("geom:0.4:2:3")


class TestGridSelection:
    """Test grid flags and config defaults."""

    def test_default_planar(self, disc, config):
        """Test planar bodies default to the configured circle grid."""
        assert build_grid(None, disc, config).label == "circle:4096"

    def test_default_arc_body(self, config):
        """Test arc bodies default to an arc grid."""
        body = make_rounded_intersection(100.0, 0.01)
        assert build_grid(None, body, config).scheme == "arc-gauss"

    def test_explicit_flags(self, disc, config):
        """Test circle and Monte Carlo flags."""
        assert len(build_grid("circle:512", disc, config)) == 512
        assert build_grid("mc:2000", disc, config, seed=3).scheme == "mc"

    def test_dimension_mismatch(self, disc, config):
        """Test a sphere3 grid on a planar body is rejected."""
        with pytest.raises(ConfigurationError):
            build_grid("sphere3:16x8", disc, config)

    def test_bad_flags(self, disc, config):
        """Test unknown schemes and bad resolutions are rejected."""
        with pytest.raises(ConfigurationError):
            build_grid("hex:12", disc, config)
        with pytest.raises(ConfigurationError):
            build_grid("circle:many", disc, config)
        with pytest.raises(ConfigurationError):
            build_grid("arcs:16", disc, config)


class TestCommands:
    """Test subcommands end to end."""

    def test_asp_writes_table(self, repo_path, config_path, tmp_path):
        """Test asp on the disc writes one row per exponent."""
        out = tmp_path / "asp.csv"
        code = main(["asp", "--body", body_path(repo_path, "disc.json"), "--p", "0,1,-2,inf",
                     "--grid", "circle:1024", "--config", config_path, "--out", str(out)])
        assert code == EXIT_OK
        frame = pd.read_csv(out)
        assert list(frame.columns) == ASP_COLUMNS
        assert len(frame) == 4
        assert frame["value"].iloc[1] == pytest.approx(2.0 * math.pi)
        assert frame["method"].iloc[2] == "sup-form"

    def test_asp_json(self, repo_path, config_path, tmp_path):
        """Test JSON output holds one record per exponent."""
        out = tmp_path / "asp.json"
        code = main(["asp", "--body", body_path(repo_path, "ellipse_2_1.json"), "--p", "1",
                     "--format", "json", "--config", config_path, "--out", str(out)])
        assert code == EXIT_OK
        frame = pd.read_json(out, orient="records")
        assert frame["value"].iloc[0] == pytest.approx(2.0 * math.pi * 2.0 ** (1.0 / 3.0))

    def test_bad_grid_exit_code(self, repo_path, config_path, tmp_path):
        """Test an invalid grid flag exits with code 2."""
        code = main(["asp", "--body", body_path(repo_path, "disc.json"), "--grid", "circle:abc",
                     "--config", config_path, "--out", str(tmp_path / "x.csv")])
        assert code == EXIT_CONFIG

    def test_missing_body_exit_code(self, config_path, tmp_path):
        """Test a missing body spec exits with code 2."""
        code = main(["asp", "--body", str(tmp_path / "missing.json"), "--config", config_path])
        assert code == EXIT_CONFIG

    def test_divergence_exit_code(self, repo_path, config_path, tmp_path):
        """Test as_{-1} of the square exits with code 3 and writes nothing."""
        out = tmp_path / "square.csv"
        code = main(["asp", "--body", body_path(repo_path, "square.json"), "--p", "-1",
                     "--config", config_path, "--out", str(out)])
        assert code == EXIT_DIVERGENCE
        assert not out.exists()

    def test_allow_divergent(self, repo_path, config_path, tmp_path):
        """Test --allow-divergent reports the divergent value."""
        out = tmp_path / "square.csv"
        code = main(["asp", "--body", body_path(repo_path, "square.json"), "--p", "-1,1",
                     "--allow-divergent", "--config", config_path, "--out", str(out)])
        assert code == EXIT_OK
        frame = pd.read_csv(out)
        assert bool(frame["divergent"].iloc[0])
        assert frame["value"].iloc[1] == 0.0

    def test_duality(self, repo_path, config_path, tmp_path):
        """Test duality on the ellipse has no violations."""
        out = tmp_path / "duality.csv"
        code = main(["duality", "--body", body_path(repo_path, "ellipse_2_1.json"),
                     "--config", config_path, "--out", str(out)])
        assert code == EXIT_OK
        frame = pd.read_csv(out)
        assert set(frame["verdict"]) == {"equality-case"}

    def test_degenerate_floating_body_exit_code(self, repo_path, config_path, tmp_path):
        """Test delta = |B|/2 on the disc exits with code 4 and writes nothing."""
        out = tmp_path / "floating.csv"
        code = main(["floating", "--body", body_path(repo_path, "disc.json"),
                     "--schedule", "geom:1.5707963267948966:0.5:4", "--ndirs", "64",
                     "--config", config_path, "--out", str(out)])
        assert code == EXIT_GEOMETRY
        assert not out.exists()

    def test_geometric_failure_message(self, repo_path, config_path, tmp_path, capsys):
        """Test a delta above |B|/2 is reported as a geometric failure, not a configuration error."""
        code = main(["floating", "--body", body_path(repo_path, "disc.json"),
                     "--schedule", "geom:2.0:0.5:4", "--ndirs", "64",
                     "--config", config_path, "--out", str(tmp_path / "f.csv")])
        assert code == EXIT_GEOMETRY
        err = capsys.readouterr().err
        assert "Geometric precondition failed" in err
        assert "Configuration error" not in err

    def test_short_schedule_is_configuration_error(self, repo_path, config_path, tmp_path):
        """Test a limit schedule with three values exits with code 2."""
        code = main(["floating", "--body", body_path(repo_path, "disc.json"),
                     "--schedule", "geom:0.01:0.5:3", "--config", config_path,
                     "--out", str(tmp_path / "f.csv")])
        assert code == EXIT_CONFIG

    def test_too_few_directions_is_configuration_error(self, repo_path, config_path, tmp_path):
        """Test --ndirs below 64 exits with code 2."""
        code = main(["floating", "--body", body_path(repo_path, "disc.json"), "--ndirs", "16",
                     "--config", config_path, "--out", str(tmp_path / "f.csv")])
        assert code == EXIT_CONFIG

    def test_duality_on_rounded_body(self, repo_path, config_path, tmp_path):
        """Test duality on K(100, 0.01) runs on its exact polar."""
        out = tmp_path / "rounded_duality.csv"
        code = main(["duality", "--body", body_path(repo_path, "rounded.json"), "--p", "1,2",
                     "--config", config_path, "--out", str(out)])
        assert code == EXIT_OK
        frame = pd.read_csv(out)
        assert set(frame["verdict"]) == {"equality-case"}

    def test_cube_example(self, config_path, tmp_path):
        """Test the cube example writes its schedule with a negative slope."""
        out = tmp_path / "cube.csv"
        code = main(["cube-example", "--config", config_path, "--out", str(out)])
        assert code == EXIT_OK
        frame = pd.read_csv(out)
        assert len(frame) == 7
        assert frame["fitted_exponent"].iloc[0] == pytest.approx(-1.0 / 6.0, abs=0.02)

    def test_rounded_example(self, config_path, tmp_path):
        """Test the rounded body bounds hold."""
        out = tmp_path / "rounded.csv"
        code = main(["rounded-example", "--p", "0,1,-1", "--config", config_path,
                     "--out", str(out)])
        assert code == EXIT_OK
        assert "violated" not in set(pd.read_csv(out)["verdict"])

    def test_surface_needs_positive_constant(self, repo_path, config_path, tmp_path):
        """Test a zero constant weight exits with code 2."""
        code = main(["surface", "--body", body_path(repo_path, "disc.json"), "--weight", "const:0",
                     "--config", config_path, "--out", str(tmp_path / "s.csv")])
        assert code == EXIT_CONFIG

    def test_suite_output_is_reproducible(self, config_path, tmp_path):
        """Test two suite runs with one seed give byte-identical files."""
        paths = [tmp_path / "suite_a.csv", tmp_path / "suite_b.csv"]
        for path in paths:
            code = main(["suite", "--count", "1", "--symmetric-count", "1", "--seed", "7",
                         "--grid", "circle:1024", "--config", config_path, "--out", str(path)])
            assert code == EXIT_OK
        assert paths[0].read_bytes() == paths[1].read_bytes()
        frame = pd.read_csv(paths[0])
        upper = frame[frame["name"] == "santalo-upper"]
        # disc, two ellipses, one ensemble body, one symmetric body
        assert set(upper["body_index"]) == {0, 1, 2, 4}

    def test_info(self, repo_path, config_path, capsys):
        """Test info prints the body summary."""
        code = main(["info", "--body", body_path(repo_path, "ellipse_2_1.json"),
                     "--config", config_path])
        assert code == EXIT_OK
        assert "polar volume" in capsys.readouterr().out
