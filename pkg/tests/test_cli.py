"""Tests for the taut command line."""

import json

import pytest
import yaml
from click.testing import CliRunner

from tools.cli import main
from tools.symbolic import SymbolicValue
from tools.verify.suites import CheckResult


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def pullback_file(tmp_path):
    """Two copies of -Delta_11 / 2 on one vertex."""
    path = tmp_path / "tensor.json"
    entries = [{"l": l, "j": 1, "k": 1, "t": -1} for l in (1, 2)]
    path.write_text(json.dumps({"r": 1, "factors": 2, "entries": entries}))
    return path


def run_json(runner, args):
    result = runner.invoke(main, [*args, "--format", "json"])
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


class TestIntersect:
    """Test taut intersect."""

    def test_arithmetic(self, runner, pullback_file):
        """Test the n = r + 1 value."""
        fields = run_json(runner, ["intersect", str(pullback_file), "--genus", "3"])
        assert fields == {"scalar": "0", "omega2": "3/8", "phi": "0", "hnt": "2"}

    def test_geometric_yaml(self, runner, tmp_path):
        """Test the n = r value from a YAML file with fraction text."""
        path = tmp_path / "loop.yaml"
        record = {"r": 1, "factors": 1, "entries": [{"l": 1, "j": 1, "k": 1, "t": "1/2"}]}
        path.write_text(yaml.safe_dump(record))
        fields = run_json(runner, ["intersect", str(path), "--genus", "5/2"])
        assert fields["scalar"] == "-5/4"

    def test_oracle(self, runner, pullback_file):
        """Test the brute-force cross-check passes."""
        result = runner.invoke(main, ["intersect", str(pullback_file), "-g", "4", "--oracle"])
        assert result.exit_code == 0

    def test_oracle_disagreement(self, runner, pullback_file, monkeypatch):
        """Test a disagreeing oracle exits 3."""
        monkeypatch.setattr(
            "tools.intersection.engine.expand_bruteforce", lambda *args: SymbolicValue(phi=1)
        )
        result = runner.invoke(main, ["intersect", str(pullback_file), "-g", "4", "--oracle"])
        assert result.exit_code == 3

    def test_singular_genus(self, runner, pullback_file):
        """Test g = 1 for n = r + 1 exits 2."""
        result = runner.invoke(main, ["intersect", str(pullback_file), "--genus", "1"])
        assert result.exit_code == 2

    def test_bad_genus_text(self, runner, pullback_file):
        """Test a decimal genus exits 2."""
        result = runner.invoke(main, ["intersect", str(pullback_file), "--genus", "2.5"])
        assert result.exit_code == 2

    def test_bad_factor_count(self, runner, tmp_path):
        """Test n = r + 2 exits 2."""
        path = tmp_path / "tensor.json"
        entries = [{"l": l, "j": 1, "k": 1, "t": 1} for l in (1, 2, 3)]
        path.write_text(json.dumps({"r": 1, "factors": 3, "entries": entries}))
        result = runner.invoke(main, ["intersect", str(path), "--genus", "3"])
        assert result.exit_code == 2

    def test_missing_file(self, runner, tmp_path):
        """Test a missing input file is invalid input."""
        missing = tmp_path / "missing.json"
        result = runner.invoke(main, ["intersect", str(missing), "--genus", "3"])
        assert result.exit_code == 2
        assert "not found" in result.output

    @pytest.mark.parametrize("t", [2.0, True, 0.5])
    def test_non_integer_numbers_rejected(self, runner, tmp_path, t):
        """Test floats and booleans as coefficients exit 2."""
        path = tmp_path / "tensor.json"
        entries = [{"l": 1, "j": 1, "k": 1, "t": t}]
        path.write_text(json.dumps({"r": 1, "factors": 1, "entries": entries}))
        result = runner.invoke(main, ["intersect", str(path), "--genus", "3"])
        assert result.exit_code == 2

    def test_float_sizes_rejected(self, runner, tmp_path):
        """Test r given as 1.0 exits 2."""
        path = tmp_path / "tensor.json"
        entries = [{"l": 1, "j": 1, "k": 1, "t": 1}]
        path.write_text(json.dumps({"r": 1.0, "factors": 1, "entries": entries}))
        result = runner.invoke(main, ["intersect", str(path), "--genus", "3"])
        assert result.exit_code == 2


class TestGraph:
    """Test taut graph."""

    def test_theta(self, runner, tmp_path):
        """Test the theta graph at g = 2."""
        path = tmp_path / "theta.json"
        path.write_text(json.dumps({"vertices": 2, "edges": [[1, 2], [1, 2], [2, 1]]}))
        fields = run_json(runner, ["graph", str(path), "--genus", "2", "--oracle"])
        assert fields == {"scalar": "0", "omega2": "5/2", "phi": "-1", "hnt": "6"}

    def test_bad_endpoint(self, runner, tmp_path):
        """Test an edge outside the vertex range exits 2."""
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"vertices": 1, "edges": [[1, 2]]}))
        result = runner.invoke(main, ["graph", str(path), "--genus", "2"])
        assert result.exit_code == 2

    def test_unknown_field(self, runner, tmp_path):
        """Test unknown record fields exit 2."""
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"vertices": 1, "edges": [], "loops": 1}))
        result = runner.invoke(main, ["graph", str(path), "--genus", "2"])
        assert result.exit_code == 2

    @pytest.mark.parametrize(
        "record",
        [
            {"vertices": 1.0, "edges": [[1, 1]]},
            {"vertices": 1, "edges": [[1.0, 1.0]]},
            {"vertices": True, "edges": [[1, 1]]},
        ],
    )
    def test_non_integer_numbers_rejected(self, runner, tmp_path, record):
        """Test floats and booleans as vertex counts or endpoints exit 2."""
        path = tmp_path / "graph.json"
        path.write_text(json.dumps(record))
        result = runner.invoke(main, ["graph", str(path), "--genus", "2"])
        assert result.exit_code == 2

    def test_missing_file(self, runner, tmp_path):
        """Test a missing graph file exits 2."""
        result = runner.invoke(main, ["graph", str(tmp_path / "absent.yaml"), "--genus", "2"])
        assert result.exit_code == 2


class TestHeight:
    """Test taut height."""

    def test_coefficients(self, runner):
        """Test m = 1 at g = 3."""
        fields = run_json(runner, ["height", "--m", "1", "--genus", "3"])
        assert fields == {"prefactor": "1", "a": "1/16", "b": "0", "c": "1/3"}

    def test_eval(self, runner):
        """Test a numeric height."""
        fields = run_json(runner, ["height", "--m", "1", "--genus", "3", "--eval", "omega2=16"])
        assert fields == {"height": "1"}

    def test_bogomolov_with_local_bound(self, runner):
        """Test the Bogomolov coefficient and the local phi bound."""
        fields = run_json(
            runner,
            ["height", "--m", "1,-1", "--genus", "4", "--bogomolov", "--delta", "2=1"],
        )
        assert fields == {"phi_coefficient": "5/432", "phi_local_bound": "2"}

    def test_local_bound_non_separating(self, runner):
        """Test delta0 alone at g = 2."""
        fields = run_json(runner, ["height", "--m", "1", "--genus", "2", "--delta0", "1"])
        assert fields["phi_local_bound"] == "1/76"

    def test_eval_and_bogomolov_exclusive(self, runner):
        """Test conflicting modes exit 1."""
        result = runner.invoke(
            main, ["height", "--m", "1", "--genus", "3", "--eval", "phi=1", "--bogomolov"]
        )
        assert result.exit_code == 1

    @pytest.mark.parametrize(
        "args",
        [
            ["--m", "1,0", "--genus", "3"],
            ["--m", "1,1,1", "--genus", "2"],
            ["--m", "1", "--genus", "3", "--eval", "omega=1"],
            ["--m", "1", "--genus", "3", "--delta", "x=1"],
        ],
    )
    def test_invalid_input(self, runner, args):
        """Test invalid values exit 2."""
        result = runner.invoke(main, ["height", *args])
        assert result.exit_code == 2


class TestBound:
    """Test taut bound."""

    def test_matrix_file(self, runner, tmp_path):
        """Test the r = 2 matrix at g = 3."""
        path = tmp_path / "matrix.json"
        path.write_text(json.dumps({"r": 2, "t": [[1, 3], [3, 1]]}))
        fields = run_json(runner, ["bound", str(path), "--m", "1,1", "--genus", "3"])
        assert fields["ratio"] == "2/7"
        assert fields["omega2"] == "-126"
        assert fields["phi"] == "36"

    def test_alternating(self, runner):
        """Test the signed 4-cycle at g = 3."""
        fields = run_json(runner, ["bound", "--m", "1,1,1,1", "--genus", "3", "--alternating"])
        assert fields["ratio"] == "1/3"

    def test_grid(self, runner):
        """Test the grid search at g = 5."""
        fields = run_json(runner, ["bound", "--m", "1,1", "--genus", "5", "--grid", "0,1,5"])
        assert fields["ratio"] == "4/11"
        assert fields["matrix"] == "1,5;5,1"

    def test_grid_without_result(self, runner):
        """Test ratio none when no candidate bounds phi."""
        fields = run_json(runner, ["bound", "--m", "1,1", "--genus", "5", "--grid", "0"])
        assert fields == {"ratio": "none"}

    def test_constraint_violation(self, runner, tmp_path):
        """Test a matrix breaking the constraint exits 2."""
        path = tmp_path / "matrix.yaml"
        path.write_text(yaml.safe_dump({"r": 2, "t": [[1, 0], [0, 1]]}))
        result = runner.invoke(main, ["bound", str(path), "--m", "1,1", "--genus", "3"])
        assert result.exit_code == 2

    @pytest.mark.parametrize(
        "record",
        [
            {"r": 2, "t": [[1.0, 3.0], [3.0, 1.0]]},
            {"r": 2, "t": [[True, 3], [3, True]]},
            {"r": 2.0, "t": [[1, 3], [3, 1]]},
        ],
    )
    def test_non_integer_numbers_rejected(self, runner, tmp_path, record):
        """Test floats and booleans in a matrix file exit 2."""
        path = tmp_path / "matrix.json"
        path.write_text(json.dumps(record))
        result = runner.invoke(main, ["bound", str(path), "--m", "1,1", "--genus", "3"])
        assert result.exit_code == 2

    def test_needs_one_source(self, runner):
        """Test no matrix source exits 1."""
        result = runner.invoke(main, ["bound", "--m", "1,1", "--genus", "3"])
        assert result.exit_code == 1


class TestVerify:
    """Test taut verify."""

    def test_table1_json(self, runner):
        """Test the golden values report."""
        rows = run_json(runner, ["verify", "--suite", "table1"])
        assert len(rows) == 4
        assert {row["status"] for row in rows} == {"pass"}

    def test_tsv(self, runner):
        """Test the TSV header and rows."""
        result = runner.invoke(main, ["verify", "--suite", "table1", "--format", "tsv"])
        assert result.exit_code == 0
        lines = result.stdout.strip().splitlines()
        assert lines[0] == "suite\tcheck\tstatus\tdetail"
        assert len(lines) == 5

    def test_failure_exits_3(self, runner, monkeypatch):
        """Test a failing check exits 3."""
        monkeypatch.setattr(
            "tools.verify.cli.run_suite",
            lambda name, options: [CheckResult("table1", "circle", False, "broken")],
        )
        result = runner.invoke(main, ["verify", "--suite", "table1"])
        assert result.exit_code == 3

    def test_unknown_suite(self, runner):
        """Test an unknown suite exits 1."""
        result = runner.invoke(main, ["verify", "--suite", "table2"])
        assert result.exit_code == 1


class TestSharedOptions:
    """Test options every command shares."""

    def test_config_file(self, runner, tmp_path):
        """Test the output format from a config file."""
        config = tmp_path / "run.yaml"
        config.write_text(yaml.safe_dump({"output_format": "json", "jobs": 2}))
        result = runner.invoke(
            main, ["height", "--m", "1", "--genus", "3", "--config", str(config)]
        )
        assert result.exit_code == 0
        assert json.loads(result.stdout)["c"] == "1/3"

    def test_bad_config_file(self, runner, tmp_path):
        """Test unknown config keys exit 2."""
        config = tmp_path / "run.json"
        config.write_text(json.dumps({"colour": "blue"}))
        result = runner.invoke(
            main, ["height", "--m", "1", "--genus", "3", "--config", str(config)]
        )
        assert result.exit_code == 2

    def test_missing_config_file(self, runner, tmp_path):
        """Test a missing config file exits 2."""
        result = runner.invoke(
            main, ["height", "--m", "1", "--genus", "3", "--config", str(tmp_path / "run.yaml")]
        )
        assert result.exit_code == 2

    def test_unknown_option(self, runner):
        """Test an unknown option exits 1."""
        result = runner.invoke(main, ["height", "--m", "1", "--genus", "3", "--colour"])
        assert result.exit_code == 1

    def test_version(self, runner):
        """Test --version."""
        result = runner.invoke(main, ["--version"])
        assert result.exit_code == 0
        assert "0.1.0" in result.output
