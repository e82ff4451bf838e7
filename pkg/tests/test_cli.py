import json

import pytest
from click.testing import CliRunner

from main import cli
from src.core.errors import VerificationError
from src.core.io_formats import canonical_json, parse_ideal


@pytest.fixture
def runner():
    return CliRunner()


def test_dual_three_generator_example(runner):
    result = runner.invoke(cli, ["dual", "--ideal", "x1^3, x1^2*x2^2, x2^4"])
    assert result.exit_code == 0
    assert "dual: x1^3, x1*x2^2, x2^4" in result.output
    assert "double dual returns I" in result.output


def test_dual_output_reparses(runner):
    result = runner.invoke(cli, ["dual", "--ideal", "x1^3, x1^2*x2^2, x2^4", "--json"])
    payload = json.loads(result.output)["payload"]
    assert parse_ideal(payload["dual"])[0] == parse_ideal("x1^3, x1*x2^2, x2^4")[0]
    assert payload["height"] == 2


def test_dual_height_one_warning(runner):
    result = runner.invoke(cli, ["dual", "--ideal", "x1^2, x1*x2, x1*x3"])
    assert result.exit_code == 0
    assert "height 1: double dual differs" in result.output


def test_dual_of_variable_is_unit(runner):
    result = runner.invoke(cli, ["dual", "--ideal", "x1"])
    assert result.exit_code == 0
    assert "dual: 1" in result.output


def test_dual_parse_error_exit_code(runner):
    result = runner.invoke(cli, ["dual", "--ideal", "x1^^2"])
    assert result.exit_code == 2


def test_dual_zero_ideal_exit_code(runner):
    result = runner.invoke(cli, ["dual", "--ideal", "0"])
    assert result.exit_code == 3


def test_json_output_is_canonical(runner):
    result = runner.invoke(cli, ["dual", "--ideal", "x1^2, x2^2", "--json"])
    document = json.loads(result.output)
    assert document["status"] == "ok"
    assert json.dumps(document, ensure_ascii=False, sort_keys=True, indent=2) == result.output.strip()


def test_ferrers_decompose_verify(runner):
    result = runner.invoke(cli, ["ferrers", "--lambda", "4,4,3", "--decompose", "--verify", "--json"])
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert len(document["payload"]["components"]) == 10
    assert "equality OK" in document["diagnostics"]


def test_ferrers_specialize(runner):
    result = runner.invoke(cli, ["ferrers", "--lambda", "4,4,3", "--mu", "0,1,2", "--specialize", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)["payload"]
    expected = "x1^2, x1*x2, x1*x3, x1*x4, x2^2, x2*x3, x2*x4, x3^2"
    assert payload["specialization"] == expected
    assert payload["specialization_strongly_stable"]


def test_ferrers_trivial(runner):
    result = runner.invoke(cli, ["ferrers", "--lambda", "1", "--decompose", "--json"])
    payload = json.loads(result.output)["payload"]
    assert payload["dual"] == "1"
    assert payload["components"] == []


def test_ferrers_invalid_partition(runner):
    assert runner.invoke(cli, ["ferrers", "--lambda", "3,4"]).exit_code == 3
    assert runner.invoke(cli, ["ferrers", "--lambda", "4,4,3", "--mu", "0,1,3"]).exit_code == 3


def test_resolve_verify(runner):
    result = runner.invoke(cli, ["resolve", "--lambda", "4,4,3", "--verify"])
    assert result.exit_code == 0
    assert "β=(8,9,2)" in result.output
    assert "reg=4" in result.output
    assert "pd=3" in result.output
    assert "linear" in result.output
    assert "all checks pass" in result.output


def test_resolve_degenerate(runner):
    result = runner.invoke(cli, ["resolve", "--lambda", "2,2", "--verify"])
    assert result.exit_code == 0
    assert "β=(3,2,0)" in result.output
    assert "pd=2" in result.output
    assert "degenerate case" in result.output


def test_resolve_single_vertex(runner):
    result = runner.invoke(cli, ["resolve", "--lambda", "1", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)["payload"]
    assert payload["betti"] == [1, 0, 0]


def test_resolve_dot(runner):
    result = runner.invoke(cli, ["resolve", "--lambda", "4,4,3", "--dot"])
    assert result.exit_code == 0
    assert "digraph" in result.output


def test_resolve_json_differentials(runner):
    result = runner.invoke(cli, ["resolve", "--lambda", "4,4,3", "--json"])
    differentials = json.loads(result.output)["payload"]["differentials"]
    assert differentials["d1"]["rows"] == 8
    assert len(differentials["d2"]["entries"]) == 8


def test_resolve_rejects_non_stable_shape(runner):
    assert runner.invoke(cli, ["resolve", "--lambda", "2,1"]).exit_code == 3


def test_fiber_lambda(runner):
    result = runner.invoke(cli, ["fiber", "--lambda", "4,4,3", "--rmax", "3"])
    assert result.exit_code == 0
    assert "relations match through degree 3" in result.output
    assert "dim F = 4" in result.output
    assert "minors == degree-2 relations" in result.output


def test_fiber_ideal(runner):
    result = runner.invoke(cli, ["fiber", "--ideal", "x1^2, x1*x2, x2^2", "--rmax", "2", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)["payload"]
    assert payload["relations"]["2"] == [[[1, 3], [2, 2]]]


def test_fiber_height_one(runner):
    result = runner.invoke(cli, ["fiber", "--ideal", "x1^2, x1*x2, x1*x3"])
    assert result.exit_code == 3
    assert "height 1" in result.output


def test_fiber_requires_one_input(runner):
    assert runner.invoke(cli, ["fiber"]).exit_code == 2


@pytest.mark.parametrize("rmax", ["0", "-5"])
def test_fiber_rejects_nonpositive_rmax(runner, rmax):
    result = runner.invoke(cli, ["fiber", "--ideal", "x1^2, x1*x2, x2^2", "--rmax", rmax])
    assert result.exit_code == 2
    assert "relations match" not in result.output


def test_fiber_json_is_stable_past_degree_nine(runner):
    result = runner.invoke(cli, ["fiber", "--ideal", "x1^2, x1*x2, x2^2", "--rmax", "10", "--json"])
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert canonical_json(document) == result.output.rstrip("\n")
    assert set(document["payload"]["relations"]) == {str(r) for r in range(1, 11)}
    assert document["payload"]["relation_counts"]["ideal"]["1"] == 0


def test_resolve_reports_failed_check(runner, monkeypatch):
    import main

    def failing(lam, use_oracle=False):
        raise VerificationError("acyclicity", {"b": [1, 1, 0]})

    monkeypatch.setattr(main, "verify_resolution", failing)
    result = runner.invoke(cli, ["resolve", "--lambda", "4,4,3", "--verify"])
    assert result.exit_code == 1
    assert "acyclicity fails at b=[1, 1, 0]" in result.output


def test_selftest_small(runner, monkeypatch):
    from src.analysis import property_checks

    original = property_checks.PropertyChecker.sweep_resolutions

    def fast_resolutions(self, max_rows=3, max_first=4, use_oracle=True):
        return original(self, max_rows, max_first, use_oracle)

    monkeypatch.setattr(property_checks.PropertyChecker, "sweep_resolutions", fast_resolutions)
    result = runner.invoke(cli, ["selftest", "--seed", "5", "--samples", "60", "--product-samples", "20"])
    assert result.exit_code == 0
    assert "all checks pass" in result.output
