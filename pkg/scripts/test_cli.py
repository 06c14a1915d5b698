#!/usr/bin/env python3
"""
CLI Tests
Commands, payload round-trips, output formats and exit codes
"""

import json
import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

import pytest
from click.testing import CliRunner

from zslab.cli import cli
from zslab.cli.schemas import (
    CheckReportPayload,
    CommandPayload,
    DensePayload,
    FormulaPayload,
    SolveResultPayload,
    WidenessPayload,
)
from zslab.factorization import is_ufis
from zslab.verify import CheckStatus


def invoke(*args, env=None):
    runner = CliRunner()
    return runner.invoke(cli, ["--threads", "1", *args], env=env)


def payload_of(result):
    data = json.loads(result.stdout)
    CommandPayload.model_validate(data)
    return data


def test_invariant_command():
    """invariant: exact value, witness and config echo"""
    print("\n" + "=" * 60)
    print("TEST 1: invariant")
    print("=" * 60)

    result = invoke("invariant", "--group", "2,3", "--which", "K1")
    assert result.exit_code == 0, result.stderr
    data = payload_of(result)
    assert data["command"] == "invariant"
    assert data["run_id"].startswith("RUN-")
    assert data["config"]["threads"] == 1
    assert data["config"]["group_cap"] == 64
    assert data["result"]["value"] == {"num": 2, "den": 1}

    parsed = SolveResultPayload.model_validate(data["result"])
    witness = parsed.to_witness()
    assert parsed.to_group().components == (2, 3)
    assert is_ufis(witness)
    assert len(witness) == parsed.witness_length
    print(f"✓ K1(C6) = 2 with witness {witness}")
    print("✅ invariant: PASSED")


@pytest.mark.parametrize("group,which,num,den", [
    ("4,3", "k", 17, 12),
    ("1", "D", 0, 1),
    ("4", "K", 1, 1),
    ("2,2,2", "N1", 6, 1),
])
def test_invariant_values(group, which, num, den):
    result = invoke("invariant", "--group", group, "--which", which)
    assert result.exit_code == 0, result.stderr
    assert payload_of(result)["result"]["value"] == {"num": num, "den": den}


def test_invariant_weight_and_lower_bound():
    data = payload_of(invoke("invariant", "--group", "6", "--which", "k", "--weight", "dyadic"))
    assert data["result"]["value"] == {"num": 1, "den": 1}
    assert data["result"]["weight"] == {"kind": "dyadic"}

    data = payload_of(invoke("invariant", "--group", "4,2", "--which", "D"))
    assert data["result"]["value"] == {"num": 5, "den": 1}
    assert data["result"]["davenport_lower"] == 5


@pytest.mark.parametrize("group,which,num,den", [
    ("4,3", "K1star", 5, 2),
    ("4,3", "kstar", 17, 12),
    ("2,2", "Kstar", 3, 2),
])
def test_formula_command(group, which, num, den):
    result = invoke("formula", "--group", group, "--which", which)
    assert result.exit_code == 0, result.stderr
    parsed = FormulaPayload.model_validate(payload_of(result)["result"])
    assert parsed.value.to_fraction().numerator == num
    assert parsed.value.den == den


def test_wide_command():
    data = payload_of(invoke("wide", "--p", "2", "--n", "15", "--two"))
    report = WidenessPayload.model_validate(data["result"])
    assert report.holds is False
    assert report.lhs.num == 3 and report.lhs.den == 2
    assert report.rhs.num == 8 and report.rhs.den == 5

    data = payload_of(invoke("wide", "--n", "30"))
    assert data["result"]["holds"] is True
    assert data["result"]["variant"] == "wide"


def test_dense_command():
    result = invoke("dense", "--group", "4", "--kind", "ufis", "--all")
    assert result.exit_code == 0, result.stderr
    parsed = DensePayload.model_validate(payload_of(result)["result"])
    assert parsed.witness == [[[1], 1], [[2], 2], [[3], 1]]
    assert parsed.order_histogram == {"2": 2, "4": 2}
    assert parsed.dense_count == 1
    assert len(parsed.optima) == 1
    assert is_ufis(parsed.to_witness())


def test_verify_command():
    """verify: exit 0 iff the check does not fail"""
    print("\n" + "=" * 60)
    print("TEST: verify")
    print("=" * 60)

    result = invoke("verify", "--check", "gao_n1", "--p", "3", "--n", "2")
    assert result.exit_code == 0, result.stderr
    report = CheckReportPayload.model_validate(payload_of(result)["result"])
    assert report.status == CheckStatus.PASS
    assert report.value_lhs.to_fraction() == 6

    result = invoke("verify", "--check", "additivity_K1", "--p", "2", "--alpha", "1", "--group", "3")
    report = CheckReportPayload.model_validate(payload_of(result)["result"])
    assert report.status == CheckStatus.PASS
    assert report.value_lhs.num == 2 and report.value_rhs.num == 2
    assert report.params["group"] == [3]

    result = invoke("verify", "--check", "conj5", "--p", "2", "--k", "3", "--len-cap", "6")
    report = CheckReportPayload.model_validate(payload_of(result)["result"])
    assert report.status == CheckStatus.PASS
    assert report.details["exhaustive"] is True

    result = invoke("verify", "--check", "toplift", "--p", "2", "--alphas", "1,1")
    assert result.exit_code == 0, result.stderr
    print("✓ gao_n1, additivity_K1, conj5, toplift pass")
    print("✅ verify: PASSED")


def test_verify_skips_exit_zero():
    result = invoke("verify", "--check", "additivity_K1", "--p", "3", "--alpha", "1", "--group", "2")
    assert result.exit_code == 0
    assert payload_of(result)["result"]["status"] == "skipped_hypothesis"


def test_usage_errors_exit_one():
    assert invoke("verify", "--check", "nope").exit_code == 1
    assert invoke("verify", "--check", "gao_n1", "--p", "3").exit_code == 1
    assert invoke("invariant", "--group", "x", "--which", "k").exit_code == 1
    assert invoke("invariant", "--group", "4", "--which", "Q").exit_code == 1
    assert invoke("formula", "--group", "4", "--which", "Kstar", "--weight", "dyadic").exit_code == 1
    assert invoke("bogus").exit_code == 1

    result = invoke("invariant", "--group", "x", "--which", "k")
    assert result.stdout == ""
    assert "Non-numeric" in result.stderr


@pytest.mark.parametrize("which", ["K", "D", "N1"])
def test_weight_rejected_where_unused(which):
    result = invoke("invariant", "--group", "4", "--which", which, "--weight", "dyadic")
    assert result.exit_code == 1
    assert result.stdout == ""
    assert "no weighted form" in result.stderr

    assert invoke("invariant", "--group", "4", "--which", which, "--weight", "cross").exit_code == 0


def test_cap_exits_two():
    result = invoke("--group-cap", "8", "invariant", "--group", "9", "--which", "k")
    assert result.exit_code == 2
    assert result.stdout == ""

    result = invoke("invariant", "--group", "9", "--which", "k", env={"ZSLAB_GROUP_CAP": "8"})
    assert result.exit_code == 2

    result = invoke("invariant", "--group", "9", "--which", "k", env={"ZSLAB_GROUP_CAP": "0"})
    assert result.exit_code == 1


def test_csv_and_table_output():
    result = invoke("--output", "csv", "formula", "--group", "4,3", "--which", "K1star")
    assert result.exit_code == 0, result.stderr
    header, row = result.stdout.strip().splitlines()
    assert header.split(",")[0] == "formula"
    assert "5/2" in row

    result = invoke("--output", "table", "verify", "--check", "gao_n1", "--p", "2", "--n", "1")
    assert result.exit_code == 0, result.stderr
    assert "gao_n1" in result.stdout
    assert "pass" in result.stdout


def main():
    """Run all CLI tests"""
    try:
        print("=" * 60)
        print("CLI TESTING")
        print("=" * 60)

        test_invariant_command()
        test_invariant_weight_and_lower_bound()
        test_wide_command()
        test_dense_command()
        test_verify_command()
        test_verify_skips_exit_zero()
        test_usage_errors_exit_one()
        for which in ["K", "D", "N1"]:
            test_weight_rejected_where_unused(which)
        test_cap_exits_two()
        test_csv_and_table_output()

        print("\n" + "=" * 60)
        print("✅ ALL CLI TESTS PASSED")
        print("=" * 60)

    except AssertionError as e:
        print(f"\n❌ TEST FAILED: {str(e)}")
        sys.exit(1)


if __name__ == "__main__":
    main()
