import json

from click.testing import CliRunner

from stabledaha.cli import cli


def invoke(*args: str):
    return CliRunner().invoke(cli, list(args))


def test_macdonald_prints_polynomial() -> None:
    result = invoke("macdonald", "--weight", "1,0")

    assert result.exit_code == 0
    assert result.output.strip() == "x1"


def test_macdonald_pads_to_rank() -> None:
    result = invoke("macdonald", "--weight", "0", "--k", "2")

    assert result.exit_code == 0
    assert result.output.strip() == "1"


def test_macdonald_json_output() -> None:
    result = invoke("macdonald", "--weight", "1,0", "--format", "json")
    payload = json.loads(result.output)

    assert payload["weight"] == [1, 0]
    assert payload["polynomial"] == "x1"
    assert payload["terms"] == [{"exps": [1, 0], "coeff": "1"}]


def test_straighten_prints_pbw_expansion() -> None:
    result = invoke("straighten", "--word", "T1 T1", "--k", "2")

    assert result.exit_code == 0
    assert result.output.strip() == "1 + h * T1"


def test_straighten_mod_h() -> None:
    result = invoke("straighten", "--word", "Y1 X1", "--k", "2", "--mod-h")

    assert result.exit_code == 0
    assert result.output.strip() == "q * X1*Y1"


def test_straighten_reports_bad_words() -> None:
    result = invoke("straighten", "--word", "Q1", "--k", "2")

    assert result.exit_code == 1
    assert "straighten failed" in result.output


def test_act_applies_word_to_monomial() -> None:
    result = invoke("act", "--word", "T1", "--weight", "0,1")

    assert result.exit_code == 0
    assert result.output.strip() == "t * x1"


def test_bruhat_comparison() -> None:
    assert invoke("bruhat", "1,0", "0,1").output.strip() == "true"
    assert invoke("bruhat", "0,1", "1,0").output.strip() == "false"


def test_limit_macdonald_command() -> None:
    result = invoke("limit-macdonald", "--weight", "1")

    assert result.exit_code == 0
    assert "x1" in result.output


def test_tilde_e_json_output() -> None:
    result = invoke("tilde-e", "--index", "|1", "--format", "json")
    payload = json.loads(result.output)

    assert result.exit_code == 0
    assert payload["index"] == {"lambda": [], "mu": [1]}
    assert payload["terms"] == [{"lambda": [], "mu": [1], "coeff": "1"}]


def test_tilde_e_rejects_unsorted_tail() -> None:
    result = invoke("tilde-e", "--index", "|1,2")

    assert result.exit_code != 0


def test_unknown_suite_is_a_usage_error() -> None:
    result = invoke("verify", "--suite", "everything")

    assert result.exit_code == 2


def test_verify_out_of_range_rank_fails() -> None:
    result = invoke("verify", "--suite", "bruhat", "--max-rank", "99")

    assert result.exit_code == 1
    assert "verify failed" in result.output


def test_verify_bruhat_suite_csv() -> None:
    args = ["--log-level", "WARNING", "verify", "--suite", "bruhat", "--format", "csv"]
    result = invoke(*args, "--max-rank", "1")

    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "name,instance,passed,detail"
