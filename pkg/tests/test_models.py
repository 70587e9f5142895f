import json

import pytest
from pydantic import ValidationError

from stabledaha.config import DEGREE_CEILING, RANK_CEILING
from stabledaha.models import SUITES, AsymTermRecord, RunConfig, SuiteReport


def test_run_config_defaults_and_normalization() -> None:
    cfg = RunConfig(suite="bruhat", output_format=" JSON ")

    assert cfg.output_format == "json"
    assert cfg.suite in SUITES


@pytest.mark.parametrize(
    "overrides",
    [
        {"max_rank": 0},
        {"max_rank": RANK_CEILING + 1},
        {"max_degree": DEGREE_CEILING + 1},
        {"output_format": "yaml"},
        {"suite": "everything"},
    ],
)
def test_run_config_rejects_out_of_range_values(overrides: dict) -> None:
    with pytest.raises(ValidationError):
        RunConfig(**{"suite": "eigen", **overrides})


def test_suite_report_summary() -> None:
    report = SuiteReport(suite="eigen", config=RunConfig(suite="eigen"))
    report.add("E eigenfunction", (1, 0), True)
    report.add_failures("daha relations", "k=2", ["T1 braid fails"])

    assert report.passed is False
    assert report.summary == {"checked": 2, "failed": 1}
    assert report.results[1].detail == "T1 braid fails"

    payload = json.loads(report.to_json())
    assert payload["summary"] == {"checked": 2, "failed": 1}
    assert payload["results"][0]["instance"] == "(1, 0)"


def test_empty_report_passes() -> None:
    report = SuiteReport(suite="bruhat", config=RunConfig(suite="bruhat"))

    assert report.passed is True


def test_asym_term_record_uses_lambda_alias() -> None:
    record = AsymTermRecord(lambda_=[1], mu=[], coeff="q*t")

    assert record.model_dump(by_alias=True) == {"lambda": [1], "mu": [], "coeff": "q*t"}
    assert AsymTermRecord(**{"lambda": [2], "mu": [1], "coeff": "1"}).lambda_ == [2]
