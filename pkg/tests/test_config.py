from stabledaha.config import DEGREE_CEILING, RANK_CEILING, get_runtime_config_errors


def test_runtime_config_allows_defaults() -> None:
    errors = get_runtime_config_errors(max_degree=8, max_rank=4, output_format="text")

    assert errors == []


def test_runtime_config_rejects_out_of_range_settings() -> None:
    errors = get_runtime_config_errors(
        max_degree=DEGREE_CEILING + 1,
        max_rank=0,
        output_format="yaml",
    )

    assert errors == [
        f"MAX_DEGREE must be between 1 and {DEGREE_CEILING}",
        f"MAX_RANK must be between 1 and {RANK_CEILING}",
        "OUTPUT_FORMAT must be one of text, json, csv",
    ]
