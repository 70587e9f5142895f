import pytest

from stabledaha import verify
from stabledaha.models import SUITES, RunConfig
from stabledaha.verify import SUITE_RUNNERS, run_suite


def test_every_suite_has_a_runner() -> None:
    assert set(SUITE_RUNNERS) == set(SUITES)


def test_bruhat_suite_passes_in_small_rank() -> None:
    report = run_suite(RunConfig(suite="bruhat", max_rank=2))

    assert report.passed
    assert report.summary["checked"] > 0
    assert {result.name for result in report.results} >= {
        "oracle agreement",
        "reflection raises",
    }


@pytest.mark.parametrize("suite", SUITES)
def test_suite_passes_on_a_small_box(suite: str) -> None:
    report = run_suite(RunConfig(suite=suite, max_rank=2, max_degree=1))

    assert report.results
    assert report.passed, [r for r in report.results if not r.passed]


@pytest.mark.parametrize(
    "box",
    [
        verify.DAHA_RELATIONS_BOX,
        verify.MOD_H_BOX,
        verify.TRIANGULARITY_BOX,
        verify.LIMIT_TRIANGULARITY_BOX,
        verify.Y_DISCREPANCY_BOX,
        verify.STABILITY_BOX,
        verify.LIMIT_EIGEN_BOX,
        verify.TILDE_E_BOX,
        verify.CONVERGENCE_BOX,
        verify.UPSILON_BOX,
    ],
)
def test_default_bounds_keep_whole_boxes(box: tuple[int, int]) -> None:
    cfg = RunConfig(suite="relations", max_rank=5, max_degree=8)

    assert verify._clamp(cfg, box) == box


def test_bounds_only_shrink_boxes() -> None:
    cfg = RunConfig(suite="relations", max_rank=2, max_degree=1)

    assert verify._clamp(cfg, verify.DAHA_RELATIONS_BOX) == (2, 1)
    assert verify._clamp(cfg, verify.CONVERGENCE_BOX) == (2, 1)


def test_acceptance_boxes() -> None:
    assert verify.DAHA_RELATIONS_BOX == (4, 4)
    assert verify.Y_DISCREPANCY_BOX == (4, 4)
    assert verify.LIMIT_EIGEN_BOX == (4, 4)
    assert verify.TILDE_E_BOX == (2, 4)
    assert verify.CONVERGENCE_WINDOW == 4
    assert verify.PBW_RELATIONS_MAX_RANK == 5
    assert verify.TAB_MAX_INDEX == 4
    assert verify.MOD_H_WORDS == 200
