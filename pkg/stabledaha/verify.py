"""Suite runners behind ``stabledaha verify``.

Each runner walks a bounded box of instances, records one ``CheckResult`` per
instance and returns the ``SuiteReport``. The boxes below are the full
acceptance boxes; ``max_rank`` and ``max_degree`` can only shrink them.
"""

from __future__ import annotations

import logging
from itertools import product
from typing import Callable, Iterator

from . import asymfunc, daharep, pbw
from .models import RunConfig, SuiteReport
from .weyl import (
    asym_indices,
    bruhat_leq,
    bruhat_leq_bfs_oracle,
    positive_roots,
    reflect_root,
    root_pairing,
    strict_compositions,
    weights_in_box,
)

logger = logging.getLogger(__name__)

# (largest rank, largest degree) per family of checks
DAHA_RELATIONS_BOX = (4, 4)
PBW_RELATIONS_MAX_RANK = 5
TAB_MAX_INDEX = 4
MOD_H_BOX = (3, 4)
MOD_H_WORDS = 200
TRIANGULARITY_BOX = (3, 4)
LIMIT_TRIANGULARITY_BOX = (2, 4)
LIMIT_Y_MAX_INDEX = 3
Y_DISCREPANCY_BOX = (4, 4)
STABILITY_BOX = (4, 4)
STABILITY_MAX_ZEROS = 3
LIMIT_EIGEN_BOX = (4, 4)
TILDE_E_BOX = (2, 4)
CONVERGENCE_BOX = (3, 3)
CONVERGENCE_WINDOW = 4
UPSILON_BOX = (5, 4)
UPSILON_MAX_SLOTS = 2
ORD_INEQ_MAX_RANK = 4


def _clamp(cfg: RunConfig, box: tuple[int, int]) -> tuple[int, int]:
    return min(cfg.max_rank, box[0]), min(cfg.max_degree, box[1])


def _weights(rank: int, max_degree: int) -> Iterator[tuple[int, ...]]:
    for lam in weights_in_box(rank, max_degree):
        if sum(lam) <= max_degree:
            yield lam


def _positive_compositions(max_degree: int, max_length: int) -> Iterator[tuple]:
    for length in range(1, max_length + 1):
        for lam in weights_in_box(length, max_degree):
            if all(lam) and sum(lam) <= max_degree:
                yield lam


# ---------------------------------------------------------------------------
# Finite rank
# ---------------------------------------------------------------------------


def run_relations(cfg: RunConfig, report: SuiteReport) -> None:
    max_k, degree = _clamp(cfg, DAHA_RELATIONS_BOX)
    for k in range(2, max_k + 1):
        instance = f"k={k} deg<={degree}"
        report.add_failures(
            "daha relations", instance, daharep.check_daha_relations(k, degree)
        )
        report.add_failures(
            "positive system", instance, daharep.check_pos_system(k, degree)
        )
    for k in range(1, min(cfg.max_rank, PBW_RELATIONS_MAX_RANK) + 1):
        report.add_failures("pbw relations", f"k={k}", pbw.check_relations(k))
        report.add_failures(
            "tab identities", f"k={k}", pbw.check_tab_identities(k, TAB_MAX_INDEX)
        )
    k, degree = _clamp(cfg, MOD_H_BOX)
    words = list(pbw.random_words(k, degree, MOD_H_WORDS, cfg.seed))
    for word in words:
        report.add("mod-h normal form", pbw.render_word(word), pbw.check_mod_h(word, k))
    for left, right in zip(words[:20], words[20:40]):
        instance = f"{pbw.render_word(left)} | {pbw.render_word(right)}"
        report.add("associativity", instance, pbw.check_associativity(left, right, k))


def run_triangularity(cfg: RunConfig, report: SuiteReport) -> None:
    max_k, degree = _clamp(cfg, TRIANGULARITY_BOX)
    for k in range(1, max_k + 1):
        for lam in _weights(k, degree):
            for i in range(1, k + 1):
                instance = f"lambda={lam} i={i}"
                report.add(
                    "Y triangularity", instance, daharep.check_Y_triangularity(i, lam)
                )
                report.add(
                    "deformed Y triangularity",
                    instance,
                    daharep.check_Y_triangularity(i, lam, deformed=True),
                )
    max_k, degree = _clamp(cfg, Y_DISCREPANCY_BOX)
    for k in range(1, max_k + 1):
        for lam in _weights(k, degree):
            for i in range(1, k + 1):
                report.add(
                    "Y minus deformed Y",
                    f"lambda={lam} i={i}",
                    daharep.check_Y_minus_Ytilde(i, lam),
                )
    max_length, degree = _clamp(cfg, LIMIT_TRIANGULARITY_BOX)
    for index in asym_indices(degree, max_length):
        for i in range(1, LIMIT_Y_MAX_INDEX + 1):
            report.add(
                "limit Y triangularity",
                f"{index} i={i}",
                asymfunc.check_cY_triangularity(index, i),
            )


def run_eigen(cfg: RunConfig, report: SuiteReport) -> None:
    for k in range(1, min(cfg.max_rank, 4) + 1):
        degree = min(cfg.max_degree, 5 if k <= 3 else 4)
        for lam in _weights(k, degree):
            report.add("E eigenfunction", lam, daharep.check_eigen(lam))
            report.add("E leading term", lam, daharep.check_E_triangular(lam))
            if k <= 3:
                report.add(
                    "E chain independence",
                    lam,
                    daharep.check_E_chain_independence(lam),
                )
                report.add("intertwiner x1 omega^-1", lam, daharep.check_int2(lam))
                if any(lam):
                    report.add("intertwiner star", lam, daharep.check_int3(lam))
        report.add(
            "Y product scalar", f"k={k}", daharep.y_scalar_check(k, min(degree, 3))
        )


# ---------------------------------------------------------------------------
# Limits
# ---------------------------------------------------------------------------


def _run_stability(cfg: RunConfig, report: SuiteReport) -> None:
    max_length, degree = _clamp(cfg, STABILITY_BOX)
    for lam in _positive_compositions(degree, max_length):
        report.add("divisibility", lam, daharep.check_divisibility_lemma(lam))
        for n in range(1, STABILITY_MAX_ZEROS + 1):
            report.add(
                "E stability", f"{lam} n={n}", daharep.check_E_stability(lam, n)
            )


def _run_limit_macdonald(cfg: RunConfig, report: SuiteReport) -> None:
    max_length, degree = _clamp(cfg, LIMIT_EIGEN_BOX)
    for lam in strict_compositions(degree, max_length):
        report.add("limit eigenfunction", lam, asymfunc.check_limit_eigen(lam))
        for i in range(1, len(lam)):
            if lam[i - 1] > lam[i]:
                report.add(
                    "limit intertwiner",
                    f"{lam} i={i}",
                    asymfunc.check_limit_intertwiner(lam, i),
                )
    max_length, degree = _clamp(cfg, TILDE_E_BOX)
    for lam, mu in asym_indices(degree, max_length):
        report.add("tilde E", f"{lam}|{mu}", asymfunc.check_tilde_E(lam, mu))


def _run_convergence(cfg: RunConfig, report: SuiteReport) -> None:
    max_length, degree = _clamp(cfg, CONVERGENCE_BOX)
    for index in asym_indices(degree, max_length):
        F = asymfunc.basis_element(*index)
        for i in range(1, len(index[0]) + 2):
            start = max(4, F.rank, i)
            ranks = range(start, start + CONVERGENCE_WINDOW)
            report.add(
                "limit Y convergence",
                f"{index} i={i} n={start}..{ranks[-1]}",
                asymfunc.verify_limit_convergence(i, F, ranks),
            )
            report.add(
                "Y discrepancy order",
                f"{index} i={i} n={start + 1}",
                asymfunc.check_Y_limit_discrepancy(i, index, start + 1),
            )
            report.add(
                "truncation commutes",
                f"{index} i={i} n={start + 1}",
                asymfunc.check_truncation_compatibility(i, F, start + 1),
            )
    for lam in ((0, 1), (0, 2), (1, 1)):
        report.add(
            "tail symmetrizer limit",
            f"{lam} k=1",
            asymfunc.check_symmetrizer_limit(
                1, asymfunc.basis_element(lam, ()), range(2, 6)
            ),
        )
    member, limit = asymfunc.elementary_sequence(1)
    report.add(
        "elementary sequence",
        "i=1",
        asymfunc.verify_sequence_limit(member, limit, range(1, 5)),
    )


def run_limits(cfg: RunConfig, report: SuiteReport) -> None:
    _run_stability(cfg, report)
    _run_limit_macdonald(cfg, report)
    _run_convergence(cfg, report)


def run_bruhat(cfg: RunConfig, report: SuiteReport) -> None:
    entries = 3
    for k in range(1, min(cfg.max_rank, 3) + 1):
        box = list(weights_in_box(k, entries))
        for lam, mu in product(box, repeat=2):
            agree = bruhat_leq(lam, mu) == bruhat_leq_bfs_oracle(lam, mu)
            report.add("oracle agreement", f"{lam} <= {mu}", agree)
            if sorted(lam) == sorted(mu) and bruhat_leq(lam, mu):
                report.add("last position", f"{lam} <= {mu}", lam[-1] <= mu[-1])
        for lam in box:
            for n, i, j in positive_roots(k, 2):
                value = root_pairing(n, i, j, lam)
                if value == 0:
                    continue
                reflected = reflect_root(n, i, j, lam)
                report.add(
                    "reflection raises",
                    f"{lam} root=({n},{i},{j})",
                    bruhat_leq(lam, reflected) == (value > 0),
                )


# ---------------------------------------------------------------------------
# PBW order bounds
# ---------------------------------------------------------------------------


def _std_words(max_degree: int, max_slots: int) -> Iterator[pbw.StdWord]:
    for r in range(1, max_slots + 1):
        for split in product(range(max_degree + 1), repeat=r):
            if sum(split) > max_degree:
                continue
            choices = [
                ["".join(letters) for letters in product("XY", repeat=d)]
                for d in split
            ]
            for slots in product(*choices):
                yield pbw.StdWord(slots=slots)


def run_pbw_bounds(cfg: RunConfig, report: SuiteReport) -> None:
    max_k, degree = _clamp(cfg, UPSILON_BOX)
    for sw in _std_words(degree, UPSILON_MAX_SLOTS):
        for k in range(sw.r, max_k + 1):
            report.add_failures(
                "ord >= kappa", f"{sw.slots} k={k}", pbw.verify_upsilon_bound(sw, k)
            )
    for N in range(2, min(cfg.max_rank, pbw.PARTS_MAX_RANK) + 1):
        report.add_failures("parts and yz", f"N={N}", pbw.verify_parts_and_yz(N))
    for k in range(2, min(cfg.max_rank, ORD_INEQ_MAX_RANK) + 1):
        report.add_failures("ord inequality", f"k={k}", pbw.verify_ord_ineq(k))
    for variant in ("reversed", "t-first", "t-first-reversed"):
        report.add(
            "other spanning sets",
            f"{variant} k=2 D=2",
            pbw.verify_other_bases(2, 2, variant),  # type: ignore[arg-type]
        )


def _main_theorem_words(max_m: int, max_gap: int) -> Iterator[pbw.StdWord]:
    for m in range(1, max_m + 1):
        for gaps in product(range(max_gap + 1), repeat=m + 1):
            if sum(gaps) <= max_gap:
                yield pbw.StdWord(slots=(pbw.word_from_gaps(gaps),))


TWO_SLOT_WORDS = (
    pbw.StdWord(slots=("YX", "Y"), perm=(2, 1)),
    pbw.StdWord(slots=("XY", "YX"), perm=(2, 1)),
    pbw.StdWord(slots=("Y", "XYX"), perm=(2, 1)),
)


def run_main_theorem(cfg: RunConfig, report: SuiteReport) -> None:
    # single-slot words run at k = m + 3, two rank steps above the m bound
    max_m = min(cfg.max_rank - 1, 2)
    for sw in _main_theorem_words(max_m, min(cfg.max_degree, 3)):
        k = sw.m()[0] + 3
        report.add_failures(
            "main theorem", f"{sw.slots} k={k}", pbw.verify_main_theorem(sw, k)
        )
    for sw in TWO_SLOT_WORDS:
        k = sum(sw.m()) + sw.r
        if k > cfg.max_rank + 2:
            continue
        report.add_failures(
            "main theorem",
            f"{sw.slots} w={sw.w} k={k}",
            pbw.verify_main_theorem(sw, k),
        )


SUITE_RUNNERS: dict[str, Callable[[RunConfig, SuiteReport], None]] = {
    "relations": run_relations,
    "triangularity": run_triangularity,
    "eigen": run_eigen,
    "limits": run_limits,
    "pbw-bounds": run_pbw_bounds,
    "main-theorem": run_main_theorem,
    "bruhat": run_bruhat,
}


def run_suite(cfg: RunConfig) -> SuiteReport:
    report = SuiteReport(suite=cfg.suite, config=cfg)
    logger.info(
        f"Running suite '{cfg.suite}' (max_rank={cfg.max_rank}, "
        f"max_degree={cfg.max_degree}, seed={cfg.seed})"
    )
    SUITE_RUNNERS[cfg.suite](cfg, report)
    failed = [result for result in report.results if not result.passed]
    for result in failed:
        logger.warning(f"{result.name} failed on {result.instance}: {result.detail}")
    logger.info(
        f"Suite '{cfg.suite}' finished: {len(report.results)} checks, "
        f"{len(failed)} failed"
    )
    return report
