import pytest

from stabledaha.weyl import (
    GuardError,
    RankError,
    affine_reflect,
    all_perms,
    as_order_leq,
    bruhat_leq,
    bruhat_leq_bfs_oracle,
    compose,
    cycle_perm,
    inverse_perm,
    is_strict_composition,
    kappa_min,
    pairing,
    partitions,
    perm_from_word,
    perm_length,
    reduced_word,
    sort_orbit,
    strict_part,
    transposition_word,
    u_stat,
)


def test_u_statistic() -> None:
    assert [u_stat((2, 0, 1), i) for i in (1, 2, 3)] == [1, 3, 2]


def test_u_statistic_rejects_bad_index() -> None:
    with pytest.raises(RankError):
        u_stat((1, 0), 3)


def test_affine_reflection_and_pairing() -> None:
    assert pairing(0, (2, 0)) == -1
    assert affine_reflect(0, (2, 0)) == (1, 1)
    assert affine_reflect(1, (2, 0)) == (0, 2)


def test_bruhat_order_small_cases() -> None:
    assert bruhat_leq((1, 0), (0, 1))
    assert not bruhat_leq((0, 1), (1, 0))
    assert not bruhat_leq((2, 0), (0, 1))
    assert bruhat_leq((1, 1), (2, 0))
    assert not bruhat_leq((2, 0), (1, 1))


def test_bruhat_oracle_agrees_on_small_cases() -> None:
    assert bruhat_leq_bfs_oracle((1, 1), (2, 0))
    assert not bruhat_leq_bfs_oracle((2, 0), (1, 1))
    assert bruhat_leq_bfs_oracle((1, 0, 0), (0, 0, 1))


def test_bruhat_oracle_is_guarded() -> None:
    with pytest.raises(GuardError):
        bruhat_leq_bfs_oracle((0,) * 5, (0,) * 5)


def test_almost_symmetric_order_pads_both_sides() -> None:
    assert as_order_leq(((1,), ()), ((1,), ()))
    assert as_order_leq(((1,), ()), ((0, 1), ()))
    assert not as_order_leq(((0, 1), ()), ((1,), ()))
    assert not as_order_leq(((1,), ()), ((), (1,)))


def test_strict_part_and_compositions() -> None:
    assert strict_part((2, 0, 1, 0, 0)) == (2, 0, 1)
    assert strict_part((0, 0)) == ()
    assert is_strict_composition((2, 0, 1))
    assert not is_strict_composition((1, 0))
    assert list(partitions(3)) == [(3,), (2, 1), (1, 1, 1)]


def test_permutation_helpers() -> None:
    assert compose((2, 1, 3), (1, 3, 2)) == (2, 3, 1)
    assert inverse_perm((2, 3, 1)) == (3, 1, 2)
    assert cycle_perm(3, (1, 3, 2)) == (3, 1, 2)
    assert transposition_word(1, 3) == (1, 2, 1)
    assert kappa_min((1, 2, 3)) == 0
    assert kappa_min((2, 1, 3)) == 1
    assert kappa_min((2, 3, 1)) == 2


def test_reduced_words_multiply_back() -> None:
    for w in all_perms(3):
        word = reduced_word(w)

        assert perm_from_word(word, 3) == w
        assert len(word) == perm_length(w)


def test_sort_orbit() -> None:
    assert sort_orbit((0, 2, 1)) == (2, 1, 0)
    assert sort_orbit((0, 2, 1), "antidominant") == (0, 1, 2)
