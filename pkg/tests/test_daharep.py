import pytest

from stabledaha.coeffring import q, t
from stabledaha.daharep import (
    apply_omega,
    apply_T,
    apply_T_inv,
    apply_word,
    apply_Y,
    apply_Y_deformed,
    check_daha_relations,
    check_divisibility_lemma,
    check_E_chain_independence,
    check_E_stability,
    check_E_triangular,
    check_eigen,
    check_int2,
    check_int3,
    check_pos_system,
    check_Y_minus_Ytilde,
    check_Y_triangularity,
    macdonald_E,
    spectral_vector,
    symmetrizer_eps,
)
from stabledaha.polyring import LaurentPoly, x
from stabledaha.weyl import RankError


def test_demazure_lusztig_on_degree_one() -> None:
    assert apply_T(1, LaurentPoly.constant(2)) == LaurentPoly.constant(2)
    assert apply_T(1, x(1, 2)) == x(2, 2) + x(1, 2).scale(1 - t)
    assert apply_T(1, x(2, 2)) == x(1, 2).scale(t)
    assert apply_T_inv(1, x(1, 2)) == x(2, 2).scale(t**-1)


def test_omega_shifts_variables() -> None:
    assert apply_omega(x(1, 2)) == x(2, 2).scale(q**-1)
    assert apply_omega(x(2, 2), inverse=True) == x(1, 2).scale(q)


def test_cherednik_operators_on_x1() -> None:
    assert apply_Y(1, x(1, 2)) == x(1, 2).scale(q * t)
    assert apply_Y(2, x(1, 2)) == x(1, 2).scale(t**2)
    assert apply_Y_deformed(1, x(1, 2)) == x(1, 2).scale(q * t)
    assert not apply_Y_deformed(1, LaurentPoly.constant(2))


def test_operator_words_act_right_to_left() -> None:
    word = [("T", 1), ("X", 1)]

    assert apply_word(word, LaurentPoly.constant(2)) == x(2, 2) + x(1, 2).scale(1 - t)


def test_unknown_atom_raises() -> None:
    with pytest.raises(RankError):
        apply_word([("Z", 1)], LaurentPoly.constant(2))


def test_spectral_vector() -> None:
    assert spectral_vector((0, 0)) == [t**2, t]
    assert spectral_vector((1, 0)) == [q * t, t**2]


def test_small_macdonald_polynomials() -> None:
    assert macdonald_E((0, 0)) == LaurentPoly.constant(2)
    assert macdonald_E((1, 0)) == x(1, 2)
    assert macdonald_E((1, 1, 0)) == x(1, 3) * x(2, 3)
    assert macdonald_E((0, 1)) == x(2, 2) + x(1, 2).scale((1 - t) * q / (q - t))


def test_macdonald_polynomials_are_eigenfunctions() -> None:
    for lam in [(1, 0), (0, 1), (2, 0), (0, 2), (1, 1), (2, 1), (0, 1, 0), (1, 0, 1)]:
        assert check_eigen(lam)
        assert check_E_triangular(lam)


def test_intertwiner_chain_does_not_matter() -> None:
    assert check_E_chain_independence((0, 1, 2))
    assert check_int2((1, 0, 1))


def test_negative_weight_is_rejected() -> None:
    with pytest.raises(RankError):
        macdonald_E((-1, 0))


def test_daha_relations_rank_two() -> None:
    assert check_daha_relations(2, 2) == []


def test_tail_symmetrizer() -> None:
    f = x(1, 3) * (x(2, 3) + x(3, 3))

    assert symmetrizer_eps(1, f) == f
    assert symmetrizer_eps(1, x(2, 2)) == x(2, 2)
    assert symmetrizer_eps(0, x(1, 2)) == (x(1, 2) + x(2, 2)).scale(1 / (1 + t))


@pytest.mark.parametrize("i, lam", [(1, (0, 1)), (1, (1, 0)), (2, (1, 0, 2))])
def test_deformed_y_differs_on_zero_entries(i: int, lam: tuple) -> None:
    assert check_Y_minus_Ytilde(i, lam)


def test_deformed_y_difference_in_rank_two() -> None:
    f = LaurentPoly.monomial((0, 1))

    assert apply_Y(1, f) - apply_Y_deformed(1, f) == x(2, 2).scale(t**2)


@pytest.mark.parametrize("lam", [(0, 1), (1, 0), (2, 1), (0, 1, 1), (1, 0, 2)])
@pytest.mark.parametrize("deformed", [False, True])
def test_y_is_triangular(lam: tuple, deformed: bool) -> None:
    for i in range(1, len(lam) + 1):
        assert check_Y_triangularity(i, lam, deformed)


def test_positive_system_relations() -> None:
    assert check_pos_system(2, 2) == []
    assert check_pos_system(3, 1) == []


def test_stability_under_trailing_zeros() -> None:
    assert check_E_stability((1,), 1)
    assert check_E_stability((1,), 3)
    assert check_E_stability((2, 1), 1)
    with pytest.raises(RankError):
        check_E_stability((1,), 0)


def test_divisibility_lemma() -> None:
    assert check_divisibility_lemma((1,))
    assert check_divisibility_lemma((2, 1))
    assert check_divisibility_lemma((1, 1, 0))
    with pytest.raises(RankError):
        check_divisibility_lemma((0, 1))


@pytest.mark.parametrize("lam", [(1,), (0, 1), (1, 0), (2, 0, 1)])
def test_third_intertwiner(lam: tuple) -> None:
    assert check_int3(lam)
