import pytest

from stabledaha.coeffring import t
from stabledaha.polyring import x
from stabledaha.symfunc import (
    DEGREE_CAP,
    DegreeOverflowError,
    SymFn,
    add_letter,
    basis_convert,
    e,
    eval_finite,
    h,
    h_one_minus_t,
    hall_littlewood_Q,
    m,
    p,
    pleth_one_minus_t,
    power_sum_oracle,
    remove_letter,
    to_basis,
)


def test_classical_expansions() -> None:
    assert h(2) == m((2,)) + m((1, 1))
    assert p(2) == m((2,))
    assert e(2) == m((1, 1))
    assert m((1,)) * m((1,)) == m((2,)) + m((1, 1)).scale(2)


def test_basis_change_round_trip() -> None:
    coords = to_basis(h(3), "p")

    assert basis_convert(coords, "p", "m") == h(3).terms
    assert to_basis(p(2) * p(1), "p") == {(2, 1): 1}


def test_plethysm_by_one_minus_t() -> None:
    assert pleth_one_minus_t(h(1)) == m((1,)).scale(1 - t)
    assert pleth_one_minus_t(h(2)) == h_one_minus_t(2)
    assert h_one_minus_t(2) == m((2,)).scale(1 - t) + m((1, 1)).scale((1 - t) ** 2)
    assert h_one_minus_t(0) == SymFn.one()


def test_adding_and_removing_a_letter() -> None:
    assert add_letter(m((1,))) == {1: SymFn.one(), 0: m((1,))}
    assert add_letter(m((1, 1))) == {0: m((1, 1)), 1: m((1,))}
    assert add_letter(m((2, 1))) == {0: m((2, 1)), 1: m((2,)), 2: m((1,))}
    assert remove_letter(m((1,))) == {0: m((1,)), 1: -SymFn.one()}


def test_finite_evaluation() -> None:
    assert eval_finite(m((1,)), 2, 1, 2) == x(1, 2) + x(2, 2)
    assert eval_finite(m((2,)), 2, 1, 2) == x(1, 2) ** 2 + x(2, 2) ** 2
    assert not eval_finite(m((1, 1)), 1, 1, 1)
    assert eval_finite(m((1,)), 3, 2, 2) == x(2, 3) + x(3, 3)


def test_hall_littlewood_q_functions() -> None:
    assert hall_littlewood_Q((1,)) == m((1,)).scale(1 - t)
    assert hall_littlewood_Q((2,)) == h_one_minus_t(2)
    assert hall_littlewood_Q((1, 1)) == m((1, 1)).scale((1 - t) * (1 - t**2))


def test_degree_cap_is_enforced() -> None:
    with pytest.raises(DegreeOverflowError):
        m((DEGREE_CAP + 1,))


def test_power_sum_oracle_agrees_with_monomial_evaluation() -> None:
    assert power_sum_oracle(h(2), 2) == eval_finite(h(2), 2, 1, 2)
    assert power_sum_oracle(h(2), 2, True) == eval_finite(h_one_minus_t(2), 2, 1, 2)
