from fractions import Fraction

import pytest

from stabledaha.coeffring import (
    INFINITY,
    QH,
    QT,
    CoefficientError,
    evaluate_qh,
    h_order,
    h_part,
    needs_parentheses,
    qh_h,
    qh_q,
    qt_factorial,
    qt_int,
    ratqt,
    ratqt_arith,
    reduce_mod_h,
    render_qh,
    render_ratqt,
    safe_div,
    t,
    t_order,
)


def test_h_order_of_zero_is_infinite() -> None:
    assert h_order(QH(0)) == INFINITY
    assert h_order(qh_q * qh_h**2 + qh_h**3) == 2


def test_h_part_and_reduction_mod_h() -> None:
    a = qh_q * qh_h**2 + 3 * qh_h**2 + qh_q

    assert h_part(a, 2) == qh_q + 3
    assert h_part(a, 1) == 0
    assert reduce_mod_h(qh_q + qh_h) == qh_q


def test_evaluate_qh_at_rational_point() -> None:
    value = evaluate_qh(qh_q * qh_h + 1, Fraction(2, 3), Fraction(5, 7))

    assert value == Fraction(31, 21)


def test_t_integers_and_orders() -> None:
    assert qt_int(3) == 1 + t + t**2
    assert qt_factorial(3) == (1 + t) * (1 + t + t**2)
    assert t_order(t**2 / (1 - t)) == 2
    assert t_order(QT(0)) == INFINITY


def test_ratqt_coerces_fractions() -> None:
    assert ratqt(Fraction(3, 4)) == QT(3) / QT(4)

    with pytest.raises(CoefficientError):
        ratqt("q")


def test_division_by_zero_raises() -> None:
    with pytest.raises(CoefficientError):
        safe_div(QT(1), QT(0))


def test_needs_parentheses_only_for_sums() -> None:
    assert needs_parentheses("-t + 1")
    assert needs_parentheses("(q - t)/q")
    assert not needs_parentheses("-q*h")
    assert not needs_parentheses("(1 - t)")


def test_field_arithmetic_by_name() -> None:
    assert ratqt_arith(t, QT(1), "add") == t + 1
    assert ratqt_arith(t, t, "div") == 1
    with pytest.raises(CoefficientError):
        ratqt_arith(t, QT(0), "div")
    with pytest.raises(CoefficientError):
        ratqt_arith(t, t, "pow")  # type: ignore[arg-type]


def test_rendering_of_coefficients() -> None:
    assert render_ratqt(t) == "t"
    assert render_ratqt(QT(0)) == "0"
    assert render_qh(qh_q * qh_h) == "q*h"
