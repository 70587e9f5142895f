import pytest

from stabledaha.coeffring import q, t
from stabledaha.polyring import LaurentPoly, poly_arith, x
from stabledaha.weyl import RankError


def test_rendering_is_graded_lexicographic() -> None:
    f = x(1, 2) + x(2, 2)

    assert str(f) == "x1 + x2"
    assert str(LaurentPoly.constant(2)) == "1"
    assert str(LaurentPoly.zero(2)) == "0"
    assert str(x(1, 2) * x(1, 2) - x(2, 2).scale(t)) == "x1^2 - t * x2"


def test_swap_and_permute() -> None:
    f = x(1, 3) * x(1, 3) * x(3, 3)

    assert f.swap(2) == x(1, 3) * x(1, 3) * x(2, 3)
    assert f.permute((2, 3, 1)) == x(2, 3) * x(2, 3) * x(1, 3)


def test_swap_outside_rank_raises() -> None:
    with pytest.raises(RankError):
        x(1, 2).swap(2)


def test_divided_difference() -> None:
    assert x(1, 2).divided_difference(1) == LaurentPoly.constant(2)
    assert x(2, 2).divided_difference(1) == LaurentPoly.constant(2, -1)
    assert (x(1, 2) * x(1, 2)).divided_difference(1) == x(1, 2) + x(2, 2)
    assert (x(1, 2) * x(2, 2)).divided_difference(1) == LaurentPoly.zero(2)


def test_evaluate_at_zero_last_drops_a_variable() -> None:
    f = x(1, 2) + x(2, 2) + x(1, 2) * x(2, 2)

    assert f.evaluate_at_zero_last() == x(1, 1)


def test_substitution_with_coefficients() -> None:
    f = x(1, 2) * x(2, 2)
    images = [(q, (0, 1)), (1, (1, 0))]

    assert f.substitute(images) == (x(1, 2) * x(2, 2)).scale(q)


def test_laurent_shift() -> None:
    f = x(1, 2).shift((-1, 1))

    assert f == x(2, 2)
    assert LaurentPoly.monomial((-1, 0)).is_polynomial() is False


def test_poly_arith_dispatch() -> None:
    f, g = x(1, 2), x(2, 2)

    assert poly_arith(f, g, "add") == f + g
    assert poly_arith(f, g, "sub") == f - g
    assert poly_arith(f, g, "mul") == f * g
    with pytest.raises(ValueError):
        poly_arith(f, g, "div")


def test_swaps_satisfy_the_braid_relation() -> None:
    f = x(1, 3) * x(1, 3) * x(2, 3) + x(3, 3).scale(q)

    assert f.swap(1).swap(1) == f
    assert f.swap(1).swap(2).swap(1) == f.swap(2).swap(1).swap(2)
