import pytest

from stabledaha import asymfunc
from stabledaha.asymfunc import (
    AsymFn,
    basis_element,
    check_cY_triangularity,
    check_limit_eigen,
    check_limit_intertwiner,
    check_symmetrizer_limit,
    check_tilde_E,
    check_truncation_compatibility,
    check_Y_limit_discrepancy,
    elementary_sequence,
    from_mas_basis,
    limit_macdonald,
    limit_symmetrizer,
    limit_T,
    limit_Y,
    lower_rank,
    raise_rank,
    tilde_E,
    to_mas_basis,
    truncate,
    v_factor,
    verify_limit_convergence,
    verify_sequence_limit,
)
from stabledaha.coeffring import q, t
from stabledaha.polyring import x
from stabledaha.symfunc import m
from stabledaha.weyl import RankError


def test_basis_coordinates_of_simple_functions() -> None:
    assert to_mas_basis(basis_element((1,), (1,))) == {((1,), (1,)): 1}
    assert to_mas_basis(AsymFn.from_symmetric(m((2,)))) == {((), (2,)): 1}


def test_raising_the_rank_keeps_the_function() -> None:
    raised = raise_rank(AsymFn.from_symmetric(m((1,)), 1), 2)

    assert raised.terms == {((0, 1), ()): 1, ((0, 0), (1,)): 1}
    assert raise_rank(AsymFn.from_symmetric(m((1, 1))), 1) == AsymFn(
        1, {((1,), (1,)): 1, ((0,), (1, 1)): 1}
    )
    assert lower_rank(raised).rank == 1


def test_basis_round_trip() -> None:
    coords = {((2, 0, 1), (1,)): q, ((), (2,)): 1}

    assert to_mas_basis(from_mas_basis(coords)) == coords


def test_truncation() -> None:
    assert truncate(AsymFn.from_symmetric(m((1,))), 2) == x(1, 2) + x(2, 2)
    assert truncate(basis_element((1,), (1,)), 3) == (
        x(1, 3) * x(2, 3) + x(1, 3) * x(3, 3)
    )


def test_truncation_needs_enough_variables() -> None:
    with pytest.raises(RankError):
        truncate(basis_element((1, 1), ()), 1)


def test_non_strict_finite_part_is_rejected() -> None:
    with pytest.raises(RankError):
        basis_element((1, 0), ())


def test_limit_t_acts_on_the_finite_part() -> None:
    F = limit_T(1, basis_element((1,), ()))

    assert F == AsymFn.from_poly(x(2, 2) + x(1, 2).scale(1 - t))


def test_limit_y_on_degree_one() -> None:
    assert limit_Y(1, basis_element((1,), ())) == basis_element((1,), ()).scale(q * t)
    assert not limit_Y(1, AsymFn.from_symmetric(m((1,))))


def test_limit_macdonald_of_one_row() -> None:
    assert limit_macdonald((1,)) == basis_element((1,), ())
    assert limit_macdonald((1, 0, 0)) == basis_element((1,), ())
    assert check_limit_eigen((1,))


def test_limit_y_is_triangular() -> None:
    assert check_cY_triangularity(((1,), ()), 1)
    assert check_cY_triangularity(((), (1,)), 1)
    assert check_cY_triangularity(((1,), (1,)), 1)


def test_multiplicity_factor() -> None:
    assert v_factor((2, 2, 1)) == 1 + t
    assert v_factor(()) == 1


def test_truncation_commutes_with_finite_operators() -> None:
    assert check_truncation_compatibility(1, basis_element((1,), (1,)), 3)
    assert check_truncation_compatibility(2, basis_element((0, 1), ()), 3)


def test_limit_intertwiner() -> None:
    assert check_limit_intertwiner((2, 1), 1)
    with pytest.raises(RankError):
        check_limit_intertwiner((1, 2), 1)


def test_tail_symmetrizers_converge() -> None:
    assert check_symmetrizer_limit(1, basis_element((0, 1), ()), range(2, 5))
    assert check_symmetrizer_limit(1, basis_element((1,), ()), range(2, 5))


def test_tail_symmetrizer_limit_of_one_variable() -> None:
    symmetrized = limit_symmetrizer(0, basis_element((1,), ()))

    assert symmetrized == AsymFn.from_symmetric(m((1,))).scale(1 - t)
    assert limit_symmetrizer(1, basis_element((1,), ())) == basis_element((1,), ())


def test_tilde_E_of_a_single_tail_box() -> None:
    F = tilde_E((), (1,))

    assert F == AsymFn.from_symmetric(m((1,)))
    assert not limit_Y(1, F)
    assert check_tilde_E((), (1,))


@pytest.mark.parametrize(
    "index", [((), ()), ((1,), ()), ((0, 1), ()), ((1,), (1,)), ((), (1, 1))]
)
def test_tilde_E_is_an_eigenfunction(index: tuple) -> None:
    assert check_tilde_E(*index)


def test_tilde_E_rejects_bad_indices() -> None:
    with pytest.raises(ValueError):
        tilde_E((), (1, 2))
    with pytest.raises(RankError):
        tilde_E((0,), ())


def test_limit_macdonald_with_a_leading_zero() -> None:
    E01 = limit_macdonald((0, 1))

    assert E01 == limit_T(1, limit_macdonald((1, 0)))
    assert limit_macdonald((1, 0)) == AsymFn.from_poly(x(1, 1))
    assert check_limit_eigen((0, 1))


@pytest.mark.parametrize("lam", [(), (1,), (0, 1), (1, 0, 1), (2,), (1, 1)])
def test_limit_eigen_equations(lam: tuple) -> None:
    assert check_limit_eigen(lam)


def test_reconstruction_compares_three_ranks(monkeypatch: pytest.MonkeyPatch) -> None:
    requested: list[int] = []
    finite = asymfunc.macdonald_E

    def recording(lam):
        requested.append(len(lam))
        return finite(lam)

    monkeypatch.setattr(asymfunc, "macdonald_E", recording)
    asymfunc._limit_macdonald.cache_clear()
    try:
        limit_macdonald((1,))
    finally:
        asymfunc._limit_macdonald.cache_clear()

    assert sorted(set(requested)) == [1, 2, 3]


def test_y_convergence_on_a_tail_box() -> None:
    F = AsymFn.from_symmetric(m((1,)))

    assert verify_limit_convergence(1, F, range(3, 7))
    assert verify_limit_convergence(1, AsymFn.one(), range(4, 8))
    assert verify_limit_convergence(2, basis_element((1,), ()), range(4, 8))


@pytest.mark.parametrize(
    "i, index", [(1, ((), (1,))), (1, ((1,), ())), (2, ((0, 1), ())), (1, ((), ()))]
)
def test_y_limit_discrepancy(i: int, index: tuple) -> None:
    assert check_Y_limit_discrepancy(i, index, 5)


def test_elementary_sequence_converges() -> None:
    member, limit = elementary_sequence(1)

    assert verify_sequence_limit(member, limit, range(1, 5))


def test_sequence_limit_needs_strictly_growing_orders() -> None:
    limit = basis_element((1,), ())

    def exact(n: int):
        return truncate(limit, n)

    def stalled(n: int):
        return truncate(limit, n) + x(1, n).scale(t**5)

    assert verify_sequence_limit(exact, limit, range(1, 5))
    assert not verify_sequence_limit(stalled, limit, range(1, 5))
    assert not verify_sequence_limit(stalled, limit, range(4, 8), slack=1)
