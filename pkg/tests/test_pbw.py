import logging

import pytest
from pydantic import ValidationError

from stabledaha.coeffring import qh_h, qh_q
from stabledaha.pbw import (
    PBWElem,
    StdWord,
    WordSyntaxError,
    check_associativity,
    check_mod_h,
    check_relations,
    check_tab_identities,
    dominance_leq,
    ev0_normal_form,
    gap_sequence,
    m_special,
    m_special_multi,
    match_special,
    parse_word,
    render_word,
    straighten,
    verify_main_theorem,
    verify_ord_ineq,
    verify_other_bases,
    verify_parts,
    verify_parts_and_yz,
    verify_upsilon_bound,
    word_from_gaps,
    z_index,
)
from stabledaha.weyl import GuardError, RankError

ID2, S1 = (1, 2), (2, 1)


def basis(mu, nu, w, coeff=1) -> PBWElem:
    return PBWElem.basis(mu, nu, w).scale(coeff)


def test_parse_and_render_words() -> None:
    word = parse_word("Y1 T1^-1*X2")

    assert word == (("Y", 1), ("Tinv", 1), ("X", 2))
    assert render_word(word) == "Y1 T1^-1 X2"


@pytest.mark.parametrize("text", ["Z1", "X0", "Y1^-1", "T"])
def test_parse_word_rejects_bad_atoms(text: str) -> None:
    with pytest.raises(WordSyntaxError):
        parse_word(text)


def test_generator_outside_rank_raises() -> None:
    with pytest.raises(RankError):
        straighten(parse_word("T2"), 2)


def test_hecke_quadratic_relation() -> None:
    expected = PBWElem.one(2) + basis((0, 0), (0, 0), S1, qh_h)

    assert straighten(parse_word("T1 T1"), 2) == expected
    assert straighten(parse_word("T1 T1^-1"), 2) == PBWElem.one(2)
    assert str(straighten(parse_word("T1 T1"), 2)) == "1 + h * T1"


def test_y_past_x_in_rank_two() -> None:
    q, h = qh_q, qh_h

    assert straighten(parse_word("Y1 X1"), 2) == (
        basis((1, 0), (1, 0), ID2, q) + basis((1, 0), (1, 0), S1, q * h)
    )
    assert straighten(parse_word("Y1 X2"), 2) == (
        basis((0, 1), (1, 0), ID2) - basis((1, 0), (1, 0), S1, q * h)
    )
    assert straighten(parse_word("Y2 X2"), 2) == (
        basis((0, 1), (0, 1), ID2, q) + basis((1, 0), (1, 0), S1, q * h)
    )


def test_rendering_of_a_straightened_word() -> None:
    assert str(straighten(parse_word("Y1 X2"), 2)) == "X2*Y1 - q*h * X1*Y1*T1"


def test_cross_relations() -> None:
    assert straighten(parse_word("Y1 T1 X1"), 2) == basis((0, 1), (1, 0), S1)
    assert straighten(parse_word("T1 Y1 T1"), 2) == basis((0, 0), (0, 1), ID2)
    assert straighten(parse_word("Y1 X1 X2"), 2) == basis((1, 1), (1, 0), ID2, qh_q)


def test_diagonal_rule_in_rank_three() -> None:
    q, h = qh_q, qh_h
    expected = (
        basis((1, 0, 0), (1, 0, 0), (1, 2, 3), q)
        + basis((1, 0, 0), (1, 0, 0), (2, 1, 3), q * h)
        + basis((1, 0, 0), (1, 0, 0), (3, 2, 1), q * h)
    )

    assert straighten(parse_word("Y1 X1"), 3) == expected


def test_mod_h_image_matches_permutation_action() -> None:
    for text in ["Y1 X1", "T1 X1 Y2", "X2 T1^-1 Y1 X1", "Y2 Y1 X2 X1 T1"]:
        assert check_mod_h(parse_word(text), 2)

    assert ev0_normal_form(parse_word("Y1 X1"), 2) == basis((1, 0), (1, 0), ID2, qh_q)


def test_defining_relations_hold() -> None:
    assert check_relations(1) == []
    assert check_relations(2) == []
    assert check_relations(3) == []


def test_tab_identities_hold() -> None:
    assert check_tab_identities(2) == []
    assert check_tab_identities(3) == []
    assert check_tab_identities(3, 2) == []


def test_gap_sequences() -> None:
    assert gap_sequence("XXYXXXYYXYXXXX") == (4, 1, 0, 3, 2)
    assert word_from_gaps((4, 1, 0, 3, 2)) == "XXYXXXYYXYXXXX"
    assert z_index((0, 0, 2)) == 2
    assert z_index((0, 1, 0)) == 1
    assert z_index((0, 0)) == 1


def test_dominance_order() -> None:
    assert dominance_leq((1, 1), (2, 0))
    assert not dominance_leq((2, 0), (1, 1))
    assert dominance_leq((0, 1, 1), (1, 0, 1))


def test_special_index() -> None:
    assert m_special((1, 0), 3, 1, 1, 3) == ((1, 0, 0), (1, 0, 0), (3, 2, 1))
    assert m_special((0, 2), 3, 1, 1, 3) == ((2, 0, 0), (1, 0, 0), (1, 2, 3))


def test_special_index_over_slots() -> None:
    key = m_special_multi([(1, 0)], 3)

    assert key == ((1, 0, 0), (1, 0, 0), (3, 2, 1))
    assert key == m_special((1, 0), 3, 1, 1, 3)
    assert match_special(key, 3, [1]) == [(((1, 0),), (1,))]
    with pytest.raises(RankError):
        m_special_multi([(1, 0), (0, 1)], 3)


def test_standard_word_validation() -> None:
    sw = StdWord(slots=("XY", "Y"), perm=(2, 1))

    assert sw.m() == (1, 1)
    assert sw.gaps() == ((0, 1), (0, 0))
    assert sw.word()[-1] == ("T", 1)

    with pytest.raises(ValidationError):
        StdWord(slots=("XZ",))
    with pytest.raises(ValidationError):
        StdWord(slots=("X", "Y"), perm=(1, 1))
    with pytest.raises(ValidationError):
        StdWord(slots=())


def test_order_bounds_on_small_words() -> None:
    assert verify_upsilon_bound(StdWord(slots=("YX", "XY")), 3) == []
    assert verify_main_theorem(StdWord(slots=("YX",)), 3) == []
    assert verify_parts(2) == []
    assert verify_parts_and_yz(2) == []
    assert verify_ord_ineq(2) == []


def test_order_bound_is_guarded() -> None:
    with pytest.raises(GuardError):
        verify_upsilon_bound(StdWord(slots=("XYXYXY",)), 2)


@pytest.mark.parametrize("variant", ["reversed", "t-first", "t-first-reversed"])
def test_other_spanning_sets(variant: str) -> None:
    assert verify_other_bases(2, 1, variant)  # type: ignore[arg-type]


@pytest.mark.parametrize(
    "left, right", [("Y1 X1", "T1"), ("X2 T1^-1", "Y2 X1"), ("T1 Y1", "X1 Y2")]
)
def test_straightening_is_multiplicative(left: str, right: str) -> None:
    assert check_associativity(parse_word(left), parse_word(right), 2)


def test_straightening_logs_term_count(caplog: pytest.LogCaptureFixture) -> None:
    with caplog.at_level(logging.DEBUG, logger="stabledaha.pbw"):
        straighten(parse_word("T1 T1"), 2)

    assert "Straightened" in caplog.text
    assert "in rank 2: 2 terms" in caplog.text
