"""Bounded-degree symmetric functions stored in the monomial basis.

Only the plethysms the limit operators need are provided: ``F[(1-t)X]``,
adding or removing a single letter, and evaluation on a finite alphabet.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import product
from math import comb, prod
from typing import Literal, Mapping, Sequence

from sympy import Matrix, Rational
from sympy.utilities.iterables import multiset_permutations

from . import config
from .coeffring import QT, RatQT, ratqt, t
from .polyring import LaurentPoly, join_terms, render_term
from .weyl import Weight, is_partition, multiplicities, pad, partitions, remove_part

logger = logging.getLogger(__name__)

Basis = Literal["m", "h", "p"]

DEGREE_CAP = config.MAX_DEGREE


class DegreeOverflowError(RuntimeError):
    """Raised when a computation would exceed the symmetric-function degree cap."""


def _check_degree(degree: int) -> None:
    if degree > DEGREE_CAP:
        raise DegreeOverflowError(
            f"Degree {degree} exceeds the cap of {DEGREE_CAP} (STABLEDAHA_MAX_DEGREE)"
        )


class SymFn:
    """A symmetric function sum c_mu * m_mu with coefficients in Q(q,t)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Weight, RatQT | int] | None = None):
        self.terms: dict[Weight, RatQT] = {}
        for mu, coeff in (terms or {}).items():
            mu = tuple(mu)
            if not is_partition(mu):
                raise ValueError(f"{mu} is not a partition")
            _check_degree(sum(mu))
            coeff = ratqt(coeff)
            if coeff:
                self.terms[mu] = self.terms.get(mu, QT(0)) + coeff
                if not self.terms[mu]:
                    del self.terms[mu]

    @classmethod
    def one(cls) -> SymFn:
        return cls({(): 1})

    def __add__(self, other: SymFn) -> SymFn:
        terms = dict(self.terms)
        for mu, coeff in other.terms.items():
            terms[mu] = terms.get(mu, QT(0)) + coeff
        return SymFn(terms)

    def __neg__(self) -> SymFn:
        return SymFn({mu: -coeff for mu, coeff in self.terms.items()})

    def __sub__(self, other: SymFn) -> SymFn:
        return self + (-other)

    def scale(self, value: RatQT | int) -> SymFn:
        value = ratqt(value)
        return SymFn({mu: coeff * value for mu, coeff in self.terms.items()})

    def __mul__(self, other: SymFn | RatQT | int) -> SymFn:
        if not isinstance(other, SymFn):
            return self.scale(other)
        terms: dict[Weight, RatQT] = {}
        for mu, a in self.terms.items():
            for nu, b in other.terms.items():
                _check_degree(sum(mu) + sum(nu))
                for lam, count in m_product(mu, nu).items():
                    terms[lam] = terms.get(lam, QT(0)) + count * a * b
        return SymFn(terms)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFn):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(mu) for mu in self.terms), default=0)

    def __str__(self) -> str:
        ordered = sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))
        return join_terms(
            render_term(coeff, f"m[{','.join(map(str, mu))}]") for mu, coeff in ordered
        )

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def m(mu: Sequence[int]) -> SymFn:
    return SymFn({tuple(mu): 1})


def h(n: int) -> SymFn:
    """Complete homogeneous h_n = sum of all m_mu with |mu| = n."""
    return SymFn({mu: 1 for mu in partitions(n)})


def e(n: int) -> SymFn:
    return SymFn({(1,) * n: 1})


def p(n: int) -> SymFn:
    return SymFn({(n,): 1} if n else {(): 1})


_GENERATORS = {"h": h, "p": p}


@lru_cache(maxsize=None)
def m_product(mu: Weight, nu: Weight) -> dict[Weight, int]:
    """Structure constants of m_mu * m_nu in the monomial basis."""
    length = len(mu) + len(nu)
    counts: dict[Weight, int] = {}
    for alpha in multiset_permutations(list(pad(mu, length))):
        for beta in multiset_permutations(list(pad(nu, length))):
            total = [a + b for a, b in zip(alpha, beta)]
            if all(total[i] >= total[i + 1] for i in range(length - 1)):
                lam = tuple(part for part in total if part)
                counts[lam] = counts.get(lam, 0) + 1
    return counts


def _product_of(factors: Sequence[SymFn]) -> SymFn:
    result = SymFn.one()
    for factor in factors:
        result = result * factor
    return result


# ---------------------------------------------------------------------------
# Change of basis
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _basis_matrix(basis: Basis, n: int) -> tuple[tuple[Weight, ...], Matrix]:
    """Column lam holds the m-coordinates of b_lam, for partitions of n."""
    _check_degree(n)
    index = tuple(partitions(n))
    columns = []
    for lam in index:
        if basis == "m":
            element = m(lam)
        else:
            element = _product_of([_GENERATORS[basis](part) for part in lam])
        columns.append([_as_rational(element.terms.get(mu, QT(0))) for mu in index])
    return index, Matrix(columns).T


@lru_cache(maxsize=None)
def _inverse_basis_matrix(basis: Basis, n: int) -> Matrix:
    return _basis_matrix(basis, n)[1].inv()


def _as_rational(value: RatQT) -> Rational:
    numer = value.numer.as_expr()
    denom = value.denom.as_expr()
    return Rational(numer) / Rational(denom)


def _to_qt(value: Rational) -> RatQT:
    return ratqt(Rational(value))


def to_basis(f: SymFn, basis: Basis) -> dict[Weight, RatQT]:
    """Coordinates of f in the m, h or p basis."""
    if basis == "m":
        return dict(f.terms)
    coords: dict[Weight, RatQT] = {}
    for n in sorted({sum(mu) for mu in f.terms}):
        index, _ = _basis_matrix(basis, n)
        inverse = _inverse_basis_matrix(basis, n)
        for row, lam in enumerate(index):
            value = QT(0)
            for col, mu in enumerate(index):
                if mu in f.terms and inverse[row, col] != 0:
                    value += f.terms[mu] * _to_qt(inverse[row, col])
            if value:
                coords[lam] = value
    return coords


def from_basis(coords: Mapping[Weight, RatQT | int], basis: Basis) -> SymFn:
    result = SymFn()
    for lam, coeff in coords.items():
        if basis == "m":
            element = m(lam)
        else:
            index, matrix = _basis_matrix(basis, sum(lam))
            col = index.index(tuple(lam))
            element = SymFn(
                {mu: _to_qt(matrix[row, col]) for row, mu in enumerate(index)}
            )
        result = result + element.scale(coeff)
    return result


def basis_convert(
    coords: Mapping[Weight, RatQT | int], source: Basis, target: Basis
) -> dict[Weight, RatQT]:
    return to_basis(from_basis(coords, source), target)


# ---------------------------------------------------------------------------
# Plethysms
# ---------------------------------------------------------------------------


def pleth_one_minus_t(f: SymFn) -> SymFn:
    """f[(1-t)X], computed through p_n -> (1 - t^n) p_n."""
    coords = to_basis(f, "p")
    scaled = {
        lam: coeff * prod((1 - t**part for part in lam), start=QT(1))
        for lam, coeff in coords.items()
    }
    return from_basis(scaled, "p")


@lru_cache(maxsize=None)
def h_one_minus_t(n: int) -> SymFn:
    """h_n[(1-t)X] = sum over |nu| = n of (1-t)^l(nu) m_nu."""
    return SymFn({nu: (1 - t) ** len(nu) for nu in partitions(n)})


def add_letter(f: SymFn) -> dict[int, SymFn]:
    """Expand f[X + y] as a polynomial in the letter y.

    Uses m_mu[X + y] = sum over parts a of mu (and a = 0) of y^a m_{mu - a}[X].
    """
    expansion: dict[int, SymFn] = {}
    for mu, coeff in f.terms.items():
        for a in set(mu) | {0}:
            rest = remove_part(mu, a) if a else mu
            expansion[a] = expansion.get(a, SymFn()) + m(rest).scale(coeff)
    return {a: g for a, g in expansion.items() if g}


@lru_cache(maxsize=None)
def symm_monomial_expansion(mu: Weight) -> dict[tuple[int, Weight], int]:
    """m_mu[X - y] as {(power of y, remaining partition): integer coefficient}.

    The sum runs over sub-multisets S of the parts of mu, with coefficient
    (-1)^|S| times the multinomial |S|! / prod m_i(S)!.
    """
    mult = multiplicities(mu)
    values = sorted(mult)
    expansion: dict[tuple[int, Weight], int] = {}
    for choice in product(*(range(mult[v] + 1) for v in values)):
        size = sum(choice)
        coefficient = (-1) ** size * multinomial(choice)
        rest: list[int] = []
        power = 0
        for value, taken in zip(values, choice):
            power += value * taken
            rest.extend([value] * (mult[value] - taken))
        key = (power, tuple(sorted(rest, reverse=True)))
        expansion[key] = expansion.get(key, 0) + coefficient
    return expansion


def remove_letter(f: SymFn) -> dict[int, SymFn]:
    """Expand f[X - y] as a polynomial in the letter y; inverse of add_letter."""
    expansion: dict[int, SymFn] = {}
    for mu, coeff in f.terms.items():
        for (power, rest), count in symm_monomial_expansion(mu).items():
            expansion[power] = expansion.get(power, SymFn()) + m(rest).scale(
                coeff * count
            )
    return {a: g for a, g in expansion.items() if g}


def eval_finite(f: SymFn, rank: int, first: int, count: int) -> LaurentPoly:
    """Evaluate f on x_first, ..., x_{first+count-1} inside the given rank."""
    result: dict[Weight, RatQT] = {}
    if count < 0 or first + count - 1 > rank:
        raise ValueError(f"Alphabet x{first}..x{first + count - 1} exceeds rank {rank}")
    for mu, coeff in f.terms.items():
        if len(mu) > count:
            continue
        for arrangement in multiset_permutations(list(pad(mu, count))):
            exps = [0] * rank
            exps[first - 1 : first - 1 + count] = arrangement
            key = tuple(exps)
            result[key] = result.get(key, QT(0)) + coeff
    return LaurentPoly(rank, result)


def power_sum_oracle(
    f: SymFn, rank: int, plethysm_one_minus_t: bool = False
) -> LaurentPoly:
    """Evaluate f in x_1..x_rank through the power-sum basis directly."""
    result = LaurentPoly.zero(rank)
    for lam, coeff in to_basis(f, "p").items():
        term = LaurentPoly.constant(rank, coeff)
        for part in lam:
            power_sum = LaurentPoly.zero(rank)
            for i in range(rank):
                exps = [0] * rank
                exps[i] = part
                power_sum = power_sum + LaurentPoly.monomial(exps)
            if plethysm_one_minus_t:
                power_sum = power_sum.scale(1 - t**part)
            term = term * power_sum
        result = result + term
    return result


def multinomial(counts: Sequence[int]) -> int:
    result = 1
    total = 0
    for count in counts:
        total += count
        result *= comb(total, count)
    return result


def _horizontal_strips(lam: Weight, size: int) -> list[Weight]:
    """Partitions mu with lam / mu a horizontal strip of the given size."""
    strips: list[Weight] = []
    bounds = list(lam[1:]) + [0]

    def extend(position: int, removed: int, parts: list[int]) -> None:
        if position == len(lam):
            if removed == size:
                strips.append(tuple(part for part in parts if part))
            return
        for part in range(bounds[position], lam[position] + 1):
            taken = lam[position] - part
            if removed + taken <= size:
                extend(position + 1, removed + taken, parts + [part])

    extend(0, 0, [])
    return strips


def _conjugate(lam: Sequence[int]) -> list[int]:
    longest = max(lam, default=0)
    return [sum(1 for part in lam if part >= i) for i in range(1, longest + 1)]


def _strip_weight(lam: Weight, mu: Weight) -> RatQT:
    """phi_{lam/mu}(t): product of (1 - t^m_i(lam)) over columns ending the strip."""
    outer = _conjugate(lam)
    inner = pad(_conjugate(mu), len(outer))
    theta = [a - b for a, b in zip(outer, inner)] + [0]
    mult = multiplicities(lam)
    weight = QT(1)
    for i in range(1, len(theta)):
        if theta[i - 1] == 1 and theta[i] == 0:
            weight *= 1 - t ** mult.get(i, 0)
    return weight


@lru_cache(maxsize=None)
def _hall_littlewood_coefficient(lam: Weight, nu: Weight) -> RatQT:
    if not nu:
        return QT(1) if not lam else QT(0)
    total = QT(0)
    for mu in _horizontal_strips(lam, nu[-1]):
        inner = _hall_littlewood_coefficient(mu, nu[:-1])
        if inner:
            total += _strip_weight(lam, mu) * inner
    return total


@lru_cache(maxsize=None)
def hall_littlewood_Q(lam: Weight) -> SymFn:
    """Hall-Littlewood Q_lam(X; t) in the monomial basis, by the tableau formula."""
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    _check_degree(sum(lam))
    return SymFn(
        {nu: _hall_littlewood_coefficient(lam, nu) for nu in partitions(sum(lam))}
    )
