"""Sparse Laurent polynomials in x_1..x_k over Q(q, t)."""

from __future__ import annotations

import logging
from typing import Callable, Iterable, Mapping, Sequence

from .coeffring import QT, INFINITY, Order, RatQT, needs_parentheses, ratqt, t_order
from .weyl import RankError, Weight, _expect

logger = logging.getLogger(__name__)

Scalar = RatQT | int


class LaurentPoly:
    """An element of Q(q,t)[x_1^{+-1}, ..., x_k^{+-1}].

    Values are treated as immutable: every operation returns a new polynomial.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Weight, Scalar] | None = None):
        self.rank = rank
        self.terms: dict[Weight, RatQT] = {}
        for exps, coeff in (terms or {}).items():
            _expect(
                len(exps) == rank,
                f"Exponent vector {exps} does not have length {rank}",
            )
            coeff = ratqt(coeff)
            if coeff:
                self.terms[tuple(exps)] = coeff

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, rank: int) -> LaurentPoly:
        return cls(rank)

    @classmethod
    def constant(cls, rank: int, value: Scalar = 1) -> LaurentPoly:
        return cls(rank, {(0,) * rank: value})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: Scalar = 1) -> LaurentPoly:
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, i: int, rank: int) -> LaurentPoly:
        _expect(1 <= i <= rank, f"x{i} is not a variable of rank {rank}")
        exps = [0] * rank
        exps[i - 1] = 1
        return cls(rank, {tuple(exps): 1})

    @classmethod
    def _raw(cls, rank: int, terms: dict[Weight, RatQT]) -> LaurentPoly:
        result = cls(rank)
        result.terms = {exps: coeff for exps, coeff in terms.items() if coeff}
        return result

    # -- arithmetic ---------------------------------------------------------

    def _check_rank(self, other: LaurentPoly) -> None:
        if self.rank != other.rank:
            raise RankError(f"Rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: LaurentPoly | Scalar) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.rank, other)
        self._check_rank(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, QT(0)) + coeff
        return LaurentPoly._raw(self.rank, terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(
            self.rank, {exps: -coeff for exps, coeff in self.terms.items()}
        )

    def __sub__(self, other: LaurentPoly | Scalar) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.rank, other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return LaurentPoly.constant(self.rank, other) - self

    def __mul__(self, other: LaurentPoly | Scalar) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        self._check_rank(other)
        terms: dict[Weight, RatQT] = {}
        for exps_a, coeff_a in self.terms.items():
            for exps_b, coeff_b in other.terms.items():
                exps = tuple(a + b for a, b in zip(exps_a, exps_b))
                terms[exps] = terms.get(exps, QT(0)) + coeff_a * coeff_b
        return LaurentPoly._raw(self.rank, terms)

    def __rmul__(self, other: Scalar) -> LaurentPoly:
        return self.scale(other)

    def __pow__(self, n: int) -> LaurentPoly:
        _expect(n >= 0, "Negative powers of polynomials are not supported")
        result = LaurentPoly.constant(self.rank)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, value: Scalar) -> LaurentPoly:
        value = ratqt(value)
        return LaurentPoly._raw(
            self.rank, {exps: coeff * value for exps, coeff in self.terms.items()}
        )

    def shift(self, exps: Sequence[int]) -> LaurentPoly:
        """Multiply by the monomial x^exps."""
        _expect(len(exps) == self.rank, f"Shift {tuple(exps)} has wrong rank")
        return LaurentPoly._raw(
            self.rank,
            {
                tuple(a + b for a, b in zip(key, exps)): coeff
                for key, coeff in self.terms.items()
            },
        )

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.rank == other.rank and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, exps: Sequence[int]) -> RatQT:
        return self.terms.get(tuple(exps), QT(0))

    # -- symmetric group and substitutions ----------------------------------

    def swap(self, i: int) -> LaurentPoly:
        """s_i acting by exchanging x_i and x_{i+1}."""
        _expect(1 <= i < self.rank, f"s_{i} does not act in rank {self.rank}")
        terms = {}
        for exps, coeff in self.terms.items():
            swapped = list(exps)
            swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
            terms[tuple(swapped)] = coeff
        return LaurentPoly._raw(self.rank, terms)

    def permute(self, w: Sequence[int]) -> LaurentPoly:
        """Substitute x_i -> x_{w(i)}."""
        _expect(len(w) == self.rank, f"Permutation {tuple(w)} has wrong rank")
        terms = {}
        for exps, coeff in self.terms.items():
            moved = [0] * self.rank
            for i, e in enumerate(exps):
                moved[w[i] - 1] = e
            terms[tuple(moved)] = coeff
        return LaurentPoly._raw(self.rank, terms)

    def substitute(
        self, images: Sequence[tuple[Scalar, Sequence[int]]], rank: int | None = None
    ) -> LaurentPoly:
        """Monomial substitution x_i -> c_i * x^{beta_i} into the given rank."""
        _expect(len(images) == self.rank, "One image per variable is required")
        target = self.rank if rank is None else rank
        factors = [(ratqt(c), tuple(beta)) for c, beta in images]
        for _, beta in factors:
            _expect(len(beta) == target, f"Image exponent {beta} has wrong rank")
        terms: dict[Weight, RatQT] = {}
        for exps, coeff in self.terms.items():
            value = coeff
            new_exps = [0] * target
            for e, (c, beta) in zip(exps, factors):
                if e:
                    value = value * c**e
                    for position, b in enumerate(beta):
                        new_exps[position] += e * b
            key = tuple(new_exps)
            terms[key] = terms.get(key, QT(0)) + value
        return LaurentPoly._raw(target, terms)

    def divided_difference(self, i: int) -> LaurentPoly:
        """(f - s_i f) / (x_i - x_{i+1}), exact on Laurent monomials."""
        _expect(1 <= i < self.rank, f"Index {i} out of range for rank {self.rank}")
        terms: dict[Weight, RatQT] = {}
        for exps, coeff in self.terms.items():
            a, b = exps[i - 1], exps[i]
            if a == b:
                continue
            sign = 1 if a > b else -1
            high, low = max(a, b), min(a, b)
            for j in range(high - low):
                new_exps = list(exps)
                new_exps[i - 1] = high - 1 - j
                new_exps[i] = low + j
                key = tuple(new_exps)
                terms[key] = terms.get(key, QT(0)) + sign * coeff
        return LaurentPoly._raw(self.rank, terms)

    def evaluate_at_zero_last(self) -> LaurentPoly:
        """pi_k: set x_k = 0, landing in rank k - 1."""
        _expect(self.rank >= 1, "Cannot drop a variable from rank 0")
        terms: dict[Weight, RatQT] = {}
        for exps, coeff in self.terms.items():
            _expect(
                exps[-1] >= 0, f"Negative power of x{self.rank} cannot be set to 0"
            )
            if exps[-1] == 0:
                terms[exps[:-1]] = coeff
        return LaurentPoly._raw(self.rank - 1, terms)

    def embed(self, rank: int) -> LaurentPoly:
        """View as a polynomial in more variables."""
        _expect(rank >= self.rank, f"Cannot embed rank {self.rank} into {rank}")
        extra = (0,) * (rank - self.rank)
        return LaurentPoly._raw(
            rank, {exps + extra: coeff for exps, coeff in self.terms.items()}
        )

    def filter_terms(self, keep: Callable[[Weight], bool]) -> LaurentPoly:
        return LaurentPoly._raw(
            self.rank, {e: c for e, c in self.terms.items() if keep(e)}
        )

    # -- inspection ---------------------------------------------------------

    def degree(self) -> int:
        return max((sum(exps) for exps in self.terms), default=0)

    def is_polynomial(self) -> bool:
        return all(e >= 0 for exps in self.terms for e in exps)

    def min_t_order(self) -> Order:
        return min((t_order(coeff) for coeff in self.terms.values()), default=INFINITY)

    def sorted_terms(self) -> list[tuple[Weight, RatQT]]:
        """Terms in graded lexicographic order, largest first."""
        return sorted(
            self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True
        )

    def __repr__(self) -> str:
        return f"LaurentPoly({self.rank}, {render_poly(self)!r})"

    def __str__(self) -> str:
        return render_poly(self)


def render_monomial(exps: Sequence[int], letter: str = "x") -> str:
    factors = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            factors.append(f"{letter}{i}")
        elif e != 0:
            factors.append(f"{letter}{i}^{e}")
    return "*".join(factors)


def render_term(coeff: RatQT, monomial: str) -> str:
    text = str(coeff)
    if not monomial:
        return text
    if text == "1":
        return monomial
    if text == "-1":
        return f"-{monomial}"
    if needs_parentheses(text):
        text = f"({text})"
    return f"{text} * {monomial}"


def join_terms(rendered: Iterable[str]) -> str:
    pieces: list[str] = []
    for piece in rendered:
        if not pieces:
            pieces.append(piece)
        elif piece.startswith("-"):
            pieces.append(f" - {piece[1:]}")
        else:
            pieces.append(f" + {piece}")
    return "".join(pieces) or "0"


def render_poly(f: LaurentPoly) -> str:
    return join_terms(
        render_term(coeff, render_monomial(exps)) for exps, coeff in f.sorted_terms()
    )


def x(i: int, rank: int) -> LaurentPoly:
    return LaurentPoly.variable(i, rank)


def poly_arith(f: LaurentPoly, g: LaurentPoly, op: str) -> LaurentPoly:
    """Binary ring operation by name, for callers that dispatch on strings."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"Unknown polynomial operation '{op}'")
