"""PBW straightening in the positive DAHA of rank k, normalized so T - T^-1 = h.

Elements are finite sums c * X_mu Y_nu T_w over Q[q, h]. A word is
straightened by right-multiplying an accumulator one generator at a time:

- ``T_i`` and ``T_i^-1`` act through the Hecke product on T_w;
- ``Y_j`` is pushed left through T_w and absorbed into Y_nu;
- ``X_j`` is pushed left through T_w, then through Y_nu, using
  Y_b X_a = X_a Y_b - h X_a Y_a T_(a,b) for a < b, its mirror for a > b, and
  the rank-dependent diagonal rule for Y_a X_a.

Every building block is memoized on its arguments, so repeated
straightening in the verification suites only pays for new shapes.
"""

from __future__ import annotations

import logging
import random
import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Literal, Mapping, Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import Matrix, Rational

from .coeffring import (
    QH,
    Order,
    PolyQH,
    evaluate_qh,
    h_order,
    h_part,
    qh_h,
    qh_q,
    reduce_mod_h,
    render_qh,
)
from .polyring import join_terms, render_monomial, render_term
from .weyl import (
    GuardError,
    Perm,
    RankError,
    Weight,
    _expect,
    all_perms,
    compose,
    cycle_perm,
    has_right_descent,
    identity_perm,
    inverse_perm,
    is_subword_product,
    kappa_min,
    perm_length,
    reduced_word,
    right_mul_simple,
    support_size,
    transposition_word,
)

logger = logging.getLogger(__name__)

LetterKind = Literal["X", "Y", "T", "Tinv"]
Letter = tuple[LetterKind, int]
GenWord = tuple[Letter, ...]
Key = tuple[Weight, Weight, Perm]
Hecke = dict[Perm, PolyQH]
Frozen = tuple[tuple[object, PolyQH], ...]

UPSILON_MAX_DEGREE = 5
UPSILON_MAX_SLOTS = 3
UPSILON_MAX_RANK = 5
MAIN_MAX_M = 3
PARTS_MAX_RANK = 5
PARTS_MAX_Z = 3


class WordSyntaxError(RuntimeError):
    """Raised when a generator word cannot be parsed."""


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------

_ATOM = re.compile(r"^(X|Y|T)(\d+)(\^-1)?$")


def parse_word(text: str) -> GenWord:
    """Parse ``"Y1 X1 T2 T2^-1"``; ``*`` also separates atoms."""
    letters: list[Letter] = []
    for atom in text.replace("*", " ").split():
        match = _ATOM.match(atom)
        if match is None:
            raise WordSyntaxError(f"Cannot parse generator '{atom}'")
        name, index, inverse = match.group(1), int(match.group(2)), match.group(3)
        if index < 1:
            raise WordSyntaxError(f"Generator indices start at 1: '{atom}'")
        if inverse and name != "T":
            raise WordSyntaxError(f"Only T generators may be inverted: '{atom}'")
        letters.append(("Tinv" if inverse else name, index))  # type: ignore[arg-type]
    return tuple(letters)


def render_word(word: Iterable[Letter]) -> str:
    atoms = []
    for kind, index in word:
        atoms.append(f"T{index}^-1" if kind == "Tinv" else f"{kind}{index}")
    return " ".join(atoms)


def check_word(word: Sequence[Letter], k: int) -> None:
    for kind, index in word:
        if kind in ("X", "Y"):
            _expect(1 <= index <= k, f"{kind}{index} is not a generator of rank {k}")
        elif kind in ("T", "Tinv"):
            _expect(1 <= index < k, f"T{index} is not a generator of rank {k}")
        else:
            raise WordSyntaxError(f"Unknown generator kind '{kind}'")


def t_word(w: Perm, inverse: bool = False) -> GenWord:
    """T_w as letters; T_w^-1 reverses the reduced word and inverts each letter."""
    if inverse:
        return tuple(("Tinv", i) for i in reversed(reduced_word(w)))
    return tuple(("T", i) for i in reduced_word(w))


def basis_word(key: Key) -> GenWord:
    mu, nu, w = key
    letters: list[Letter] = []
    for i, e in enumerate(mu, start=1):
        letters.extend([("X", i)] * e)
    for i, e in enumerate(nu, start=1):
        letters.extend([("Y", i)] * e)
    return tuple(letters) + t_word(w)


# ---------------------------------------------------------------------------
# Small helpers on sparse dictionaries
# ---------------------------------------------------------------------------


def _accumulate(target: dict, key: object, value: PolyQH) -> None:
    total = target.get(key, QH(0)) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def _freeze(terms: Mapping) -> Frozen:
    return tuple(terms.items())


def _unit(k: int, i: int) -> Weight:
    return tuple(1 if position == i else 0 for position in range(1, k + 1))


def _add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def transposition(k: int, a: int, b: int) -> Perm:
    entries = list(identity_perm(k))
    entries[a - 1], entries[b - 1] = b, a
    return tuple(entries)


# ---------------------------------------------------------------------------
# The finite Hecke algebra, T_i^2 = 1 + h T_i
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _hecke_times_simple(w: Perm, i: int) -> Frozen:
    shifted = right_mul_simple(w, i)
    if has_right_descent(w, i):
        return ((shifted, QH(1)), (w, qh_h))
    return ((shifted, QH(1)),)


def hecke_times_letter(element: Mapping[Perm, PolyQH], letter: Letter) -> Hecke:
    kind, i = letter
    result: Hecke = {}
    for w, coeff in element.items():
        for v, c in _hecke_times_simple(w, i):
            _accumulate(result, v, coeff * c)
        if kind == "Tinv":
            _accumulate(result, w, -qh_h * coeff)
    return result


@lru_cache(maxsize=None)
def _hecke_basis_product(u: Perm, v: Perm) -> Frozen:
    current: Hecke = {u: QH(1)}
    for letter in t_word(v):
        current = hecke_times_letter(current, letter)
    return _freeze(current)


def hecke_product(
    left: Mapping[Perm, PolyQH], right: Mapping[Perm, PolyQH]
) -> Hecke:
    result: Hecke = {}
    for u, a in left.items():
        for v, b in right.items():
            for w, c in _hecke_basis_product(u, v):
                _accumulate(result, w, a * b * c)
    return result


@lru_cache(maxsize=None)
def _transposition_element(k: int, a: int, b: int, inverse: bool) -> Frozen:
    kind: LetterKind = "Tinv" if inverse else "T"
    current: Hecke = {identity_perm(k): QH(1)}
    for i in transposition_word(a, b):
        current = hecke_times_letter(current, (kind, i))
    return _freeze(current)


def transposition_element(k: int, a: int, b: int, inverse: bool = False) -> Hecke:
    """T_(a,b) = T_a ... T_{b-1} ... T_a, or its inverse."""
    return dict(_transposition_element(k, a, b, inverse))


# ---------------------------------------------------------------------------
# Moving a single X or Y to the left of T_w
# ---------------------------------------------------------------------------

# T_i L_{i+d} = L_{i+moved} T_i + sign * h * L_{i+extra}, keyed on (L, d).
_PUSH_RULES = {
    ("X", 0): (1, 0, 1),
    ("X", 1): (0, 0, -1),
    ("Y", 0): (1, 1, -1),
    ("Y", 1): (0, 1, 1),
}


@lru_cache(maxsize=None)
def _push(kind: str, w: Perm, j: int) -> Frozen:
    word = reduced_word(w)
    if not word:
        return (((j, w), QH(1)),)
    i = word[-1]
    shorter = right_mul_simple(w, i)
    moved, extra, sign = j, 0, 0
    if (kind, j - i) in _PUSH_RULES:
        shift, extra, sign = _PUSH_RULES[kind, j - i]
        moved = i + shift
    result: dict = {}
    for (index, u), c in _push(kind, shorter, moved):
        for v, d in _hecke_times_simple(u, i):
            _accumulate(result, (index, v), c * d)
    if sign:
        for (index, u), c in _push(kind, shorter, i + extra):
            _accumulate(result, (index, u), sign * qh_h * c)
    return _freeze(result)


def push_X(w: Perm, j: int) -> Frozen:
    """T_w X_j as a sum of X_{j'} T_u."""
    return _push("X", w, j)


def push_Y(w: Perm, j: int) -> Frozen:
    """T_w Y_j as a sum of Y_{j'} T_u."""
    return _push("Y", w, j)


# ---------------------------------------------------------------------------
# Moving X to the left of Y
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _diagonal(k: int, a: int) -> Frozen:
    """Y_a X_a as a sum of X_i Y_i T_u, i <= a."""
    q, h = qh_q, qh_h
    result: dict = {}
    _accumulate(result, (a, a, identity_perm(k)), q)
    for j in range(a + 1, k + 1):
        _accumulate(result, (a, a, transposition(k, a, j)), q * h)
    for i in range(1, a):
        _accumulate(result, (i, i, transposition(k, i, a)), q * h)
        for j in range(a + 1, k + 1):
            for v, c in _hecke_basis_product(
                transposition(k, i, a), transposition(k, a, j)
            ):
                _accumulate(result, (i, i, v), q * h * h * c)
    return _freeze(result)


@lru_cache(maxsize=None)
def _y_times_x(k: int, b: int, a: int) -> Frozen:
    """Y_b X_a as a sum of X_{a'} Y_{b'} T_u."""
    if a == b:
        return _diagonal(k, a)
    result: dict = {(a, b, identity_perm(k)): QH(1)}
    if b > a:
        _accumulate(result, (a, a, transposition(k, a, b)), -qh_h)
        return _freeze(result)
    inverse = transposition_element(k, b, a, inverse=True)
    for (i, _, u), c in _diagonal(k, b):
        for v, d in hecke_product({u: QH(1)}, inverse).items():
            _accumulate(result, (i, i, v), -qh_h * c * d)
    return _freeze(result)


@lru_cache(maxsize=None)
def yx_normal(k: int, nu: Weight, m: int) -> Frozen:
    """Y_nu X_m as a sum of X_mu Y_nu' T_u."""
    if not any(nu):
        return (((_unit(k, m), (0,) * k, identity_perm(k)), QH(1)),)
    b = max(i for i, e in enumerate(nu, start=1) if e)
    rest = tuple(e - 1 if i == b else e for i, e in enumerate(nu, start=1))
    result: dict = {}
    for (m1, b1, u1), c1 in _y_times_x(k, b, m):
        for (mu2, nu2, u2), c2 in yx_normal(k, rest, m1):
            for (b3, u3), c3 in push_Y(u2, b1):
                nu3 = _add(nu2, _unit(k, b3))
                for v, c4 in _hecke_basis_product(u3, u1):
                    _accumulate(result, (mu2, nu3, v), c1 * c2 * c3 * c4)
    logger.debug(f"Y^{nu} X{m} in rank {k} has {len(result)} terms")
    return _freeze(result)


@lru_cache(maxsize=None)
def _times_letter(k: int, key: Key, letter: Letter) -> Frozen:
    mu, nu, w = key
    kind, j = letter
    result: dict = {}
    if kind in ("T", "Tinv"):
        for v, c in hecke_times_letter({w: QH(1)}, letter).items():
            _accumulate(result, (mu, nu, v), c)
    elif kind == "Y":
        for (index, u), c in push_Y(w, j):
            _accumulate(result, (mu, _add(nu, _unit(k, index)), u), c)
    else:
        for (index, u), c in push_X(w, j):
            for (mu2, nu2, u2), d in yx_normal(k, nu, index):
                for v, e in _hecke_basis_product(u2, u):
                    _accumulate(result, (_add(mu, mu2), nu2, v), c * d * e)
    return _freeze(result)


# ---------------------------------------------------------------------------
# PBW elements
# ---------------------------------------------------------------------------


class PBWElem:
    """A finite sum of c * X_mu Y_nu T_w in the positive DAHA of rank k."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Key, PolyQH | int] | None = None):
        self.rank = rank
        self.terms: dict[Key, PolyQH] = {}
        for (mu, nu, w), coeff in (terms or {}).items():
            _expect(
                len(mu) == rank and len(nu) == rank and len(w) == rank,
                f"Index {(mu, nu, w)} does not have rank {rank}",
            )
            _expect(
                min(tuple(mu) + tuple(nu), default=0) >= 0,
                "PBW exponents must be non-negative",
            )
            _expect(sorted(w) == list(range(1, rank + 1)), f"{w} is not in S_{rank}")
            coeff = QH(coeff)
            if coeff:
                key = (tuple(mu), tuple(nu), tuple(w))
                self.terms[key] = self.terms.get(key, QH(0)) + coeff

    @classmethod
    def zero(cls, rank: int) -> PBWElem:
        return cls(rank)

    @classmethod
    def one(cls, rank: int) -> PBWElem:
        return cls.basis((0,) * rank, (0,) * rank, identity_perm(rank))

    @classmethod
    def basis(cls, mu: Sequence[int], nu: Sequence[int], w: Sequence[int]) -> PBWElem:
        return cls(len(w), {(tuple(mu), tuple(nu), tuple(w)): 1})

    @classmethod
    def _raw(cls, rank: int, terms: Mapping[Key, PolyQH]) -> PBWElem:
        result = cls(rank)
        result.terms = {key: c for key, c in terms.items() if c}
        return result

    def _check_rank(self, other: PBWElem) -> None:
        if self.rank != other.rank:
            raise RankError(f"Rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: PBWElem) -> PBWElem:
        self._check_rank(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            _accumulate(terms, key, coeff)
        return PBWElem._raw(self.rank, terms)

    def __neg__(self) -> PBWElem:
        return self.scale(-1)

    def __sub__(self, other: PBWElem) -> PBWElem:
        return self + (-other)

    def scale(self, value: PolyQH | int) -> PBWElem:
        value = QH(value)
        return PBWElem._raw(
            self.rank, {key: c * value for key, c in self.terms.items()}
        )

    def right_multiply(self, letter: Letter) -> PBWElem:
        check_word((letter,), self.rank)
        result: dict = {}
        for key, coeff in self.terms.items():
            for new_key, c in _times_letter(self.rank, key, letter):
                _accumulate(result, new_key, coeff * c)
        return PBWElem._raw(self.rank, result)

    def right_multiply_word(self, word: Iterable[Letter]) -> PBWElem:
        result = self
        for letter in word:
            result = result.right_multiply(letter)
        return result

    def __mul__(self, other: PBWElem | PolyQH | int) -> PBWElem:
        if not isinstance(other, PBWElem):
            return self.scale(other)
        self._check_rank(other)
        result = PBWElem.zero(self.rank)
        for key, coeff in other.terms.items():
            result = result + self.right_multiply_word(basis_word(key)).scale(coeff)
        return result

    def __rmul__(self, other: PolyQH | int) -> PBWElem:
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PBWElem):
            return self.rank == other.rank and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(
        self, mu: Sequence[int], nu: Sequence[int], w: Sequence[int]
    ) -> PolyQH:
        return self.terms.get((tuple(mu), tuple(nu), tuple(w)), QH(0))

    def reduce_mod_h(self) -> PBWElem:
        return PBWElem._raw(
            self.rank, {key: reduce_mod_h(c) for key, c in self.terms.items()}
        )

    def sorted_terms(self) -> list[tuple[Key, PolyQH]]:
        return sorted(
            self.terms.items(),
            key=lambda item: (
                sum(item[0][0]) + sum(item[0][1]),
                item[0][0],
                item[0][1],
                perm_length(item[0][2]),
                item[0][2],
            ),
        )

    def __str__(self) -> str:
        return render_pbw(self)

    def __repr__(self) -> str:
        return f"PBWElem({self.rank}, {render_pbw(self)!r})"


def render_key(key: Key) -> str:
    mu, nu, w = key
    parts = [render_monomial(mu, "X"), render_monomial(nu, "Y")]
    parts.extend(f"T{i}" for i in reduced_word(w))
    return "*".join(part for part in parts if part)


def render_pbw(element: PBWElem) -> str:
    return join_terms(
        render_term(coeff, render_key(key))  # type: ignore[arg-type]
        for key, coeff in element.sorted_terms()
    )


def straighten(word: Sequence[Letter], k: int) -> PBWElem:
    """The expansion of a generator word in the basis X_mu Y_nu T_w."""
    check_word(word, k)
    result = PBWElem.one(k).right_multiply_word(word)
    logger.debug(f"Straightened {word} in rank {k}: {len(result.terms)} terms")
    return result


def ord_coeff(
    element: PBWElem, mu: Sequence[int], nu: Sequence[int], w: Sequence[int]
) -> Order:
    """h-adic order of one PBW coefficient; infinite when the term is absent."""
    return h_order(element.coefficient(mu, nu, w))


def ev0_normal_form(word: Sequence[Letter], k: int) -> PBWElem:
    """The h = 0 image: T's act as permutations and Y_a X_a = q X_a Y_a."""
    check_word(word, k)
    mu, nu, w = [0] * k, [0] * k, identity_perm(k)
    q_power = 0
    for kind, j in word:
        if kind in ("T", "Tinv"):
            w = right_mul_simple(w, j)
        elif kind == "X":
            target = w[j - 1]
            q_power += nu[target - 1]
            mu[target - 1] += 1
        else:
            nu[w[j - 1] - 1] += 1
    return PBWElem(k, {(tuple(mu), tuple(nu), w): qh_q**q_power})


# ---------------------------------------------------------------------------
# Standard words
# ---------------------------------------------------------------------------


class StdWord(BaseModel):
    """u_1 u_2 ... u_r T_w with u_j a word in X_j, Y_j."""

    model_config = ConfigDict(frozen=True)

    slots: tuple[str, ...] = Field(
        description="One string over {X, Y} per slot, read left to right"
    )
    perm: tuple[int, ...] | None = Field(
        default=None, description="Trailing permutation in S_r, one-line notation"
    )

    @field_validator("slots")
    @classmethod
    def validate_slots(cls, value: tuple[str, ...]) -> tuple[str, ...]:
        if not value:
            raise ValueError("A standard word needs at least one slot")
        for slot in value:
            if set(slot) - {"X", "Y"}:
                raise ValueError(f"Slot '{slot}' uses letters other than X and Y")
        return value

    @model_validator(mode="after")
    def validate_perm(self) -> StdWord:
        if self.perm is not None and sorted(self.perm) != list(
            range(1, len(self.slots) + 1)
        ):
            raise ValueError(f"{self.perm} is not a permutation in S_{len(self.slots)}")
        return self

    @property
    def r(self) -> int:
        return len(self.slots)

    @property
    def w(self) -> Perm:
        return self.perm if self.perm is not None else identity_perm(self.r)

    def word(self) -> GenWord:
        letters: list[Letter] = []
        for j, slot in enumerate(self.slots, start=1):
            letters.extend((char, j) for char in slot)  # type: ignore[misc]
        return tuple(letters) + t_word(self.w)

    def degree(self) -> int:
        return sum(len(slot) for slot in self.slots)

    def gaps(self) -> tuple[Weight, ...]:
        return tuple(gap_sequence(slot) for slot in self.slots)

    def m(self) -> Weight:
        return tuple(slot.count("Y") for slot in self.slots)

    def z(self) -> Weight:
        return tuple(z_index(g) for g in self.gaps())


def embed_perm(w: Sequence[int], k: int) -> Perm:
    _expect(len(w) <= k, f"Cannot embed S_{len(w)} into S_{k}")
    return tuple(w) + tuple(range(len(w) + 1, k + 1))


def phi_k(sw: StdWord, k: int) -> PBWElem:
    """Image of a standard word in the rank-k algebra."""
    _expect(k >= sw.r, f"A standard word with {sw.r} slots needs rank >= {sw.r}")
    return straighten(sw.word(), k)


# ---------------------------------------------------------------------------
# Gap sequences and special elements
# ---------------------------------------------------------------------------


def gap_sequence(u: str) -> Weight:
    """X-counts between consecutive Y's, scanning from the right."""
    gaps = [0]
    for char in reversed(u):
        if char == "X":
            gaps[-1] += 1
        elif char == "Y":
            gaps.append(0)
        else:
            raise WordSyntaxError(f"Gap sequences need X/Y words, got '{char}'")
    return tuple(gaps)


def word_from_gaps(gaps: Sequence[int]) -> str:
    pieces = ["X" * g for g in gaps]
    return "Y".join(reversed(pieces))


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    length = max(len(a), len(b))
    padded_a = list(a) + [0] * (length - len(a))
    padded_b = list(b) + [0] * (length - len(b))
    left = right = 0
    for x, y in zip(padded_a, padded_b):
        left += x
        right += y
        if left > right:
            return False
    return True


def z_index(a: Sequence[int]) -> int:
    m = len(a) - 1
    return min((i for i, e in enumerate(a) if e), default=m) if m >= 0 else 0


def special_cycle(k: int, j: int, N: int, length: int) -> Perm:
    """c_j(N, length) = (j, N, N-1, ..., N-length+1)."""
    if length == 0:
        return identity_perm(k)
    return cycle_perm(k, (j,) + tuple(range(N, N - length, -1)))


def _special_y_part(k: int, j: int, m: int, z: int, N: int) -> tuple[Weight, Perm]:
    nu = [0] * k
    if z == m:
        nu[j - 1] += m
        return tuple(nu), identity_perm(k)
    nu[j - 1] += 1
    for index in range(N - m + z + 1, N):
        nu[index - 1] += 1
    nu[N - 1] += z
    return tuple(nu), special_cycle(k, j, N, m - z)


def _special_x_part(a: Sequence[int], k: int, j: int, N: int) -> Weight:
    m = len(a) - 1
    z = z_index(a)
    mu = [0] * k
    if z == m:
        mu[j - 1] += a[m]
        return tuple(mu)
    mu[j - 1] += a[m] + 1
    for i in range(z + 1, m):
        mu[N - (i - z) - 1] += a[i]
    mu[N - 1] += a[z] - 1
    return tuple(mu)


def m_special(a: Sequence[int], k: int, j: int, m: int, N: int) -> Key:
    """The index M_a(X) M_a(Y, T) for the data (a, k, j, m, N)."""
    _expect(len(a) == m + 1, f"Composition {tuple(a)} needs {m + 1} entries")
    _expect(min(a, default=0) >= 0, f"Composition {tuple(a)} has a negative entry")
    _expect(j >= 1 and k >= N >= m + j, f"Need k >= N >= m + j, got {(k, N, m, j)}")
    nu, cycle = _special_y_part(k, j, m, z_index(a), N)
    return _special_x_part(a, k, j, N), nu, cycle


def _slot_bounds(k: int, ms: Sequence[int]) -> list[int]:
    """N_j = k - m_r - ... - m_{j+1} for j = 1..r."""
    return [k - sum(ms[j + 1 :]) for j in range(len(ms))]


def m_special_multi(
    compositions: Sequence[Sequence[int]], k: int, w_a: Sequence[int] | None = None
) -> Key:
    """The index M_a(X) M_a(Y, T) T_{w_a} for one composition per slot."""
    ms = [len(a) - 1 for a in compositions]
    r = len(compositions)
    _expect(k >= sum(ms) + r, f"Rank {k} is below the slot length {sum(ms) + r}")
    mu, nu, cycle = [0] * k, [0] * k, identity_perm(k)
    for j, (a, N) in enumerate(zip(compositions, _slot_bounds(k, ms)), start=1):
        mu_j, nu_j, c_j = m_special(a, k, j, ms[j - 1], N)
        mu = [x + y for x, y in zip(mu, mu_j)]
        nu = [x + y for x, y in zip(nu, nu_j)]
        cycle = compose(cycle, c_j)
    w = embed_perm(w_a if w_a is not None else identity_perm(r), k)
    return tuple(mu), tuple(nu), compose(cycle, w)


def match_special(key: Key, k: int, ms: Sequence[int]) -> list[tuple[tuple, Perm]]:
    """All (a, w_a) with m(a) = ms whose special index equals ``key``."""
    mu, nu, sigma = key
    r = len(ms)
    bounds = _slot_bounds(k, ms)
    matches = []
    for zs in product(*(range(m + 1) for m in ms)):
        y_part, cycle = [0] * k, identity_perm(k)
        for j, (m, z, N) in enumerate(zip(ms, zs, bounds), start=1):
            nu_j, c_j = _special_y_part(k, j, m, z, N)
            y_part = [x + y for x, y in zip(y_part, nu_j)]
            cycle = compose(cycle, c_j)
        if tuple(y_part) != nu:
            continue
        w_a = compose(inverse_perm(cycle), sigma)
        if any(w_a[i] != i + 1 for i in range(r, k)):
            continue
        compositions = []
        for j, (m, z, N) in enumerate(zip(ms, zs, bounds), start=1):
            a = [0] * (m + 1)
            if z == m:
                a[m] = mu[j - 1]
            else:
                a[m] = mu[j - 1] - 1
                for i in range(z + 1, m):
                    a[i] = mu[N - (i - z) - 1]
                a[z] = mu[N - 1] + 1
            compositions.append(tuple(a))
        if any(e < 0 for a in compositions for e in a):
            continue
        candidate = m_special_multi(compositions, k, w_a[:r])
        if candidate == key:
            matches.append((tuple(compositions), w_a[:r]))
    return matches


# ---------------------------------------------------------------------------
# Order bounds
# ---------------------------------------------------------------------------


def verify_upsilon_bound(sw: StdWord, k: int) -> list[str]:
    """Every term X_mu Y_nu T_w of phi_k has h-order at least k - #cycles(w)."""
    if sw.degree() > UPSILON_MAX_DEGREE or sw.r > UPSILON_MAX_SLOTS:
        raise GuardError(f"Standard word {sw.slots} is outside the guard box")
    if k > UPSILON_MAX_RANK:
        raise GuardError(f"Rank {k} exceeds {UPSILON_MAX_RANK}")
    _expect(sw.w == identity_perm(sw.r), "The bound is stated for trivial T_w")
    failures = []
    for key, coeff in phi_k(sw, k).terms.items():
        if h_order(coeff) < kappa_min(key[2]):
            failures.append(
                f"{sw.slots} k={k}: {render_key(key)} has order {h_order(coeff)}"
            )
    return failures


def verify_main_theorem(sw: StdWord, k: int) -> list[str]:
    """Order, permutation, z and dominance conclusions on every special term."""
    ms, gaps, zs, w = sw.m(), sw.gaps(), sw.z(), sw.w
    if max(ms) > MAIN_MAX_M:
        raise GuardError(f"Y-degrees {ms} exceed {MAIN_MAX_M}")
    _expect(k >= sum(ms) + sw.r, f"Rank {k} is below the gap length {sum(ms) + sw.r}")
    expansion = phi_k(sw, k)
    failures = []
    for key, coeff in expansion.terms.items():
        order = h_order(coeff)
        for compositions, w_a in match_special(key, k, ms):
            z_a = tuple(z_index(a) for a in compositions)
            bound = sum(m - z for m, z in zip(ms, z_a))
            label = f"{sw.slots} k={k} a={compositions}"
            if order < bound:
                failures.append(f"{label}: order {order} below {bound}")
                continue
            if order > bound:
                continue
            if w_a != w:
                failures.append(f"{label}: permutation {w_a} differs from {w}")
            if any(x < y for x, y in zip(z_a, zs)):
                failures.append(f"{label}: z(a)={z_a} below z={zs}")
            if z_a == zs and not all(
                dominance_leq(a, g) for a, g in zip(compositions, gaps)
            ):
                failures.append(f"{label}: not dominated by the gaps {gaps}")
    leading = sum(m - z for m, z in zip(ms, zs))
    key = m_special_multi(gaps, k, w)
    top = h_part(expansion.coefficient(*key), leading)
    if top != qh_q**leading:
        failures.append(
            f"{sw.slots} k={k}: leading coefficient of {render_key(key)} is "
            f"({top}) h^{leading}"
        )
    return failures


def verify_parts(N: int, max_power: int = 2) -> list[str]:
    """Spreading Y_i^c over s more variables in T_w Y_i^c costs h^s."""
    if N > PARTS_MAX_RANK:
        raise GuardError(f"Rank {N} exceeds {PARTS_MAX_RANK}")
    failures = []
    for w in all_perms(N):
        for i, c in product(range(1, N + 1), range(1, max_power + 1)):
            word = t_word(w) + (("Y", i),) * c
            for (_, nu, v), coeff in straighten(word, N).terms.items():
                s = support_size(nu) - 1
                order = h_order(coeff)
                if s >= 1 and order < s:
                    failures.append(f"T_{w} Y{i}^{c}: Y^{nu} T_{v} has order {order}")
                if s >= 1 and order == s and not is_subword_product(
                    reduced_word(w), v, s
                ):
                    failures.append(f"T_{w} Y{i}^{c}: {v} is not a subword product")
    return failures


def verify_yz(N: int, max_z: int = PARTS_MAX_Z) -> list[str]:
    """Y_{e_1}...Y_{e_s} Y_N^{z-s} T_tau has order > s in T_sigma Y_1^z."""
    if N > PARTS_MAX_RANK or max_z > PARTS_MAX_Z:
        raise GuardError(f"Parameters ({N}, {max_z}) are outside the guard box")
    failures = []
    for length in range(1, N):
        for s in range(0, N - length):
            window = list(range(N, N - length - s, -1))
            tau = cycle_perm(N, (1,) + tuple(window))
            for chosen in combinations(window[1:], length - 1):
                complement = [e for e in window[1:] if e not in chosen]
                for ordering in permutations(chosen):
                    sigma = cycle_perm(N, (1, N) + tuple(reversed(ordering)))
                    for z in range(s, max_z + 1):
                        failures.extend(
                            _yz_instance(N, sigma, tau, complement, z, s)
                        )
    return failures


def _yz_instance(
    N: int, sigma: Perm, tau: Perm, complement: Sequence[int], z: int, s: int
) -> list[str]:
    nu = [0] * N
    for e in complement:
        nu[e - 1] += 1
    nu[N - 1] += z - s
    expansion = straighten(t_word(sigma) + (("Y", 1),) * z, N)
    order = ord_coeff(expansion, (0,) * N, nu, tau)
    if s == 0 and sigma == tau:
        return []
    if order < s + 1:
        return [f"sigma={sigma} tau={tau} z={z}: order {order} <= {s}"]
    return []


@lru_cache(maxsize=None)
def is_kappa_factor(w1: Perm, w: Perm) -> bool:
    """w = sigma w1 tau with kappa(w) = kappa(sigma) + kappa(w1) + kappa(tau)."""
    target = kappa_min(w) - kappa_min(w1)
    if target < 0:
        return False
    for sigma in all_perms(len(w)):
        tau = compose(inverse_perm(compose(sigma, w1)), w)
        if kappa_min(sigma) + kappa_min(tau) == target:
            return True
    return False


def verify_ord_ineq(k: int) -> list[str]:
    """kappa(w1^e1 w2^e2) + ord(T_w in T_w1^e1 T_w2^e2) >= kappa(w), sharp cases."""
    if k > 4:
        raise GuardError(f"Rank {k} exceeds 4 for the ord-ineq scan")
    failures = []
    for w1, w2 in product(list(all_perms(k)), repeat=2):
        for inv1, inv2 in product((False, True), repeat=2):
            letters = t_word(w1, inv1) + t_word(w2, inv2)
            element: Hecke = {identity_perm(k): QH(1)}
            for letter in letters:
                element = hecke_times_letter(element, letter)
            product_perm = compose(
                inverse_perm(w1) if inv1 else w1, inverse_perm(w2) if inv2 else w2
            )
            base = kappa_min(product_perm)
            for w, coeff in element.items():
                total = base + h_order(coeff)
                if total < kappa_min(w):
                    failures.append(f"{w1}^{inv1} {w2}^{inv2}: {w} order too small")
                elif total == kappa_min(w) and not is_kappa_factor(product_perm, w):
                    failures.append(f"{w1}^{inv1} {w2}^{inv2}: no kappa-factor of {w}")
    return failures


def verify_parts_and_yz(N: int, max_z: int = PARTS_MAX_Z) -> list[str]:
    """Part-sum identities and the y/z order bounds in rank N."""
    return verify_parts(N) + verify_yz(N, max_z)


# ---------------------------------------------------------------------------
# Consistency with the defining relations
# ---------------------------------------------------------------------------

Side = list[tuple[PolyQH | int, GenWord]]
Relation = tuple[str, Side, Side]


def _equation(name: str, lhs: str, rhs: str, coeff: PolyQH | int = 1) -> Relation:
    return name, [(1, parse_word(lhs))], [(coeff, parse_word(rhs))]


def defining_relations(k: int) -> list[Relation]:
    """Relations of the positive algebra with indices inside rank k."""
    relations: list[Relation] = []
    for i in range(1, k):
        relations.append(
            (
                f"quadratic T{i}",
                [(1, parse_word(f"T{i}"))],
                [(1, parse_word(f"T{i}^-1")), (qh_h, ())],
            )
        )
        relations.append(_equation(f"inverse T{i}", f"T{i} T{i}^-1", ""))
        relations.append(
            _equation(f"X shift {i}", f"T{i}^-1 X{i} T{i}^-1", f"X{i + 1}")
        )
        relations.append(_equation(f"Y shift {i}", f"T{i} Y{i} T{i}", f"Y{i + 1}"))
        for j in range(1, k + 1):
            if j in (i, i + 1):
                continue
            for name in ("X", "Y"):
                relations.append(
                    _equation(
                        f"T{i} {name}{j} commute", f"T{i} {name}{j}", f"{name}{j} T{i}"
                    )
                )
        for j in range(i + 2, k):
            relations.append(
                _equation(f"T{i} T{j} commute", f"T{i} T{j}", f"T{j} T{i}")
            )
        if i + 1 < k:
            relations.append(
                _equation(
                    f"braid {i}", f"T{i} T{i + 1} T{i}", f"T{i + 1} T{i} T{i + 1}"
                )
            )
    for i, j in combinations(range(1, k + 1), 2):
        for name in ("X", "Y"):
            relations.append(
                _equation(
                    f"{name}{i} {name}{j} commute",
                    f"{name}{i} {name}{j}",
                    f"{name}{j} {name}{i}",
                )
            )
    if k >= 2:
        relations.append(_equation("cross", "Y1 T1 X1", "X2 Y1 T1"))
    all_x = " ".join(f"X{i}" for i in range(1, k + 1))
    relations.append(_equation("det", f"Y1 {all_x}", f"{all_x} Y1", qh_q))
    square = [f"T{i}" for i in range(1, k)] + [f"T{i}" for i in range(k - 1, 0, -1)]
    relations.append(
        _equation("diagonal", "Y1 X1", " ".join(["X1 Y1"] + square), qh_q)
    )
    return relations


def evaluate_side(side: Side, k: int) -> PBWElem:
    result = PBWElem.zero(k)
    for coeff, word in side:
        result = result + straighten(word, k).scale(coeff)
    return result


def check_relations(k: int) -> list[str]:
    failures = []
    for name, lhs, rhs in defining_relations(k):
        if evaluate_side(lhs, k) != evaluate_side(rhs, k):
            failures.append(f"rank {k}: relation '{name}' fails")
    return failures


def tab_word(a: int, b: int) -> GenWord:
    return tuple(("T", i) for i in transposition_word(a, b))


def tab_hat_left(a: int, b: int, i: int, letter: Letter) -> GenWord:
    """T_(a,b) with ``letter`` placed right after the descending T_i."""
    word = tab_word(a, b)
    cut = (b - a) + (b - 1 - i)
    return word[:cut] + (letter,) + word[cut:]


def tab_hat_right(a: int, b: int, i: int, letter: Letter) -> GenWord:
    """T_(a,b) with ``letter`` placed right after the ascending T_i."""
    word = tab_word(a, b)
    cut = i - a + 1
    return word[:cut] + (letter,) + word[cut:]


def _tab_sum(a: int, b: int) -> list[GenWord]:
    return [tab_word(a, j) for j in range(a + 1, b)]


def _x(n: int) -> Letter:
    return ("X", n)


def _y(n: int) -> Letter:
    return ("Y", n)


def _identity(name: str, lhs: GenWord, rhs: Side) -> Relation:
    return name, [(1, lhs)], rhs


def tab_identities(a: int, b: int) -> list[Relation]:
    """Commutation of X and Y generators with T_(a,b), as word identities."""
    h = qh_h
    y_tail = [(h * h, (_y(b),) + word) for word in _tab_sum(a, b)]
    relations = [
        _identity(
            "X-b",
            tab_hat_left(a, b, b - 1, _x(b - 1)),
            [(1, (_x(b),) + tab_word(a, b)), (h, (_x(a),))],
        ),
        _identity(
            "X-e",
            tab_hat_left(a, b, b - 1, _x(b)),
            [(1, tab_hat_right(a, b, b - 2, _x(b - 1))), (-h, (_x(a),))],
        ),
        _identity(
            "Y-b",
            tab_hat_left(a, b, b - 1, _y(b - 1)),
            [(1, (_y(b),) + tab_word(a, b)), (-h, (_y(b),))]
            + [(-c, word) for c, word in y_tail],
        ),
        _identity(
            "Y-e",
            tab_hat_left(a, b, b - 1, _y(b)),
            [(1, tab_hat_right(a, b, b - 2, _y(b - 1))), (h, (_y(b),))] + y_tail,
        ),
    ]
    for i in range(a, b - 1):
        relations.extend(_tab_family(a, b, i))
    return relations


def _tab_family(a: int, b: int, i: int) -> list[Relation]:
    h = qh_h
    left_x = tab_hat_left(a, i + 1, i, _x(i)) + tab_word(i + 1, b)
    right_x = tab_word(i + 1, b) + tab_hat_right(a, i + 1, i - 1, _x(i))
    left_y = tab_word(a, i + 1) + tab_hat_left(i + 1, b, i + 1, _y(i + 1))
    right_y = (_y(i + 1),) + tab_word(i + 1, b) + tab_word(a, i + 1)
    relations = []
    for name, gen, sign, left, right in (
        ("X", _x, 1, left_x, right_x),
        ("Y", _y, -1, left_y, right_y),
    ):
        relations.extend(
            [
                _identity(
                    f"{name}-a i={i}",
                    tab_hat_left(a, b, i, gen(i)),
                    [(1, tab_hat_left(a, b, i + 1, gen(i + 1))), (sign * h, left)],
                ),
                _identity(
                    f"{name}-c i={i}",
                    tab_hat_right(a, b, i, gen(i)),
                    [(1, (gen(i + 1),) + tab_word(a, b)), (sign * h, right)],
                ),
                _identity(
                    f"{name}-d i={i}",
                    tab_hat_left(a, b, i, gen(i + 1)),
                    [(1, tab_hat_right(a, b, i, gen(i))), (-sign * h, left)],
                ),
                _identity(
                    f"{name}-f i={i}",
                    tab_hat_right(a, b, i, gen(i + 1)),
                    [(1, tab_hat_right(a, b, i - 1, gen(i))), (-sign * h, right)],
                ),
            ]
        )
    return relations


def check_tab_identities(k: int, max_index: int | None = None) -> list[str]:
    """T_(a,b) identities for a < b <= min(k, max_index), straightened in rank k."""
    top = k if max_index is None else min(k, max_index)
    failures = []
    for a, b in combinations(range(1, top + 1), 2):
        for name, lhs, rhs in tab_identities(a, b):
            if evaluate_side(lhs, k) != evaluate_side(rhs, k):
                failures.append(f"rank {k}: T_({a},{b}) identity {name} fails")
    return failures


def check_associativity(
    left: Sequence[Letter], right: Sequence[Letter], k: int
) -> bool:
    """straighten(uv) equals straighten(u) times straighten(v)."""
    return straighten(tuple(left) + tuple(right), k) == (
        straighten(left, k) * straighten(right, k)
    )


def check_mod_h(word: Sequence[Letter], k: int) -> bool:
    return straighten(word, k).reduce_mod_h() == ev0_normal_form(word, k)


def random_words(
    k: int, max_degree: int, count: int, seed: int, max_t: int = 3
) -> Iterator[GenWord]:
    """Seeded words mixing X, Y, T and T^-1 letters."""
    rng = random.Random(seed)
    for _ in range(count):
        letters: list[Letter] = []
        degree = rng.randint(0, max_degree)
        for _ in range(degree):
            letters.append((rng.choice(("X", "Y")), rng.randint(1, k)))
        if k >= 2:
            for _ in range(rng.randint(0, max_t)):
                letter = (rng.choice(("T", "Tinv")), rng.randint(1, k - 1))
                letters.insert(rng.randint(0, len(letters)), letter)
        yield tuple(letters)  # type: ignore[misc]


# ---------------------------------------------------------------------------
# Alternative spanning sets
# ---------------------------------------------------------------------------

_SAMPLE_POINT = (Fraction(2, 3), Fraction(5, 7))


def _slot_words(k: int, degree: int) -> Iterator[tuple[str, ...]]:
    for split in product(range(degree + 1), repeat=k):
        if sum(split) != degree:
            continue
        choices = [
            ["".join(letters) for letters in product("XY", repeat=d)] for d in split
        ]
        yield from product(*choices)


def verify_other_bases(
    k: int, degree: int, variant: Literal["reversed", "t-first", "t-first-reversed"]
) -> bool:
    """The variant words straighten to a spanning set of the degree-D PBW span."""
    _expect(k <= 3 and degree <= 2, "Other-bases check is limited to k<=3, D<=2")
    rows: list[dict[int, Rational]] = []
    columns: dict[Key, int] = {}
    for slots in _slot_words(k, degree):
        indexed = list(enumerate(slots, start=1))
        if variant in ("reversed", "t-first-reversed"):
            indexed.reverse()
        body: GenWord = tuple(
            (char, j) for j, slot in indexed for char in slot  # type: ignore[misc]
        )
        for w in all_perms(k):
            if variant.startswith("t-first"):
                word = t_word(w) + body
            else:
                word = body + t_word(w)
            row: dict[int, Rational] = {}
            for key, coeff in straighten(word, k).terms.items():
                column = columns.setdefault(key, len(columns))
                value = evaluate_qh(coeff, *_SAMPLE_POINT)
                row[column] = Rational(value.numerator, value.denominator)
            rows.append(row)
    expected = sum(
        1
        for split in product(range(degree + 1), repeat=2 * k)
        if sum(split) == degree
    ) * len(list(all_perms(k)))
    matrix = Matrix(
        len(rows), len(columns), lambda r, c: rows[r].get(c, 0)
    )
    rank = matrix.rank()
    logger.debug(f"Variant {variant} in rank {k} degree {degree}: rank {rank}")
    return rank == expected and len(columns) <= expected


def pbw_records(element: PBWElem) -> list[dict[str, object]]:
    return [
        {"mu": list(mu), "nu": list(nu), "w": list(w), "coeff": render_qh(coeff)}
        for (mu, nu, w), coeff in element.sorted_terms()
    ]
