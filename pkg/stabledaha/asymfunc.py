"""Almost symmetric functions and the limit operators acting on them.

An ``AsymFn`` of rank k stores a finite sum

    sum c * x^alpha * m_mu[X_k],    X_k = x_{k+1} + x_{k+2} + ...

with alpha a length-k exponent vector. Every rank-k value is also a value of
rank k + 1, so the same function has many presentations; ``to_mas_basis``
reads off the unique coordinates on the almost symmetric monomials
m<lam|mu> = x^lam m_mu[X_{l(lam)}] with lam a strict composition.

The limit operators are exact. T_i and X_i act on the finite part, Y_1 uses
the closed formula for Y_1 T_1 ... T_{k-1}, and Y_{i+1} = t^-1 T_i Y_i T_i.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .coeffring import (
    INFINITY,
    QT,
    Order,
    RatQT,
    q,
    qt_factorial,
    qt_int,
    ratqt,
    t,
)
from .daharep import (
    apply_T,
    apply_T_inv,
    apply_Y,
    apply_Y_deformed,
    intertwiner_coefficient,
    macdonald_E,
    symmetrizer_eps,
)
from .polyring import LaurentPoly, join_terms, render_monomial, render_term
from .symfunc import (
    DEGREE_CAP,
    DegreeOverflowError,
    SymFn,
    add_letter,
    e,
    eval_finite,
    h_one_minus_t,
    hall_littlewood_Q,
    m,
    remove_letter,
)
from .weyl import (
    AsymIndex,
    Weight,
    _expect,
    as_order_less,
    concat,
    is_partition,
    is_strict_composition,
    multiplicities,
    remove_part,
    sgn_stat,
    strict_part,
    u_stat,
)

logger = logging.getLogger(__name__)

Term = tuple[Weight, Weight]


class LimitReconstructionError(RuntimeError):
    """Raised when a limit object disagrees with its finite-rank truncations."""


class AsymFn:
    """A finite sum of x^alpha * m_mu[X_k] with coefficients in Q(q,t)."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Term, RatQT | int] | None = None):
        _expect(rank >= 0, f"Negative rank {rank}")
        self.rank = rank
        self.terms: dict[Term, RatQT] = {}
        for (alpha, mu), coeff in (terms or {}).items():
            alpha, mu = tuple(alpha), tuple(mu)
            _expect(
                len(alpha) == rank, f"Finite part {alpha} does not have length {rank}"
            )
            _expect(all(a >= 0 for a in alpha), f"{alpha} has a negative exponent")
            if not is_partition(mu):
                raise ValueError(f"{mu} is not a partition")
            if sum(alpha) + sum(mu) > DEGREE_CAP:
                raise DegreeOverflowError(
                    f"Degree {sum(alpha) + sum(mu)} exceeds the cap of {DEGREE_CAP}"
                )
            coeff = ratqt(coeff)
            if coeff:
                key = (alpha, mu)
                total = self.terms.get(key, QT(0)) + coeff
                if total:
                    self.terms[key] = total
                else:
                    del self.terms[key]

    @classmethod
    def one(cls) -> AsymFn:
        return cls(0, {((), ()): 1})

    @classmethod
    def from_poly(cls, f: LaurentPoly) -> AsymFn:
        """A polynomial in x_1..x_k, viewed with an empty symmetric tail."""
        return cls(f.rank, {(exps, ()): coeff for exps, coeff in f.terms.items()})

    @classmethod
    def from_symmetric(cls, g: SymFn, rank: int = 0) -> AsymFn:
        return cls(rank, {((0,) * rank, mu): coeff for mu, coeff in g.terms.items()})

    def _aligned(self, other: AsymFn) -> tuple[AsymFn, AsymFn]:
        rank = max(self.rank, other.rank)
        return raise_rank(self, rank), raise_rank(other, rank)

    def __add__(self, other: AsymFn) -> AsymFn:
        left, right = self._aligned(other)
        terms = dict(left.terms)
        for key, coeff in right.terms.items():
            terms[key] = terms.get(key, QT(0)) + coeff
        return AsymFn(left.rank, terms)

    def __neg__(self) -> AsymFn:
        return self.scale(-1)

    def __sub__(self, other: AsymFn) -> AsymFn:
        return self + (-other)

    def scale(self, value: RatQT | int) -> AsymFn:
        value = ratqt(value)
        return AsymFn(
            self.rank, {key: coeff * value for key, coeff in self.terms.items()}
        )

    def __mul__(self, other: AsymFn | RatQT | int) -> AsymFn:
        if not isinstance(other, AsymFn):
            return self.scale(other)
        left, right = self._aligned(other)
        terms: dict[Term, RatQT] = {}
        for (alpha, mu), a in left.terms.items():
            for (beta, nu), b in right.terms.items():
                exps = tuple(x + y for x, y in zip(alpha, beta))
                for lam, c in (m(mu) * m(nu)).terms.items():
                    key = (exps, lam)
                    terms[key] = terms.get(key, QT(0)) + a * b * c
        return AsymFn(left.rank, terms)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AsymFn):
            return NotImplemented
        return not to_mas_basis(self - other)

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(to_mas_basis(self))

    def degree(self) -> int:
        return max((sum(a) + sum(mu) for a, mu in self.terms), default=0)

    def coefficient(self, lam: Sequence[int], mu: Sequence[int]) -> RatQT:
        """Coordinate on the basis element m<lam|mu>."""
        return to_mas_basis(self).get((tuple(lam), tuple(mu)), QT(0))

    def __str__(self) -> str:
        return render_asym(self)

    def __repr__(self) -> str:
        return f"AsymFn({self.rank}, {render_asym(self)!r})"


# ---------------------------------------------------------------------------
# Presentations
# ---------------------------------------------------------------------------


def basis_element(lam: Sequence[int], mu: Sequence[int]) -> AsymFn:
    """m<lam|mu> = x^lam m_mu[X_l(lam)]."""
    lam = tuple(lam)
    _expect(is_strict_composition(lam), f"{lam} is not a strict composition")
    return AsymFn(len(lam), {(lam, tuple(mu)): 1})


def raise_rank(F: AsymFn, to: int) -> AsymFn:
    """Rewrite in rank ``to`` with m_mu[X_k] = sum_a x_{k+1}^a m_{mu - a}[X_{k+1}]."""
    _expect(to >= F.rank, f"Cannot raise rank {F.rank} to {to}")
    terms = F.terms
    for _ in range(F.rank, to):
        raised: dict[Term, RatQT] = {}
        for (alpha, mu), coeff in terms.items():
            for a, g in add_letter(m(mu)).items():
                for nu, c in g.terms.items():
                    key = (alpha + (a,), nu)
                    raised[key] = raised.get(key, QT(0)) + coeff * c
        terms = {key: coeff for key, coeff in raised.items() if coeff}
    return AsymFn(to, terms)


def to_mas_basis(F: AsymFn) -> dict[AsymIndex, RatQT]:
    """Coordinates on the almost symmetric monomials.

    Rank is peeled from the top: a term whose last exponent is positive is a
    basis element, otherwise m_mu[X_k] = m_mu[X_{k-1}] - sum_a x_k^a m_{mu-a}[X_k]
    moves it one rank down.
    """
    coords: dict[AsymIndex, RatQT] = {}

    def add(key: AsymIndex, value: RatQT) -> None:
        coords[key] = coords.get(key, QT(0)) + value

    current = dict(F.terms)
    for _ in range(F.rank, 0, -1):
        lower: dict[Term, RatQT] = {}
        for (alpha, mu), coeff in current.items():
            if alpha[-1] > 0:
                add((alpha, mu), coeff)
                continue
            head = alpha[:-1]
            lower[(head, mu)] = lower.get((head, mu), QT(0)) + coeff
            for a in set(mu):
                add((head + (a,), remove_part(mu, a)), -coeff)
        current = lower
    for (_, mu), coeff in current.items():
        add(((), mu), coeff)
    return {key: value for key, value in coords.items() if value}


def from_mas_basis(coords: Mapping[AsymIndex, RatQT | int]) -> AsymFn:
    rank = max((len(lam) for lam, _ in coords), default=0)
    result = AsymFn(rank)
    for (lam, mu), coeff in coords.items():
        result = result + raise_rank(basis_element(lam, mu), rank).scale(coeff)
    return result


def lower_rank(F: AsymFn) -> AsymFn:
    """The presentation of smallest rank."""
    return from_mas_basis(to_mas_basis(F))


def truncate(F: AsymFn, n: int) -> LaurentPoly:
    """Pi_n: evaluate the tail alphabet on x_{k+1}, ..., x_n."""
    k = F.rank
    _expect(n >= k, f"Cannot truncate a rank-{k} function to {n} variables")
    result = LaurentPoly.zero(n)
    for (alpha, mu), coeff in F.terms.items():
        tail = eval_finite(m(mu), n, k + 1, n - k)
        result = result + tail.shift(alpha + (0,) * (n - k)).scale(coeff)
    return result


def render_asym(F: AsymFn) -> str:
    coords = sorted(
        to_mas_basis(F).items(),
        key=lambda item: (sum(item[0][0]) + sum(item[0][1]), item[0]),
        reverse=True,
    )
    return join_terms(
        render_term(coeff, _basis_label(index)) for index, coeff in coords
    )


def _basis_label(index: AsymIndex) -> str:
    lam, mu = index
    pieces = [render_monomial(lam)] if any(lam) else []
    if mu:
        pieces.append(f"m[{','.join(map(str, mu))}][X{len(lam)}]")
    return "*".join(pieces)


# ---------------------------------------------------------------------------
# Limit operators
# ---------------------------------------------------------------------------


def _act_on_finite(
    F: AsymFn, rank: int, action: Callable[[LaurentPoly], LaurentPoly]
) -> AsymFn:
    """Apply an operator on x_1..x_rank that commutes with the symmetric tail."""
    F = raise_rank(F, max(F.rank, rank))
    groups: dict[Weight, dict[Weight, RatQT]] = {}
    for (alpha, mu), coeff in F.terms.items():
        groups.setdefault(mu, {})[alpha] = coeff
    terms: dict[Term, RatQT] = {}
    for mu, finite in groups.items():
        for alpha, coeff in action(LaurentPoly(F.rank, finite)).terms.items():
            terms[(alpha, mu)] = terms.get((alpha, mu), QT(0)) + coeff
    return AsymFn(F.rank, terms)


def limit_T(i: int, F: AsymFn) -> AsymFn:
    _expect(i >= 1, f"T_{i} is not a generator")
    return _act_on_finite(F, i + 1, lambda f: apply_T(i, f))


def limit_T_inverse(i: int, F: AsymFn) -> AsymFn:
    _expect(i >= 1, f"T_{i} is not a generator")
    return _act_on_finite(F, i + 1, lambda f: apply_T_inv(i, f))


def limit_X(i: int, F: AsymFn) -> AsymFn:
    _expect(i >= 1, f"X_{i} is not a generator")

    def multiply(f: LaurentPoly) -> LaurentPoly:
        exps = [0] * f.rank
        exps[i - 1] = 1
        return f.shift(exps)

    return _act_on_finite(F, i, multiply)


@lru_cache(maxsize=None)
def _y_kernel(k: int, alpha: Weight, mu: Weight) -> tuple[tuple[Term, RatQT], ...]:
    """Y_1 T_1 ... T_{k-1} applied to x^alpha m_mu[X_k], as a tuple of terms.

    With m_mu[X_k] = sum_a x_k^a g_a[X_{k-1}], each piece f x_k^n G[X_{k-1}] maps to
    t^k sum_{j=1..n} q^j x_1^j h_{n-j}[(1-t)X_k] f(x_2..x_k) G[X_k + q x_1].
    """
    head = alpha[:-1]
    terms: dict[Term, RatQT] = {}
    for a, g in remove_letter(m(mu)).items():
        n = alpha[-1] + a
        for b, g_b in add_letter(g).items():
            for j in range(1, n + 1):
                exps = (j + b,) + head
                scalar = q ** (j + b) * t**k
                for nu, c in (h_one_minus_t(n - j) * g_b).terms.items():
                    terms[(exps, nu)] = terms.get((exps, nu), QT(0)) + scalar * c
    return tuple((key, value) for key, value in terms.items() if value)


def _limit_Y1(F: AsymFn) -> AsymFn:
    F = raise_rank(F, max(F.rank, 1))
    k = F.rank

    def untwist(f: LaurentPoly) -> LaurentPoly:
        for j in range(1, k):
            f = apply_T_inv(j, f)
        return f

    G = _act_on_finite(F, k, untwist)
    terms: dict[Term, RatQT] = {}
    for (alpha, mu), coeff in G.terms.items():
        for key, value in _y_kernel(k, alpha, mu):
            terms[key] = terms.get(key, QT(0)) + coeff * value
    return AsymFn(k, terms)


def limit_Y(i: int, F: AsymFn) -> AsymFn:
    """The limit Cherednik operator Y_i, exactly."""
    _expect(i >= 1, f"Y_{i} is not a generator")
    if i == 1:
        return _limit_Y1(F)
    inner = limit_Y(i - 1, limit_T(i - 1, F))
    return limit_T(i - 1, inner).scale(t**-1)


# ---------------------------------------------------------------------------
# Limit Macdonald functions
# ---------------------------------------------------------------------------


def _reconstruct(lam: Weight, window: int) -> AsymFn:
    """Read E_lam off E_{lam 0^n}, for lam without zero entries.

    The result must reproduce E at the next ``window`` ranks as well.
    """
    k = len(lam)
    tail = max(sum(lam) - k, 0)
    E = macdonald_E(lam + (0,) * tail)
    terms: dict[Term, RatQT] = {}
    for exps, coeff in E.terms.items():
        rest = exps[k:]
        if all(rest[j] >= rest[j + 1] for j in range(len(rest) - 1)):
            terms[(exps[:k], strict_part(rest))] = coeff
    F = AsymFn(k, terms)
    for extra in range(1, window + 1):
        finite = macdonald_E(lam + (0,) * (tail + extra))
        if truncate(F, k + tail + extra) != finite:
            raise LimitReconstructionError(
                f"Limit of E{lam} disagrees with rank {k + tail + extra}"
            )
    logger.debug(f"Reconstructed limit E{lam} from rank {k + tail}")
    return F


@lru_cache(maxsize=None)
def _limit_macdonald(lam: Weight, window: int) -> AsymFn:
    if not lam:
        return AsymFn.one()
    gap = next(
        (i for i in range(1, len(lam)) if lam[i - 1] == 0 and lam[i] > 0), None
    )
    if gap is None:
        return _reconstruct(lam, window)
    # T_i E_mu = E_{s_i mu} when mu_{i+1} = 0
    mu = list(lam)
    mu[gap - 1], mu[gap] = mu[gap], mu[gap - 1]
    return limit_T(gap, _limit_macdonald(strict_part(mu), window))


def limit_macdonald(lam: Sequence[int], window: int = 2) -> AsymFn:
    """The limit nonsymmetric Macdonald function of a weight."""
    lam = tuple(lam)
    _expect(all(part >= 0 for part in lam), f"{lam} has a negative entry")
    _expect(window >= 1, "The truncation window must be nonempty")
    return _limit_macdonald(strict_part(lam), window)


def limit_eigenvalue(lam: Sequence[int], i: int) -> RatQT:
    """sgn_i(lam) q^lam_i t^u_lam(i)."""
    if not sgn_stat(lam, i):
        return QT(0)
    return q ** lam[i - 1] * t ** u_stat(lam, i)


def check_limit_eigen(lam: Sequence[int]) -> bool:
    lam = strict_part(lam)
    F = limit_macdonald(lam)
    return all(
        limit_Y(i, F) == F.scale(limit_eigenvalue(lam, i))
        for i in range(1, len(lam) + 2)
    )


def check_limit_intertwiner(lam: Sequence[int], i: int) -> bool:
    """The intertwiner identity relating E_lam and E_{s_i lam} for lam_i > lam_{i+1}."""
    lam = tuple(lam)
    _expect(
        i < len(lam) and lam[i - 1] > lam[i], f"{lam} has no descent at position {i}"
    )
    swapped = list(lam)
    swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
    F = limit_macdonald(lam)
    image = limit_T(i, F)
    if lam[i]:
        image = image + F.scale(intertwiner_coefficient(lam, i))
    return image == limit_macdonald(swapped)


# ---------------------------------------------------------------------------
# Limit symmetrizer and the eigenbasis E~
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def tail_symmetrization(beta: Weight) -> SymFn:
    """Limit of the tail symmetrizer on y_1^beta_1 y_2^beta_2 ..., in Sym[X_k].

    Decreasing exponents give Hall-Littlewood Q_beta. An ascent a < b is sorted
    with eps T_j = eps and T(y^a z^b) = t y^b z^a - (1-t) sum y^{a+1+m} z^{b-1-m}.
    """
    beta = strict_part(beta)
    ascent = next(
        (j for j in range(len(beta) - 1) if beta[j] < beta[j + 1]), None
    )
    if ascent is None:
        return hall_littlewood_Q(beta)
    a, b = beta[ascent], beta[ascent + 1]

    def replaced(left: int, right: int) -> Weight:
        return beta[:ascent] + (left, right) + beta[ascent + 2 :]

    result = tail_symmetrization(replaced(b, a)).scale(t)
    for shift in range(b - a - 1):
        pinched = tail_symmetrization(replaced(a + 1 + shift, b - 1 - shift))
        result = result - pinched.scale(1 - t)
    return result


@lru_cache(maxsize=None)
def _lower_alphabet(mu: Weight, count: int) -> tuple[tuple[Weight, SymFn], ...]:
    """m_mu[X_{k+count}] = sum y^gamma g_gamma[X_k] with y = x_{k+1..k+count}."""
    current: dict[Weight, SymFn] = {(): m(mu)}
    for _ in range(count):
        lowered: dict[Weight, SymFn] = {}
        for exps, g in current.items():
            for a, g_a in remove_letter(g).items():
                key = (a,) + exps
                lowered[key] = lowered.get(key, SymFn()) + g_a
        current = {exps: g for exps, g in lowered.items() if g}
    return tuple(current.items())


def limit_symmetrizer(k: int, F: AsymFn) -> AsymFn:
    """The limit of the tail symmetrizers over x_{k+1}, ..., x_n as n grows."""
    _expect(k >= 0, f"Negative rank {k}")
    if F.rank <= k:
        return raise_rank(F, k)
    count = F.rank - k
    terms: dict[Term, RatQT] = {}
    for (alpha, mu), coeff in F.terms.items():
        head, beta = alpha[:k], alpha[k:]
        for gamma, g in _lower_alphabet(mu, count):
            exponents = tuple(x + y for x, y in zip(beta, gamma))
            for rho, c in (g * tail_symmetrization(exponents)).terms.items():
                terms[(head, rho)] = terms.get((head, rho), QT(0)) + coeff * c
    return AsymFn(k, terms)


def v_factor(mu: Sequence[int]) -> RatQT:
    """v_mu(t) = product of [m_i(mu)]_t! over the part sizes i."""
    result = QT(1)
    for count in multiplicities(mu).values():
        result *= qt_factorial(count)
    return result


def tilde_E(lam: Sequence[int], mu: Sequence[int], window: int = 2) -> AsymFn:
    """The eigenfunction E~<lam|mu>, normalized so m<lam|mu> has coefficient 1."""
    lam, mu = tuple(lam), tuple(mu)
    _expect(is_strict_composition(lam), f"{lam} is not a strict composition")
    if not is_partition(mu):
        raise ValueError(f"{mu} is not a partition")
    symmetrized = limit_symmetrizer(len(lam), limit_macdonald(concat(lam, mu), window))
    return symmetrized.scale(1 / ((1 - t) ** len(mu) * v_factor(mu)))


def check_tilde_E(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Unit leading coefficient, eigen-equations and downward support."""
    lam, mu = tuple(lam), tuple(mu)
    F = tilde_E(lam, mu)
    coords = to_mas_basis(F)
    if coords.get((lam, mu)) != 1:
        return False
    target = (lam, mu)
    if any(key != target and not as_order_less(key, target) for key in coords):
        return False
    combined = concat(lam, mu)
    for i in range(1, len(lam) + 2):
        value = QT(0)
        if sgn_stat(lam, i):
            value = q ** lam[i - 1] * t ** u_stat(combined, i)
        if limit_Y(i, F) != F.scale(value):
            return False
    return True


# ---------------------------------------------------------------------------
# Checks against finite rank
# ---------------------------------------------------------------------------


def check_cY_triangularity(index: AsymIndex, i: int) -> bool:
    """Y_i m<lam|mu> has the expected diagonal coefficient and lower support."""
    lam, mu = index
    image = to_mas_basis(limit_Y(i, basis_element(lam, mu)))
    diagonal = QT(0)
    if sgn_stat(lam, i):
        diagonal = q ** lam[i - 1] * t ** u_stat(concat(lam, mu), i)
    if image.get((tuple(lam), tuple(mu)), QT(0)) != diagonal:
        return False
    return all(
        key == (tuple(lam), tuple(mu)) or as_order_less(key, (tuple(lam), tuple(mu)))
        for key in image
    )


def check_truncation_compatibility(i: int, F: AsymFn, n: int) -> bool:
    """Pi_n commutes with T_i, T_i^-1 and X_i."""
    _expect(n > i and n >= F.rank, f"Rank {n} too small for T_{i} on rank {F.rank}")
    base = truncate(F, n)
    if truncate(limit_T(i, F), n) != apply_T(i, base):
        return False
    if truncate(limit_T_inverse(i, F), n) != apply_T_inv(i, base):
        return False
    return truncate(limit_X(i, F), n) == base * LaurentPoly.variable(i, n)


def residual_orders(
    sequence: Callable[[int], LaurentPoly], limit: AsymFn, ranks: Iterable[int]
) -> dict[int, Order]:
    """Smallest t-order of sequence(n) - Pi_n(limit) for each n."""
    return {n: (sequence(n) - truncate(limit, n)).min_t_order() for n in ranks}


def _strictly_grows(before: Order, after: Order) -> bool:
    if before == INFINITY:
        return after == INFINITY
    return after > before


def _orders_pass(orders: Mapping[int, Order], slack: int) -> bool:
    """Orders reach n - slack at each rank n and strictly increase between ranks."""
    ranks = sorted(orders)
    if any(orders[n] < n - slack for n in ranks):
        return False
    return all(_strictly_grows(orders[a], orders[b]) for a, b in zip(ranks, ranks[1:]))


def limit_residual_orders(i: int, F: AsymFn, ranks: Iterable[int]) -> dict[int, Order]:
    """t-orders of Y_i^(n) Pi_n F - Pi_n(Y_i F) over a window of ranks."""
    image = limit_Y(i, F)
    return residual_orders(lambda n: apply_Y(i, truncate(F, n)), image, ranks)


def verify_limit_convergence(i: int, F: AsymFn, ranks: Iterable[int]) -> bool:
    """Residual orders strictly increase with n and stay above n - (i + deg F)."""
    ranks = [n for n in ranks if n >= max(F.rank, i)]
    orders = limit_residual_orders(i, F, ranks)
    passed = _orders_pass(orders, i + F.degree())
    if not passed:
        logger.warning(f"Y_{i} limit residuals {orders} fail the growth bound")
    return passed


def check_symmetrizer_limit(k: int, F: AsymFn, ranks: Iterable[int]) -> bool:
    """The finite tail symmetrizers applied to Pi_n F converge to the limit one."""
    ranks = [n for n in ranks if n > max(F.rank, k)]
    return verify_sequence_limit(
        lambda n: symmetrizer_eps(k, truncate(F, n)),
        limit_symmetrizer(k, F),
        ranks,
        slack=k + F.degree(),
    )


def check_Y_limit_discrepancy(i: int, index: AsymIndex, n: int) -> bool:
    """(Y_i - Y~_i) Pi_n m<lam|mu> has t-order at least n - (i + |lam| + |mu|)."""
    lam, mu = index
    f = truncate(basis_element(lam, mu), n)
    difference = apply_Y(i, f) - apply_Y_deformed(i, f)
    return difference.min_t_order() >= n - (i + sum(lam) + sum(mu))


def elementary_sequence(i: int) -> tuple[Callable[[int], LaurentPoly], AsymFn]:
    """f_n = [n+1]_t e_i(x_1..x_n), whose limit is e_i[X] / (1 - t)."""

    def member(n: int) -> LaurentPoly:
        return eval_finite(e(i), n, 1, n).scale(qt_int(n + 1))

    return member, AsymFn.from_symmetric(e(i)).scale(1 / (1 - t))


def verify_sequence_limit(
    sequence: Callable[[int], LaurentPoly],
    limit: AsymFn,
    ranks: Iterable[int],
    slack: int = 0,
) -> bool:
    """Residual t-orders strictly increase and are at least n - slack."""
    return _orders_pass(residual_orders(sequence, limit, ranks), slack)
