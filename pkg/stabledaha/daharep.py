"""The standard representation of the GL_k DAHA on Laurent polynomials.

Conventions are the unnormalized ones, (T_i - 1)(T_i + t) = 0, with

    T_i f   = s_i f + (1 - t) x_i (f - s_i f) / (x_i - x_{i+1})
    omega f = f(q^-1 x_k, x_1, ..., x_{k-1})
    Y_i     = t^(k+1-i) T_{i-1} ... T_1 omega^-1 T_{k-1}^-1 ... T_i^-1

Operator words are written in product order; the rightmost atom acts first.
Nonsymmetric Macdonald polynomials are built by intertwiners from E_0 = 1.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Iterable, Iterator, Literal, Sequence

from .coeffring import QT, RatQT, q, qt_factorial, safe_div, t
from .polyring import LaurentPoly
from .weyl import (
    RankError,
    Weight,
    _expect,
    all_perms,
    bruhat_leq,
    compositions,
    perm_length,
    reduced_word,
    sgn_stat,
    u_stat,
)

logger = logging.getLogger(__name__)

Atom = tuple  # ("T", i), ("Tinv", i), ("X", i), ("Y", i), ("omega",), ...
OpWord = Sequence[Atom]
Chain = Literal["first", "last"]


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def apply_T(i: int, f: LaurentPoly) -> LaurentPoly:
    """Demazure-Lusztig operator T_i."""
    _expect(1 <= i < f.rank, f"T_{i} does not act in rank {f.rank}")
    correction = LaurentPoly.variable(i, f.rank) * f.divided_difference(i)
    return f.swap(i) + correction.scale(1 - t)


def apply_T_inv(i: int, f: LaurentPoly) -> LaurentPoly:
    """T_i^-1 = t^-1 T_i - t^-1 (1 - t), from the quadratic relation."""
    return (apply_T(i, f) - f.scale(1 - t)).scale(t**-1)


def apply_X(i: int, f: LaurentPoly) -> LaurentPoly:
    return LaurentPoly.variable(i, f.rank) * f


def apply_X_inv(i: int, f: LaurentPoly) -> LaurentPoly:
    exps = [0] * f.rank
    exps[i - 1] = -1
    return f.shift(exps)


def _unit(rank: int, i: int) -> list[int]:
    exps = [0] * rank
    exps[i - 1] = 1
    return exps


def apply_omega(f: LaurentPoly, inverse: bool = False) -> LaurentPoly:
    """omega: x_1 -> q^-1 x_k and x_j -> x_{j-1}.

    The inverse sends x_j -> x_{j+1} and x_k -> q x_1.
    """
    k = f.rank
    if k == 0:
        return f
    if inverse:
        images = [(QT(1), _unit(k, j + 1)) for j in range(1, k)] + [(q, _unit(k, 1))]
    else:
        images = [(q**-1, _unit(k, k))]
        images += [(QT(1), _unit(k, j - 1)) for j in range(2, k + 1)]
    return f.substitute(images)


def apply_pr1(f: LaurentPoly) -> LaurentPoly:
    """Projection onto x_1 P_k^+: keep monomials divisible by x_1."""
    return f.filter_terms(lambda exps: exps[0] >= 1)


def apply_varpi(f: LaurentPoly) -> LaurentPoly:
    return apply_pr1(apply_omega(f, inverse=True))


def apply_omega_tilde(f: LaurentPoly, inverse: bool = False) -> LaurentPoly:
    """omega~_k = t^(1-k) T_{k-1} ... T_1 x_1^-1 and its inverse."""
    k = f.rank
    if inverse:
        g = f
        for j in range(k - 1, 0, -1):
            g = apply_T_inv(j, g)
        return apply_X(1, g).scale(t ** (k - 1))
    g = apply_X_inv(1, f)
    for j in range(1, k):
        g = apply_T(j, g)
    return g.scale(t ** (1 - k))


def apply_pi(f: LaurentPoly) -> LaurentPoly:
    """pi_k: specialize x_k to 0."""
    return f.evaluate_at_zero_last()


def _cherednik(i: int, f: LaurentPoly, middle) -> LaurentPoly:
    k = f.rank
    _expect(1 <= i <= k, f"Y_{i} does not act in rank {k}")
    g = f
    for j in range(i, k):
        g = apply_T_inv(j, g)
    g = middle(g)
    for j in range(1, i):
        g = apply_T(j, g)
    return g.scale(t ** (k + 1 - i))


def apply_Y(i: int, f: LaurentPoly) -> LaurentPoly:
    """Cherednik operator Y_i in rank f.rank."""
    return _cherednik(i, f, lambda g: apply_omega(g, inverse=True))


def apply_Y_deformed(i: int, f: LaurentPoly) -> LaurentPoly:
    """Deformed operator Y~_i, with omega^-1 replaced by pr_1 omega^-1."""
    _expect(f.is_polynomial(), "Y~ acts on polynomials only", RankError)
    return _cherednik(i, f, apply_varpi)


def apply_omega_partial(i: int, f: LaurentPoly) -> LaurentPoly:
    """omega_i^-1 on the first i variables: x_j -> x_{j+1} (j < i), x_i -> q x_1."""
    k = f.rank
    images = []
    for j in range(1, k + 1):
        if j < i:
            images.append((QT(1), _unit(k, j + 1)))
        elif j == i:
            images.append((q, _unit(k, 1)))
        else:
            images.append((QT(1), _unit(k, j)))
    return f.substitute(images)


_ATOMS = {
    "T": lambda atom, f: apply_T(atom[1], f),
    "Tinv": lambda atom, f: apply_T_inv(atom[1], f),
    "X": lambda atom, f: apply_X(atom[1], f),
    "Xinv": lambda atom, f: apply_X_inv(atom[1], f),
    "Y": lambda atom, f: apply_Y(atom[1], f),
    "Ytilde": lambda atom, f: apply_Y_deformed(atom[1], f),
    "omega": lambda atom, f: apply_omega(f),
    "omega_inv": lambda atom, f: apply_omega(f, inverse=True),
    "omega_tilde": lambda atom, f: apply_omega_tilde(f),
    "omega_tilde_inv": lambda atom, f: apply_omega_tilde(f, inverse=True),
    "pr1": lambda atom, f: apply_pr1(f),
    "pi": lambda atom, f: apply_pi(f),
    "scalar": lambda atom, f: f.scale(atom[1]),
}


def apply_word(word: OpWord, f: LaurentPoly) -> LaurentPoly:
    """Apply an operator word; the rightmost atom acts first."""
    for atom in reversed(word):
        try:
            action = _ATOMS[atom[0]]
        except KeyError:
            raise RankError(f"Unknown operator atom {atom!r}") from None
        f = action(atom, f)
    return f


def monomials(rank: int, max_degree: int) -> Iterator[LaurentPoly]:
    for degree in range(max_degree + 1):
        for exps in compositions(degree, rank):
            yield LaurentPoly.monomial(exps)


# ---------------------------------------------------------------------------
# Spectral data and nonsymmetric Macdonald polynomials
# ---------------------------------------------------------------------------


def spectral_value(lam: Sequence[int], i: int) -> RatQT:
    return q ** lam[i - 1] * t ** u_stat(lam, i)


def spectral_vector(lam: Sequence[int]) -> list[RatQT]:
    """(q^lam_i t^u_lam(i))_i, the eigenvalues of Y_1..Y_k on E_lam."""
    return [spectral_value(lam, i) for i in range(1, len(lam) + 1)]


def intertwiner_coefficient(mu: Sequence[int], i: int) -> RatQT:
    """(1-t) c_{i+1} / (c_i - c_{i+1}) for the spectral values c of mu."""
    upper = spectral_value(mu, i)
    lower = spectral_value(mu, i + 1)
    return safe_div((1 - t) * lower, upper - lower)


def _inversion(lam: Weight, chain: Chain) -> int | None:
    positions = [i for i in range(1, len(lam)) if lam[i - 1] < lam[i]]
    if not positions:
        return None
    return positions[0] if chain == "first" else positions[-1]


@lru_cache(maxsize=None)
def _macdonald_E(lam: Weight, chain: Chain) -> LaurentPoly:
    k = len(lam)
    if not any(lam):
        return LaurentPoly.constant(k)
    i = _inversion(lam, chain)
    if i is not None:
        mu = list(lam)
        mu[i - 1], mu[i] = mu[i], mu[i - 1]
        mu = tuple(mu)
        logger.debug(f"E{lam}: intertwiner T_{i} from E{mu}")
        base = _macdonald_E(mu, chain)
        return apply_T(i, base) + base.scale(intertwiner_coefficient(mu, i))
    # dominant and nonzero: peel by x_1 omega^-1
    shorter = lam[1:] + (lam[0] - 1,)
    logger.debug(f"E{lam}: x_1 omega^-1 from E{shorter}")
    raised = apply_X(1, apply_omega(_macdonald_E(shorter, chain), inverse=True))
    return raised.scale(q ** (1 - lam[0]))


def macdonald_E(lam: Sequence[int], chain: Chain = "first") -> LaurentPoly:
    """Nonsymmetric Macdonald polynomial E_lam in rank len(lam)."""
    lam = tuple(lam)
    _expect(all(part >= 0 for part in lam), f"{lam} has a negative entry")
    return _macdonald_E(lam, chain)


def check_eigen(lam: Sequence[int]) -> bool:
    """Y_i E_lam = q^lam_i t^u_lam(i) E_lam for every i."""
    E = macdonald_E(lam)
    return all(
        apply_Y(i, E) == E.scale(value)
        for i, value in enumerate(spectral_vector(lam), start=1)
    )


def check_E_triangular(lam: Sequence[int]) -> bool:
    """E_lam has leading monomial x^lam with coefficient 1 and lower terms below lam."""
    lam = tuple(lam)
    E = macdonald_E(lam)
    if E.coefficient(lam) != 1:
        return False
    return all(
        exps == lam or bruhat_leq(exps, lam) for exps in E.terms
    )


def check_E_chain_independence(lam: Sequence[int]) -> bool:
    return macdonald_E(lam, "first") == macdonald_E(lam, "last")


def _last_nonzero(lam: Sequence[int]) -> int:
    return max(i for i, part in enumerate(lam, start=1) if part)


def check_int2(lam: Sequence[int]) -> bool:
    """x_1 omega^-1 E_lam = q^lam_k E_(lam_k + 1, lam_1, ..., lam_{k-1})."""
    lam = tuple(lam)
    raised = apply_X(1, apply_omega(macdonald_E(lam), inverse=True))
    rotated = (lam[-1] + 1,) + lam[:-1]
    return raised == macdonald_E(rotated).scale(q ** lam[-1])


def check_int3(lam: Sequence[int]) -> bool:
    """The third intertwiner relation, relating E_lam to E_lam*."""
    lam = tuple(lam)
    k = len(lam)
    _expect(any(lam), "The relation needs a nonzero weight")
    a = _last_nonzero(lam)
    positive = sum(1 for part in lam if part)
    star = (lam[a - 1] + 1,) + lam[: a - 1] + (0,) * (k - a)
    c = safe_div(t ** (1 + positive), q ** lam[a - 1] * t ** u_stat(lam, a))
    E = macdonald_E(lam)
    forward = E
    backward = E
    for j in range(a, k):
        forward = apply_T(j, forward)
        backward = apply_T_inv(j, backward)
    combined = forward - backward.scale(c * t ** (k - a))
    lhs = apply_X(1, apply_omega(combined, inverse=True))
    rhs = macdonald_E(star).scale(q ** lam[a - 1] * (1 - c))
    return lhs == rhs


def check_divisibility_lemma(lam: Sequence[int]) -> bool:
    """x_1...x_a divides E_lam and pi T^-1_{k-1}...T^-1_a E_lam = 0.

    Requires the nonzero parts of lam to come first, a being their number.
    """
    lam = tuple(lam)
    k = len(lam)
    _expect(any(lam), "The lemma needs a nonzero weight")
    a = _last_nonzero(lam)
    _expect(all(lam[:a]), f"{lam} has a zero before its last nonzero part")
    E = macdonald_E(lam)
    if any(min(exps[:a]) < 1 for exps in E.terms):
        return False
    g = E
    for j in range(a, k):
        g = apply_T_inv(j, g)
    return not apply_pi(g)


def check_E_stability(lam: Sequence[int], n: int) -> bool:
    """pi_N E_{lam 0^n} = E_{lam 0^(n-1)} when a(lam) = p(lam)."""
    lam = tuple(lam)
    _expect(n >= 1, "Stability needs at least one trailing zero")
    longer = macdonald_E(lam + (0,) * n)
    return apply_pi(longer) == macdonald_E(lam + (0,) * (n - 1))


# ---------------------------------------------------------------------------
# Symmetrizers
# ---------------------------------------------------------------------------


def apply_T_perm(w: Sequence[int], f: LaurentPoly) -> LaurentPoly:
    """T_w via a reduced word."""
    for i in reversed(reduced_word(tuple(w))):
        f = apply_T(i, f)
    return f


def _parabolic_perms(k: int, n: int) -> Iterable[tuple[int, ...]]:
    head = tuple(range(1, k + 1))
    for tail in all_perms(n - k):
        yield head + tuple(k + value for value in tail)


def symmetrizer_eps(k: int, f: LaurentPoly) -> LaurentPoly:
    """Normalized tail symmetrizer over the parabolic subgroup fixing 1..k."""
    n = f.rank
    _expect(0 <= k < n, f"Symmetrizer needs 0 <= k < n, got k={k}, n={n}")
    total = LaurentPoly.zero(n)
    for w in _parabolic_perms(k, n):
        total = total + apply_T_perm(w, f).scale(t ** (-perm_length(w)))
    tail = n - k
    return total.scale(t ** (tail * (tail - 1) // 2) / qt_factorial(tail))


# ---------------------------------------------------------------------------
# Relation checks
# ---------------------------------------------------------------------------


def _hecke_square_word(k: int) -> list[Atom]:
    """T_1 ... T_{k-1} T_{k-1} ... T_1."""
    up = [("T", j) for j in range(1, k)]
    return up + list(reversed(up))


def daha_relations(k: int) -> list[tuple[str, OpWord, OpWord]]:
    """Defining relations and derived identities as pairs of operator words."""
    relations: list[tuple[str, OpWord, OpWord]] = []

    def add(name: str, lhs: list[Atom], rhs: list[Atom]) -> None:
        relations.append((name, lhs, rhs))

    omega, omega_inv = ("omega",), ("omega_inv",)
    for i in range(1, k):
        T, Tinv = ("T", i), ("Tinv", i)
        add(f"inverse T{i}", [T, Tinv], [])
        add(f"X relation {i}", [("scalar", t), Tinv, ("X", i), Tinv], [("X", i + 1)])
        add(f"Y relation {i}", [("scalar", t**-1), T, ("Y", i), T], [("Y", i + 1)])
        for j in range(1, k + 1):
            if j not in (i, i + 1):
                add(f"T{i} X{j}", [T, ("X", j)], [("X", j), T])
                add(f"T{i} Y{j}", [T, ("Y", j)], [("Y", j), T])
        for j in range(i + 2, k):
            add(f"T{i} T{j}", [T, ("T", j)], [("T", j), T])
        if i + 1 < k:
            add(f"braid {i}", [T, ("T", i + 1), T], [("T", i + 1), T, ("T", i + 1)])
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            add(f"Y{i} Y{j}", [("Y", i), ("Y", j)], [("Y", j), ("Y", i)])
    if k >= 2:
        add("cross", [("Y", 1), ("T", 1), ("X", 1)], [("X", 2), ("Y", 1), ("T", 1)])
    xs = [("X", j) for j in range(1, k + 1)]
    add("det", [("Y", 1)] + xs, [("scalar", q)] + xs + [("Y", 1)])
    add(
        "Y1 X1",
        [("Y", 1), ("X", 1)],
        [("scalar", q * t ** (1 - k)), ("X", 1), ("Y", 1)] + _hecke_square_word(k),
    )
    add("omega X1", [omega, ("X", 1), omega_inv], [("scalar", q**-1), ("X", k)])
    for i in range(1, k):
        add(f"omega X{i + 1}", [omega, ("X", i + 1), omega_inv], [("X", i)])
    for i in range(2, k):
        add(f"omega T{i}", [omega, ("T", i), omega_inv], [("T", i - 1)])
    if k >= 3:
        squared = [omega, omega, ("T", 1), omega_inv, omega_inv]
        add("omega^2 T1", squared, [("T", k - 1)])
    return relations


def _quadratic_holds(i: int, f: LaurentPoly) -> bool:
    g = apply_T(i, f)
    return apply_T(i, g) == g.scale(1 - t) + f.scale(t)


def check_daha_relations(k: int, max_degree: int) -> list[str]:
    """Names of relations that fail on some monomial of degree <= max_degree."""
    failures = []
    basis = list(monomials(k, max_degree))
    for i in range(1, k):
        if not all(_quadratic_holds(i, f) for f in basis):
            logger.warning(f"Quadratic relation for T{i} fails in rank {k}")
            failures.append(f"quadratic T{i}")
    for name, lhs, rhs in daha_relations(k):
        if not all(apply_word(lhs, f) == apply_word(rhs, f) for f in basis):
            logger.warning(f"Relation '{name}' fails in rank {k}")
            failures.append(name)
    return failures


def check_pos_system(k: int, max_degree: int) -> list[str]:
    """The four identities linking pi_k with T, omega and omega~; returns failures."""
    _expect(k >= 2, "The identities need k >= 2")
    failures = []
    for f in monomials(k, max_degree):
        for i in range(1, k - 1):
            if apply_pi(apply_T(i, f)) != apply_T(i, apply_pi(f)):
                failures.append(f"pi T{i} on {f}")
        g = apply_omega_tilde(f, inverse=True)
        for j in range(1, k):
            g = apply_T_inv(j, g)
        if apply_pi(g):
            failures.append(f"pi T^-1 omega~^-1 on {f}")
        lhs = apply_pi(apply_omega_tilde(apply_T(k - 1, f), inverse=True))
        if lhs != apply_omega_tilde(apply_pi(f), inverse=True):
            failures.append(f"pi omega~^-1 T on {f}")
        lhs = apply_pi(apply_omega(apply_T(k - 1, f), inverse=True))
        if lhs != apply_omega(apply_pi(f), inverse=True):
            failures.append(f"pi omega^-1 T on {f}")
    return failures


def check_Y_minus_Ytilde(i: int, lam: Sequence[int]) -> bool:
    """(Y_i - Y~_i) x^lam vanishes if lam_i > 0.

    Otherwise it equals t^(k+1-i) T_{i-1} ... T_1 omega_i^-1 x^lam.
    """
    lam = tuple(lam)
    k = len(lam)
    f = LaurentPoly.monomial(lam)
    difference = apply_Y(i, f) - apply_Y_deformed(i, f)
    if lam[i - 1] > 0:
        return not difference
    expected = apply_omega_partial(i, f)
    for j in range(1, i):
        expected = apply_T(j, expected)
    return difference == expected.scale(t ** (k + 1 - i))


def check_Y_triangularity(i: int, lam: Sequence[int], deformed: bool = False) -> bool:
    """Y_i x^lam is a multiple of x^lam plus Bruhat-lower monomials."""
    lam = tuple(lam)
    f = LaurentPoly.monomial(lam)
    image = apply_Y_deformed(i, f) if deformed else apply_Y(i, f)
    leading = spectral_value(lam, i)
    if deformed:
        leading = leading * sgn_stat(lam, i)
    if image.coefficient(lam) != leading:
        return False
    return all(exps == lam or bruhat_leq(exps, lam) for exps in image.terms)


def y_scalar_check(k: int, max_degree: int) -> bool:
    """Y_1 ... Y_k acts on degree-d polynomials as q^d t^(k(k+1)/2)."""
    for f in monomials(k, max_degree):
        g = f
        for i in range(k, 0, -1):
            g = apply_Y(i, g)
        if g != f.scale(q ** f.degree() * t ** (k * (k + 1) // 2)):
            return False
    return True

