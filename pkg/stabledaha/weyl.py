"""Weights, compositions and the (affine) symmetric group.

Weights are plain integer tuples; permutations are 1-based one-line tuples,
so ``(2, 1, 3)`` is s_1 in S_3. Composition is right-to-left:
``compose(u, v)(x) == u(v(x))``.

The Bruhat order on weights follows the convention in which dominant
weights are small: lam < s_alpha(lam) exactly when <alpha, lam> > 0.
"""

from __future__ import annotations

import logging
from collections import Counter, deque
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator, Literal, Sequence

logger = logging.getLogger(__name__)

Weight = tuple[int, ...]
Perm = tuple[int, ...]
AsymIndex = tuple[Weight, Weight]

BFS_MAX_RANK = 4
BFS_MAX_ENTRY = 4


class RankError(RuntimeError):
    """Raised when ranks disagree or an index falls outside its range."""


class GuardError(RuntimeError):
    """Raised when an exhaustive check is asked to leave its guard box."""


def _expect(
    condition: bool, message: str, error: type[RuntimeError] = RankError
) -> None:
    if not condition:
        raise error(message)


# ---------------------------------------------------------------------------
# Compositions and partitions
# ---------------------------------------------------------------------------


def sort_orbit(
    lam: Sequence[int], direction: Literal["dominant", "antidominant"] = "dominant"
) -> Weight:
    """Dominant (decreasing) or anti-dominant (increasing) element of the orbit."""
    return tuple(sorted(lam, reverse=direction == "dominant"))


def strict_part(lam: Sequence[int]) -> Weight:
    """Drop trailing zeros, leaving a strict composition."""
    entries = list(lam)
    while entries and entries[-1] == 0:
        entries.pop()
    return tuple(entries)


def pad(lam: Sequence[int], length: int) -> Weight:
    _expect(len(lam) <= length, f"Cannot pad {tuple(lam)} down to length {length}")
    return tuple(lam) + (0,) * (length - len(lam))


def concat(*parts: Sequence[int]) -> Weight:
    return tuple(entry for part in parts for entry in part)


def is_partition(mu: Sequence[int]) -> bool:
    return all(part > 0 for part in mu) and all(
        mu[i] >= mu[i + 1] for i in range(len(mu) - 1)
    )


def is_strict_composition(lam: Sequence[int]) -> bool:
    return all(part >= 0 for part in lam) and (not lam or lam[-1] > 0)


def multiplicities(mu: Sequence[int]) -> dict[int, int]:
    """Multiplicities m_i(mu) of the positive parts."""
    return dict(Counter(part for part in mu if part > 0))


def remove_part(mu: Sequence[int], part: int) -> Weight:
    """Remove one occurrence of ``part`` from a partition."""
    entries = list(mu)
    entries.remove(part)
    return tuple(entries)


def support_size(lam: Sequence[int]) -> int:
    """Number of nonzero entries."""
    return sum(1 for entry in lam if entry != 0)


def partitions(n: int, max_part: int | None = None) -> Iterator[Weight]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if n == 0:
        yield ()
        return
    largest = n if max_part is None else min(n, max_part)
    for first in range(largest, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def compositions(total: int, length: int) -> Iterator[Weight]:
    """Weak compositions of ``total`` with exactly ``length`` parts."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, length - 1):
            yield (first,) + rest


def weights_in_box(rank: int, max_entry: int) -> Iterator[Weight]:
    yield from product(range(max_entry + 1), repeat=rank)


def strict_compositions(max_total: int, max_length: int) -> Iterator[Weight]:
    """Strict compositions with weight <= max_total and length <= max_length."""
    yield ()
    for length in range(1, max_length + 1):
        for total in range(1, max_total + 1):
            for lam in compositions(total, length):
                if lam[-1] > 0:
                    yield lam


def asym_indices(max_degree: int, max_length: int) -> Iterator[AsymIndex]:
    """All pairs <lam|mu> with |lam|+|mu| <= max_degree and l(lam) <= max_length."""
    for lam in strict_compositions(max_degree, max_length):
        for rest in range(max_degree - sum(lam) + 1):
            for mu in partitions(rest):
                yield lam, mu


# ---------------------------------------------------------------------------
# Statistics on weights
# ---------------------------------------------------------------------------


def u_stat(lam: Sequence[int], i: int) -> int:
    """u_lam(i) = #{j <= i : lam_j > lam_i} + #{i <= j <= k : lam_j >= lam_i}."""
    _expect(
        1 <= i <= len(lam), f"Index {i} out of range for weight of rank {len(lam)}"
    )
    value = lam[i - 1]
    before = sum(1 for j in range(i) if lam[j] > value)
    after = sum(1 for j in range(i - 1, len(lam)) if lam[j] >= value)
    return before + after


def sgn_stat(lam: Sequence[int], i: int) -> int:
    if i > len(lam) or lam[i - 1] == 0:
        return 0
    return 1


# ---------------------------------------------------------------------------
# Affine reflections and the Bruhat order
# ---------------------------------------------------------------------------


def pairing(i: int, x: Sequence[int]) -> int:
    """<alpha_i, x>, where alpha_0 = delta - e_1 + e_k."""
    k = len(x)
    _expect(0 <= i < k, f"Simple root index {i} out of range for rank {k}")
    if i == 0:
        return 1 - x[0] + x[-1]
    return x[i - 1] - x[i]


def affine_reflect(i: int, x: Sequence[int]) -> Weight:
    """Action of the simple reflection s_i, i = 0 being the affine one."""
    k = len(x)
    _expect(0 <= i < k, f"Simple reflection s_{i} out of range for rank {k}")
    entries = list(x)
    if i == 0:
        if k == 1:
            return tuple(entries)
        entries[0], entries[-1] = x[-1] + 1, x[0] - 1
    else:
        entries[i - 1], entries[i] = x[i], x[i - 1]
    return tuple(entries)


def reflect_root(n: int, i: int, j: int, x: Sequence[int]) -> Weight:
    """Reflect x in the affine root n*delta + e_i - e_j (1-based i != j)."""
    value = n + x[i - 1] - x[j - 1]
    entries = list(x)
    entries[i - 1] -= value
    entries[j - 1] += value
    return tuple(entries)


def positive_roots(k: int, max_shift: int) -> Iterator[tuple[int, int, int]]:
    """Positive affine roots n*delta + e_i - e_j as triples, with n <= max_shift."""
    for n in range(max_shift + 1):
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                if i == j or (n == 0 and i > j):
                    continue
                yield n, i, j


def root_pairing(n: int, i: int, j: int, x: Sequence[int]) -> int:
    return n + x[i - 1] - x[j - 1]


def _simple_indices(k: int) -> range:
    return range(k) if k >= 2 else range(1, k)


@lru_cache(maxsize=None)
def _bruhat_leq(lam: Weight, mu: Weight) -> bool:
    if lam == mu:
        return True
    for i in _simple_indices(len(mu)):
        if pairing(i, mu) < 0:
            smaller = lam if pairing(i, lam) >= 0 else affine_reflect(i, lam)
            return _bruhat_leq(smaller, affine_reflect(i, mu))
    # mu is minuscule, the minimum of its orbit
    return False


def bruhat_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Bruhat comparison lam <= mu on Z^k."""
    _expect(len(lam) == len(mu), f"Rank mismatch: {tuple(lam)} vs {tuple(mu)}")
    if sum(lam) != sum(mu):
        return False
    return _bruhat_leq(tuple(lam), tuple(mu))


def bruhat_lower_set_bfs(mu: Sequence[int]) -> set[Weight]:
    """All weights below mu, found by walking down reflection edges."""
    k = len(mu)
    _expect(
        k <= BFS_MAX_RANK and all(abs(entry) <= BFS_MAX_ENTRY for entry in mu),
        f"Oracle guard exceeded for {tuple(mu)}",
        GuardError,
    )
    start = tuple(mu)
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        spread = max(current) - min(current) if current else 0
        for n, i, j in positive_roots(k, spread):
            if root_pairing(n, i, j, current) < 0:
                lower = reflect_root(n, i, j, current)
                if lower not in seen:
                    seen.add(lower)
                    queue.append(lower)
    return seen


def bruhat_leq_bfs_oracle(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Independent Bruhat comparison by explicit search over reflections."""
    _expect(len(lam) == len(mu), f"Rank mismatch: {tuple(lam)} vs {tuple(mu)}")
    _expect(
        all(abs(entry) <= BFS_MAX_ENTRY for entry in lam),
        f"Oracle guard exceeded for {tuple(lam)}",
        GuardError,
    )
    if sum(lam) != sum(mu):
        return False
    return tuple(lam) in bruhat_lower_set_bfs(mu)


def as_order_leq(a: AsymIndex, b: AsymIndex) -> bool:
    """The order on pairs <lam|mu>, compared after zero-padding to a common rank."""
    lam, mu = a
    eta, nu = b
    if len(lam) > len(eta):
        return False
    rank = len(eta) + max(len(mu), len(nu))
    left = pad(concat(pad(lam, len(eta)), mu), rank)
    right = pad(concat(eta, nu), rank)
    return bruhat_leq(left, right)


def as_order_less(a: AsymIndex, b: AsymIndex) -> bool:
    return a != b and as_order_leq(a, b)


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------


def identity_perm(k: int) -> Perm:
    return tuple(range(1, k + 1))


def compose(u: Perm, v: Perm) -> Perm:
    _expect(len(u) == len(v), f"Cannot compose permutations of {len(u)} and {len(v)}")
    return tuple(u[v[x] - 1] for x in range(len(v)))


def inverse_perm(w: Perm) -> Perm:
    result = [0] * len(w)
    for position, value in enumerate(w, start=1):
        result[value - 1] = position
    return tuple(result)


def right_mul_simple(w: Perm, i: int) -> Perm:
    """w * s_i: swap the entries in positions i and i+1."""
    _expect(1 <= i < len(w), f"s_{i} is not in S_{len(w)}")
    entries = list(w)
    entries[i - 1], entries[i] = entries[i], entries[i - 1]
    return tuple(entries)


def perm_length(w: Perm) -> int:
    return sum(
        1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b]
    )


def has_right_descent(w: Perm, i: int) -> bool:
    return w[i - 1] > w[i]


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> tuple[int, ...]:
    """A reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}."""
    letters: list[int] = []
    current = w
    while True:
        descent = next(
            (i for i in range(1, len(current)) if has_right_descent(current, i)), None
        )
        if descent is None:
            break
        letters.append(descent)
        current = right_mul_simple(current, descent)
    return tuple(reversed(letters))


def perm_from_word(word: Sequence[int], k: int) -> Perm:
    w = identity_perm(k)
    for i in word:
        w = right_mul_simple(w, i)
    return w


def cycles(w: Perm) -> list[tuple[int, ...]]:
    """Cycle decomposition, fixed points included."""
    seen: set[int] = set()
    result = []
    for start in range(1, len(w) + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        current = w[start - 1]
        while current != start:
            cycle.append(current)
            seen.add(current)
            current = w[current - 1]
        result.append(tuple(cycle))
    return result


def kappa_min(w: Perm) -> int:
    """k minus the number of cycles: the fewest transpositions multiplying to w."""
    return len(w) - len(cycles(w))


def cycle_perm(k: int, cycle: Sequence[int]) -> Perm:
    """The cycle c_1 -> c_2 -> ... -> c_r -> c_1 in S_k."""
    _expect(all(1 <= c <= k for c in cycle), f"Cycle {tuple(cycle)} not inside S_{k}")
    _expect(len(set(cycle)) == len(cycle), f"Cycle {tuple(cycle)} repeats an entry")
    entries = list(identity_perm(k))
    for position, value in enumerate(cycle):
        entries[value - 1] = cycle[(position + 1) % len(cycle)]
    return tuple(entries)


def transposition_word(a: int, b: int) -> tuple[int, ...]:
    """Reduced word a, ..., b-1, ..., a of the transposition (a b)."""
    _expect(a < b, f"Transposition ({a} {b}) needs a < b")
    return tuple(range(a, b)) + tuple(range(b - 2, a - 1, -1))


def all_perms(k: int) -> Iterator[Perm]:
    yield from permutations(range(1, k + 1))


def is_subword_product(word: Sequence[int], v: Perm, omitted: int) -> bool:
    """True when omitting exactly ``omitted`` letters of ``word`` multiplies to v."""
    k = len(v)
    for dropped in combinations(range(len(word)), omitted):
        kept = [letter for index, letter in enumerate(word) if index not in dropped]
        if perm_from_word(kept, k) == v:
            return True
    return False
