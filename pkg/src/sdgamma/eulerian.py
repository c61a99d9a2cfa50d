"""
Descent statistics and restricted Eulerian numbers.

A(n, i, j) counts permutations w of {1..n} with w(1) = j and i descents.
Tables are built by the first-letter-removal recurrence and can be checked
against exhaustive enumeration of S_n.  On top of the tables sit the
symmetric families

    sym(n, j)    = A_{n,j}(t) + A_{n,n+1-j}(t)   (just A_{n,j} when 2j = n + 1)
    primed(n, j) = t A_{n,j}(t) + A_{n,n+1-j}(t)   for 1 <= j < (n + 1) / 2

whose gamma-vectors drive the h-vector of a barycentric subdivision.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .errors import CapacityError, HypothesisError, RangeError, ValidationError
from .transforms import (
    CountVector, IntPolynomial, gamma_from_symmetric, padded, vec_add, vec_scale, vec_shift,
)

__all__ = [
    "ENUMERATION_CAP", "RestrictedEulerianTable", "GammaFamily", "LemmaRecReport",
    "descent_number", "table_by_recurrence", "table_by_enumeration",
    "restricted_poly", "eulerian_poly", "symmetric_restricted", "primed_restricted",
    "gamma_nj", "verify_lemma_rec", "h_sd_from_h", "gamma_sd_from_h",
]

ENUMERATION_CAP = 10
TABLE_MEMO_LIMIT = 256


def descent_number(w: Sequence[int]) -> int:
    """Number of positions i with w(i) > w(i+1)."""
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValidationError(f"{list(w)} is not a permutation of 1..{len(w)}")
    return sum(1 for a, b in zip(w, w[1:]) if a > b)


@dataclass(frozen=True)
class RestrictedEulerianTable:
    """``by_first[j - 1][i]`` is A(n, i, j) for 1 <= j <= n, 0 <= i <= n - 1."""

    n: int
    by_first: tuple[tuple[int, ...], ...]

    def __call__(self, i: int, j: int) -> int:
        if not (1 <= j <= self.n) or not (0 <= i <= self.n - 1):
            return 0
        return self.by_first[j - 1][i]

    def poly(self, j: int) -> IntPolynomial:
        """The restricted Eulerian polynomial A_{n,j}(t)."""
        if not 1 <= j <= self.n:
            raise RangeError(f"first letter j = {j} outside 1..{self.n}")
        return IntPolynomial(self.by_first[j - 1])

    def total(self) -> int:
        return sum(map(sum, self.by_first))


_tables: dict[int, RestrictedEulerianTable] = {1: RestrictedEulerianTable(1, ((1,),))}
_tables_lock = threading.Lock()


def _next_table(prev: RestrictedEulerianTable) -> RestrictedEulerianTable:
    m = prev.n  # building n = m + 1
    n = m + 1
    # prefix[i][k] = sum_{l <= k} A(m, i, l)
    prefix = []
    for i in range(m):
        run, acc = [0], 0
        for l in range(1, m + 1):
            acc += prev(i, l)
            run.append(acc)
        prefix.append(run)

    def pre(i, k):
        return prefix[i][k] if 0 <= i < m else 0

    rows = []
    for j in range(1, n + 1):
        rows.append(tuple(
            pre(i - 1, j - 1) + (pre(i, m) - pre(i, j - 1)) for i in range(n)))
    return RestrictedEulerianTable(n, tuple(rows))


def table_by_recurrence(n: int) -> RestrictedEulerianTable:
    """A(n, i, j) = sum_{k<j} A(n-1, i-1, k) + sum_{k=j}^{n-1} A(n-1, i, k)."""
    if n < 1:
        raise RangeError("n must be at least 1")
    with _tables_lock:
        if n in _tables:
            return _tables[n]
        table = _tables[max(m for m in _tables if m <= n)]
        while table.n < n:
            table = _next_table(table)
            if table.n <= TABLE_MEMO_LIMIT:
                _tables[table.n] = table
        return table


def table_by_enumeration(n: int, cap: int = ENUMERATION_CAP) -> RestrictedEulerianTable:
    """Count descents over all of S_n.  Used as an oracle for the recurrence."""
    if n < 1:
        raise RangeError("n must be at least 1")
    if n > cap:
        raise CapacityError(f"enumerating S_{n} exceeds the cap n <= {cap}")
    counts = [[0] * n for _ in range(n)]
    for w in permutations(range(1, n + 1)):
        des = 0
        for a, b in zip(w, w[1:]):
            if a > b:
                des += 1
        counts[w[0] - 1][des] += 1
    return RestrictedEulerianTable(n, tuple(map(tuple, counts)))


def restricted_poly(n: int, j: int) -> IntPolynomial:
    return table_by_recurrence(n).poly(j)


def eulerian_poly(n: int) -> IntPolynomial:
    t = table_by_recurrence(n)
    return sum((t.poly(j) for j in range(1, n + 1)), IntPolynomial())


def _canonical(n: int, j: int) -> int:
    if not 1 <= j <= n:
        raise RangeError(f"j = {j} outside 1..{n}")
    return min(j, n + 1 - j)


def symmetric_restricted(n: int, j: int) -> IntPolynomial:
    """Descent generating function of permutations starting with j or n+1-j."""
    j = _canonical(n, j)
    t = table_by_recurrence(n)
    if 2 * j == n + 1:
        return t.poly(j)
    return t.poly(j) + t.poly(n + 1 - j)


def primed_restricted(n: int, j: int) -> IntPolynomial:
    """t A_{n,j}(t) + A_{n,n+1-j}(t), defined for 1 <= j < (n + 1) / 2."""
    if not (1 <= j and 2 * j < n + 1):
        raise RangeError(f"primed family needs 1 <= j < (n+1)/2; got n = {n}, j = {j}")
    t = table_by_recurrence(n)
    return t.poly(j).shift(1) + t.poly(n + 1 - j)


@dataclass(frozen=True)
class GammaFamily:
    n: int
    j: int
    primed: bool
    vector: CountVector = field(compare=False)

    @property
    def label(self) -> str:
        return f"gamma{chr(39) if self.primed else ''}^({self.n},{self.j})"


@lru_cache(maxsize=None)
def _gamma_family(n: int, j: int, primed: bool) -> GammaFamily:
    if primed:
        vec = gamma_from_symmetric(primed_restricted(n, j), n)
    else:
        vec = gamma_from_symmetric(symmetric_restricted(n, j), n - 1)
    return GammaFamily(n, j, primed, vec)


def gamma_nj(n: int, j: int, primed: bool = False) -> GammaFamily:
    """Gamma-vector of sym(n, j) (axis n - 1) or primed(n, j) (axis n).

    Unprimed calls with j and n + 1 - j return the same object.
    """
    if not primed:
        j = _canonical(n, j)
    elif not (1 <= j and 2 * j < n + 1):
        raise RangeError(f"primed family needs 1 <= j < (n+1)/2; got n = {n}, j = {j}")
    return _gamma_family(n, j, bool(primed))


def _g(n, j, primed=False) -> CountVector:
    return gamma_nj(n, j, primed).vector


@dataclass
class LemmaRecReport:
    n: int
    checks: list[tuple[str, int, tuple, tuple, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c[-1] for c in self.checks)

    def __bool__(self):
        return self.ok


def verify_lemma_rec(n: int) -> LemmaRecReport:
    """Check the three gamma recurrences at level n for every admissible j.

    Each left side comes straight from the Eulerian table at n, each right
    side only from gamma-vectors at n - 1.
    """
    if n < 3:
        raise RangeError("the recurrences relate level n to n - 1 and need n >= 3")
    rep = LemmaRecReport(n)

    def record(part, j, lhs, rhs):
        m = max(len(lhs), len(rhs))
        a, b = padded(lhs, m), padded(rhs, m)
        rep.checks.append((part, j, a, b, a == b))

    if n % 2 == 1:
        mid = (n + 1) // 2
        rhs = vec_add(*(_g(n - 1, k, True) for k in range(1, mid)))
        record("1", mid, _g(n, mid), rhs)
    for j in range(1, n // 2 + 1):
        rhs2 = vec_add(
            *(vec_scale(2, _g(n - 1, k, True)) for k in range(1, j)),
            *(_g(n - 1, k) for k in range(j, n // 2 + 1)))
        record("2", j, _g(n, j), rhs2)
        rhs3 = vec_add(
            *(_g(n - 1, k, True) for k in range(1, j)),
            *(vec_scale(2, vec_shift(_g(n - 1, k))) for k in range(j, n // 2 + 1)))
        record("3", j, _g(n, j, True), rhs3)
    return rep


def h_sd_from_h(h: Sequence[int]) -> CountVector:
    """h-vector of the barycentric subdivision from h of an (n-1)-complex.

    h_i(sd) = sum_{j=0}^{n} A(n+1, i, j+1) h_j.
    """
    n = len(h) - 1
    if n < 0:
        raise ValidationError("empty h-vector")
    t = table_by_recurrence(n + 1)
    return CountVector(
        (sum(t(i, j + 1) * h[j] for j in range(n + 1)) for i in range(n + 1)), "h")


def gamma_sd_from_h(h: Sequence[int]) -> CountVector:
    """gamma(sd) = sum_{i <= n/2} h_i gamma^(n+1, i+1) for symmetric, nonnegative h."""
    n = len(h) - 1
    if n < 0:
        raise HypothesisError("empty h-vector")
    for i in range(n + 1):
        if h[i] < 0:
            raise HypothesisError(f"h-vector has a negative entry at index {i}")
        if h[i] != h[n - i]:
            raise HypothesisError(f"h-vector is not symmetric: h_{i} != h_{n - i}")
    terms = [vec_scale(h[i], _g(n + 1, i + 1)) for i in range(n // 2 + 1)]
    return CountVector(padded(vec_add(*terms), n // 2 + 1), "gamma")
