"""
Colored compression.

A d-colored k-subset is a set of k positive integers that are pairwise
incongruent mod d; its colors are the residues, written in {1..d} (a
multiple of d has color d).  These sets are listed in revlex order, where
two sets of equal size are compared by the largest element of their
symmetric difference.  F_d(f) keeps the first f_k sets of each size k, and f
is realizable by a d-colorable complex exactly when that family is closed
under taking subsets.

Three independent routes to the order are kept apart on purpose:
:func:`revlex_compare` compares directly, :func:`iter_colored_subsets`
generates, and :func:`rank` / :func:`unrank` count.  Tests pit them against
each other.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Sequence

from .complex import ColoredComplex, SimplicialComplex
from .errors import RangeError, ValidationError
from .transforms import CountVector

__all__ = [
    "ColoredSubset", "CompressedComplex", "FFKResult",
    "color", "revlex_compare", "iter_colored_subsets", "count_colored_subsets",
    "rank", "unrank", "phi_element", "phi", "r", "compressed_complex", "is_ffk", "dominates",
]


def color(s: int, d: int) -> int:
    """Residue of s mod d, represented in {1..d}."""
    return (s - 1) % d + 1


@dataclass(frozen=True, order=False)
class ColoredSubset:
    elements: tuple[int, ...]
    d: int

    def __post_init__(self):
        els = tuple(self.elements)
        object.__setattr__(self, "elements", els)
        if self.d < 0 or (self.d == 0 and els):
            raise ValidationError(f"modulus d = {self.d} admits no nonempty subsets")
        if any(not isinstance(x, int) or x < 1 for x in els):
            raise ValidationError(f"elements must be positive integers: {els}")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise ValidationError(f"elements must be strictly increasing: {els}")
        cols = [color(x, self.d) for x in els]
        if len(set(cols)) != len(cols):
            raise ValidationError(f"{set(els)} repeats a residue mod {self.d}")

    @classmethod
    def of(cls, elements, d: int) -> ColoredSubset:
        return cls(tuple(sorted(elements)), d)

    @property
    def colors(self) -> frozenset[int]:
        return frozenset(color(x, self.d) for x in self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return "{" + ",".join(map(str, self.elements)) + "}_" + str(self.d)


def revlex_compare(S: ColoredSubset, T: ColoredSubset) -> int:
    """-1, 0 or 1 as S is before, equal to, or after T in revlex order."""
    if len(S) != len(T):
        raise ValidationError(f"revlex compares sets of equal size, got {len(S)} and {len(T)}")
    if S.d != T.d:
        raise ValidationError("sets carry different moduli")
    diff = set(S.elements) ^ set(T.elements)
    if not diff:
        return 0
    return 1 if max(diff) in S.elements else -1


# ------------------------------------------------------------- generation

def _gen_bounded(k: int, upper: int, used: frozenset, d: int) -> Iterator[tuple[int, ...]]:
    # k-subsets of {1..upper} in revlex order, residues distinct and not in `used`
    if k == 0:
        yield ()
        return
    for m in range(k, upper + 1):
        c = color(m, d)
        if c in used:
            continue
        for rest in _gen_bounded(k - 1, m - 1, used | {c}, d):
            yield rest + (m,)


def _gen_all(d: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    m = k
    while True:
        c = color(m, d)
        for rest in _gen_bounded(k - 1, m - 1, frozenset((c,)), d):
            yield rest + (m,)
        m += 1


def iter_colored_subsets(d: int, k: int) -> Iterator[tuple[int, ...]]:
    """All d-colored k-subsets in revlex order (infinite when k >= 1)."""
    if d < 0 or k < 0:
        raise RangeError("d and k must be non-negative")
    if k > d:
        raise RangeError(f"there is no {d}-colored {k}-subset")
    return _gen_all(d, k)


class _Prefix:
    """Growing revlex prefix for one (d, k), plus running closure data.

    ``shadow_max[p]`` is the largest (k-1)-rank among the codimension-one
    subsets of the first p sets, so F_d(f) is closed in size k iff
    ``shadow_max[f_k] <= f_{k-1}``.
    """

    def __init__(self, d: int, k: int):
        self.d, self.k = d, k
        self.sets: list[tuple[int, ...]] = []
        self.index: dict[tuple[int, ...], int] = {}
        self.shadow_max: list[int] = [0]
        self._it = iter_colored_subsets(d, k)
        self._lock = threading.Lock()

    def extend_to(self, size: int) -> None:
        if len(self.sets) >= size:
            return
        with self._lock:
            need = size - len(self.sets)
            if need <= 0:
                return
            lower = _prefix(self.d, self.k - 1) if self.k else None
            for S in islice(self._it, need):
                self.sets.append(S)
                self.index[S] = len(self.sets)
                worst = self.shadow_max[-1]
                if lower is not None:
                    for i in range(len(S)):
                        sub = S[:i] + S[i + 1:]
                        rk = lower.index.get(sub)
                        if rk is None:
                            rk = _rank_tuple(sub, self.d)
                        if rk > worst:
                            worst = rk
                self.shadow_max.append(worst)


_prefixes: dict[tuple[int, int], _Prefix] = {}
_prefixes_lock = threading.Lock()


def _prefix(d: int, k: int) -> _Prefix:
    key = (d, k)
    p = _prefixes.get(key)
    if p is None:
        with _prefixes_lock:
            p = _prefixes.setdefault(key, _Prefix(d, k))
    return p


# ---------------------------------------------------------------- counting

def _class_sizes(m: int, d: int) -> list[int]:
    # how many x in {1..m} carry each color 1..d
    return [(m - c) // d + 1 if c <= m else 0 for c in range(1, d + 1)]


def count_colored_subsets(k: int, m: int, d: int, forbidden: frozenset = frozenset()) -> int:
    """Number of d-colored k-subsets of {1..m} avoiding the colors in ``forbidden``."""
    if k == 0:
        return 1
    if m <= 0:
        return 0
    e = [1] + [0] * k
    for c, size in enumerate(_class_sizes(m, d), start=1):
        if c in forbidden or size == 0:
            continue
        for i in range(k, 0, -1):
            e[i] += e[i - 1] * size
    return e[k]


def _rank_tuple(S: Sequence[int], d: int) -> int:
    total = 1
    used: set[int] = set()
    for i in range(len(S), 0, -1):
        s = S[i - 1]
        total += count_colored_subsets(i, s - 1, d, frozenset(used))
        used.add(color(s, d))
    return total


def rank(S: ColoredSubset) -> int:
    """1-based position of S in revlex order on d-colored |S|-subsets."""
    return _rank_tuple(S.elements, S.d)


def unrank(d: int, k: int, j: int) -> ColoredSubset:
    """F_{d,k}(j), the j-th d-colored k-subset in revlex order."""
    if k > d:
        raise RangeError(f"there is no {d}-colored {k}-subset")
    if j < 1:
        raise RangeError("ranks start at 1")
    if k == 0:
        if j != 1:
            raise RangeError("only one 0-subset exists")
        return ColoredSubset((), d)
    out = []
    used: frozenset = frozenset()
    for i in range(k, 0, -1):
        # smallest m with count(i, m) >= j, by galloping then bisection
        lo, hi = i - 1, i
        while count_colored_subsets(i, hi, d, used) < j:
            lo, hi = hi, hi * 2
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if count_colored_subsets(i, mid, d, used) >= j:
                hi = mid
            else:
                lo = mid
        j -= count_colored_subsets(i, hi - 1, d, used)
        out.append(hi)
        used = used | {color(hi, d)}
    return ColoredSubset(tuple(reversed(out)), d)


def phi_element(s: int, d: int) -> int:
    """(d-1)i + j  ->  di + j  for 1 <= j <= d - 1."""
    if d < 2:
        raise RangeError("phi_d needs d >= 2")
    return s + (s - 1) // (d - 1)


def phi(S: ColoredSubset, d: int) -> ColoredSubset:
    """Embed a (d-1)-colored set into the d-colored ones, keeping colors and order."""
    if S.d != d - 1:
        raise ValidationError(f"phi_{d} takes ({d - 1})-colored sets, got modulus {S.d}")
    return ColoredSubset(tuple(phi_element(s, d) for s in S.elements), d)


def r(d: int, k: int, a: int) -> int:
    """Position in the d-order of the image of the a-th (d-1)-colored k-subset."""
    if not 0 <= k < d:
        raise RangeError(f"r_{{d,k}} needs 0 <= k < d; got d = {d}, k = {k}")
    if k == 0:
        unrank(d - 1, 0, a)
        return 1
    return rank(phi(unrank(d - 1, k, a), d))


# ------------------------------------------------------------ compression

def _check_vector(f: Sequence[int], d: int) -> list[int]:
    f = [int(x) for x in f]
    if not f or f[0] != 1:
        raise ValidationError("vector must start with f_0 = 1")
    if any(x < 0 for x in f):
        raise ValidationError("vector entries must be non-negative")
    for k, x in enumerate(f):
        if k > d and x > 0:
            raise RangeError(f"f_{k} = {x} > 0 but no {d}-colored {k}-subset exists")
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


@dataclass(frozen=True)
class CompressedComplex:
    """The family F_d(f): first f_k colored k-subsets for every k."""

    d: int
    f: CountVector
    faces: tuple[tuple[tuple[int, ...], ...], ...]

    def all_faces(self) -> Iterator[tuple[int, ...]]:
        for layer in self.faces:
            yield from layer

    def facets(self) -> list[tuple[int, ...]]:
        out = []
        for k, layer in enumerate(self.faces):
            if k + 1 < len(self.faces):
                covered = {F[:i] + F[i + 1:] for F in self.faces[k + 1] for i in range(len(F))}
                out.extend(F for F in layer if F not in covered)
            else:
                out.extend(layer)
        return out

    def complex(self) -> SimplicialComplex:
        return SimplicialComplex(tuple(sorted(self.facets(), key=lambda F: (len(F), F))))

    def coloring(self) -> dict[int, int]:
        return {v: color(v, self.d) for F in self.all_faces() for v in F}

    def colored(self) -> ColoredComplex:
        return ColoredComplex(self.complex(), self.coloring(), self.d)


def compressed_complex(f: Sequence[int], d: int) -> CompressedComplex:
    f = _check_vector(f, d)
    layers = []
    for k, fk in enumerate(f):
        p = _prefix(d, k)
        p.extend_to(fk)
        layers.append(tuple(p.sets[:fk]))
    return CompressedComplex(d, CountVector(f, "f"), tuple(layers))


@dataclass(frozen=True)
class FFKResult:
    ok: bool
    witness: CompressedComplex | None = None
    face: tuple[int, ...] | None = None
    missing: tuple[int, ...] | None = None

    def __bool__(self):
        return self.ok


def is_ffk(f: Sequence[int], d: int, witness: bool = True) -> FFKResult:
    """Decide whether F_d(f) is closed under subsets.

    On success the compressed complex is attached as a balanced witness
    (skipped when ``witness`` is False).  On failure the revlex-first face
    of the smallest offending size is reported with one missing subset.
    """
    f = _check_vector(f, d)
    closed = True
    for k in range(1, len(f)):
        p = _prefix(d, k)
        p.extend_to(f[k])
        if p.shadow_max[f[k]] > f[k - 1]:
            closed = False
            break
    if closed:
        return FFKResult(True, compressed_complex(f, d) if witness else None)
    below = _prefix(d, k - 1)
    below.extend_to(f[k - 1])
    for S in p.sets[:f[k]]:
        for i in range(len(S)):
            sub = S[:i] + S[i + 1:]
            rk = below.index.get(sub)
            if rk is None or rk > f[k - 1]:
                return FFKResult(False, None, S, sub)
    raise AssertionError("shadow bound and face scan disagree")


def dominates(f: Sequence[int], g: Sequence[int]) -> bool:
    """f_k >= g_k for every k, both starting with 1; shorter vectors are zero-padded."""
    if not f or not g or f[0] != 1 or g[0] != 1:
        return False
    n = max(len(f), len(g))
    fp = list(f) + [0] * (n - len(f))
    gp = list(g) + [0] * (n - len(g))
    return all(a >= b for a, b in zip(fp, gp))
