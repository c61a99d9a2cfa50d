"""
Explicit complexes realizing gamma-, h- and g-vectors.

* :func:`gamma_hat_complex` - the complex Gamma(n) of barred permutations
  with no double descents and no final descent; its f-vector is
  gamma^(n+1,1).
* :func:`ballot_complex` - north-step position sets of ballot paths.
* :func:`h_witness`, :func:`g_witness`, :func:`balanced_h_witness` - lift a
  complex with f-vector gamma to one with f-vector h or g.
* :func:`theorem_bary_witness` - a balanced complex whose f-vector is the
  gamma-vector of sd(Delta), from h(Delta) alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .complex import (
    ColoredComplex, SimplicialComplex, f_vector, faces, from_facets, verify_coloring,
)
from .errors import CapacityError, DisjointnessError, HypothesisError, TheoremRefuted
from .eulerian import gamma_nj, gamma_sd_from_h
from .ffk import CompressedComplex, is_ffk
from .transforms import CountVector, padded

__all__ = [
    "GAMMA_HAT_CAP", "BarredPermutation", "s_hat", "gamma_hat_complex", "GammaHatReport",
    "check_gamma_hat", "GineqReport", "verify_gineq",
    "ballot_paths", "north_set", "ballot_complex",
    "h_witness", "g_witness", "balanced_h_witness",
    "trim", "theorem_gamma", "theorem_bary_witness",
]

GAMMA_HAT_CAP = 10


def trim(v: Sequence[int]) -> CountVector:
    """Drop trailing zeros (keeping at least one entry)."""
    role = getattr(v, "role", None)
    v = list(v)
    while len(v) > 1 and v[-1] == 0:
        v.pop()
    return CountVector(v, role)


# ------------------------------------------------------------------ Gamma(n)

@dataclass(frozen=True)
class BarredPermutation:
    """A permutation cut at its descents into increasing blocks."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_word(cls, w: Sequence[int]) -> BarredPermutation:
        blocks, cur = [], [w[0]] if w else []
        for a, b in zip(w, w[1:]):
            if a > b:
                blocks.append(tuple(cur))
                cur = []
            cur.append(b)
        if cur:
            blocks.append(tuple(cur))
        return cls(tuple(blocks))

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(x for B in self.blocks for x in B)

    @property
    def bars(self) -> tuple[int, ...]:
        """Descent positions i (1-based): w(i) > w(i+1)."""
        out, pos = [], 0
        for B in self.blocks[:-1]:
            pos += len(B)
            out.append(pos)
        return tuple(out)

    def is_valid(self) -> bool:
        """Blocks increasing, later blocks of size >= 2, max B_i > min B_{i+1}."""
        bs = self.blocks
        if any(list(B) != sorted(B) or not B for B in bs):
            return False
        if any(len(B) < 2 for B in bs[1:]):
            return False
        return all(max(a) > min(b) for a, b in zip(bs, bs[1:]))

    def colors(self) -> frozenset[int]:
        return frozenset((i + 1) // 2 for i in self.bars)

    def vertex(self, bar: int) -> tuple[int, ...]:
        """The one-bar element obtained by merging all blocks on each side of ``bar``."""
        w = self.word
        return tuple(sorted(w[:bar])) + tuple(sorted(w[bar:]))

    def __str__(self):
        return "|".join("".join(map(str, B)) if max(self.word, default=0) < 10
                        else ",".join(map(str, B)) for B in self.blocks)


def s_hat(n: int, cap: int = GAMMA_HAT_CAP) -> list[tuple[int, ...]]:
    """Permutations of 1..n with no double descent and no final descent."""
    if n > cap:
        raise CapacityError(f"enumerating S_{n} exceeds the cap n <= {cap}")
    if n <= 0:
        return [()]
    out = []
    word: list[int] = []
    unused = set(range(1, n + 1))

    def extend(prev_descent: bool):
        if len(word) == n:
            if n < 2 or word[-2] < word[-1]:
                out.append(tuple(word))
            return
        for x in sorted(unused):
            descent = bool(word) and word[-1] > x
            if descent and prev_descent:
                continue
            word.append(x)
            unused.discard(x)
            extend(descent)
            unused.add(x)
            word.pop()

    extend(False)
    return out


def _gamma_hat_family(n: int, cap: int):
    words = s_hat(n, cap)
    elems = [BarredPermutation.from_word(w) for w in words]
    one_bar = sorted(e.word for e in elems if len(e.bars) == 1)
    ident = {w: i + 1 for i, w in enumerate(one_bar)}
    vertex_color = {ident[w]: (BarredPermutation.from_word(w).bars[0] + 1) // 2
                    for w in one_bar}
    family = {}
    for e in elems:
        face = tuple(sorted(ident[e.vertex(b)] for b in e.bars))
        family[face] = e
    return elems, family, vertex_color


def gamma_hat_complex(n: int, cap: int = GAMMA_HAT_CAP) -> ColoredComplex:
    """Gamma(n), colored by bar position: a bar at i gets color ceil(i/2)."""
    _, family, col = _gamma_hat_family(n, cap)
    fam = set(family)
    covered = {F[:i] + F[i + 1:] for F in fam for i in range(len(F))}
    facets = tuple(sorted((F for F in fam if F not in covered), key=lambda F: (len(F), F)))
    return ColoredComplex(SimplicialComplex(facets), col, max((n - 1) // 2, 0))


@dataclass
class GammaHatReport:
    n: int
    f: CountVector
    expected: CountVector
    injective: bool
    closed: bool
    recount_matches: bool
    proper: bool
    balanced: bool

    @property
    def ok(self) -> bool:
        return (padded(self.f, len(self.expected)) == tuple(self.expected) and self.injective
                and self.closed and self.recount_matches and self.proper and self.balanced)


def check_gamma_hat(n: int, cap: int = GAMMA_HAT_CAP) -> GammaHatReport:
    """Structural audit of Gamma(n) against gamma^(n+1,1)."""
    elems, family, _ = _gamma_hat_family(n, cap)
    injective = len(family) == len(elems)
    fam = set(family)
    closed = all(F[:i] + F[i + 1:] in fam for F in fam for i in range(len(F)))
    # each vertex label must itself be its own one-bar element
    for F, e in family.items():
        if len(F) == 1 and e.vertex(e.bars[0]) != e.word:
            closed = False
    size = max((len(F) for F in fam), default=0)
    counts = [0] * (size + 1)
    for F in fam:
        counts[len(F)] += 1
    cc = gamma_hat_complex(n, cap)
    recount = f_vector(cc.complex)
    expected = gamma_nj(n + 1, 1).vector
    proper = verify_coloring(cc)
    dim_ok = cc.complex.dim == cc.d - 1 or (cc.d == 0 and cc.complex.dim == -1)
    return GammaHatReport(n, CountVector(counts, "f"), expected, injective, closed,
                          tuple(recount) == tuple(counts), proper, proper and dim_ok)


@dataclass
class GineqReport:
    n_max: int
    checks: list[tuple[int, int, int, int, bool]] = field(default_factory=list)
    insertion: list[tuple[int, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c[-1] for c in self.checks) and all(ok for _, ok in self.insertion)


def _insertion_check(n: int, cap: int) -> bool:
    # put n at the end of each block of every face of Gamma(n-1)
    target = set(s_hat(n, cap))
    seen = set()
    for w in s_hat(n - 1, cap):
        e = BarredPermutation.from_word(w)
        for b in range(len(e.blocks)):
            blocks = list(e.blocks)
            blocks[b] = blocks[b] + (n,)
            v = BarredPermutation(tuple(blocks))
            if v.word in seen or v.word not in target or len(v.bars) != len(e.bars):
                return False
            if BarredPermutation.from_word(v.word) != v:
                return False
            seen.add(v.word)
    return True


def verify_gineq(n_max: int, insertion_max: int = 0, cap: int = GAMMA_HAT_CAP) -> GineqReport:
    """(i+1) gamma^(n,1)_i <= gamma^(n+1,1)_i for all n <= n_max, 1 <= i <= n//2 - 1.

    For n <= ``insertion_max`` the block-insertion map behind the inequality
    is also run on Gamma(n-1) and checked to be an injection into Gamma(n).
    """
    rep = GineqReport(n_max)
    for n in range(1, n_max + 1):
        lo, hi = gamma_nj(n, 1).vector, gamma_nj(n + 1, 1).vector
        for i in range(1, n // 2):
            a, b = (i + 1) * lo[i], hi[i]
            rep.checks.append((n, i, a, b, a <= b))
        if 2 <= n <= insertion_max:
            rep.insertion.append((n, _insertion_check(n, cap)))
    return rep


# ------------------------------------------------------------ ballot complex

def ballot_paths(k: int) -> Iterator[str]:
    """Words in {N, E} of length k whose every prefix has #E >= #N."""
    def rec(prefix: str, east: int, north: int):
        if len(prefix) == k:
            yield prefix
            return
        yield from rec(prefix + "E", east + 1, north)
        if north < east:
            yield from rec(prefix + "N", east, north + 1)
    return rec("", 0, 0)


def north_set(p: str) -> tuple[int, ...]:
    """Positions of N steps counted from the right: {k + 1 - i : p_i = N}."""
    k = len(p)
    return tuple(sorted(k - i for i, s in enumerate(p) if s == "N"))


def ballot_complex(k: int) -> SimplicialComplex:
    return from_facets(north_set(p) for p in ballot_paths(k))


# ------------------------------------------------------- h- and g-witnesses

def _gamma_base(gamma: Sequence[int], d: int) -> CompressedComplex:
    if len(trim(gamma)) > d // 2 + 1:
        raise HypothesisError(f"gamma-vector {tuple(gamma)} too long for d = {d}")
    m = max(d // 2, 1)
    res = is_ffk(trim(gamma), m)
    if not res:
        raise HypothesisError(f"{tuple(gamma)} is not {m}-FFK: face {res.face} misses {res.missing}")
    return res.witness


def _next_id(cc: CompressedComplex) -> int:
    return max((v for F in cc.all_faces() for v in F), default=0) + 1


def h_witness(gamma: Sequence[int], d: int) -> SimplicialComplex:
    """Faces F u G with F in the compression of gamma and G a face of a (d-2|F|-1)-simplex."""
    base = _gamma_base(gamma, d)
    off = _next_id(base)
    return from_facets(F + tuple(range(off, off + d - 2 * len(F))) for F in base.all_faces())


def g_witness(gamma: Sequence[int], d: int) -> SimplicialComplex:
    """Faces F u G with F in the compression of gamma and G in the ballot complex B(d - 2|F|)."""
    base = _gamma_base(gamma, d)
    off = _next_id(base) - 1
    ballots = {}
    facets = []
    for F in base.all_faces():
        k = d - 2 * len(F)
        if k not in ballots:
            ballots[k] = ballot_complex(k).facets
        facets.extend(F + tuple(off + v for v in B) for B in ballots[k])
    return from_facets(facets)


def balanced_h_witness(cc: ColoredComplex, d: int) -> ColoredComplex:
    """d-colored complex with f-vector h from a colored complex with f-vector gamma.

    Each face F is joined with the simplex on [d] minus its colors c(F) and
    minus d(F), the first |F| integers of [d] not in c(F).  Vertex i of [d]
    gets color i.
    """
    if not verify_coloring(cc):
        raise HypothesisError("input complex is not properly colored")
    used = set(cc.coloring[v] for v in cc.complex.vertices)
    if any(not 1 <= c <= d for c in used):
        raise HypothesisError(f"colors {sorted(used)} do not fit in [1..{d}]")
    clash = sorted(set(cc.complex.vertices) & set(range(1, d + 1)))
    if clash:
        raise DisjointnessError(f"vertex ids {clash} collide with [1..{d}]; relabel first")
    facets = []
    for layer in faces(cc.complex):
        for F in layer:
            cF = {cc.coloring[v] for v in F}
            free = [i for i in range(1, d + 1) if i not in cF]
            if len(free) < len(F):
                raise HypothesisError(f"face {F} is too large for d = {d}")
            facets.append(F + tuple(free[len(F):]))
    coloring = dict(cc.coloring)
    coloring.update({i: i for i in range(1, d + 1)})
    out = from_facets(facets)
    return ColoredComplex(out, {v: coloring[v] for v in out.vertices}, d)


# ------------------------------------------------ witness for gamma(sd)

def theorem_gamma(h: Sequence[int]) -> CountVector:
    """gamma(sd Delta) from h(Delta), after checking h_0 = 1."""
    if not h or h[0] != 1:
        raise HypothesisError("h-vector must start with h_0 = 1")
    return gamma_sd_from_h(h)


def theorem_bary_witness(h: Sequence[int]) -> ColoredComplex:
    """Balanced complex whose f-vector is gamma(sd Delta).

    The witness is the colored compression F_d(gamma) with d one less than
    the length of gamma (trailing zeros dropped), colored by residues.
    """
    gamma = trim(theorem_gamma(h))
    d = len(gamma) - 1
    res = is_ffk(gamma, d)
    if not res:
        raise TheoremRefuted(
            f"gamma(sd) = {tuple(gamma)} failed the {d}-colored closure test at "
            f"face {res.face} (missing {res.missing}) for h = {tuple(h)}")
    return res.witness.colored()
