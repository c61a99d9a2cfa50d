"""
Exact integer polynomials and the f/h/g/gamma vector transforms.

Everything here works on Python ints, so entries never overflow.  A symmetric
polynomial p of "axis degree" D is expanded in the basis

    t^i (1 + t)^(D - 2i),   0 <= i <= D // 2,

and the coefficient list of that expansion is its gamma-vector.  D is always
passed explicitly because the same polynomial can be read against different
axes (see :func:`gamma_from_symmetric`).
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Sequence

from .errors import DimensionMismatch, SymmetryError

__all__ = [
    "IntPolynomial", "CountVector",
    "h_from_f", "f_from_h", "g_from_h",
    "gamma_from_symmetric", "gamma_to_poly",
    "h_from_gamma", "g_from_gamma", "gamma_transform_matrices",
    "vec_add", "vec_scale", "vec_shift", "padded", "is_symmetric",
]


class IntPolynomial:
    """Univariate polynomial with arbitrary-precision integer coefficients.

    ``coeffs[i]`` is the coefficient of ``t**i``.  Trailing zeros are dropped
    on construction, so equality is coefficientwise.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * k + [coeff])

    @classmethod
    def one_plus_t(cls, k: int) -> IntPolynomial:
        """(1 + t)**k."""
        return cls(comb(k, i) for i in range(k + 1))

    @property
    def degree(self) -> int:
        # zero polynomial gets degree -1
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (tuple, list)):
            return self == IntPolynomial(other)
        if isinstance(other, int):
            return self == IntPolynomial([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(other * c for c in self.coeffs)
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by t**k."""
        return IntPolynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.coeffs):
            raise DimensionMismatch(
                f"polynomial of degree {self.degree} does not fit in {length} slots")
        return self.coeffs + (0,) * (length - len(self.coeffs))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = f"{c}{mono}"
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ")


def _as_poly(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    return IntPolynomial(x)


class CountVector(tuple):
    """Tuple of exact integers tagged with the role it plays.

    The role (``"f"``, ``"h"``, ``"g"``, ``"gamma"`` or None) is metadata only:
    equality and hashing are those of the underlying tuple, so a CountVector
    compares equal to a plain tuple with the same entries.
    """

    def __new__(cls, entries: Iterable[int] = (), role: str | None = None):
        self = super().__new__(cls, (int(x) for x in entries))
        self.role = role
        return self

    def __repr__(self):
        tag = self.role or "vec"
        return f"{tag}{tuple(self)!r}"

    def __reduce__(self):
        return (CountVector, (tuple(self), self.role))


def padded(v: Sequence[int], length: int) -> tuple[int, ...]:
    """Right-pad with zeros; trailing zeros beyond ``length`` are dropped."""
    v = tuple(v)
    if len(v) > length:
        if any(v[length:]):
            raise DimensionMismatch(f"vector {v} has nonzero entries past index {length - 1}")
        return v[:length]
    return v + (0,) * (length - len(v))


def vec_add(*vectors: Sequence[int], role: str | None = None) -> CountVector:
    n = max((len(v) for v in vectors), default=0)
    out = [0] * n
    for v in vectors:
        for i, x in enumerate(v):
            out[i] += x
    return CountVector(out, role)


def vec_scale(c: int, v: Sequence[int], role: str | None = None) -> CountVector:
    return CountVector((c * x for x in v), role)


def vec_shift(v: Sequence[int], role: str | None = None) -> CountVector:
    """The vector (0, v)."""
    return CountVector((0, *v), role)


def is_symmetric(v: Sequence[int], D: int | None = None) -> bool:
    D = len(v) - 1 if D is None else D
    p = IntPolynomial(v)
    if p.degree > D:
        return False
    return all(p[i] == p[D - i] for i in range(D + 1))


def h_from_f(f: Sequence[int], d: int) -> CountVector:
    """h(t) = (1 - t)^d f(t / (1 - t)) = sum_i f_i t^i (1 - t)^(d - i)."""
    if len(f) != d + 1:
        raise DimensionMismatch(f"f-vector of length {len(f)} given for d = {d}")
    h = [0] * (d + 1)
    for i, fi in enumerate(f):
        if fi == 0:
            continue
        for m in range(d - i + 1):
            h[i + m] += fi * comb(d - i, m) * (-1) ** m
    return CountVector(h, "h")


def f_from_h(h: Sequence[int], d: int) -> CountVector:
    """Inverse of :func:`h_from_f`: f(t) = sum_i h_i t^i (1 + t)^(d - i)."""
    if len(h) != d + 1:
        raise DimensionMismatch(f"h-vector of length {len(h)} given for d = {d}")
    f = [0] * (d + 1)
    for i, hi in enumerate(h):
        if hi == 0:
            continue
        for m in range(d - i + 1):
            f[i + m] += hi * comb(d - i, m)
    return CountVector(f, "f")


def g_from_h(h: Sequence[int]) -> CountVector:
    """(g_0, ..., g_{d//2}) with g_0 = h_0 and g_i = h_i - h_{i-1}."""
    if not h:
        raise DimensionMismatch("empty h-vector")
    d = len(h) - 1
    return CountVector(
        [h[0]] + [h[i] - h[i - 1] for i in range(1, d // 2 + 1)], "g")


def gamma_from_symmetric(p, D: int) -> CountVector:
    """Gamma-vector of a polynomial palindromic about degree D.

    Coefficients are peeled off from degree 0 upward: after subtracting the
    lower basis terms, the coefficient of t^i is exactly gamma_i.
    """
    p = _as_poly(p)
    if p.degree > D:
        raise DimensionMismatch(f"degree {p.degree} exceeds axis degree D = {D}")
    for i in range(D + 1):
        if p[i] != p[D - i]:
            raise SymmetryError(
                i, f"coefficient {i} ({p[i]}) differs from coefficient {D - i} ({p[D - i]})")
    rest = p
    gamma = []
    for i in range(D // 2 + 1):
        g = rest[i]
        gamma.append(g)
        if g:
            rest = rest - IntPolynomial.one_plus_t(D - 2 * i).shift(i) * g
    assert not rest, "symmetric input left a nonzero remainder"
    return CountVector(gamma, "gamma")


def gamma_to_poly(gamma: Sequence[int], D: int) -> IntPolynomial:
    """sum_i gamma_i t^i (1 + t)^(D - 2i)."""
    if len(gamma) > D // 2 + 1:
        raise DimensionMismatch(
            f"gamma-vector of length {len(gamma)} exceeds {D // 2 + 1} for D = {D}")
    out = IntPolynomial()
    for i, g in enumerate(gamma):
        if g:
            out = out + IntPolynomial.one_plus_t(D - 2 * i).shift(i) * g
    return out


def gamma_transform_matrices(d: int) -> tuple[list[list[int]], list[list[int]]]:
    """Matrices A, B with A @ gamma = (h_0..h_{d//2}) and B @ gamma = g."""
    m = d // 2 + 1

    def c(n, k):
        return comb(n, k) if 0 <= k <= n else 0

    A = [[c(d - 2 * j, i - j) for j in range(m)] for i in range(m)]
    B = [[c(d - 2 * j, i - j) - c(d - 2 * j, i - j - 1) for j in range(m)]
         for i in range(m)]
    return A, B


def h_from_gamma(gamma: Sequence[int], d: int) -> CountVector:
    """Full symmetric h-vector (length d + 1) of a gamma-vector."""
    return CountVector(gamma_to_poly(gamma, d).padded(d + 1), "h")


def g_from_gamma(gamma: Sequence[int], d: int) -> CountVector:
    _, B = gamma_transform_matrices(d)
    gam = padded(gamma, d // 2 + 1)
    return CountVector((sum(b * x for b, x in zip(row, gam)) for row in B), "g")
