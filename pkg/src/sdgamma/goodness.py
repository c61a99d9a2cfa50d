"""
Goodness certificates for the gamma families.

A vector g (with g_0 = 0) is *good* for an FFK-vector f when it splits into
summands that can be attached to a complex with f-vector f by coning:

* "dominated" summands are d-FFK and bounded entrywise by f; gluing them
  one cone at a time gives a (d+1)-colorable complex.
* "scaled" summands are (d-1)-FFK with (i+1) s_i <= f_i; these are absorbed
  without a new color.

If every summand is scaled, g is d-good for f; otherwise it is (d+1)-good.
Either way f + (0, g') is FFK at that level, where g' drops the leading 0.

:func:`goodness_certificate` builds, for gamma^(n,j) and gamma'^(n,j), the
decomposition obtained by unrolling the gamma recurrences down to
gamma'^(m,1) leaves.  The base is always gamma^(n,1) with trailing zeros
dropped, and d = n // 2 - 1.  :func:`verify_certificate` re-checks every
claim from scratch.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import RangeError
from .eulerian import gamma_nj
from .ffk import is_ffk
from .transforms import CountVector, padded, vec_add, vec_scale, vec_shift

__all__ = [
    "DOMINATED", "SCALED", "Summand", "Part", "GoodnessCertificate", "CertificateReport",
    "goodness_certificate", "verify_certificate", "certificate_range", "all_certificates",
]

DOMINATED = "dominated"
SCALED = "scaled"


@dataclass(frozen=True)
class Summand:
    vector: CountVector
    kind: str
    origin: str


@dataclass(frozen=True)
class Part:
    """``coeff`` times ``vector`` (shifted one place right if ``shifted``)."""

    coeff: int
    shifted: bool
    vector: CountVector
    label: str
    certificate: Optional["GoodnessCertificate"] = None


@dataclass(frozen=True)
class GoodnessCertificate:
    n: int
    j: int
    primed: bool
    target: CountVector
    base: CountVector
    d: int
    level: int
    rule: str
    parts: tuple[Part, ...]
    summands: tuple[Summand, ...]
    notes: tuple[str, ...] = ()

    @property
    def label(self) -> str:
        return gamma_nj(self.n, self.j, self.primed).label

    @property
    def kind(self) -> str:
        return f"{self.level}-good"


def _trim(v: Sequence[int]) -> CountVector:
    v = list(v)
    while len(v) > 1 and v[-1] == 0:
        v.pop()
    return CountVector(v)


def _base(n: int) -> CountVector:
    d = n // 2 - 1
    return CountVector(padded(gamma_nj(n, 1).vector, d + 1))


def certificate_range(n: int) -> list[tuple[int, bool]]:
    """Admissible (j, primed) pairs at level n, by parity of n."""
    if n < 2:
        return []
    if n % 2 == 0:
        return [(j, False) for j in range(2, n // 2 + 1)] + \
               [(j, True) for j in range(1, n // 2 + 1)]
    return [(j, False) for j in range(2, (n + 1) // 2 + 1)] + \
           [(j, True) for j in range(1, (n + 1) // 2)]


def _expected_level(n: int, primed: bool) -> int:
    d = n // 2 - 1
    return d if (n % 2 == 0 and not primed) else d + 1


_memo: dict[tuple[int, int, bool], GoodnessCertificate] = {}
_memo_lock = threading.RLock()


def goodness_certificate(n: int, j: int, primed: bool = False) -> GoodnessCertificate:
    """Certificate that gamma^(n,j) (or gamma'^(n,j)) is good for gamma^(n,1)."""
    if (j, bool(primed)) not in certificate_range(n):
        raise RangeError(f"no goodness statement for n = {n}, j = {j}, primed = {bool(primed)}")
    key = (n, j, bool(primed))
    with _memo_lock:
        if key not in _memo:
            _memo[key] = _build(n, j, bool(primed))
        return _memo[key]


def _transfer(child: GoodnessCertificate, d: int, times: int) -> list[Summand]:
    # a child one level down has d - 1; everything it holds becomes scaled
    out = []
    for s in child.summands:
        kind = SCALED if child.d < d else s.kind
        out.extend([Summand(s.vector, kind, s.origin)] * times)
    return out


def _build(n: int, j: int, primed: bool) -> GoodnessCertificate:
    d = n // 2 - 1
    base = _base(n)
    target = gamma_nj(n, j, primed).vector
    parts: list[Part] = []
    summands: list[Summand] = []
    notes: list[str] = []

    def child(m, k, pr, coeff):
        c = goodness_certificate(m, k, pr)
        parts.append(Part(coeff, False, c.target, c.label, c))
        summands.extend(_transfer(c, d, coeff))

    if primed and j == 1:
        rule = "primed-leaf"
        parts.append(Part(2, True, base, gamma_nj(n, 1).label))
        summands += [Summand(base, DOMINATED, gamma_nj(n, 1).label)] * 2
        m = len(target)
        if padded(vec_shift(vec_scale(2, gamma_nj(n, 1).vector)), m) == tuple(target):
            notes.append(f"target equals (0, 2 gamma^({n},1))")
        if padded(vec_shift(vec_scale(2, gamma_nj(n - 1, 1).vector)), m) == tuple(target):
            notes.append(f"target equals (0, 2 gamma^({n - 1},1))")
    elif primed:
        rule = "primed-split"
        for k in range(2, j):
            child(n - 1, k, True, 1)
        f = _trim(vec_add(gamma_nj(n - 1, 1).vector,
                          *(gamma_nj(n - 1, k).vector for k in range(j, n // 2 + 1))))
        origin = f"gamma^({n - 1},1) + sum gamma^({n - 1},k), k >= {j}"
        parts.append(Part(2, True, f, origin))
        summands += [Summand(f, DOMINATED, origin)] * 2
    elif n % 2 == 1 and 2 * j == n + 1:
        rule = "middle"
        for k in range(1, j):
            child(n - 1, k, True, 1)
    else:
        rule = "even-split" if n % 2 == 0 else "odd-split"
        for k in range(1, j):
            child(n - 1, k, True, 2)
        for k in range(j, n // 2 + 1):
            child(n - 1, k, False, 1)

    level = d + 1 if any(s.kind == DOMINATED for s in summands) else d
    return GoodnessCertificate(n, j, primed, target, base, d, level, rule,
                               tuple(parts), tuple(summands), tuple(notes))


def all_certificates(n_max: int) -> list[GoodnessCertificate]:
    return [goodness_certificate(n, j, p)
            for n in range(2, n_max + 1) for j, p in certificate_range(n)]


@dataclass
class CertificateReport:
    label: str
    violations: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def _ffk(v: Sequence[int], d: int) -> bool:
    v = _trim(v)
    if len(v) > d + 1 or v[0] != 1 or any(x < 0 for x in v):
        return False
    return bool(is_ffk(v, d, witness=False))


def verify_certificate(cert: GoodnessCertificate, _seen: dict | None = None) -> CertificateReport:
    """Independently re-check every claim made by ``cert`` and its children."""
    seen = {} if _seen is None else _seen
    if id(cert) in seen:
        return seen[id(cert)]
    rep = CertificateReport(f"{cert.label} [{cert.rule}]")
    bad = rep.violations.append
    n, d = cert.n, cert.n // 2 - 1

    try:
        truth = gamma_nj(n, cert.j, cert.primed).vector
    except RangeError as e:
        bad(f"target family undefined: {e}")
        seen[id(cert)] = rep
        return rep
    if tuple(cert.target) != tuple(truth):
        bad(f"target {tuple(cert.target)} differs from {tuple(truth)}")
    if tuple(cert.base) != tuple(_base(n)) or cert.d != d:
        bad("base vector or d does not match gamma^(n,1)")
    if cert.level != _expected_level(n, cert.primed):
        bad(f"claimed level {cert.level}, expected {_expected_level(n, cert.primed)}")
    if truth[0] != 0:
        bad("target has a nonzero constant term")

    width = max([len(truth)] + [len(p.vector) + p.shifted for p in cert.parts])
    parts_sum = vec_add(*(vec_scale(p.coeff, vec_shift(p.vector) if p.shifted else p.vector)
                          for p in cert.parts))
    if padded(parts_sum, width) != padded(truth, width):
        bad(f"parts add up to {tuple(parts_sum)}, not the target")

    total = vec_shift(vec_add(*(s.vector for s in cert.summands)))
    width = max(len(total), len(truth))
    if padded(total, width) != padded(truth, width):
        bad(f"summands (shifted) add up to {tuple(total)}, not the target")

    base = cert.base
    for idx, s in enumerate(cert.summands):
        v = s.vector
        if len(_trim(v)) > len(base):
            bad(f"summand {idx} ({s.origin}) is longer than the base")
            continue
        if s.kind == DOMINATED:
            if not _ffk(v, d):
                bad(f"summand {idx} ({s.origin}) is not {d}-FFK")
            if any(x > base[i] for i, x in enumerate(v)):
                bad(f"domination violated: summand {idx} {tuple(v)} exceeds base {tuple(base)}")
        elif s.kind == SCALED:
            if not _ffk(v, d - 1):
                bad(f"summand {idx} ({s.origin}) is not {d - 1}-FFK")
            if any((i + 1) * x > base[i] for i, x in enumerate(v)):
                bad(f"scaled domination violated: summand {idx} {tuple(v)} against base {tuple(base)}")
        else:
            bad(f"summand {idx} has unknown kind {s.kind!r}")

    if not _ffk(base, d):
        bad(f"base {tuple(base)} is not {d}-FFK")
    scaled = [s.vector for s in cert.summands if s.kind == SCALED]
    if scaled and not _ffk(vec_add(base, vec_shift(vec_add(*scaled))), d):
        bad("base plus scaled summands is not FFK at the base level")
    composite = vec_add(base, vec_shift(vec_add(*(s.vector for s in cert.summands))))
    if not _ffk(composite, cert.level):
        bad(f"composite {tuple(composite)} is not {cert.level}-FFK")

    if cert.summands and cert.level == d + 1:
        lengths = {len(_trim(s.vector)) for s in cert.summands}
        if lengths and max(lengths) < len(base):
            rep.notes.append("every summand is shorter than the base")
    rep.notes.extend(cert.notes)

    for p in cert.parts:
        if p.certificate is None:
            continue
        if tuple(p.certificate.target) != tuple(p.vector):
            bad(f"part {p.label} disagrees with its certificate target")
        sub = verify_certificate(p.certificate, seen)
        rep.violations.extend(f"{sub.label}: {v}" for v in sub.violations)

    seen[id(cert)] = rep
    return rep
