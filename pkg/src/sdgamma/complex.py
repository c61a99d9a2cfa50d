"""
Abstract simplicial complexes stored by their facets.

Faces are sorted tuples of non-negative integer vertex ids; the empty face
``()`` belongs to every complex.  The complex containing only the empty face
is ``SimplicialComplex(((),))``, which is what ``from_facets([])`` returns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Mapping

from .errors import (
    CapacityError, ColoringError, DisjointnessError, IncompleteColoring, MalformedFace,
)
from .transforms import CountVector, h_from_f

__all__ = [
    "Face", "SimplicialComplex", "ColoredComplex",
    "from_facets", "f_vector", "h_vector", "faces",
    "barycentric_subdivision", "subdivision_labels",
    "relabel", "shift_vertices", "shift_colored", "join", "cone", "colored_cone", "suspension",
    "verify_coloring",
    "simplex", "simplex_boundary", "cycle", "cross_polytope_boundary",
]

Face = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of faces, held as an antichain of facets.

    The constructor trusts its input: use :func:`from_facets` for raw data.
    """

    facets: tuple[Face, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def dim(self) -> int:
        return max(len(F) for F in self.facets) - 1

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for F in self.facets for v in F}))

    def is_pure(self) -> bool:
        return len({len(F) for F in self.facets}) == 1

    def __contains__(self, face) -> bool:
        s = set(face)
        return any(s.issubset(F) for F in self.facets)


def from_facets(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Normalize a facet list: sort, deduplicate, drop dominated sets."""
    cleaned = set()
    for raw in facets:
        F = tuple(sorted(raw))
        if len(set(F)) != len(F):
            raise MalformedFace(f"repeated vertex in face {list(raw)}")
        if any(not isinstance(v, int) or v < 0 for v in F):
            raise MalformedFace(f"vertex ids must be non-negative integers: {list(raw)}")
        cleaned.add(F)
    if not cleaned:
        return SimplicialComplex(((),))
    sizes = {len(F) for F in cleaned}
    dominated = set()
    for G in cleaned:
        for r in sizes:
            if r >= len(G):
                continue
            for S in combinations(G, r):
                if S in cleaned:
                    dominated.add(S)
    kept = sorted(cleaned - dominated, key=lambda F: (len(F), F))
    return SimplicialComplex(tuple(kept))


def faces(c: SimplicialComplex, max_faces: int | None = None) -> list[set[Face]]:
    """All faces grouped by cardinality: ``out[k]`` holds the k-element faces."""
    if "faces" in c._cache:
        return c._cache["faces"]
    top = c.dim + 1
    out: list[set[Face]] = [set() for _ in range(top + 1)]
    for F in c.facets:
        for k in range(len(F) + 1):
            out[k].update(combinations(F, k))
        if max_faces is not None:
            total = sum(map(len, out))
            if total > max_faces:
                raise CapacityError(f"complex has more than {max_faces} faces")
    c._cache["faces"] = out
    return out


def f_vector(c: SimplicialComplex, max_faces: int | None = None) -> CountVector:
    return CountVector((len(b) for b in faces(c, max_faces)), "f")


def h_vector(c: SimplicialComplex) -> CountVector:
    f = f_vector(c)
    return h_from_f(f, len(f) - 1)


def _subdivide(c: SimplicialComplex) -> tuple[SimplicialComplex, list[Face]]:
    # vertex ids of sd(c): nonempty faces sorted by (size, lexicographic)
    labels = sorted((F for bucket in faces(c)[1:] for F in bucket),
                    key=lambda F: (len(F), F))
    ident = {F: i for i, F in enumerate(labels)}
    chains = []
    for F in c.facets:
        if not F:
            continue
        for order in permutations(F):
            chain = [ident[tuple(sorted(order[:m]))] for m in range(1, len(F) + 1)]
            chains.append(tuple(sorted(chain)))
    if not chains:
        return SimplicialComplex(((),)), labels
    # maximal chains of distinct facets never nest, so the list is an antichain
    return SimplicialComplex(tuple(sorted(set(chains), key=lambda F: (len(F), F)))), labels


def barycentric_subdivision(c: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the nonempty faces of ``c``.

    Vertex ``i`` of the result is the i-th nonempty face of ``c`` when faces
    are sorted by (cardinality, lexicographic order); see
    :func:`subdivision_labels`.
    """
    return _subdivide(c)[0]


def subdivision_labels(c: SimplicialComplex) -> list[Face]:
    return _subdivide(c)[1]


def relabel(c: SimplicialComplex, mapping: Mapping[int, int]) -> SimplicialComplex:
    if len(set(mapping[v] for v in c.vertices)) != len(c.vertices):
        raise MalformedFace("relabeling is not injective on the vertex set")
    return SimplicialComplex(tuple(sorted(
        (tuple(sorted(mapping[v] for v in F)) for F in c.facets),
        key=lambda F: (len(F), F))))


def shift_vertices(c: SimplicialComplex, offset: int) -> SimplicialComplex:
    return relabel(c, {v: v + offset for v in c.vertices})


def _fresh(*cs: SimplicialComplex, count: int = 1) -> list[int]:
    used = [v for c in cs for v in c.vertices]
    start = max(used) + 1 if used else 0
    return list(range(start, start + count))


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    common = set(a.vertices) & set(b.vertices)
    if common:
        raise DisjointnessError(f"join needs disjoint vertex sets; shared: {sorted(common)}")
    return SimplicialComplex(tuple(sorted(
        {tuple(sorted(F + G)) for F in a.facets for G in b.facets},
        key=lambda F: (len(F), F))))


def cone(c: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    """Join with a single new vertex (max id + 1 unless ``apex`` is given)."""
    if apex is None:
        apex = _fresh(c)[0]
    return join(c, SimplicialComplex(((apex,),)))


def suspension(c: SimplicialComplex) -> SimplicialComplex:
    north, south = _fresh(c, count=2)
    return join(c, SimplicialComplex(((north,), (south,))))


@dataclass(frozen=True)
class ColoredComplex:
    """A complex with a vertex coloring into {1, ..., d}.

    Construction does not check properness; :func:`verify_coloring` does.
    """

    complex: SimplicialComplex
    coloring: Mapping[int, int]
    d: int

    def is_balanced(self) -> bool:
        return verify_coloring(self) and self.complex.dim == self.d - 1


def verify_coloring(cc: ColoredComplex) -> bool:
    """True iff every facet, hence every face, has pairwise distinct colors in [d]."""
    col = cc.coloring
    missing = [v for v in cc.complex.vertices if v not in col]
    if missing:
        raise IncompleteColoring(f"vertices without a color: {missing[:10]}")
    for F in cc.complex.facets:
        cs = [col[v] for v in F]
        if len(set(cs)) != len(cs) or any(not 1 <= x <= cc.d for x in cs):
            return False
    return True


def shift_colored(cc: ColoredComplex, offset: int) -> ColoredComplex:
    """Add ``offset`` to every vertex id, keeping colors."""
    return ColoredComplex(shift_vertices(cc.complex, offset),
                          {v + offset: c for v, c in cc.coloring.items()}, cc.d)


def colored_cone(cc: ColoredComplex, apex_color: int,
                 sub: SimplicialComplex | None = None) -> ColoredComplex:
    """``cc`` united with the cone over ``sub`` (default: all of ``cc``).

    The new apex gets ``apex_color``; every facet of ``sub`` must avoid that
    color, otherwise the union would not be properly colored.
    """
    base = cc.complex
    if sub is None:
        sub = base
    for F in sub.facets:
        if F not in base:
            raise ColoringError(f"face {F} is not in the complex being coned")
        clash = [v for v in F if cc.coloring.get(v) == apex_color]
        if clash:
            raise ColoringError(
                f"apex color {apex_color} already used by vertex {clash[0]} of face {F}")
    apex = _fresh(base)[0]
    coned = cone(sub, apex)
    union = from_facets(list(base.facets) + list(coned.facets))
    coloring = dict(cc.coloring)
    coloring[apex] = apex_color
    return ColoredComplex(union, coloring, max(cc.d, apex_color))


# ---------------------------------------------------------------- fixtures

def simplex(vertices: Iterable[int]) -> SimplicialComplex:
    return from_facets([list(vertices)])


def simplex_boundary(k: int) -> SimplicialComplex:
    """Boundary of the simplex on {0, ..., k}."""
    return from_facets(combinations(range(k + 1), k))


def cycle(m: int, start: int = 0) -> SimplicialComplex:
    vs = list(range(start, start + m))
    return from_facets([[vs[i], vs[(i + 1) % m]] for i in range(m)])


def cross_polytope_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-dimensional cross-polytope (octahedron for n = 3)."""
    c = SimplicialComplex(((),))
    for i in range(n):
        c = join(c, SimplicialComplex(((2 * i,), (2 * i + 1,))))
    return c
