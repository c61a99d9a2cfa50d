from itertools import chain, combinations

import pytest
from hypothesis import given, settings, strategies as st

from sdgamma.complex import (
    ColoredComplex, barycentric_subdivision, colored_cone, cone,
    cross_polytope_boundary, cycle, f_vector, faces, from_facets, h_vector, join, relabel,
    shift_colored, simplex, simplex_boundary, subdivision_labels, suspension, verify_coloring,
)
from sdgamma.errors import (
    CapacityError, ColoringError, DisjointnessError, IncompleteColoring, MalformedFace,
)
from sdgamma.eulerian import h_sd_from_h


def brute_f(c):
    seen = set()
    for F in c.facets:
        for S in chain.from_iterable(combinations(F, k) for k in range(len(F) + 1)):
            seen.add(S)
    out = [0] * (max(len(S) for S in seen) + 1)
    for S in seen:
        out[len(S)] += 1
    return tuple(out)


def test_fixture_vectors():
    assert f_vector(simplex_boundary(2)) == (1, 3, 3)
    assert h_vector(simplex_boundary(3)) == (1, 1, 1, 1)
    assert f_vector(cross_polytope_boundary(3)) == (1, 6, 12, 8)
    assert h_vector(cross_polytope_boundary(3)) == (1, 3, 3, 1)
    assert f_vector(cycle(5)) == (1, 5, 5)


def test_empty_complex():
    c = from_facets([])
    assert c.facets == ((),)
    assert f_vector(c) == (1,)
    assert c.dim == -1


def test_from_facets_normalizes():
    c = from_facets([[2, 1], [1], [1, 2], [3]])
    assert c.facets == ((3,), (1, 2))
    with pytest.raises(MalformedFace):
        from_facets([[1, 1]])
    with pytest.raises(MalformedFace):
        from_facets([[-1, 2]])


def test_face_cap():
    with pytest.raises(CapacityError):
        faces(simplex(range(12)), max_faces=100)


def test_subdivision_of_triangle_boundary():
    c = simplex_boundary(2)
    sd = barycentric_subdivision(c)
    assert f_vector(sd) == (1, 6, 6)
    assert h_vector(sd) == h_sd_from_h((1, 1, 1)) == (1, 4, 1)
    assert subdivision_labels(c)[:3] == [(0,), (1,), (2,)]


@pytest.mark.parametrize("c", [simplex_boundary(3), cross_polytope_boundary(3), cycle(4),
                               simplex([0, 1, 2]), from_facets([[0, 1, 2], [2, 3]])])
def test_subdivision_h_matches_transfer(c):
    assert h_vector(barycentric_subdivision(c)) == h_sd_from_h(h_vector(c))


def test_join_and_cone():
    a, b = cycle(3), cycle(3, start=3)
    assert f_vector(join(a, b)) == (1, 6, 15, 18, 9)
    with pytest.raises(DisjointnessError):
        join(a, a)
    assert f_vector(cone(a)) == (1, 4, 6, 3)
    assert f_vector(suspension(a)) == (1, 5, 9, 6)
    assert relabel(a, {0: 10, 1: 11, 2: 12}).vertices == (10, 11, 12)


def test_coloring_checks():
    c = from_facets([[1, 2], [2, 3]])
    assert verify_coloring(ColoredComplex(c, {1: 1, 2: 2, 3: 1}, 2))
    assert not verify_coloring(ColoredComplex(c, {1: 1, 2: 1, 3: 2}, 2))
    assert not verify_coloring(ColoredComplex(c, {1: 1, 2: 3, 3: 1}, 2))
    with pytest.raises(IncompleteColoring):
        verify_coloring(ColoredComplex(c, {1: 1, 2: 2}, 2))
    cc = ColoredComplex(c, {1: 1, 2: 2, 3: 1}, 2)
    assert cc.is_balanced()
    moved = shift_colored(cc, 10)
    assert moved.complex.vertices == (11, 12, 13) and verify_coloring(moved)


def test_colored_cone():
    cc = ColoredComplex(from_facets([[1], [2]]), {1: 1, 2: 1}, 1)
    out = colored_cone(cc, 2)
    assert f_vector(out.complex) == (1, 3, 2)
    assert out.is_balanced()
    with pytest.raises(ColoringError):
        colored_cone(cc, 1)


facet_lists = st.lists(st.lists(st.integers(0, 7), min_size=1, max_size=4, unique=True),
                       min_size=1, max_size=6)


@settings(max_examples=150)
@given(facet_lists)
def test_f_vector_matches_power_set(facets):
    c = from_facets(facets)
    assert f_vector(c) == brute_f(c)
    # facets form an antichain
    for F in c.facets:
        for G in c.facets:
            assert F == G or not set(F) <= set(G)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(0, 5), min_size=1, max_size=3, unique=True),
                min_size=1, max_size=4))
def test_subdivision_transfer_random(facets):
    c = from_facets(facets)
    assert h_vector(barycentric_subdivision(c)) == h_sd_from_h(h_vector(c))
