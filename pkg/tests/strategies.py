"""Hypothesis strategies for colored complexes and FFK vectors."""

from hypothesis import strategies as st

from sdgamma.complex import f_vector, from_facets


@st.composite
def colored_complexes(draw, d, max_vertices=8, max_facets=6):
    """(facets, coloring) of a properly colored complex with colors in 1..d."""
    nv = draw(st.integers(1, max_vertices))
    coloring = {v: draw(st.integers(1, d)) for v in range(nv)}
    by_color = {}
    for v, c in coloring.items():
        by_color.setdefault(c, []).append(v)
    facets = []
    for _ in range(draw(st.integers(1, max_facets))):
        colors = draw(st.lists(st.sampled_from(sorted(by_color)), unique=True, max_size=d))
        facets.append([draw(st.sampled_from(by_color[c])) for c in colors])
    return facets, coloring


def disjoint_union_f(*fs):
    n = max(len(f) for f in fs)
    out = [1] + [0] * (n - 1)
    for f in fs:
        for i in range(1, len(f)):
            out[i] += f[i]
    return tuple(out)


def f_of(facets):
    return tuple(f_vector(from_facets(facets)))


@st.composite
def ffk_vectors(draw, d, **kw):
    """f-vector of a random d-colored complex, hence d-FFK."""
    facets, _ = draw(colored_complexes(d, **kw))
    return f_of(facets)
