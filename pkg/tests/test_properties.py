"""Property-based checks on randomly drawn complexes."""
import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from cubecyl.cylinders import cylinder, neighborhood
from cubecyl.generators import gen_grid, gen_random_dual, gen_staircase, gen_tree
from cubecyl.hyperbolicity import geometry
from cubecyl.intervals import (embed_interval, gromov_product, interval, interval_by_metric,
                               median, project)
from cubecyl.stability import check_triple, star_holds

SETTINGS = settings(max_examples=40, deadline=None,
                    suppress_health_check=[HealthCheck.too_slow])

complexes = st.one_of(
    st.builds(gen_tree, st.integers(1, 40), st.integers(0, 10 ** 6)),
    st.builds(gen_random_dual, st.integers(3, 9), st.integers(0, 10 ** 6),
              st.sampled_from([0.3, 0.5, 0.7, 0.9])),
    st.builds(gen_grid, st.integers(1, 3), st.integers(1, 3)),
    st.builds(gen_staircase, st.integers(1, 8)),
)


@st.composite
def complex_and_triple(draw):
    C = draw(complexes)
    v = st.integers(0, C.n - 1)
    return C, draw(v), draw(v), draw(v)


@SETTINGS
@given(complex_and_triple())
def test_median_is_symmetric_and_gated(ct):
    C, x, y, z = ct
    m = median(C, x, y, z)
    assert m == median(C, y, z, x) == median(C, z, y, x)
    assert median(C, x, x, z) == x
    assert project(C, interval(C, x, y), z) == m
    assert gromov_product(C, x, y, z) == C.dist[x, m]


@SETTINGS
@given(complex_and_triple())
def test_interval_is_convex_and_median_closed(ct):
    C, x, y, z = ct
    I = interval_by_metric(C, x, y)
    idx = np.flatnonzero(I)
    for a in idx[:6]:
        for b in idx[-6:]:
            assert not (interval_by_metric(C, a, b) & ~I).any()
            assert I[median(C, a, b, z)]


@SETTINGS
@given(complex_and_triple())
def test_cylinder_sandwich(ct):
    C, x, y, _ = ct
    g = geometry(C)
    cyl = cylinder(C, x, y).vertices
    I = interval_by_metric(C, x, y)
    assert not (I & ~cyl).any()
    assert not (cyl & ~neighborhood(C, I, g.Dd)).any()
    assert np.array_equal(cyl, cylinder(C, y, x).vertices)


@SETTINGS
@given(complex_and_triple())
def test_embedding_is_l1_isometric(ct):
    C, x, y, _ = ct
    d = geometry(C).dim_d
    coords, chains = embed_interval(C, x, y, d=d)
    assert len(chains) <= d
    pts = list(coords.items())
    for u, cu in pts[:12]:
        for v, cv in pts[-12:]:
            assert sum(abs(a - b) for a, b in zip(cu, cv)) == C.dist[u, v]


@SETTINGS
@given(complex_and_triple())
def test_hyperbolic_triples_are_covered(ct):
    C, x, y, z = ct
    g = geometry(C)
    if g.grid_D > 2:
        return
    rep = check_triple(C, x, y, z)
    assert rep.covered
    assert star_holds(C, x, y, z, rep.cover_centers, g.R)
