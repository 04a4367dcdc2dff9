from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from fleischner.construction import (
    Color,
    assigned_walk,
    color_faces,
    construct,
    is_bond,
    order_components,
)
from fleischner.corpus import named, random_class_G
from fleischner.errors import ConstructionError, NotInClass
from fleischner.planar_map import subdivide_edge
from fleischner.two_factor import (
    TwoFactor,
    complement_two_factor,
    iter_perfect_matchings,
    validate_two_factor,
)


def _cut(G, A, B):
    A, B = set(A), set(B)
    return {e for e in G.edge_ids if {*G.endpoints(e)} & A and {*G.endpoints(e)} & B}


class TestColouring:
    def test_prism_triangles(self, prism_triangles):
        G, X = prism_triangles
        col = color_faces(G, X)
        assert col.color[G.outer_face.id] is Color.ALPHA
        for e in G.edge_ids:
            da, db = G.edges[e]
            same = col.color[G.face_of(da).id] == col.color[G.face_of(db).id]
            assert same == (e not in X.edges)
        assert all(col.reversed[f] == (c is Color.ALPHA) for f, c in col.color.items())

    def test_root_swap_flips_everything(self, cube_squares):
        G, X = cube_squares
        a, b = color_faces(G, X), color_faces(G, X, Color.BETA)
        assert all(a.color[f].other is b.color[f] for f in a.color)

    def test_assigned_walk_reverses_alpha(self, prism_triangles):
        G, X = prism_triangles
        col = color_faces(G, X)
        f = G.outer_face.id
        walk = assigned_walk(G, col, f)
        traced = G.faces[f].walk
        assert [G.tail(d) for d in walk] == [G.head(d) for d in reversed(traced)]

    def test_non_two_factor_is_rejected(self):
        G = named("k4")
        bogus = TwoFactor(frozenset({1, 2}), ())
        with pytest.raises(ConstructionError):
            color_faces(G, bogus)


class TestOrdering:
    def test_bonds_and_single_link(self, cube_squares):
        G, X = cube_squares
        ordering = order_components(G, X)
        assert ordering.order == (0, 1) and ordering.backtracks == 0
        (step,) = ordering.steps
        assert is_bond(G, step.bond) and len(step.bond) == 4
        assert step.edge == min(step.bond)

    def test_is_bond_basics(self):
        G = named("theta")
        assert is_bond(G, {1, 2, 3})
        assert not is_bond(G, {1, 2})
        assert not is_bond(G, set())
        k4 = named("k4")
        star = {e for e in k4.edge_ids if 4 in k4.endpoints(e)}
        assert is_bond(k4, star)

    def test_hexagon_needs_grown_side_bonds(self, hexagon):
        G, X = hexagon
        comps = [c.vertices for c in X.components]
        # the cut between a grown part and the next cycle alone is never a bond
        for order in permutations(range(3)):
            first = _cut(G, comps[order[0]], comps[order[1]])
            assert not is_bond(G, first)
        ordering = order_components(G, X)
        assert ordering.backtracks == 0
        assert all(is_bond(G, s.bond) for s in ordering.steps)
        assert [len(s.bond) for s in ordering.steps] == [2, 2]

    def test_hexagon_constructs(self, hexagon):
        G, X = hexagon
        r = construct(G, X)
        assert r.metrics["edges_j"] == 13 and r.metrics["max_degree_j"] == 5


class TestDiamonds:
    def test_prism(self, prism_triangles):
        G, X = prism_triangles
        r = construct(G, X)
        (dm,) = r.diamonds
        assert dm.m_edge in set(G.edge_ids) - X.edges
        assert {dm.a, dm.b} == set(G.endpoints(dm.m_edge))
        ac, bd = dm.e1
        assert {*r.J.endpoints(ac)} == {dm.a, dm.c} and {*r.J.endpoints(bd)} == {dm.b, dm.d}
        assert r.J.n_edges == 11 and r.J.is_simple()
        assert set(dm.e0[1:]) <= X.edges

    def test_cube(self, cube_squares):
        G, X = cube_squares
        r = construct(G, X)
        assert r.metrics["edges_j"] == 14 and r.J.is_simple()

    def test_hamilton_is_spliced(self, prism_triangles):
        G, X = prism_triangles
        r = construct(G, X)
        (dm,) = r.diamonds
        assert set(r.H.edges) == (X.edges - {dm.e0[1], dm.e0[2]}) | set(dm.e1)
        assert sorted(r.H.vertices) == sorted(G.vertices)

    def test_beta_root_also_works(self, cube_squares, prism_triangles):
        for G, X in (cube_squares, prism_triangles):
            r = construct(G, X, root_color=Color.BETA)
            assert r.metrics["edges_j"] == G.n_edges + 2


def test_not_in_class():
    m, _, _ = subdivide_edge(named("k4"), 1)
    with pytest.raises(NotInClass):
        construct(m, TwoFactor(frozenset(), ()))


@pytest.mark.parametrize("name", ["theta", "k4", "prism", "cube"])
def test_every_two_factor_of_small_corpus(name):
    G = named(name)
    for m in iter_perfect_matchings(G):
        X = complement_two_factor(G, m)
        for root in Color:
            r = construct(G, X, root_color=root)
            assert r.J.n_edges - G.n_edges == 2 * (X.n - 1)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 9), seed=st.integers(0, 10_000), multi=st.booleans(), pick=st.integers(0, 10**6))
def test_any_two_factor_constructs(n, seed, multi, pick):
    G = random_class_G(2 * n if multi else 2 * n + 2, seed, allow_multi=multi)
    ms = list(iter_perfect_matchings(G))
    X = complement_two_factor(G, ms[pick % len(ms)])
    r = construct(G, X)
    assert r.metrics["backtracks"] == 0
    assert r.J.n_edges == G.n_edges + 2 * (X.n - 1)
    assert max(len(rot) for rot in r.J.rotation.values()) <= 5
    assert len(r.ordering.M) == X.n - 1
    assert not set(r.H.edges) & (set(G.edge_ids) - X.edges)
