from __future__ import annotations

import networkx as nx
import pytest

from fleischner.construction import is_bond
from fleischner.corpus import named
from fleischner.errors import SizeLimit
from fleischner.oracle import (
    bonds_via_dual_cycles,
    cross_check,
    cuts_by_bipartition,
    hamilton_search,
)
from fleischner.two_factor import complement_two_factor, iter_perfect_matchings
from fleischner.verify import check_hamilton


def test_theta_has_one_bond():
    assert bonds_via_dual_cycles(named("theta")) == [frozenset({1, 2, 3})]


def test_k4_has_seven_bonds():
    bonds = bonds_via_dual_cycles(named("k4"))
    assert len(bonds) == 7
    assert sorted(len(b) for b in bonds) == [3, 3, 3, 3, 4, 4, 4]


@pytest.mark.parametrize("name", ["theta", "k4", "prism", "cube"])
def test_bonds_are_exactly_the_minimal_cuts(name):
    G = named(name)
    bonds = set(bonds_via_dual_cycles(G))
    cuts = cuts_by_bipartition(G)
    minimal = {c for c in cuts if not any(o < c for o in cuts)}
    assert bonds == minimal
    assert all(is_bond(G, b) for b in bonds)


def test_size_limits():
    with pytest.raises(SizeLimit):
        bonds_via_dual_cycles(named("tutte"))
    with pytest.raises(SizeLimit):
        cuts_by_bipartition(named("tutte"))
    with pytest.raises(SizeLimit):
        hamilton_search(named("tutte"))


def test_hamilton_star_has_none():
    assert hamilton_search([(0, 1), (0, 2), (0, 3)]) is None


def test_hamilton_petersen_has_none():
    assert hamilton_search(list(nx.petersen_graph().edges())) is None


@pytest.mark.parametrize("name", ["theta", "k4", "prism", "cube"])
def test_hamilton_found_and_accepted(name):
    G = named(name)
    H = hamilton_search(G)
    assert H is not None and check_hamilton(G, H)


def test_hamilton_respects_forbidden_edges():
    G = named("theta")
    assert hamilton_search(G, forbidden_edges={1, 2}) is None
    assert hamilton_search(G, forbidden_edges={3}) == [0, 1]


def test_edge_triples_with_ids():
    assert hamilton_search([(7, 0, 1), (8, 1, 0)]) == [0, 1]
    assert hamilton_search([(7, 0, 1), (8, 1, 0)], forbidden_edges={8}) is None


@pytest.mark.parametrize("name", ["theta", "k4", "prism", "cube"])
def test_cross_check_every_two_factor(name):
    G = named(name)
    for m in iter_perfect_matchings(G):
        rep = cross_check(G, complement_two_factor(G, m))
        assert rep.passed, rep.notes
