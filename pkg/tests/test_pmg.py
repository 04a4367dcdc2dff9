from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from fleischner.corpus import NAMES, named, random_class_G
from fleischner.errors import MapError, PmgSyntaxError
from fleischner.pmg import (
    emit_cycle,
    emit_edge_list,
    emit_pmg,
    parse_cycle,
    parse_edge_list,
    parse_pmg,
    read_pmg,
    write_pmg,
)

THETA = """pmg 1
vertex 0 darts 1 2 3
vertex 1 darts 4 6 5
edge 1 1 4
edge 2 2 5
edge 3 3 6
outer 1
"""


@pytest.mark.parametrize("name", NAMES)
def test_round_trip_is_identity(name):
    text = emit_pmg(named(name))
    assert emit_pmg(parse_pmg(text)) == text


def test_normalized_theta_round_trip():
    assert emit_pmg(parse_pmg(THETA)) == THETA


def test_comments_and_blank_lines_ignored():
    noisy = "# header comment\n\n" + THETA.replace("edge 2", "edge 2  # inline\nedge 2", 0)
    noisy = noisy.replace("outer 1", "outer 1   # the outer dart")
    assert parse_pmg(noisy) == parse_pmg(THETA)


def test_tutte_file_parses():
    m = named("tutte")
    assert (m.n_vertices, m.n_edges) == (46, 69)


@pytest.mark.parametrize(
    "text, line",
    [
        (THETA.replace("outer 1\n", ""), None),
        (THETA.replace("pmg 1", "pmg 2"), 1),
        (THETA.replace("edge 3 3 6", "edge 3 3 x"), 6),
        (THETA.replace("vertex 1 darts", "vertex 1 dorts"), 3),
        (THETA + "face 1 2\n", 8),
    ],
)
def test_syntax_errors_carry_line(text, line):
    with pytest.raises(PmgSyntaxError) as info:
        parse_pmg(text)
    if line is not None:
        assert info.value.line == line
        assert f"line {line}" in str(info.value)


def test_semantic_error_is_map_error():
    with pytest.raises(MapError):
        parse_pmg(THETA.replace("edge 3 3 6", "edge 3 3 5"))


def test_file_helpers(tmp_path):
    p = tmp_path / "k4.pmg"
    write_pmg(named("k4"), p)
    assert read_pmg(p) == named("k4")


def test_cycle_and_edge_list_formats():
    assert parse_cycle(emit_cycle([3, 1, 2])) == [3, 1, 2]
    assert emit_cycle([1, 2]) == "cycle 1 2\n"
    assert parse_edge_list("4 2\n# c\n1\n") == [4, 2, 1]
    assert emit_edge_list([4, 2, 1]) == "1 2 4\n"
    with pytest.raises(MapError):
        parse_edge_list("1 1")
    with pytest.raises(PmgSyntaxError):
        parse_cycle("loop 1 2 3")


@settings(max_examples=25, deadline=None)
@given(n=st.integers(2, 40), seed=st.integers(0, 1000), multi=st.booleans())
def test_round_trip_random(n, seed, multi):
    m = random_class_G(2 * n, seed, allow_multi=multi)
    text = emit_pmg(m)
    assert parse_pmg(text) == m
    assert emit_pmg(parse_pmg(text)) == text
