from __future__ import annotations

import random

import pytest

from qcolour import (
    Graph,
    Matching,
    MatchingFormatError,
    is_maximum,
    is_perfect,
    maximum_matching,
    parse_matching,
    serialize_matching,
)
from qcolour.instances import named
from helpers import brute_force_matching_size, random_graph


def test_matching_rejects_shared_vertex():
    g = Graph(3, ((0, 1), (1, 2)))
    with pytest.raises(ValueError, match="shares a vertex"):
        Matching.from_edge_ids(g, {0, 1})


def test_mate_view_matches_edge_set():
    g = Graph(4, ((0, 1), (2, 3), (1, 2)))
    m = Matching.from_edge_ids(g, {0, 1})
    assert m.mate == (1, 0, 3, 2)
    assert m.size == 2
    assert m.covers(0) and m.covers(3)
    assert m.matched_edge(2) == 1
    assert is_perfect(g, m)


def test_exposed_vertices_have_no_mate():
    g = Graph(3, ((0, 1), (1, 2)))
    m = Matching.from_edge_ids(g, {0})
    assert m.mate[2] is None
    assert not m.covers(2)
    assert m.matched_edge(2) is None
    assert not is_perfect(g, m)


def test_maximum_on_even_cycle_is_perfect():
    m = maximum_matching(named("cycle_6"))
    assert m.size == 3
    assert all(x is not None for x in m.mate)


def test_maximum_on_odd_cycle_leaves_one_exposed():
    m = maximum_matching(named("cycle_5"))
    assert m.size == 2


def test_maximum_on_petersen():
    # Petersen has a perfect matching; greedy alone stalls on some orders.
    m = maximum_matching(named("petersen"))
    assert m.size == 5


def test_blossom_case_two_triangles_joined_by_path():
    # Two triangles bridged by an even path: requires shrinking both blossoms.
    g = Graph(
        8,
        (
            (0, 1), (1, 2), (0, 2),  # left triangle
            (5, 6), (6, 7), (5, 7),  # right triangle
            (2, 3), (3, 4), (4, 5),  # bridge
        ),
    )
    m = maximum_matching(g)
    assert m.size == brute_force_matching_size(g) == 4
    assert is_maximum(g, m)


def test_greedy_seed_keeps_disjoint_prefix():
    # When the first edges are pairwise disjoint and form a maximum matching,
    # the solver returns exactly those edges: generators depend on this.
    g = Graph(6, ((0, 1), (2, 3), (4, 5), (1, 2), (3, 4), (0, 5)))
    m = maximum_matching(g)
    assert m.edges.members == frozenset({0, 1, 2})


def test_maximum_agrees_with_brute_force_on_random_graphs():
    rng = random.Random(271)
    for _ in range(120):
        g = random_graph(rng.randint(0, 9), rng.uniform(0.1, 0.8), rng)
        m = maximum_matching(g)
        assert m.size == brute_force_matching_size(g)
        assert is_maximum(g, m)


def test_is_maximum_rejects_augmentable_matching():
    g = named("path_4")  # 0-1-2-3; the middle edge alone is not maximum
    m = Matching.from_edge_ids(g, {1})
    assert not is_maximum(g, m)


def test_parse_and_serialize_round_trip():
    g = Graph(4, ((0, 1), (1, 2), (2, 3)))
    m = Matching.from_edge_ids(g, {0, 2})
    text = serialize_matching(m)
    assert text == "0 1\n2 3\n"
    again = parse_matching(text, g)
    assert again.edges == m.edges


def test_parse_matching_accepts_comments_and_reversed_endpoints():
    g = Graph(4, ((0, 1), (2, 3)))
    m = parse_matching("# both edges\n1 0\n3 2\n", g)
    assert m.size == 2


def test_serialize_empty_matching_is_empty_document():
    g = Graph(2, ((0, 1),))
    assert serialize_matching(Matching.from_edge_ids(g, ())) == ""
    assert parse_matching("", g).size == 0


@pytest.mark.parametrize(
    "text, message",
    [
        ("0\n", "must be 'u v'"),
        ("a b\n", "must be 'u v'"),
        ("0 3\n", "not a graph edge"),
        ("0 1\n1 0\n", "listed twice"),
        ("0 1\n1 2\n", "shares a vertex"),
    ],
)
def test_parse_matching_errors(text, message):
    g = Graph(4, ((0, 1), (1, 2), (2, 3)))
    with pytest.raises(MatchingFormatError, match=message):
        parse_matching(text, g)
