from __future__ import annotations

import json
import random

import pytest

from qcolour import (
    Graph,
    PatternAbsentError,
    SearchIncompleteError,
    anti_ramsey_star,
    direct_anti_ramsey_star,
    optimal_colouring,
    oracle_optimal,
    validate,
)
from qcolour.exact import result_to_json
from qcolour.instances import named
from helpers import random_graph


@pytest.mark.parametrize(
    "name, opt",
    [
        ("path_2", 1),
        ("path_3", 2),
        ("path_4", 3),
        ("cycle_4", 4),
        ("cycle_5", 5),
        ("cycle_6", 6),
        ("star_3", 2),
        ("complete_4", 3),
    ],
)
def test_known_optima(name, opt):
    res = optimal_colouring(named(name))
    assert res.complete
    assert res.opt == opt


def test_witness_achieves_opt_and_is_valid():
    for name in ["cycle_5", "complete_4", "star_4", "petersen"]:
        g = named(name)
        res = optimal_colouring(g)
        assert res.witness.num_colours == res.opt
        assert validate(g, res.witness, 2).valid


def test_edgeless_graph_has_zero_colours():
    res = optimal_colouring(Graph(3, ()))
    assert res.opt == 0 and res.complete and res.nodes_explored == 0


def test_budget_zero_returns_trivial_incumbent():
    res = optimal_colouring(named("cycle_4"), budget=0)
    assert not res.complete
    assert res.opt == 1  # the all-one-colour fallback
    assert validate(named("cycle_4"), res.witness, 2).valid


def test_budget_exhaustion_keeps_partial_incumbent_valid():
    g = named("petersen")
    res = optimal_colouring(g, budget=25)
    assert not res.complete
    assert res.nodes_explored <= 25
    assert validate(g, res.witness, 2).valid
    full = optimal_colouring(g)
    assert full.complete
    assert res.opt <= full.opt


def test_q_one_forces_single_colour_per_component():
    assert optimal_colouring(named("cycle_4"), q=1).opt == 1
    two_edges = Graph(4, ((0, 1), (2, 3)))
    assert optimal_colouring(two_edges, q=1).opt == 2


def test_higher_budget_recovers_rainbow():
    g = named("star_3")
    assert optimal_colouring(g, q=3).opt == 3


def test_rejects_bad_parameters():
    g = named("path_3")
    with pytest.raises(ValueError, match="positive"):
        optimal_colouring(g, q=0)
    with pytest.raises(ValueError, match="nonnegative"):
        optimal_colouring(g, budget=-1)


def test_result_json_is_stable():
    res = optimal_colouring(named("path_3"))
    doc = json.loads(result_to_json(res))
    assert doc == {
        "opt": 2,
        "complete": True,
        "nodes_explored": res.nodes_explored,
        "witness": list(res.witness.colour),
    }
    assert result_to_json(res) == result_to_json(optimal_colouring(named("path_3")))


def test_solver_matches_oracle_on_random_graphs():
    rng = random.Random(1234)
    checked = 0
    while checked < 60:
        g = random_graph(rng.randint(1, 7), rng.uniform(0.2, 0.9), rng)
        if g.m > 10:
            continue
        checked += 1
        for q in (1, 2, 3):
            assert optimal_colouring(g, q).opt == oracle_optimal(g, q)


def test_oracle_refuses_oversized_input():
    with pytest.raises(ValueError, match="oracle limited"):
        oracle_optimal(named("petersen"))


def test_anti_ramsey_identity_on_small_graphs():
    # The threshold that forces a rainbow (q+1)-star is the q-budget
    # optimum plus one; check against the definitional enumeration.
    for name in ["star_3", "star_4", "complete_4", "path_5"]:
        g = named(name)
        try:
            direct = direct_anti_ramsey_star(g, 3)
        except PatternAbsentError:
            continue
        assert anti_ramsey_star(g, 3) == direct


def test_anti_ramsey_star_sizes_other_than_three():
    g = named("star_4")
    assert direct_anti_ramsey_star(g, 2) == anti_ramsey_star(g, 2)
    assert direct_anti_ramsey_star(g, 4) == anti_ramsey_star(g, 4)


def test_direct_anti_ramsey_requires_the_pattern():
    with pytest.raises(PatternAbsentError, match="no vertex has degree"):
        direct_anti_ramsey_star(named("path_4"), 3)
    with pytest.raises(ValueError, match="direct enumeration limited"):
        direct_anti_ramsey_star(named("petersen"), 3)


def test_anti_ramsey_budget_exhaustion_raises():
    with pytest.raises(SearchIncompleteError):
        anti_ramsey_star(named("complete_4"), 3, budget=2)
