"""Payoff model: config validation, benefits/costs, and marginal moves."""
import numpy as np
import pytest

from netgame.graph import (
    EdgeAbsentError,
    EdgeExistsError,
    Graph,
    make_complete,
    make_nearly_complete,
    make_star,
)
from netgame.payoff import (
    GameConfig,
    marginal_add,
    marginal_delete,
    payoff_vector,
)
from oracles import oracle_payoffs
from test_graph import random_graph


def test_config_validation():
    cfg = GameConfig.homogeneous(4, 0.2, reward=2.0, cost=0.3)
    assert cfg.reward_of(1) == 2.0 and cfg.cost_of(4) == 0.3
    with pytest.raises(ValueError):
        GameConfig.homogeneous(0, 0.2)
    with pytest.raises(ValueError):
        GameConfig.homogeneous(4, 0.0)
    with pytest.raises(ValueError):
        GameConfig.homogeneous(4, 1.0)
    # alpha must stay valid on the worst-case (complete) graph
    with pytest.raises(ValueError):
        GameConfig.homogeneous(5, 0.25)
    with pytest.raises(ValueError):
        GameConfig.homogeneous(4, 0.2, cost=0.0)
    with pytest.raises(ValueError):
        GameConfig.homogeneous(4, 0.2, reward=-1.0)


def test_config_overrides():
    cfg = GameConfig.homogeneous(5, 0.1, cost=0.25)
    inc = cfg.with_overrides([(2, 1.0, 0.2), (5, 3.0, 0.1)])
    assert inc.cost_of(2) == 0.2 and inc.reward_of(5) == 3.0
    assert inc.cost_of(1) == 0.25  # untouched
    assert cfg.cost_of(2) == 0.25  # original unchanged
    with pytest.raises(ValueError):
        cfg.with_overrides([(0, 1.0, 0.2)])
    with pytest.raises(ValueError):
        cfg.with_overrides([(6, 1.0, 0.2)])
    with pytest.raises(ValueError):
        cfg.with_overrides([(2, 1.0, 0.2), (2, 1.0, 0.3)])


def test_isolates_earn_exactly_zero():
    g = Graph(3)
    g.add_edge(1, 2)
    cfg = GameConfig.homogeneous(3, 0.1, cost=0.4)
    rep = payoff_vector(g, cfg)
    assert rep.payoff[2] == 0.0


def test_pair_payoffs_hand_values():
    # linked pair: each earns 1 * 1 * 0.5 - gamma
    g = Graph(2)
    g.add_edge(1, 2)
    rep = payoff_vector(g, GameConfig.homogeneous(2, 0.1, cost=0.3))
    assert rep.payoff_of(1) == pytest.approx(0.2, abs=1e-14)
    assert rep.total == pytest.approx(0.4, abs=1e-14)


def test_marginal_add_pair_examples():
    empty = Graph(2)
    d = marginal_add(empty, GameConfig.homogeneous(2, 0.1, cost=0.3), 1, 2)
    assert d == (pytest.approx(0.2, abs=1e-14), pytest.approx(0.2, abs=1e-14))
    d = marginal_add(empty, GameConfig.homogeneous(2, 0.1, cost=0.6), 1, 2)
    assert d == (pytest.approx(-0.1, abs=1e-14), pytest.approx(-0.1, abs=1e-14))


def test_marginal_delete_complete_graph_hand_values():
    # K_5, alpha=0.1: severed scaled value is 1.2/7, so the mover's delta is
    # gamma - 4*(1/5 - 1.2/7) = gamma - 4/35
    k5 = make_complete(5)
    d = marginal_delete(k5, GameConfig.homogeneous(5, 0.1, cost=0.1), 1, 2)
    assert d[0] == pytest.approx(0.1 - 4 / 35, abs=1e-13)
    assert d[1] == pytest.approx(d[0], abs=1e-14)
    d = marginal_delete(k5, GameConfig.homogeneous(5, 0.1, cost=0.12), 1, 2)
    assert d[0] == pytest.approx(0.12 - 4 / 35, abs=1e-13)
    assert d[0] > 0  # above the stability threshold: deletion profitable


def test_marginal_star_leaf_link_hand_value():
    # S_5, alpha=0.1, leaf cost 0.3: linking two leaves changes each leaf's
    # payoff by 4*(K_plus - 0.14) - 0.3 with K_plus = 2.38/11.5
    s5 = make_star(5)
    cfg = GameConfig.homogeneous(5, 0.1, cost=0.3)
    d = marginal_add(s5, cfg, 2, 3)
    want = 4 * (2.38 / 11.5 - 0.14) - 0.3
    assert d[0] == pytest.approx(want, abs=1e-13)
    assert d[1] == pytest.approx(want, abs=1e-13)
    assert d[0] < 0  # leaf-leaf link unprofitable inside the stable window


def test_marginal_errors():
    g = make_complete(3)
    cfg = GameConfig.homogeneous(3, 0.1)
    with pytest.raises(EdgeExistsError):
        marginal_add(g, cfg, 1, 2)
    with pytest.raises(EdgeAbsentError):
        marginal_delete(Graph(3), cfg, 1, 2)
    with pytest.raises(ValueError):
        marginal_add(Graph(3), cfg, 2, 2)


def test_add_and_delete_are_inverse():
    rng = np.random.default_rng(17)
    for _ in range(15):
        n = int(rng.integers(2, 10))
        g = random_graph(n, 0.4, rng)
        cfg = GameConfig.homogeneous(n, 0.5 / max(n - 1, 1), cost=0.2)
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                if g.has_edge(i, j):
                    h = g.copy()
                    h.remove_edge(i, j)
                    dd = marginal_delete(g, cfg, i, j)
                    da = marginal_add(h, cfg, i, j)
                    assert da[0] == pytest.approx(-dd[0], abs=1e-13)
                    assert da[1] == pytest.approx(-dd[1], abs=1e-13)


def test_payoff_vector_matches_oracle():
    rng = np.random.default_rng(31)
    for _ in range(25):
        n = int(rng.integers(2, 14))
        g = random_graph(n, 0.3, rng)
        alpha = 0.7 / max(n - 1, 1)
        rewards = rng.random(n) * 2 + 0.5
        costs = rng.random(n) * 0.5 + 0.05
        cfg = GameConfig(n=n, alpha=alpha, rewards=rewards, costs=costs)
        rep = payoff_vector(g, cfg)
        want = oracle_payoffs(g.adjacency_matrix(), alpha, rewards, costs)
        assert np.allclose(rep.payoff, want, atol=1e-11)
        assert rep.total == pytest.approx(float(want.sum()), abs=1e-10)
        assert np.allclose(rep.benefit - rep.cost, rep.payoff, atol=1e-14)


def test_mismatched_graph_and_config_rejected():
    g = make_nearly_complete(4)
    cfg = GameConfig.homogeneous(5, 0.1)
    with pytest.raises(ValueError):
        payoff_vector(g, cfg)
