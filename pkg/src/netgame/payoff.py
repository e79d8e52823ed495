"""The game's utility: centrality benefit minus linear link cost.

A player's benefit is reward * (component size - 1) * scaled centrality, so
isolates earn nothing even though their scaled score is 1 by convention.
Cost is the per-player link price times degree.  Marginal payoffs of a
single-link change are computed by evaluating both graphs in full; a
rank-one update fast path could sit behind the same contract later.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from netgame.centrality import CentralityReport, scaled_component_katz
from netgame.graph import Graph


@dataclass(frozen=True, eq=False)
class GameConfig:
    """Player count, attenuation, and per-player rewards and link costs.

    alpha * (n - 1) < 1 is required so centrality stays defined on every
    graph the game can reach (the complete graph has spectral radius n - 1).
    """

    n: int
    alpha: float
    rewards: np.ndarray
    costs: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"player count must be >= 1, got {self.n}")
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must be in (0,1), got {self.alpha}")
        if self.alpha * (self.n - 1) >= 1.0:
            raise ValueError(
                f"alpha={self.alpha} invalid for n={self.n}: "
                f"alpha*(n-1) must be < 1 so all reachable graphs stay valid")
        rewards = np.ascontiguousarray(self.rewards, dtype=np.float64)
        costs = np.ascontiguousarray(self.costs, dtype=np.float64)
        if rewards.shape != (self.n,) or costs.shape != (self.n,):
            raise ValueError("rewards and costs must have one entry per player")
        if np.any(rewards <= 0.0):
            raise ValueError("all rewards must be strictly positive")
        if np.any(costs <= 0.0):
            raise ValueError("all link costs must be strictly positive")
        object.__setattr__(self, "rewards", rewards)
        object.__setattr__(self, "costs", costs)

    @classmethod
    def homogeneous(cls, n: int, alpha: float, reward: float = 1.0,
                    cost: float = 0.25) -> "GameConfig":
        return cls(n=n, alpha=alpha,
                   rewards=np.full(n, float(reward)),
                   costs=np.full(n, float(cost)))

    def with_overrides(self, overrides) -> "GameConfig":
        """New config with (player id, reward, cost) triples applied."""
        rewards = self.rewards.copy()
        costs = self.costs.copy()
        seen = set()
        for pid, reward, cost in overrides:
            if not 1 <= pid <= self.n:
                raise ValueError(f"override player id {pid} out of range 1..{self.n}")
            if pid in seen:
                raise ValueError(f"duplicate override for player {pid}")
            seen.add(pid)
            rewards[pid - 1] = float(reward)
            costs[pid - 1] = float(cost)
        return GameConfig(n=self.n, alpha=self.alpha, rewards=rewards, costs=costs)

    def reward_of(self, i: int) -> float:
        return float(self.rewards[i - 1])

    def cost_of(self, i: int) -> float:
        return float(self.costs[i - 1])


@dataclass(frozen=True, eq=False)
class PayoffReport:
    """Per-player benefit, cost, and payoff, plus the network total."""

    benefit: np.ndarray
    cost: np.ndarray
    payoff: np.ndarray
    total: float

    def payoff_of(self, i: int) -> float:
        return float(self.payoff[i - 1])


def _check_match(g: Graph, cfg: GameConfig):
    if g.n != cfg.n:
        raise ValueError(f"graph has {g.n} vertices but config is for {cfg.n} players")


def benefit(g: Graph, cfg: GameConfig, report: CentralityReport, i: int) -> float:
    """reward_i * (component size - 1) * scaled centrality of i."""
    _check_match(g, cfg)
    if report.n != g.n:
        raise ValueError(f"report covers {report.n} vertices but graph has {g.n}")
    p = report.components.size_of(i) - 1
    return cfg.reward_of(i) * p * report.scaled_of(i)


def cost(g: Graph, cfg: GameConfig, i: int) -> float:
    """cost_i per adjacent link: cost_i * degree(i)."""
    _check_match(g, cfg)
    return cfg.cost_of(i) * g.degree(i)


def payoffs_from_report(g: Graph, cfg: GameConfig, report: CentralityReport) -> PayoffReport:
    sizes = np.array([report.components.sizes[cid] for cid in report.components.labels],
                     dtype=np.float64)
    ben = cfg.rewards * (sizes - 1.0) * report.scaled
    cst = cfg.costs * g.degrees()
    pay = ben - cst
    return PayoffReport(benefit=ben, cost=cst, payoff=pay, total=float(pay.sum()))


def payoff_vector(g: Graph, cfg: GameConfig) -> PayoffReport:
    """Per-player benefit, cost and payoff on g."""
    _check_match(g, cfg)
    report = scaled_component_katz(g, cfg.alpha)
    return payoffs_from_report(g, cfg, report)


def marginal_add(g: Graph, cfg: GameConfig, i: int, j: int) -> tuple[float, float]:
    """Payoff deltas for i and j between g + (i,j) and g.

    The pair must currently be unlinked; Graph.add_edge raises otherwise.
    """
    _check_match(g, cfg)
    before = payoff_vector(g, cfg)
    trial = g.copy()
    trial.add_edge(i, j)
    after = payoff_vector(trial, cfg)
    return (after.payoff_of(i) - before.payoff_of(i),
            after.payoff_of(j) - before.payoff_of(j))


def marginal_delete(g: Graph, cfg: GameConfig, i: int, j: int) -> tuple[float, float]:
    """Payoff deltas for i and j between g - (i,j) and g."""
    _check_match(g, cfg)
    before = payoff_vector(g, cfg)
    trial = g.copy()
    trial.remove_edge(i, j)
    after = payoff_vector(trial, cfg)
    return (after.payoff_of(i) - before.payoff_of(i),
            after.payoff_of(j) - before.payoff_of(j))
