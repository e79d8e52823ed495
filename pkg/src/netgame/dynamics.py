"""Randomized link-formation dynamics and the pairwise-stability checker.

A run starts from the null network and repeatedly samples an unordered pair
uniformly at random.  If the pair has no edge, the link is added exactly when
both endpoints strictly gain; if it has one, the link is deleted when either
endpoint strictly gains.  The process has no intrinsic stopping signal, so
runs are punctuated by exhaustive stability scans (after a window of
consecutive rejections, and at a fixed proposal cadence) and capped at
max_proposals.  Non-convergence is reported, never silently rounded up to
"stable".
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core import Engine
from .graph import Graph
from .payoff import GameConfig

RNG_ALGORITHM = "PCG64"

ADD_ACCEPTED = "add-accepted"
ADD_REJECTED = "add-rejected"
DELETE_ACCEPTED = "delete-accepted"
DELETE_REJECTED = "delete-rejected"

_SEED_MAX = 2**64 - 1


def _pairs_below(i: int, n: int) -> int:
    """Count of unordered pairs (a, b), a < b, with a < i (0-based)."""
    return i * (2 * n - i - 1) // 2


def unrank_pair(k: int, n: int) -> tuple[int, int]:
    """k-th unordered pair in lexicographic order, 0-based, 0 <= k < C(n,2).

    Inverse of k = pairs_below(i) + (j - i - 1).  The initial guess comes
    from solving the quadratic with integer sqrt; the fix-up loops absorb
    any floor error.
    """
    if not 0 <= k < n * (n - 1) // 2:
        raise ValueError(f"pair rank {k} out of range for n={n}")
    disc = (2 * n - 1) ** 2 - 8 * k
    i = (2 * n - 1 - math.isqrt(disc)) // 2
    while _pairs_below(i + 1, n) <= k:
        i += 1
    while _pairs_below(i, n) > k:
        i -= 1
    j = i + 1 + (k - _pairs_below(i, n))
    return i, j


@dataclass(frozen=True)
class DynamicsConfig:
    """Run-control knobs for the formation process.

    Any of max_proposals / stall_window / check_cadence may be left None to
    take the size-dependent defaults: 500 n^2 proposals, a stall window of
    5 C(n,2) consecutive rejections, and a forced stability check every
    10 C(n,2) proposals.
    """

    seed: int
    max_proposals: Optional[int] = None
    stall_window: Optional[int] = None
    check_cadence: Optional[int] = None

    def __post_init__(self) -> None:
        if not isinstance(self.seed, (int, np.integer)):
            raise TypeError("seed must be an integer")
        if not 0 <= int(self.seed) <= _SEED_MAX:
            raise ValueError("seed must fit in 64 unsigned bits")
        for name in ("max_proposals", "stall_window", "check_cadence"):
            v = getattr(self, name)
            if v is not None and (not isinstance(v, (int, np.integer)) or v <= 0):
                raise ValueError(f"{name} must be a positive integer")
        if (self.stall_window is not None and self.max_proposals is not None
                and self.stall_window > self.max_proposals):
            raise ValueError("stall_window must not exceed max_proposals")

    def resolve(self, n: int) -> "DynamicsConfig":
        """Fill size-dependent defaults for an n-player run."""
        pairs = n * (n - 1) // 2
        mp = self.max_proposals if self.max_proposals is not None else 500 * n * n
        sw = self.stall_window if self.stall_window is not None else max(1, 5 * pairs)
        cc = self.check_cadence if self.check_cadence is not None else max(1, 10 * pairs)
        sw = min(sw, mp)
        return DynamicsConfig(seed=int(self.seed), max_proposals=int(mp),
                              stall_window=int(sw), check_cadence=int(cc))


@dataclass(frozen=True)
class ProposalEvent:
    """One sampled pair and the decision taken on it.  Vertices are 1-based."""

    index: int
    pair: tuple[int, int]
    action: str
    deltas: tuple[float, float]

    @property
    def accepted(self) -> bool:
        return self.action in (ADD_ACCEPTED, DELETE_ACCEPTED)


@dataclass(frozen=True)
class StabilityWitness:
    """A profitable deviation: the pair, the move, and both payoff deltas."""

    pair: tuple[int, int]
    move: str  # "add" or "delete"
    deltas: tuple[float, float]


@dataclass(frozen=True)
class StabilityCertificate:
    """Verdict of the exhaustive pairwise scan.

    witness is None exactly when stable; otherwise it is the first violation
    in lexicographic pair order (each pair admits only one move type, so no
    add/delete tie-break arises within a pair).
    """

    stable: bool
    witness: Optional[StabilityWitness] = None

    def __post_init__(self) -> None:
        if self.stable and self.witness is not None:
            raise ValueError("stable certificate cannot carry a witness")
        if not self.stable and self.witness is None:
            raise ValueError("unstable certificate requires a witness")


@dataclass(frozen=True)
class SimulationTrace:
    """Full record of one run: configs, every event, final state, verdict."""

    n: int
    game: GameConfig
    dynamics: DynamicsConfig  # resolved (no None fields)
    rng_algorithm: str
    events: tuple[ProposalEvent, ...]
    final_graph: Graph
    certificate: StabilityCertificate
    converged: bool

    def __post_init__(self) -> None:
        if self.converged and not self.certificate.stable:
            raise ValueError("converged trace requires a stable certificate")

    @property
    def proposals(self) -> int:
        return len(self.events)

    @property
    def accepted(self) -> int:
        return sum(1 for e in self.events if e.accepted)


@dataclass(frozen=True)
class RunSummary:
    """Per-run aggregate view used by batch experiments and the CLI."""

    seed: int
    converged: bool
    proposals: int
    accepted: int
    avg_degree: float
    max_degree: int
    total_payoff: float
    component_sizes: tuple[int, ...]  # descending
    size_histogram: dict[int, int]  # component size -> count
    degrees: tuple[int, ...]  # per player, 1-based order
    payoffs: tuple[float, ...]  # per player, 1-based order

    @property
    def giant_fraction(self) -> float:
        n = len(self.degrees)
        return self.component_sizes[0] / n if n else 0.0


def _engine_for(g: Graph, cfg: GameConfig) -> Engine:
    if g.n != cfg.n:
        raise ValueError(f"graph has {g.n} vertices but config expects {cfg.n}")
    return Engine(g.adjacency_matrix(dtype=np.uint8), cfg.alpha,
                  cfg.rewards, cfg.costs)


def _decide(present: bool, di: float, dj: float) -> bool:
    if present:
        return di > 0.0 or dj > 0.0
    return di > 0.0 and dj > 0.0


def propose_step(g: Graph, cfg: GameConfig, rng: np.random.Generator,
                 index: int = 1) -> tuple[Graph, ProposalEvent]:
    """Sample one pair, decide the single candidate move, mutate g if accepted.

    Returns (g, event); g is the same object, updated in place on acceptance.
    One-shot convenience built on the same engine as run_to_stability; long
    runs should use run_to_stability, which keeps the engine warm.
    """
    if g.n < 2:
        raise ValueError("propose_step needs at least 2 vertices")
    eng = _engine_for(g, cfg)
    pairs = g.n * (g.n - 1) // 2
    k = int(rng.integers(0, pairs))
    i0, j0 = unrank_pair(k, g.n)
    present = eng.has_edge(i0, j0)
    di, dj = eng.pair_deltas(i0, j0)
    accept = _decide(present, di, dj)
    if accept:
        if present:
            g.remove_edge(i0 + 1, j0 + 1)
            action = DELETE_ACCEPTED
        else:
            g.add_edge(i0 + 1, j0 + 1)
            action = ADD_ACCEPTED
    else:
        action = DELETE_REJECTED if present else ADD_REJECTED
    event = ProposalEvent(index=index, pair=(i0 + 1, j0 + 1), action=action,
                          deltas=(di, dj))
    return g, event


def _certificate_from_scan(scan) -> StabilityCertificate:
    stable, i, j, move_code, di, dj = scan
    if stable:
        return StabilityCertificate(stable=True)
    move = "add" if move_code == 0 else "delete"
    witness = StabilityWitness(pair=(i + 1, j + 1), move=move, deltas=(di, dj))
    return StabilityCertificate(stable=False, witness=witness)


def is_pairwise_stable(g: Graph, cfg: GameConfig) -> StabilityCertificate:
    """Exhaustive scan over all pairs with the same strict rules as proposals.

    Scans pairs in lexicographic order; the first profitable move becomes
    the witness.
    """
    if g.n == 1:
        return StabilityCertificate(stable=True)
    eng = _engine_for(g, cfg)
    return _certificate_from_scan(eng.stability_scan())


def run_to_stability(n: int, cfg: GameConfig, dyn: DynamicsConfig) -> SimulationTrace:
    """Run the formation process from the null network to a verdict.

    Stops with converged=True as soon as an exhaustive scan finds the current
    graph pairwise stable (scans fire after stall_window consecutive
    rejections and every check_cadence proposals); stops with converged=False
    when max_proposals is reached and a final scan still finds instability.
    """
    if n != cfg.n:
        raise ValueError(f"n={n} does not match cfg.n={cfg.n}")
    if n < 1:
        raise ValueError("need at least one player")
    rdyn = dyn.resolve(n)
    g = Graph(n)

    if n == 1:
        cert = StabilityCertificate(stable=True)
        return SimulationTrace(n=n, game=cfg, dynamics=rdyn,
                               rng_algorithm=RNG_ALGORITHM, events=(),
                               final_graph=g, certificate=cert, converged=True)

    rng = np.random.Generator(np.random.PCG64(rdyn.seed))
    eng = Engine(g.adjacency_matrix(dtype=np.uint8), cfg.alpha,
                 cfg.rewards, cfg.costs)
    pairs = n * (n - 1) // 2
    events: list[ProposalEvent] = []
    rejections_in_row = 0
    since_check = 0
    certificate: Optional[StabilityCertificate] = None
    converged = False

    for step in range(1, rdyn.max_proposals + 1):
        k = int(rng.integers(0, pairs))
        i0, j0 = unrank_pair(k, n)
        present = eng.has_edge(i0, j0)
        di, dj = eng.pair_deltas(i0, j0)
        accept = _decide(present, di, dj)
        if accept:
            eng.apply_toggle(i0, j0)
            if present:
                g.remove_edge(i0 + 1, j0 + 1)
                action = DELETE_ACCEPTED
            else:
                g.add_edge(i0 + 1, j0 + 1)
                action = ADD_ACCEPTED
            rejections_in_row = 0
        else:
            action = DELETE_REJECTED if present else ADD_REJECTED
            rejections_in_row += 1
        events.append(ProposalEvent(index=step, pair=(i0 + 1, j0 + 1),
                                    action=action, deltas=(di, dj)))
        since_check += 1

        if rejections_in_row >= rdyn.stall_window or since_check >= rdyn.check_cadence:
            cert = _certificate_from_scan(eng.stability_scan())
            since_check = 0
            if cert.stable:
                certificate = cert
                converged = True
                break
            # unstable: keep going, but do not re-trigger a scan on the very
            # next rejection
            rejections_in_row = 0

    if certificate is None:
        certificate = _certificate_from_scan(eng.stability_scan())
        converged = certificate.stable

    return SimulationTrace(n=n, game=cfg, dynamics=rdyn,
                           rng_algorithm=RNG_ALGORITHM, events=tuple(events),
                           final_graph=g, certificate=certificate,
                           converged=converged)


def summarize(trace: SimulationTrace) -> RunSummary:
    """Aggregate one trace into the batch-level summary record."""
    g = trace.final_graph
    cfg = trace.game
    eng = _engine_for(g, cfg)
    payoffs = eng.payoffs()
    degrees = [g.degree(v) for v in range(1, g.n + 1)]
    comp = g.components()
    sizes = sorted(comp.sizes.values(), reverse=True)
    hist: dict[int, int] = {}
    for s in sizes:
        hist[s] = hist.get(s, 0) + 1
    return RunSummary(
        seed=trace.dynamics.seed,
        converged=trace.converged,
        proposals=trace.proposals,
        accepted=trace.accepted,
        avg_degree=float(np.mean(degrees)) if degrees else 0.0,
        max_degree=max(degrees) if degrees else 0,
        total_payoff=float(payoffs.sum()),
        component_sizes=tuple(sizes),
        size_histogram=hist,
        degrees=tuple(degrees),
        payoffs=tuple(float(p) for p in payoffs),
    )


def run_batch(n: int, cfg: GameConfig, dyn: DynamicsConfig,
              num_seeds: int) -> list[tuple[SimulationTrace, RunSummary]]:
    """Independent runs with seeds dyn.seed, dyn.seed+1, ...

    Returns (trace, summary) per seed so callers can keep full traces or
    just the aggregates.
    """
    if num_seeds < 1:
        raise ValueError("num_seeds must be positive")
    out = []
    for offset in range(num_seeds):
        d = DynamicsConfig(seed=(int(dyn.seed) + offset) % (2**64),
                           max_proposals=dyn.max_proposals,
                           stall_window=dyn.stall_window,
                           check_cadence=dyn.check_cadence)
        trace = run_to_stability(n, cfg, d)
        out.append((trace, summarize(trace)))
    return out
