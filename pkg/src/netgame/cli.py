"""netgame command-line front end.

Subcommands:
  simulate         run the formation dynamics once and write artifacts
  verify           check the closed-form centrality formulas against solves
  stability-check  exhaustive pairwise-stability verdict for a graph file
  sweep            batch runs over one parameter range, summaries to CSV

Config precedence: built-in defaults < --experiment preset or --config file
< individual flags.  --experiment and --config are mutually exclusive (a
preset is just a named config).  Exit codes: 0 success/stable, 1 usage or
config error, 2 non-convergence / unstable / verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .closed_forms import VERIFY_TOL, verify_closed_forms
from .core import backend_name
from .dynamics import (
    RNG_ALGORITHM,
    DynamicsConfig,
    SimulationTrace,
    is_pairwise_stable,
    run_to_stability,
    summarize,
)
from .centrality import scaled_component_katz
from .graph import EdgeListFormatError, Graph, read_edge_list, write_edge_list
from .payoff import GameConfig, payoffs_from_report

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_UNSTABLE = 2

ALL_FORMATS = ("edgelist", "dot", "graphml")

# Named experiment presets.  The incentivized variant gives five players a
# discounted link cost (zeta) below the population cost (delta).
PRESETS = {
    "homogeneous": {
        "n": 100, "alpha": 0.0075, "default_reward": 1.0, "default_cost": 0.25,
    },
    "incentivized": {
        "n": 100, "alpha": 0.0075, "default_reward": 1.0, "default_cost": 0.25,
        "zeta": 0.20, "incentivized_count": 5,
    },
}


class ConfigError(Exception):
    """A bad config file, bad flag value, or inconsistent combination."""


@dataclass(frozen=True)
class ResolvedRun:
    """Everything a run needs, after precedence resolution."""

    game: GameConfig
    dyn: DynamicsConfig
    out_dir: Path
    formats: tuple[str, ...]
    # the recipe the GameConfig was built from, kept for echoes and sweeps
    n: int
    alpha: float
    default_reward: float
    default_cost: float
    overrides: tuple[tuple[int, float, float], ...]
    label: str


# -- config file ----------------------------------------------------------------

_FILE_SCHEMA = {
    "n": int,
    "alpha": float,
    "default_reward": float,
    "default_cost": float,
    "seed": int,
    "max_proposals": int,
    "stall_window": int,
    "check_cadence": int,
    "out_dir": str,
    "formats": str,
}


def parse_config_file(path) -> tuple[dict, list[tuple[int, float, float]]]:
    """Flat `key = value` file; '#' starts a comment; `override` repeats.

    An override line reads `override = <player id> <reward> <cost>`.
    """
    settings: dict = {}
    overrides: list[tuple[int, float, float]] = []
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}") from None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{line_no}: expected 'key = value', got {raw.strip()!r}")
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_")
        value = value.strip()
        if key == "override":
            parts = value.split()
            if len(parts) != 3:
                raise ConfigError(f"{path}:{line_no}: override needs '<id> <reward> <cost>'")
            try:
                overrides.append((int(parts[0]), float(parts[1]), float(parts[2])))
            except ValueError:
                raise ConfigError(f"{path}:{line_no}: malformed override {value!r}") from None
            continue
        if key not in _FILE_SCHEMA:
            raise ConfigError(f"{path}:{line_no}: unknown key {key!r}")
        try:
            settings[key] = _FILE_SCHEMA[key](value)
        except ValueError:
            raise ConfigError(
                f"{path}:{line_no}: value {value!r} for {key!r} is not a valid "
                f"{_FILE_SCHEMA[key].__name__}") from None
    return settings, overrides


# -- precedence resolution --------------------------------------------------------


def _parse_id_list(text: str) -> list[int]:
    try:
        ids = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise ConfigError(f"incentivized ids {text!r} must be integers") from None
    if not ids:
        raise ConfigError("incentivized id list is empty")
    return ids


def _parse_formats(text: str) -> tuple[str, ...]:
    fmts = tuple(t.strip() for t in text.split(",") if t.strip())
    for f in fmts:
        if f not in ALL_FORMATS:
            raise ConfigError(f"unknown format {f!r}; choose from {', '.join(ALL_FORMATS)}")
    if not fmts:
        raise ConfigError("formats list is empty")
    return fmts


def build_run_config(args, n_from_graph: int | None = None) -> ResolvedRun:
    """Merge preset/file/flags into a validated run configuration."""
    if getattr(args, "experiment", None) and getattr(args, "config", None):
        raise ConfigError("--experiment and --config are mutually exclusive")

    settings: dict = {}
    overrides: list[tuple[int, float, float]] = []
    label = "custom"
    if getattr(args, "experiment", None):
        settings.update(PRESETS[args.experiment])
        label = args.experiment
    if getattr(args, "config", None):
        file_settings, file_overrides = parse_config_file(args.config)
        settings.update(file_settings)
        overrides.extend(file_overrides)

    # flag layer
    if getattr(args, "gamma", None) is not None and getattr(args, "delta", None) is not None:
        raise ConfigError("--gamma and --delta both set the default link cost; give one")
    for flag, key in (("n", "n"), ("alpha", "alpha"), ("seed", "seed"),
                      ("max_proposals", "max_proposals"),
                      ("stall_window", "stall_window"),
                      ("check_cadence", "check_cadence")):
        v = getattr(args, flag, None)
        if v is not None:
            settings[key] = v
    if getattr(args, "gamma", None) is not None:
        settings["default_cost"] = args.gamma
    if getattr(args, "delta", None) is not None:
        settings["default_cost"] = args.delta
    if getattr(args, "reward", None) is not None:
        settings["default_reward"] = args.reward

    if n_from_graph is not None:
        if "n" in settings and settings["n"] != n_from_graph:
            raise ConfigError(
                f"graph file has {n_from_graph} vertices but config says n={settings['n']}")
        settings["n"] = n_from_graph

    if "n" not in settings:
        raise ConfigError("n is required (flag --n, config file, or --experiment preset)")
    if "alpha" not in settings:
        raise ConfigError("alpha is required (flag --alpha, config file, or --experiment preset)")

    n = settings["n"]
    alpha = settings["alpha"]
    default_reward = settings.get("default_reward", 1.0)
    default_cost = settings.get("default_cost", 0.25)

    # incentive layer: a zeta gives the selected players a discounted cost
    zeta = getattr(args, "zeta", None)
    if zeta is None:
        zeta = settings.get("zeta")
    count = getattr(args, "incentivized_count", None)
    if count is None:
        count = settings.get("incentivized_count")
    ids_text = getattr(args, "incentivized_ids", None)
    if zeta is None and (count is not None or ids_text is not None):
        raise ConfigError("--incentivized-count/--incentivized-ids require a zeta "
                          "(--zeta or the incentivized preset)")
    if zeta is not None:
        if ids_text is not None:
            ids = _parse_id_list(ids_text)
        else:
            ids = list(range(1, (count if count is not None else 5) + 1))
        if len(set(ids)) != len(ids):
            raise ConfigError("incentivized ids contain duplicates")
        for i in ids:
            if not 1 <= i <= n:
                raise ConfigError(f"incentivized id {i} out of range 1..{n}")
        if zeta > default_cost:
            print(f"warning: zeta={zeta} exceeds the default link cost "
                  f"{default_cost}; the 'incentive' is a penalty", file=sys.stderr)
        overrides.extend((i, default_reward, zeta) for i in ids)

    # later layers win: keep the last override per player id
    by_id: dict[int, tuple[int, float, float]] = {}
    for triple in overrides:
        by_id[triple[0]] = triple
    final_overrides = tuple(by_id[k] for k in sorted(by_id))

    try:
        game = GameConfig.homogeneous(n, alpha, reward=default_reward,
                                      cost=default_cost)
        if final_overrides:
            game = game.with_overrides(final_overrides)
    except ValueError as e:
        raise ConfigError(str(e)) from None

    try:
        dyn = DynamicsConfig(seed=settings.get("seed", 0),
                             max_proposals=settings.get("max_proposals"),
                             stall_window=settings.get("stall_window"),
                             check_cadence=settings.get("check_cadence"))
    except (TypeError, ValueError) as e:
        raise ConfigError(str(e)) from None

    out_dir = getattr(args, "out_dir", None) or settings.get("out_dir") \
        or os.environ.get("NETGAME_OUT_DIR") or "netgame-out"
    fmt_flags = getattr(args, "format", None)
    if fmt_flags:
        formats = _parse_formats(",".join(fmt_flags))
    elif "formats" in settings:
        formats = _parse_formats(settings["formats"])
    else:
        formats = ALL_FORMATS

    return ResolvedRun(game=game, dyn=dyn, out_dir=Path(out_dir),
                       formats=formats, n=n, alpha=alpha,
                       default_reward=default_reward,
                       default_cost=default_cost,
                       overrides=final_overrides, label=label)


def rebuild_game(run: ResolvedRun, *, n=None, alpha=None, default_cost=None,
                 zeta=None) -> tuple[GameConfig, tuple[tuple[int, float, float], ...]]:
    """Re-derive a GameConfig from the recipe with one knob changed (sweeps)."""
    n = run.n if n is None else n
    alpha = run.alpha if alpha is None else alpha
    dc = run.default_cost if default_cost is None else default_cost
    overrides = run.overrides
    if zeta is not None:
        if not overrides:
            raise ConfigError("zeta sweep requires incentivized players "
                              "(use --zeta/--incentivized-count or the preset)")
        overrides = tuple((i, r, zeta) for (i, r, _c) in overrides)
    if n != run.n:
        for (i, _r, _c) in overrides:
            if i > n:
                raise ConfigError(f"override id {i} out of range for swept n={n}")
    try:
        game = GameConfig.homogeneous(n, alpha, reward=run.default_reward, cost=dc)
        if overrides:
            game = game.with_overrides(overrides)
    except ValueError as e:
        raise ConfigError(str(e)) from None
    return game, overrides


# -- artifact writers -------------------------------------------------------------


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


def config_echo(run: ResolvedRun, command: str) -> list[str]:
    """Resolved-config lines echoed into every artifact header."""
    ovr = ";".join(f"{i}:{r!r}:{c!r}" for (i, r, c) in run.overrides) or "none"
    d = run.dyn.resolve(run.n)
    return [
        f"netgame {__version__} {command} (backend={backend_name()}, rng={RNG_ALGORITHM})",
        f"preset={run.label}",
        f"n={run.n} alpha={run.alpha!r}",
        f"default_reward={run.default_reward!r} default_cost={run.default_cost!r}",
        f"overrides={ovr}",
        f"seed={d.seed} max_proposals={d.max_proposals} "
        f"stall_window={d.stall_window} check_cadence={d.check_cadence}",
    ]


def render_dot(g: Graph, echo: list[str]) -> str:
    lines = [f"// {e}" for e in echo]
    lines.append("graph netgame {")
    for v in range(1, g.n + 1):
        lines.append(f"  {v} [degree={g.degree(v)}];")
    for i, j in g.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_graphml(g: Graph, echo: list[str]) -> str:
    lines = ['<?xml version="1.0" encoding="UTF-8"?>']
    lines.append('<graphml xmlns="http://graphml.graphdrawing.org/xmlns">')
    for e in echo:
        lines.append(f"  <!-- {e} -->")
    lines.append('  <key id="degree" for="node" attr.name="degree" attr.type="int"/>')
    lines.append('  <graph id="netgame" edgedefault="undirected">')
    for v in range(1, g.n + 1):
        lines.append(f'    <node id="{v}"><data key="degree">{g.degree(v)}</data></node>')
    for i, j in g.edges():
        lines.append(f'    <edge source="{i}" target="{j}"/>')
    lines.append("  </graph>")
    lines.append("</graphml>")
    return "\n".join(lines) + "\n"


def _csv_text(echo: list[str], header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    for e in echo:
        buf.write(f"# {e}\r\n")
    w = csv.writer(buf)
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


METRICS_FIELDS = [
    "n", "alpha", "seed", "converged", "proposals", "accepted",
    "avg_degree", "max_degree", "total_payoff", "num_components",
    "giant_size", "giant_fraction", "component_sizes",
    "incentivized_count", "incentivized_mean_degree",
]


def metrics_row(run: ResolvedRun, trace: SimulationTrace, summary) -> list:
    incent = [i for (i, _r, _c) in run.overrides]
    mean_deg = (float(np.mean([summary.degrees[i - 1] for i in incent]))
                if incent else "")
    return [
        run.game.n, run.alpha, trace.dynamics.seed, trace.converged,
        summary.proposals, summary.accepted, summary.avg_degree,
        summary.max_degree, summary.total_payoff,
        len(summary.component_sizes), summary.component_sizes[0],
        summary.giant_fraction,
        ";".join(str(s) for s in summary.component_sizes),
        len(incent), mean_deg,
    ]


def write_run_artifacts(run: ResolvedRun, trace: SimulationTrace, command: str) -> Path:
    out = run.out_dir
    out.mkdir(parents=True, exist_ok=True)
    echo = config_echo(run, command)
    summary = summarize(trace)
    g = trace.final_graph

    if "edgelist" in run.formats:
        tmp = out / "graph.edgelist.tmp"
        write_edge_list(g, tmp, header_comments=echo)
        os.replace(tmp, out / "graph.edgelist")
    if "dot" in run.formats:
        _atomic_write(out / "graph.dot", render_dot(g, echo))
    if "graphml" in run.formats:
        _atomic_write(out / "graph.graphml", render_graphml(g, echo))

    # event log: one line per proposal, then a summary comment
    ev_lines = [f"# {e}" for e in echo]
    ev_lines.append("# columns: index i j action delta_i delta_j")
    for ev in trace.events:
        ev_lines.append(f"{ev.index} {ev.pair[0]} {ev.pair[1]} {ev.action} "
                        f"{ev.deltas[0]!r} {ev.deltas[1]!r}")
    ev_lines.append(f"# summary converged={trace.converged} "
                    f"proposals={summary.proposals} accepted={summary.accepted} "
                    f"avg_degree={summary.avg_degree!r} "
                    f"total_payoff={summary.total_payoff!r}")
    _atomic_write(out / "events.log", "\n".join(ev_lines) + "\n")

    _atomic_write(out / "metrics.csv",
                  _csv_text(echo, METRICS_FIELDS, [metrics_row(run, trace, summary)]))

    # per-player table from the payoff model (independent of the engine cache)
    report = scaled_component_katz(g, run.game.alpha)
    pr = payoffs_from_report(g, run.game, report)
    rows = []
    for v in range(1, g.n + 1):
        rows.append([
            v, run.game.reward_of(v), run.game.cost_of(v), g.degree(v),
            report.raw_of(v), report.scaled_of(v),
            report.components.label_of(v), pr.benefit[v - 1], pr.cost[v - 1],
            pr.payoff[v - 1],
        ])
    _atomic_write(out / "payoffs.csv",
                  _csv_text(echo,
                            ["player", "reward", "link_cost", "degree", "raw",
                             "scaled", "component", "benefit", "cost", "payoff"],
                            rows))
    return out


# -- subcommands -------------------------------------------------------------------


def cmd_simulate(args) -> int:
    run = build_run_config(args)
    trace = run_to_stability(run.game.n, run.game, run.dyn)
    out = write_run_artifacts(run, trace, "simulate")
    summary = summarize(trace)
    verdict = "converged" if trace.converged else "did not converge"
    print(f"{verdict} after {summary.proposals} proposals "
          f"({summary.accepted} accepted); avg degree {summary.avg_degree:.4f}, "
          f"total payoff {summary.total_payoff:.4f}; artifacts in {out}")
    if not trace.converged and trace.certificate.witness is not None:
        w = trace.certificate.witness
        print(f"unstable at cap: {w.move} {w.pair} "
              f"deltas=({w.deltas[0]!r}, {w.deltas[1]!r})")
    return EXIT_OK if trace.converged else EXIT_UNSTABLE


def cmd_verify(args) -> int:
    if args.n_min < 3:
        raise ConfigError("--n-min must be >= 3 (closed forms need n >= 3)")
    if args.n_max < args.n_min:
        raise ConfigError("--n-max must be >= --n-min")
    try:
        fracs = tuple(float(t) for t in args.alpha_fractions.replace(",", " ").split())
    except ValueError:
        raise ConfigError(f"bad --alpha-fractions {args.alpha_fractions!r}") from None
    if not fracs:
        raise ConfigError("--alpha-fractions is empty")
    if any(f <= 0 for f in fracs):
        raise ConfigError("alpha fractions must be positive")
    if args.tol <= 0:
        raise ConfigError("--tol must be positive")

    report = verify_closed_forms(n_values=range(args.n_min, args.n_max + 1),
                                 alpha_fractions=fracs, tol=args.tol)
    rows = [[r.form, r.n, r.alpha, r.closed_form, r.numerical, r.abs_error, r.status]
            for r in report.rows]
    out_dir = Path(args.out_dir or os.environ.get("NETGAME_OUT_DIR") or "netgame-out")
    out_dir.mkdir(parents=True, exist_ok=True)
    echo = [f"netgame {__version__} verify (tol={args.tol!r})",
            f"n={args.n_min}..{args.n_max} alpha_fractions={','.join(map(str, fracs))}"]
    _atomic_write(out_dir / "verification.csv",
                  _csv_text(echo,
                            ["form", "n", "alpha", "closed_form", "numerical",
                             "abs_error", "status"], rows))

    by_status: dict[str, int] = {}
    for r in report.rows:
        by_status[r.status] = by_status.get(r.status, 0) + 1
    forms = sorted({r.form for r in report.rows if r.status in ("pass", "fail")})
    for form in forms:
        print(f"{form}: max abs error {report.max_error(form):.3e}")
    print(f"rows: {by_status.get('pass', 0)} pass, {by_status.get('fail', 0)} fail, "
          f"{by_status.get('skipped', 0)} skipped, {by_status.get('audit', 0)} audit; "
          f"report in {out_dir / 'verification.csv'}")
    return EXIT_OK if report.all_pass else EXIT_UNSTABLE


def cmd_stability_check(args) -> int:
    g = read_edge_list(args.graph)
    run = build_run_config(args, n_from_graph=g.n)
    cert = is_pairwise_stable(g, run.game)
    if cert.stable:
        print(f"stable: no profitable single-link move exists ({g.n} vertices, "
              f"{g.num_edges()} edges)")
        return EXIT_OK
    w = cert.witness
    print(f"unstable: {w.move} {w.pair} is profitable, "
          f"deltas=({w.deltas[0]!r}, {w.deltas[1]!r})")
    return EXIT_UNSTABLE


SWEEP_FIELDS = [
    "param", "value", "seed", "n", "alpha", "converged", "proposals",
    "accepted", "avg_degree", "max_degree", "total_payoff", "giant_fraction",
    "incentivized_count", "incentivized_mean_degree", "incentivized_mean_payoff",
]


def cmd_sweep(args) -> int:
    run = build_run_config(args)
    try:
        values = [float(t) for t in args.values.replace(",", " ").split()]
    except ValueError:
        raise ConfigError(f"bad --values {args.values!r}") from None
    if not values:
        raise ConfigError("--values is empty")
    if args.seeds < 1:
        raise ConfigError("--seeds must be >= 1")

    rows = []
    for value in values:
        if args.param == "alpha":
            game, overrides = rebuild_game(run, alpha=value)
        elif args.param in ("gamma", "delta"):
            game, overrides = rebuild_game(run, default_cost=value)
        elif args.param == "zeta":
            game, overrides = rebuild_game(run, zeta=value)
        else:  # n
            if value != int(value) or int(value) < 1:
                raise ConfigError(f"swept n must be a positive integer, got {value}")
            game, overrides = rebuild_game(run, n=int(value))
        incent = [i for (i, _r, _c) in overrides]
        for s in range(args.seeds):
            dyn = DynamicsConfig(seed=run.dyn.seed + s,
                                 max_proposals=run.dyn.max_proposals,
                                 stall_window=run.dyn.stall_window,
                                 check_cadence=run.dyn.check_cadence)
            trace = run_to_stability(game.n, game, dyn)
            summary = summarize(trace)
            mean_deg = (float(np.mean([summary.degrees[i - 1] for i in incent]))
                        if incent else "")
            mean_pay = (float(np.mean([summary.payoffs[i - 1] for i in incent]))
                        if incent else "")
            rows.append([args.param, value, dyn.seed, game.n, game.alpha,
                         trace.converged, summary.proposals, summary.accepted,
                         summary.avg_degree, summary.max_degree,
                         summary.total_payoff, summary.giant_fraction,
                         len(incent), mean_deg, mean_pay])

    out_dir = run.out_dir
    out_dir.mkdir(parents=True, exist_ok=True)
    echo = config_echo(run, "sweep")
    echo.append(f"sweep param={args.param} values={','.join(map(str, values))} "
                f"seeds={args.seeds}")
    _atomic_write(out_dir / "sweep.csv", _csv_text(echo, SWEEP_FIELDS, rows))
    converged = sum(1 for r in rows if r[5])
    print(f"wrote {len(rows)} rows to {out_dir / 'sweep.csv'} "
          f"({converged}/{len(rows)} runs converged)")
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------------


def _add_game_flags(sp, dynamics: bool = True) -> None:
    sp.add_argument("--config", help="flat key=value config file")
    sp.add_argument("--experiment", choices=sorted(PRESETS),
                    help="named preset (mutually exclusive with --config)")
    sp.add_argument("--n", type=int, help="number of players")
    sp.add_argument("--alpha", type=float, help="centrality attenuation factor")
    sp.add_argument("--gamma", type=float,
                    help="homogeneous link cost (sets the default cost)")
    sp.add_argument("--delta", type=float,
                    help="default link cost when some players are incentivized")
    sp.add_argument("--zeta", type=float,
                    help="discounted link cost for the incentivized players")
    sp.add_argument("--reward", type=float, help="default reward scale (R)")
    sp.add_argument("--incentivized-count", type=int,
                    help="how many players get the zeta cost (ids 1..count)")
    sp.add_argument("--incentivized-ids",
                    help="explicit incentivized player ids, e.g. '1,2,7'")
    sp.add_argument("--out-dir", help="artifact directory "
                    "(default $NETGAME_OUT_DIR or ./netgame-out)")
    if dynamics:
        sp.add_argument("--seed", type=int, help="RNG seed (default 0)")
        sp.add_argument("--max-proposals", type=int,
                        help="proposal cap (default 500 n^2)")
        sp.add_argument("--stall-window", type=int,
                        help="consecutive rejections before a stability check "
                        "(default 5 C(n,2))")
        sp.add_argument("--check-cadence", type=int,
                        help="forced stability-check interval (default 10 C(n,2))")
        sp.add_argument("--format", action="append", choices=ALL_FORMATS,
                        help="graph export format(s); repeatable (default all)")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="netgame",
        description="Network-formation game: Katz-centrality payoffs, "
                    "pairwise stability, randomized link dynamics.")
    p.add_argument("--version", action="version", version=f"netgame {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("simulate", help="run the formation dynamics once")
    _add_game_flags(sp)
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("verify", help="closed forms vs numerical centrality")
    sp.add_argument("--n-min", type=int, default=3)
    sp.add_argument("--n-max", type=int, default=30)
    sp.add_argument("--alpha-fractions", default="0.25,0.5,0.75",
                    help="alpha = fraction/(n-1) per grid point")
    sp.add_argument("--tol", type=float, default=VERIFY_TOL)
    sp.add_argument("--out-dir")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("stability-check",
                        help="exhaustive pairwise-stability verdict for a graph file")
    sp.add_argument("graph", help="edge-list file ('n <count>' header, 'i j' lines)")
    _add_game_flags(sp, dynamics=False)
    sp.set_defaults(func=cmd_stability_check)

    sp = sub.add_parser("sweep", help="batch runs over one parameter range")
    _add_game_flags(sp)
    sp.add_argument("--param", required=True,
                    choices=("alpha", "gamma", "delta", "zeta", "n"))
    sp.add_argument("--values", required=True,
                    help="comma-separated parameter values")
    sp.add_argument("--seeds", type=int, default=1,
                    help="seeds per parameter point (seed, seed+1, ...)")
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except EdgeListFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
