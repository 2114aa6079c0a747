"""Benchmark report over the vertex-cover game family.

Builds a small sweep of cover games (complete graphs plus seeded random
graphs), times certificate verification on both condition flavours and
the solver plus the minimal positional strategy on the safety flavour,
then writes one CSV with all rows next to two PNG figures: minimal
strategy size against the closed-form prediction from the optimal
cover, and wall time against arena size.
"""

from __future__ import annotations

import csv
import itertools
import random
import time
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .analysis import check_strategy_winning, solve
from .arena import Muller, Safety, arena_size
from .hardness import (
    Hypergraph,
    build_vc_game,
    cover_to_strategy,
    size_formula,
    vc_brute_force,
)
from .minimize import min_strategy_size
from .strategy import StrategyKind


@dataclass(frozen=True)
class _Row:
    name: str
    vertices: int
    edges: int
    flavour: str
    arena: int
    cover_size: int
    formula_size: int
    measured_size: int
    solve_ms: float
    check_ms: float


def _instances(seed: int, max_vertices: int) -> list[tuple[str, Hypergraph]]:
    rng = random.Random(seed)
    out = []
    for n in range(2, max_vertices + 1):
        pairs = [frozenset(p) for p in itertools.combinations(range(1, n + 1), 2)]
        out.append((f"complete-{n}", Hypergraph(n, pairs, 2)))
        if len(pairs) > n:
            sample = rng.sample(pairs, n)
            out.append((f"random-{n}", Hypergraph(n, sample, 2)))
    return out


def _measure(name: str, h: Hypergraph) -> list[_Row]:
    cover = vc_brute_force(h)
    j = len(cover.cover)
    m = len(h.edges)
    witness_strategy = cover_to_strategy(h, cover)
    rows = []
    for flavour, label in ((Safety, "safety"), (Muller, "muller")):
        game = build_vc_game(h, flavour)
        t0 = time.perf_counter()
        assert check_strategy_winning(game, witness_strategy) is True
        check_ms = (time.perf_counter() - t0) * 1000.0
        if label == "safety":
            t0 = time.perf_counter()
            sol = solve(game)
            solve_ms = (time.perf_counter() - t0) * 1000.0
            assert sol.winner == 0
            measured = min_strategy_size(game, StrategyKind.POSITIONAL)
        else:
            solve_ms = -1.0
            measured = -1
        rows.append(_Row(
            name=name,
            vertices=h.vertex_count,
            edges=m,
            flavour=label,
            arena=arena_size(game.arena),
            cover_size=j,
            formula_size=size_formula(m, j),
            measured_size=measured,
            solve_ms=solve_ms,
            check_ms=check_ms,
        ))
    return rows


def _write_csv(path: Path, rows: list[_Row]) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([
            "name", "vertices", "edges", "flavour", "arena_size",
            "cover_size", "formula_size", "measured_size",
            "solve_ms", "check_ms",
        ])
        for r in rows:
            writer.writerow([
                r.name, r.vertices, r.edges, r.flavour, r.arena,
                r.cover_size, r.formula_size, r.measured_size,
                f"{r.solve_ms:.3f}", f"{r.check_ms:.3f}",
            ])


def _figure_sizes(path: Path, rows: list[_Row]) -> None:
    pts = [(r.formula_size, r.measured_size, r.name)
           for r in rows if r.flavour == "safety"]
    fig, ax = plt.subplots(figsize=(6, 5))
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    top = max(xs + ys + [1])
    ax.plot([0, top + 1], [0, top + 1], linestyle="--", linewidth=1,
            color="grey", label="prediction")
    ax.scatter(xs, ys, zorder=3)
    for x, y, name in pts:
        ax.annotate(name, (x, y), textcoords="offset points",
                    xytext=(4, 4), fontsize=8)
    ax.set_xlabel("predicted size from the optimal cover")
    ax.set_ylabel("measured minimal strategy size")
    ax.set_title("cover games: minimal strategies match the formula")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _figure_times(path: Path, rows: list[_Row]) -> None:
    fig, ax = plt.subplots(figsize=(6, 5))
    for label, marker in (("safety", "o"), ("muller", "s")):
        series = sorted(
            (r.arena, r.check_ms) for r in rows if r.flavour == label
        )
        ax.plot([a for a, _ in series], [t for _, t in series],
                marker=marker, label=f"check, {label}")
    solve_series = sorted(
        (r.arena, r.solve_ms) for r in rows if r.flavour == "safety"
    )
    ax.plot([a for a, _ in solve_series], [t for _, t in solve_series],
            marker="^", label="solve, safety")
    ax.set_xlabel("arena size")
    ax.set_ylabel("wall time [ms]")
    ax.set_yscale("log")
    ax.set_title("cover games: verification and solving wall time")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_report(outdir: Path, seed: int = 0, max_vertices: int = 5) -> list[Path]:
    """Run the sweep and write CSV plus figures into ``outdir``."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    rows: list[_Row] = []
    for name, h in _instances(seed, max_vertices):
        rows.extend(_measure(name, h))
    csv_path = outdir / "vc_benchmark.csv"
    fig_sizes = outdir / "size_vs_formula.png"
    fig_times = outdir / "solve_time.png"
    _write_csv(csv_path, rows)
    _figure_sizes(fig_sizes, rows)
    _figure_times(fig_times, rows)
    return [csv_path, fig_sizes, fig_times]
