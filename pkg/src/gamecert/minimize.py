"""Exact and approximate minimization of winning strategies.

Finding a smallest winning strategy is a guess-and-verify problem; here
the guess is a deterministic enumeration of canonical candidates.  A
candidate is grown position by position in breadth-first discovery order,
so reachability never has to be guessed: whatever the partial choices can
reach is scheduled for a decision, and the finished candidate's size is
exactly the number of decisions taken.  Every reachable-closed strategy
shows up exactly once.  The searches prune a branch as soon as its
discovery count reaches the best size already verified, which keeps the
exact search usable on the hardness-family games.

The approximation scheme has two phases: a seeded greedy pass deletes
player-0 edges while the game stays won, giving a winning strategy of
some size n; then the exact search runs only up to ceil_log(c, n).
Success there is outright optimal, and otherwise the greedy strategy is
within c to the power of the optimal size.

The same candidate enumeration doubles as a solver-independent oracle:
:func:`enumeration_winner` decides the winner of small games by trying
every canonical strategy of both players at classical memory bounds.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial
from typing import Iterator, Optional

from .arena import (
    Arena,
    Buechi,
    CoBuechi,
    Game,
    GeneralizedBuechi,
    Muller,
    Parity,
    Rabin,
    Safety,
    Streett,
)
from .analysis import check_strategy_winning, player1_strategy_wins, solve, _winner_only
from .certificates import ceil_log
from .errors import PlayerZeroLoses, SizeLimit
from .strategy import (
    FiniteMemoryStrategy,
    PositionalStrategy,
    StandAloneStrategy,
    Strategy,
    StrategyKind,
    strategy_size,
)

DEFAULT_BUDGET = 10_000_000
_UNCAPPED = 1 << 60


def _avail(game: Game, player: int, pos: int) -> list[int]:
    a = game.arena
    return sorted(a.available0(pos) if player == 0 else a.available1(pos))


def _entries(game: Game, player: int) -> list[int]:
    a = game.arena
    if player == 0:
        return [a.init]
    return sorted({a.e0[(a.init, act)] for act in a.available0(a.init)})


def _round_targets(game: Game, player: int, pos: int, act: int) -> list[int]:
    """Own positions one round after taking act at pos, opponent free."""
    a = game.arena
    if player == 0:
        mid = a.e0[(pos, act)]
        return sorted({a.e1[(mid, b)] for b in a.available1(mid)})
    mid = a.e1[(pos, act)]
    return sorted({a.e0[(mid, c)] for c in a.available0(mid)})


# ---------------------------------------------------------------------------
# canonical candidate enumeration
#
# Each generator takes a mutable one-element size cap; a caller may lower
# it between yields and branches whose discovery count reaches the cap
# are abandoned.  With the default cap the enumeration is exhaustive.


def positional_candidates(game: Game, player: int,
                          cap: Optional[list[int]] = None) -> Iterator[PositionalStrategy]:
    cap = cap if cap is not None else [_UNCAPPED]
    order: list[int] = []
    seen: set[int] = set()
    choice: dict[int, int] = {}

    def discover(pos: int) -> int:
        count = 0
        if pos not in seen:
            seen.add(pos)
            order.append(pos)
            count = 1
        return count

    def grow(cursor: int) -> Iterator[PositionalStrategy]:
        if cursor == len(order):
            yield PositionalStrategy(player, dict(choice))
            return
        pos = order[cursor]
        for act in _avail(game, player, pos):
            targets = _round_targets(game, player, pos, act)
            if len(seen) + sum(1 for t in targets if t not in seen) > cap[0]:
                continue
            choice[pos] = act
            added = 0
            for t in targets:
                added += discover(t)
            yield from grow(cursor + 1)
            del choice[pos]
            for _ in range(added):
                seen.discard(order.pop())

    for e in _entries(game, player):
        discover(e)
    if len(seen) <= cap[0]:
        yield from grow(0)


def memory_candidates(game: Game, player: int, max_memory: int,
                      cap: Optional[list[int]] = None) -> Iterator[FiniteMemoryStrategy]:
    """Finite-memory candidates with first-use memory naming.

    Memory 0 is the initial memory; a move decision may update to any
    already-used memory or open the next fresh one, so every machine
    shape appears once up to renaming.  The cap bounds the number of
    (memory, position) configurations, which is the strategy size.
    """
    cap = cap if cap is not None else [_UNCAPPED]
    a = game.arena
    order: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    move: dict[tuple[int, int], int] = {}
    update: dict[tuple[int, int], int] = {}
    used = [1]

    def discover(cfg: tuple[int, int]) -> int:
        if cfg not in seen:
            seen.add(cfg)
            order.append(cfg)
            return 1
        return 0

    def grow(cursor: int) -> Iterator[FiniteMemoryStrategy]:
        if cursor == len(order):
            if player == 0:
                yield FiniteMemoryStrategy(0, used[0], 0, dict(move), dict(update))
            else:
                init_map = {v: 0 for v in range(a.v1_count)}
                yield FiniteMemoryStrategy(1, used[0], init_map, dict(move), dict(update))
            return
        m, pos = order[cursor]
        for act in _avail(game, player, pos):
            targets = _round_targets(game, player, pos, act)
            top = used[0] + 1 if used[0] < max_memory else used[0]
            for m2 in range(top):
                fresh = m2 == used[0]
                new = sum(1 for t in targets if (m2, t) not in seen)
                if len(seen) + new > cap[0]:
                    continue
                move[(m, pos)] = act
                update[(m, pos)] = m2
                if fresh:
                    used[0] += 1
                added = 0
                for t in targets:
                    added += discover((m2, t))
                yield from grow(cursor + 1)
                for _ in range(added):
                    seen.discard(order.pop())
                if fresh:
                    used[0] -= 1
                del move[(m, pos)]
                del update[(m, pos)]

    for e in _entries(game, player):
        discover((0, e))
    if len(seen) <= cap[0]:
        yield from grow(0)


def moore_candidates(game: Game, max_states: int,
                     cap: Optional[list[int]] = None) -> Iterator[StandAloneStrategy]:
    """Stand-alone Moore machines with first-use state naming.

    Labels range over all player-0 actions and transitions are total over
    all player-1 actions; the machine never sees the arena, so candidates
    are enumerated purely structurally.  States are decided in discovery
    order, label first, then each transition, where a transition may
    target any known state or open the next fresh one.
    """
    cap = cap if cap is not None else [_UNCAPPED]
    n0 = len(game.arena.actions0)
    n1 = len(game.arena.actions1)
    labels: list[int] = []
    trans: list[list[int]] = []

    def decide_label(q: int) -> Iterator[StandAloneStrategy]:
        if q == len(labels):
            yield StandAloneStrategy(
                len(labels), 0,
                tuple(labels),
                tuple(tuple(row) for row in trans),
            )
            return
        for lab in range(n0):
            labels[q] = lab
            yield from decide_slot(q, 0)

    def decide_slot(q: int, slot: int) -> Iterator[StandAloneStrategy]:
        if slot == n1:
            yield from decide_label(q + 1)
            return
        known = len(labels)
        top = known + 1 if known < min(max_states, cap[0]) else known
        for t in range(top):
            fresh = t == known
            if fresh:
                labels.append(0)
                trans.append([0] * n1)
            trans[q][slot] = t
            yield from decide_slot(q, slot + 1)
            if fresh:
                labels.pop()
                trans.pop()

    if min(max_states, cap[0]) >= 1:
        labels.append(0)
        trans.append([0] * n1)
        yield from decide_label(0)


# ---------------------------------------------------------------------------
# search


def _type_cap(game: Game, kind: StrategyKind) -> int:
    n = game.arena.v0_count
    cond = game.condition
    if kind is StrategyKind.POSITIONAL:
        return n
    if isinstance(cond, GeneralizedBuechi):
        return n * len(cond.sets)
    if isinstance(cond, (Streett, Rabin)):
        return n * max(2, factorial(len(cond.pairs)))
    if isinstance(cond, Muller):
        return n * factorial(n)
    return n


def _candidate_stream(game: Game, kind: StrategyKind, size_cap: list[int]):
    if kind is StrategyKind.POSITIONAL:
        return positional_candidates(game, 0, size_cap)
    if kind is StrategyKind.FINITE_MEMORY:
        return memory_candidates(game, 0, size_cap[0], size_cap)
    if kind is StrategyKind.STAND_ALONE:
        return moore_candidates(game, size_cap[0], size_cap)
    raise TypeError(f"not a strategy kind: {kind!r}")


def _search(game: Game, kind: StrategyKind, bound: int,
            budget: int) -> Optional[tuple[int, Strategy]]:
    """Least-size winning candidate of the kind within the bound.

    Candidates appear in canonical order, so among equal-size winners the
    canonically first is kept, matching an increasing-size ladder.  The
    budget counts verification calls.
    """
    cap = [bound]
    best: Optional[tuple[int, Strategy]] = None
    checks = 0
    for cand in _candidate_stream(game, kind, cap):
        size = strategy_size(game, cand)
        if best is not None and size >= best[0]:
            continue
        checks += 1
        if checks > budget:
            raise SizeLimit("strategy search exceeded its verification budget")
        if check_strategy_winning(game, cand) is True:
            best = (size, cand)
            cap[0] = size - 1 if size > 1 else 0
            if size == 1:
                break
    return best


def min_strategy_exact(game: Game, kind: StrategyKind, bound: int,
                       budget: int = DEFAULT_BUDGET) -> Optional[Strategy]:
    """A smallest winning player-0 strategy of the kind, within the bound.

    None when no strategy of the kind and size fits the bound, whether
    because player 0 loses or because the bound is too small.
    """
    if bound < 1:
        raise ValueError("the bound must be at least 1")
    found = _search(game, kind, bound, budget)
    return None if found is None else found[1]


def min_strategy_size(game: Game, kind: StrategyKind,
                      budget: int = DEFAULT_BUDGET) -> Optional[int]:
    """The least size of a winning player-0 strategy of the kind.

    Searches up to the classical sufficiency cap for the condition type.
    Raises PlayerZeroLoses when the game itself is lost; returns None in
    the remaining corner where player 0 wins but not within this kind's
    cap (a positional request on a game that needs memory).
    """
    found = _search(game, kind, _type_cap(game, kind), budget)
    if found is not None:
        return found[0]
    if _winner_only(game) != 0:
        raise PlayerZeroLoses("player 1 wins this game")
    return None


def _min_with_strategy(game: Game, kind: StrategyKind,
                       budget: int = DEFAULT_BUDGET) -> Optional[tuple[int, Strategy]]:
    return _search(game, kind, _type_cap(game, kind), budget)


# ---------------------------------------------------------------------------
# greedy and approximate


def initial_strategy(game: Game, seed: int = 0) -> Strategy:
    """A winning strategy by seeded greedy edge deletion.

    Player-0 edges are visited in a seeded-random order; each is deleted
    when the game stays won without it.  Rejections are permanent: an
    edge whose deletion loses in some intermediate arena also loses in
    every smaller one.  The surviving arena is then solved for its
    strategy, which for positional condition types has one edge per
    reachable position.
    """
    if _winner_only(game) != 0:
        raise PlayerZeroLoses("player 1 wins this game")
    a = game.arena
    keys = sorted(a.e0)
    random.Random(seed).shuffle(keys)
    e0 = dict(a.e0)
    for key in keys:
        trial = {k: t for k, t in e0.items() if k != key}
        trial_game = Game(
            Arena(
                v0_count=a.v0_count,
                v1_count=a.v1_count,
                actions0=a.actions0,
                actions1=a.actions1,
                e0=trial,
                e1=dict(a.e1),
                init=a.init,
            ),
            game.condition,
        )
        if _winner_only(trial_game) == 0:
            e0 = trial
    pruned = Game(
        Arena(
            v0_count=a.v0_count,
            v1_count=a.v1_count,
            actions0=a.actions0,
            actions1=a.actions1,
            e0=e0,
            e1=dict(a.e1),
            init=a.init,
        ),
        game.condition,
    )
    return solve(pruned).strategy


def strategy_approx(game: Game, kind: StrategyKind, c: Fraction,
                    seed: int = 0, budget: int = DEFAULT_BUDGET) -> Strategy:
    """A winning strategy within c ** optimal of the smallest one.

    Phase one is the greedy pass, measuring its result's size n; phase
    two searches exhaustively, but only up to ceil_log(c, n).  A phase-two
    hit is optimal for the kind; otherwise the optimum exceeds the search
    horizon, which makes n less than c ** optimal, and the greedy
    strategy itself meets the guarantee.
    """
    c = Fraction(c)
    if c <= 1:
        raise ValueError("the approximation base must exceed 1")
    start = initial_strategy(game, seed)
    n = strategy_size(game, start)
    limit = min(ceil_log(c, n), n)
    if limit >= 1:
        found = _search(game, kind, limit, budget)
        if found is not None:
            return found[1]
    return start


# ---------------------------------------------------------------------------
# enumeration oracle


def _oracle_bounds(game: Game) -> tuple[Optional[int], Optional[int]]:
    """Sufficient memory bounds (player 0, player 1); None means
    positional suffices."""
    cond = game.condition
    if isinstance(cond, (Safety, Buechi, CoBuechi, Parity)):
        return None, None
    if isinstance(cond, GeneralizedBuechi):
        return len(cond.sets), None
    if isinstance(cond, Streett):
        return factorial(len(cond.pairs)), None
    if isinstance(cond, Rabin):
        return None, factorial(len(cond.pairs))
    if isinstance(cond, Muller):
        bound = factorial(game.arena.v0_count)
        return bound, bound
    raise TypeError(f"not a condition: {cond!r}")


def enumeration_winner(game: Game) -> int:
    """The winner by exhaustive strategy enumeration on both sides.

    A solver-independent oracle for small games: player 0's candidates
    are verified with the product check, player 1's with the accepting
    play search, at classical sufficiency bounds.  Exactly one side must
    have a winning strategy; anything else raises AssertionError.
    """
    b0, b1 = _oracle_bounds(game)
    if b0 is None:
        cands0 = positional_candidates(game, 0)
    else:
        cands0 = memory_candidates(game, 0, b0)
    if b1 is None:
        cands1 = positional_candidates(game, 1)
    else:
        cands1 = memory_candidates(game, 1, b1)
    p0_wins = any(check_strategy_winning(game, s) is True for s in cands0)
    p1_wins = any(player1_strategy_wins(game, s) for s in cands1)
    if p0_wins == p1_wins:
        raise AssertionError(
            f"determinacy violated: player 0 wins={p0_wins}, player 1 wins={p1_wins}"
        )
    return 0 if p0_wins else 1
