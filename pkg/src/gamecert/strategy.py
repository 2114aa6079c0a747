"""The three strategy kinds and their size measures.

A strategy resolves the choices of one player.  Three representations are
supported:

* positional: a partial map from the player's positions to actions;
* finite-memory: a memory set updated alongside the play, with a move map
  and an update map sharing one domain of (memory, position) pairs;
* stand-alone: a Moore machine that never looks at positions at all, it
  reads the opponent's actions and emits the next own action.

Memory semantics.  The memory in force at a position is what both the move
and the update consume: at a player-0 position v with memory m the strategy
plays ``move[m, v]`` and the memory becomes ``update[m, v]``, which is then
in force at the next player-0 position regardless of what the opponent
does in between.  Player-1 memory works the same way along player-1
positions; its initial memory is a map because player 0 moves first, so
the strategy may condition its starting memory on where that move landed.

Size.  A positional strategy is measured by how many of the player's
positions it can actually reach from the initial position when followed;
a finite-memory strategy by how many (memory, position) pairs can occur;
a stand-alone strategy simply by its state count.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

from .arena import Game
from .errors import MalformedStrategy, Undefined


class StrategyKind(Enum):
    POSITIONAL = "positional"
    FINITE_MEMORY = "memory"
    STAND_ALONE = "moore"


@dataclass(frozen=True)
class PositionalStrategy:
    player: int
    choice: dict[int, int]

    def __post_init__(self):
        object.__setattr__(self, "choice", dict(self.choice))


@dataclass(frozen=True)
class FiniteMemoryStrategy:
    """Finite-memory strategy; ``init_memory`` is an int for player 0 and a
    total map from player-1 positions to memories for player 1."""

    player: int
    memory_count: int
    init_memory: Union[int, dict[int, int]]
    move: dict[tuple[int, int], int]
    update: dict[tuple[int, int], int]

    def __post_init__(self):
        object.__setattr__(self, "move", dict(self.move))
        object.__setattr__(self, "update", dict(self.update))
        if self.player == 1:
            object.__setattr__(self, "init_memory", dict(self.init_memory))


@dataclass(frozen=True)
class StandAloneStrategy:
    """Moore machine for player 0: ``label[q]`` is the action played at
    state q, ``trans[q][a1]`` the state after reading opponent action a1.
    Both tables are total by shape."""

    moore_state_count: int
    init: int
    label: tuple[int, ...]
    trans: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "label", tuple(self.label))
        object.__setattr__(self, "trans", tuple(tuple(row) for row in self.trans))


Strategy = Union[PositionalStrategy, FiniteMemoryStrategy, StandAloneStrategy]


def kind_of(s: Strategy) -> StrategyKind:
    if isinstance(s, PositionalStrategy):
        return StrategyKind.POSITIONAL
    if isinstance(s, FiniteMemoryStrategy):
        return StrategyKind.FINITE_MEMORY
    if isinstance(s, StandAloneStrategy):
        return StrategyKind.STAND_ALONE
    raise TypeError(f"not a strategy: {s!r}")


def player_of(s: Strategy) -> int:
    if isinstance(s, StandAloneStrategy):
        return 0
    return s.player


# ---------------------------------------------------------------------------
# structural checks
#
# Two levels are distinguished.  Shape violations (indices out of range,
# move/update domains differing, malformed tables) always raise
# MalformedStrategy.  Gameplay gaps (the strategy not covering a position
# it can reach, or choosing an action the arena does not offer) make the
# well-formedness predicates return False; verification treats such
# strategies as losing by getting stuck rather than rejecting them.


def _check_shape(game: Game, s: Strategy) -> None:
    a = game.arena
    if isinstance(s, PositionalStrategy):
        if s.player not in (0, 1):
            raise MalformedStrategy("player must be 0 or 1")
        n_pos = a.v0_count if s.player == 0 else a.v1_count
        n_act = len(a.actions0) if s.player == 0 else len(a.actions1)
        for v, act in s.choice.items():
            if not (0 <= v < n_pos and 0 <= act < n_act):
                raise MalformedStrategy(f"choice ({v} -> {act}) out of range")
    elif isinstance(s, FiniteMemoryStrategy):
        if s.player not in (0, 1):
            raise MalformedStrategy("player must be 0 or 1")
        if s.memory_count < 1:
            raise MalformedStrategy("memory_count must be at least 1")
        if set(s.move) != set(s.update):
            raise MalformedStrategy("move and update must share one domain")
        n_pos = a.v0_count if s.player == 0 else a.v1_count
        n_act = len(a.actions0) if s.player == 0 else len(a.actions1)
        for (m, v), act in s.move.items():
            if not (0 <= m < s.memory_count and 0 <= v < n_pos):
                raise MalformedStrategy(f"move key ({m},{v}) out of range")
            if not (0 <= act < n_act):
                raise MalformedStrategy(f"move action {act} out of range")
        for (m, v), m2 in s.update.items():
            if not (0 <= m2 < s.memory_count):
                raise MalformedStrategy(f"update target {m2} out of range")
        if s.player == 0:
            if not (0 <= s.init_memory < s.memory_count):
                raise MalformedStrategy("initial memory out of range")
        else:
            for v in range(a.v1_count):
                m = s.init_memory.get(v)
                if m is None:
                    raise MalformedStrategy(f"initial memory missing for {v}")
                if not (0 <= m < s.memory_count):
                    raise MalformedStrategy(f"initial memory for {v} out of range")
    elif isinstance(s, StandAloneStrategy):
        q_n = s.moore_state_count
        if q_n < 1:
            raise MalformedStrategy("Moore machine needs at least one state")
        if not (0 <= s.init < q_n):
            raise MalformedStrategy("Moore initial state out of range")
        if len(s.label) != q_n or len(s.trans) != q_n:
            raise MalformedStrategy("label and trans must cover every state")
        for q in range(q_n):
            if not (0 <= s.label[q] < len(a.actions0)):
                raise MalformedStrategy(f"label of state {q} out of range")
            if len(s.trans[q]) != len(a.actions1):
                raise MalformedStrategy(f"trans row {q} is not total")
            for t in s.trans[q]:
                if not (0 <= t < q_n):
                    raise MalformedStrategy(f"trans target {t} out of range")
    else:
        raise MalformedStrategy(f"not a strategy: {s!r}")


def positional_well_formed(game: Game, s: PositionalStrategy) -> bool:
    """Closure check: following the strategy never leaves its domain.

    For player 0 the initial position must be in the domain; for player 1
    every position the opponent's first move can reach must be.  Each
    chosen action must be available, and every position reachable under
    the strategy (for any opponent behaviour) must again be in the domain.
    """
    _check_shape(game, s)
    a = game.arena
    if s.player == 0:
        entries = [a.init]
    else:
        entries = sorted({a.e0[(a.init, act)] for act in a.available0(a.init)})
    seen = set()
    queue = deque(entries)
    while queue:
        v = queue.popleft()
        if v in seen:
            continue
        seen.add(v)
        act = s.choice.get(v)
        if act is None:
            return False
        if s.player == 0:
            mid = a.e0.get((v, act))
            if mid is None:
                return False
            hops = (a.e1[(mid, b)] for b in a.available1(mid))
        else:
            mid = a.e1.get((v, act))
            if mid is None:
                return False
            hops = (a.e0[(mid, b)] for b in a.available0(mid))
        for w in hops:
            if w not in seen:
                queue.append(w)
    return True


def finite_memory_well_formed(game: Game, s: FiniteMemoryStrategy) -> bool:
    """Closure over (memory, position) configurations, as above."""
    _check_shape(game, s)
    a = game.arena
    if s.player == 0:
        entries = [(s.init_memory, a.init)]
    else:
        entries = sorted(
            {
                (s.init_memory[a.e0[(a.init, act)]], a.e0[(a.init, act)])
                for act in a.available0(a.init)
            }
        )
    seen = set()
    queue = deque(entries)
    while queue:
        m, v = queue.popleft()
        if (m, v) in seen:
            continue
        seen.add((m, v))
        act = s.move.get((m, v))
        if act is None:
            return False
        m2 = s.update[(m, v)]
        if s.player == 0:
            mid = a.e0.get((v, act))
            if mid is None:
                return False
            hops = (a.e1[(mid, b)] for b in a.available1(mid))
        else:
            mid = a.e1.get((v, act))
            if mid is None:
                return False
            hops = (a.e0[(mid, b)] for b in a.available0(mid))
        for w in hops:
            if (m2, w) not in seen:
                queue.append((m2, w))
    return True


def well_formed(game: Game, s: Strategy) -> bool:
    if isinstance(s, PositionalStrategy):
        return positional_well_formed(game, s)
    if isinstance(s, FiniteMemoryStrategy):
        return finite_memory_well_formed(game, s)
    _check_shape(game, s)
    return True


# ---------------------------------------------------------------------------
# size


def strategy_size(game: Game, s: Strategy) -> int:
    """The paper-and-pencil cost of a strategy; see the module docstring."""
    if isinstance(s, StandAloneStrategy):
        _check_shape(game, s)
        return s.moore_state_count
    if not well_formed(game, s):
        raise MalformedStrategy("strategy is not closed under its own play")
    a = game.arena
    if isinstance(s, PositionalStrategy):
        if s.player == 0:
            entries = [a.init]
        else:
            entries = sorted({a.e0[(a.init, b)] for b in a.available0(a.init)})
        seen = set(entries)
        queue = deque(entries)
        while queue:
            v = queue.popleft()
            act = s.choice[v]
            if s.player == 0:
                mid = a.e0[(v, act)]
                succ = (a.e1[(mid, b)] for b in a.available1(mid))
            else:
                mid = a.e1[(v, act)]
                succ = (a.e0[(mid, b)] for b in a.available0(mid))
            for w in succ:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen)
    # finite memory: count reachable (memory, position) configurations
    if s.player == 0:
        entries = [(s.init_memory, a.init)]
    else:
        entries = sorted(
            {
                (s.init_memory[a.e0[(a.init, b)]], a.e0[(a.init, b)])
                for b in a.available0(a.init)
            }
        )
    seen = set(entries)
    queue = deque(entries)
    while queue:
        m, v = queue.popleft()
        act = s.move[(m, v)]
        m2 = s.update[(m, v)]
        if s.player == 0:
            mid = a.e0[(v, act)]
            succ = (a.e1[(mid, b)] for b in a.available1(mid))
        else:
            mid = a.e1[(v, act)]
            succ = (a.e0[(mid, b)] for b in a.available0(mid))
        for w in succ:
            if (m2, w) not in seen:
                seen.add((m2, w))
                queue.append((m2, w))
    return len(seen)


# ---------------------------------------------------------------------------
# induced strategy function


def induced_action(game: Game, s: Strategy, history: Sequence[int]) -> int:
    """The action the strategy plays after a finite decision history.

    The history is a flat alternating list of action indices starting with
    player 0, must follow defined edges, and must end with the strategy's
    player to move.  The history need not itself follow the strategy; the
    memory thread is still well defined because updates depend only on the
    visited positions.
    """
    _check_shape(game, s)
    a = game.arena
    p = player_of(s)
    if len(history) % 2 != p:
        raise ValueError("history does not end with the strategy's player to move")
    if isinstance(s, StandAloneStrategy):
        q = s.init
        for i, act in enumerate(history):
            if i % 2 == 1:
                q = s.trans[q][act]
        return s.label[q]
    # replay the history and track the visited own positions
    cur = a.init
    own_trace = [cur] if p == 0 else []
    for i, act in enumerate(history):
        if i % 2 == 0:
            cur = a.e0.get((cur, act))
        else:
            cur = a.e1.get((cur, act))
        if cur is None:
            raise ValueError("history leaves the defined edges")
        if i % 2 == (1 - p):
            own_trace.append(cur)
    if isinstance(s, PositionalStrategy):
        act = s.choice.get(own_trace[-1])
        if act is None:
            raise Undefined(f"no choice at position {own_trace[-1]}")
        return act
    if p == 0:
        m = s.init_memory
    else:
        m = s.init_memory[own_trace[0]]
    for v in own_trace[:-1]:
        key = (m, v)
        if key not in s.update:
            raise Undefined(f"no update at configuration {key}")
        m = s.update[key]
    key = (m, own_trace[-1])
    act = s.move.get(key)
    if act is None:
        raise Undefined(f"no move at configuration {key}")
    return act


# ---------------------------------------------------------------------------
# conversions


def positional_to_memory(s: PositionalStrategy, v_count: int = 0) -> FiniteMemoryStrategy:
    """Wrap a positional strategy as a unit-memory strategy.

    For player 1 the initial-memory map must be total, so ``v_count`` gives
    the number of player-1 positions.
    """
    init = 0 if s.player == 0 else {v: 0 for v in range(v_count)}
    return FiniteMemoryStrategy(
        player=s.player,
        memory_count=1,
        init_memory=init,
        move={(0, v): act for v, act in s.choice.items()},
        update={(0, v): 0 for v in s.choice},
    )


def memory_to_positional(s: FiniteMemoryStrategy) -> PositionalStrategy:
    """Drop the memory coordinate of a unit-memory strategy."""
    if s.memory_count != 1:
        raise ValueError("only unit-memory strategies convert to positional")
    return PositionalStrategy(s.player, {v: act for (m, v), act in s.move.items()})
