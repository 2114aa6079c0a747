"""Products of games with player-0 strategies.

Fixing player 0's choices leaves a one-player game for player 1 whose plays
are exactly the plays of the original game in correspondence with the
strategy.  Verification then reduces to checking that every remaining play
is won by player 0.  Three constructions are provided, one per strategy
kind.  Positional strategies restrict the arena in place; finite-memory and
stand-alone strategies build a product state space, pruned to its reachable
part and reindexed densely.

Action names and indices are preserved by all three constructions, so a
decision sequence of a product replays verbatim on the original game.  The
``orig0``/``orig1`` tables map product positions back to original ones.

A product position can lack a player-0 move when the strategy picks an
action the arena does not offer there, or does not cover the configuration
at all.  Such positions are kept: a play reaching one ends there, and
player 0 loses it, which is exactly what verification must detect.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product as iproduct

from .arena import (
    Arena,
    Buechi,
    CoBuechi,
    Condition,
    Game,
    GeneralizedBuechi,
    Muller,
    Parity,
    Rabin,
    Streett,
    Safety,
)
from .errors import MalformedStrategy, SizeLimit
from .strategy import (
    FiniteMemoryStrategy,
    PositionalStrategy,
    StandAloneStrategy,
    Strategy,
    positional_well_formed,
    _check_shape,
)

MULLER_LIFT_BUDGET = 200_000


@dataclass(frozen=True)
class OnePlayerGame:
    """A game in which one player's choices are already fixed.

    ``chooser`` is the player who still picks actions.  ``orig0``/``orig1``
    give the original position behind each product position; ``mem0``/
    ``mem1`` give the strategy-side coordinate (memory or Moore state)
    when the product has one.
    """

    game: Game
    chooser: int
    orig0: tuple[int, ...]
    orig1: tuple[int, ...]
    mem0: tuple[int, ...] | None = None
    mem1: tuple[int, ...] | None = None


def restrict_by_positional(game: Game, s: PositionalStrategy) -> OnePlayerGame:
    """Strip every player-0 choice the strategy does not make.

    Requires a closed strategy; see ``_restrict_partial`` for the tolerant
    variant used during verification.
    """
    if s.player != 0:
        raise MalformedStrategy("restriction needs a player-0 strategy")
    if not positional_well_formed(game, s):
        raise MalformedStrategy("strategy is not closed under its own play")
    return _restrict_partial(game, s)


def _restrict_partial(game: Game, s: PositionalStrategy) -> OnePlayerGame:
    """Restriction without the closure demand; gaps become dead ends."""
    _check_shape(game, s)
    a = game.arena
    e0 = {
        (v, act): t
        for (v, act), t in a.e0.items()
        if s.choice.get(v) == act
    }
    arena = Arena(a.v0_count, a.v1_count, a.actions0, a.actions1, e0, dict(a.e1), a.init)
    return OnePlayerGame(
        Game(arena, game.condition),
        chooser=1,
        orig0=tuple(range(a.v0_count)),
        orig1=tuple(range(a.v1_count)),
    )


def product_finite_memory(game: Game, s: FiniteMemoryStrategy) -> OnePlayerGame:
    """Product with the memory automaton of a player-0 strategy.

    Product player-0 positions are (memory, position) configurations; the
    move map fixes the action and the update map advances the memory, which
    then rides along unchanged through player 1's reply.
    """
    if s.player != 0:
        raise MalformedStrategy("product needs a player-0 strategy")
    _check_shape(game, s)
    a = game.arena
    idx0: dict[tuple[int, int], int] = {}
    idx1: dict[tuple[int, int], int] = {}
    e0: dict[tuple[int, int], int] = {}
    e1: dict[tuple[int, int], int] = {}

    def node0(m: int, v: int) -> int:
        key = (m, v)
        if key not in idx0:
            idx0[key] = len(idx0)
        return idx0[key]

    def node1(m: int, v: int) -> int:
        key = (m, v)
        if key not in idx1:
            idx1[key] = len(idx1)
        return idx1[key]

    start = node0(s.init_memory, a.init)
    queue = deque([(s.init_memory, a.init)])
    seen = {(s.init_memory, a.init)}
    while queue:
        m, v = queue.popleft()
        src = node0(m, v)
        key = (m, v)
        if key not in s.move:
            continue
        act = s.move[key]
        mid = a.e0.get((v, act))
        if mid is None:
            continue
        m2 = s.update[key]
        dst1 = node1(m2, mid)
        e0[(src, act)] = dst1
        for b in a.available1(mid):
            w = a.e1[(mid, b)]
            e1[(dst1, b)] = node0(m2, w)
            if (m2, w) not in seen:
                seen.add((m2, w))
                queue.append((m2, w))
    orig0 = tuple(v for _, v in idx0)
    mem0 = tuple(m for m, _ in idx0)
    orig1 = tuple(v for _, v in idx1)
    mem1 = tuple(m for m, _ in idx1)
    arena = Arena(len(idx0), max(len(idx1), 1), a.actions0, a.actions1, e0, e1, start)
    cond = lift_condition(game.condition, orig0)
    return OnePlayerGame(Game(arena, cond), 1, orig0, orig1 or (0,), mem0, mem1 or (0,))


def product_moore(game: Game, s: StandAloneStrategy) -> OnePlayerGame:
    """Product with a stand-alone Moore strategy.

    Positions pair a Moore state with a game position; player 0's only
    move at (q, v) is the label of q, and the Moore state advances on
    player 1's actions.
    """
    _check_shape(game, s)
    a = game.arena
    idx0: dict[tuple[int, int], int] = {}
    idx1: dict[tuple[int, int], int] = {}
    e0: dict[tuple[int, int], int] = {}
    e1: dict[tuple[int, int], int] = {}

    def node0(q: int, v: int) -> int:
        key = (q, v)
        if key not in idx0:
            idx0[key] = len(idx0)
        return idx0[key]

    def node1(q: int, v: int) -> int:
        key = (q, v)
        if key not in idx1:
            idx1[key] = len(idx1)
        return idx1[key]

    start = node0(s.init, a.init)
    queue = deque([(s.init, a.init)])
    seen = {(s.init, a.init)}
    while queue:
        q, v = queue.popleft()
        src = node0(q, v)
        act = s.label[q]
        mid = a.e0.get((v, act))
        if mid is None:
            continue
        dst1 = node1(q, mid)
        e0[(src, act)] = dst1
        for b in a.available1(mid):
            w = a.e1[(mid, b)]
            q2 = s.trans[q][b]
            e1[(dst1, b)] = node0(q2, w)
            if (q2, w) not in seen:
                seen.add((q2, w))
                queue.append((q2, w))
    orig0 = tuple(v for _, v in idx0)
    mem0 = tuple(q for q, _ in idx0)
    orig1 = tuple(v for _, v in idx1)
    mem1 = tuple(q for q, _ in idx1)
    arena = Arena(len(idx0), max(len(idx1), 1), a.actions0, a.actions1, e0, e1, start)
    cond = lift_condition(game.condition, orig0)
    return OnePlayerGame(Game(arena, cond), 1, orig0, orig1 or (0,), mem0, mem1 or (0,))


def build_product(game: Game, s: Strategy) -> OnePlayerGame:
    """The construction matching the strategy kind, gap-tolerant."""
    if isinstance(s, PositionalStrategy):
        if s.player != 0:
            raise MalformedStrategy("products fix player 0's choices")
        _check_shape(game, s)
        return _restrict_partial(game, s)
    if isinstance(s, FiniteMemoryStrategy):
        return product_finite_memory(game, s)
    if isinstance(s, StandAloneStrategy):
        return product_moore(game, s)
    raise MalformedStrategy(f"not a strategy: {s!r}")


# ---------------------------------------------------------------------------
# condition lifting


def lift_condition(cond: Condition, orig0: tuple[int, ...]) -> Condition:
    """Reinterpret a condition over product positions.

    ``orig0[p]`` is the original position behind product position p.  Set
    components lift by membership of the projection; the parity colouring
    is copied through.  A Muller family lifts to every non-empty set of
    product positions whose projection lies in the family, because a play
    may visit any non-empty combination of the copies of each original
    position, and acceptance must depend on the projection alone.
    """
    if isinstance(cond, Safety):
        return cond
    if isinstance(cond, Buechi):
        return Buechi(_members(cond.states, orig0))
    if isinstance(cond, CoBuechi):
        return CoBuechi(_members(cond.states, orig0))
    if isinstance(cond, GeneralizedBuechi):
        return GeneralizedBuechi([_members(f, orig0) for f in cond.sets])
    if isinstance(cond, Parity):
        return Parity([cond.colour[orig0[p]] for p in range(len(orig0))])
    if isinstance(cond, Rabin):
        return Rabin(
            [(_members(f, orig0), _members(g, orig0)) for f, g in cond.pairs]
        )
    if isinstance(cond, Streett):
        return Streett(
            [(_members(f, orig0), _members(g, orig0)) for f, g in cond.pairs]
        )
    if isinstance(cond, Muller):
        return Muller(_lift_muller(cond.family, orig0))
    raise TypeError(f"not a condition: {cond!r}")


def _members(s: frozenset[int], orig0: tuple[int, ...]) -> list[int]:
    return [p for p in range(len(orig0)) if orig0[p] in s]


def _lift_muller(family, orig0):
    copies: dict[int, list[int]] = {}
    for p, v in enumerate(orig0):
        copies.setdefault(v, []).append(p)
    lifted = []
    total = 0
    for base in sorted(family, key=sorted):
        if not all(v in copies for v in base):
            continue
        pick_sets = []
        for v in sorted(base):
            picks = _nonempty_subsets(copies[v])
            pick_sets.append(picks)
        count = 1
        for picks in pick_sets:
            count *= len(picks)
        total += count
        if total > MULLER_LIFT_BUDGET:
            raise SizeLimit("lifted Muller family exceeds the budget")
        for combo in iproduct(*pick_sets):
            lifted.append(frozenset().union(*combo))
    return lifted


def _nonempty_subsets(items: list[int]) -> list[frozenset[int]]:
    out = []
    n = len(items)
    for mask in range(1, 1 << n):
        out.append(frozenset(items[i] for i in range(n) if mask & (1 << i)))
    return out
