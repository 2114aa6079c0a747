"""Game arenas, winning conditions, automata, lassos and witnesses.

A game is played on a bipartite arena: player 0 owns the positions in V0,
player 1 owns the positions in V1, and the players strictly alternate.  A
round starts at a V0 position, player 0 picks one of its actions, the edge
function ``e0`` yields a V1 position, player 1 answers with one of its
actions, and ``e1`` yields the next V0 position.  Both edge functions are
partial: a player who has no defined move is stuck, the play ends, and the
stuck player loses the finite play.

Winning conditions judge infinite plays by the set of V0 positions visited
infinitely often (the "inf set").  Eight condition kinds are supported;
see :func:`accepts` for their exact semantics.

An automaton over a finite alphabet is the one-player special case: player 1
has a single action and a total edge function, so the arena collapses to a
deterministic transition structure on the V0 positions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence, Union

from .errors import ActionUnknown, NotOnePlayer


# ---------------------------------------------------------------------------
# winning conditions


@dataclass(frozen=True)
class Safety:
    """Player 0 wins every infinite play; only getting stuck loses."""


@dataclass(frozen=True)
class Buechi:
    """Some position of ``states`` must be visited infinitely often."""

    states: frozenset[int]

    def __init__(self, states):
        object.__setattr__(self, "states", frozenset(states))


@dataclass(frozen=True)
class CoBuechi:
    """Every position of ``states`` must be visited finitely often."""

    states: frozenset[int]

    def __init__(self, states):
        object.__setattr__(self, "states", frozenset(states))


@dataclass(frozen=True)
class GeneralizedBuechi:
    """Each member set must be visited infinitely often."""

    sets: tuple[frozenset[int], ...]

    def __init__(self, sets):
        norm = sorted({frozenset(s) for s in sets}, key=sorted)
        object.__setattr__(self, "sets", tuple(norm))


@dataclass(frozen=True)
class Parity:
    """The highest colour seen infinitely often must be even.

    ``colour`` is a total map from V0 positions to natural numbers, stored
    as a tuple indexed by position.
    """

    colour: tuple[int, ...]

    def __init__(self, colour):
        object.__setattr__(self, "colour", tuple(colour))


@dataclass(frozen=True)
class Rabin:
    """Some pair (F, G) must confine the inf set to F while touching G."""

    pairs: tuple[tuple[frozenset[int], frozenset[int]], ...]

    def __init__(self, pairs):
        norm = sorted(
            {(frozenset(f), frozenset(g)) for f, g in pairs},
            key=lambda p: (sorted(p[0]), sorted(p[1])),
        )
        object.__setattr__(self, "pairs", tuple(norm))


@dataclass(frozen=True)
class Streett:
    """Every pair (F, G) must leave F or avoid G; the clause-wise dual of Rabin."""

    pairs: tuple[tuple[frozenset[int], frozenset[int]], ...]

    def __init__(self, pairs):
        norm = sorted(
            {(frozenset(f), frozenset(g)) for f, g in pairs},
            key=lambda p: (sorted(p[0]), sorted(p[1])),
        )
        object.__setattr__(self, "pairs", tuple(norm))


@dataclass(frozen=True)
class Muller:
    """The inf set must be exactly one of the listed sets."""

    family: frozenset[frozenset[int]]

    def __init__(self, family):
        object.__setattr__(self, "family", frozenset(frozenset(s) for s in family))


Condition = Union[
    Safety, Buechi, CoBuechi, GeneralizedBuechi, Parity, Rabin, Streett, Muller
]

CONDITION_KINDS = {
    Safety: "safety",
    Buechi: "buchi",
    CoBuechi: "cobuchi",
    GeneralizedBuechi: "genbuchi",
    Parity: "parity",
    Rabin: "rabin",
    Streett: "streett",
    Muller: "muller",
}


def condition_kind(cond: Condition) -> str:
    return CONDITION_KINDS[type(cond)]


def accepts(cond: Condition, inf_set: frozenset[int]) -> bool:
    """Evaluate a condition on the set of V0 positions seen infinitely often.

    ``inf_set`` must be non-empty; infinite plays always have one.
    """
    if not inf_set:
        raise ValueError("inf set of an infinite play is never empty")
    if isinstance(cond, Safety):
        return True
    if isinstance(cond, Buechi):
        return bool(inf_set & cond.states)
    if isinstance(cond, CoBuechi):
        return not (inf_set & cond.states)
    if isinstance(cond, GeneralizedBuechi):
        return all(inf_set & f for f in cond.sets)
    if isinstance(cond, Parity):
        return max(cond.colour[v] for v in inf_set) % 2 == 0
    if isinstance(cond, Rabin):
        return any(inf_set <= f and inf_set & g for f, g in cond.pairs)
    if isinstance(cond, Streett):
        return all(not (inf_set <= f) or not (inf_set & g) for f, g in cond.pairs)
    if isinstance(cond, Muller):
        return inf_set in cond.family
    raise TypeError(f"not a condition: {cond!r}")


# ---------------------------------------------------------------------------
# arenas and games


@dataclass(frozen=True)
class Arena:
    """A bipartite alternating arena with partial edge functions.

    Positions are dense integers (``0 .. v0_count-1`` and ``0 .. v1_count-1``).
    Action names are interned: the tuples ``actions0`` / ``actions1`` give the
    names, and edges are keyed by ``(position, action index)``.
    Treat instances as immutable even though the edge dicts are plain dicts.
    """

    v0_count: int
    v1_count: int
    actions0: tuple[str, ...]
    actions1: tuple[str, ...]
    e0: dict[tuple[int, int], int]
    e1: dict[tuple[int, int], int]
    init: int

    def available0(self, v: int) -> Iterator[int]:
        """Action indices defined at the V0 position ``v``, ascending."""
        for a in range(len(self.actions0)):
            if (v, a) in self.e0:
                yield a

    def available1(self, v: int) -> Iterator[int]:
        for a in range(len(self.actions1)):
            if (v, a) in self.e1:
                yield a

    def action0_index(self, name: str) -> int:
        try:
            return self.actions0.index(name)
        except ValueError:
            raise ActionUnknown(f"player-0 action {name!r}") from None

    def action1_index(self, name: str) -> int:
        try:
            return self.actions1.index(name)
        except ValueError:
            raise ActionUnknown(f"player-1 action {name!r}") from None


@dataclass(frozen=True)
class Game:
    arena: Arena
    condition: Condition


@dataclass(frozen=True)
class Automaton:
    """A deterministic automaton; the transition map may be partial.

    A word whose run dies is simply not accepted by any condition.
    """

    state_count: int
    alphabet: tuple[str, ...]
    delta: dict[tuple[int, int], int]
    init: int

    def letter_index(self, name: str) -> int:
        try:
            return self.alphabet.index(name)
        except ValueError:
            raise ActionUnknown(f"letter {name!r}") from None


def arena_size(arena: Arena) -> int:
    """Positions plus actions plus defined edges, the cost measure for arenas."""
    return (
        arena.v0_count
        + arena.v1_count
        + len(arena.actions0)
        + len(arena.actions1)
        + len(arena.e0)
        + len(arena.e1)
    )


def validate(game: Game) -> list[str]:
    """Structural well-formedness check; returns human-readable violations.

    An empty list means the game is well formed.  Partial edge functions are
    legal, so nothing here complains about missing moves.
    """
    a = game.arena
    problems = []
    if a.v0_count < 1:
        problems.append("arena needs at least one V0 position")
    if a.v1_count < 1:
        problems.append("arena needs at least one V1 position")
    if len(set(a.actions0)) != len(a.actions0):
        problems.append("player-0 action names are not distinct")
    if len(set(a.actions1)) != len(a.actions1):
        problems.append("player-1 action names are not distinct")
    if not (0 <= a.init < a.v0_count):
        problems.append(f"initial position {a.init} out of range")
    for (v, act), t in a.e0.items():
        if not (0 <= v < a.v0_count and 0 <= act < len(a.actions0)):
            problems.append(f"e0 key ({v},{act}) out of range")
        if not (0 <= t < a.v1_count):
            problems.append(f"e0 target {t} out of range")
    for (v, act), t in a.e1.items():
        if not (0 <= v < a.v1_count and 0 <= act < len(a.actions1)):
            problems.append(f"e1 key ({v},{act}) out of range")
        if not (0 <= t < a.v0_count):
            problems.append(f"e1 target {t} out of range")
    problems.extend(_validate_condition(game.condition, a.v0_count))
    return problems


def _validate_condition(cond: Condition, v0_count: int) -> list[str]:
    problems = []

    def check_set(s, label):
        for v in s:
            if not (0 <= v < v0_count):
                problems.append(f"{label} member {v} out of range")

    if isinstance(cond, (Buechi, CoBuechi)):
        check_set(cond.states, condition_kind(cond))
    elif isinstance(cond, GeneralizedBuechi):
        if not cond.sets:
            problems.append("generalized Buechi needs at least one set")
        for s in cond.sets:
            check_set(s, "genbuchi set")
    elif isinstance(cond, Parity):
        if len(cond.colour) != v0_count:
            problems.append("parity colouring is not total on V0")
        if any(c < 0 for c in cond.colour):
            problems.append("parity colours must be naturals")
    elif isinstance(cond, (Rabin, Streett)):
        if not cond.pairs:
            problems.append(f"{condition_kind(cond)} needs at least one pair")
        for f, g in cond.pairs:
            check_set(f, "pair F")
            check_set(g, "pair G")
    elif isinstance(cond, Muller):
        for s in cond.family:
            check_set(s, "muller set")
    return problems


# ---------------------------------------------------------------------------
# plays

Decisions = Sequence[int]


@dataclass(frozen=True)
class Play:
    """The unfolding of a decision sequence from the initial position.

    ``v0_trace`` starts with the initial position.  ``stuck_at`` is the
    (player, position) whose move was undefined, or None if every decision
    was applied.  A play stuck at a V0 position is won by player 1, one
    stuck at a V1 position by player 0.
    """

    v0_trace: tuple[int, ...]
    v1_trace: tuple[int, ...]
    stuck_at: tuple[int, int] | None = None

    @property
    def stuck(self) -> bool:
        return self.stuck_at is not None

    def finite_winner(self) -> int:
        if self.stuck_at is None:
            raise ValueError("play is not stuck")
        return 1 - self.stuck_at[0]


def run_decisions(game: Game, decisions: Decisions) -> Play:
    """Execute a flat alternating decision list (a0, a1, a0, ...) from init.

    Stops early at the first undefined move and records where.  Raises
    :class:`ActionUnknown` on out-of-range action indices.
    """
    a = game.arena
    v0s = [a.init]
    v1s: list[int] = []
    cur = a.init
    player = 0
    for act in decisions:
        if player == 0:
            if not (0 <= act < len(a.actions0)):
                raise ActionUnknown(f"player-0 action index {act}")
            nxt = a.e0.get((cur, act))
            if nxt is None:
                return Play(tuple(v0s), tuple(v1s), (0, cur))
            v1s.append(nxt)
        else:
            if not (0 <= act < len(a.actions1)):
                raise ActionUnknown(f"player-1 action index {act}")
            nxt = a.e1.get((cur, act))
            if nxt is None:
                return Play(tuple(v0s), tuple(v1s), (1, cur))
            v0s.append(nxt)
        cur = nxt
        player = 1 - player
    return Play(tuple(v0s), tuple(v1s), None)


# ---------------------------------------------------------------------------
# lassos and witnesses


@dataclass(frozen=True)
class Lasso:
    """A finite stem and a non-empty cycle of decision pairs.

    The cycle is a closed walk on V0 positions; it may repeat positions.
    ``trace0`` lists the V0 positions along stem and cycle, including the
    closing repeat, so ``trace0[len(stem)] == trace0[-1]``.  For lassos of
    automata the player-1 component of every pair is 0.
    """

    stem: tuple[tuple[int, int], ...]
    cycle: tuple[tuple[int, int], ...]
    trace0: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "stem", tuple(tuple(p) for p in self.stem))
        object.__setattr__(self, "cycle", tuple(tuple(p) for p in self.cycle))
        object.__setattr__(self, "trace0", tuple(self.trace0))
        if not self.cycle:
            raise ValueError("lasso cycle must be non-empty")
        if len(self.trace0) != len(self.stem) + len(self.cycle) + 1:
            raise ValueError("trace length does not match stem plus cycle")

    @property
    def size(self) -> int:
        return len(self.stem) + len(self.cycle)


@dataclass(frozen=True)
class Witness:
    """A pair of finite words (u, v) describing the infinite word u v^omega."""

    u: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "v", tuple(self.v))
        if not self.v:
            raise ValueError("witness period must be non-empty")

    @property
    def size(self) -> int:
        return len(self.u) + len(self.v)


def lasso_inf_set(lasso: Lasso) -> frozenset[int]:
    """V0 positions visited infinitely often when pumping the cycle."""
    return frozenset(lasso.trace0[len(lasso.stem):-1])


def lasso_accepted(cond: Condition, lasso: Lasso) -> bool:
    return accepts(cond, lasso_inf_set(lasso))


def make_lasso(game: Game, stem, cycle) -> Lasso:
    """Build a lasso from decision pairs, computing and checking the trace.

    Raises ValueError if an edge is undefined or the cycle does not close.
    """
    if not cycle:
        raise ValueError("lasso cycle must be non-empty")
    a = game.arena
    trace = [a.init]
    cur = a.init
    for a0, a1 in tuple(stem) + tuple(cycle):
        mid = a.e0.get((cur, a0))
        if mid is None:
            raise ValueError(f"undefined e0 at ({cur},{a0})")
        cur = a.e1.get((mid, a1))
        if cur is None:
            raise ValueError(f"undefined e1 at ({mid},{a1})")
        trace.append(cur)
    if trace[len(stem)] != trace[-1]:
        raise ValueError("cycle does not return to its entry position")
    return Lasso(tuple(stem), tuple(cycle), tuple(trace))


def lasso_valid(game: Game, lasso: Lasso) -> bool:
    """True when the lasso replays on the arena and its trace matches."""
    try:
        rebuilt = make_lasso(game, lasso.stem, lasso.cycle)
    except ValueError:
        return False
    return rebuilt.trace0 == lasso.trace0


def automaton_lasso(aut: Automaton, stem: Sequence[int], cycle: Sequence[int]) -> Lasso:
    """Lasso of an automaton from letter sequences; pairs get a dummy reply."""
    game = automaton_to_game(aut, Safety())
    return make_lasso(
        game, [(a, 0) for a in stem], [(a, 0) for a in cycle]
    )


# ---------------------------------------------------------------------------
# the one-player collapse


def as_automaton(game: Game) -> tuple[Automaton, Condition]:
    """Collapse a game in which player 1 never chooses into an automaton.

    Requires a single player-1 action with a total edge function; otherwise
    raises :class:`NotOnePlayer`.  States are the V0 positions, the alphabet
    is player 0's action set, and the condition carries over unchanged.
    """
    a = game.arena
    if len(a.actions1) != 1:
        raise NotOnePlayer(f"player 1 has {len(a.actions1)} actions")
    for v in range(a.v1_count):
        if (v, 0) not in a.e1:
            raise NotOnePlayer(f"player 1 is stuck at V1 position {v}")
    delta = {
        (v, act): a.e1[(mid, 0)] for (v, act), mid in a.e0.items()
    }
    aut = Automaton(a.v0_count, a.actions0, delta, a.init)
    return aut, game.condition


def automaton_to_game(aut: Automaton, cond: Condition) -> Game:
    """Embed an automaton as a game; one V1 buddy per state, single reply."""
    e0 = {(q, act): t for (q, act), t in aut.delta.items()}
    e1 = {(q, 0): q for q in range(aut.state_count)}
    arena = Arena(
        v0_count=aut.state_count,
        v1_count=aut.state_count,
        actions0=aut.alphabet,
        actions1=(".",),
        e0=e0,
        e1=e1,
        init=aut.init,
    )
    return Game(arena, cond)
