"""Hypothesis strategies for arenas, conditions, automata and lassos."""

from hypothesis import strategies as st

import gamecert as gc

KINDS = (
    "safety", "buchi", "cobuchi", "genbuchi",
    "parity", "rabin", "streett", "muller",
)

_NAMES0 = ("a", "b", "c", "d")
_NAMES1 = ("x", "y", "z", "w")


def subsets(n):
    return st.frozensets(st.integers(0, n - 1))


def nonempty_subsets(n):
    return st.frozensets(st.integers(0, n - 1), min_size=1)


@st.composite
def conditions(draw, v0_count, kinds=KINDS):
    kind = draw(st.sampled_from(kinds))
    if kind == "safety":
        return gc.Safety()
    if kind == "buchi":
        return gc.Buechi(draw(subsets(v0_count)))
    if kind == "cobuchi":
        return gc.CoBuechi(draw(subsets(v0_count)))
    if kind == "genbuchi":
        return gc.GeneralizedBuechi(
            draw(st.lists(nonempty_subsets(v0_count), min_size=1, max_size=2))
        )
    if kind == "parity":
        return gc.Parity(
            draw(st.lists(st.integers(0, 3), min_size=v0_count, max_size=v0_count))
        )
    if kind in ("rabin", "streett"):
        pairs = draw(
            st.lists(
                st.tuples(subsets(v0_count), subsets(v0_count)),
                min_size=1,
                max_size=2,
            )
        )
        return gc.Rabin(pairs) if kind == "rabin" else gc.Streett(pairs)
    return gc.Muller(
        draw(st.lists(nonempty_subsets(v0_count), min_size=0, max_size=3))
    )


@st.composite
def games(draw, max_pos=4, max_actions=2, kinds=KINDS, total=False):
    """A valid game; with ``total`` every edge function is total, so every
    decision sequence runs forever."""
    v0 = draw(st.integers(1, max_pos))
    v1 = draw(st.integers(1, max_pos))
    n0 = draw(st.integers(1, max_actions))
    n1 = draw(st.integers(1, max_actions))

    def edges(src_count, act_count, dst_count):
        keys = [(v, a) for v in range(src_count) for a in range(act_count)]
        if total:
            targets = draw(
                st.lists(st.integers(0, dst_count - 1),
                         min_size=len(keys), max_size=len(keys))
            )
            return dict(zip(keys, targets))
        picked = draw(st.lists(st.sampled_from(keys), unique=True, max_size=len(keys)))
        return {
            k: draw(st.integers(0, dst_count - 1)) for k in sorted(picked)
        }

    game = gc.Game(
        gc.Arena(
            v0, v1, _NAMES0[:n0], _NAMES1[:n1],
            edges(v0, n0, v1), edges(v1, n1, v0),
            draw(st.integers(0, v0 - 1)),
        ),
        draw(conditions(v0, kinds)),
    )
    assert not gc.validate(game)
    return game


@st.composite
def automata(draw, max_states=6, letters=2, total=False):
    n = draw(st.integers(1, max_states))
    keys = [(q, a) for q in range(n) for a in range(letters)]
    if not total:
        keys = sorted(draw(st.lists(st.sampled_from(keys), unique=True,
                                    max_size=len(keys))))
    delta = {k: draw(st.integers(0, n - 1)) for k in keys}
    return gc.Automaton(n, _NAMES0[:letters], delta, draw(st.integers(0, n - 1)))


@st.composite
def game_lassos(draw, max_pos=4, max_actions=2):
    """A total-edge game plus a lasso on it, found by walking until a
    player-0 position repeats."""
    game = draw(games(max_pos=max_pos, max_actions=max_actions, total=True))
    a = game.arena
    pairs = []
    trace = [a.init]
    cur = a.init
    while True:
        a0 = draw(st.integers(0, len(a.actions0) - 1))
        a1 = draw(st.integers(0, len(a.actions1) - 1))
        pairs.append((a0, a1))
        cur = a.e1[(a.e0[(cur, a0)], a1)]
        if cur in trace:
            break
        trace.append(cur)
    entry = trace.index(cur)
    lasso = gc.make_lasso(game, pairs[:entry], pairs[entry:])
    return game, lasso
