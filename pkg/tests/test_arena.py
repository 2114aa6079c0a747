import pytest
from hypothesis import given
from hypothesis import strategies as st

import gamecert as gc
import instances as X
import strategies as gen


# ---------------------------------------------------------------------------
# conditions


def test_accepts_truth_table():
    s = frozenset({0, 2})
    assert gc.accepts(gc.Safety(), s)
    assert gc.accepts(gc.Buechi({2, 5}), s)
    assert not gc.accepts(gc.Buechi({1}), s)
    assert gc.accepts(gc.CoBuechi({1}), s)
    assert not gc.accepts(gc.CoBuechi({0}), s)
    assert gc.accepts(gc.GeneralizedBuechi([{0}, {2, 3}]), s)
    assert not gc.accepts(gc.GeneralizedBuechi([{0}, {3}]), s)
    assert gc.accepts(gc.Parity([2, 1, 0]), s)
    assert not gc.accepts(gc.Parity([2, 1, 3]), s)
    assert gc.accepts(gc.Rabin([({0, 2}, {2})]), s)
    assert not gc.accepts(gc.Rabin([({0, 2}, {1})]), s)
    assert not gc.accepts(gc.Rabin([({0}, {0})]), s)
    assert gc.accepts(gc.Streett([({0}, {0})]), s)
    assert not gc.accepts(gc.Streett([({0, 2}, {2})]), s)
    assert gc.accepts(gc.Muller([{0, 2}]), s)
    assert not gc.accepts(gc.Muller([{0}, {0, 1, 2}]), s)
    assert not gc.accepts(gc.Muller([]), s)


def test_accepts_rejects_empty_inf_set():
    with pytest.raises(ValueError):
        gc.accepts(gc.Safety(), frozenset())


def test_condition_normalization():
    assert gc.Buechi([2, 1, 1]).states == frozenset({1, 2})
    assert gc.GeneralizedBuechi([{2}, {1}, {2}]).sets == (
        frozenset({1}), frozenset({2}))
    assert gc.Parity([0, 1]).colour == (0, 1)
    assert gc.Rabin([({1}, {2}), ({1}, {2})]).pairs == (
        (frozenset({1}), frozenset({2})),)
    assert gc.Streett([({2}, {0}), ({1}, {0})]).pairs[0][0] == frozenset({1})
    assert gc.Muller([[1, 2], (2, 1)]).family == frozenset({frozenset({1, 2})})


def test_condition_kind_names():
    kinds = [
        (gc.Safety(), "safety"),
        (gc.Buechi({0}), "buchi"),
        (gc.CoBuechi({0}), "cobuchi"),
        (gc.GeneralizedBuechi([{0}]), "genbuchi"),
        (gc.Parity([0]), "parity"),
        (gc.Rabin([({0}, {0})]), "rabin"),
        (gc.Streett([({0}, {0})]), "streett"),
        (gc.Muller([{0}]), "muller"),
    ]
    for cond, name in kinds:
        assert gc.condition_kind(cond) == name


@given(
    pairs=st.lists(st.tuples(gen.subsets(5), gen.subsets(5)), min_size=1, max_size=3),
    inf=gen.nonempty_subsets(5),
)
def test_rabin_streett_complementary(pairs, inf):
    assert gc.accepts(gc.Rabin(pairs), inf) != gc.accepts(gc.Streett(pairs), inf)


@given(states=gen.subsets(5), inf=gen.nonempty_subsets(5))
def test_buchi_cobuchi_complementary(states, inf):
    assert gc.accepts(gc.Buechi(states), inf) != gc.accepts(gc.CoBuechi(states), inf)


# ---------------------------------------------------------------------------
# arenas and validation


def test_arena_size_frozen():
    assert gc.arena_size(X.g_triv().arena) == 6
    assert gc.arena_size(gc.build_vc_game(X.h1(), gc.Safety).arena) == 58
    assert gc.arena_size(gc.build_vc_game(X.k3(), gc.Safety).arena) == 75


def test_validate_clean_instances():
    for game in (X.g_triv(), X.g_stuck(), X.g_fork(), X.g8()):
        assert gc.validate(game) == []


def test_validate_reports_problems():
    a = gc.Arena(1, 1, ("a",), ("x",), {(0, 0): 0}, {(0, 0): 0}, 0)

    def complaints(arena=a, cond=gc.Safety()):
        return gc.validate(gc.Game(arena, cond))

    assert complaints(gc.Arena(0, 1, ("a",), ("x",), {}, {}, 0))
    assert complaints(gc.Arena(1, 1, ("a", "a"), ("x",), {}, {}, 0))
    assert complaints(gc.Arena(1, 1, ("a",), ("x",), {}, {}, 5))
    assert complaints(gc.Arena(1, 1, ("a",), ("x",), {(0, 3): 0}, {}, 0))
    assert complaints(gc.Arena(1, 1, ("a",), ("x",), {(0, 0): 9}, {}, 0))
    assert complaints(cond=gc.Buechi({7}))
    assert "at least one set" in " ".join(
        gc.validate(gc.Game(a, gc.GeneralizedBuechi([])))
    )
    assert complaints(cond=gc.Parity([0, 0]))
    assert complaints(cond=gc.Parity([-1]))
    assert "at least one pair" in " ".join(
        gc.validate(gc.Game(a, gc.Rabin([])))
    )
    assert complaints(cond=gc.Muller([{4}]))
    assert complaints(cond=gc.Streett([({9}, {0})]))


def test_muller_family_may_be_empty():
    assert gc.validate(gc.Game(X.g_triv().arena, gc.Muller([]))) == []


# ---------------------------------------------------------------------------
# plays


def test_run_decisions_full():
    play = gc.run_decisions(X.g_triv(), (0, 0, 0, 0))
    assert play.v0_trace == (0, 0, 0)
    assert play.v1_trace == (0, 0)
    assert not play.stuck
    with pytest.raises(ValueError):
        play.finite_winner()


def test_run_decisions_stuck_sides():
    p0 = gc.run_decisions(X.g_stuck(), (0,))
    assert p0.stuck_at == (0, 0) and p0.finite_winner() == 1
    g = gc.Game(
        gc.Arena(1, 1, ("a",), ("x",), {(0, 0): 0}, {}, 0), gc.Safety()
    )
    p1 = gc.run_decisions(g, (0, 0))
    assert p1.stuck_at == (1, 0) and p1.finite_winner() == 0


def test_run_decisions_unknown_action():
    with pytest.raises(gc.ActionUnknown):
        gc.run_decisions(X.g_triv(), (4,))
    with pytest.raises(gc.ActionUnknown):
        gc.run_decisions(X.g_triv(), (0, 4))


@given(gen.games(total=True), st.lists(st.integers(0, 1), max_size=12))
def test_run_decisions_trace_accounting(game, raw):
    decisions = [
        act % (len(game.arena.actions0) if i % 2 == 0 else len(game.arena.actions1))
        for i, act in enumerate(raw)
    ]
    play = gc.run_decisions(game, decisions)
    assert not play.stuck
    assert len(play.v0_trace) + len(play.v1_trace) == len(decisions) + 1
    assert play.v0_trace[0] == game.arena.init


# ---------------------------------------------------------------------------
# lassos and witnesses


def test_lasso_shape_validation():
    with pytest.raises(ValueError):
        gc.Lasso((), (), (0,))
    with pytest.raises(ValueError):
        gc.Lasso((), ((0, 0),), (0,))
    with pytest.raises(ValueError):
        gc.Witness((), ())
    assert gc.Witness((1,), (0, 0)).size == 3


def test_make_lasso_and_validity():
    g = X.g_triv()
    lasso = gc.make_lasso(g, (), ((0, 0),))
    assert lasso.size == 1 and lasso.trace0 == (0, 0)
    assert gc.lasso_valid(g, lasso)
    assert gc.lasso_inf_set(lasso) == frozenset({0})
    with pytest.raises(ValueError):
        gc.make_lasso(g, (), ())
    with pytest.raises(ValueError):
        gc.make_lasso(X.g_fork(), (), ((0, 0),))   # 0 -> 1 does not close
    with pytest.raises(ValueError):
        gc.make_lasso(X.g_stuck(), (), ((0, 0),))  # undefined move
    doctored = gc.Lasso(lasso.stem, lasso.cycle, (0, 99))
    assert not gc.lasso_valid(g, doctored)


def test_lasso_accepted_evaluates_cycle_inf_set():
    g = X.g_fork()
    full = gc.make_lasso(g, (), ((0, 0), (0, 0), (1, 0), (0, 0)))
    assert gc.lasso_inf_set(full) == frozenset({0, 1, 2})
    assert gc.lasso_accepted(g.condition, full)
    left = gc.make_lasso(g, (), ((0, 0), (0, 0)))
    assert not gc.lasso_accepted(g.condition, left)


def test_automaton_lasso_uses_letters():
    lasso = gc.automaton_lasso(X.a_two(), (0,), (0,))
    assert lasso.trace0 == (0, 1, 1)
    assert gc.lasso_inf_set(lasso) == frozenset({1})


@given(gen.game_lassos())
def test_make_lasso_idempotent(pair):
    game, lasso = pair
    assert gc.lasso_valid(game, lasso)
    rebuilt = gc.make_lasso(game, lasso.stem, lasso.cycle)
    assert rebuilt == lasso
    assert gc.lasso_inf_set(lasso) == frozenset(lasso.trace0[len(lasso.stem):-1])


# ---------------------------------------------------------------------------
# the one-player collapse


def test_automaton_embedding_round_trip():
    for aut, cond in (
        (X.a_two(), gc.Buechi({1})),
        (X.a_chain(), X.A_CHAIN_COND),
        (X.a_rabin(), gc.Rabin([({1}, {1})])),
    ):
        game = gc.automaton_to_game(aut, cond)
        assert gc.validate(game) == []
        back, cond2 = gc.as_automaton(game)
        assert back == aut and cond2 == cond


def test_as_automaton_rejects_real_games():
    g = gc.Game(
        gc.Arena(1, 1, ("a",), ("x", "y"),
                 {(0, 0): 0}, {(0, 0): 0, (0, 1): 0}, 0),
        gc.Safety(),
    )
    with pytest.raises(gc.NotOnePlayer):
        gc.as_automaton(g)
    stuck = gc.Game(
        gc.Arena(1, 2, ("a",), ("x",), {(0, 0): 1}, {(0, 0): 0}, 0),
        gc.Safety(),
    )
    with pytest.raises(gc.NotOnePlayer):
        gc.as_automaton(stuck)
