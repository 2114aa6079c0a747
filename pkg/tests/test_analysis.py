import random

import pytest

import gamecert as gc
import instances as X
import randgen


def letter_game() -> gc.Game:
    """a_two as a game in which player 1 picks the letters."""
    aut = X.a_two()
    e0 = {(q, 0): q for q in range(2)}
    e1 = dict(aut.delta)
    arena = gc.Arena(2, 2, (".",), aut.alphabet, e0, e1, 0)
    return gc.Game(arena, gc.Buechi({1}))


# ---------------------------------------------------------------------------
# solving


def test_solve_small_games():
    sol = gc.solve(X.g_triv())
    assert sol.winner == 0
    assert sol.strategy == gc.PositionalStrategy(0, {0: 0})

    assert gc.solve(X.g_stuck()).winner == 1

    lost = gc.Game(X.g_triv().arena, gc.Buechi(set()))
    sol = gc.solve(lost)
    assert sol.winner == 1
    assert gc.player1_strategy_wins(lost, sol.strategy)

    sol = gc.solve(X.g_fork())
    assert sol.winner == 0
    assert gc.kind_of(sol.strategy) is gc.StrategyKind.FINITE_MEMORY
    assert gc.check_strategy_winning(X.g_fork(), sol.strategy) is True

    assert gc.solve(gc.build_vc_game(X.h1(), gc.Safety)).winner == 0


def test_solve_strategy_kinds_follow_condition():
    plain = g = X.g_alternate(gc.Parity([0, 1]))
    assert isinstance(gc.solve(plain).strategy, gc.PositionalStrategy)

    rabin2 = X.g_alternate(gc.Rabin([({0}, {0}), ({1}, {1})]))
    sol = gc.solve(rabin2)
    assert sol.winner == 0
    assert isinstance(sol.strategy, gc.PositionalStrategy)
    assert gc.check_strategy_winning(rabin2, sol.strategy) is True

    streett2 = X.g_alternate(gc.Streett([({0}, {1}), ({1}, {1})]))
    sol = gc.solve(streett2)
    assert sol.winner == 0
    assert isinstance(sol.strategy, gc.FiniteMemoryStrategy)
    assert gc.check_strategy_winning(streett2, sol.strategy) is True

    muller = X.g_alternate(gc.Muller([{0, 1}]))
    sol = gc.solve(muller)
    assert sol.winner == 0
    assert isinstance(sol.strategy, gc.FiniteMemoryStrategy)
    assert gc.check_strategy_winning(muller, sol.strategy) is True


def test_solve_is_deterministic():
    g = X.g_fork()
    assert gc.solve(g) == gc.solve(g)
    aut = X.a_chain()
    assert gc.nonempty(aut, X.A_CHAIN_COND) == gc.nonempty(aut, X.A_CHAIN_COND)


def test_solver_size_gates():
    big_muller = gc.Game(
        gc.Arena(
            8, 1, ("a",), ("x",),
            {(v, 0): 0 for v in range(8)}, {(0, 0): 0}, 0,
        ),
        gc.Muller([{0}]),
    )
    with pytest.raises(gc.SizeLimit):
        gc.solve(big_muller)

    wide_streett = gc.Game(
        gc.Arena(
            13, 1, ("a",), ("x",),
            {(v, 0): 0 for v in range(13)}, {(0, 0): 0}, 0,
        ),
        gc.Streett([({0}, {1}), ({2}, {3})]),
    )
    with pytest.raises(gc.SizeLimit):
        gc.solve(wide_streett)


def test_solutions_verify_across_random_games():
    rng = random.Random(4242)
    for kind in randgen.CONDITION_KINDS:
        for _ in range(25):
            game = randgen.random_game(rng, kind)
            sol = gc.solve(game)
            if sol.winner == 0:
                assert gc.check_strategy_winning(game, sol.strategy) is True
            else:
                assert gc.player1_strategy_wins(game, sol.strategy)


# ---------------------------------------------------------------------------
# emptiness and word membership


def test_nonempty_frozen():
    lasso = gc.nonempty(X.a_chain(), X.A_CHAIN_COND)
    assert lasso is not None and lasso.size == 6
    w = gc.lasso_to_witness(lasso)
    assert (w.u, w.v) == ((0,), (0, 0, 0, 1, 0))
    tiny = gc.nonempty(X.a_loop(), gc.Buechi({0}))
    assert tiny is not None and tiny.size == 1 and tiny.trace0 == (0, 0)


def test_accepts_ultimately_periodic():
    aut = X.a_two()
    buechi1 = gc.Buechi({1})
    assert gc.accepts_ultimately_periodic(aut, buechi1, gc.Witness((), (0,)))
    assert not gc.accepts_ultimately_periodic(aut, buechi1, gc.Witness((), (1,)))
    assert gc.accepts_ultimately_periodic(aut, gc.Buechi({0}), gc.Witness((0,), (1, 0)))
    # words leaving the defined transitions are not accepted
    assert not gc.accepts_ultimately_periodic(
        X.a_chain(), X.A_CHAIN_COND, gc.Witness((1,), (0,))
    )


def test_nonempty_none_cases():
    assert gc.nonempty(X.a_two(), gc.Buechi(set())) is None
    assert gc.nonempty(X.a_rabin(), gc.Rabin([({2}, {1})])) is None


def test_nonempty_lassos_are_accepted():
    rng = random.Random(77)
    for kind in randgen.CONDITION_KINDS:
        for _ in range(20):
            aut = randgen.random_automaton(rng)
            cond = randgen.random_condition(rng, kind, aut.state_count)
            lasso = gc.nonempty(aut, cond)
            if lasso is not None:
                game = gc.automaton_to_game(aut, cond)
                assert gc.lasso_valid(game, lasso)
                assert gc.lasso_accepted(cond, lasso)
                w = gc.lasso_to_witness(lasso)
                assert gc.accepts_ultimately_periodic(aut, cond, w)


# ---------------------------------------------------------------------------
# verification and violations


def test_check_strategy_winning_accepts_cover_strategy():
    for flavour in (gc.Safety, gc.Muller):
        game = gc.build_vc_game(X.h1(), flavour)
        s = gc.cover_to_strategy(X.h1(), gc.VertexCover({2}))
        assert gc.check_strategy_winning(game, s) is True


def test_check_strategy_winning_stuck_violation():
    game = gc.build_vc_game(X.h1(), gc.Safety)
    s = gc.cover_to_strategy(X.h1(), gc.VertexCover({2}))
    broken = dict(s.choice)
    broken[3] = 0  # answer edge {2,3} with vertex 1, which it lacks
    res = gc.check_strategy_winning(game, gc.PositionalStrategy(0, broken))
    assert not res
    assert res.stuck and res.lasso is None
    play = gc.run_decisions(game, res.decisions)
    assert not play.stuck
    end = play.v0_trace[-1]
    act = gc.induced_action(game, gc.PositionalStrategy(0, broken), res.decisions)
    assert (end, act) not in game.arena.e0


def test_check_strategy_winning_lasso_violation():
    game = gc.automaton_to_game(X.a_rabin(), gc.Rabin([({1}, {1})]))
    always_b = gc.StandAloneStrategy(1, 0, (1,), ((0,),))
    res = gc.check_strategy_winning(game, always_b)
    assert not res and not res.stuck
    assert gc.lasso_valid(game, res.lasso)
    assert not gc.lasso_accepted(game.condition, res.lasso)


def test_check_strategy_winning_rejects_player1_strategy():
    with pytest.raises(gc.MalformedStrategy):
        gc.check_strategy_winning(X.g_triv(), gc.PositionalStrategy(1, {0: 0}))


def test_player1_strategy_wins():
    g = X.g_stuck()
    sol = gc.solve(g)
    assert sol.winner == 1
    assert gc.player1_strategy_wins(g, sol.strategy)
    assert not gc.player1_strategy_wins(X.g_triv(), gc.PositionalStrategy(1, {0: 0}))


def test_violation_is_falsy():
    res = gc.check_strategy_winning(X.g_fork(), gc.PositionalStrategy(0, {0: 0, 1: 0, 2: 0}))
    assert isinstance(res, gc.Violation)
    assert not res
    assert bool(res) is False


# ---------------------------------------------------------------------------
# the emptiness / universality duality


def test_all_plays_satisfy_dual_to_nonempty():
    rng = random.Random(2026)
    for _ in range(40):
        aut = randgen.random_automaton(rng, max_states=5)
        pairs = [
            (randgen._subset(rng, aut.state_count),
             randgen._subset(rng, aut.state_count))
        ]
        rabin = gc.Rabin(pairs)
        streett = gc.Streett(pairs)
        e0 = {(q, 0): q for q in range(aut.state_count)}
        arena = gc.Arena(
            aut.state_count, aut.state_count, (".",), aut.alphabet,
            e0, dict(aut.delta), aut.init,
        )
        one = gc.OnePlayerGame(
            gc.Game(arena, streett), 1,
            tuple(range(aut.state_count)), tuple(range(aut.state_count)),
        )
        assert (gc.all_plays_satisfy(one) is True) == (gc.nonempty(aut, rabin) is None)


def test_letter_game_matches_word_view():
    g = letter_game()
    sol = gc.solve(g)
    assert sol.winner == 1  # player 1 can keep resetting with b
    assert gc.player1_strategy_wins(g, sol.strategy)
