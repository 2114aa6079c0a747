import itertools
import random

import pytest

import gamecert as gc
import instances as X
import randgen

POS = gc.StrategyKind.POSITIONAL
MEM = gc.StrategyKind.FINITE_MEMORY
MOORE = gc.StrategyKind.STAND_ALONE


# ---------------------------------------------------------------------------
# exact minimization, frozen values


def test_min_strategy_size_frozen():
    assert gc.min_strategy_size(X.g_triv(), POS) == 1
    h1_game = gc.build_vc_game(X.h1(), gc.Safety)
    assert gc.min_strategy_size(h1_game, POS) == 7
    k3_game = gc.build_vc_game(X.k3(), gc.Safety)
    assert gc.min_strategy_size(k3_game, POS) == 13
    assert gc.min_strategy_size(X.g8(), POS) == 2
    assert gc.min_strategy_size(X.g_fork(), POS) is None
    assert gc.min_strategy_size(X.g_fork(), MEM) == 4
    assert gc.min_strategy_size(X.g_fork(), MOORE) == 4


def test_min_strategy_exact_respects_bound():
    h1_game = gc.build_vc_game(X.h1(), gc.Safety)
    best = gc.min_strategy_exact(h1_game, POS, bound=7)
    assert best is not None
    assert gc.strategy_size(h1_game, best) == 7
    assert gc.check_strategy_winning(h1_game, best) is True
    assert gc.min_strategy_exact(h1_game, POS, bound=6) is None
    with pytest.raises(ValueError):
        gc.min_strategy_exact(h1_game, POS, bound=0)


def test_min_strategy_exact_is_deterministic():
    g = X.g_fork()
    assert gc.min_strategy_exact(g, MEM, 4) == gc.min_strategy_exact(g, MEM, 4)


def test_min_strategy_moore_on_word_game():
    game = gc.automaton_to_game(X.a_two(), gc.Buechi({1}))
    best = gc.min_strategy_exact(game, MOORE, bound=1)
    assert best is not None and best.moore_state_count == 1
    assert gc.check_strategy_winning(game, best) is True


def test_min_strategy_player_zero_loses():
    with pytest.raises(gc.PlayerZeroLoses):
        gc.min_strategy_size(X.g_stuck(), POS)
    lost = gc.Game(X.g_triv().arena, gc.Buechi(set()))
    with pytest.raises(gc.PlayerZeroLoses):
        gc.min_strategy_size(lost, MEM)


def test_min_strategy_budget_gate():
    with pytest.raises(gc.SizeLimit):
        gc.min_strategy_size(X.g_triv(), POS, budget=0)


def test_memory_never_beats_positional_on_plain_conditions():
    rng = random.Random(88)
    hits = 0
    for _ in range(25):
        game = randgen.random_game(rng, "parity", max_pos=3)
        try:
            p = gc.min_strategy_size(game, POS)
        except gc.PlayerZeroLoses:
            continue
        hits += 1
        assert gc.min_strategy_size(game, MEM) == p
    assert hits > 0


# ---------------------------------------------------------------------------
# candidate streams


def brute_positional_count(game: gc.Game) -> int:
    """Reachable-closure count of choice maps, the slow way.

    Enumerates every full assignment over positions that offer actions,
    walks the closure from the initial position, drops assignments whose
    closure reaches a dead position, and dedupes by the restriction to
    the closure.
    """
    a = game.arena
    per_pos = {
        pos: acts
        for pos in range(a.v0_count)
        if (acts := sorted(act for (v, act) in a.e0 if v == pos))
    }
    reachable = set()
    for picks in itertools.product(*per_pos.values()):
        combo = dict(zip(per_pos, picks))
        frontier = [a.init]
        seen = set()
        dead = False
        while frontier:
            v = frontier.pop()
            if v in seen:
                continue
            seen.add(v)
            if v not in combo:
                dead = True
                break
            mid = a.e0[(v, combo[v])]
            for b in a.available1(mid):
                frontier.append(a.e1[(mid, b)])
        if not dead:
            reachable.add(tuple(sorted((v, combo[v]) for v in seen)))
    return len(reachable)


def test_positional_candidates_complete_and_unique():
    rng = random.Random(17)
    for _ in range(20):
        game = randgen.random_game(rng, "safety", max_pos=3)
        cands = list(gc.positional_candidates(game, 0))
        keys = {tuple(sorted(s.choice.items())) for s in cands}
        assert len(keys) == len(cands)
        for s in cands:
            assert gc.positional_well_formed(game, s)
        assert len(cands) == brute_positional_count(game)


def test_candidate_cap_prunes_by_size():
    g = X.g8()
    capped = [c for c in gc.positional_candidates(g, 0, [2])]
    assert capped
    assert all(gc.strategy_size(g, s) <= 2 for s in capped)
    sizes = {gc.strategy_size(g, s) for s in gc.positional_candidates(g, 0)}
    assert sizes == {2, 8}


def test_memory_candidates_shapes():
    g = X.g_fork()
    cands = list(gc.memory_candidates(g, 0, 2, [4]))
    assert cands
    seen = set()
    for s in cands:
        assert s.memory_count <= 2
        assert gc.finite_memory_well_formed(g, s)
        key = (s.memory_count, tuple(sorted(s.move.items())),
               tuple(sorted(s.update.items())))
        assert key not in seen
        seen.add(key)
    assert any(gc.check_strategy_winning(g, s) is True for s in cands)


def test_unit_memory_candidates_match_positional():
    g = X.g8()
    pos_sizes = sorted(gc.strategy_size(g, s)
                       for s in gc.positional_candidates(g, 0))
    mem_sizes = sorted(gc.strategy_size(g, s)
                       for s in gc.memory_candidates(g, 0, 1))
    assert pos_sizes == mem_sizes


def test_moore_candidates_count_single_state():
    g = X.g_fork()
    singles = [s for s in gc.moore_candidates(g, 1)]
    assert len(singles) == len(g.arena.actions0)
    for s in singles:
        assert s.moore_state_count == 1
        assert s.trans == ((0,),)


def test_moore_candidates_unique_and_capped():
    g = X.g_fork()
    seen = set()
    for s in gc.moore_candidates(g, 2):
        assert s.moore_state_count <= 2
        key = (s.label, s.trans)
        assert key not in seen
        seen.add(key)
    assert len(seen) > len(g.arena.actions0)


# ---------------------------------------------------------------------------
# exhaustive minimum against direct enumeration


def test_min_size_matches_direct_enumeration():
    rng = random.Random(23)
    done = 0
    for _ in range(30):
        game = randgen.random_game(rng, "buchi", max_pos=3)
        winning = [
            gc.strategy_size(game, s)
            for s in gc.positional_candidates(game, 0)
            if gc.check_strategy_winning(game, s) is True
        ]
        try:
            got = gc.min_strategy_size(game, POS)
        except gc.PlayerZeroLoses:
            assert not winning
            continue
        done += 1
        assert got == min(winning)
    assert done > 0


def test_enumeration_winner_agrees_with_solve():
    rng = random.Random(9)
    for kind in randgen.CONDITION_KINDS:
        for _ in range(6):
            game = randgen.random_game(rng, kind, max_pos=3)
            assert gc.enumeration_winner(game) == gc.solve(game).winner
    assert gc.enumeration_winner(X.g_stuck()) == 1


# ---------------------------------------------------------------------------
# greedy and approximation


def test_initial_strategy_always_wins():
    for seed in range(8):
        for game in (X.g_triv(), X.g_fork(), gc.build_vc_game(X.h1(), gc.Safety)):
            s = gc.initial_strategy(game, seed)
            assert gc.check_strategy_winning(game, s) is True


def test_initial_strategy_can_miss_the_optimum():
    g = X.g8()
    greedy = gc.initial_strategy(g, X.G8_LONG_SEED)
    assert gc.strategy_size(g, greedy) == 8
    assert gc.check_strategy_winning(g, greedy) is True


def test_initial_strategy_raises_on_lost_games():
    with pytest.raises(gc.PlayerZeroLoses):
        gc.initial_strategy(X.g_stuck())


def test_strategy_approx_repairs_bad_greedy():
    g = X.g8()
    s = gc.strategy_approx(g, POS, 2, seed=X.G8_LONG_SEED)
    assert gc.strategy_size(g, s) == 2


def test_strategy_approx_guarantee():
    rng = random.Random(3)
    count = 0
    for _ in range(30):
        game = randgen.random_game(rng, "safety", max_pos=4)
        try:
            opt = gc.min_strategy_size(game, POS)
        except gc.PlayerZeroLoses:
            continue
        count += 1
        s = gc.strategy_approx(game, POS, 2, seed=1)
        assert gc.check_strategy_winning(game, s) is True
        assert gc.strategy_size(game, s) <= 2 ** opt
    assert count > 0


def test_strategy_approx_arguments():
    with pytest.raises(ValueError):
        gc.strategy_approx(X.g_triv(), POS, 1)
    with pytest.raises(gc.PlayerZeroLoses):
        gc.strategy_approx(X.g_stuck(), POS, 2)
