import pytest
from hypothesis import given
from hypothesis import strategies as st

import gamecert as gc
import instances as X
import strategies as gen
from test_strategy import fork_fm, fork_moore


# ---------------------------------------------------------------------------
# restriction by a positional strategy


def test_restrict_keeps_only_chosen_moves():
    g = X.g8()
    one = gc.restrict_by_positional(g, gc.PositionalStrategy(0, {0: 0, 1: 0}))
    assert one.chooser == 1
    assert set(one.game.arena.e0) == {(0, 0), (1, 0)}
    assert one.game.arena.e1 == g.arena.e1
    assert one.orig0 == tuple(range(g.arena.v0_count))
    assert one.game.condition == g.condition


def test_restrict_rejects_open_or_wrong_player():
    g = X.g8()
    with pytest.raises(gc.MalformedStrategy):
        gc.restrict_by_positional(g, gc.PositionalStrategy(1, {}))
    with pytest.raises(gc.MalformedStrategy):
        gc.restrict_by_positional(g, gc.PositionalStrategy(0, {0: 1}))


def test_build_product_tolerates_gaps():
    g = X.g8()
    one = gc.build_product(g, gc.PositionalStrategy(0, {0: 1}))
    assert set(one.game.arena.e0) == {(0, 1)}
    # position 2 is now a dead end; verification will call that stuck
    assert (2, 0) not in one.game.arena.e0
    with pytest.raises(gc.MalformedStrategy):
        gc.build_product(g, gc.PositionalStrategy(1, {}))


# ---------------------------------------------------------------------------
# memory and Moore products


def test_product_finite_memory_layout():
    g = X.g_fork()
    one = gc.product_finite_memory(g, fork_fm())
    assert one.chooser == 1
    assert len(one.orig0) == len(one.mem0) == 4
    reached = sorted(zip(one.mem0, one.orig0))
    assert reached == [(0, 0), (0, 1), (0, 2), (1, 0)]
    assert gc.all_plays_satisfy(one) is True


def test_product_moore_layout():
    g = X.g_fork()
    one = gc.product_moore(g, fork_moore())
    assert one.chooser == 1
    assert sorted(zip(one.mem0, one.orig0)) == [(0, 0), (1, 1), (2, 0), (3, 2)]
    assert gc.all_plays_satisfy(one) is True


def test_product_moore_playing_unavailable_action_dead_ends():
    g = X.g_fork()
    # a one-state machine that always plays the right branch, which does
    # not exist at positions 1 and 2
    s = gc.StandAloneStrategy(1, 0, (1,), ((0,),))
    one = gc.build_product(g, s)
    res = gc.all_plays_satisfy(one)
    assert res is not True and res.stuck


def test_product_finite_memory_rejects_player1():
    fm = gc.FiniteMemoryStrategy(1, 1, {0: 0}, {(0, 0): 0}, {(0, 0): 0})
    with pytest.raises(gc.MalformedStrategy):
        gc.product_finite_memory(X.g_triv(), fm)


# ---------------------------------------------------------------------------
# condition lifting


def test_lift_condition_by_kind():
    orig0 = (0, 1, 1, 2)
    assert gc.lift_condition(gc.Safety(), orig0) == gc.Safety()
    assert gc.lift_condition(gc.Buechi({1}), orig0) == gc.Buechi({1, 2})
    assert gc.lift_condition(gc.CoBuechi({2}), orig0) == gc.CoBuechi({3})
    assert gc.lift_condition(
        gc.GeneralizedBuechi([{0}, {1}]), orig0
    ) == gc.GeneralizedBuechi([{0}, {1, 2}])
    assert gc.lift_condition(gc.Parity([3, 1, 0]), orig0) == gc.Parity([3, 1, 1, 0])
    assert gc.lift_condition(gc.Rabin([({0, 1}, {1})]), orig0) == gc.Rabin(
        [({0, 1, 2}, {1, 2})]
    )
    assert gc.lift_condition(gc.Streett([({2}, {0})]), orig0) == gc.Streett(
        [({3}, {0})]
    )


def test_lift_muller_enumerates_copy_combinations():
    orig0 = (0, 1, 1)
    lifted = gc.lift_condition(gc.Muller([{0, 1}]), orig0)
    assert lifted.family == frozenset(
        {
            frozenset({0, 1}),
            frozenset({0, 2}),
            frozenset({0, 1, 2}),
        }
    )
    # base sets mentioning positions without a copy disappear
    assert gc.lift_condition(gc.Muller([{5}]), orig0).family == frozenset()


def test_lift_muller_budget():
    orig0 = (0,) * 18
    with pytest.raises(gc.SizeLimit):
        gc.lift_condition(gc.Muller([{0}]), orig0)


@given(
    data=st.data(),
    cond=gen.conditions(4),
    orig0=st.lists(st.integers(0, 3), min_size=1, max_size=6).map(tuple),
)
def test_lift_preserves_acceptance_of_projections(data, cond, orig0):
    prod_set = data.draw(gen.nonempty_subsets(len(orig0)))
    lifted = gc.lift_condition(cond, orig0)
    proj = frozenset(orig0[p] for p in prod_set)
    assert gc.accepts(lifted, prod_set) == gc.accepts(cond, proj)
