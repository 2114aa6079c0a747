"""Winner determination and play checking.

Three groups of operations live here.

Solving: :func:`solve` determines the winner of a game from its initial
position and extracts a winning strategy.  Safety, Buechi, co-Buechi and
parity games, and Rabin games with one pair, are solved directly on a
node-coloured graph with a recursive parity solver; both winners get
positional strategies.  Generalized Buechi games go through a counter
product (the memory waits for one set at a time), Muller games through a
latest-appearance-record product, and Rabin or Streett games with several
pairs through an explicit Muller family first.  Product winners get
finite-memory strategies; a winning player 0 in a Rabin game is then made
positional by fixing one action at a time and re-solving.

One-player checking: :func:`all_plays_satisfy` decides whether every play
of a one-player game for player 1 is won by player 0, returning a stuck
play or a violating lasso otherwise; :func:`nonempty` finds an accepting
lasso of an automaton.  Both walk the one-round graph over player-0
positions and search for cycles of the right shape.

Verification: :func:`check_strategy_winning` builds the product matching
the strategy kind and runs the one-player check on it, translating any
counterexample back to the original game.
"""

from __future__ import annotations

import heapq
import sys
from collections import deque
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .arena import (
    Arena,
    Automaton,
    Buechi,
    CoBuechi,
    Condition,
    Game,
    GeneralizedBuechi,
    Lasso,
    Muller,
    Parity,
    Play,
    Rabin,
    Safety,
    Streett,
    Witness,
    accepts,
    automaton_lasso,
    make_lasso,
    run_decisions,
)
from .errors import MalformedStrategy, NotOnePlayer, SizeLimit
from .product import OnePlayerGame, build_product, lift_condition
from .strategy import (
    FiniteMemoryStrategy,
    PositionalStrategy,
    Strategy,
    _check_shape,
    player_of,
)

LAR_POSITION_LIMIT = 7
EXPLICIT_MULLER_LIMIT = 12
MULLER_CHECK_CALL_BUDGET = 100_000
PRODUCT_NODE_BUDGET = 200_000


@dataclass(frozen=True)
class Solution:
    winner: int
    strategy: Strategy


@dataclass(frozen=True)
class Violation:
    """A play refuting an all-plays claim; falsy so checks read naturally.

    ``stuck`` plays end at a player-0 position with no move; ``lasso``
    violations pump a cycle whose inf-set fails the condition.  Decisions
    are flat alternating action indices replayable on the game the
    violation was found on.
    """

    stuck: bool
    decisions: tuple[int, ...]
    play: Optional[Play] = None
    lasso: Optional[Lasso] = None

    def __bool__(self) -> bool:
        return False


CheckResult = Union[bool, Violation]


# ---------------------------------------------------------------------------
# one-round graphs
#
# For a one-player game for player 1 every reachable player-0 position has
# at most one action, so one round of play is an edge between player-0
# positions labelled by the (player-0, player-1) action pair.  The same
# shape covers automata with single-letter labels.  Searches below want
# deterministic output, so neighbour maps keep the least label per target
# and iteration is sorted throughout.


class _Digraph:
    def __init__(self):
        self.succ: dict[int, dict[int, tuple]] = {}

    def add_node(self, v: int) -> None:
        self.succ.setdefault(v, {})

    def add_edge(self, v: int, w: int, label: tuple) -> None:
        self.add_node(v)
        self.add_node(w)
        cur = self.succ[v].get(w)
        if cur is None or label < cur:
            self.succ[v][w] = label

    def reachable(self, src: int) -> set[int]:
        seen = {src}
        queue = deque([src])
        while queue:
            v = queue.popleft()
            for w in self.succ.get(v, {}):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def best_paths(self, src: int, allowed: Optional[set[int]] = None):
        """Lexicographically least shortest label paths from src.

        Returns {node: (labels tuple)}; src maps to ().
        """
        best: dict[int, tuple] = {}
        heap = [(0, (), src)]
        while heap:
            dist, path, v = heapq.heappop(heap)
            if v in best:
                continue
            best[v] = path
            for w in sorted(self.succ.get(v, {})):
                if allowed is not None and w not in allowed:
                    continue
                if w not in best:
                    heapq.heappush(heap, (dist + 1, path + (self.succ[v][w],), w))
        return best

    def best_cycle(self, v: int, allowed: Optional[set[int]] = None):
        """Least (length, labels) closed walk v -> v of length >= 1."""
        best: dict[int, tuple] = {}
        heap = []
        for w in sorted(self.succ.get(v, {})):
            if allowed is not None and w not in allowed:
                continue
            heapq.heappush(heap, (1, (self.succ[v][w],), w))
        while heap:
            dist, path, u = heapq.heappop(heap)
            if u == v:
                return path
            if u in best:
                continue
            best[u] = path
            for w in sorted(self.succ.get(u, {})):
                if allowed is not None and w not in allowed:
                    continue
                if w == v or w not in best:
                    heapq.heappush(heap, (dist + 1, path + (self.succ[u][w],), w))
        return None

    def covering_cycle(self, nodes: set[int], entry: int):
        """A closed walk from entry visiting exactly the given nodes.

        The node set must be strongly connected within itself (with a
        self-loop when it is a singleton).
        """
        if nodes == {entry}:
            return self.best_cycle(entry, nodes)
        walk: tuple = ()
        cur = entry
        for target in sorted(nodes - {entry}) + [entry]:
            paths = self.best_paths(cur, nodes)
            leg = paths.get(target)
            if leg is None or (cur == target and not leg):
                return None
            walk += leg
            cur = target
        return walk

    def sccs(self, allowed: set[int]) -> list[set[int]]:
        """Strongly connected components of the induced subgraph, sorted
        by their least node; iterative Tarjan."""
        index: dict[int, int] = {}
        low: dict[int, int] = {}
        on_stack: set[int] = set()
        stack: list[int] = []
        out: list[set[int]] = []
        counter = [0]
        for root in sorted(allowed):
            if root in index:
                continue
            work = [(root, iter(sorted(w for w in self.succ.get(root, {}) if w in allowed)))]
            index[root] = low[root] = counter[0]
            counter[0] += 1
            stack.append(root)
            on_stack.add(root)
            while work:
                v, it = work[-1]
                advanced = False
                for w in it:
                    if w not in index:
                        index[w] = low[w] = counter[0]
                        counter[0] += 1
                        stack.append(w)
                        on_stack.add(w)
                        work.append(
                            (w, iter(sorted(u for u in self.succ.get(w, {}) if u in allowed)))
                        )
                        advanced = True
                        break
                    if w in on_stack:
                        low[v] = min(low[v], index[w])
                if advanced:
                    continue
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
                if low[v] == index[v]:
                    comp = set()
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp.add(w)
                        if w == v:
                            break
                    out.append(comp)
        out.sort(key=min)
        return out

    def has_cycle_within(self, nodes: set[int]) -> bool:
        if len(nodes) > 1:
            return True
        v = next(iter(nodes))
        return v in self.succ.get(v, {})

    def strongly_connected(self, nodes: set[int]) -> bool:
        comps = self.sccs(nodes)
        return len(comps) == 1 and comps[0] == nodes


def _digraph_of_automaton(aut: Automaton) -> _Digraph:
    d = _Digraph()
    d.add_node(aut.init)
    for (q, a), t in sorted(aut.delta.items()):
        d.add_edge(q, t, (a,))
    return d


def _one_player_graph(g: OnePlayerGame):
    """One-round graph of a one-player game for player 1.

    Returns (digraph over reachable player-0 positions, stuck positions).
    Raises NotOnePlayer when a reachable player-0 position offers a choice.
    """
    if g.chooser != 1:
        raise NotOnePlayer("player 1 must be the remaining chooser")
    a = g.game.arena
    d = _Digraph()
    d.add_node(a.init)
    stuck = []
    seen = {a.init}
    queue = deque([a.init])
    while queue:
        v = queue.popleft()
        acts = list(a.available0(v))
        if not acts:
            stuck.append(v)
            continue
        if len(acts) > 1:
            raise NotOnePlayer(f"position {v} offers {len(acts)} player-0 actions")
        act = acts[0]
        mid = a.e0[(v, act)]
        for b in a.available1(mid):
            w = a.e1[(mid, b)]
            d.add_edge(v, w, (act, b))
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return d, sorted(stuck)


# ---------------------------------------------------------------------------
# cycle searches
#
# A search returns (stem labels, cycle labels) or None.  Candidates are
# ranked by (total length, stem, cycle); stems use least shortest paths, so
# results are deterministic but not guaranteed globally minimal.


def _rank(stem, cycle):
    return (len(stem) + len(cycle), stem, cycle)


def _cycle_through(d: _Digraph, paths, targets, allowed) -> Optional[tuple]:
    best = None
    for t in sorted(targets):
        stem = paths.get(t)
        if stem is None:
            continue
        cycle = d.best_cycle(t, allowed)
        if cycle is None:
            continue
        cand = (stem, cycle)
        if best is None or _rank(*cand) < _rank(*best):
            best = cand
    return best


def _cycle_with_support(d: _Digraph, paths, support: set[int]) -> Optional[tuple]:
    entries = [v for v in sorted(support) if v in paths]
    if not entries:
        return None
    entry = min(entries, key=lambda v: (len(paths[v]), paths[v]))
    cycle = d.covering_cycle(support, entry)
    if cycle is None:
        return None
    return paths[entry], cycle


def _search_streett_like(d: _Digraph, paths, reach: set[int], pairs):
    """A reachable cycle whose support satisfies every Streett pair,
    by strongly-connected-component refinement."""

    def refine(nodes: set[int]):
        for comp in d.sccs(nodes):
            if not d.has_cycle_within(comp):
                continue
            bad = [
                (f, g)
                for f, g in pairs
                if comp <= f and comp & g
            ]
            if not bad:
                if any(v in paths for v in comp):
                    return comp
                continue
            removed = set()
            for _, g in bad:
                removed |= g
            rest = comp - removed
            if rest:
                found = refine(rest)
                if found is not None:
                    return found
        return None

    comp = refine(set(reach))
    if comp is None:
        return None
    return _cycle_with_support(d, paths, comp)


def _search_rabin_like(d: _Digraph, paths, reach: set[int], pairs):
    """A reachable cycle confined to some F and through its G."""
    best = None
    for f, g in pairs:
        allowed = f & reach
        targets = g & allowed
        for t in sorted(targets):
            stem = paths.get(t)
            if stem is None:
                continue
            cycle = d.best_cycle(t, allowed)
            if cycle is None:
                continue
            cand = (stem, cycle)
            if best is None or _rank(*cand) < _rank(*best):
                best = cand
    return best


def _search_muller_bad_support(d: _Digraph, paths, reach: set[int], family):
    """A reachable cycle whose exact support is outside the family.

    The recursion over strongly connected subsets is exponential in the
    worst case, so it is metered by a call budget rather than a position
    count; benign shapes (few cycles, small families) stay cheap at any
    size.
    """
    memo: set[frozenset[int]] = set()
    calls = [0]

    def rec(comp: set[int]):
        key = frozenset(comp)
        if key in memo:
            return None
        memo.add(key)
        calls[0] += 1
        if calls[0] > MULLER_CHECK_CALL_BUDGET:
            raise SizeLimit("Muller play checking exceeded its budget")
        if d.has_cycle_within(comp) and key not in family:
            return comp
        for v in sorted(comp):
            rest = comp - {v}
            if not rest:
                continue
            for sub in d.sccs(rest):
                if not d.has_cycle_within(sub):
                    continue
                found = rec(sub)
                if found is not None:
                    return found
        return None

    for comp in d.sccs(set(reach)):
        if not d.has_cycle_within(comp):
            continue
        found = rec(comp)
        if found is not None:
            return _cycle_with_support(d, paths, found)
    return None


def _search_accepting(d: _Digraph, init: int, cond: Condition):
    """A reachable lasso accepted by the condition, or None."""
    paths = d.best_paths(init)
    reach = set(paths)
    if isinstance(cond, Safety):
        best = None
        for v in sorted(reach):
            cycle = d.best_cycle(v, reach)
            if cycle is None:
                continue
            cand = (paths[v], cycle)
            if best is None or _rank(*cand) < _rank(*best):
                best = cand
        return best
    if isinstance(cond, Buechi):
        return _cycle_through(d, paths, cond.states & reach, reach)
    if isinstance(cond, CoBuechi):
        allowed = reach - cond.states
        return _cycle_through(d, paths, allowed, allowed)
    if isinstance(cond, GeneralizedBuechi):
        best = None
        for comp in d.sccs(reach):
            if not d.has_cycle_within(comp):
                continue
            if all(comp & f for f in cond.sets):
                cand = _cycle_with_support(d, paths, comp)
                if cand is not None and (best is None or _rank(*cand) < _rank(*best)):
                    best = cand
        return best
    if isinstance(cond, Parity):
        return _search_parity(d, paths, reach, cond.colour, 0)
    if isinstance(cond, Rabin):
        return _search_rabin_like(d, paths, reach, cond.pairs)
    if isinstance(cond, Streett):
        return _search_streett_like(d, paths, reach, cond.pairs)
    if isinstance(cond, Muller):
        best = None
        for f in sorted(cond.family, key=sorted):
            if not f or not (f <= reach):
                continue
            if not d.strongly_connected(set(f)):
                continue
            if not d.has_cycle_within(set(f)):
                continue
            cand = _cycle_with_support(d, paths, set(f))
            if cand is not None and (best is None or _rank(*cand) < _rank(*best)):
                best = cand
        return best
    raise TypeError(f"not a condition: {cond!r}")


def _search_parity(d: _Digraph, paths, reach, colour, wanted_parity):
    best = None
    colours = sorted({colour[v] for v in reach if colour[v] % 2 == wanted_parity})
    for c in colours:
        allowed = {v for v in reach if colour[v] <= c}
        targets = {v for v in allowed if colour[v] == c}
        cand = _cycle_through(d, paths, targets, allowed)
        if cand is not None and (best is None or _rank(*cand) < _rank(*best)):
            best = cand
    return best


def _search_violating(d: _Digraph, init: int, cond: Condition):
    """A reachable lasso rejected by the condition, or None."""
    paths = d.best_paths(init)
    reach = set(paths)
    if isinstance(cond, Safety):
        return None
    if isinstance(cond, Buechi):
        allowed = reach - cond.states
        return _cycle_through(d, paths, allowed, allowed)
    if isinstance(cond, CoBuechi):
        return _cycle_through(d, paths, cond.states & reach, reach)
    if isinstance(cond, GeneralizedBuechi):
        best = None
        for f in cond.sets:
            allowed = reach - f
            cand = _cycle_through(d, paths, allowed, allowed)
            if cand is not None and (best is None or _rank(*cand) < _rank(*best)):
                best = cand
        return best
    if isinstance(cond, Parity):
        return _search_parity(d, paths, reach, cond.colour, 1)
    if isinstance(cond, Rabin):
        return _search_streett_like(d, paths, reach, cond.pairs)
    if isinstance(cond, Streett):
        return _search_rabin_like(d, paths, reach, cond.pairs)
    if isinstance(cond, Muller):
        return _search_muller_bad_support(d, paths, reach, cond.family)
    raise TypeError(f"not a condition: {cond!r}")


# ---------------------------------------------------------------------------
# one-player checking


def all_plays_satisfy(g: OnePlayerGame, cond: Optional[Condition] = None) -> CheckResult:
    """True when player 0 wins every play of a one-player game for player 1.

    Every infinite play must satisfy the condition and no reachable play
    may end at a player-0 position.  On failure the returned violation
    carries a stuck play or a violating lasso of g's own game.
    """
    if cond is None:
        cond = g.game.condition
    d, stuck = _one_player_graph(g)
    a = g.game.arena
    if stuck:
        paths = d.best_paths(a.init)
        reachable_stuck = [v for v in stuck if v in paths]
        if reachable_stuck:
            v = min(reachable_stuck, key=lambda v: (len(paths[v]), paths[v]))
            decisions = tuple(x for pair in paths[v] for x in pair)
            play = run_decisions(g.game, decisions)
            return Violation(True, decisions, play=play)
    found = _search_violating(d, a.init, cond)
    if found is None:
        return True
    stem, cycle = found
    lasso = make_lasso(g.game, stem, cycle)
    decisions = tuple(x for pair in stem + cycle for x in pair)
    return Violation(False, decisions, lasso=lasso)


def nonempty(aut: Automaton, cond: Condition) -> Optional[Lasso]:
    """Some accepting lasso of a deterministic automaton, or None."""
    d = _digraph_of_automaton(aut)
    found = _search_accepting(d, aut.init, cond)
    if found is None:
        return None
    stem, cycle = found
    return automaton_lasso(aut, [a for (a,) in stem], [a for (a,) in cycle])


def accepts_ultimately_periodic(aut: Automaton, cond: Condition, w: Witness) -> bool:
    """Does the automaton accept the infinite word u v^omega?

    Runs u, then iterates v until the period-entry state repeats; the
    inf-set is everything visited during the repeating stretch.  A word
    whose run leaves the defined transitions is not accepted.
    """
    q = aut.init
    for a in w.u:
        q = aut.delta.get((q, a))
        if q is None:
            return False
    seen: dict[int, int] = {}
    segments: list[set[int]] = []
    while q not in seen:
        seen[q] = len(segments)
        visited: set[int] = set()
        cur = q
        for a in w.v:
            cur = aut.delta.get((cur, a))
            if cur is None:
                return False
            visited.add(cur)
        segments.append(visited)
        q = cur
    inf: set[int] = set()
    for segment in segments[seen[q]:]:
        inf |= segment
    return accepts(cond, frozenset(inf))


def check_strategy_winning(game: Game, s: Strategy) -> CheckResult:
    """Verify a player-0 strategy by product construction.

    Returns True, or a Violation whose decisions replay on the original
    game: a lasso whose inf-set fails the condition, or the prefix after
    which the strategy offers no move.
    """
    if player_of(s) != 0:
        raise MalformedStrategy("verification covers player-0 strategies")
    product = build_product(game, s)
    res = all_plays_satisfy(product)
    if res is True:
        return True
    if res.stuck:
        play = run_decisions(game, res.decisions)
        return Violation(True, res.decisions, play=play)
    stem = res.lasso.stem
    cycle = res.lasso.cycle
    lasso = make_lasso(game, stem, cycle)
    return Violation(False, res.decisions, lasso=lasso)


def _p1_one_round_graph(game: Game, s: Strategy):
    """One-round graph over player-0 positions with player 1 fixed.

    Supports positional and finite-memory player-1 strategies.  Nodes are
    (memory, position) pairs indexed densely; the initial node uses memory
    -1 until the first player-1 move resolves the initial memory map.
    Returns (digraph, node payloads, init node, p1_stuck flag).
    """
    a = game.arena
    idx: dict[tuple[int, int], int] = {}

    def node(m: int, v: int) -> int:
        key = (m, v)
        if key not in idx:
            idx[key] = len(idx)
        return idx[key]

    d = _Digraph()
    start_key = (-1, a.init)
    start = node(*start_key)
    d.add_node(start)
    queue = deque([start_key])
    seen = {start_key}
    p1_stuck = False
    while queue:
        m, v = queue.popleft()
        src = node(m, v)
        for act in a.available0(v):
            v1 = a.e0[(v, act)]
            if isinstance(s, PositionalStrategy):
                b = s.choice.get(v1)
                m2 = -1
            else:
                m_here = s.init_memory[v1] if m == -1 else m
                b = s.move.get((m_here, v1))
                m2 = s.update[(m_here, v1)] if b is not None else m_here
            if b is None or (v1, b) not in a.e1:
                p1_stuck = True
                continue
            w = a.e1[(v1, b)]
            d.add_edge(src, node(m2, w), (act, b))
            if (m2, w) not in seen:
                seen.add((m2, w))
                queue.append((m2, w))
    payload = [key for key in idx]
    return d, payload, start, p1_stuck


def player1_strategy_wins(game: Game, s: Strategy) -> bool:
    """Does a player-1 strategy win against every player-0 behaviour?

    Player 1 wins a play when it ends at a player-0 position or its
    infinite inf-set fails the condition, so the strategy wins exactly
    when it is never stuck and no corresponding play is accepting.
    """
    if player_of(s) != 1:
        raise MalformedStrategy("this check covers player-1 strategies")
    _check_shape(game, s)
    d, payload, start, p1_stuck = _p1_one_round_graph(game, s)
    if p1_stuck:
        return False
    orig0 = tuple(v for _, v in payload)
    cond = lift_condition(game.condition, orig0)
    return _search_accepting(d, start, cond) is None


# ---------------------------------------------------------------------------
# parity solving
#
# The internal graph has one node per player-0 position, one per player-1
# position (both possibly paired with solver memory), and two absorbing
# sink nodes encoding the finite-play rule: a stuck player-0 position
# routes to the odd sink, a stuck player-1 position to the even sink.
# Every node therefore has a successor and the recursive solver needs no
# dead-end handling.


class _SolverGraph:
    def __init__(self):
        self.owner: list[int] = []
        self.colour: list[int] = []
        self.succ: list[list[int]] = []
        self.kind: list[int] = []  # 0/1 position nodes, 2 sinks
        self.payload: list = []
        self.action: dict[tuple[int, int], int] = {}

    def new_node(self, owner: int, colour: int, kind: int, payload) -> int:
        self.owner.append(owner)
        self.colour.append(colour)
        self.succ.append([])
        self.kind.append(kind)
        self.payload.append(payload)
        return len(self.owner) - 1

    def add_edge(self, v: int, w: int, action: Optional[int]) -> None:
        if w not in self.succ[v]:
            self.succ[v].append(w)
        if action is not None:
            key = (v, w)
            if key not in self.action or action < self.action[key]:
                self.action[key] = action

    def finish(self) -> None:
        self.succ = [sorted(s) for s in self.succ]
        self.pred: list[list[int]] = [[] for _ in self.succ]
        for v, outs in enumerate(self.succ):
            for w in outs:
                self.pred[w].append(v)
        for p in self.pred:
            p.sort()


def _attractor(g: _SolverGraph, nodes: set[int], player: int, targets: set[int]):
    """Player's attractor to targets within the node set, with choices."""
    attracted = set(targets)
    strat: dict[int, int] = {}
    degree = {
        v: sum(1 for w in g.succ[v] if w in nodes)
        for v in nodes
        if g.owner[v] != player
    }
    queue = deque(sorted(targets))
    while queue:
        u = queue.popleft()
        for v in g.pred[u]:
            if v not in nodes or v in attracted:
                continue
            if g.owner[v] == player:
                attracted.add(v)
                strat[v] = u
                queue.append(v)
            else:
                degree[v] -= 1
                if degree[v] == 0:
                    attracted.add(v)
                    queue.append(v)
    return attracted, strat


def _zielonka(g: _SolverGraph, nodes: set[int]):
    if not nodes:
        return set(), set(), {}, {}
    d = max(g.colour[v] for v in nodes)
    p = d % 2
    top = {v for v in nodes if g.colour[v] == d}
    region, reach_strat = _attractor(g, nodes, p, top)
    rest0, rest1, s0, s1 = _zielonka(g, nodes - region)
    win_p, strat_p = (rest0, s0) if p == 0 else (rest1, s1)
    win_o, strat_o = (rest1, s1) if p == 0 else (rest0, s0)
    if not win_o:
        strat_p = dict(strat_p)
        strat_p.update(reach_strat)
        for v in sorted(top):
            if g.owner[v] == p and v not in strat_p:
                inside = [w for w in g.succ[v] if w in nodes]
                strat_p[v] = inside[0]
        if p == 0:
            return nodes, set(), strat_p, {}
        return set(), nodes, {}, strat_p
    escape, escape_strat = _attractor(g, nodes, 1 - p, win_o)
    r0, r1, t0, t1 = _zielonka(g, nodes - escape)
    final_o = win_o | escape | (r1 if p == 0 else r0)
    strat_final_o = dict(strat_o)
    strat_final_o.update(escape_strat)
    strat_final_o.update(t1 if p == 0 else t0)
    final_p = r0 if p == 0 else r1
    strat_final_p = t0 if p == 0 else t1
    if p == 0:
        return final_p, final_o, strat_final_p, strat_final_o
    return final_o, final_p, strat_final_o, strat_final_p


# ---------------------------------------------------------------------------
# graph builders


def _build_solver_graph(game: Game, colour_of: Callable[[int, object], int],
                        upd: Callable[[object, int], object], init_mem):
    """Breadth-first product of the arena with a deterministic memory.

    ``colour_of(v, mem)`` colours a player-0 node; memory advances by
    ``upd(mem, v)`` when leaving it and rides unchanged through player-1
    nodes, which are colour 0.  Plain solving passes a constant memory.
    """
    a = game.arena
    g = _SolverGraph()
    sink0 = g.new_node(0, 0, 2, None)
    sink1 = g.new_node(0, 1, 2, None)
    g.add_edge(sink0, sink0, None)
    g.add_edge(sink1, sink1, None)
    idx0: dict[tuple, int] = {}
    idx1: dict[tuple, int] = {}

    def node0(v: int, mem) -> int:
        key = (v, mem)
        if key not in idx0:
            idx0[key] = g.new_node(0, colour_of(v, mem), 0, key)
            if len(g.owner) > PRODUCT_NODE_BUDGET:
                raise SizeLimit("solver product exceeds the node budget")
        return idx0[key]

    def node1(v: int, mem) -> int:
        key = (v, mem)
        if key not in idx1:
            idx1[key] = g.new_node(1, 0, 1, key)
            if len(g.owner) > PRODUCT_NODE_BUDGET:
                raise SizeLimit("solver product exceeds the node budget")
        return idx1[key]

    start = node0(a.init, init_mem)
    queue = deque([(a.init, init_mem)])
    seen = {(a.init, init_mem)}
    while queue:
        v, mem = queue.popleft()
        src = idx0[(v, mem)]
        acts = list(a.available0(v))
        if not acts:
            g.add_edge(src, sink1, None)
            continue
        mem2 = upd(mem, v)
        for act in acts:
            v1 = a.e0[(v, act)]
            mid = node1(v1, mem2)
            g.add_edge(src, mid, act)
            acts1 = list(a.available1(v1))
            if not acts1:
                g.add_edge(mid, sink0, None)
                continue
            for b in acts1:
                w = a.e1[(v1, b)]
                dst = node0(w, mem2)
                g.add_edge(mid, dst, b)
                if (w, mem2) not in seen:
                    seen.add((w, mem2))
                    queue.append((w, mem2))
    g.finish()
    return g, start


def _plain_colours(game: Game) -> Callable[[int, object], int]:
    cond = game.condition
    if isinstance(cond, Safety):
        return lambda v, mem: 0
    if isinstance(cond, Buechi):
        return lambda v, mem: 2 if v in cond.states else 1
    if isinstance(cond, CoBuechi):
        return lambda v, mem: 1 if v in cond.states else 0
    if isinstance(cond, Parity):
        return lambda v, mem: cond.colour[v]
    if isinstance(cond, Rabin) and len(cond.pairs) == 1:
        f, g = cond.pairs[0]
        return lambda v, mem: 3 if v not in f else (2 if v in g else 1)
    if isinstance(cond, Streett) and len(cond.pairs) == 1:
        # rejected exactly when the inf-set stays inside F and touches G
        f, g = cond.pairs[0]
        return lambda v, mem: 2 if v not in f else (1 if v in g else 0)
    raise TypeError(f"no direct colouring for {cond!r}")


def _lar_pieces(v0_count: int, family: frozenset[frozenset[int]]):
    """Colouring and update for a latest-appearance-record memory."""
    if v0_count > LAR_POSITION_LIMIT:
        raise SizeLimit(
            f"record-based solving is limited to {LAR_POSITION_LIMIT} player-0 positions"
        )
    init_mem = tuple(range(v0_count))

    def upd(mem, v):
        return (v,) + tuple(x for x in mem if x != v)

    def colour_of(v, mem):
        hit = mem.index(v) + 1
        recent = frozenset(((v,) + tuple(x for x in mem if x != v))[:hit])
        return 2 * hit if recent in family else 2 * hit + 1

    return colour_of, upd, init_mem


def _counter_pieces(sets: tuple[frozenset[int], ...]):
    k = len(sets)

    def upd(mem, v):
        return (mem + 1) % k if v in sets[mem] else mem

    def colour_of(v, mem):
        return 2 if (mem == k - 1 and v in sets[mem]) else 1

    return colour_of, upd, 0


def _explicit_family(game: Game) -> frozenset[frozenset[int]]:
    n = game.arena.v0_count
    if n > EXPLICIT_MULLER_LIMIT:
        raise SizeLimit(
            f"explicit condition expansion is limited to {EXPLICIT_MULLER_LIMIT} positions"
        )
    out = []
    for mask in range(1, 1 << n):
        s = frozenset(v for v in range(n) if mask & (1 << v))
        if accepts(game.condition, s):
            out.append(s)
    return frozenset(out)


# ---------------------------------------------------------------------------
# strategy extraction


def _extract_positional(g: _SolverGraph, strat: dict[int, int], side: set[int],
                        player: int) -> PositionalStrategy:
    choice = {}
    for node, succ in strat.items():
        if g.kind[node] != player or node not in side:
            continue
        act = g.action.get((node, succ))
        if act is None:
            continue
        v, _ = g.payload[node]
        choice[v] = act
    return PositionalStrategy(player, choice)


def _extract_memory(g: _SolverGraph, strat: dict[int, int], side: set[int],
                    player: int, upd, init_mem, game: Game) -> FiniteMemoryStrategy:
    a = game.arena
    mem_ids: dict = {}

    def mid(mem) -> int:
        if mem not in mem_ids:
            mem_ids[mem] = len(mem_ids)
        return mem_ids[mem]

    move: dict[tuple[int, int], int] = {}
    update: dict[tuple[int, int], int] = {}
    if player == 0:
        s0 = mid(init_mem)
        for node, succ in sorted(strat.items()):
            if g.kind[node] != 0 or node not in side:
                continue
            act = g.action.get((node, succ))
            if act is None:
                continue
            v, mem = g.payload[node]
            move[(mid(mem), v)] = act
            update[(mid(mem), v)] = mid(upd(mem, v))
        return FiniteMemoryStrategy(0, len(mem_ids), s0, move, update)
    first = upd(init_mem, a.init)
    s0 = mid(first)
    for node, succ in sorted(strat.items()):
        if g.kind[node] != 1 or node not in side:
            continue
        act = g.action.get((node, succ))
        if act is None:
            continue
        v1, mem = g.payload[node]
        move[(mid(mem), v1)] = act
        w = a.e1[(v1, act)]
        update[(mid(mem), v1)] = mid(upd(mem, w))
    init_map = {v: s0 for v in range(a.v1_count)}
    return FiniteMemoryStrategy(1, len(mem_ids), init_map, move, update)


# ---------------------------------------------------------------------------
# solving


def _solve_graph(game: Game):
    """Build the right solver graph for the condition and run the parity
    solver; returns (graph, start, W0, W1, strat0, strat1, upd, init_mem,
    uses_memory)."""
    cond = game.condition
    if isinstance(cond, (Safety, Buechi, CoBuechi, Parity)) or (
        isinstance(cond, (Rabin, Streett)) and len(cond.pairs) == 1
    ):
        colour_of = _plain_colours(game)
        upd = lambda mem, v: None
        init_mem = None
        uses_memory = False
    elif isinstance(cond, GeneralizedBuechi):
        colour_of, upd, init_mem = _counter_pieces(cond.sets)
        uses_memory = True
    elif isinstance(cond, Muller):
        colour_of, upd, init_mem = _lar_pieces(game.arena.v0_count, cond.family)
        uses_memory = True
    elif isinstance(cond, (Rabin, Streett)):
        family = _explicit_family(game)
        colour_of, upd, init_mem = _lar_pieces(game.arena.v0_count, family)
        uses_memory = True
    else:
        raise TypeError(f"not a condition: {cond!r}")
    old_limit = sys.getrecursionlimit()
    g, start = _build_solver_graph(game, colour_of, upd, init_mem)
    try:
        sys.setrecursionlimit(max(old_limit, 4 * len(g.owner) + 1000))
        w0, w1, s0, s1 = _zielonka(g, set(range(len(g.owner))))
    finally:
        sys.setrecursionlimit(old_limit)
    return g, start, w0, w1, s0, s1, upd, init_mem, uses_memory


def _winner_only(game: Game) -> int:
    g, start, w0, _, _, _, _, _, _ = _solve_graph(game)
    return 0 if start in w0 else 1


def _positionalize_player0(game: Game) -> PositionalStrategy:
    """A positional winning strategy for player 0 by self-reduction:
    fix one action per position, re-solving to keep the win."""
    a = game.arena
    e0 = dict(a.e0)
    for v in range(a.v0_count):
        acts = sorted(act for (u, act) in e0 if u == v)
        if len(acts) <= 1:
            continue
        for act in acts:
            trial = {key: t for key, t in e0.items() if key[0] != v or key[1] == act}
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
                break
        else:
            raise AssertionError("no action preserves the win; solver bug")
    return PositionalStrategy(0, {v: act for (v, act) in e0})


def solve(game: Game) -> Solution:
    """The winner from the initial position and a winning strategy.

    Positional strategies come back for safety, Buechi, co-Buechi, parity
    and single-pair games, and for player 0 in any Rabin game; the other
    condition types yield finite-memory strategies.
    """
    cond = game.condition
    g, start, w0, w1, s0map, s1map, upd, init_mem, uses_memory = _solve_graph(game)
    winner = 0 if start in w0 else 1
    side = w0 if winner == 0 else w1
    strat = s0map if winner == 0 else s1map
    if not uses_memory:
        strategy: Strategy = _extract_positional(g, strat, side, winner)
    elif winner == 0 and isinstance(cond, Rabin):
        strategy = _positionalize_player0(game)
    else:
        strategy = _extract_memory(g, strat, side, winner, upd, init_mem, game)
    return Solution(winner, strategy)
