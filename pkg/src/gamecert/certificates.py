"""Size-minimal lassos and witnesses for automata.

A lasso certifies nonemptiness by exhibiting stem and cycle; a witness is
an ultimately periodic word u v^omega and is never larger than the best
lasso, sometimes much smaller.  For Buechi and Rabin conditions the
minimal lasso size follows from shortest-path arithmetic: the best stem
entry plus the best cycle through an accepting state (confined to a pair's
F-set in the Rabin case).  The other condition types go through a plain
increasing-size search, as does the minimal witness, which has no known
polynomial route.

Tie-breaking is fixed everywhere: smallest total size first, then the stem
in prefix order (a word precedes its extensions), then the cycle letter by
letter.  The approximation scheme trades optimality for time: it searches
exhaustively only up to a logarithmic size bound and otherwise falls back
to the lasso-derived witness, which is then within c^opt of optimal.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import product as iproduct
from typing import Optional

from .arena import (
    Automaton,
    Buechi,
    Condition,
    Lasso,
    Rabin,
    Witness,
    accepts,
    automaton_lasso,
)
from .analysis import accepts_ultimately_periodic, nonempty
from .errors import SizeLimit

EXACT_LASSO_STATE_LIMIT = 14
DEFAULT_BUDGET = 2_000_000


def ceil_log(c: Fraction, n: int) -> int:
    """The least t with c**t >= n, computed exactly."""
    c = Fraction(c)
    if c <= 1:
        raise ValueError("the base must exceed 1")
    if n < 1:
        raise ValueError("the argument must be positive")
    t = 0
    power = Fraction(1)
    while power < n:
        power *= c
        t += 1
    return t


# ---------------------------------------------------------------------------
# distances over the transition graph


def _successors(aut: Automaton) -> dict[int, list[int]]:
    succ: dict[int, list[int]] = {q: [] for q in range(aut.state_count)}
    for (q, _), t in aut.delta.items():
        if t not in succ[q]:
            succ[q].append(t)
    for lst in succ.values():
        lst.sort()
    return succ


def _dist_from(succ: dict[int, list[int]], src: int,
               allowed: Optional[frozenset[int]] = None) -> dict[int, int]:
    dist = {src: 0}
    queue = deque([src])
    while queue:
        q = queue.popleft()
        for t in succ[q]:
            if allowed is not None and t not in allowed:
                continue
            if t not in dist:
                dist[t] = dist[q] + 1
                queue.append(t)
    return dist


def _return_length(succ: dict[int, list[int]], q: int,
                   allowed: Optional[frozenset[int]] = None) -> Optional[int]:
    """The least length of a cycle through q, at least 1."""
    best = None
    for t in succ[q]:
        if allowed is not None and t not in allowed:
            continue
        back = _dist_from(succ, t, allowed).get(q)
        if back is not None and (best is None or 1 + back < best):
            best = 1 + back
    return best


def _min_cycle_lengths(succ: dict[int, list[int]], states) -> dict[int, int]:
    out = {}
    for q in states:
        r = _return_length(succ, q)
        if r is not None:
            out[q] = r
    return out


# ---------------------------------------------------------------------------
# fixed-size realization
#
# Both exact searches and the polynomial size formulas share one
# realization routine: a depth-first search over stems in prefix order
# (stopping before extending), then cycles letter by letter, pruned by
# plain reachability distances.  The first lasso found is the canonical
# one for its size.


def _least_lasso_of_size(aut: Automaton, cond: Condition, size: int,
                         counter: list[int]) -> Optional[Lasso]:
    letters = range(len(aut.alphabet))
    succ = _successors(aut)
    back_dist = {q: _dist_from(succ, q) for q in range(aut.state_count)}
    ret_min = _min_cycle_lengths(succ, range(aut.state_count))
    # cheapest stem-continuation plus cycle from q; prunes stem extension
    comp_min: dict[int, int] = {}
    for q in range(aut.state_count):
        costs = [
            d + ret_min[e] for e, d in back_dist[q].items() if e in ret_min
        ]
        if costs:
            comp_min[q] = min(costs)

    def cycle_from(entry: int, length: int) -> Optional[tuple[int, ...]]:
        path: list[int] = []
        visited: list[int] = []

        def go(cur: int, steps: int) -> bool:
            counter[0] -= 1
            if counter[0] < 0:
                raise SizeLimit("lasso search exceeded its budget")
            if steps == length:
                return cur == entry and accepts(cond, frozenset(visited))
            for a in letters:
                t = aut.delta.get((cur, a))
                if t is None:
                    continue
                left = length - steps - 1
                back = back_dist[t].get(entry)
                if back is None or back > left:
                    continue
                path.append(a)
                visited.append(t)
                if go(t, steps + 1):
                    return True
                path.pop()
                visited.pop()
            return False

        if go(entry, 0):
            return tuple(path)
        return None

    stem: list[int] = []
    found: list[Lasso] = []

    def stems(q: int, length: int) -> bool:
        counter[0] -= 1
        if counter[0] < 0:
            raise SizeLimit("lasso search exceeded its budget")
        rest = size - length
        if rest >= 1 and ret_min.get(q, size + 1) <= rest:
            cycle = cycle_from(q, rest)
            if cycle is not None:
                found.append(automaton_lasso(aut, stem, cycle))
                return True
        if length < size - 1:
            for a in letters:
                t = aut.delta.get((q, a))
                if t is None:
                    continue
                if comp_min.get(t, size + 1) > size - length - 1:
                    continue
                stem.append(a)
                if stems(t, length + 1):
                    return True
                stem.pop()
        return False

    if stems(aut.init, 0):
        return found[0]
    return None


def shortest_lasso_exact(aut: Automaton, cond: Condition,
                         budget: int = DEFAULT_BUDGET) -> Optional[Lasso]:
    """A size-minimal accepting lasso by increasing-size search.

    Works for every condition type; None when the language is empty.
    Limited to small automata, larger ones raise SizeLimit.
    """
    if aut.state_count > EXACT_LASSO_STATE_LIMIT:
        raise SizeLimit(
            f"exact lasso search is limited to {EXACT_LASSO_STATE_LIMIT} states"
        )
    bound = nonempty(aut, cond)
    if bound is None:
        return None
    counter = [budget]
    for size in range(1, bound.size + 1):
        lasso = _least_lasso_of_size(aut, cond, size, counter)
        if lasso is not None:
            return lasso
    raise AssertionError("a lasso of the witnessed size must exist")


def _realize_at(aut: Automaton, cond: Condition, size: Optional[int],
                budget: int) -> Optional[Lasso]:
    if size is None:
        return None
    counter = [budget]
    lasso = _least_lasso_of_size(aut, cond, size, counter)
    if lasso is None:
        raise AssertionError("the computed minimal size is not realizable")
    return lasso


def shortest_lasso_buechi(aut: Automaton, cond: Buechi,
                          budget: int = DEFAULT_BUDGET) -> Optional[Lasso]:
    """A size-minimal accepting lasso of a Buechi automaton.

    The minimal size is shortest-path arithmetic: over every cycle entry v
    and accepting state f, the stem distance to v plus the cheapest cycle
    from v through f.  Realization reuses the canonical fixed-size search.
    """
    if not isinstance(cond, Buechi):
        raise TypeError("this search expects a Buechi condition")
    succ = _successors(aut)
    d0 = _dist_from(succ, aut.init)
    dist = {q: _dist_from(succ, q) for q in range(aut.state_count)}
    best = None
    for v in d0:
        for f in cond.states:
            if v == f:
                ret = _return_length(succ, f)
                cyc = ret
            else:
                there = dist[v].get(f)
                back = dist[f].get(v)
                cyc = None if there is None or back is None else there + back
            if cyc is None:
                continue
            total = d0[v] + cyc
            if best is None or total < best:
                best = total
    return _realize_at(aut, cond, best, budget)


def shortest_lasso_rabin(aut: Automaton, cond: Rabin,
                         budget: int = DEFAULT_BUDGET) -> Optional[Lasso]:
    """A size-minimal accepting lasso of a Rabin automaton.

    Same arithmetic as the Buechi case, but per pair (F, G): the cycle is
    confined to F and must pass through a state of G, so cycle distances
    are measured inside F only.
    """
    if not isinstance(cond, Rabin):
        raise TypeError("this search expects a Rabin condition")
    succ = _successors(aut)
    d0 = _dist_from(succ, aut.init)
    best = None
    for f_set, g_set in cond.pairs:
        inside = {q: _dist_from(succ, q, f_set) for q in f_set}
        for v in f_set:
            if v not in d0:
                continue
            for g in g_set & f_set:
                if v == g:
                    cyc = _return_length(succ, g, f_set)
                else:
                    there = inside[v].get(g)
                    back = inside[g].get(v)
                    cyc = None if there is None or back is None else there + back
                if cyc is None:
                    continue
                total = d0[v] + cyc
                if best is None or total < best:
                    best = total
    return _realize_at(aut, cond, best, budget)


# ---------------------------------------------------------------------------
# witnesses


def lasso_to_witness(lasso: Lasso) -> Witness:
    """The ultimately periodic word spelled by a lasso's own actions."""
    return Witness(
        tuple(a for a, _ in lasso.stem),
        tuple(a for a, _ in lasso.cycle),
    )


def _least_witness_of_size(aut: Automaton, cond: Condition, size: int,
                           counter: list[int]) -> Optional[Witness]:
    letters = range(len(aut.alphabet))

    def u_dfs(u: tuple[int, ...], q: int) -> Optional[Witness]:
        rest = size - len(u)
        for v in iproduct(letters, repeat=rest):
            counter[0] -= 1
            if counter[0] < 0:
                raise SizeLimit("witness search exceeded its budget")
            w = Witness(u, v)
            if accepts_ultimately_periodic(aut, cond, w):
                return w
        if len(u) < size - 1:
            for a in letters:
                t = aut.delta.get((q, a))
                if t is None:
                    continue
                r = u_dfs(u + (a,), t)
                if r is not None:
                    return r
        return None

    return u_dfs((), aut.init)


def shortest_witness_exact(aut: Automaton, cond: Condition,
                           budget: int = DEFAULT_BUDGET) -> Optional[Witness]:
    """A size-minimal accepted witness by increasing-size search.

    None when the language is empty.  The lasso found by the emptiness
    check bounds the size, so the search always terminates; dense
    alphabets may exhaust the budget and raise SizeLimit.
    """
    lasso = nonempty(aut, cond)
    if lasso is None:
        return None
    counter = [budget]
    for size in range(1, lasso.size + 1):
        w = _least_witness_of_size(aut, cond, size, counter)
        if w is not None:
            return w
    raise AssertionError("a witness of the lasso size must exist")


def witness_approx(aut: Automaton, cond: Condition, c: Fraction,
                   budget: int = DEFAULT_BUDGET) -> Optional[Witness]:
    """A witness within the approximation guarantee c ** optimal.

    First the emptiness check yields a witness of some size m; then an
    exhaustive search runs only up to ceil_log(c, m).  Finding something
    there is outright optimal; otherwise the optimum exceeds the bound,
    so m < c ** optimal and the fallback witness satisfies the guarantee.
    """
    c = Fraction(c)
    if c <= 1:
        raise ValueError("the approximation base must exceed 1")
    lasso = nonempty(aut, cond)
    if lasso is None:
        return None
    fallback = lasso_to_witness(lasso)
    limit = min(ceil_log(c, fallback.size), fallback.size)
    counter = [budget]
    for size in range(1, limit + 1):
        w = _least_witness_of_size(aut, cond, size, counter)
        if w is not None:
            return w
    return fallback
