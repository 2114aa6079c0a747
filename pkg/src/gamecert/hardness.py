"""From vertex covers to minimal strategies and back.

A k-uniform hypergraph turns into a game: player 1 challenges with an
edge, player 0 answers with a vertex of that edge, and the play then
slides down that vertex's private row of |E|+1 stations before being
absorbed at a pair of bottom positions.  Any closed strategy wins (both
in the safety reading and in the Muller reading that asks for the bottom
position alone to recur), so minimizing a winning strategy is exactly
minimizing the set of vertices the strategy ever answers with: each used
vertex charges its whole row.  A strategy built from an inclusion-minimal
cover of size j reaches (|E|+1)*j + |E| + 2 player-0 positions; redundant
covers come in under the formula because the least-vertex answer rule
never visits the superfluous rows.

Position layout is fixed: player-0 positions are the top choice position,
the bottom position, the edge positions in input order, then the vertex
rows in row-major order; player-1 positions mirror this without the edge
block.  Vertices are 1-based in the hypergraph and named by their decimal
digits as actions; edge actions are named e1, e2, and so on; the slide
action on both sides is a dot.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .arena import Arena, Game, Muller, Safety
from .analysis import check_strategy_winning
from .errors import NotACover, NotWinning, SizeLimit
from .strategy import PositionalStrategy

VC_BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class Hypergraph:
    vertex_count: int
    edges: tuple[frozenset[int], ...]
    k: int

    def __init__(self, vertex_count: int, edges, k: int):
        edges = tuple(frozenset(e) for e in edges)
        if vertex_count < 0:
            raise ValueError("vertex count must not be negative")
        if k < 1:
            raise ValueError("edges must have positive cardinality")
        for e in edges:
            if len(e) != k:
                raise ValueError(f"edge {sorted(e)} is not {k}-uniform")
            for v in e:
                if not 1 <= v <= vertex_count:
                    raise ValueError(f"vertex {v} out of range")
        if len(set(edges)) != len(edges):
            raise ValueError("edges must be distinct")
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "k", k)


@dataclass(frozen=True)
class VertexCover:
    cover: frozenset[int]

    def __init__(self, cover):
        object.__setattr__(self, "cover", frozenset(cover))


def is_cover(h: Hypergraph, cover: VertexCover) -> bool:
    return all(e & cover.cover for e in h.edges)


def vc_brute_force(h: Hypergraph) -> VertexCover:
    """A minimum vertex cover, lexicographically least among minimums."""
    if h.vertex_count > VC_BRUTE_FORCE_LIMIT:
        raise SizeLimit(
            f"brute-force covering is limited to {VC_BRUTE_FORCE_LIMIT} vertices"
        )
    for size in range(h.vertex_count + 1):
        for combo in combinations(range(1, h.vertex_count + 1), size):
            cand = VertexCover(combo)
            if is_cover(h, cand):
                return cand
    raise AssertionError("the full vertex set always covers")


def size_formula(edge_count: int, j: int) -> int:
    """Reachable player-0 positions of a strategy using j vertices."""
    return (edge_count + 1) * j + edge_count + 2


def _indexing(h: Hypergraph):
    n, m = h.vertex_count, len(h.edges)

    def edge0(i: int) -> int:
        return 2 + i

    def row0(v: int, j: int) -> int:
        return 2 + m + (v - 1) * (m + 1) + j

    def row1(v: int, j: int) -> int:
        return 2 + (v - 1) * (m + 1) + j

    return n, m, edge0, row0, row1


def build_vc_game(h: Hypergraph, cond_kind: type) -> Game:
    """The reduction game for a hypergraph, safety or Muller flavoured.

    Player-0 positions: 0 is the top position, 1 the absorbing bottom,
    2..m+1 the edge positions in input order, then each vertex's row of
    m+1 stations.  Player-1 positions: 0 the edge-choice position, 1 the
    bottom echo, then the vertex rows.  The Muller flavour accepts
    exactly the plays whose recurring player-0 position is the bottom.
    """
    n, m, edge0, row0, row1 = _indexing(h)
    actions0 = tuple(str(v) for v in range(1, n + 1)) + (".",)
    actions1 = tuple(f"e{i}" for i in range(1, m + 1)) + (".",)
    dot0 = n
    dot1 = m
    e0: dict[tuple[int, int], int] = {}
    e1: dict[tuple[int, int], int] = {}
    e0[(0, dot0)] = 0
    e0[(1, dot0)] = 1
    for i, e in enumerate(h.edges):
        for v in sorted(e):
            e0[(edge0(i), v - 1)] = row1(v, 0)
    for v in range(1, n + 1):
        for j in range(m):
            e0[(row0(v, j), dot0)] = row1(v, j + 1)
        e0[(row0(v, m), dot0)] = 1
    for i in range(m):
        e1[(0, i)] = edge0(i)
    e1[(1, dot1)] = 1
    for v in range(1, n + 1):
        for j in range(m + 1):
            e1[(row1(v, j), dot1)] = row0(v, j)
    arena = Arena(
        v0_count=2 + m + n * (m + 1),
        v1_count=2 + n * (m + 1),
        actions0=actions0,
        actions1=actions1,
        e0=e0,
        e1=e1,
        init=0,
    )
    if cond_kind is Safety:
        cond = Safety()
    elif cond_kind is Muller:
        cond = Muller([frozenset({1})])
    else:
        raise ValueError("the condition kind must be Safety or Muller")
    return Game(arena, cond)


def cover_to_strategy(h: Hypergraph, cover: VertexCover) -> PositionalStrategy:
    """The positional strategy answering each edge with its least cover
    vertex; top, bottom and every slide station take the dot action."""
    if not is_cover(h, cover):
        raise NotACover("some edge misses the given vertex set")
    n, m, edge0, row0, _ = _indexing(h)
    dot0 = n
    choice: dict[int, int] = {0: dot0, 1: dot0}
    for i, e in enumerate(h.edges):
        choice[edge0(i)] = min(e & cover.cover) - 1
    for v in range(1, n + 1):
        for j in range(m + 1):
            choice[row0(v, j)] = dot0
    return PositionalStrategy(0, choice)


def strategy_to_cover(h: Hypergraph, s: PositionalStrategy) -> VertexCover:
    """The vertices a winning strategy answers edges with.

    The strategy is verified first (against the safety flavour; both
    flavours have the same winning strategies on these games) and losing
    or non-closed strategies are rejected.  The resulting set covers h,
    and its size is at most (strategy size - |E| - 2) / (|E| + 1).
    """
    game = build_vc_game(h, Safety)
    if check_strategy_winning(game, s) is not True:
        raise NotWinning("the strategy does not win the reduction game")
    _, m, edge0, _, _ = _indexing(h)
    picked = {s.choice[edge0(i)] + 1 for i in range(m)}
    return VertexCover(picked)
