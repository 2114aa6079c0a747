"""Certificates for games and automata with omega-regular conditions.

The package decides who wins an alternating game, verifies and emits
witnesses for the answer (accepting lassos, ultimately periodic words,
winning strategies in three shapes), minimizes those witnesses exactly
or within an approximation factor, and generates the family of cover
games that ties strategy size to vertex cover.
"""

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
    arena_size,
    as_automaton,
    automaton_lasso,
    automaton_to_game,
    condition_kind,
    lasso_accepted,
    lasso_inf_set,
    lasso_valid,
    make_lasso,
    run_decisions,
    validate,
)
from .errors import (
    ActionUnknown,
    GameCertError,
    MalformedStrategy,
    NotACover,
    NotOnePlayer,
    NotWinning,
    ParseError,
    PlayerZeroLoses,
    SizeLimit,
    Undefined,
)
from .strategy import (
    FiniteMemoryStrategy,
    PositionalStrategy,
    StandAloneStrategy,
    Strategy,
    StrategyKind,
    finite_memory_well_formed,
    induced_action,
    kind_of,
    memory_to_positional,
    player_of,
    positional_to_memory,
    positional_well_formed,
    strategy_size,
    well_formed,
)
from .product import (
    OnePlayerGame,
    build_product,
    lift_condition,
    product_finite_memory,
    product_moore,
    restrict_by_positional,
)
from .analysis import (
    Solution,
    Violation,
    accepts_ultimately_periodic,
    all_plays_satisfy,
    check_strategy_winning,
    nonempty,
    player1_strategy_wins,
    solve,
)
from .certificates import (
    ceil_log,
    lasso_to_witness,
    shortest_lasso_buechi,
    shortest_lasso_exact,
    shortest_lasso_rabin,
    shortest_witness_exact,
    witness_approx,
)
from .minimize import (
    enumeration_winner,
    initial_strategy,
    memory_candidates,
    min_strategy_exact,
    min_strategy_size,
    moore_candidates,
    positional_candidates,
    strategy_approx,
)
from .hardness import (
    Hypergraph,
    VertexCover,
    build_vc_game,
    cover_to_strategy,
    is_cover,
    size_formula,
    strategy_to_cover,
    vc_brute_force,
)
from .textio import (
    parse_automaton,
    parse_game,
    parse_hypergraph,
    parse_lasso,
    parse_strategy,
    parse_witness,
    serialize_automaton,
    serialize_game,
    serialize_hypergraph,
    serialize_lasso,
    serialize_strategy,
    serialize_witness,
)

__version__ = "0.1.0"

__all__ = [
    "Arena", "Automaton", "Buechi", "CoBuechi", "Condition", "Game",
    "GeneralizedBuechi", "Lasso", "Muller", "Parity", "Play", "Rabin",
    "Safety", "Streett", "Witness", "accepts", "arena_size",
    "as_automaton", "automaton_lasso", "automaton_to_game",
    "condition_kind", "lasso_accepted", "lasso_inf_set", "lasso_valid",
    "make_lasso", "run_decisions", "validate",
    "ActionUnknown", "GameCertError", "MalformedStrategy", "NotACover",
    "NotOnePlayer", "NotWinning", "ParseError", "PlayerZeroLoses",
    "SizeLimit", "Undefined",
    "FiniteMemoryStrategy", "PositionalStrategy", "StandAloneStrategy",
    "Strategy", "StrategyKind", "finite_memory_well_formed",
    "induced_action", "kind_of", "memory_to_positional", "player_of",
    "positional_to_memory", "positional_well_formed", "strategy_size",
    "well_formed",
    "OnePlayerGame", "build_product", "lift_condition",
    "product_finite_memory", "product_moore", "restrict_by_positional",
    "Solution", "Violation", "accepts_ultimately_periodic",
    "all_plays_satisfy", "check_strategy_winning", "nonempty",
    "player1_strategy_wins", "solve",
    "ceil_log", "lasso_to_witness", "shortest_lasso_buechi",
    "shortest_lasso_exact", "shortest_lasso_rabin",
    "shortest_witness_exact", "witness_approx",
    "enumeration_winner", "initial_strategy", "memory_candidates",
    "min_strategy_exact", "min_strategy_size", "moore_candidates",
    "positional_candidates", "strategy_approx",
    "Hypergraph", "VertexCover", "build_vc_game", "cover_to_strategy",
    "is_cover", "size_formula", "strategy_to_cover", "vc_brute_force",
    "parse_automaton", "parse_game", "parse_hypergraph", "parse_lasso",
    "parse_strategy", "parse_witness", "serialize_automaton",
    "serialize_game", "serialize_hypergraph", "serialize_lasso",
    "serialize_strategy", "serialize_witness",
]
