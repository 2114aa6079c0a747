"""Command line front end.

Every subcommand reads artifacts in the text formats of :mod:`.textio`
and emits its result either to stdout or, with ``-o``, to a file.  Human
readable status goes to stderr so artifact output stays clean.  Exit
codes: 0 for a positive result with a re-verified artifact, 1 for an
honest negative answer (player 1 wins, the language is empty, nothing
fits the bound, an artifact fails its check), 2 for usage and parse
errors, 3 when a search budget or size gate is exhausted.

Before exiting 0 a subcommand re-checks what it is about to emit with
the library's own verifier; a claim never leaves this module unchecked.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .analysis import (
    _winner_only,
    accepts_ultimately_periodic,
    check_strategy_winning,
    player1_strategy_wins,
    solve,
)
from .arena import (
    Automaton,
    Buechi,
    Condition,
    Muller,
    Rabin,
    Safety,
    automaton_to_game,
    lasso_accepted,
    lasso_valid,
    validate,
)
from .certificates import (
    shortest_lasso_buechi,
    shortest_lasso_exact,
    shortest_lasso_rabin,
    shortest_witness_exact,
    witness_approx,
)
from .certificates import DEFAULT_BUDGET as WITNESS_BUDGET
from .errors import (
    GameCertError,
    MalformedStrategy,
    NotACover,
    ParseError,
    PlayerZeroLoses,
    SizeLimit,
)
from .hardness import VertexCover, build_vc_game, cover_to_strategy
from .minimize import (
    _min_with_strategy,
    enumeration_winner,
    min_strategy_exact,
    strategy_approx,
)
from .minimize import DEFAULT_BUDGET as SEARCH_BUDGET
from .strategy import StrategyKind, player_of, strategy_size
from . import textio

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


def _say(message: str) -> None:
    print(message, file=sys.stderr)


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read(path: str) -> str:
    return Path(path).read_text()


def _header_of(text: str) -> str:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return line
    raise ParseError("empty input", 1, 1)


def _load_automaton(path: str) -> tuple[Automaton, Condition]:
    return textio.parse_automaton(_read(path))


def _parse_c(text: str) -> Fraction:
    try:
        c = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational: {text!r}", 1, 1) from None
    if c <= 1:
        raise ParseError("the approximation factor must exceed 1", 1, 1)
    return c


# ---------------------------------------------------------------------------
# subcommands


def _cmd_solve(args) -> int:
    game = textio.parse_game(_read(args.game))
    sol = solve(game)
    _say(f"winner: player {sol.winner}")
    if sol.winner == 0:
        assert check_strategy_winning(game, sol.strategy) is True
        _emit(textio.serialize_strategy(game, sol.strategy), args.output)
        return EXIT_OK
    assert player1_strategy_wins(game, sol.strategy)
    _emit(textio.serialize_strategy(game, sol.strategy), args.output)
    return EXIT_NEGATIVE


def _cmd_check(args) -> int:
    context_text = _read(args.context)
    artifact_text = _read(args.artifact)
    context_head = _header_of(context_text)
    artifact_head = _header_of(artifact_text)

    if context_head == "game":
        game = textio.parse_game(context_text)
        cond = game.condition
    elif context_head == "automaton":
        aut, cond = textio.parse_automaton(context_text)
        game = automaton_to_game(aut, cond)
    else:
        raise ParseError(f"context must be a game or automaton, got {context_head!r}", 1, 1)

    if artifact_head.startswith("strategy"):
        try:
            s = textio.parse_strategy(artifact_text, game)
            if player_of(s) == 1:
                ok = player1_strategy_wins(game, s)
                verdict = ok
            else:
                verdict = check_strategy_winning(game, s)
                ok = verdict is True
        except MalformedStrategy as exc:
            _say(f"malformed strategy: {exc}")
            return EXIT_NEGATIVE
        if ok:
            _say("winning")
            return EXIT_OK
        if verdict is False:
            _say("not winning")
        else:
            _say(f"not winning: counterexample with decisions {list(verdict.decisions)}")
        return EXIT_NEGATIVE

    if artifact_head == "lasso":
        lasso = textio.parse_lasso(artifact_text, game)
        if not lasso_valid(game, lasso):
            _say("invalid: the lasso does not replay on this arena")
            return EXIT_NEGATIVE
        if not lasso_accepted(cond, lasso):
            _say("rejected: the cycle's infinity set fails the condition")
            return EXIT_NEGATIVE
        _say("accepted")
        return EXIT_OK

    if artifact_head.startswith("witness"):
        if context_head != "automaton":
            raise ParseError("witness checks need an automaton context", 1, 1)
        w = textio.parse_witness(artifact_text, aut)
        if accepts_ultimately_periodic(aut, cond, w):
            _say("accepted")
            return EXIT_OK
        _say("rejected")
        return EXIT_NEGATIVE

    raise ParseError(f"unknown artifact kind {artifact_head!r}", 1, 1)


def _cmd_minimize(args) -> int:
    game = textio.parse_game(_read(args.game))
    kind = StrategyKind(args.kind)
    try:
        if args.mode == "approx":
            s = strategy_approx(game, kind, _parse_c(args.c),
                                seed=args.seed, budget=args.budget)
        elif args.bound is not None:
            s = min_strategy_exact(game, kind, args.bound, budget=args.budget)
            if s is None:
                _say(f"no winning strategy of kind {args.kind} within bound {args.bound}")
                return EXIT_NEGATIVE
        else:
            found = _min_with_strategy(game, kind, budget=args.budget)
            if found is None:
                if _winner_only(game) != 0:
                    _say("player 1 wins this game")
                else:
                    _say(f"player 0 wins, but not with a strategy of kind {args.kind}")
                return EXIT_NEGATIVE
            s = found[1]
    except PlayerZeroLoses:
        _say("player 1 wins this game")
        return EXIT_NEGATIVE
    assert check_strategy_winning(game, s) is True
    _say(f"size: {strategy_size(game, s)}")
    _emit(textio.serialize_strategy(game, s), args.output)
    return EXIT_OK


def _cmd_lasso(args) -> int:
    aut, cond = _load_automaton(args.automaton)
    if args.mode == "shortest" and isinstance(cond, Buechi):
        lasso = shortest_lasso_buechi(aut, cond, budget=args.budget)
    elif args.mode == "shortest" and isinstance(cond, Rabin):
        lasso = shortest_lasso_rabin(aut, cond, budget=args.budget)
    else:
        lasso = shortest_lasso_exact(aut, cond, budget=args.budget)
    if lasso is None:
        _say("the language is empty")
        return EXIT_NEGATIVE
    game = automaton_to_game(aut, cond)
    assert lasso_valid(game, lasso) and lasso_accepted(cond, lasso)
    _say(f"size: {lasso.size}")
    _emit(textio.serialize_lasso(game, lasso), args.output)
    return EXIT_OK


def _cmd_witness(args) -> int:
    aut, cond = _load_automaton(args.automaton)
    if args.mode == "approx":
        w = witness_approx(aut, cond, _parse_c(args.c), budget=args.budget)
    else:
        w = shortest_witness_exact(aut, cond, budget=args.budget)
    if w is None:
        _say("the language is empty")
        return EXIT_NEGATIVE
    assert accepts_ultimately_periodic(aut, cond, w)
    _say(f"size: {w.size}")
    _emit(textio.serialize_witness(aut, w), args.output)
    return EXIT_OK


def _cmd_gen_vc(args) -> int:
    h = textio.parse_hypergraph(_read(args.hypergraph))
    flavour = Muller if args.flavour == "muller" else Safety
    game = build_vc_game(h, flavour)
    if args.cover is not None:
        vertices = frozenset(int(tok) for tok in args.cover.split(",") if tok)
        try:
            s = cover_to_strategy(h, VertexCover(vertices))
        except (NotACover, ValueError) as exc:
            _say(f"not a cover: {exc}")
            return EXIT_NEGATIVE
        assert check_strategy_winning(game, s) is True
        _emit(textio.serialize_strategy(game, s), args.output)
        return EXIT_OK
    assert validate(game) == []
    _emit(textio.serialize_game(game), args.output)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    game = textio.parse_game(_read(args.game))
    winner = enumeration_winner(game)
    _say(f"winner: player {winner}")
    return EXIT_OK if winner == 0 else EXIT_NEGATIVE


def _cmd_report(args) -> int:
    from . import report

    paths = report.write_report(Path(args.outdir), seed=args.seed,
                                max_vertices=args.max_vertices)
    for p in paths:
        _say(str(p))
    return EXIT_OK


# ---------------------------------------------------------------------------
# wiring


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="gamecert",
        description="solve, verify, minimize and approximate certificates "
                    "for games and automata with omega-regular conditions",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide the winner and emit a winning strategy")
    p.add_argument("game")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("check", help="verify an artifact against a game or automaton")
    p.add_argument("context", help="game or automaton file")
    p.add_argument("artifact", help="strategy, lasso or witness file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("minimize", help="find a small winning strategy for player 0")
    p.add_argument("game")
    p.add_argument("--kind", choices=["positional", "memory", "moore"],
                   default="positional")
    p.add_argument("--mode", choices=["exact", "approx"], default="exact")
    p.add_argument("--bound", type=int)
    p.add_argument("--c", default="2", help="approximation factor, a rational like 3/2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=SEARCH_BUDGET)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("lasso", help="emit a small accepting lasso of an automaton")
    p.add_argument("automaton")
    p.add_argument("--mode", choices=["exact", "shortest"], default="shortest")
    p.add_argument("--budget", type=int, default=WITNESS_BUDGET)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_lasso)

    p = sub.add_parser("witness", help="emit a small ultimately periodic word")
    p.add_argument("automaton")
    p.add_argument("--mode", choices=["exact", "approx"], default="exact")
    p.add_argument("--c", default="2", help="approximation factor, a rational like 3/2")
    p.add_argument("--budget", type=int, default=WITNESS_BUDGET)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("gen-vc", help="build the cover game of a hypergraph")
    p.add_argument("hypergraph")
    p.add_argument("--flavour", choices=["safety", "muller"], default="safety")
    p.add_argument("--cover", help="comma separated vertices; emit their strategy instead")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen_vc)

    p = sub.add_parser("oracle", help="decide the winner by strategy enumeration")
    p.add_argument("game")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("report", help="benchmark the cover family; write CSV and figures")
    p.add_argument("outdir")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-vertices", type=int, default=5)
    p.set_defaults(func=_cmd_report)

    return top


def main(argv: Optional[list[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _say(f"parse error: {exc}")
        return EXIT_USAGE
    except FileNotFoundError as exc:
        _say(f"no such file: {exc.filename}")
        return EXIT_USAGE
    except SizeLimit as exc:
        _say(f"budget exhausted: {exc}")
        return EXIT_LIMIT
    except GameCertError as exc:
        _say(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
