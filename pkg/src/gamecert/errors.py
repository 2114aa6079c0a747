"""Exception types shared across the package."""


class GameCertError(Exception):
    """Base class for all errors raised by this package."""


class NotOnePlayer(GameCertError):
    """The game cannot be read as an automaton (player 1 still has choices)."""


class ActionUnknown(GameCertError):
    """An action index or name does not exist in the arena."""


class MalformedStrategy(GameCertError):
    """A strategy violates a structural requirement (domain, range, closure)."""


class Undefined(GameCertError):
    """A strategy map is queried outside its domain."""


class SizeLimit(GameCertError):
    """An exact search exceeded its step budget or a construction its gate."""


class PlayerZeroLoses(GameCertError):
    """Player 0 has no winning strategy, so no certificate can exist."""


class NotACover(GameCertError):
    """The given vertex set leaves some hyperedge uncovered."""


class NotWinning(GameCertError):
    """The given strategy is not winning, so nothing can be read off it."""


class ParseError(GameCertError):
    """A text artifact could not be parsed.

    Carries the 1-based line and column of the offending token.
    """

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
