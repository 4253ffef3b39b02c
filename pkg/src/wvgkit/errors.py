"""Exception types raised by the library.

Every domain error derives from GameError so callers (and the CLI) can
catch one base class. GameError subclasses ValueError on purpose: these
are all "bad value" conditions.
"""


class GameError(ValueError):
    """Base class for all domain errors."""


class ZeroOrNegativeQuota(GameError):
    """Quota must be at least 1 so the empty coalition loses."""


class QuotaExceedsTotalWeight(GameError):
    """Quota must not exceed the total weight, or nobody can ever win."""


class NegativeWeight(GameError):
    """Weights must be non-negative integers."""


class EmptyPlayerList(GameError):
    """A game needs at least one player."""


class InvalidPlayerId(GameError):
    """Player id outside 1..n, or otherwise not usable here."""


class TooManyPlayersForEnumeration(GameError):
    """Brute-force enumeration refused; the player count exceeds the limit."""


class PartsDoNotSumToWeight(GameError):
    """Split parts must sum exactly to the split player's weight."""


class ZeroPart(GameError):
    """Split parts must be positive integers."""


class SingletonOrEmptyMerge(GameError):
    """Merging needs at least two players; annexation needs a target."""


class WeightTooSmallToSplit(GameError):
    """A weight-1 player has no way to split into two positive parts."""


class ParameterOutOfRange(GameError):
    """A numeric parameter is outside its documented range."""


class ParseError(GameError):
    """Malformed game text. Carries the character position of the problem."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            super().__init__(f"{message} (at position {position})")
        else:
            super().__init__(message)
        self.position = position
