"""Exception types raised by the library.

Every error that signals a domain condition (a tie, an infeasible rule, a
singular matrix) derives from :class:`BRError`; the CLI maps those to exit
status 1.
"""


class BRError(Exception):
    """Base class for domain errors."""


class DimensionError(BRError, ValueError):
    """Sizes of games, rules, graphs or configurations do not agree."""


class TieError(BRError):
    """Two strategies are tied as best response to a local profile."""

    def __init__(self, profile, strategies):
        self.profile = tuple(profile)
        self.strategies = tuple(strategies)
        super().__init__(
            f"strategies {self.strategies} tie as best response to {self.profile}"
        )


class InfeasibleError(BRError):
    """No payoff matrix induces the requested update rule."""


class SingularError(BRError):
    """A matrix that must be invertible is singular."""


class DegenerateError(BRError):
    """The Nash point normalizer vanishes."""


class PatternError(BRError, ValueError):
    """A ray target matrix does not have the required column pattern."""


class CensusTooLarge(BRError):
    """The rule space exceeds the configured enumeration bound."""
