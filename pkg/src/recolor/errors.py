from __future__ import annotations


class RecolorError(Exception):
    """Base class for all errors raised by this package."""


class InternalInvariantError(RecolorError):
    """A property that the construction guarantees did not hold.

    Seeing this means a planner bug, never bad input.
    """


class PlannerInapplicable(RecolorError):
    """The instance is outside the graph class a planner handles."""


class ReplayError(RecolorError):
    """A recoloring step produced an improper or off-list coloring.

    ``index`` is the 0-based position of the offending step and ``edge`` the
    monochromatic edge (``None`` when the color is not in the vertex list).
    ``prefix`` holds the steps applied up to and including the bad one.
    """

    def __init__(self, message, index, edge=None, prefix=()):
        super().__init__(message)
        self.index = index
        self.edge = edge
        self.prefix = tuple(prefix)


class BudgetExceeded(RecolorError):
    """The oracle would need to enumerate more colorings than allowed."""

    def __init__(self, budget):
        super().__init__(f"state budget of {budget} colorings exceeded")
        self.budget = budget


class Unreachable(RecolorError):
    """The target coloring is not reachable from the source."""
