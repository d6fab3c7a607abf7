"""
Exception hierarchy for the Fujiki orbifold toolkit.

Every error derives from ``ValueError`` so callers that only guard against
bad input keep working; the CLI maps ``FujikiError`` to exit status 2.
"""


class FujikiError(ValueError):
    """Base class for all input and consistency errors."""


class PermutationParseError(FujikiError):
    """Malformed cycle notation, repeated point or point outside the degree."""


class DegreeMismatchError(FujikiError):
    """Two permutations (or a permutation and a group) of different degrees."""


class GroupError(FujikiError):
    """A generator list or subgroup that violates a group-level precondition."""


class InvolutionError(FujikiError):
    """A map that is not an order-2 automorphism, or an invalid request."""


class InadmissibleGroupError(FujikiError):
    """The singularity census was asked for a group it does not cover."""


class BudgetError(FujikiError):
    """A coset count exceeded the specific-fixed-point budget of its element."""


class IntegralityError(FujikiError):
    """A census sum divided by |G| was not an integer."""


class CatalogError(FujikiError):
    """Catalog schema violation or failed load-time invariant."""
