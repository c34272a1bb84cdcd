"""Exception types shared across the package."""


class InfeasibleParameters(ValueError):
    """The requested parameters admit no object of the requested kind."""


class NotRegular(ValueError):
    """A graph that was required to be regular is not."""


class NotConnected(ValueError):
    """A graph that was required to be connected is not."""


class AnchorNotFound(ValueError):
    """No triple of pairwise disjoint anchor incidences could be selected."""


class ParameterMismatch(ValueError):
    """Operands carry incompatible (r, k) parameters."""


class NotExpressible(ValueError):
    """The requested scale factor is not a combination of the known ones."""


class BudgetExhausted(RuntimeError):
    """A bounded procedure ran out of its node, time or restart budget."""


class NotNumerical(ValueError):
    """The generators do not span a numerical semigroup (gcd is not 1)."""


class NotMember(ValueError):
    """The queried integer does not belong to the semigroup."""
