"""Exception hierarchy shared by the polyan modules."""


class PolyanError(Exception):
    """Base class for all errors raised by polyan."""


class PreconditionError(PolyanError, ValueError):
    """A standing assumption of the theory is violated (e.g. an even q_0)."""


class ReducibleError(PreconditionError):
    """The operation needs Q(t) mod 2 to be irreducible and it is not."""


class NotInvertibleError(PolyanError, ArithmeticError):
    """The element has no inverse in Z_{2^w}[t]/Q(t)."""


class ConditionConflict(PolyanError):
    """Both Q(t) and Q(-t) satisfy Condition S for an irreducible Q."""


class BudgetExhausted(PolyanError):
    """A brute-force search ran out of steps before finding an answer."""
