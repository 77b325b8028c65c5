"""Exception hierarchy shared by every ordopoly module."""


class OrdopolyError(Exception):
    """Base class for all errors raised by this package."""


class PosetError(OrdopolyError, ValueError):
    pass


class CycleError(PosetError):
    """The supplied relation contains a directed cycle."""


class NotNaturalError(PosetError):
    """A relation a < b has label a greater than label b."""

    def __init__(self, pairs):
        self.pairs = sorted(pairs)
        super().__init__(
            "labeling is not natural; offending relations: "
            + ", ".join(f"{a}<{b}" for a, b in self.pairs)
        )


class LabelOutOfRange(PosetError):
    pass


class ParseError(PosetError):
    pass


class NotAnExtensionError(OrdopolyError, ValueError):
    pass


class NotDeletableError(OrdopolyError, ValueError):
    def __init__(self, labels):
        self.labels = sorted(labels)
        super().__init__(
            "labels are not deletable: " + ", ".join(map(str, self.labels))
        )


class NonTerminating(OrdopolyError, ValueError):
    """Hypergeometric series whose numerator parameter is not a non-positive integer."""


class GuardExceeded(OrdopolyError):
    """An exhaustive routine was asked to run beyond its size guard."""


class BudgetExceeded(OrdopolyError):
    """Extension enumeration hit its budget.

    ``count`` is the number of extensions processed before stopping and
    ``partial`` the (des, fixed) histogram accumulated so far.
    """

    def __init__(self, budget, count, partial=None):
        self.budget = budget
        self.count = count
        self.partial = dict(partial or {})
        super().__init__(
            f"enumeration budget of {budget} extensions exceeded "
            f"(processed {count}, {len(self.partial)} table cells filled)"
        )


class VerificationError(OrdopolyError):
    """Two independent routes to the same quantity disagreed."""

    def __init__(self, message, counterexample=None):
        self.counterexample = counterexample
        super().__init__(message)
