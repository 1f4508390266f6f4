"""Exception hierarchy shared by every intercheck module."""


class InteractionError(Exception):
    """Base class for all intercheck errors."""


class ParseError(InteractionError, ValueError):
    """Malformed model, multi-trace or formula text."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class TermSyntaxError(ParseError):
    pass


class ArityError(ParseError):
    pass


class UnknownLifeline(ParseError):
    pass


class UnknownMessage(ParseError):
    pass


class MissingComponent(ParseError):
    pass


class DuplicateComponent(ParseError):
    pass


class WrongLifeline(ParseError):
    pass


class MalformedFormula(ParseError):
    pass


class HeadMismatch(InteractionError):
    pass


class InvalidPosition(InteractionError):
    pass


class NotInFrontier(InteractionError):
    pass


class PruneUndefined(InteractionError):
    pass


class BudgetExhausted(InteractionError):
    """The node budget ran out before the verdict was certain."""

    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"node budget of {budget} vertices exhausted before a verdict")


class TooLarge(InteractionError):
    pass
