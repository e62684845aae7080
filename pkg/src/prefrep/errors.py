"""Exception hierarchy shared by every module."""


class PrefrepError(Exception):
    """Base class for all library errors."""


class DuplicateLabel(PrefrepError, ValueError):
    pass


class UnknownElement(PrefrepError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownLabel(UnknownElement):
    pass


class MissingValue(PrefrepError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class TooLarge(PrefrepError, ValueError):
    pass


class ParseError(PrefrepError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Refusal(PrefrepError):
    """The input does not satisfy a mathematical precondition."""


class NotStronglyAcyclic(Refusal):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"relation is not strongly acyclic ({witness.format()})")


class NotPreorder(Refusal):
    pass


class NotSeparating(Refusal):
    pass


class NotPseudoStratification(Refusal):
    pass


class NotRepresentation(Refusal):
    pass
