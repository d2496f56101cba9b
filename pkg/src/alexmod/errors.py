"""Exception hierarchy.

Each error class carries the CLI exit code it maps to, so the front end
never has to enumerate classes.
"""


class AlexmodError(Exception):
    exit_code = 1


class InputError(AlexmodError):
    """Malformed or oversized input (exit 2)."""

    exit_code = 2


class ParseError(InputError):
    def __init__(self, message, text=None, pos=None, line=None, column=None, where=None):
        self.text = text
        self.pos = pos
        self.line = line
        self.column = column
        self.where = where
        super().__init__(self._format(message))

    def _format(self, message):
        parts = []
        if self.where:
            parts.append(str(self.where))
        if self.line is not None:
            parts.append(f"line {self.line}, column {self.column}")
        elif self.pos is not None:
            parts.append(f"column {self.pos + 1}")
        prefix = ": ".join(parts)
        out = f"{prefix}: {message}" if prefix else message
        if self.text is not None and self.pos is not None:
            out += f"\n  {self.text}\n  {' ' * self.pos}^"
        return out


class NotAComplex(InputError):
    pass


class DegenerateInput(InputError):
    pass


class InputTooLarge(InputError):
    pass


class IncompatibleOrders(InputError):
    pass


class MathPreconditionError(AlexmodError):
    """A mathematical precondition failed (exit 3)."""

    exit_code = 3


class NotQuasiUnipotent(MathPreconditionError):
    def __init__(self, factor):
        self.factor = factor
        super().__init__(f"characteristic polynomial has non-cyclotomic factor {factor}")


class NotAnnihilated(MathPreconditionError):
    pass


class EpsilonNotSurjective(MathPreconditionError):
    pass


class EpsilonInconsistent(MathPreconditionError):
    pass


class NoStabilization(MathPreconditionError):
    pass


class HypothesesNotMet(AlexmodError):
    """Hypotheses of the arrangement structure theorem fail (exit 4)."""

    exit_code = 4

    def __init__(self, condition):
        self.condition = condition
        super().__init__(f"hypothesis not met: {condition}")


class Cancelled(AlexmodError):
    pass
