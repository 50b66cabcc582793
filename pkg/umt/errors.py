"""
Error types.

Every error raised on bad user input derives from ``UmtError``. The ``kind``
attribute is the stable name printed by the CLI.
"""

from typing import Optional


class UmtError(Exception):
    """
    Base class for all workbench errors.
    """
    kind = "UmtError"


class OutOfRange(UmtError):
    """
    Element index outside ``[0, universe_size)``, or a universe too large.
    """
    kind = "OutOfRange"


class ArityMismatch(UmtError):
    kind = "ArityMismatch"


class DuplicateRelation(UmtError):
    kind = "DuplicateRelation"


class UnknownRelation(UmtError):
    kind = "UnknownRelation"


class NonBinaryOperand(UmtError):
    kind = "NonBinaryOperand"


class StructureSyntaxError(UmtError):
    """
    Malformed structure file or relation expression.
    ``line`` is 1-based, None for expressions.
    """
    kind = "SyntaxError"

    def __init__(self, msg: str, line: Optional[int] = None) -> None:
        self.line = line
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)


class FormulaSyntaxError(UmtError):
    """
    Malformed formula. ``position`` is the 0-based character offset.
    """
    kind = "SyntaxError"

    def __init__(self, msg: str, position: Optional[int] = None) -> None:
        self.position = position
        if position is not None:
            msg = f"at position {position}: {msg}"
        super().__init__(msg)


class AmbiguousMix(FormulaSyntaxError):
    """
    ``&`` and ``|`` mixed without parentheses.
    """
    kind = "AmbiguousMix"


class UnboundVariable(UmtError):
    kind = "UnboundVariable"


class DepthLimit(UmtError):
    kind = "DepthLimit"


class BadMode(UmtError):
    kind = "BadMode"


class BadLevel(UmtError):
    kind = "BadLevel"


class NotDistinguishability(UmtError):
    kind = "NotDistinguishability"


class NotAnOrder(UmtError):
    kind = "NotAnOrder"


class AutLimitExceeded(UmtError):
    kind = "AutLimitExceeded"


class SizeCapExceeded(UmtError):
    kind = "SizeCapExceeded"


class UnknownCampaign(UmtError):
    kind = "UnknownCampaign"


class BadWitness(UmtError):
    """
    A replayed report could not be interpreted.
    """
    kind = "BadWitness"


class SettingError(UmtError):
    kind = "SettingError"
