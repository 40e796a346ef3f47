"""Exception hierarchy.

Two families matter to callers: MathDomainError for values outside an
operation's domain (singular bodies, points off the quadric, ...) and
StructureError for malformed or mismatched inputs.  The CLI maps them to
exit codes 3 and 2 respectively.
"""

from __future__ import annotations


class SuperspaceError(Exception):
    pass


class MathDomainError(SuperspaceError):
    """Input is well formed but outside the operation's mathematical domain."""


class NotInvertibleError(MathDomainError):
    pass


class NotInBigCellError(MathDomainError):
    pass


class DegeneratePlaneError(MathDomainError):
    pass


class InvalidPointError(MathDomainError):
    pass


class NonHermitianTranslationError(MathDomainError):
    pass


class StructureError(SuperspaceError):
    """Malformed value: wrong shape, wrong parity, mixed algebras, bad syntax."""


class AlgebraMismatchError(StructureError):
    pass


class ShapeMismatchError(StructureError):
    pass


class ParityError(StructureError):
    pass


class PatternError(StructureError):
    pass


class InputFormatError(StructureError):
    pass


class ExprSyntaxError(InputFormatError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos
