"""Exception hierarchy for the arrowweight package.

Everything raised deliberately by this package derives from
:class:`ArrowWeightError`, so callers can catch one type at the CLI
boundary.  Structured errors (axiom violations, move preconditions)
carry their witness data as attributes rather than only in the message.
"""

from __future__ import annotations


class ArrowWeightError(Exception):
    """Base class for all errors raised by this package."""


# -- algebra ---------------------------------------------------------------

class RangeError(ArrowWeightError):
    """A table entry lies outside 0..n-1 (1..n in rendered form)."""


class AxiomViolation(ArrowWeightError):
    """A biquandle axiom fails.

    Attributes:
        axiom: "i", "ii" or "iii".
        witness: the offending tuple, 1-indexed to match rendered tables.
    """

    def __init__(self, axiom, witness, detail=""):
        self.axiom = axiom
        self.witness = tuple(witness)
        msg = f"biquandle axiom ({axiom}) fails at {self.witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


# -- gauss codes and diagrams ----------------------------------------------

class GaussCodeError(ArrowWeightError):
    """Base class for Gauss-code parse failures."""


class CodeSyntaxError(GaussCodeError):
    """A token does not match [OU]<int>[+-]."""


class LabelError(GaussCodeError):
    """A crossing label does not appear exactly once as O and once as U."""


class SignMismatch(GaussCodeError):
    """The two occurrences of a label carry different signs."""


class DiagramError(ArrowWeightError):
    """Arrow data does not describe a valid Gauss diagram."""


class PreconditionError(ArrowWeightError):
    """A Reidemeister move's geometric precondition fails on the diagram."""


# -- colorings ---------------------------------------------------------------

class SizeError(ArrowWeightError):
    """A coloring has the wrong number of segment colors."""


class InvalidColoring(ArrowWeightError):
    """A coloring violates an arrow constraint."""


# -- weights -----------------------------------------------------------------

class DimensionError(ArrowWeightError):
    """Tensor dimensions do not match the biquandle size."""


class ModulusError(ArrowWeightError):
    """The coefficient modulus is out of range for the operation."""


class WeightAxiomViolation(ArrowWeightError):
    """An arrow-weight axiom fails.

    Attributes:
        axiom: "i", "ii", "iii" or "iv".
        witness: the offending tuple of elements, 1-indexed.
    """

    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"arrow-weight axiom ({axiom}) fails at {self.witness}")


class TooManySolutions(ArrowWeightError):
    """A weight space holds more solutions than the enumeration limit."""


# -- knot tables -------------------------------------------------------------

class TableParseError(ArrowWeightError):
    """A knot table file line cannot be parsed.

    Attributes:
        line_number: 1-indexed line of the offending record.
    """

    def __init__(self, line_number, detail):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {detail}")


class DuplicateName(ArrowWeightError):
    """Two table records share a knot name."""
