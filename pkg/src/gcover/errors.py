"""Exception hierarchy.

Every domain failure raised by the library derives from `GcoverError`, so
callers (and the CLI) can separate domain errors from programming errors.
Exceptions may carry a ``details`` mapping with machine-readable context,
typically a concrete witness.
"""

from __future__ import annotations


class GcoverError(Exception):
    def __init__(self, message: str = "", **details):
        super().__init__(message)
        self.details = details


# -- groups
class NotAPermutation(GcoverError, ValueError):
    pass


class GroupTooLarge(GcoverError):
    pass


class MixedGroups(GcoverError, ValueError):
    pass


# -- complexes
class IndexOutOfRange(GcoverError, ValueError):
    pass


class EmptySimplex(GcoverError, ValueError):
    pass


class DuplicateVertex(GcoverError, ValueError):
    pass


class NotAGraph(GcoverError, ValueError):
    pass


class NotASubcomplex(GcoverError, ValueError):
    pass


# -- actions
class NotAHomomorphism(GcoverError, ValueError):
    pass


class NotSimplicial(GcoverError, ValueError):
    pass


class NotRegular(GcoverError):
    pass


class MultiEdge(GcoverError):
    pass


class NotConnected(GcoverError, ValueError):
    pass


# -- surfaces
class InvalidBranchingData(GcoverError, ValueError):
    pass


class NotASurface(GcoverError, ValueError):
    pass


class BranchVertexMissing(GcoverError, ValueError):
    pass


class InvalidGeneratingVector(GcoverError, ValueError):
    pass


class VerificationFailed(GcoverError):
    pass


class SearchBudgetExceeded(GcoverError):
    pass


class CaseNotCovered(GcoverError):
    pass


# -- bound evaluators
class EmptyDegreeList(GcoverError, ValueError):
    pass


class NotPrimePowers(GcoverError, ValueError):
    pass


class ParityViolation(GcoverError, ValueError):
    pass


# -- cli
class ParseError(GcoverError):
    pass


class UnknownCommand(GcoverError):
    pass
