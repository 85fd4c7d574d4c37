"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class GroundMismatch(ValueError):
    """Two objects combined in one operation live over different ground sets."""


class UnknownVertex(ValueError):
    """A label that is not part of the ground set."""

    def __init__(self, label: str, offset: int | None = None):
        self.label = label
        self.offset = offset
        where = "" if offset is None else f" at offset {offset}"
        super().__init__(f"unknown vertex {label!r}{where}")


class ParseError(ValueError):
    """Malformed text input; ``offset`` is a byte offset into the input."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        where = "" if offset is None else f" (offset {offset})"
        super().__init__(f"{message}{where}")


class SingularPrincipalMinor(ValueError):
    """``det A[X] = 0`` so the requested pivot does not exist."""

    def __init__(self, subset, message: str | None = None):
        self.subset = subset
        super().__init__(message or f"det A[{subset}] = 0; pivot on {subset} undefined")


class InapplicableOperation(ValueError):
    """Base for graph operations whose applicability condition fails.

    ``step`` is filled in when the failure happens inside a word.
    """

    step: int | None = None

    def at_step(self, step: int) -> "InapplicableOperation":
        self.step = step
        return self

    def __str__(self) -> str:
        base = super().__str__()
        return base if self.step is None else f"step {self.step}: {base}"


class UndefinedPivot(InapplicableOperation, SingularPrincipalMinor):
    """Pivot (or dual pivot) on a graph whose principal minor vanishes."""

    def __init__(self, subset, dual: bool = False):
        self.dual = dual
        if dual:
            msg = f"dual pivot on {subset} undefined: det (G+{subset})[{subset}] = 0"
        else:
            msg = f"pivot on {subset} undefined: det G[{subset}] = 0"
        SingularPrincipalMinor.__init__(self, subset, msg)


class NotALoop(InapplicableOperation):
    def __init__(self, vertex: str):
        self.vertex = vertex
        super().__init__(f"local complementation on {vertex!r} needs a loop on {vertex!r}")


class NotAValidEdge(InapplicableOperation):
    def __init__(self, u: str, v: str, reason: str):
        self.u, self.v = u, v
        super().__init__(f"edge complementation on {{{u},{v}}}: {reason}")


class NotGraphic(ValueError):
    """A set system that is not ``M_G`` for any graph ``G``."""


class NonInvertibleFlip(ValueError):
    """A singular 2x2 matrix where a group element is required."""


class OrbitTooLarge(RuntimeError):
    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"orbit exceeds the node cap of {limit}")
