"""Exception hierarchy shared by every module, plus the wall-clock guard."""

import time


class SumsetRamseyError(Exception):
    pass


class StructuralError(SumsetRamseyError, ValueError):
    """Elements from different groups were combined."""


class DomainError(SumsetRamseyError, LookupError):
    """A colouring was queried outside the domain it was declared on."""


class ResourceLimitError(SumsetRamseyError, RuntimeError):
    """A configured cap was hit before the computation could finish.

    This never means "no solution": callers must treat it as "gave up".
    """

    def __init__(self, message, cap=None, explored=None, best_known=None):
        super().__init__(message)
        self.cap = cap
        self.explored = explored
        self.best_known = best_known


class ConstructionError(SumsetRamseyError):
    """A constructive procedure could not produce its object."""

    def __init__(self, message, stage=None, achieved=None):
        super().__init__(message)
        self.stage = stage
        self.achieved = achieved


class ParseError(SumsetRamseyError, ValueError):
    def __init__(self, message, line=None, token=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
        self.token = token


def deadline_after(seconds):
    return None if seconds is None else time.monotonic() + seconds


def check_deadline(deadline, nodes):
    """Raise once ``deadline`` has passed; polled every 2048 nodes."""
    if deadline is not None and nodes % 2048 == 0 and time.monotonic() > deadline:
        raise ResourceLimitError(f"time limit reached after {nodes} nodes", explored=nodes)
