"""Exception hierarchy shared across the package.

The CLI maps these onto its exit codes: input problems (malformed files,
bad flags, shape mismatches) exit 2, numerical failures (eigensolver
breakdown, overflow) exit 3.
"""


class MeanCertError(Exception):
    """Base class for all package errors."""


class InputError(MeanCertError):
    """Malformed user input: files, flag values, shape mismatches."""


class DomainError(MeanCertError):
    """Mathematically invalid argument (non-PD matrix, weight out of range)."""


class NumericalError(MeanCertError):
    """Floating-point breakdown: non-convergent eigensolve or overflow."""
