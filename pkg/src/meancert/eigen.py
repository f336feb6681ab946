"""Dense symmetric eigendecomposition and the matrix functions built on it.

The eigensolver is a cyclic Jacobi sweep with a rotation threshold:
accurate to machine precision for the desk-scale dimensions this package
targets (n <= 512), with no dependence on LAPACK.  Everything downstream
(fractional powers, congruences, Loewner-order checks) goes through it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InputError, NumericalError

MAX_DIM = 512
MAX_SWEEPS = 100
OFF_DIAG_REL_TOL = 1e-14
SYMMETRY_REL_TOL = 1e-12
PD_REL_MARGIN = 1e-12
DEFAULT_LOEWNER_TOL = 1e-9

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


@njit(cache=True)
def _jacobi_kernel(a, vec, max_sweeps, rel_tol, norm):
    """Cyclic Jacobi with threshold; diagonalizes ``a`` in place.

    Returns the number of sweeps used, or -1 if the off-diagonal mass did
    not drop below ``rel_tol * norm`` within ``max_sweeps`` sweeps (NaN
    contamination also lands here, since NaN fails every comparison).
    """
    n = a.shape[0]
    rotate_floor = 0.01 * rel_tol * norm / (n * n)
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off += 2.0 * a[i, j] * a[i, j]
        off = np.sqrt(off)
        if off <= rel_tol * norm:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= rotate_floor:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = 0.5 * (aqq - app) / apq
                if abs(theta) > 1e12:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(n):
                    if i != p and i != q:
                        aip = a[i, p]
                        aiq = a[i, q]
                        a[i, p] = aip - s * (aiq + tau * aip)
                        a[p, i] = a[i, p]
                        a[i, q] = aiq + s * (aip - tau * aiq)
                        a[q, i] = a[i, q]
                for i in range(n):
                    vip = vec[i, p]
                    viq = vec[i, q]
                    vec[i, p] = vip - s * (viq + tau * vip)
                    vec[i, q] = viq + s * (vip - tau * viq)
    return -1


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (ascending) and an orthogonal eigenvector basis."""

    eigenvalues: np.ndarray
    basis: np.ndarray

    def apply(self, values: np.ndarray) -> np.ndarray:
        """Assemble ``Q diag(values) Q^T``, explicitly symmetrized."""
        m = (self.basis * values) @ self.basis.T
        return 0.5 * (m + m.T)


def _as_square_float(x) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InputError(f"expected a square matrix, got shape {arr.shape}")
    if arr.shape[0] < 1:
        raise InputError("empty matrix")
    if arr.shape[0] > MAX_DIM:
        raise InputError(f"dimension {arr.shape[0]} exceeds cap {MAX_DIM}")
    if not np.all(np.isfinite(arr)):
        raise InputError("matrix entries must be finite")
    return arr


def eig_sym(x) -> SpectralDecomposition:
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Raises NumericalError if the matrix norm overflows or the sweeps fail
    to converge (cap of 100 sweeps; convergence is off-diagonal Frobenius
    mass below 1e-14 times the matrix norm).
    """
    arr = _as_square_float(x)
    n = arr.shape[0]
    with np.errstate(over="ignore"):  # overflow is caught and reported below
        norm = float(np.sqrt(np.sum(np.square(arr))))
    if not np.isfinite(norm):
        raise NumericalError("matrix Frobenius norm overflowed")
    if norm == 0.0:
        return SpectralDecomposition(np.zeros(n), np.eye(n))
    a = 0.5 * (arr + arr.T).astype(float)
    vec = np.eye(n)
    status = _jacobi_kernel(a, vec, MAX_SWEEPS, OFF_DIAG_REL_TOL, norm)
    if status < 0:
        raise NumericalError(
            f"Jacobi eigensolver did not converge within {MAX_SWEEPS} sweeps"
        )
    evals = np.diag(a).copy()
    order = np.argsort(evals, kind="stable")
    return SpectralDecomposition(evals[order], np.ascontiguousarray(vec[:, order]))


class SymPDMatrix:
    """Real symmetric positive-definite matrix with cached spectral data.

    Construction symmetrizes the input (after checking the asymmetry is
    round-off scale), eigendecomposes it eagerly, and enforces positive
    definiteness with a relative margin.  Instances are treated as
    immutable; nothing mutates ``mat`` or the cached decomposition.
    """

    __slots__ = ("mat", "dim", "eigenvalues", "eigenvectors")

    def __init__(self, entries, *, _decomp: SpectralDecomposition | None = None):
        arr = _as_square_float(entries)
        scale = max(1.0, float(np.max(np.abs(arr))))
        asym = float(np.max(np.abs(arr - arr.T)))
        if asym > SYMMETRY_REL_TOL * scale:
            raise InputError(
                f"matrix is not symmetric: max asymmetry {asym:.3e} "
                f"exceeds {SYMMETRY_REL_TOL:.0e} * {scale:.3e}"
            )
        # halve before adding so near-overflow entries survive symmetrization
        self.mat = arr * 0.5 + arr.T * 0.5
        self.dim = arr.shape[0]
        dec = _decomp if _decomp is not None else eig_sym(self.mat)
        lam_min = float(dec.eigenvalues[0])
        lam_max = float(dec.eigenvalues[-1])
        if lam_min <= PD_REL_MARGIN * max(1.0, lam_max):
            raise DomainError(
                f"matrix is not positive definite: smallest eigenvalue {lam_min:.6e}"
            )
        self.eigenvalues = dec.eigenvalues
        self.eigenvectors = dec.basis

    @classmethod
    def from_spectrum(cls, eigenvalues, basis) -> "SymPDMatrix":
        """Build QLQ^T from a known decomposition without re-solving."""
        evals = np.asarray(eigenvalues, dtype=float)
        q = np.asarray(basis, dtype=float)
        order = np.argsort(evals, kind="stable")
        dec = SpectralDecomposition(evals[order], np.ascontiguousarray(q[:, order]))
        return cls(dec.apply(dec.eigenvalues), _decomp=dec)

    @property
    def decomposition(self) -> SpectralDecomposition:
        return SpectralDecomposition(self.eigenvalues, self.eigenvectors)

    def __repr__(self) -> str:
        return f"SymPDMatrix(dim={self.dim})"


def mat_fpow(x, p: float):
    """Fractional matrix power through the spectral decomposition.

    For a SymPDMatrix input the cached decomposition is reused and a
    SymPDMatrix is returned; a plain symmetric array is accepted for
    integer powers p >= 0 and returns an array.
    """
    if isinstance(x, SymPDMatrix):
        dec = x.decomposition
    else:
        dec = eig_sym(x)
    evals = dec.eigenvalues
    is_int = float(p) == int(p)
    if np.any(evals <= 0.0) and not (is_int and p >= 0):
        bad = float(evals[evals <= 0.0][0])
        raise DomainError(
            f"power {p} undefined: non-positive eigenvalue {bad:.6e}"
        )
    powered = np.power(evals, p)
    if isinstance(x, SymPDMatrix):
        return SymPDMatrix.from_spectrum(powered, dec.basis)
    return dec.apply(powered)


def congruence(x, c) -> np.ndarray:
    """The congruence C^T X C, explicitly symmetrized."""
    xm = x.mat if isinstance(x, SymPDMatrix) else np.asarray(x, dtype=float)
    cm = np.asarray(c, dtype=float)
    if xm.ndim != 2 or cm.ndim != 2 or xm.shape[1] != cm.shape[0]:
        raise InputError(
            f"congruence shape mismatch: {xm.shape} vs {cm.shape}"
        )
    r = cm.T @ xm @ cm
    return 0.5 * (r + r.T)


@dataclass(frozen=True)
class LoewnerVerdict:
    holds: bool
    min_eig: float


def loewner_geq_zero(x, tol_rel: float = DEFAULT_LOEWNER_TOL) -> LoewnerVerdict:
    """Check X >= 0 in the Loewner order, up to a relative slack.

    Holds iff the smallest eigenvalue is at least
    ``-tol_rel * max(1, ||X||_F)``; the eigenvalue is reported either way.
    """
    dec = eig_sym(x)
    min_eig = float(dec.eigenvalues[0])
    norm = float(np.linalg.norm(np.asarray(x, dtype=float)))
    return LoewnerVerdict(min_eig >= -tol_rel * max(1.0, norm), min_eig)


def spectral_bounds(x: SymPDMatrix) -> tuple[float, float]:
    """Tightest scalar box: (lambda_min, lambda_max) of a PD matrix."""
    return float(x.eigenvalues[0]), float(x.eigenvalues[-1])
