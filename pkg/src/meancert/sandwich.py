"""Sandwich scalars sA <= B <= tA, regime classification, and spectral boxes."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .eigen import (
    DEFAULT_LOEWNER_TOL,
    SymPDMatrix,
    congruence,
    eig_sym,
    loewner_geq_zero,
    mat_fpow,
)
from .errors import DomainError, InputError

BELOW = "below"
ABOVE = "above"
STRADDLE = "straddle"

REGIME_TIE_TOL = 1e-12

# Which half of the box hypothesis holds: case (i) has A under B, case (ii)
# the reverse.
A_BELOW_B = "a_below_b"
B_BELOW_A = "b_below_a"


def classify_regime(s: float, t: float) -> str:
    """Closed-regime classification with a tie tolerance at 1.

    A pair with s = t = 1 counts as 'above' so reports are deterministic;
    every bound degenerates to an equality there anyway.
    """
    if s >= 1.0 - REGIME_TIE_TOL:
        return ABOVE
    if t <= 1.0 + REGIME_TIE_TOL:
        return BELOW
    return STRADDLE


@dataclass(frozen=True)
class SandwichInterval:
    """Scalars 0 < s <= t with sA <= B <= tA, plus the regime they select."""

    s: float
    t: float
    regime: str
    tight: bool = True

    def __post_init__(self):
        if not (math.isfinite(self.s) and math.isfinite(self.t) and 0.0 < self.s <= self.t):
            raise DomainError(f"invalid sandwich scalars s={self.s}, t={self.t}")
        if self.regime != classify_regime(self.s, self.t):
            raise DomainError(
                f"regime '{self.regime}' inconsistent with s={self.s}, t={self.t}"
            )

    @classmethod
    def from_bounds(cls, s: float, t: float, tight: bool = True) -> "SandwichInterval":
        return cls(s, t, classify_regime(s, t), tight)


@dataclass(frozen=True)
class SpectralBox:
    """Scalars 0 < m_outer <= m_inner < M_inner <= M_outer boxing A and B."""

    m_outer: float
    m_inner: float
    M_inner: float
    M_outer: float

    def __post_init__(self):
        ok = (
            0.0 < self.m_outer <= self.m_inner
            and self.m_inner < self.M_inner <= self.M_outer
        )
        if not ok:
            raise DomainError(
                "spectral box must satisfy 0 < m' <= m < M <= M', got "
                f"({self.m_outer}, {self.m_inner}, {self.M_inner}, {self.M_outer})"
            )


@dataclass(frozen=True)
class UniformBox:
    """One box mI <= A, B <= MI containing both matrices."""

    m: float
    M: float

    def __post_init__(self):
        if not (math.isfinite(self.m) and 0.0 < self.m <= self.M):
            raise DomainError(f"invalid uniform box ({self.m}, {self.M})")

    @property
    def h(self) -> float:
        return self.M / self.m

    @property
    def degenerate(self) -> bool:
        return self.M - self.m <= REGIME_TIE_TOL * self.M


def sandwich_of(a: SymPDMatrix, b: SymPDMatrix) -> SandwichInterval:
    """Tight sandwich scalars: extreme eigenvalues of A^(-1/2) B A^(-1/2)."""
    if a.dim != b.dim:
        raise InputError(f"dimension mismatch: {a.dim} vs {b.dim}")
    inv_half = mat_fpow(a, -0.5)
    dec = eig_sym(congruence(b, inv_half.mat))
    s = float(dec.eigenvalues[0])
    t = float(dec.eigenvalues[-1])
    if s <= 0.0:
        raise DomainError(f"congruence lost positivity: eigenvalue {s:.6e}")
    return SandwichInterval.from_bounds(s, t, tight=True)


def validate_sandwich(
    a: SymPDMatrix,
    b: SymPDMatrix,
    s: float,
    t: float,
    tol_rel: float = DEFAULT_LOEWNER_TOL,
) -> SandwichInterval:
    """Accept user-supplied scalars only after checking them against A, B."""
    sw = SandwichInterval.from_bounds(s, t, tight=False)
    lower = loewner_geq_zero(b.mat - s * a.mat, tol_rel)
    upper = loewner_geq_zero(t * a.mat - b.mat, tol_rel)
    if not lower.holds:
        raise InputError(
            f"supplied s={s} is not a lower sandwich scalar "
            f"(min eigenvalue of B - sA is {lower.min_eig:.6e})"
        )
    if not upper.holds:
        raise InputError(
            f"supplied t={t} is not an upper sandwich scalar "
            f"(min eigenvalue of tA - B is {upper.min_eig:.6e})"
        )
    return sw


def sandwich_from_box(box: SpectralBox, order: str) -> SandwichInterval:
    """Convert box hypotheses to sandwich scalars.

    Case A_BELOW_B gives (M/m, M'/m') in the 'above' regime; case
    B_BELOW_A gives (m'/M', m/M) in the 'below' regime.
    """
    if order == A_BELOW_B:
        s, t = box.M_inner / box.m_inner, box.M_outer / box.m_outer
    elif order == B_BELOW_A:
        s, t = box.m_outer / box.M_outer, box.m_inner / box.M_inner
    else:
        raise InputError(f"unknown box order '{order}'")
    return SandwichInterval.from_bounds(s, t, tight=False)


def uniform_box_of(a: SymPDMatrix, b: SymPDMatrix) -> UniformBox:
    """Tightest single box containing the spectra of both matrices."""
    m = float(min(a.eigenvalues[0], b.eigenvalues[0]))
    M = float(max(a.eigenvalues[-1], b.eigenvalues[-1]))
    return UniformBox(m, M)


def uniform_to_sandwich(box: UniformBox) -> SandwichInterval:
    """A shared box mI <= A,B <= MI forces (1/h)A <= B <= hA."""
    h = box.h
    return SandwichInterval.from_bounds(1.0 / h, h, tight=False)
