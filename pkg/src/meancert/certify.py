"""Bound catalog assembly, numerical certification, and constant comparison.

``catalog`` enumerates every named bound with its constant and an
applicability flag, ``verify`` turns each applicable bound into a residual
matrix and a Loewner verdict, and ``compare_constants`` tabulates the
competing refinement constants on a grid point.

Literature bounds (zuo, specht, dragomir, tominaga) are certified like the
rest, but a violation is recorded as a finding rather than an overall
failure: their original hypotheses are assumed, not re-derived, from the
sandwich data at hand.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import scalars
from .eigen import (
    DEFAULT_LOEWNER_TOL,
    LoewnerVerdict,
    SymPDMatrix,
    loewner_geq_zero,
    mat_fpow,
)
from .errors import DomainError, InputError, NumericalError
from .means import op_harm, op_nabla, op_sharp
from .sandwich import (
    ABOVE,
    A_BELOW_B,
    BELOW,
    B_BELOW_A,
    STRADDLE,
    SandwichInterval,
    SpectralBox,
    UniformBox,
)

MULTIPLICATIVE = "multiplicative"
ADDITIVE = "additive"
LOWER = "lower"
UPPER = "upper"
NABLA_VS_SHARP = "nabla_vs_sharp"
HARM_VS_SHARP = "harm_vs_sharp"
SHARP_VS_NABLA_EXTENDED = "sharp_vs_nabla_extended"

# Stable ordering for report and CSV emission.
CATALOG_ORDER = (
    "thm1.lower",
    "thm1.upper",
    "young.classical",
    "straddle.mult.upper",
    "prop2.lower",
    "prop2.upper",
    "thm3.upper",
    "harm.lower",
    "harm.upper",
    "xi.upper",
    "tominaga.upper",
    "zuo",
    "specht",
    "dragomir",
    "ext.lower",
    "ext.upper",
    "ext.box.lower",
    "ext.box.upper",
    "ext.ibox.lower",
    "ext.ibox.upper",
)


@dataclass(frozen=True)
class BoundStatement:
    name: str
    form: str
    side: str
    relation: str
    constant: float | None
    reference_matrix: str = "A"
    applicable: bool = True
    applicability_reason: str = ""
    source: str = ""
    literature: bool = False

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "form": self.form,
            "side": self.side,
            "relation": self.relation,
            "constant": self.constant,
            "reference_matrix": self.reference_matrix,
            "applicable": self.applicable,
            "applicability_reason": self.applicability_reason,
            "source": self.source,
            "literature": self.literature,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BoundStatement":
        return cls(**d)


@dataclass(frozen=True)
class Verdict:
    holds: bool
    min_eig: float
    min_eig_normalized: float

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "min_eig": self.min_eig,
            "min_eig_normalized": self.min_eig_normalized,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Verdict":
        return cls(**d)


@dataclass(frozen=True)
class BoundResult:
    statement: BoundStatement
    verdict: Verdict | None

    def to_dict(self) -> dict:
        return {
            "statement": self.statement.to_dict(),
            "verdict": self.verdict.to_dict() if self.verdict else None,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BoundResult":
        verdict = Verdict.from_dict(d["verdict"]) if d["verdict"] else None
        return cls(BoundStatement.from_dict(d["statement"]), verdict)


@dataclass(frozen=True)
class CertReport:
    instance: dict
    results: tuple
    comparison: dict | None
    findings: tuple
    overall_pass: bool

    def to_dict(self) -> dict:
        return {
            "instance": dict(self.instance),
            "bounds": [r.to_dict() for r in self.results],
            "comparison": dict(self.comparison) if self.comparison else None,
            "findings": list(self.findings),
            "overall_pass": self.overall_pass,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CertReport":
        return cls(
            instance=dict(d["instance"]),
            results=tuple(BoundResult.from_dict(r) for r in d["bounds"]),
            comparison=dict(d["comparison"]) if d["comparison"] else None,
            findings=tuple(d["findings"]),
            overall_pass=d["overall_pass"],
        )


def _in_unit(v: float) -> bool:
    return 0.0 <= v <= 1.0


def catalog(
    sw: SandwichInterval,
    v: float,
    uniform_box: UniformBox | None = None,
    spectral_box: SpectralBox | None = None,
    box_order: str | None = None,
) -> list[BoundStatement]:
    """Every named bound for this sandwich/weight, applicable or not.

    Inapplicable entries are kept (with constant None and a reason) so the
    report always enumerates the full catalog in a stable order.
    """
    s, t, regime = sw.s, sw.t, sw.regime
    in_unit = _in_unit(v)
    out: list[BoundStatement] = []

    def add(name, form, side, relation, constant, *, ref="A", applicable=True,
            reason="", source="", literature=False):
        out.append(BoundStatement(
            name=name, form=form, side=side, relation=relation,
            constant=constant, reference_matrix=ref, applicable=applicable,
            applicability_reason=reason, source=source, literature=literature,
        ))

    unit_gate = "weight outside [0, 1]"
    ext_gate = "weight inside [0, 1]"

    # Sharp multiplicative two-sided bounds on the one-sided regimes.
    if in_unit and regime == BELOW:
        lo, hi = scalars.f_v(t, v), scalars.f_v(s, v)
    elif in_unit and regime == ABOVE:
        lo, hi = scalars.f_v(s, v), scalars.f_v(t, v)
    else:
        lo = hi = None
    reason = "" if lo is not None else (
        unit_gate if not in_unit else "straddle regime: interval contains 1"
    )
    src = "sharp multiplicative bounds from the endpoint values of the mean-ratio function"
    add("thm1.lower", MULTIPLICATIVE, LOWER, NABLA_VS_SHARP, lo,
        applicable=lo is not None, reason=reason, source=src)
    add("thm1.upper", MULTIPLICATIVE, UPPER, NABLA_VS_SHARP, hi,
        applicable=hi is not None, reason=reason, source=src)

    add("young.classical", MULTIPLICATIVE, LOWER, NABLA_VS_SHARP,
        1.0 if in_unit else None, applicable=in_unit,
        reason="" if in_unit else unit_gate,
        source="classical arithmetic-geometric chain; the straddle lower bound")

    straddle = in_unit and regime == STRADDLE
    add("straddle.mult.upper", MULTIPLICATIVE, UPPER, NABLA_VS_SHARP,
        max(scalars.f_v(s, v), scalars.f_v(t, v)) if straddle else None,
        applicable=straddle,
        reason="" if straddle else (unit_gate if not in_unit else "not a straddle instance"),
        source="derived: endpoint maximum of the mean-ratio function; "
               "not one of the cited sharp results")

    # Sharp additive two-sided bounds on the one-sided regimes.
    if in_unit and regime == BELOW:
        alo, ahi = scalars.g_v(t, v), scalars.g_v(s, v)
    elif in_unit and regime == ABOVE:
        alo, ahi = scalars.g_v(s, v), scalars.g_v(t, v)
    else:
        alo = ahi = None
    reason = "" if alo is not None else (
        unit_gate if not in_unit else "straddle regime: interval contains 1"
    )
    src = "sharp additive bounds from the endpoint values of the mean-gap function"
    add("prop2.lower", ADDITIVE, LOWER, NABLA_VS_SHARP, alo,
        applicable=alo is not None, reason=reason, source=src)
    add("prop2.upper", ADDITIVE, UPPER, NABLA_VS_SHARP, ahi,
        applicable=ahi is not None, reason=reason, source=src)

    add("thm3.upper", ADDITIVE, UPPER, NABLA_VS_SHARP,
        max(scalars.g_v(s, v), scalars.g_v(t, v)) if in_unit else None,
        applicable=in_unit, reason="" if in_unit else unit_gate,
        source="additive reverse: endpoint maximum of the mean-gap function (any regime)")

    # Geometric-harmonic bounds, encoded through the dual ratio 1/f_{1-v}.
    if in_unit:
        dual = lambda x: 1.0 / scalars.f_v(x, 1.0 - v)  # noqa: E731
        if regime == ABOVE:
            hlo, hhi = dual(t), dual(s)
        elif regime == BELOW:
            hlo, hhi = dual(s), dual(t)
        else:
            hlo, hhi = min(dual(s), dual(t)), 1.0
    else:
        hlo = hhi = None
    src = "geometric-harmonic bounds via the dual mean-ratio function"
    add("harm.lower", MULTIPLICATIVE, LOWER, HARM_VS_SHARP, hlo,
        applicable=in_unit, reason="" if in_unit else unit_gate, source=src)
    add("harm.upper", MULTIPLICATIVE, UPPER, HARM_VS_SHARP, hhi,
        applicable=in_unit, reason="" if in_unit else unit_gate, source=src)

    # Bounds that need the shared uniform box.
    has_ubox = uniform_box is not None
    ubox_gate = "" if (in_unit and has_ubox) else (
        unit_gate if not in_unit else "no uniform box supplied")
    if in_unit and has_ubox:
        h = uniform_box.h
        xi = max(scalars.g_v(h, v), scalars.g_v(1.0 / h, v))
        tom = scalars.tominaga_additive(h)
    else:
        xi = tom = None
    add("xi.upper", ADDITIVE, UPPER, NABLA_VS_SHARP, xi,
        applicable=xi is not None, reason=ubox_gate,
        source="additive reverse from the normalized endpoint gaps of the uniform box")
    add("tominaga.upper", ADDITIVE, UPPER, NABLA_VS_SHARP, tom,
        applicable=tom is not None, reason=ubox_gate,
        source="literature: logarithmic-mean times log-Specht additive reverse",
        literature=True)

    # Literature multiplicative constants on the one-sided regimes.
    if in_unit and regime in (ABOVE, BELOW):
        h_lit = s if regime == ABOVE else 1.0 / t
        lit_gate = ""
        zuo = scalars.zuo_constant(h_lit, v)
        spc = scalars.specht_constant(h_lit, v)
        drg = scalars.dragomir_constant(h_lit, v)
    else:
        lit_gate = unit_gate if not in_unit else \
            "straddle regime: no one-sided ratio to feed the literature constants"
        zuo = spc = drg = None
    add("zuo", MULTIPLICATIVE, LOWER, NABLA_VS_SHARP, zuo,
        applicable=zuo is not None, reason=lit_gate,
        source="literature: Kantorovich-power refinement constant, condition assumed",
        literature=True)
    add("specht", MULTIPLICATIVE, LOWER, NABLA_VS_SHARP, spc,
        applicable=spc is not None, reason=lit_gate,
        source="literature: Specht-ratio refinement constant, condition assumed",
        literature=True)
    add("dragomir", MULTIPLICATIVE, UPPER, NABLA_VS_SHARP, drg,
        applicable=drg is not None, reason=lit_gate,
        source="literature: exponential reverse constant, condition assumed",
        literature=True)

    # Extended weights: the arithmetic-geometric gap flips sign.
    ext = not in_unit
    add("ext.lower", ADDITIVE, LOWER, NABLA_VS_SHARP,
        min(scalars.g_v(s, v), scalars.g_v(t, v)) if ext else None,
        applicable=ext, reason="" if ext else ext_gate,
        source="extended-weight additive lower bound: endpoint minimum of the "
               "(concave) mean-gap function")
    if ext:
        if regime == BELOW:
            ext_hi = scalars.g_v(t, v)
        elif regime == ABOVE:
            ext_hi = scalars.g_v(s, v)
        else:
            ext_hi = 0.0  # the gap function peaks at 1 inside a straddle interval
    else:
        ext_hi = None
    add("ext.upper", ADDITIVE, UPPER, NABLA_VS_SHARP, ext_hi,
        applicable=ext, reason="" if ext else ext_gate,
        source="extended-weight additive upper bound: regime maximum of the mean-gap function")

    # Extended weights with a full spectral box: reversed-gap bounds, both
    # A-scaled and identity-scaled.
    has_sbox = spectral_box is not None and box_order is not None
    if ext and has_sbox:
        bx = spectral_box
        if box_order == A_BELOW_B:
            s_in, t_out = bx.M_inner / bx.m_inner, bx.M_outer / bx.m_outer
            blo, bhi = -scalars.g_v(s_in, v), -scalars.g_v(t_out, v)
            ilo, ihi = bx.m_outer * blo, bx.m_inner * bhi
        elif box_order == B_BELOW_A:
            s_out, t_in = bx.m_outer / bx.M_outer, bx.m_inner / bx.M_inner
            blo, bhi = -scalars.g_v(t_in, v), -scalars.g_v(s_out, v)
            ilo, ihi = bx.M_inner * blo, bx.M_outer * bhi
        else:
            raise InputError(f"unknown box order '{box_order}'")
    else:
        blo = bhi = ilo = ihi = None
    sbox_gate = "" if (ext and has_sbox) else (
        ext_gate if in_unit else "no spectral box supplied")
    src = "extended-weight reversed-gap bounds from the spectral box"
    add("ext.box.lower", ADDITIVE, LOWER, SHARP_VS_NABLA_EXTENDED, blo,
        applicable=blo is not None, reason=sbox_gate, source=src)
    add("ext.box.upper", ADDITIVE, UPPER, SHARP_VS_NABLA_EXTENDED, bhi,
        applicable=bhi is not None, reason=sbox_gate, source=src)
    add("ext.ibox.lower", ADDITIVE, LOWER, SHARP_VS_NABLA_EXTENDED, ilo,
        ref="I", applicable=ilo is not None, reason=sbox_gate, source=src)
    add("ext.ibox.upper", ADDITIVE, UPPER, SHARP_VS_NABLA_EXTENDED, ihi,
        ref="I", applicable=ihi is not None, reason=sbox_gate, source=src)

    assert [b.name for b in out] == list(CATALOG_ORDER)
    return out


def _residual(bound: BoundStatement, nabla, sharp, harm, amat, eye):
    c = bound.constant
    if bound.form == MULTIPLICATIVE:
        lhs = harm if bound.relation == HARM_VS_SHARP else nabla
        if lhs is None:
            raise DomainError(f"bound {bound.name}: harmonic mean unavailable")
        res = lhs - c * sharp if bound.side == LOWER else c * sharp - lhs
        scale = float(np.linalg.norm(lhs))
    else:
        gap = nabla - sharp
        if bound.relation == SHARP_VS_NABLA_EXTENDED:
            gap = -gap
        ref = amat if bound.reference_matrix == "A" else eye
        res = gap - c * ref if bound.side == LOWER else c * ref - gap
        scale = float(np.linalg.norm(gap))
    return res, scale


def verify(
    a: SymPDMatrix,
    b: SymPDMatrix,
    v: float,
    bounds: list[BoundStatement],
    tol_rel: float = DEFAULT_LOEWNER_TOL,
    instance: dict | None = None,
    comparison: dict | None = None,
) -> CertReport:
    """Certify every applicable bound against (A, B, v).

    Each bound becomes a residual matrix whose Loewner nonnegativity is
    checked at ``tol_rel``; the smallest residual eigenvalue is reported
    raw and normalized by the scale of the compared quantity.
    """
    nabla = op_nabla(a, b, v)
    sharp = op_sharp(a, b, v).mat
    harm = op_harm(a, b, v).mat if _in_unit(v) else None
    eye = np.eye(a.dim)
    results = []
    findings = []
    overall = True
    for bound in bounds:
        if not bound.applicable:
            results.append(BoundResult(bound, None))
            continue
        try:
            res, scale = _residual(bound, nabla, sharp, harm, a.mat, eye)
            lv: LoewnerVerdict = loewner_geq_zero(res, tol_rel)
        except NumericalError as exc:
            raise NumericalError(f"bound {bound.name}: {exc}") from exc
        verdict = Verdict(lv.holds, lv.min_eig, lv.min_eig / max(1.0, scale))
        results.append(BoundResult(bound, verdict))
        if not lv.holds:
            if bound.literature:
                findings.append(
                    f"literature bound {bound.name} violated: "
                    f"min residual eigenvalue {lv.min_eig:.6e}"
                )
            else:
                overall = False
    return CertReport(
        instance=instance or {},
        results=tuple(results),
        comparison=comparison,
        findings=tuple(findings),
        overall_pass=overall,
    )


def compare_constants(h: float, v: float) -> dict:
    """One comparison row of the competing refinement constants at (h, v)."""
    if not h >= 1.0:
        raise DomainError(f"comparison needs h >= 1, got {h}")
    if not _in_unit(v):
        raise DomainError(f"comparison needs v in [0, 1], got {v}")
    f = scalars.f_v(h, v)
    zuo = scalars.zuo_constant(h, v)
    spc = scalars.specht_constant(h, v)
    drg = scalars.dragomir_constant(h, v)
    if drg < zuo:
        drg_vs_zuo = "lt"
    elif drg > zuo:
        drg_vs_zuo = "gt"
    else:
        drg_vs_zuo = "eq"
    return {
        "h": h,
        "v": v,
        "f_v": f,
        "zuo": zuo,
        "specht": spc,
        "dragomir": drg,
        "specht_le_zuo": spc <= zuo + 1e-12,
        "zuo_le_f": zuo <= f + 1e-12,
        "dragomir_vs_zuo": drg_vs_zuo,
    }


def _random_orthogonal(rng: np.random.Generator, n: int) -> np.ndarray:
    if n == 1:
        return np.array([[1.0 if rng.random() < 0.5 else -1.0]])
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def _pinned_log_uniform(rng, n, lo, hi):
    """n values log-uniform in [lo, hi] with both endpoints attained (n >= 2)."""
    if n == 1:
        return np.array([lo])
    inner = np.exp(rng.uniform(np.log(lo), np.log(hi), n - 2)) if n > 2 else []
    return np.concatenate([[lo, hi], inner])


def gen_instance(dim: int, s0: float, t0: float, seed: int) -> tuple[SymPDMatrix, SymPDMatrix]:
    """Deterministic PD pair whose tight sandwich scalars are (s0, t0).

    A gets a log-uniform spectrum in [0.5, 2]; B = A^(1/2) C A^(1/2) with C
    PD having extreme eigenvalues exactly s0 and t0, so the congruence
    A^(-1/2) B A^(-1/2) = C pins the sandwich by construction.
    """
    if not 0.0 < s0 <= t0:
        raise InputError(f"need 0 < s0 <= t0, got ({s0}, {t0})")
    if not 1 <= dim <= 512:
        raise InputError(f"dimension {dim} out of range [1, 512]")
    if dim == 1 and s0 != t0:
        raise InputError("a 1x1 instance cannot realize s0 < t0")
    rng = np.random.default_rng(seed)
    a = SymPDMatrix.from_spectrum(
        np.exp(rng.uniform(np.log(0.5), np.log(2.0), dim)),
        _random_orthogonal(rng, dim),
    )
    c_evals = _pinned_log_uniform(rng, dim, s0, t0)
    c = SymPDMatrix.from_spectrum(c_evals, _random_orthogonal(rng, dim))
    half = mat_fpow(a, 0.5)
    b = SymPDMatrix(half.mat @ c.mat @ half.mat)
    return a, b


def gen_box_instance(
    dim: int, box: SpectralBox, order: str, seed: int
) -> tuple[SymPDMatrix, SymPDMatrix]:
    """Deterministic PD pair satisfying the spectral-box hypothesis.

    Under A_BELOW_B the spectrum of A fills [m', m] and that of B fills
    [M, M'] (endpoints attained for dim >= 2); B_BELOW_A swaps the roles.
    """
    if not 1 <= dim <= 512:
        raise InputError(f"dimension {dim} out of range [1, 512]")
    rng = np.random.default_rng(seed)
    lo_band = (box.m_outer, box.m_inner)
    hi_band = (box.M_inner, box.M_outer)
    a_band, b_band = (lo_band, hi_band) if order == A_BELOW_B else (hi_band, lo_band)
    if order not in (A_BELOW_B, B_BELOW_A):
        raise InputError(f"unknown box order '{order}'")
    a = SymPDMatrix.from_spectrum(
        _pinned_log_uniform(rng, dim, *a_band), _random_orthogonal(rng, dim))
    b = SymPDMatrix.from_spectrum(
        _pinned_log_uniform(rng, dim, *b_band), _random_orthogonal(rng, dim))
    return a, b
