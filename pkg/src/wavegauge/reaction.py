"""Bistable cubic reaction terms and their global growth constants.

A valid reaction f is a cubic with negative leading coefficient, zeros at
0 and 1 and a middle zero a in (0,1), negative between 0 and a and positive
between a and 1. Derivatives are analytic (polynomial), never numerical:
every downstream inequality is sensitive to the accuracy of f' and f''.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .report import ValidationReport

# admissible distance from a polynomial zero when sampling strict sign conditions
_ZERO_MARGIN = 1e-8


@dataclass(frozen=True)
class ReactionSpec:
    """Cubic reaction term with precomputed structural constants.

    coeffs are ascending: f(v) = c0 + c1 v + c2 v^2 + c3 v^3, c3 < 0.

    a        middle zero in (0,1)
    v_star   inflection point (root of f''), lies in (a,1) for valid reactions
    eta      max of f' over [0,1]
    eta1     sup of f' over all of R (vertex of the downward parabola f')
    eta2     Taylor-remainder constant: |f(u+v)-f(v)-f'(v)u| <= eta2*(1+|u|)*u^2
             for v in [0,1]
    lipL     cubic-growth Lipschitz constant:
             |f(x1)-f(x2)| <= lipL*|x1-x2|*(1+x1^2+x2^2)
    """

    coeffs: tuple[float, float, float, float]
    a: float
    v_star: float
    eta: float
    eta1: float
    eta2: float
    lipL: float

    def f(self, v):
        c0, c1, c2, c3 = self.coeffs
        return c0 + v * (c1 + v * (c2 + v * c3))

    def df(self, v):
        _, c1, c2, c3 = self.coeffs
        return c1 + v * (2.0 * c2 + v * (3.0 * c3))

    def d2f(self, v):
        _, _, c2, c3 = self.coeffs
        return 2.0 * c2 + 6.0 * c3 * v

    def f_antideriv(self, v):
        """Antiderivative F with F(0) = 0."""
        c0, c1, c2, c3 = self.coeffs
        return v * (c0 + v * (c1 / 2.0 + v * (c2 / 3.0 + v * (c3 / 4.0))))


def _constants_from_coeffs(coeffs):
    c0, c1, c2, c3 = coeffs
    v_star = -c2 / (3.0 * c3)
    # f' is a downward parabola; its vertex is the global sup
    eta1 = c1 + v_star * (2.0 * c2 + v_star * (3.0 * c3))
    candidates = [c1, c1 + 2.0 * c2 + 3.0 * c3]  # f'(0), f'(1)
    if 0.0 <= v_star <= 1.0:
        candidates.append(eta1)
    eta = max(candidates)
    # exact cubic Taylor remainder: |f''(v)|/2 peaks at an endpoint of [0,1]
    # since f'' is affine; the cubic term contributes |c3|*|u|^3
    eta2 = max(max(abs(2.0 * c2), abs(2.0 * c2 + 6.0 * c3)) / 2.0, abs(c3), 1.0)
    # |x1^2 + x1 x2 + x2^2| <= 1.5 (x1^2+x2^2) and |x1|+|x2| <= 1 + x1^2 + x2^2
    lipL = 1.5 * abs(c3) + abs(c2) + abs(c1)
    return v_star, eta, eta1, eta2, lipL


def make_nagumo(a: float) -> ReactionSpec:
    """Classic cubic f(v) = v(1-v)(v-a) for a in (0,1)."""
    if not 0.0 < a < 1.0:
        raise ConfigError(f"nagumo parameter a must lie in (0,1), got {a}")
    coeffs = (0.0, -a, 1.0 + a, -1.0)
    v_star, eta, eta1, eta2, lipL = _constants_from_coeffs(coeffs)
    return ReactionSpec(coeffs, a, v_star, eta, eta1, eta2, lipL)


def make_cubic(coeffs) -> ReactionSpec:
    """Reaction from raw cubic coefficients [c0, c1, c2, c3], ascending powers.

    The cubic must open downward and have a zero strictly inside (0,1); the
    structural assumptions are checked separately by validate_assumptions.
    """
    if len(coeffs) != 4:
        raise ConfigError("cubic reaction needs exactly four coefficients [c0,c1,c2,c3]")
    c0, c1, c2, c3 = (float(c) for c in coeffs)
    if c3 >= 0.0:
        raise ConfigError("cubic leading coefficient must be negative (f' bounded above)")
    roots = np.roots([c3, c2, c1, c0])
    real = sorted(float(r.real) for r in roots if abs(r.imag) < 1e-9)
    inside = [r for r in real if 1e-6 < r < 1.0 - 1e-6]
    if len(inside) != 1:
        raise ConfigError(f"cubic must have exactly one zero strictly inside (0,1); roots {real}")
    a = inside[0]
    v_star, eta, eta1, eta2, lipL = _constants_from_coeffs((c0, c1, c2, c3))
    return ReactionSpec((c0, c1, c2, c3), a, v_star, eta, eta1, eta2, lipL)


def shifted_increment(spec: ReactionSpec, u, v_ref):
    """f(u + v_ref) - f(v_ref); pointwise when lifted to fields."""
    return spec.f(u + v_ref) - spec.f(v_ref)


def linearization_remainder(spec: ReactionSpec, u, v_ref):
    """f(u + v_ref) - f(v_ref) - f'(v_ref) u, the Taylor remainder at v_ref."""
    return spec.f(u + v_ref) - spec.f(v_ref) - spec.df(v_ref) * u


def _simpson_unit_integral(spec: ReactionSpec, tol: float = 1e-10) -> float:
    """Composite Simpson of f over [0,1], refined until increments fall below tol."""
    prev = None
    n = 64
    for _ in range(16):
        v = np.linspace(0.0, 1.0, n + 1)
        fv = spec.f(v)
        h = 1.0 / n
        s = h / 3.0 * (fv[0] + fv[-1] + 4.0 * fv[1:-1:2].sum() + 2.0 * fv[2:-1:2].sum())
        if prev is not None and abs(s - prev) <= tol:
            return s
        prev = s
        n *= 2
    return prev


def validate_assumptions(spec: ReactionSpec, samples: int = 1000) -> ValidationReport:
    """Check the structural assumptions on a uniform sample of [-0.1, 1.1].

    Failures are reported with the violating v; they are data, not errors.
    """
    if samples < 100:
        raise ConfigError(f"samples must be at least 100, got {samples}")
    rep = ValidationReport()
    vs = np.linspace(-0.1, 1.1, samples)

    zeros = np.array([0.0, spec.a, 1.0])
    fz = spec.f(zeros)
    bad = np.argmax(np.abs(fz))
    rep.add("f(0)=f(a)=f(1)=0", bool(np.all(np.abs(fz) <= 1e-10)), witness=float(zeros[bad]),
            detail=f"max |f| at the three zeros = {np.abs(fz).max():.3g}")

    def sign_on(lo, hi, want_negative):
        mask = (vs > lo + _ZERO_MARGIN) & (vs < hi - _ZERO_MARGIN)
        f_vals = spec.f(vs[mask])
        ok = np.all(f_vals < 0.0) if want_negative else np.all(f_vals > 0.0)
        witness = None
        if not ok:
            idx = np.argmax(f_vals) if want_negative else np.argmin(f_vals)
            witness = float(vs[mask][idx])
        return bool(ok), witness

    ok, w = sign_on(0.0, spec.a, want_negative=True)
    rep.add("f < 0 on (0,a)", ok, witness=w)
    ok, w = sign_on(spec.a, 1.0, want_negative=False)
    rep.add("f > 0 on (a,1)", ok, witness=w)

    rep.add("f'(0) < 0", spec.df(0.0) < 0.0, witness=0.0, detail=f"f'(0)={spec.df(0.0):.6g}")
    rep.add("f'(a) > 0", spec.df(spec.a) > 0.0, witness=spec.a, detail=f"f'(a)={spec.df(spec.a):.6g}")
    rep.add("f'(1) < 0", spec.df(1.0) < 0.0, witness=1.0, detail=f"f'(1)={spec.df(1.0):.6g}")

    mask = (vs >= 0.0) & (vs < spec.v_star - _ZERO_MARGIN)
    convex_ok = np.all(spec.d2f(vs[mask]) > 0.0)
    w = None if convex_ok else float(vs[mask][np.argmin(spec.d2f(vs[mask]))])
    rep.add("f'' > 0 on [0, v_star)", bool(convex_ok), witness=w)
    mask = (vs > spec.v_star + _ZERO_MARGIN) & (vs <= 1.0)
    concave_ok = np.all(spec.d2f(vs[mask]) < 0.0)
    w = None if concave_ok else float(vs[mask][np.argmax(spec.d2f(vs[mask]))])
    rep.add("f'' < 0 on (v_star, 1]", bool(concave_ok), witness=w)

    integral = _simpson_unit_integral(spec)
    rep.add("integral of f over [0,1] >= 0", integral >= -1e-9,
            detail=f"integral = {integral:.3g}")

    rep.add("eta <= eta1 < inf", spec.eta <= spec.eta1 and np.isfinite(spec.eta1),
            detail=f"eta={spec.eta:.6g}, eta1={spec.eta1:.6g}")
    return rep
