"""The explicit stability-constant pipeline and its functional-inequality checks.

Everything is driven by the pointwise quantity

    Phi(x) = (b/nu) f'(v) + 2 beta (beta - c/nu),   beta = (b/nu) f(v)/v_x,

whose infimum kappa > 0 feeds a weighted Hardy inequality for the weight
w = e^{-c x/2nu} v_x, a Poincare inequality, and finally the contraction rate
kappa_star and tangential-compensation constant C_star of the master estimate

    <nu lap(u) + b f'(v) u, u>  <=  -kappa_star |u|_V^2 + C_star <u, v_x>^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_banded

from .errors import NumericsError
from .grid import Field, GridSpec, grad_sq, trapz
from .reaction import ReactionSpec
from .report import ValidationReport
from .tolerances import slack
from .wave import (
    WaveIntegrals,
    WaveProfile,
    _Hermite,
    gamma_limits,
    ratio_beta,
    ratio_beta_deriv,
    weighted_integrals,
)

# |c| below this counts as a stationary wave
_C_TINY = 1e-12


@dataclass(frozen=True)
class WeightProfile:
    """Weight w = e^{-c x/2nu} v_x and its logarithmic derivative theta.

    theta decreases strictly and crosses zero at the landmark root; kappa0 is
    the verified pointwise lower bound of -theta' + theta^2.
    """

    grid: GridSpec
    w: np.ndarray
    theta: np.ndarray
    half_rate: float  # c / (2 nu)
    root: float       # the zero of theta
    kappa0: float

    def __post_init__(self):
        for name in ("w", "theta"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)


@dataclass(frozen=True)
class StabilityConstants:
    kappa: float
    gamma_minus: float
    gamma_plus: float
    Z: float
    Zhalf: float
    C_prop: float
    q1: float
    q2: float
    kappa_star: float
    C_star: float
    c_star: float

    def as_dict(self) -> dict:
        return {
            "kappa": self.kappa,
            "gamma_minus": self.gamma_minus,
            "gamma_plus": self.gamma_plus,
            "Z": self.Z,
            "Zhalf": self.Zhalf,
            "C_prop": self.C_prop,
            "q1": self.q1,
            "q2": self.q2,
            "kappa_star": self.kappa_star,
            "C_star": self.C_star,
            "c_star": self.c_star,
        }


def gamma_closed_form(spec: ReactionSpec, w: WaveProfile) -> tuple[float, float]:
    """Closed-form asymptotic ratio bounds, cross-checked against the grid."""
    gm, gp = gamma_limits(spec, w.params, w.c)
    beta = ratio_beta(spec, w.params, w.c, w.v, w.vx)
    if abs(beta[0] - gm) > slack(abs(gm)) * 1e4 or abs(beta[-1] - gp) > slack(abs(gp)) * 1e4:
        raise NumericsError(
            f"boundary ratio values ({beta[0]:.6g}, {beta[-1]:.6g}) far from the "
            f"closed forms ({gm:.6g}, {gp:.6g}); domain too small")
    return gm, gp


def _phi_values(w: WaveProfile, spec: ReactionSpec):
    nu, b = w.params.nu, w.params.b
    beta = ratio_beta(spec, w.params, w.c, w.v, w.vx)
    phi = b / nu * spec.df(w.v) + 2.0 * beta * (beta - w.c / nu)
    dbeta = ratio_beta_deriv(spec, w.params, w.c, w.v, w.vx)
    dphi = b / nu * spec.d2f(w.v) * w.vx + (4.0 * beta - 2.0 * w.c / nu) * dbeta
    return phi, dphi


def _phi_tails(w: WaveProfile, spec: ReactionSpec):
    nu, b = w.params.nu, w.params.b
    gm, gp = gamma_limits(spec, w.params, w.c)
    tail_minus = b / nu * spec.df(0.0) + 2.0 * gm * (gm - w.c / nu)
    tail_plus = b / nu * spec.df(1.0) + 2.0 * gp * (gp - w.c / nu)
    return tail_minus, tail_plus


def _cubic_hermite_min(f0, f1, d0, d1, dx):
    """Exact minimum of the cubic Hermite interpolant on one interval."""
    a = 2.0 * f0 - 2.0 * f1 + dx * (d0 + d1)
    b = -3.0 * f0 + 3.0 * f1 - dx * (2.0 * d0 + d1)
    c = dx * d0
    best = min(f0, f1)
    # roots of 3a t^2 + 2b t + c = 0 inside (0,1)
    if abs(a) < 1e-300:
        ts = [-c / (2.0 * b)] if abs(b) > 1e-300 else []
    else:
        disc = b * b - 3.0 * a * c
        if disc < 0.0:
            ts = []
        else:
            r = math.sqrt(disc)
            ts = [(-b + r) / (3.0 * a), (-b - r) / (3.0 * a)]
    for t in ts:
        if 0.0 < t < 1.0:
            val = f0 + t * (c + t * (b + t * a))
            best = min(best, val)
    return best


def kappa_inf(w: WaveProfile, spec: ReactionSpec) -> float:
    """Infimum of Phi over the line: refined grid minimum plus the tail limits.

    The grid minimum alone moves by O(dx^2) with the node placement, so the
    bracketing intervals are minimized exactly on their cubic Hermite
    interpolants (values and analytic derivatives), keeping the result stable
    under grid refinement.
    """
    phi, dphi = _phi_values(w, spec)
    i = int(np.argmin(phi))
    dx = w.grid.dx
    best = phi[i]
    for j in (i - 1, i):
        if 0 <= j < len(phi) - 1:
            best = min(best, _cubic_hermite_min(phi[j], phi[j + 1], dphi[j], dphi[j + 1], dx))
    kappa = min(best, *_phi_tails(w, spec))
    if kappa <= 0.0:
        raise NumericsError(
            f"functional-inequality infimum is not positive (kappa={kappa:.6g}); "
            "assumptions violated or grid too coarse")
    return float(kappa)


def g2_scan(w: WaveProfile, spec: ReactionSpec) -> ValidationReport:
    """Positivity scan of g2 = f'(v) v_x^2 / 2 - f(v) v_xx between x0 and x1.

    Only the window where the ratio lies in [0, c/nu] matters; for a
    stationary wave that window degenerates and the scan passes trivially.
    """
    rep = ValidationReport()
    scale = math.sqrt(2.0 * w.params.nu * w.params.b)
    if w.c <= _C_TINY * scale:
        rep.add("g2 > 0 on [x0, x1]", True, detail="stationary wave: window degenerate")
        return rep
    x0, x1 = w.landmarks["x0"], w.landmarks["x1"]
    mask = (w.grid.x >= x0) & (w.grid.x <= x1)
    g2 = 0.5 * spec.df(w.v[mask]) * w.vx[mask] ** 2 - spec.f(w.v[mask]) * w.vxx[mask]
    ok = bool(np.all(g2 > 0.0))
    worst = int(np.argmin(g2)) if len(g2) else 0
    rep.add("g2 > 0 on [x0, x1]", ok,
            witness=float(w.grid.x[mask][worst]) if len(g2) else None,
            detail=f"min g2 = {np.min(g2):.3g} over {mask.sum()} nodes" if len(g2) else "empty window")
    return rep


def weight_profile(w: WaveProfile, spec: ReactionSpec, kappa: float | None = None) -> WeightProfile:
    """Build the Hardy weight and verify -theta' + theta^2 >= kappa + (c/2nu)^2.

    theta' comes from the analytic ratio identity rather than differencing
    theta, which would double the noise floor of the verification.
    """
    if kappa is None:
        kappa = kappa_inf(w, spec)
    s = w.c / (2.0 * w.params.nu)
    kappa0 = kappa + s * s
    x = w.grid.x
    beta = ratio_beta(spec, w.params, w.c, w.v, w.vx)
    theta = s - beta
    w_vals = np.exp(-s * x) * w.vx
    dtheta = -ratio_beta_deriv(spec, w.params, w.c, w.v, w.vx)
    lhs = -dtheta + theta * theta
    worst = int(np.argmin(lhs - kappa0))
    if lhs[worst] < kappa0 - slack(kappa0):
        raise NumericsError(
            f"-theta' + theta^2 = {lhs[worst]:.9g} < kappa + (c/2nu)^2 = {kappa0:.9g} "
            f"at x = {x[worst]:.4g}")
    root = w.landmarks[0.5]
    theta_h = _Hermite(x[0], w.grid.dx, theta, dtheta)
    theta_at_root = float(theta_h(root))
    if abs(theta_at_root) > slack(np.max(np.abs(theta))):
        raise NumericsError(f"theta({root:.6g}) = {theta_at_root:.3g}, expected 0 at the landmark")
    return WeightProfile(w.grid, w_vals, theta, s, root, kappa0)


def hardy_verify(wp: WeightProfile, kappa0: float, h: np.ndarray,
                 hx: np.ndarray | None = None) -> tuple[float, float, bool]:
    """Check int h^2 w^2 <= (1/kappa0) int h_x^2 w^2 for h vanishing at the root.

    h must vanish at the root of theta up to interpolation distance; hx may be
    supplied analytically, otherwise central differences are used.
    """
    h = np.asarray(h, dtype=float)
    if hx is None:
        hx = np.gradient(h, wp.grid.dx)
    j = int(np.argmin(np.abs(wp.grid.x - wp.root)))
    allowed = wp.grid.dx * abs(hx[j]) + 1e-9 * (1.0 + np.max(np.abs(h)))
    if abs(h[j]) > allowed:
        raise ValueError(
            f"test function must vanish at the node nearest the weight root "
            f"(|h| = {abs(h[j]):.3g} > {allowed:.3g})")
    w_sq = wp.w * wp.w
    lhs = trapz(wp.grid, h * h * w_sq)
    rhs = trapz(wp.grid, hx * hx * w_sq) / kappa0
    return lhs, rhs, bool(lhs <= rhs + slack(rhs))


def poincare_verify(wp: WeightProfile, Z: float, h: np.ndarray,
                    hx: np.ndarray | None = None) -> tuple[float, float, bool]:
    """Check int h^2 w^2 <= (1/kappa0) int h_x^2 w^2 + (int h w^2)^2 / Z, any h."""
    h = np.asarray(h, dtype=float)
    if hx is None:
        hx = np.gradient(h, wp.grid.dx)
    w_sq = wp.w * wp.w
    lhs = trapz(wp.grid, h * h * w_sq)
    rhs = trapz(wp.grid, hx * hx * w_sq) / wp.kappa0 + trapz(wp.grid, h * w_sq) ** 2 / Z
    return lhs, rhs, bool(lhs <= rhs + slack(rhs))


@dataclass(frozen=True)
class ComparisonDiagnostics:
    """Comparison-function solve with its three certificate checks."""

    g: np.ndarray
    gx: np.ndarray
    residual_rel: float
    positive_ok: bool
    derivative_ok: bool
    mass_ok: bool
    mass: float
    mass_floor: float

    @property
    def all_ok(self) -> bool:
        return self.positive_ok and self.derivative_ok and self.mass_ok


def comparison_g(wp: WeightProfile, w: WaveProfile, spec: ReactionSpec,
                 kappa: float | None = None) -> ComparisonDiagnostics:
    """Solve the comparison two-point problem and run its three diagnostics.

    The equation is kappa0 g - g_xx - mu g_x = kappa0 e^{c x/2nu} with drift
    mu = c/nu - 2 (b/nu) f(v)/v_x, whose generator leaves w^2 dx invariant;
    that invariance is what makes the mass lower bound hold. For a stationary
    wave g = 1 solves the problem exactly.

    The solve runs on a buffered extension of the grid with Robin conditions
    g_x = (c/2nu) g at the far ends, so that boundary-layer errors decay below
    tolerance before the physical domain begins.
    """
    nu, b = w.params.nu, w.params.b
    grid = w.grid
    n, dx, x = grid.n, grid.dx, grid.x
    s = wp.half_rate
    if kappa is None:
        kappa = wp.kappa0 - s * s
    kappa0 = kappa + s * s
    ints = weighted_integrals(w, spec)
    mass_floor = ints.Zhalf ** 2 / ints.Z

    scale = math.sqrt(2.0 * nu * b)
    if w.c <= _C_TINY * scale:
        g = np.ones(n)
        gx = np.zeros(n)
        mass = trapz(grid, wp.w * wp.w)
        return ComparisonDiagnostics(
            g, gx, 0.0, True, True, mass >= mass_floor - slack(mass_floor),
            mass, mass_floor)

    gm, gp = gamma_limits(spec, w.params, w.c)
    mu_minus = w.c / nu - 2.0 * gm
    mu_plus = w.c / nu - 2.0 * gp
    rate_left = 0.5 * (mu_minus + math.sqrt(mu_minus ** 2 + 4.0 * kappa0))
    rate_right = 0.5 * (-mu_plus + math.sqrt(mu_plus ** 2 + 4.0 * kappa0))
    buffer = min(3.0 * grid.l_dom, max(5.0, 20.0 / min(rate_left, rate_right)))
    m = int(math.ceil(buffer / dx))
    n_ext = n + 2 * m
    x_ext = x[0] - m * dx + dx * np.arange(n_ext)

    beta = ratio_beta(spec, w.params, w.c, w.v, w.vx)
    beta_ext = np.concatenate([np.full(m, gm), beta, np.full(m, gp)])
    mu = w.c / nu - 2.0 * beta_ext
    rhs = kappa0 * np.exp(s * x_ext)

    diag = np.full(n_ext, kappa0 + 2.0 / dx ** 2)
    upper = -(1.0 / dx ** 2 + mu / (2.0 * dx))
    lower = -(1.0 / dx ** 2 - mu / (2.0 * dx))
    # Robin ends via ghost elimination: g_x = s g folded into the end rows
    diag[0] = kappa0 + 2.0 / dx ** 2 + 2.0 * s / dx - mu[0] * s
    upper[0] = -2.0 / dx ** 2
    diag[-1] = kappa0 + 2.0 / dx ** 2 - 2.0 * s / dx - mu[-1] * s
    lower[-1] = -2.0 / dx ** 2

    # row i couples lower[i], diag[i], upper[i]; solve_banded stores band k of
    # column j at ab[u + j - ... ] so the off-diagonals shift by one
    ab = np.zeros((3, n_ext))
    ab[0, 1:] = upper[:-1]
    ab[1, :] = diag
    ab[2, :-1] = lower[1:]
    g_ext = solve_banded((1, 1), ab, rhs)
    if not np.all(np.isfinite(g_ext)):
        raise NumericsError("comparison-function solve produced non-finite values")

    # discrete residual of the solved interior equation, relative to the forcing
    res = (kappa0 * g_ext[1:-1]
           - (g_ext[:-2] - 2.0 * g_ext[1:-1] + g_ext[2:]) / dx ** 2
           - mu[1:-1] * (g_ext[2:] - g_ext[:-2]) / (2.0 * dx)
           - rhs[1:-1])
    residual_rel = float(np.max(np.abs(res)) / np.max(np.abs(rhs)))

    g = g_ext[m:m + n]
    # 4th-order first derivative; the buffer provides the edge stencils
    ge = g_ext
    i = np.arange(m, m + n)
    gx = (-ge[i + 2] + 8.0 * ge[i + 1] - 8.0 * ge[i - 1] + ge[i - 2]) / (12.0 * dx)

    positive_ok = bool(np.all(g > 0.0))
    bound = s * g
    derivative_ok = bool(np.all(np.abs(gx) <= bound + slack(np.max(bound))))
    mass = trapz(grid, g * g * wp.w * wp.w)
    mass_ok = bool(mass >= mass_floor - slack(mass_floor))
    return ComparisonDiagnostics(g, gx, residual_rel, positive_ok, derivative_ok,
                                 mass_ok, mass, mass_floor)


def quadratic_form(w: WaveProfile, spec: ReactionSpec, u: Field) -> float:
    """<nu lap(u) + b f'(v) u, u> evaluated as -nu int u_x^2 + b int f'(v) u^2."""
    vals = u.vals
    return (-w.params.nu * grad_sq(u.grid, vals)
            + w.params.b * trapz(u.grid, spec.df(w.v) * vals * vals))


def compute_constants(w: WaveProfile, spec: ReactionSpec,
                      ints: WaveIntegrals | None = None) -> StabilityConstants:
    """Assemble the full constant pipeline from the profile and its integrals."""
    if ints is None:
        ints = weighted_integrals(w, spec)
    nu, b = w.params.nu, w.params.b
    kappa = kappa_inf(w, spec)
    gm, gp = gamma_closed_form(spec, w)
    s = w.c / (2.0 * nu)
    kappa0 = kappa + s * s
    C_prop = kappa0 / kappa * ints.Z / ints.Zhalf ** 2
    q1 = 1.0 + (b * spec.eta / nu + 1.0) / kappa0
    q2 = (b * spec.eta / nu + 1.0) * C_prop
    kappa_star = kappa / kappa0 * nu / q1
    C_star = kappa_star * q2 + nu / kappa * s * s * kappa0 * ints.Z / ints.Zhalf ** 2
    c_star = min(kappa_star / (4.0 * b * spec.eta2), 1.0)
    return StabilityConstants(kappa, gm, gp, ints.Z, ints.Zhalf, C_prop,
                              q1, q2, kappa_star, C_star, c_star)
