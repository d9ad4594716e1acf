"""Travelling-wave profiles of nu*v_xx + b*f(v) = c*v_x and their invariants.

A profile is the monotone heteroclinic connection from 0 to 1, phase-normalized
so v(0) = 1/2. The classic cubic admits the closed-form logistic front; general
reactions are solved by shooting in the (v, v_x) phase plane with bisection on
the speed c. Profiles are sampled on a shared uniform grid together with first
and second derivatives, landmark points, and exponentially-weighted integrals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq
from scipy.special import expit

from .errors import ConfigError, NumericsError
from .grid import GridSpec, trapz
from .reaction import ReactionSpec
from .report import ValidationReport
from .tolerances import slack

# v_x below this threshold switches ratio evaluations to their l'Hopital limits
_VX_FLOOR = 1e-300


@dataclass(frozen=True)
class WaveParams:
    """Diffusion coefficient nu and reaction strength b of the evolution law."""

    nu: float
    b: float

    def __post_init__(self):
        if self.nu <= 0 or self.b <= 0:
            raise ConfigError(f"nu and b must be positive, got nu={self.nu}, b={self.b}")

    @property
    def front_rate(self) -> float:
        """Steepness scale k = sqrt(b/(2 nu)); 1/k estimates the front width."""
        return math.sqrt(self.b / (2.0 * self.nu))


@dataclass(frozen=True)
class WaveProfile:
    """Sampled travelling wave with derivatives, speed and landmark points.

    landmarks maps each requested ratio level alpha to its crossing point,
    plus "x0" (v = a), "x1" (root of v_xx) and "x_star" (v = v_star).
    nagumo_a is set when the closed-form logistic front is available, which
    unlocks exact evaluation at arbitrary shifts.
    """

    params: WaveParams
    c: float
    grid: GridSpec
    v: np.ndarray
    vx: np.ndarray
    vxx: np.ndarray
    landmarks: dict
    nagumo_a: float | None = None

    def __post_init__(self):
        for name in ("v", "vx", "vxx"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)


@dataclass(frozen=True)
class WaveIntegrals:
    """Weighted profile integrals; Z and Zhalf carry the weights e^{-c x/nu}, e^{-c x/2nu}."""

    Z: float
    Zhalf: float
    norm_vx_sq: float
    norm_vxx_sq: float


def gamma_limits(spec: ReactionSpec, params: WaveParams, c: float) -> tuple[float, float]:
    """Asymptotic limits (gamma_minus, gamma_plus) of (b/nu) f(v)/v_x along the wave."""
    s = c / (2.0 * params.nu)
    gm = s - math.sqrt(s * s - params.b / params.nu * spec.df(0.0))
    gp = s + math.sqrt(s * s - params.b / params.nu * spec.df(1.0))
    return gm, gp


def decay_rates(spec: ReactionSpec, params: WaveParams, c: float) -> tuple[float, float]:
    """Exponential rates of v_x: e^{lam_u x} as x -> -inf, e^{lam_s x} as x -> +inf.

    These are c/nu - gamma_minus > 0 and c/nu - gamma_plus < 0, the saddle
    eigenvalues at the rest states.
    """
    gm, gp = gamma_limits(spec, params, c)
    return c / params.nu - gm, c / params.nu - gp


def ratio_beta(spec: ReactionSpec, params: WaveParams, c: float,
               v: np.ndarray, vx: np.ndarray) -> np.ndarray:
    """(b/nu) f(v)/v_x with l'Hopital limits where v_x underflows."""
    out = np.empty_like(v)
    tiny = np.abs(vx) < _VX_FLOOR
    ok = ~tiny
    out[ok] = params.b / params.nu * spec.f(v[ok]) / vx[ok]
    if np.any(tiny):
        gm, gp = gamma_limits(spec, params, c)
        out[tiny] = np.where(v[tiny] < 0.5, gm, gp)
    return out


def ratio_beta_deriv(spec: ReactionSpec, params: WaveParams, c: float,
                     v: np.ndarray, vx: np.ndarray) -> np.ndarray:
    """d/dx of the ratio, from the wave equation: beta' = (b/nu) f'(v) - beta (c/nu - beta)."""
    beta = ratio_beta(spec, params, c, v, vx)
    return params.b / params.nu * spec.df(v) - beta * (c / params.nu - beta)


# ---------------------------------------------------------------------------
# closed-form logistic front
# ---------------------------------------------------------------------------

def nagumo_profile(params: WaveParams, a: float, grid: GridSpec) -> WaveProfile:
    """Closed-form front v(x) = (1 + e^{-kx})^{-1}, k = sqrt(b/2nu), c = sqrt(2 nu b)(1/2 - a)."""
    if not 0.0 < a <= 0.5:
        raise ConfigError(f"closed-form front requires 0 < a <= 1/2 (so c >= 0), got a={a}")
    k = params.front_rate
    c = math.sqrt(2.0 * params.nu * params.b) * (0.5 - a)
    x = grid.x
    v = expit(k * x)
    vx = k * v * (1.0 - v)
    vxx = k * k * v * (1.0 - v) * (1.0 - 2.0 * v)

    def logit_over_k(y):
        return math.log(y / (1.0 - y)) / k

    landmarks = {
        0.5: logit_over_k(a + 0.5 * (0.5 - a)),
        "x0": logit_over_k(a),
        "x1": 0.0,
        "x_star": logit_over_k((1.0 + a) / 3.0),
    }
    return WaveProfile(params, c, grid, v, vx, vxx, landmarks, nagumo_a=a)


# ---------------------------------------------------------------------------
# shooting solver
# ---------------------------------------------------------------------------

def _saddle_rates(spec, params, c):
    """Unstable eigenvalue at (0,0) and stable eigenvalue at (1,0)."""
    s = c / (2.0 * params.nu)
    lam_u = s + math.sqrt(s * s - params.b / params.nu * spec.df(0.0))
    lam_s = s - math.sqrt(s * s - params.b / params.nu * spec.df(1.0))
    return lam_u, lam_s


def _integrate_half(spec, params, c, h_signed, v0, p0, v_stop, rate, store=False):
    """RK4 the phase-plane system v' = p, nu p' = c p - b f(v) from one saddle.

    Marches until v crosses v_stop (returns the trajectory, last point past the
    crossing) or p drops to 0 (returns None: the connection missed). Each half
    is integrated along an attracting direction, so no shooting amplification
    builds up. rate is the saddle eigenvalue governing the approach, used to
    size the step budget.
    """
    nu, b = params.nu, params.b
    f = spec.f
    towards_one = h_signed > 0.0
    max_steps = int((80.0 / rate + 40.0) / abs(h_signed))
    v, p = v0, p0
    prev_v, prev_p = v, p
    vs, ps = ([v], [p]) if store else (None, None)
    for _ in range(max_steps):
        prev_v, prev_p = v, p
        k1v = p
        k1p = (c * p - b * f(v)) / nu
        v2, p2 = v + 0.5 * h_signed * k1v, p + 0.5 * h_signed * k1p
        k2v = p2
        k2p = (c * p2 - b * f(v2)) / nu
        v3, p3 = v + 0.5 * h_signed * k2v, p + 0.5 * h_signed * k2p
        k3v = p3
        k3p = (c * p3 - b * f(v3)) / nu
        v4, p4 = v + h_signed * k3v, p + h_signed * k3p
        k4v = p4
        k4p = (c * p4 - b * f(v4)) / nu
        v += h_signed / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
        p += h_signed / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
        if store:
            vs.append(v)
            ps.append(p)
        if p <= 0.0:
            return None
        if (towards_one and v >= v_stop) or (not towards_one and v <= v_stop):
            if store:
                return np.array(vs), np.array(ps)
            return np.array([prev_v, v]), np.array([prev_p, p])
    raise NumericsError("phase-plane integration exceeded its step budget")


def _match_level(spec) -> float:
    """Matching level for the two shooting branches.

    (1 + a)/2 keeps the backward branch away from the interior equilibrium
    (a, 0), which it can approach asymptotically without ever crossing.
    """
    return 0.5 * (1.0 + spec.a)


def _midpoint_mismatch(spec, params, c, h, eps):
    """p_left - p_right at the matching level; increasing in c, zero at the wave speed."""
    v_m = _match_level(spec)
    lam_u, lam_s = _saddle_rates(spec, params, c)
    left = _integrate_half(spec, params, c, h, eps, lam_u * eps, v_m, lam_u)
    if left is None:
        return -math.inf  # rising branch died early: c too small
    right = _integrate_half(spec, params, c, -h, 1.0 - eps, -lam_s * eps, v_m, -lam_s)
    if right is None:
        return math.inf  # descending branch died early: c too large
    p_match = []
    for vs, ps in (left, right):
        frac = (v_m - vs[-2]) / (vs[-1] - vs[-2])
        p_match.append(ps[-2] + frac * (ps[-1] - ps[-2]))
    return p_match[0] - p_match[1]


def solve_profile(spec: ReactionSpec, params: WaveParams, grid: GridSpec,
                  tol: float = 1e-10) -> WaveProfile:
    """Two-sided shooting construction of the front for a general bistable reaction.

    Integrates out of the saddle at (0, 0) along its unstable direction and
    backward out of the saddle at (1, 0) along its stable direction, bisecting
    the speed c until the two branches meet at v = 1/2. Both halves follow
    attracting directions, so the profile error stays at the integrator's
    order. The glued trajectory is recentred so v(0) = 1/2 and resampled onto
    the grid by quintic Hermite interpolation, with saddle asymptotics filling
    the truncated tails.
    """
    k = params.front_rate
    h = 0.005 / k
    eps = 1e-9

    scale = math.sqrt(2.0 * params.nu * params.b)
    c_lo = -0.05 * scale
    if _midpoint_mismatch(spec, params, c_lo, h, eps) >= 0.0:
        raise NumericsError(f"shooting failed to bracket: c={c_lo:.6g} does not undershoot")
    c_hi = 0.75 * scale
    for _ in range(60):
        if _midpoint_mismatch(spec, params, c_hi, h, eps) > 0.0:
            break
        c_hi *= 2.0
    else:
        raise NumericsError(f"shooting failed to bracket: no overshoot up to c={c_hi:.6g}")

    while c_hi - c_lo > tol:
        mid = 0.5 * (c_lo + c_hi)
        if _midpoint_mismatch(spec, params, mid, h, eps) < 0.0:
            c_lo = mid
        else:
            c_hi = mid
    c = 0.5 * (c_lo + c_hi)

    nu, b = params.nu, params.b
    v_m = _match_level(spec)
    lam_u, lam_s = _saddle_rates(spec, params, c)
    left = _integrate_half(spec, params, c, h, eps, lam_u * eps, v_m, lam_u, store=True)
    right = _integrate_half(spec, params, c, -h, 1.0 - eps, -lam_s * eps, v_m, -lam_s, store=True)
    if left is None or right is None:
        raise NumericsError("computed profile is non-monotone; reaction term invalid")

    def branch_derivs(v_traj, p_traj):
        vxx_t = (c * p_traj - b * spec.f(v_traj)) / nu
        vxxx_t = (c * vxx_t - b * spec.df(v_traj) * p_traj) / nu
        return vxx_t, vxxx_t

    def crossing(v_traj, p_traj, vxx_t, vxxx_t, level):
        """Newton on the quintic interpolant for the v = level crossing."""
        j = min(max(int(np.searchsorted(v_traj, level)), 1), len(v_traj) - 1)
        xc = (j - 1) * h + (level - v_traj[j - 1]) / p_traj[j - 1]
        for _ in range(6):
            val = _quintic_point(v_traj, p_traj, vxx_t, h, xc)
            der = _quintic_point(p_traj, vxx_t, vxxx_t, h, xc)
            xc -= (val - level) / der
        return xc

    vL, pL = left
    vR, pR = right[0][::-1], right[1][::-1]  # backward march flipped ascending
    vxxL, vxxxL = branch_derivs(vL, pL)
    vxxR, vxxxR = branch_derivs(vR, pR)

    x_half = crossing(vL, pL, vxxL, vxxxL, 0.5)   # phase normalization point
    x_mL = crossing(vL, pL, vxxL, vxxxL, v_m)     # glue point, left frame
    x_mR = crossing(vR, pR, vxxR, vxxxR, v_m)     # glue point, right frame
    x_glue = x_mL - x_half                        # glue point on the output grid

    v = np.empty(grid.n)
    vx = np.empty(grid.n)
    filled = np.zeros(grid.n, dtype=bool)
    x = grid.x

    # left branch covers x <= x_glue, right branch the rest; saddle asymptotics
    # extend whichever branch the truncated grid runs past
    use_l = x <= x_glue
    xq = x + x_half
    inside = use_l & (xq >= 0.0)
    v[inside] = _quintic_eval(vL, pL, vxxL, h, xq[inside])
    vx[inside] = _quintic_eval(pL, vxxL, vxxxL, h, xq[inside])
    filled |= inside
    tail = use_l & (xq < 0.0)
    v[tail] = vL[0] * np.exp(lam_u * xq[tail])
    vx[tail] = lam_u * v[tail]
    filled |= tail

    use_r = ~use_l
    xq = x - x_glue + x_mR
    x_end = (len(vR) - 1) * h
    inside = use_r & (xq <= x_end)
    v[inside] = _quintic_eval(vR, pR, vxxR, h, xq[inside])
    vx[inside] = _quintic_eval(pR, vxxR, vxxxR, h, xq[inside])
    filled |= inside
    tail = use_r & (xq > x_end)
    q_end = 1.0 - vR[-1]
    v[tail] = 1.0 - q_end * np.exp(lam_s * (xq[tail] - x_end))
    vx[tail] = -lam_s * (1.0 - v[tail])
    filled |= tail

    if not np.all(filled):
        raise NumericsError("grid not covered by the shot trajectory and its tails")
    if np.any(np.diff(v) < 0.0) or np.any(vx < 0.0):
        raise NumericsError("computed profile is non-monotone; reaction term invalid")

    vxx = (c * vx - b * spec.f(v)) / nu
    profile = WaveProfile(params, c, grid, v, vx, vxx, landmarks={})
    landmarks = find_landmarks(profile, spec, alphas=[0.5])
    return WaveProfile(params, c, grid, v, vx, vxx, landmarks)


def _quintic_weights(t):
    t2 = t * t
    t3 = t2 * t
    t4 = t3 * t
    t5 = t4 * t
    h0 = 1.0 - 10.0 * t3 + 15.0 * t4 - 6.0 * t5
    h1 = t - 6.0 * t3 + 8.0 * t4 - 3.0 * t5
    h2 = 0.5 * (t2 - 3.0 * t3 + 3.0 * t4 - t5)
    h3 = 10.0 * t3 - 15.0 * t4 + 6.0 * t5
    h4 = -4.0 * t3 + 7.0 * t4 - 3.0 * t5
    h5 = 0.5 * (t3 - 2.0 * t4 + t5)
    return h0, h1, h2, h3, h4, h5


def _quintic_eval(g, d, s, h, xq):
    """Two-point quintic Hermite interpolation on a uniform trajectory grid."""
    idx = np.clip((xq / h).astype(int), 0, len(g) - 2)
    t = xq / h - idx
    h0, h1, h2, h3, h4, h5 = _quintic_weights(t)
    return (g[idx] * h0 + d[idx] * h * h1 + s[idx] * h * h * h2
            + g[idx + 1] * h3 + d[idx + 1] * h * h4 + s[idx + 1] * h * h * h5)


def _quintic_point(g, d, s, h, xq):
    return float(_quintic_eval(g, d, s, h, np.array([xq]))[0])


# ---------------------------------------------------------------------------
# landmarks and interpolation on stored profiles
# ---------------------------------------------------------------------------

class _Hermite:
    """Cubic Hermite interpolant from nodal values and analytic derivatives."""

    def __init__(self, x0, dx, vals, ders):
        self.x0, self.dx = x0, dx
        self.vals, self.ders = vals, ders

    def __call__(self, xq):
        xq = np.asarray(xq, dtype=float)
        idx = np.clip(((xq - self.x0) / self.dx).astype(int), 0, len(self.vals) - 2)
        t = (xq - self.x0) / self.dx - idx
        t2, t3 = t * t, t * t * t
        h00 = 2.0 * t3 - 3.0 * t2 + 1.0
        h10 = t3 - 2.0 * t2 + t
        h01 = -2.0 * t3 + 3.0 * t2
        h11 = t3 - t2
        return (self.vals[idx] * h00 + self.ders[idx] * self.dx * h10
                + self.vals[idx + 1] * h01 + self.ders[idx + 1] * self.dx * h11)


def _profile_interpolants(w: WaveProfile, spec: ReactionSpec):
    nu, b = w.params.nu, w.params.b
    vxxx = (w.c * w.vxx - b * spec.df(w.v) * w.vx) / nu
    x0, dx = -w.grid.l_dom, w.grid.dx
    v_h = _Hermite(x0, dx, w.v, w.vx)
    vx_h = _Hermite(x0, dx, w.vx, w.vxx)
    vxx_h = _Hermite(x0, dx, w.vxx, vxxx)
    return v_h, vx_h, vxx_h


def _bracket_root(x, fvals, target=0.0):
    sign = (fvals[:-1] - target) * (fvals[1:] - target)
    hits = np.nonzero(sign <= 0.0)[0]
    if len(hits) == 0:
        return None
    return int(hits[0])


def find_landmarks(w: WaveProfile, spec: ReactionSpec, alphas) -> dict:
    """Solve (b/nu) f(v)/v_x = alpha c/nu for each alpha by monotone bisection.

    Also returns "x0" (v = a), "x1" (root of v_xx) and "x_star" (v = v_star).
    The ratio is strictly increasing, so each admissible level is crossed once.
    """
    nu = w.params.nu
    gm, gp = gamma_limits(spec, w.params, w.c)
    v_h, vx_h, vxx_h = _profile_interpolants(w, spec)
    x = w.grid.x
    beta_grid = ratio_beta(spec, w.params, w.c, w.v, w.vx)

    def beta_at(xq):
        return w.params.b / nu * spec.f(v_h(xq)) / vx_h(xq)

    out = {}
    for alpha in alphas:
        target = alpha * w.c / nu
        if not gm < target < gp:
            raise ConfigError(
                f"alpha={alpha}: level {target:.6g} outside admissible range ({gm:.6g}, {gp:.6g})")
        j = _bracket_root(x, beta_grid, target)
        if j is None:
            raise ConfigError(f"alpha={alpha}: level not bracketed on the grid")
        out[alpha] = brentq(lambda s: float(beta_at(s)) - target, x[j], x[j + 1], xtol=1e-13)

    for name, fvals, func, target in (
        ("x0", w.v, v_h, spec.a),
        ("x1", w.vxx, vxx_h, 0.0),
        ("x_star", w.v, v_h, spec.v_star),
    ):
        j = _bracket_root(x, fvals, target)
        if j is None:
            raise NumericsError(f"landmark {name} not bracketed on the grid")
        out[name] = brentq(lambda s: float(func(s)) - target, x[j], x[j + 1], xtol=1e-13)
    return out


# ---------------------------------------------------------------------------
# weighted integrals with analytic tail corrections
# ---------------------------------------------------------------------------

def _tail_corrections(w, spec, weight_rate):
    """Tails of int e^{-weight_rate*x} v_x^2 dx beyond the truncated domain.

    Uses v_x ~ e^{lam_u x} on the left and e^{lam_s x} on the right; the
    corresponding integrand rates must be positive for the tails to decay.
    """
    lam_u, lam_s = decay_rates(spec, w.params, w.c)
    rate_left = 2.0 * lam_u - weight_rate
    rate_right = weight_rate - 2.0 * lam_s
    if rate_left <= 0.0 or rate_right <= 0.0:
        raise NumericsError(
            f"weighted tail does not decay (rates {rate_left:.3g}, {rate_right:.3g}); "
            "enlarge the truncation domain")
    L = w.grid.l_dom
    left = math.exp(weight_rate * L) * w.vx[0] ** 2 / rate_left
    right = math.exp(-weight_rate * L) * w.vx[-1] ** 2 / rate_right
    return left, right


def weighted_integrals(w: WaveProfile, spec: ReactionSpec) -> WaveIntegrals:
    """Trapezoid quadrature of the weighted profile energies plus tail corrections."""
    x = w.grid.x
    nu = w.params.nu
    lam_u, lam_s = decay_rates(spec, w.params, w.c)

    def weighted(rate, vals_sq):
        body = trapz(w.grid, np.exp(-rate * x) * vals_sq)
        left, right = _tail_corrections(w, spec, rate)
        return body + left + right

    vx_sq = w.vx * w.vx
    Z = weighted(w.c / nu, vx_sq)
    Zhalf = weighted(w.c / (2.0 * nu), vx_sq)
    norm_vx_sq = weighted(0.0, vx_sq)
    # v_xx ~ lam * v_x in each tail, so reuse the v_x rates with the lam^2 factors
    body = trapz(w.grid, w.vxx * w.vxx)
    left = w.vxx[0] ** 2 / (2.0 * lam_u)
    right = w.vxx[-1] ** 2 / (-2.0 * lam_s)
    norm_vxx_sq = body + left + right
    return WaveIntegrals(Z, Zhalf, norm_vx_sq, norm_vxx_sq)


# ---------------------------------------------------------------------------
# profile bound checks
# ---------------------------------------------------------------------------

def profile_residual(w: WaveProfile, spec: ReactionSpec) -> float:
    """Max residual of c v_x - nu v_xx - b f(v) over the grid."""
    res = w.c * w.vx - w.params.nu * w.vxx - w.params.b * spec.f(w.v)
    return float(np.max(np.abs(res)))


def verify_profile_bounds(w: WaveProfile, spec: ReactionSpec) -> ValidationReport:
    """Numerical checks of the structural profile estimates.

    (1) v_x^2 is bounded by the potential-energy integral (2b/nu) int_v^1 f;
    (2) the ratio (b/nu) f(v)/v_x increases along the wave;
    (3) the mass ratios (1-v)/v_x and v/v_x are dominated by their value at
        the grid centre on the respective half lines;
    (4) v_xx/v_x decreases (log-concavity of v_x).
    """
    rep = ValidationReport()
    nu, b = w.params.nu, w.params.b
    x = w.grid.x

    bound = 2.0 * b / nu * (spec.f_antideriv(1.0) - spec.f_antideriv(w.v))
    gap = w.vx * w.vx - bound
    tol = slack(np.max(w.vx) ** 2)
    ok = np.all(gap <= tol)
    worst = int(np.argmax(gap))
    rep.add("vx^2 <= (2b/nu) int_v^1 f", bool(ok), witness=float(x[worst]),
            detail=f"max excess {gap[worst]:.3g}")

    beta = ratio_beta(spec, w.params, w.c, w.v, w.vx)
    dbeta = np.diff(beta)
    tol = slack(np.max(np.abs(beta)))
    ok = np.all(dbeta >= -tol)
    worst = int(np.argmin(dbeta))
    rep.add("(b/nu) f(v)/vx increasing", bool(ok), witness=float(x[worst]),
            detail=f"min increment {dbeta[worst]:.3g}")

    mid = w.grid.n // 2
    k_plus = (1.0 - w.v[mid]) / w.vx[mid]
    k_minus = w.v[mid] / w.vx[mid]
    right = (1.0 - w.v[mid:]) / w.vx[mid:]
    left = w.v[:mid + 1] / w.vx[:mid + 1]
    ok_r = np.all(right <= k_plus + slack(k_plus))
    ok_l = np.all(left <= k_minus + slack(k_minus))
    rep.add("(1-v)/vx <= K+ right of centre", bool(ok_r),
            witness=float(x[mid + int(np.argmax(right))]),
            detail=f"K+ = {k_plus:.6g}")
    rep.add("v/vx <= K- left of centre", bool(ok_l),
            witness=float(x[int(np.argmax(left))]),
            detail=f"K- = {k_minus:.6g}")

    rho = w.vxx / w.vx
    drho = np.diff(rho)
    tol = slack(np.max(np.abs(rho)))
    ok = np.all(drho <= tol)
    worst = int(np.argmax(drho))
    rep.add("vxx/vx decreasing (log-concavity)", bool(ok), witness=float(x[worst]),
            detail=f"max increment {drho[worst]:.3g}")
    return rep


# ---------------------------------------------------------------------------
# shifted profile evaluation for the phase-adaptive solvers
# ---------------------------------------------------------------------------

class ProfileShifter:
    """Evaluates (v, v_x) of the profile at grid positions shifted by phases.

    eval takes an array of shifts with shape (B,) and returns (B, n) arrays.
    """

    def eval(self, shifts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        raise NotImplementedError


class _NagumoShifter(ProfileShifter):
    def __init__(self, w: WaveProfile):
        self.k = w.params.front_rate
        # e^{-k(x+C)} = e^{-kx} * e^{-kC}: one outer product instead of a (B,n) exp
        self.exp_neg_kx = np.exp(-self.k * w.grid.x)

    def eval(self, shifts):
        s = np.exp(-self.k * np.asarray(shifts, dtype=float))
        t = s[:, None] * self.exp_neg_kx[None, :]
        v = 1.0 / (1.0 + t)
        vx = self.k * v * (1.0 - v)
        return v, vx


class _SplineShifter(ProfileShifter):
    """Cubic-Hermite shift evaluation of a stored profile with exponential tails."""

    def __init__(self, w: WaveProfile, spec: ReactionSpec):
        self.w = w
        self.v_h, self.vx_h, _ = _profile_interpolants(w, spec)
        self.lam_u, self.lam_s = decay_rates(spec, w.params, w.c)
        self.L = w.grid.l_dom

    def eval(self, shifts):
        shifts = np.asarray(shifts, dtype=float)
        xq = self.w.grid.x[None, :] + shifts[:, None]
        inside = np.clip(xq, -self.L, self.L)
        v = self.v_h(inside.ravel()).reshape(xq.shape)
        vx = self.vx_h(inside.ravel()).reshape(xq.shape)
        left = xq < -self.L
        if np.any(left):
            d = xq[left] + self.L
            v0, vx0 = self.w.v[0], self.w.vx[0]
            v[left] = v0 * np.exp(self.lam_u * d)
            vx[left] = vx0 * np.exp(self.lam_u * d)
        right = xq > self.L
        if np.any(right):
            d = xq[right] - self.L
            v1, vx1 = self.w.v[-1], self.w.vx[-1]
            v[right] = 1.0 - (1.0 - v1) * np.exp(self.lam_s * d)
            vx[right] = vx1 * np.exp(self.lam_s * d)
        return v, vx


def make_shifter(w: WaveProfile, spec: ReactionSpec) -> ProfileShifter:
    """Closed-form shifter when available, cubic interpolation otherwise."""
    if w.nagumo_a is not None:
        return _NagumoShifter(w)
    return _SplineShifter(w, spec)
