"""Uniform 1D grid with the norm and inner-product machinery everything else uses.

The grid truncates the real line to [-l_dom, l_dom]. Integrals are composite
trapezoid; on smooth integrands that decay exponentially at both ends this is
spectrally accurate, so no higher-order rule is needed. Perturbation fields
are treated as vanishing outside the domain: the discrete Laplacian uses
homogeneous Dirichlet ghost values, and the gradient part of the V-norm
includes the two ghost differences so that <lap(u), u> = -|grad u|^2 holds
exactly for fields that are zero at the boundary nodes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid on [-l_dom, l_dom] with n nodes (n a power of two)."""

    l_dom: float
    n: int

    def __post_init__(self):
        if self.l_dom <= 0:
            raise ConfigError(f"l_dom must be positive, got {self.l_dom}")
        if self.n < 16:
            raise ConfigError(f"n must be at least 16, got {self.n}")
        if self.n & (self.n - 1):
            raise ConfigError(f"n must be a power of two, got {self.n}")

    @property
    def dx(self) -> float:
        return 2.0 * self.l_dom / (self.n - 1)

    @property
    def x(self) -> np.ndarray:
        xs = np.linspace(-self.l_dom, self.l_dom, self.n)
        xs.flags.writeable = False
        return xs


@dataclass(frozen=True)
class Field:
    """Real-valued function sampled on a grid."""

    grid: GridSpec
    vals: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.vals, dtype=float)
        if vals.shape != (self.grid.n,):
            raise ValueError(f"field shape {vals.shape} does not match grid n={self.grid.n}")
        object.__setattr__(self, "vals", vals)


def trapz(grid: GridSpec, vals: np.ndarray) -> float:
    """Composite trapezoid integral over the grid."""
    return grid.dx * (vals.sum() - 0.5 * (vals[0] + vals[-1]))


def inner(f: Field, g: Field) -> float:
    """H inner product <f, g> = integral of f*g by trapezoid."""
    if f.grid != g.grid:
        raise ValueError("inner product requires fields on the same grid")
    return trapz(f.grid, f.vals * g.vals)


def grad_sq(grid: GridSpec, vals: np.ndarray) -> float:
    """Squared discrete H^1 seminorm with Dirichlet ghost differences."""
    d = np.diff(vals)
    return (d @ d + vals[0] ** 2 + vals[-1] ** 2) / grid.dx


def norms(f: Field) -> tuple[float, float, float]:
    """Return (h_norm, v_norm, sup_norm) of the field.

    h_norm^2 is the trapezoid of f^2, v_norm^2 adds the forward-difference
    gradient energy, sup_norm is the max of |f|. The discrete sup embedding
    sup_norm <= v_norm * (1 + dx) mirrors the continuum bound; the extra
    dx covers the midpoint term of the discrete integration by parts.
    """
    h_sq = trapz(f.grid, f.vals * f.vals)
    v_sq = h_sq + grad_sq(f.grid, f.vals)
    return np.sqrt(h_sq), np.sqrt(v_sq), float(np.max(np.abs(f.vals)))


def apply_laplacian(f: Field, bc: str = "dirichlet") -> Field:
    """Second-order central-difference Laplacian.

    Dirichlet ghost values (u = 0 outside the domain) are the only supported
    boundary condition; perturbation fields decay at +-infinity.
    """
    if bc != "dirichlet":
        raise ValueError(f"unknown boundary condition tag: {bc!r}")
    u = f.vals
    out = np.empty_like(u)
    out[1:-1] = u[:-2] - 2.0 * u[1:-1] + u[2:]
    out[0] = -2.0 * u[0] + u[1]
    out[-1] = u[-2] - 2.0 * u[-1]
    out /= f.grid.dx ** 2
    return Field(f.grid, out)
