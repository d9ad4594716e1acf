"""Random band-limited test functions for the inequality batteries.

Truncated Fourier sums with at most 16 modes and unit amplitude: smooth,
bounded, and concentrated on the low frequencies where the inequalities are
tight. Derivatives are analytic so quadrature is the only discretization.
"""

from __future__ import annotations

import math

import numpy as np

from .grid import GridSpec


def fourier_probe(rng: np.random.Generator, grid: GridSpec,
                  max_modes: int = 16) -> tuple[np.ndarray, np.ndarray]:
    """Random trig sum and its analytic derivative, scaled to amplitude <= 1."""
    x = grid.x
    n_modes = int(rng.integers(1, max_modes + 1))
    js = np.arange(1, n_modes + 1)
    omegas = js * math.pi / grid.l_dom
    a = rng.uniform(-1.0, 1.0, n_modes)
    b = rng.uniform(-1.0, 1.0, n_modes)
    scale = 1.0 / max(np.sum(np.abs(a)) + np.sum(np.abs(b)), 1e-12)
    a *= scale
    b *= scale
    h = np.zeros_like(x)
    hx = np.zeros_like(x)
    for aj, bj, om in zip(a, b, omegas):
        h += aj * np.cos(om * x) + bj * np.sin(om * x)
        hx += -aj * om * np.sin(om * x) + bj * om * np.cos(om * x)
    return h, hx


def hardy_probe(rng: np.random.Generator, grid: GridSpec,
                root: float) -> tuple[np.ndarray, np.ndarray]:
    """Probe with the vanishing condition imposed by subtracting the value at root."""
    x = grid.x
    n_modes = int(rng.integers(1, 17))
    js = np.arange(1, n_modes + 1)
    omegas = js * math.pi / grid.l_dom
    a = rng.uniform(-1.0, 1.0, n_modes)
    b = rng.uniform(-1.0, 1.0, n_modes)
    scale = 1.0 / max(np.sum(np.abs(a)) + np.sum(np.abs(b)), 1e-12)
    a *= scale
    b *= scale
    h = np.zeros_like(x)
    hx = np.zeros_like(x)
    at_root = 0.0
    for aj, bj, om in zip(a, b, omegas):
        h += aj * np.cos(om * x) + bj * np.sin(om * x)
        hx += -aj * om * np.sin(om * x) + bj * om * np.cos(om * x)
        at_root += aj * math.cos(om * root) + bj * math.sin(om * root)
    return h - at_root, hx


def compact_field(rng: np.random.Generator, grid: GridSpec,
                  flat: float = 0.3, cutoff: float = 0.6) -> np.ndarray:
    """Random smooth field with exact compact support inside the domain.

    A Fourier probe multiplied by a cos^2 taper that is 1 on |x| <= flat*l_dom
    and exactly 0 beyond cutoff*l_dom, so boundary nodes vanish and the
    discrete integration-by-parts identities hold without boundary defects.
    """
    h, _ = fourier_probe(rng, grid)
    x = np.abs(grid.x) / grid.l_dom
    ramp = np.clip((x - flat) / (cutoff - flat), 0.0, 1.0)
    taper = np.where(x >= cutoff, 0.0, np.cos(0.5 * math.pi * ramp) ** 2)
    return h * taper
