"""Default inequality tolerances: 1e-8 absolute plus 1e-6 relative.

Trapezoid error at 4096 nodes over dozens of front widths sits far below
this, so inequality checks gated by slack() are insensitive to quadrature.
"""

ABS_TOL = 1e-8
REL_TOL = 1e-6


def slack(scale: float) -> float:
    """Tolerance for an inequality whose sides have the given magnitude."""
    return ABS_TOL + REL_TOL * abs(scale)
