"""Scalar model parameters of the evolution equations."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["ModelParams"]


@dataclass(frozen=True)
class ModelParams:
    """Drift mu, diffusion sigma2 (>= 0), Hurst exponent in (0,1), damping p >= 0.

    ``p`` is the Gaussian-damping / subordination parameter of the
    Klein-Gordon problem; the Mellin-Barnes kernel routines additionally
    require alpha + 1/2 <= hurst < 1 and enforce it at the call site.
    """

    mu: float
    sigma2: float
    hurst: float
    p: float = 0.0

    def __post_init__(self):
        if self.sigma2 < 0.0:
            raise ValueError("sigma2 must be >= 0")
        if not 0.0 < self.hurst < 1.0:
            raise ValueError("hurst must lie in (0, 1)")
        if self.p < 0.0:
            raise ValueError("p must be >= 0")
