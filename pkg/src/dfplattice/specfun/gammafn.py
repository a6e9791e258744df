"""Gamma-function front end used across the special-function stack.

Thin wrappers over scipy's complex Gamma with the pole behaviour this
package relies on: ``gamma`` raises at the poles, ``recip_gamma`` is entire
and returns exact zeros there (series over reciprocal Gammas then drop pole
terms automatically).
"""

from __future__ import annotations

import numpy as np
from scipy import special as _sp

__all__ = ["DomainError", "gamma", "recip_gamma", "log_gamma"]


class DomainError(ValueError):
    """A request outside the mathematical domain of an operation."""


def _is_nonpositive_integer(s: complex) -> bool:
    return s.imag == 0.0 and s.real <= 0.0 and s.real == np.floor(s.real)


def gamma(s: complex) -> complex:
    """Gamma(s) for complex s; poles at nonpositive integers raise."""
    s = complex(s)
    if _is_nonpositive_integer(s):
        raise DomainError(f"gamma pole at s = {s}")
    return complex(_sp.gamma(s))


def recip_gamma(s: complex) -> complex:
    """1/Gamma(s), entire; returns 0 at the poles of Gamma."""
    s = complex(s)
    if _is_nonpositive_integer(s):
        return 0.0 + 0.0j
    return complex(_sp.rgamma(s))


def log_gamma(s) -> np.ndarray:
    """Principal-branch log Gamma, vectorized over complex arrays."""
    return _sp.loggamma(s)
