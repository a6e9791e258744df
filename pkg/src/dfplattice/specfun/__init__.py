"""Special-function backend: Gamma, Fox-Wright series, Mittag-Leffler,
scaled Bessel, one-sided Levy density, Hartman-Watson, numerical Mellin."""

from .gammafn import DomainError, gamma, log_gamma, recip_gamma
from .wright import (
    FoxWrightParams,
    FoxWrightValue,
    bessel_i_scaled,
    fox_wright,
    fox_wright_eval,
    fox_wright_grid,
    mittag_leffler,
    wright_cos,
    wright_sinc,
)
from .levy import LevyValue, levy_laplace, levy_pdf, levy_pdf_eval
from .hartman_watson import (
    AccuracyWarning,
    bessel_from_hartman_watson,
    cancellation_floor,
    hartman_watson_theta,
)
from .mellin import (
    mellin_convolve,
    mellin_inverse,
    mellin_parseval_check,
    mellin_transform,
)

__all__ = [
    "DomainError",
    "gamma",
    "recip_gamma",
    "log_gamma",
    "FoxWrightParams",
    "FoxWrightValue",
    "fox_wright",
    "fox_wright_eval",
    "fox_wright_grid",
    "mittag_leffler",
    "bessel_i_scaled",
    "wright_cos",
    "wright_sinc",
    "LevyValue",
    "levy_pdf",
    "levy_pdf_eval",
    "levy_laplace",
    "AccuracyWarning",
    "hartman_watson_theta",
    "cancellation_floor",
    "bessel_from_hartman_watson",
    "mellin_transform",
    "mellin_inverse",
    "mellin_convolve",
    "mellin_parseval_check",
]
