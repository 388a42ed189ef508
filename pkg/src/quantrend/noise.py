"""Noise families with closed-form densities, quantiles, and seeded sampling."""

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtr, ndtri

from .errors import ValidationError
from .streams import stream

FAMILIES = ("laplace", "gaussian", "cauchy")

_SQRT_2PI = np.sqrt(2.0 * np.pi)


@dataclass(frozen=True)
class NoiseModel:
    """Location-scale noise distribution: 'laplace', 'gaussian', or 'cauchy'."""

    family: str
    location: float = 0.0
    scale: float = 1.0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError(
                f"unknown noise family {self.family!r}; expected one of {FAMILIES}"
            )
        if not (np.isfinite(self.scale) and self.scale > 0):
            raise ValidationError("noise scale must be finite and > 0")
        if not np.isfinite(self.location):
            raise ValidationError("noise location must be finite")

    def pdf(self, x):
        """Density at x (scalar or array)."""
        z = (np.asarray(x, dtype=float) - self.location) / self.scale
        if self.family == "laplace":
            out = 0.5 * np.exp(-np.abs(z))
        elif self.family == "gaussian":
            out = np.exp(-0.5 * z * z) / _SQRT_2PI
        else:
            out = 1.0 / (np.pi * (1.0 + z * z))
        return out / self.scale

    def cdf(self, x):
        """Distribution function at x (scalar or array)."""
        z = (np.asarray(x, dtype=float) - self.location) / self.scale
        if self.family == "laplace":
            return np.where(z < 0, 0.5 * np.exp(z), 1.0 - 0.5 * np.exp(-z))
        if self.family == "gaussian":
            return ndtr(z)
        return 0.5 + np.arctan(z) / np.pi

    def quantile(self, q):
        """Inverse distribution function; q must lie strictly inside (0, 1)."""
        q = np.asarray(q, dtype=float)
        if np.any(q <= 0.0) or np.any(q >= 1.0):
            raise ValidationError("quantile level must lie strictly inside (0, 1)")
        if self.family == "laplace":
            z = np.where(q < 0.5, np.log(2.0 * q), -np.log(2.0 * (1.0 - q)))
        elif self.family == "gaussian":
            z = ndtri(q)
        else:
            z = np.tan(np.pi * (q - 0.5))
        out = self.location + self.scale * z
        return float(out) if out.ndim == 0 else out

    def density_at_zero(self, tau: float) -> float:
        """Density of the tau-centered model at 0, i.e. pdf(quantile(tau))."""
        return float(self.pdf(self.quantile(tau)))

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """n i.i.d. draws.  Cauchy draws go through the inverse CDF so that a
        single uniform variate maps exactly onto the analytic quantile."""
        if n < 1:
            raise ValidationError("sample size must be >= 1")
        if self.family == "laplace":
            return rng.laplace(self.location, self.scale, n)
        if self.family == "gaussian":
            return rng.normal(self.location, self.scale, n)
        u = rng.random(n)
        u = np.where(u == 0.0, 2.0 ** -53, u)
        return self.location + self.scale * np.tan(np.pi * (u - 0.5))

    def sample_centered(self, tau: float, n: int, seed: int, *path: int) -> np.ndarray:
        """n draws shifted by -quantile(tau), so P(u < 0) = tau.

        The stream is keyed by (seed, *path); identical keys reproduce the
        exact same vector, regardless of thread scheduling elsewhere.
        """
        draws = self.sample(n, stream(seed, *path))
        return draws - self.quantile(tau)


def standard_models(scale: float = 1.0) -> tuple[NoiseModel, ...]:
    """The three families at a common scale, location 0."""
    return tuple(NoiseModel(name, 0.0, scale) for name in FAMILIES)
