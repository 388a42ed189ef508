"""Deterministic random streams keyed by integer paths.

Every stochastic routine in the package draws from a generator keyed by
(master seed, *path), where the path identifies the replication, the series
role, or both.  Identical keys give bit-identical streams, distinct keys give
statistically independent ones, and results never depend on how work is
scheduled across threads.
"""

import numpy as np

from .errors import ValidationError


def stream(seed: int, *path: int) -> np.random.Generator:
    """Return an independent generator for the key (seed, *path)."""
    key = [int(seed), *(int(part) for part in path)]
    if any(part < 0 for part in key):
        raise ValidationError("stream keys must be non-negative integers")
    return np.random.default_rng(np.random.SeedSequence(key))
