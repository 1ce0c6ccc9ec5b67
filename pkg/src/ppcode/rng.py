"""Seeded random streams.

Every trial draws from its own Philox stream keyed by ``(seed, trial)``,
so results do not depend on how many trials ran before or in what order.
"""

from __future__ import annotations

import numpy as np


def trial_rng(seed: int, trial: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([int(seed), int(trial)])))
