"""Parameter schedule for a target gap ``epsilon`` and rate."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import ceil, floor

from sympy import nextprime

from ..errors import ConfigError, InfeasibleRateError


@dataclass(frozen=True)
class ParamSuggestion:
    p: int
    m: int
    n: int
    s: int
    t: int
    w: int
    rate: Fraction
    threshold_fraction: Fraction
    radius: Fraction

    def to_dict(self) -> dict:
        d = asdict(self)
        for k in ("rate", "threshold_fraction", "radius"):
            d[k] = str(d[k])
        return d


def suggest_params(epsilon, rate) -> ParamSuggestion:
    """Prime field of size about ``1/eps^3`` with ``w`` about ``1/(2 eps^2)``
    and ``m - s`` about ``1/eps^2``.

    ``threshold_fraction`` is the agreement fraction the decoder needs,
    ``m/(w(m-s-w+1)) + t/n``; ``radius`` is one minus it.
    """
    eps = Fraction(epsilon)
    R = Fraction(rate)
    if not 0 < eps <= Fraction(1, 2):
        raise ConfigError(f"epsilon must lie in (0, 1/2], got {eps}")
    if not 0 < R < 1:
        raise InfeasibleRateError(f"rate must lie in (0, 1), got {R}")
    p = int(nextprime(ceil(1 / eps**3) - 1))
    m, n = p, p - 1
    gap = ceil(1 / eps**2)
    w = ceil(1 / (2 * eps**2))
    s = m - gap
    if s < 1:
        raise InfeasibleRateError(f"m - 1/eps^2 = {s} leaves no room for s")
    t = floor(R * m * n / s + Fraction(1, 2))
    if not 1 <= t <= n:
        raise InfeasibleRateError(f"rate {R} needs t = {t}, outside [1, {n}]")
    frac = Fraction(m, w * (m - s - w + 1)) + Fraction(t, n)
    return ParamSuggestion(p, m, n, s, t, w, Fraction(s * t, m * n), frac, 1 - frac)
