"""Seeded encode / corrupt / decode trials."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field as dc_field, fields
from pathlib import Path

import numpy as np

from ..code import ENUMERATION_CAP, PpcCode, column_agreement, encode, ppc_default
from ..decode import (
    agreement_threshold,
    constraint_residuals,
    in_span,
    is_coprime,
    list_decode,
)
from ..errors import ConfigError, PPCError
from ..gf.field import FieldCtx, field_create
from ..gf.poly import BiPoly
from ..rng import trial_rng
from .channel import corrupt_columns
from .io import dumps
from .oracle import ORACLE_CAP, brute_force_list


@dataclass
class ExperimentConfig:
    p: int
    s: int
    t: int
    r: int = 1
    modulus: list[int] | None = None
    w: int | None = None
    errors: int = 0
    trials: int = 1
    seed: int = 0
    threshold_override: int | None = None
    enumeration_cap: int = ENUMERATION_CAP
    oracle: bool = False
    oracle_cap: int = ORACLE_CAP

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        missing = {"p", "s", "t"} - set(d)
        if missing:
            raise ConfigError(f"missing config keys: {sorted(missing)}")
        return cls(**d)

    @classmethod
    def load(cls, path) -> "ExperimentConfig":
        try:
            data = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from exc
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        return asdict(self)

    def field(self) -> FieldCtx:
        return field_create(self.p, self.r, self.modulus)

    def code(self) -> PpcCode:
        return ppc_default(self.field(), self.s, self.t)

    def window(self, code: PpcCode) -> int:
        return self.w if self.w is not None else best_window(code)

    def validate(self) -> PpcCode:
        """Build the code and check every parameter against it."""
        code = self.code()
        if code.s >= code.m:
            raise ConfigError("decoding needs s < m")
        w = self.window(code)
        agreement_threshold(code, w)
        if not 0 <= self.errors <= code.n:
            raise ConfigError(f"errors must lie in [0, {code.n}]")
        if self.trials < 0:
            raise ConfigError("trials must be non-negative")
        return code


def best_window(code: PpcCode) -> int:
    """Window with the smallest agreement threshold (smallest such ``w`` on ties)."""
    return min(range(1, code.m - code.s + 1), key=lambda w: (agreement_threshold(code, w), w))


def message_digest(f: BiPoly) -> str:
    data = ",".join(str(v) for v in f.coeffs.reshape(-1).tolist())
    return hashlib.sha256(data.encode()).hexdigest()[:16]


@dataclass
class TrialRecord:
    trial: int
    digest: str
    agreement: int
    threshold: int
    dimension: int | None = None
    list_size: int | None = None
    in_subspace: bool | None = None
    in_list: bool | None = None
    planted_found: bool | None = None
    interp_ok: bool | None = None
    coprime: bool | None = None
    oracle_equal: bool | None = None
    error: str | None = None
    violations: list[str] = dc_field(default_factory=list)
    timings: dict | None = None

    def to_dict(self, timings: bool = False) -> dict:
        d = asdict(self)
        if not timings:
            d.pop("timings")
        return d


def _keys(polys: list[BiPoly]) -> set[tuple[int, ...]]:
    return {p.key() for p in polys}


def run_trial(cfg: ExperimentConfig, code: PpcCode, w: int, trial: int) -> TrialRecord:
    rng = trial_rng(cfg.seed, trial)
    f = code.random_message(rng)
    c = encode(code, f)
    r = corrupt_columns(c, cfg.errors, rng, q=code.ctx.q)
    natural = agreement_threshold(code, w)
    thr = natural if cfg.threshold_override is None else int(cfg.threshold_override)
    rec = TrialRecord(trial, message_digest(f), column_agreement(c, r), thr)
    try:
        out = list_decode(code, r, w, thr, cfg.enumeration_cap)
    except PPCError as exc:
        rec.error = f"{type(exc).__name__}: {exc}"
        rec.violations.append("decode_error")
        return rec
    rec.dimension = out.dimension
    rec.in_subspace = in_span(code, out.basis, f)
    if out.enumerated:
        rec.list_size = len(out.list)
        rec.in_list = f.key() in _keys(out.list)
    rec.planted_found = rec.in_list if out.enumerated else rec.in_subspace
    rec.interp_ok = not constraint_residuals(code, r, out.interp).any()
    rec.coprime = is_coprime(code, out.interp)
    rec.timings = dict(out.stats["timings"])
    if cfg.oracle and out.enumerated:
        brute = brute_force_list(code, r, thr, cfg.oracle_cap)
        rec.oracle_equal = _keys(brute) == _keys(out.list)

    if rec.dimension > w - 1:
        rec.violations.append("dimension_bound")
    if rec.agreement >= max(thr, natural) and not rec.planted_found:
        rec.violations.append("planted_missing")
    if not rec.interp_ok:
        rec.violations.append("interpolation_residual")
    if not rec.coprime:
        rec.violations.append("not_coprime")
    if rec.oracle_equal is False:
        rec.violations.append("oracle_mismatch")
    return rec


def run_experiment(cfg: ExperimentConfig) -> list[TrialRecord]:
    code = cfg.validate()
    w = cfg.window(code)
    return [run_trial(cfg, code, w, k) for k in range(cfg.trials)]


def summarize(cfg: ExperimentConfig, records: list[TrialRecord]) -> dict:
    code = cfg.code()
    w = cfg.window(code)
    eligible = [r for r in records if r.agreement >= r.threshold]
    dims = [r.dimension for r in records if r.dimension is not None]
    bad = [r.trial for r in records if r.violations]
    return {
        "type": "summary",
        "field": {"p": cfg.p, "r": cfg.r, "q": code.ctx.q},
        "m": code.m, "n": code.n, "s": code.s, "t": code.t, "w": w,
        "errors": cfg.errors,
        "threshold": agreement_threshold(code, w),
        "trials": len(records),
        "eligible": len(eligible),
        "planted_found": sum(1 for r in records if r.planted_found),
        "planted_found_eligible": sum(1 for r in eligible if r.planted_found),
        "max_dimension": max(dims) if dims else None,
        "oracle_checked": sum(1 for r in records if r.oracle_equal is not None),
        "violating_trials": bad,
        "ok": not bad,
    }


def experiment_lines(cfg: ExperimentConfig, records: list[TrialRecord],
                     timings: bool = False) -> list[str]:
    """JSON lines: one per trial, then the summary."""
    lines = [dumps({"type": "trial", **r.to_dict(timings)}) for r in records]
    lines.append(dumps(summarize(cfg, records)))
    return lines


def received_word(cfg: ExperimentConfig, code: PpcCode, trial: int) -> tuple[BiPoly, np.ndarray]:
    """The planted message and received word of a trial, regenerated from the seed."""
    rng = trial_rng(cfg.seed, trial)
    f = code.random_message(rng)
    r = corrupt_columns(encode(code, f), cfg.errors, rng, q=code.ctx.q)
    return f, r
