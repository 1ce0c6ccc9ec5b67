"""Command-line interface: ``ppcode <subcommand> ...``.

Exit status is 0 when every asserted invariant held, 1 when one failed and
2 for invalid input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from ..code import encode
from ..decode import agreement_threshold, list_decode
from ..errors import ConfigError, PPCError
from ..rng import trial_rng
from . import io
from .audit import audit_all
from .channel import corrupt_columns
from .experiment import ExperimentConfig, experiment_lines, run_experiment, summarize
from .oracle import brute_force_list
from .params import suggest_params


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _config(args) -> ExperimentConfig:
    if not args.config:
        raise ConfigError("--config is required for this subcommand")
    cfg = ExperimentConfig.load(args.config)
    if getattr(args, "seed", None) is not None:
        cfg.seed = args.seed
    return cfg


def _poly_payload(polys) -> list[list[list[int]]]:
    return [p.coeffs.tolist() for p in polys]


def cmd_params(args) -> int:
    sugg = suggest_params(Fraction(args.epsilon), Fraction(args.rate))
    _emit(io.dumps(sugg.to_dict()), args.out)
    return 0


def cmd_encode(args) -> int:
    cfg = _config(args)
    code = cfg.code()
    if args.message:
        f = io.read_poly(args.message, code.ctx)
    else:
        f = code.random_message(trial_rng(cfg.seed, 0))
    _emit(io.matrix_to_csv(encode(code, f)), args.out)
    return 0


def cmd_corrupt(args) -> int:
    cfg = _config(args)
    code = cfg.code()
    c = io.read_matrix(args.input, code.ctx.q)
    e = cfg.errors if args.errors is None else args.errors
    _emit(io.matrix_to_csv(corrupt_columns(c, e, trial_rng(cfg.seed, 0), q=code.ctx.q)), args.out)
    return 0


def _window_and_threshold(cfg, code, args):
    w = args.w if args.w is not None else cfg.window(code)
    thr = args.threshold if args.threshold is not None else (
        cfg.threshold_override if cfg.threshold_override is not None
        else agreement_threshold(code, w))
    return w, thr


def cmd_decode(args) -> int:
    cfg = _config(args)
    code = cfg.code()
    r = io.read_matrix(args.input, code.ctx.q)
    w, thr = _window_and_threshold(cfg, code, args)
    out = list_decode(code, r, w, thr, cfg.enumeration_cap)
    stats = dict(out.stats)
    if not args.timings:
        stats.pop("timings")
    payload = {
        "w": w,
        "threshold": out.threshold,
        "dimension": out.dimension,
        "basis": _poly_payload(out.basis),
        "enumerated": out.enumerated,
        "list": None if out.list is None else _poly_payload(out.list),
        "stats": stats,
    }
    _emit(io.dumps(payload), args.out)
    return 0 if out.dimension <= w - 1 else 1


def cmd_oracle(args) -> int:
    cfg = _config(args)
    code = cfg.code()
    r = io.read_matrix(args.input, code.ctx.q)
    _, thr = _window_and_threshold(cfg, code, args)
    found = brute_force_list(code, r, thr, cfg.oracle_cap)
    _emit(io.dumps({"threshold": thr, "list": _poly_payload(found)}), args.out)
    return 0


def cmd_simulate(args) -> int:
    cfg = _config(args)
    records = run_experiment(cfg)
    _emit("\n".join(experiment_lines(cfg, records, timings=args.timings)), args.out)
    return 0 if summarize(cfg, records)["ok"] else 1


def cmd_verify(args) -> int:
    cfg = _config(args)
    code = cfg.code()
    clauses = audit_all(code, args.trials, cfg.seed, cfg.enumeration_cap)
    _emit("\n".join(c.line() for c in clauses), args.out)
    return 0 if all(c.passed for c in clauses) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ppcode", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, config=True):
        p = sub.add_parser(name, help=help_)
        if config:
            p.add_argument("--config", help="JSON file with experiment config fields")
            p.add_argument("--seed", type=int, help="override the config seed")
        p.add_argument("--out", help="output file (default: stdout)")
        p.set_defaults(func=func)
        return p

    p = add("params", cmd_params, "suggest parameters for a gap epsilon and a rate", config=False)
    p.add_argument("--epsilon", required=True, help="rational, e.g. 1/4")
    p.add_argument("--rate", default="1/4", help="rational, e.g. 1/4")

    p = add("encode", cmd_encode, "encode a message grid (random if omitted)")
    p.add_argument("--message", help="CSV coefficient grid")

    p = add("corrupt", cmd_corrupt, "replace random columns of a code matrix")
    p.add_argument("--input", required=True, help="CSV code matrix")
    p.add_argument("--errors", type=int, help="number of columns to corrupt")

    for name, func, help_ in (("decode", cmd_decode, "list-decode a received matrix"),
                              ("oracle", cmd_oracle, "brute-force list of a received matrix")):
        p = add(name, func, help_)
        p.add_argument("--input", required=True, help="CSV received matrix")
        p.add_argument("--w", type=int, help="window (default from config)")
        p.add_argument("--threshold", type=int, help="agreement threshold")
        if name == "decode":
            p.add_argument("--timings", action="store_true", help="include stage timings")

    p = add("simulate", cmd_simulate, "run seeded trials, one JSON line each")
    p.add_argument("--timings", action="store_true", help="include stage timings")

    p = add("verify", cmd_verify, "audit field, code and cyclic structure")
    p.add_argument("--trials", type=int, default=100)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PPCError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
