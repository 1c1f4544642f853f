"""Command-line front end; every subcommand prints one JSON report."""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass

from . import jsonio
from .bautin import bautin_system, ideal_probe, quasi_homogeneity_check
from .center import certify_center, reduce_word, theorem2_bound
from .errors import BranchError, InternalConsistencyError, ParseError, ResourceError
from .oracle import convergence_check, word_flow
from .return_map import Word, return_map
from .rings import parse_rational
from .sampling import random_cancelling_word, random_word
from .series import DEFAULT_DEGREE, ps_eval

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3
EXIT_RESOURCE = 4
EXIT_BRANCH = 5

MAX_DEGREE = 64


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None = None
    word: str | None = None
    degree: int | None = None
    route: str = "all"
    axes: tuple | None = None
    count: int | None = None
    probe: int = 0
    seed: int = 0
    trials: int = 100
    max_len: int = 5
    max_axis: int = 4
    max_d: int = 24
    r0: float | None = None
    radii: tuple = (1e-1, 1e-2, 1e-3, 1e-4)
    output: str | None = None


def _int_list(text):
    try:
        vals = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not vals or any(v < 1 for v in vals):
        raise argparse.ArgumentTypeError("axes must be positive integers")
    return vals


def _float_list(text):
    try:
        return tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def parse_inline_word(text, truncation):
    """``"1:1/2,2:-3"`` -> word with letters (1, 1/2), (2, -3)."""
    letters = []
    for idx, chunk in enumerate(x for x in text.split(",") if x.strip()):
        loc = f"--word item {idx}"
        if ":" not in chunk:
            raise ParseError("letters are written axis:amplitude", loc)
        axis, amp = chunk.split(":", 1)
        try:
            axis = int(axis)
        except ValueError:
            raise ParseError(f"bad axis {axis!r}", loc) from None
        if axis < 1:
            raise ParseError("axis must be >= 1", loc)
        letters.append((axis, parse_rational(amp, loc)))
    return Word(tuple(letters), truncation)


def build_parser():
    p = argparse.ArgumentParser(prog="rectpath", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, word=False):
        sp.add_argument("--output", help="write the JSON report here instead of stdout")
        sp.add_argument("--seed", type=int, default=0)
        if word:
            sp.add_argument("--input", help="word JSON file")
            sp.add_argument("--word", help="inline word, e.g. 1:1/2,2:-3")
            sp.add_argument("--degree", type=int, help="truncation degree (defaults to the word's)")

    sp = sub.add_parser("returnmap", help="return-map coefficients of a word")
    common(sp, word=True)
    sp.add_argument("--route", choices=["a", "b", "c", "all"], default="all")

    sp = sub.add_parser("center", help="center verdict by reduction and coefficient bound")
    common(sp, word=True)

    sp = sub.add_parser("bautin", help="symbolic coefficients for an axis pattern")
    common(sp)
    sp.add_argument("--axes", type=_int_list, required=True)
    sp.add_argument("--count", type=int)
    sp.add_argument("--probe", type=int, default=0, metavar="EXTRA",
                    help="also sample c_(d+1+k), k=1..EXTRA, on the center variety")

    sp = sub.add_parser("crosscheck", help="randomised route agreement and bound probes")
    common(sp)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--degree", type=int, default=12)
    sp.add_argument("--max-len", type=int, default=5)
    sp.add_argument("--max-axis", type=int, default=4)
    sp.add_argument("--max-d", type=int, default=24)

    sp = sub.add_parser("oracle", help="series against closed-form flows")
    common(sp, word=True)
    sp.add_argument("--r0", type=float)
    sp.add_argument("--radii", type=_float_list, default=(1e-1, 1e-2, 1e-3, 1e-4))
    sp.add_argument("--max-len", type=int, default=4)
    sp.add_argument("--max-axis", type=int, default=3)
    return p


def config_from_args(ns):
    return RunConfig(**{k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__})


def _load_word(cfg, required=True):
    degree = cfg.degree
    if degree is not None and not 1 <= degree <= MAX_DEGREE:
        raise ResourceError(f"degree must be within 1..{MAX_DEGREE}")
    if cfg.input and cfg.word:
        raise ParseError("give either --input or --word, not both")
    if cfg.input:
        w = jsonio.parse_word_file(cfg.input)
    elif cfg.word is not None:
        w = parse_inline_word(cfg.word, degree or DEFAULT_DEGREE)
    elif required:
        raise ParseError("a word is required (--input or --word)")
    else:
        return None
    return w.with_truncation(degree) if degree else w


def _cmd_returnmap(cfg):
    w = _load_word(cfg)
    series = return_map(w, cfg.route)
    return {"word": jsonio.word_to_json(w), "route": cfg.route, "degree": w.truncation,
            "coefficients": jsonio.series_to_json(series)}


def _cmd_center(cfg):
    w = _load_word(cfg)
    return jsonio.verdict_to_json(certify_center(w))


def _cmd_bautin(cfg):
    system = bautin_system(cfg.axes, cfg.count)
    out = _bautin_json(system)
    out["quasi_homogeneous"] = all(quasi_homogeneity_check(system, z) for z in (2, -3))
    if cfg.probe:
        out["probe"] = ideal_probe(system, cfg.probe, seed=cfg.seed)
    return out


def _bautin_json(system):
    out = system.to_json()
    out["printed"] = [str(p) for p in system.polys]
    return out


def _cmd_crosscheck(cfg):
    if not 1 <= cfg.degree <= MAX_DEGREE:
        raise ResourceError(f"degree must be within 1..{MAX_DEGREE}")
    failures = []
    agree = 0
    probes = {"nontrivial": 0, "nontrivial_witnessed": 0, "cancelling": 0, "cancelling_certified": 0,
              "skipped_large_d": 0}
    for t in range(cfg.trials):
        rng = random.Random(cfg.seed * 1_000_003 + t)
        w = random_word(rng, cfg.max_len, cfg.max_axis, cfg.degree)
        try:
            return_map(w, "all")
            agree += 1
            if reduce_word(w).letters:
                if theorem2_bound(w.axes) > cfg.max_d:
                    probes["skipped_large_d"] += 1
                else:
                    v = certify_center(w)
                    probes["nontrivial"] += 1
                    probes["nontrivial_witnessed"] += int(not v.is_center)
            c = random_cancelling_word(rng, max(1, cfg.max_len - 1), cfg.max_axis, cfg.degree)
            if theorem2_bound(c.axes) <= cfg.max_d:
                probes["cancelling"] += 1
                probes["cancelling_certified"] += int(certify_center(c).is_center)
        except InternalConsistencyError as exc:
            failures.append({"trial": t, "error": str(exc), "dump": exc.dump})
    report = {"trials": cfg.trials, "degree": cfg.degree, "max_len": cfg.max_len, "max_axis": cfg.max_axis,
              "route_agreement": agree, "theorem2_probe": probes, "failures": failures,
              "all_passed": not failures}
    if failures:
        raise InternalConsistencyError("crosscheck found disagreements", report)
    return report


def _cmd_oracle(cfg):
    w = _load_word(cfg, required=False)
    degree = cfg.degree or 10
    if w is None:
        rng = random.Random(cfg.seed)
        w = random_word(rng, cfg.max_len, cfg.max_axis, degree, bound=9)
        # keep amplitudes small so the radii stay inside the convergence disc
        w = Word(tuple((k, b / 9) for k, b in w.letters), degree)
    report = convergence_check(w, degree, cfg.radii, seed=cfg.seed)
    out = {"word": jsonio.word_to_json(w), "convergence": report}
    if cfg.r0 is not None:
        flow = word_flow(w, cfg.r0)
        approx = ps_eval(return_map(w, "A", degree), cfg.r0)
        out["flow_at_r0"] = {"r0": cfg.r0, "flow": [flow.value.real, flow.value.imag],
                             "series": [approx.real, approx.imag],
                             "abs_difference": abs(flow.value - approx)}
    return out


COMMANDS = {
    "returnmap": _cmd_returnmap,
    "center": _cmd_center,
    "bautin": _cmd_bautin,
    "crosscheck": _cmd_crosscheck,
    "oracle": _cmd_oracle,
}


def run(cfg):
    """Execute ``cfg``; returns ``(exit_status, report_dict)``."""
    base = {"command": cfg.command, "seed": cfg.seed, "conventions": jsonio.CONVENTIONS}
    try:
        body = COMMANDS[cfg.command](cfg)
        return EXIT_OK, {**base, "ok": True, "result": body}
    except InternalConsistencyError as exc:
        return EXIT_INCONSISTENT, {**base, "ok": False, "error": str(exc), "diagnostic": exc.dump}
    except ResourceError as exc:
        return EXIT_RESOURCE, {**base, "ok": False, "error": str(exc)}
    except BranchError as exc:
        return EXIT_BRANCH, {**base, "ok": False, "error": str(exc), "segment": exc.segment}
    except (ParseError, ValueError) as exc:
        return EXIT_USAGE, {**base, "ok": False, "error": str(exc)}


def main(argv=None):
    ns = build_parser().parse_args(argv)
    cfg = config_from_args(ns)
    status, report = run(cfg)
    text = jsonio.dumps(report)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
