"""Command-line front end.

Exit codes: 0 success / positive verdict, 1 negative verdict, 2 malformed
input or usage, 3 scenario generation failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .curves import MAX_CONIC_SEARCH_POINTS, find_overloaded_conic, find_overloaded_line
from .decision import (
    Decision,
    decide_intersection_set,
    noether_decompose,
    verify_cayley_bacharach,
)
from .generators import KINDS, GenerationError, generate, scenario_filename, suite_specs
from .independence import PointSet, independence_report
from .poly import Poly, format_poly, format_rational

EXIT_OK, EXIT_NO, EXIT_BAD_INPUT, EXIT_GEN = 0, 1, 2, 3


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: Optional[str] = None
    m: Optional[int] = None
    n: Optional[int] = None
    degree: Optional[int] = None
    seed: Optional[int] = None
    kind: Optional[str] = None
    output: str = "json"
    poly_path: Optional[str] = None
    suite: Optional[str] = None
    out: Optional[str] = None
    seeds: int = 20
    max_degree: int = 5


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc


def load_points(path: str) -> PointSet:
    try:
        return PointSet.from_json(_read_json(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def load_poly(path: str) -> Poly:
    try:
        return Poly.from_json(_read_json(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _check_degrees(cfg: RunConfig) -> None:
    if cfg.m is None or cfg.n is None:
        raise InputError("--m and --n are required")
    if not 1 <= cfg.m <= cfg.n:
        raise InputError(f"need 1 <= m <= n, got m={cfg.m}, n={cfg.n}")


def render_decision_text(d: Decision) -> str:
    lines = [f"verdict: {'true' if d.verdict else 'false'}", f"kappa: {d.kappa}"]
    if d.sigma_m is not None:
        lines.append(f"sigma_m: {format_poly(d.sigma_m)}")
        lines.append(f"sigma_n: {format_poly(d.sigma_n)}")
    f = d.failure
    if f is not None:
        lines.append(f"failure: {f.kind}")
        if f.kind == "condition_a":
            x, y = f.point
            lines.append(f"point: ({format_rational(x)}, {format_rational(y)})")
        if f.kind in ("condition_a", "condition_b"):
            lines.append(f"certificate: {format_poly(f.certificate)}")
        else:
            lines.append(f"expected {f.expected} points, got {f.actual}")
    return "\n".join(lines) + "\n"


def cmd_check(cfg: RunConfig) -> int:
    _check_degrees(cfg)
    X = load_points(cfg.input_path)
    d = decide_intersection_set(X, cfg.m, cfg.n)
    if cfg.output == "text":
        sys.stdout.write(render_decision_text(d))
    else:
        sys.stdout.write(dumps(d.to_json()))
    return EXIT_OK if d.verdict else EXIT_NO


def cmd_witness(cfg: RunConfig) -> int:
    _check_degrees(cfg)
    X = load_points(cfg.input_path)
    d = decide_intersection_set(X, cfg.m, cfg.n)
    if not d.verdict:
        sys.stdout.write(dumps(d.to_json()))
        return EXIT_NO
    if cfg.output == "text":
        sys.stdout.write(f"sigma_m: {format_poly(d.sigma_m)}\nsigma_n: {format_poly(d.sigma_n)}\n")
    else:
        sys.stdout.write(dumps({"sigma_m": d.sigma_m.to_json(), "sigma_n": d.sigma_n.to_json()}))
    return EXIT_OK


def cmd_analyze(cfg: RunConfig) -> int:
    if cfg.degree is None or cfg.degree < 0:
        raise InputError("--degree must be a nonnegative integer")
    X = load_points(cfg.input_path)
    n = cfg.degree
    out = independence_report(X, n).to_json()
    line = find_overloaded_line(X, n)
    out["overloaded_line"] = None if line is None else {
        "line": line[0].to_json(), "points": line[1].to_json()["points"]
    }
    if len(X) <= MAX_CONIC_SEARCH_POINTS:
        conic = find_overloaded_conic(X, n)
        out["overloaded_conic"] = None if conic is None else {
            "conic": conic[0].to_json(), "points": conic[1].to_json()["points"]
        }
    else:
        out["overloaded_conic"] = "skipped"
    if cfg.output == "text":
        for key, value in out.items():
            sys.stdout.write(f"{key}: {json.dumps(value)}\n")
    else:
        sys.stdout.write(dumps(out))
    return EXIT_OK


def write_suite(directory: Path, seeds: int = 20, max_degree: int = 5) -> list[dict]:
    directory.mkdir(parents=True, exist_ok=True)
    manifest = []
    for kind, m, n, seed in suite_specs(max_degree, range(seeds)):
        sc = generate(kind, m, n, seed)
        name = scenario_filename(kind, m, n, seed)
        (directory / name).write_text(dumps(sc.to_json()))
        manifest.append({"file": name, "kind": kind, "m": m, "n": n, "seed": seed, "truth": sc.truth})
    (directory / "manifest.json").write_text(dumps({"scenarios": manifest}))
    return manifest


def cmd_gen(cfg: RunConfig) -> int:
    if cfg.suite is not None:
        write_suite(Path(cfg.suite), cfg.seeds, cfg.max_degree)
        return EXIT_OK
    if cfg.kind is None or cfg.seed is None or cfg.m is None or cfg.n is None:
        raise InputError("gen needs --kind, --m, --n and --seed (or --suite DIR)")
    try:
        sc = generate(cfg.kind, cfg.m, cfg.n, cfg.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    text = dumps(sc.to_json())
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_noether(cfg: RunConfig) -> int:
    _check_degrees(cfg)
    X = load_points(cfg.input_path)
    p = load_poly(cfg.poly_path)
    d = decide_intersection_set(X, cfg.m, cfg.n)
    if not d.verdict:
        sys.stdout.write(dumps(d.to_json()))
        return EXIT_NO
    try:
        parts = noether_decompose(p, d.sigma_m, d.sigma_n, X)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if parts is None:
        sys.stderr.write("error: decomposition system is inconsistent\n")
        return EXIT_NO
    A, B = parts
    sys.stdout.write(dumps({
        "sigma_m": d.sigma_m.to_json(),
        "sigma_n": d.sigma_n.to_json(),
        "A": A.to_json(),
        "B": B.to_json(),
    }))
    return EXIT_OK


def cmd_cb_verify(cfg: RunConfig) -> int:
    _check_degrees(cfg)
    X = load_points(cfg.input_path)
    report = verify_cayley_bacharach(X, cfg.m, cfg.n)
    sys.stdout.write(dumps(report.to_json()))
    return EXIT_OK if all(report) else EXIT_NO


COMMANDS = {
    "check": cmd_check,
    "witness": cmd_witness,
    "analyze": cmd_analyze,
    "gen": cmd_gen,
    "noether": cmd_noether,
    "cb-verify": cmd_cb_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planecurves",
        description="Decide whether mn rational points are cut out by curves of degrees m and n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def degrees(p):
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)

    def output(p):
        p.add_argument("--output", choices=("json", "text"), default="json")

    for name in ("check", "witness"):
        p = sub.add_parser(name)
        degrees(p)
        output(p)
        p.add_argument("input_path", metavar="FILE", help="point set JSON, or - for stdin")

    p = sub.add_parser("analyze")
    p.add_argument("--degree", type=int, required=True)
    output(p)
    p.add_argument("input_path", metavar="FILE")

    p = sub.add_parser("gen")
    p.add_argument("--kind", choices=KINDS)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="write the scenario here instead of stdout")
    p.add_argument("--suite", metavar="DIR", help="write the full corpus and a manifest to DIR")
    p.add_argument("--seeds", type=int, default=20)
    p.add_argument("--max-degree", type=int, default=5)

    p = sub.add_parser("noether")
    degrees(p)
    p.add_argument("--p", dest="poly_path", required=True, metavar="POLYFILE")
    p.add_argument("input_path", metavar="POINTFILE")

    p = sub.add_parser("cb-verify")
    degrees(p)
    p.add_argument("input_path", metavar="FILE")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__})
    try:
        return COMMANDS[cfg.command](cfg)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BAD_INPUT
    except GenerationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_GEN


if __name__ == "__main__":
    sys.exit(main())
