"""Command-line front end: ``friezeforge rho|pi|verify|frieze-check``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .engine import CCContext, rho_direct, rho_multiplicative
from .gmodules import pi
from .harness import ALL_SUITES, SPEC_SUITES, Config, enumerate_configs, run_suites
from .laurent import EpsilonAssignment, EpsilonError, LaurentPoly, parse_monomial
from .patterns import GridError, bundled_grid, domain_position, frieze_check, grid_from_values, load_grid
from .polygon import Arc, Dissection, Triangulation, all_diagonals

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class LoadedConfig:
    n: int
    T: Triangulation
    R: Dissection
    S: Dissection
    eps: EpsilonAssignment | None

    def context(self) -> CCContext:
        try:
            return CCContext(self.T, self.R, self.eps)
        except EpsilonError as exc:
            raise ConfigError(f"epsilon fails validation: {exc}") from exc


def _pair(item, size: int, what: str) -> Arc:
    if not (isinstance(item, list) and len(item) == 2 and all(isinstance(v, int) for v in item)):
        raise ConfigError(f"{what}: arcs are two-element integer arrays, got {item!r}")
    i, j = item
    if not (1 <= i <= size and 1 <= j <= size) or i == j:
        raise ConfigError(f"{what}: {item} is not a pair of distinct vertices 1..{size}")
    a = Arc(i, j, size)
    if a.is_edge:
        raise ConfigError(f"{what}: {a} is a boundary edge")
    return a


def _dissection(arcs: list[Arc], size: int, name: str) -> Dissection:
    if len(set(arcs)) != len(arcs):
        raise ConfigError(f"{name} lists an arc twice")
    try:
        return Dissection(size, tuple(arcs))
    except ValueError as exc:
        detail = str(exc).removeprefix("not a dissection: ")
        raise ConfigError(f"{name} not a dissection: {detail}") from exc


def parse_config(doc: dict) -> LoadedConfig:
    if not isinstance(doc, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(doc) - {"n", "R", "S", "epsilon"}
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    n = doc.get("n")
    if not isinstance(n, int) or n < 1:
        raise ConfigError(f"n must be a positive integer, got {n!r}")
    size = n + 3
    R = _dissection([_pair(p, size, "R") for p in doc.get("R", [])], size, "R")
    S = _dissection([_pair(p, size, "S") for p in doc.get("S", [])], size, "S")
    both = set(R.arcs) & set(S.arcs)
    if both:
        raise ConfigError(f"R and S share {', '.join(sorted(map(str, both)))}")
    try:
        T = Triangulation(size, R.arcs + S.arcs)
    except ValueError as exc:
        raise ConfigError(f"R ∪ S is not a triangulation: {exc}") from exc
    eps = None
    if "epsilon" in doc:
        raw = doc["epsilon"]
        if not isinstance(raw, dict):
            raise ConfigError("epsilon must map \"i,j\" strings to monomials")
        monomials = {}
        for key, text in raw.items():
            try:
                i, j = (int(v) for v in key.split(","))
            except ValueError:
                raise ConfigError(f"bad epsilon key {key!r}; expected \"i,j\"") from None
            arc = _pair([i, j], size, "epsilon")
            if arc in monomials:
                raise ConfigError(f"epsilon gives {arc} twice")
            try:
                monomials[arc] = parse_monomial(str(text))
            except ValueError as exc:
                raise ConfigError(str(exc)) from exc
        try:
            eps = EpsilonAssignment.from_monomials(T.arcs, monomials)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    return LoadedConfig(n, T, R, S, eps)


def load_config(spec: str) -> LoadedConfig:
    """Read a config file, or a bundled one named ``@name``."""
    try:
        if spec.startswith("@"):
            text = resources.files("friezeforge").joinpath("data", f"{spec[1:]}.json").read_text()
        else:
            text = Path(spec).read_text()
    except (OSError, FileNotFoundError) as exc:
        raise ConfigError(f"cannot read config {spec}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {spec} is not valid JSON: {exc}") from exc
    return parse_config(doc)


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _parse_arc(text: str, n: int) -> Arc:
    try:
        i, j = (int(v) for v in text.split(","))
    except ValueError:
        raise ConfigError(f"--arc expects i,j, got {text!r}") from None
    return _pair([i, j], n + 3, "--arc")


def _targets(args, cfg: LoadedConfig) -> list[Arc]:
    if args.all == (args.arc is not None):
        raise ConfigError("give exactly one of --arc i,j or --all")
    if args.all:
        return sorted(all_diagonals(cfg.n), key=lambda a: (domain_position(a), a))
    return [_parse_arc(args.arc, cfg.n)]


def _poly_json(p: LaurentPoly) -> dict:
    return {"text": str(p), "terms": p.to_json()}


def cmd_rho(args) -> int:
    cfg = load_config(args.config)
    ctx = cfg.context()
    arcs = _targets(args, cfg)
    entries, ok = [], True
    for a in arcs:
        entry = {"arc": [a.i, a.j], "position": list(domain_position(a))}
        if args.method in ("direct", "both"):
            entry["direct"] = rho_direct(ctx, a)
        if args.method in ("mult", "both"):
            entry["mult"] = rho_multiplicative(ctx, a)
        if args.method == "both":
            entry["agree"] = entry["direct"] == entry["mult"]
            ok = ok and entry["agree"]
        entries.append(entry)
    if args.format == "json":
        out = []
        for e in entries:
            row = {k: (_poly_json(v) if isinstance(v, LaurentPoly) else v) for k, v in e.items()}
            out.append(row)
        sys.stdout.write(dump_json(out if args.all else out[0]))
    else:
        for e in entries:
            values = [str(e[k]) for k in ("direct", "mult") if k in e]
            if args.method == "both":
                text = f"{values[0]}  [{'agree' if e['agree'] else 'DISAGREE: ' + values[1]}]"
            else:
                text = values[0]
            if args.all:
                x, y = e["position"]
                print(f"({x},{y})  {{{e['arc'][0]},{e['arc'][1]}}}  {text}")
            else:
                print(text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_pi(args) -> int:
    cfg = load_config(args.config)
    cfg.context()
    arcs = _targets(args, cfg)
    entries = [
        {"arc": [a.i, a.j], "position": list(domain_position(a)), "pi": pi(cfg.R, a)} for a in arcs
    ]
    if args.format == "json":
        sys.stdout.write(dump_json(entries if args.all else entries[0]))
    elif args.all:
        for e in entries:
            x, y = e["position"]
            print(f"({x},{y})  {{{e['arc'][0]},{e['arc'][1]}}}  {e['pi']}")
    else:
        print(entries[0]["pi"])
    return EXIT_OK


def _suites(text: str | None) -> tuple[str, ...]:
    if not text or text == "all":
        return SPEC_SUITES
    names = tuple(s.strip() for s in text.split(",") if s.strip())
    bad = [s for s in names if s not in ALL_SUITES]
    if bad:
        raise ConfigError(f"unknown suite(s) {', '.join(bad)}; choose from {', '.join(ALL_SUITES)}")
    return names


def cmd_verify(args) -> int:
    suites = _suites(args.suite)
    if (args.config is None) == (args.enumerate is None):
        raise ConfigError("give exactly one of --config FILE or --enumerate N")
    if args.config is not None:
        cfg = load_config(args.config)
        cfgs = [Config(cfg.T, cfg.R, cfg.eps)]
    else:
        if args.enumerate < 2:
            raise ConfigError("--enumerate needs N >= 2")
        cfgs = list(enumerate_configs(args.enumerate, sample=args.sample, seed=args.seed))
    report = run_suites(cfgs, suites, workers=args.workers)
    if args.format == "json":
        first = report.first_failure
        sys.stdout.write(
            dump_json(
                {
                    "passed": report.passed,
                    "configs": len(report.results),
                    "failing": len(report.failures),
                    "checks": report.totals(),
                    "first_failure": None
                    if first is None
                    else {"config": str(first.config), "suite": first.failed_suite, "detail": first.failure},
                }
            )
        )
    else:
        for line in report.summary_lines():
            print(line)
        print("PASS" if report.passed else "FAIL")
    return report.exit_status


def cmd_frieze_check(args) -> int:
    generalized = args.generalized
    if args.config is not None:
        cfg = load_config(args.config)
        ctx = cfg.context()
        f = (lambda c: pi(cfg.R, c)) if args.map == "pi" else (lambda c: rho_direct(ctx, c))
        grid = grid_from_values(cfg.n, f)
        generalized = True
    else:
        try:
            if args.file:
                grid = load_grid(args.file)
            else:
                grid = bundled_grid()
        except OSError as exc:
            raise ConfigError(f"cannot read grid: {exc}") from exc
        except GridError as exc:
            raise ConfigError(f"malformed grid: {exc}") from exc
    report = frieze_check(grid, generalized=generalized)
    rule = "generalised rule (Δ ∈ {0,1})" if generalized else "frieze rule (Δ = 1)"
    if args.format == "json":
        sys.stdout.write(
            dump_json(
                {
                    "passed": report.passed,
                    "checked": report.checked,
                    "generalized": generalized,
                    "failures": [
                        {"centre": list(d.centre), "delta": str(d.delta)} for d in report.failures
                    ],
                }
            )
        )
    elif report.passed:
        print(f"pass: {report.checked} diamonds satisfy the {rule}")
    else:
        print(f"FAIL: {len(report.failures)} of {report.checked} diamonds break the {rule}")
        print(f"first failing {report.failures[0]}")
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="friezeforge",
        description="Friezes and the modified Caldero-Chapoton map on cluster categories of type A.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, config_required=True):
        p.add_argument("--config", required=config_required, help="JSON config file, or @name for a bundled one")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("rho", help="evaluate ρ on one diagonal or all of them")
    common(p)
    p.add_argument("--arc", help="diagonal as i,j")
    p.add_argument("--all", action="store_true", help="every diagonal, in AR-quiver order")
    p.add_argument("--method", choices=("direct", "mult", "both"), default="direct")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("pi", help="evaluate the integer frieze π")
    common(p)
    p.add_argument("--arc")
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("verify", help="run invariant suites on a config or an enumeration")
    common(p, config_required=False)
    p.add_argument("--enumerate", type=int, metavar="N", help="all configs up to n = N")
    p.add_argument("--sample", type=int, help="seeded samples per n beyond the exhaustive range")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--suite", help=f"comma list from {','.join(ALL_SUITES)} (default: {','.join(SPEC_SUITES)})")
    p.add_argument("--workers", type=int, help="worker processes (default FRIEZEFORGE_THREADS or 1)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("frieze-check", help="check the diamond rule on a frieze grid")
    common(p, config_required=False)
    p.add_argument("--file", help="grid file (default: the bundled A7 frieze)")
    p.add_argument("--generalized", action="store_true", help="accept Δ ∈ {0,1}")
    p.add_argument("--map", choices=("pi", "rho"), default="pi", help="with --config: which map to lay out")
    p.set_defaults(func=cmd_frieze_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
