"""Small-instance enumeration and the invariant suites run over it."""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .category import hom_dim, index, k0_class
from .engine import (
    CCContext,
    Report,
    check_condition_F,
    check_generalized_frieze,
    check_multiplication,
    rho_direct,
    rho_multiplicative,
)
from .gmodules import RModule, SubmoduleSet, g_module, submodules
from .ktheory import simple_class, theta, theta_bar
from .laurent import EpsilonAssignment, EpsilonError
from .polygon import (
    ArcSum,
    Dissection,
    Triangulation,
    all_diagonals,
    crosses,
    dissections_of,
    suspend,
    triangulations,
)

EXHAUSTIVE_MAX = 6
ORACLE_BOUND = 12

SPEC_SUITES = ("category", "ktheory", "friezes", "conditionF", "multiplication")
EXTRA_SUITES = ("evaluators", "oracle")
ALL_SUITES = SPEC_SUITES + EXTRA_SUITES


def _pairs(d: Dissection) -> tuple[tuple[int, int], ...]:
    return tuple((a.i, a.j) for a in d.arcs)


@dataclass(frozen=True)
class Config:
    T: Triangulation
    R: Dissection
    eps: EpsilonAssignment | None = None
    label: str = ""

    @property
    def n(self) -> int:
        return self.T.n

    @property
    def key(self) -> tuple:
        return (self.n, _pairs(self.T), _pairs(self.R), self.label)

    def __str__(self) -> str:
        tail = f" [{self.label}]" if self.label else ""
        return f"n={self.n} T={self.T} R={self.R}{tail}"


@dataclass(frozen=True)
class ConfigEnumeration:
    n_range: tuple[int, int]
    configs: tuple[Config, ...]
    seed: int | None
    triangulation_counts: dict = field(default_factory=dict, compare=False)

    def __len__(self) -> int:
        return len(self.configs)

    def __iter__(self):
        return iter(self.configs)


def random_config(n: int, rng: random.Random) -> Config:
    T = rng.choice(triangulations(n))
    R = Dissection(T.size, tuple(a for a in T.arcs if rng.random() < 0.5))
    return Config(T, R)


def enumerate_configs(
    n_max: int,
    sample: int | None = None,
    seed: int = 0,
    n_min: int = 2,
    exhaustive_max: int = EXHAUSTIVE_MAX,
) -> ConfigEnumeration:
    """Every (T, R) for n <= exhaustive_max, then ``sample`` seeded draws per larger n."""
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2, got {n_max}")
    configs: list[Config] = []
    counts = {}
    for n in range(n_min, n_max + 1):
        Ts = triangulations(n)
        counts[n] = len(Ts)
        if n <= exhaustive_max:
            configs.extend(Config(T, R) for T in Ts for R in dissections_of(T))
        else:
            rng = random.Random(f"{seed}:{n}")
            configs.extend(random_config(n, rng) for _ in range(sample or 100))
    return ConfigEnumeration((n_min, n_max), tuple(configs), seed, counts)


def brute_submodule_oracle(M: RModule) -> SubmoduleSet:
    """All forcing-closed subsets of the support, by filtering the full power set."""
    k = len(M.support)
    if k > ORACLE_BOUND:
        raise ValueError(f"support of size {k} exceeds the oracle bound {ORACLE_BOUND}")
    found = []
    for mask in range(1 << k):
        subset = frozenset(r for b, r in enumerate(M.support) if mask >> b & 1)
        if M.is_closed(subset):
            found.append(subset)
    return SubmoduleSet(M, tuple(found))


# suites; each returns (number of checks, first failure or None)


def _category_suite(ctx: CCContext) -> tuple[int, str | None]:
    T, n = ctx.T, ctx.n
    diags = all_diagonals(n)
    checked = 0
    for x in diags:
        for y in diags:
            checked += 1
            if hom_dim(x, suspend(y)) != int(crosses(x, y)):
                return checked, f"hom_dim({x}, Σ{y}) disagrees with crossing"
    for t, u in combinations(T.arcs, 2):
        checked += 1
        if hom_dim(t, u) and hom_dim(u, t):
            return checked, f"{t} and {u} factor through each other"
    for t in T.arcs:
        unit = k0_class(T, ArcSum.of(t))
        checked += 2
        if index(T, t) != unit:
            return checked, f"index({t}) = {index(T, t)}, expected {unit}"
        if index(T, suspend(t)) != tuple(-v for v in unit):
            return checked, f"index(Σ{t}) = {index(T, suspend(t))}"
    return checked, None


def _ktheory_suite(ctx: CCContext) -> tuple[int, str | None]:
    N, T = ctx.N, ctx.T
    checked = 0
    for s in ctx.S.arcs:
        checked += 1
        if not N.contains(theta_bar(T, s)):
            return checked, f"θ̄({s}) is not in N"
    for b in range(len(T)):
        unit = tuple(int(k == b) for k in range(len(T)))
        r = N.reduce(unit)
        checked += 2
        if N.reduce(r) != r:
            return checked, f"reduction is not idempotent on {T.arcs[b]}"
        if not N.contains(tuple(p - q for p, q in zip(unit, r))):
            return checked, f"residue of {T.arcs[b]} leaves its coset"
    for r in ctx.R.arcs:
        checked += 1
        if theta(T, ctx.R, N, simple_class(ctx.R, r)) != N.reduce(theta_bar(T, r)):
            return checked, f"θ disagrees with θ̄ on S{r}"
    return checked, None


def _from_report(report: Report) -> tuple[int, str | None]:
    bad = report.failures
    return len(report.records), (f"{report.title}: {bad[0]}" if bad else None)


def _friezes_suite(ctx: CCContext) -> tuple[int, str | None]:
    total = 0
    for which in ("rho", "pi"):
        k, bad = _from_report(check_generalized_frieze(ctx, which))
        total += k
        if bad:
            return total, bad
    return total, None


def _evaluators_suite(ctx: CCContext) -> tuple[int, str | None]:
    checked = 0
    for c in all_diagonals(ctx.n):
        checked += 1
        d, m = rho_direct(ctx, c), rho_multiplicative(ctx, c)
        if d != m:
            return checked, f"ρ({c}): direct {d} vs multiplicative {m}"
    return checked, None


def _oracle_suite(ctx: CCContext) -> tuple[int, str | None]:
    checked = 0
    for c in all_diagonals(ctx.n):
        M = g_module(ctx.R, c)
        checked += 1
        if submodules(M).as_set() != brute_submodule_oracle(M).as_set():
            return checked, f"submodule enumeration of G{c} disagrees with the oracle"
    return checked, None


SUITES = {
    "category": _category_suite,
    "ktheory": _ktheory_suite,
    "friezes": _friezes_suite,
    "conditionF": lambda ctx: _from_report(check_condition_F(ctx)),
    "multiplication": lambda ctx: _from_report(check_multiplication(ctx)),
    "evaluators": _evaluators_suite,
    "oracle": _oracle_suite,
}


@dataclass
class ConfigResult:
    config: Config
    checks: dict = field(default_factory=dict)  # suite -> count
    failure: str | None = None
    failed_suite: str | None = None
    rejected: bool = False

    @property
    def passed(self) -> bool:
        return self.failure is None


@dataclass
class HarnessReport:
    suites: tuple[str, ...]
    results: list[ConfigResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[ConfigResult]:
        return [r for r in self.results if not r.passed]

    @property
    def first_failure(self) -> ConfigResult | None:
        bad = self.failures
        return bad[0] if bad else None

    def totals(self) -> dict[str, int]:
        out = {s: 0 for s in self.suites}
        for r in self.results:
            for s, k in r.checks.items():
                out[s] += k
        return out

    @property
    def exit_status(self) -> int:
        return 0 if self.passed else 1

    def summary_lines(self) -> list[str]:
        lines = [f"configs: {len(self.results)}, failing: {len(self.failures)}"]
        for s, k in self.totals().items():
            lines.append(f"  {s}: {k} checks")
        first = self.first_failure
        if first is not None:
            what = "rejected" if first.rejected else f"suite {first.failed_suite}"
            lines.append(f"first counterexample ({what}): {first.config}")
            lines.append(f"  {first.failure}")
        return lines


def run_config(cfg: Config, suites: Sequence[str]) -> ConfigResult:
    result = ConfigResult(cfg)
    try:
        ctx = CCContext(cfg.T, cfg.R, cfg.eps)
    except (EpsilonError, ValueError) as exc:
        result.failure, result.rejected = str(exc), True
        return result
    for name in suites:
        checked, bad = SUITES[name](ctx)
        result.checks[name] = checked
        if bad is not None:
            result.failure, result.failed_suite = bad, name
            break
    return result


def _run_chunk(args) -> list[ConfigResult]:
    chunk, suites = args
    return [run_config(c, suites) for c in chunk]


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("FRIEZEFORGE_THREADS", "1")))
    except ValueError:
        return 1


def run_suites(
    cfgs: Iterable[Config],
    suites: Iterable[str] = SPEC_SUITES,
    workers: int | None = None,
) -> HarnessReport:
    """Run the named suites on every config; results are ordered by config key."""
    wanted = set(suites)
    unknown = wanted - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")
    suites = tuple(s for s in ALL_SUITES if s in wanted)
    cfgs = list(cfgs)
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(cfgs) < 64:
        results = [run_config(c, suites) for c in cfgs]
    else:
        size = max(1, len(cfgs) // (workers * 8))
        chunks = [(cfgs[k : k + size], suites) for k in range(0, len(cfgs), size)]
        with ProcessPoolExecutor(workers) as pool:
            results = [r for part in pool.map(_run_chunk, chunks) for r in part]
    results.sort(key=lambda r: r.config.key)
    return HarnessReport(suites, results)
