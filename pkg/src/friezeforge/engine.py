"""The maps α, β and the modified Caldero-Chapoton map ρ, plus their checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Literal

from .category import K0Vector, index
from .gmodules import closed_masks, g_module, kernel_class, pi
from .ktheory import SubgroupN, simple_class, subgroup_N, theta
from .laurent import EpsilonAssignment, LaurentPoly, default_epsilon, epsilon_validate
from .polygon import (
    Arc,
    ArcSum,
    Dissection,
    TriangleSpec,
    Triangulation,
    all_diagonals,
    ar_triangle,
    as_sum,
    crosses,
    resolve_crossing,
    shift_triangle,
)


class CCContext:
    """Ambient data T ⊇ R, S = T \\ R, N and a validated ε.

    Values of α, β and ρ on diagonals are memoised per context; each is
    deterministic, so a shared memo only ever receives identical entries.
    """

    def __init__(self, T: Triangulation, R: Dissection, eps: EpsilonAssignment | None = None):
        for r in R:
            if r not in T:
                raise ValueError(f"R is not contained in T: {r} ∉ T")
        self.T = T
        self.R = R
        self.S = T.complement(R)
        self.N: SubgroupN = subgroup_N(T, self.S)
        self.eps = eps if eps is not None else default_epsilon(self.N)
        epsilon_validate(self.eps, self.N)
        self._alpha: dict[Arc, tuple[int, ...]] = {}
        self._rho: dict[Arc, LaurentPoly] = {}
        self._rho_sum: dict[ArcSum, LaurentPoly] = {}
        self._beta_simple = {
            r: self.eps.exps_of(theta(T, R, self.N, simple_class(R, r))) for r in R.arcs
        }

    @property
    def n(self) -> int:
        return self.T.n

    @property
    def variables(self) -> tuple[str, ...]:
        return self.eps.variables

    def mono(self, exps) -> LaurentPoly:
        return LaurentPoly._raw(self.variables, {tuple(exps): 1})

    def alpha_exps(self, c: Arc) -> tuple[int, ...]:
        e = self._alpha.get(c)
        if e is None:
            e = self.eps.exps_of(self.N.reduce(index(self.T, c)))
            self._alpha[c] = e
        return e

    def beta_exps(self, e: K0Vector) -> tuple[int, ...]:
        out = [0] * len(self.variables)
        for r, k in zip(self.R.arcs, e):
            if k:
                for v, x in enumerate(self._beta_simple[r]):
                    out[v] += k * x
        return tuple(out)


def alpha(ctx: CCContext, c: Arc | ArcSum) -> LaurentPoly:
    """α(c) = εQ(ind_T c)."""
    out = [0] * len(ctx.variables)
    for a in as_sum(c):
        for v, x in enumerate(ctx.alpha_exps(a)):
            out[v] += x
    return ctx.mono(out)


def beta(ctx: CCContext, e: K0Vector) -> LaurentPoly:
    """β(e) = εθ(e)."""
    return ctx.mono(ctx.beta_exps(e))


def _rho_arc(ctx: CCContext, c: Arc) -> LaurentPoly:
    cached = ctx._rho.get(c)
    if cached is not None:
        return cached
    M = g_module(ctx.R, c)
    a = ctx.alpha_exps(c)
    simples = [ctx._beta_simple[r] for r in M.support]
    terms: dict[tuple[int, ...], int] = {}
    for mask in closed_masks(M):
        e = list(a)
        for b, row in enumerate(simples):
            if mask >> b & 1:
                for v, x in enumerate(row):
                    e[v] += x
        key = tuple(e)
        terms[key] = terms.get(key, 0) + 1
    value = LaurentPoly._raw(ctx.variables, terms)
    ctx._rho[c] = value
    return value


def rho_direct(ctx: CCContext, c: Arc | ArcSum) -> LaurentPoly:
    """ρ(c) = α(c) Σ_e χ(Gr_e(Gc)) β(e), multiplicatively over summands."""
    if isinstance(c, Arc):
        return _rho_arc(ctx, c)
    if len(c) == 1:
        return _rho_arc(ctx, c.terms[0])
    value = ctx._rho_sum.get(c)
    if value is None:
        value = ctx.mono((0,) * len(ctx.variables))
        for a in c:
            value = value * _rho_arc(ctx, a)
        ctx._rho_sum[c] = value
    return value


def rho_multiplicative(ctx: CCContext, c: Arc | ArcSum) -> LaurentPoly:
    """ρ via repeated use of ρ(r)ρ(m) = ρ(a) + ρ(b), never enumerating submodules."""
    memo: dict[Arc, LaurentPoly] = {}
    limit = len(ctx.R)

    def one(m: Arc, depth: int) -> LaurentPoly:
        if m in memo:
            return memo[m]
        hits = [r for r in ctx.R.arcs if crosses(r, m)]
        if not hits:
            value = ctx.mono(ctx.alpha_exps(m))
        else:
            if depth >= limit:
                raise RuntimeError(f"recursion for {m} exceeded {limit} levels")
            r = hits[0]
            a, b = resolve_crossing(m, r)
            value = (many(a, depth + 1) + many(b, depth + 1)) / ctx.mono(ctx.alpha_exps(r))
        memo[m] = value
        return value

    def many(s: ArcSum, depth: int) -> LaurentPoly:
        value = ctx.mono((0,) * len(ctx.variables))
        for x in s:
            value = value * one(x, depth)
        return value

    return many(as_sum(c), 0)


# generalised frieze and Condition F reports


@dataclass
class Record:
    triangle: TriangleSpec
    lhs: object
    rhs: object
    difference: object
    passed: bool
    note: str = ""

    def __str__(self) -> str:
        mark = "ok  " if self.passed else "FAIL"
        tail = f"  [{self.note}]" if self.note else ""
        return f"{mark} {self.triangle}: {self.lhs} vs {self.rhs} (Δ = {self.difference}){tail}"


@dataclass
class Report:
    title: str
    records: list[Record] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list[Record]:
        return [r for r in self.records if not r.passed]

    def summary(self) -> str:
        bad = len(self.failures)
        state = "pass" if not bad else f"FAIL ({bad} failing)"
        return f"{self.title}: {len(self.records)} checked, {state}"


def _is_zero_or_one(d) -> bool:
    if isinstance(d, LaurentPoly):
        return d.constant_value() in (0, 1)
    return d in (0, 1)


def check_generalized_frieze(ctx: CCContext, which: Literal["rho", "pi"] = "rho") -> Report:
    """X(τx)X(x) - X(middle) ∈ {0, 1} on the AR triangle ending at each diagonal."""
    X: Callable = (lambda c: rho_direct(ctx, c)) if which == "rho" else (lambda c: pi(ctx.R, c))
    report = Report(f"generalised frieze ({which})")
    for x in all_diagonals(ctx.n):
        tri = ar_triangle(x)
        lhs = X(tri.x) * X(tri.z)
        rhs = X(tri.y)
        d = lhs - rhs
        report.records.append(Record(tri, lhs, rhs, d, _is_zero_or_one(d)))
    return report


def ar_kernel_class(ctx: CCContext, c: Arc) -> K0Vector:
    """[Ker Gξ] for the AR triangle Σc -> b -> c: [S_c] if c ∈ R, else 0."""
    return simple_class(ctx.R, c) if c in ctx.R else (0,) * len(ctx.R)


def _condition_f(ctx: CCContext, tri: TriangleSpec, kernel: K0Vector, note: str) -> Record:
    lhs = alpha(ctx, tri.y)
    rhs = alpha(ctx, tri.x + tri.z) * beta(ctx, kernel)
    return Record(tri, lhs, rhs, lhs - rhs, lhs == rhs, note)


def condition_f_triangles(ctx: CCContext):
    """(triangle, kernel class, note) for every triangle covered by the check."""
    zero = (0,) * len(ctx.R)
    for c in all_diagonals(ctx.n):
        yield shift_triangle(c), g_module(ctx.R, c).dimension_vector(), "shift"
    for c in all_diagonals(ctx.n):
        yield ar_triangle(c), ar_kernel_class(ctx, c), "AR"
    for m in all_diagonals(ctx.n):
        for r in ctx.R.arcs:
            if not crosses(m, r):
                continue
            a, b = resolve_crossing(m, r)
            one_m, one_r = ArcSum.of(m), ArcSum.of(r)
            yield TriangleSpec(one_m, a, one_r, "resolution"), kernel_class(ctx.R, m, a), "m→a→r"
            yield TriangleSpec(one_r, b, one_m, "resolution"), zero, "r→b→m"


def check_condition_F(ctx: CCContext) -> Report:
    """α(y) = α(x ⊕ z) β([Ker Gφ]) on shift, AR and resolution triangles."""
    report = Report("Condition F")
    for tri, kernel, note in condition_f_triangles(ctx):
        report.records.append(_condition_f(ctx, tri, kernel, note))
    return report


def multiplication_pairs(ctx: CCContext):
    """(m, r, a, b) for every diagonal m and r ∈ R crossing it."""
    for m in all_diagonals(ctx.n):
        for r in ctx.R.arcs:
            if crosses(m, r):
                a, b = resolve_crossing(m, r)
                yield m, r, a, b


def check_multiplication(ctx: CCContext) -> Report:
    """ρ(r)ρ(m) = ρ(a) + ρ(b) and π(m) = π(a) + π(b), all by direct evaluation."""
    report = Report("multiplication formula")
    for m, r, a, b in multiplication_pairs(ctx):
        tri = TriangleSpec(ArcSum.of(m), a, ArcSum.of(r), "resolution")
        lhs = rho_direct(ctx, r) * rho_direct(ctx, m)
        rhs = rho_direct(ctx, a) + rho_direct(ctx, b)
        report.records.append(Record(tri, lhs, rhs, lhs - rhs, lhs == rhs, f"ρ, b={b}"))
        pl, pr = pi(ctx.R, m), pi(ctx.R, a) + pi(ctx.R, b)
        report.records.append(Record(tri, pl, pr, pl - pr, pl == pr, f"π, b={b}"))
    return report

