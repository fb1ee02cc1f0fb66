"""Hom spaces, compositions and T-approximations in C(A_n).

Every Hom space between indecomposables is at most one-dimensional, so a
morphism is recorded only as zero or nonzero.  ``Hom(x, y) = Ext¹(x, Σ⁻¹y)``,
and Ext¹ is one-dimensional exactly for crossing diagonals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from graphlib import CycleError, TopologicalSorter

from .polygon import Arc, ArcSum, Triangulation, crosses, in_closed_interval, suspend

K0Vector = tuple[int, ...]


@dataclass(frozen=True)
class HomWindow:
    """The diagonals ``y`` with ``Hom(source, y) != 0``.

    With ``source = {a, b}``, ``y`` has one endpoint in ``[a, b-2]`` and the
    other in ``[b, a-2]`` (closed cyclic intervals).
    """

    source: Arc
    first_range: tuple[int, int]
    second_range: tuple[int, int]

    def split(self, y: Arc) -> tuple[int, int] | None:
        """Endpoints of ``y`` as (first-range, second-range), or None."""
        size = self.source.size
        if y.is_edge:
            return None
        for u, v in ((y.i, y.j), (y.j, y.i)):
            if in_closed_interval(u, *self.first_range, size) and in_closed_interval(
                v, *self.second_range, size
            ):
                return u, v
        return None

    def __contains__(self, y: Arc) -> bool:
        return self.split(y) is not None


def hom_window(x: Arc) -> HomWindow:
    a, b = x.i, x.j
    return HomWindow(x, (a, b - 2), (b, a - 2))


@lru_cache(maxsize=None)
def hom_dim(x: Arc, y: Arc) -> int:
    if x.is_edge or y.is_edge:
        return 0
    return int(crosses(x, suspend(y, -1)))


def ext_dim(x: Arc, y: Arc) -> int:
    return hom_dim(x, suspend(y))


@lru_cache(maxsize=None)
def composition_nonzero(x: Arc, y: Arc, z: Arc) -> bool:
    """Whether the composite of the canonical maps x -> y -> z is nonzero.

    The Hom-hammock of ``x`` is a rectangle in the AR quiver; the composite
    survives iff ``z`` lies in the sub-rectangle spanned from ``y``.
    """
    if not hom_dim(x, y) or not hom_dim(y, z):
        raise ValueError(f"no composable nonzero maps {x} -> {y} -> {z}")
    window = hom_window(x)
    a, b = x.i, x.j
    a2, b2 = window.split(y)
    size = x.size
    for u, v in ((z.i, z.j), (z.j, z.i)):
        if in_closed_interval(u, a2, b - 2, size) and in_closed_interval(v, b2, a - 2, size):
            return True
    return False


def _survivors(candidates: list[Arc], factors_through) -> list[Arc]:
    # t is redundant when its map factors through another candidate
    graph = {t: [u for u in candidates if u != t and factors_through(t, u)] for t in candidates}
    try:
        tuple(TopologicalSorter(graph).static_order())
    except CycleError as exc:
        raise RuntimeError(f"cyclic factorisation among {candidates}") from exc
    return [t for t in candidates if not graph[t]]


@lru_cache(maxsize=None)
def minimal_right_approx(T: Triangulation, c: Arc) -> ArcSum:
    """Minimal right T-approximation t -> c, as the sum of its summands."""
    if c.is_edge:
        return ArcSum()
    B = [t for t in T.arcs if hom_dim(t, c)]
    keep = _survivors(
        B, lambda t, u: hom_dim(t, u) == 1 and composition_nonzero(t, u, c)
    )
    return ArcSum(tuple(keep))


@lru_cache(maxsize=None)
def minimal_left_approx(T: Triangulation, x: Arc) -> ArcSum:
    """Minimal left T-approximation x -> t."""
    if x.is_edge:
        return ArcSum()
    B = [t for t in T.arcs if hom_dim(x, t)]
    keep = _survivors(
        B, lambda t, u: hom_dim(u, t) == 1 and composition_nonzero(x, u, t)
    )
    return ArcSum(tuple(keep))


def k0_class(T: Triangulation, objects: ArcSum) -> K0Vector:
    """Class in the split Grothendieck group of T; every summand must lie in T."""
    coeffs = [0] * len(T)
    for a in objects:
        try:
            coeffs[T.arcs.index(a)] += 1
        except ValueError:
            raise ValueError(f"{a} is not in the triangulation") from None
    return tuple(coeffs)


@lru_cache(maxsize=None)
def index(T: Triangulation, c: Arc) -> K0Vector:
    """ind_T(c) = [t] - [t'] for the triangle t' -> t -> c with t -> c minimal."""
    if c.is_edge:
        return (0,) * len(T)
    t = k0_class(T, minimal_right_approx(T, c))
    t_prime = k0_class(T, minimal_left_approx(T, suspend(c, -1)))
    return tuple(p - q for p, q in zip(t, t_prime))


def index_of_sum(T: Triangulation, c: Arc | ArcSum) -> K0Vector:
    total = [0] * len(T)
    for a in c if isinstance(c, ArcSum) else (c,):
        for k, v in enumerate(index(T, a)):
            total[k] += v
    return tuple(total)


def format_k0(basis: tuple[Arc, ...], vector: K0Vector, simple: bool = False) -> str:
    """Render e.g. ``[2,5]-[5,7]``; with ``simple`` use ``S{2,5}`` labels."""
    parts = []
    for a, k in zip(basis, vector):
        if not k:
            continue
        label = f"S{a}" if simple else a.label()
        mag = "" if abs(k) == 1 else f"{abs(k)}"
        parts.append(("-" if k < 0 else "+") + mag + label)
    if not parts:
        return "0"
    out = "".join(parts)
    return out[1:] if out[0] == "+" else out
