"""The modules Gc = Hom(-, Σc)|_R and their submodule Grassmannians.

Gc is one-dimensional at each r in R crossing c and zero elsewhere, so a
submodule is determined by its support.  The support must be closed under
the forcing relation r => r', meaning the structure map Gc(r) -> Gc(r') is
nonzero.  Every Grassmannian is therefore a finite set of points, and its
Euler characteristic is its cardinality.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .category import K0Vector, composition_nonzero, hom_dim
from .polygon import Arc, ArcSum, Dissection, as_sum, crosses, suspend

DEFAULT_SUPPORT_BOUND = 20


class SupportTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class RModule:
    target: Arc
    basis: tuple[Arc, ...]
    support: tuple[Arc, ...]
    forcing: frozenset[tuple[Arc, Arc]]

    @property
    def is_zero(self) -> bool:
        return not self.support

    def dimension_vector(self) -> K0Vector:
        return tuple(int(r in self.support) for r in self.basis)

    def class_of(self, subset) -> K0Vector:
        return tuple(int(r in subset) for r in self.basis)

    def is_closed(self, subset) -> bool:
        return all(dst in subset for src, dst in self.forcing if src in subset)


@lru_cache(maxsize=None)
def g_module(R: Dissection, c: Arc) -> RModule:
    support = tuple(r for r in R.arcs if crosses(r, c))
    sc = suspend(c)
    forcing = frozenset(
        (r, r2)
        for r in support
        for r2 in support
        if r2 != r and hom_dim(r2, r) and composition_nonzero(r2, r, sc)
    )
    return RModule(c, R.arcs, support, forcing)


@dataclass(frozen=True)
class SubmoduleSet:
    module: RModule
    subsets: tuple[frozenset[Arc], ...]

    @property
    def classes(self) -> tuple[K0Vector, ...]:
        return tuple(self.module.class_of(u) for u in self.subsets)

    def __len__(self) -> int:
        return len(self.subsets)

    def as_set(self) -> set[frozenset[Arc]]:
        return set(self.subsets)


def _closure_masks(M: RModule) -> tuple[list[int], list[int]]:
    k = len(M.support)
    pos = {r: b for b, r in enumerate(M.support)}
    down = [1 << b for b in range(k)]
    up = [1 << b for b in range(k)]
    for src, dst in M.forcing:
        down[pos[src]] |= 1 << pos[dst]
        up[pos[dst]] |= 1 << pos[src]
    # transitive closure; supports are tiny
    changed = True
    while changed:
        changed = False
        for b in range(k):
            for masks in (down, up):
                acc = masks[b]
                for c in range(k):
                    if acc >> c & 1:
                        acc |= masks[c]
                if acc != masks[b]:
                    masks[b] = acc
                    changed = True
    return down, up


def closed_masks(M: RModule, bound: int = DEFAULT_SUPPORT_BOUND) -> list[int]:
    """Bitmasks over ``M.support`` of all forcing-closed subsets."""
    k = len(M.support)
    if k > bound:
        raise SupportTooLarge(f"support of G{M.target} has {k} > {bound} simples")
    return list(_closed_masks(M))


@lru_cache(maxsize=None)
def _closed_masks(M: RModule) -> tuple[int, ...]:
    k = len(M.support)
    down, up = _closure_masks(M)
    out: list[int] = []

    def walk(b: int, inside: int, outside: int) -> None:
        while b < k and (inside | outside) >> b & 1:
            b += 1
        if b == k:
            out.append(inside)
            return
        if not down[b] & outside:
            walk(b + 1, inside | down[b], outside)
        if not up[b] & inside:
            walk(b + 1, inside, outside | up[b])

    walk(0, 0, 0)
    return tuple(sorted(out))


def submodules(M: RModule, bound: int = DEFAULT_SUPPORT_BOUND) -> SubmoduleSet:
    subsets = tuple(
        frozenset(r for b, r in enumerate(M.support) if mask >> b & 1)
        for mask in closed_masks(M, bound)
    )
    return SubmoduleSet(M, subsets)


def grassmannian_counts(M: RModule) -> dict[K0Vector, int]:
    """χ(Gr_e(M)) for every class e that occurs."""
    return dict(Counter(submodules(M).classes))


def pi(R: Dissection, c: Arc | ArcSum) -> int:
    """Number of submodules of Gc, multiplicative over direct sums."""
    value = 1
    for a in as_sum(c):
        value *= _pi_arc(R, a)
    return value


@lru_cache(maxsize=None)
def _pi_arc(R: Dissection, c: Arc) -> int:
    return len(closed_masks(g_module(R, c)))


def kernel_class(R: Dissection, m: Arc, a: ArcSum) -> K0Vector:
    """[Ker Gμ] for the canonical map μ: m -> a with nonzero components."""
    for ai in a:
        if not hom_dim(m, ai):
            raise ValueError(f"no nonzero map {m} -> {ai}")
    M = g_module(R, m)
    sm = suspend(m)
    targets = [suspend(ai) for ai in a]
    kernel = [
        r
        for r in M.support
        if not any(hom_dim(r, t) and composition_nonzero(r, sm, t) for t in targets)
    ]
    return M.class_of(kernel)
