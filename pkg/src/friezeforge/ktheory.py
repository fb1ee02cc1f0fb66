"""Split Grothendieck group of T, the exchange subgroup N and the map θ.

Vectors are integer tuples over ``T.arcs`` (split K0 of T) or over ``R.arcs``
(K0 of finite-length R-modules, in the basis of simples).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .category import K0Vector, k0_class
from .polygon import (
    Arc,
    ArcSum,
    Dissection,
    TriangleSpec,
    Triangulation,
    flip,
    resolve_crossing,
)


def exchange_triangles(T: Triangulation, t: Arc) -> tuple[TriangleSpec, TriangleSpec]:
    """The exchange triangles ``t* -> a -> t`` and ``t -> a' -> t*``."""
    if t not in T:
        raise ValueError(f"{t} is not in the triangulation")
    t_star, _ = flip(T, t)
    a, a_prime = resolve_crossing(t_star, t)
    return (
        TriangleSpec(ArcSum.of(t_star), a, ArcSum.of(t), "exchange"),
        TriangleSpec(ArcSum.of(t), a_prime, ArcSum.of(t_star), "exchange"),
    )


@lru_cache(maxsize=None)
def theta_bar(T: Triangulation, t: Arc) -> K0Vector:
    """θ̄ on the simple at t: [a] - [a'] from the exchange triangles of t."""
    first, second = exchange_triangles(T, t)
    a, a_prime = k0_class(T, first.y), k0_class(T, second.y)
    return tuple(p - q for p, q in zip(a, a_prime))


def hermite_rows(vectors: Iterable[K0Vector], width: int) -> tuple[list[list[int]], list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``.

    Returns the nonzero rows and their pivot columns.  Pivots are positive and
    every entry above a pivot lies in ``[0, pivot)``.
    """
    rows = [list(v) for v in vectors if any(v)]
    for v in rows:
        if len(v) != width:
            raise ValueError(f"vector {v} has length {len(v)}, expected {width}")
    pivots: list[int] = []
    r = 0
    for col in range(width):
        while True:
            live = [k for k in range(r, len(rows)) if rows[k][col]]
            if not live:
                break
            best = min(live, key=lambda k: abs(rows[k][col]))
            rows[r], rows[best] = rows[best], rows[r]
            head = rows[r]
            clean = True
            for k in range(r + 1, len(rows)):
                if rows[k][col]:
                    q = rows[k][col] // head[col]
                    rows[k] = [p - q * h for p, h in zip(rows[k], head)]
                    clean = clean and rows[k][col] == 0
            if clean:
                break
        if r < len(rows) and rows[r][col]:
            if rows[r][col] < 0:
                rows[r] = [-p for p in rows[r]]
            head = rows[r]
            for k in range(r):
                q = rows[k][col] // head[col]
                if q:
                    rows[k] = [p - q * h for p, h in zip(rows[k], head)]
            pivots.append(col)
            r += 1
    return rows[:r], pivots


@dataclass(frozen=True)
class SubgroupN:
    """Sublattice of the split K0 of T with canonical coset representatives."""

    basis: tuple[Arc, ...]
    generators: tuple[K0Vector, ...]
    reduced_basis: tuple[K0Vector, ...] = field(init=False)
    pivots: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        rows, pivots = hermite_rows(self.generators, len(self.basis))
        object.__setattr__(self, "reduced_basis", tuple(tuple(r) for r in rows))
        object.__setattr__(self, "pivots", tuple(pivots))

    @property
    def rank(self) -> int:
        return len(self.reduced_basis)

    @property
    def quotient_rank(self) -> int:
        """Rank of the free part of K0^split(T)/N."""
        return len(self.basis) - self.rank

    def reduce(self, x: K0Vector) -> K0Vector:
        v = list(x)
        for row, p in zip(self.reduced_basis, self.pivots):
            q = v[p] // row[p]
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        return tuple(v)

    def contains(self, x: K0Vector) -> bool:
        return not any(self.reduce(x))

    @property
    def unimodular(self) -> bool:
        """All pivots are 1: the quotient is free on the non-pivot basis vectors."""
        return all(row[p] == 1 for row, p in zip(self.reduced_basis, self.pivots))

    def torsion(self) -> tuple[int, ...]:
        """Nontrivial invariant factors of the quotient's torsion subgroup."""
        if self.unimodular:
            return ()
        from sympy import Matrix
        from sympy.matrices.normalforms import smith_normal_form

        snf = smith_normal_form(Matrix(self.reduced_basis))
        diag = [abs(int(snf[k, k])) for k in range(min(snf.shape))]
        return tuple(d for d in diag if d > 1)

    def free_coordinates(self) -> list[K0Vector]:
        """Integer functionals vanishing on N, spanning a full-rank dual lattice.

        Row ``k`` of the result gives the k-th coordinate of each basis vector.
        """
        width = len(self.basis)
        unit = [tuple(int(k == c) for k in range(width)) for c in range(width)]
        if self.unimodular:
            images = [self.reduce(u) for u in unit]
            free = [f for f in range(width) if f not in self.pivots]
            return [tuple(images[c][f] for c in range(width)) for f in free]
        from sympy import Matrix, ilcm

        out = []
        for vec in Matrix(self.reduced_basis).nullspace():
            scale = ilcm(*[x.q for x in vec])
            out.append(tuple(int(x * scale) for x in vec))
        return out


def quotient_reduce(N: SubgroupN, x: K0Vector) -> K0Vector:
    return N.reduce(x)


def subgroup_N(T: Triangulation, S: Dissection) -> SubgroupN:
    for s in S:
        if s not in T:
            raise ValueError(f"{s} is in S but not in T")
    return SubgroupN(T.arcs, tuple(theta_bar(T, s) for s in S.arcs))


def simple_class(R: Dissection, r: Arc, k: int = 1) -> K0Vector:
    return tuple(k if a == r else 0 for a in R.arcs)


def theta(T: Triangulation, R: Dissection, N: SubgroupN, e: K0Vector | Mapping[Arc, int]) -> K0Vector:
    """θ(e) in K0^split(T)/N, via θ̄ on the simples S_r, r in R."""
    if isinstance(e, Mapping):
        e = tuple(e.get(r, 0) for r in R.arcs)
    if len(e) != len(R):
        raise ValueError(f"class {e} does not match the {len(R)} simples of R")
    total = [0] * len(T)
    for r, k in zip(R.arcs, e):
        if k:
            for c, v in enumerate(theta_bar(T, r)):
                total[c] += k * v
    return N.reduce(tuple(total))
