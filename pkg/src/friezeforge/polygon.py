"""Polygon model of the cluster category of type A_n.

Indecomposables are diagonals of an (n+3)-gon whose vertices are labelled
1..n+3 anticlockwise; boundary edges are the zero object.  Suspension rotates
both endpoints one step clockwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator


def _residue(v: int, size: int) -> int:
    return (v - 1) % size + 1


@dataclass(frozen=True, order=True)
class Arc:
    """Unordered pair of polygon vertices, stored as ``i < j`` in 1..size."""

    i: int
    j: int
    size: int

    def __post_init__(self) -> None:
        if self.size < 3:
            raise ValueError(f"polygon needs at least 3 vertices, got {self.size}")
        i, j = _residue(self.i, self.size), _residue(self.j, self.size)
        if i == j:
            raise ValueError(f"degenerate arc {{{self.i},{self.j}}}")
        if i > j:
            i, j = j, i
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)

    @property
    def is_edge(self) -> bool:
        return self.j - self.i in (1, self.size - 1)

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.i, self.j

    def __str__(self) -> str:
        return f"{{{self.i},{self.j}}}"

    def label(self) -> str:
        return f"[{self.i},{self.j}]"


@dataclass(frozen=True)
class ArcSum:
    """Formal direct sum of diagonals; edges are dropped on construction."""

    terms: tuple[Arc, ...] = ()

    def __post_init__(self) -> None:
        kept = tuple(sorted(a for a in self.terms if not a.is_edge))
        object.__setattr__(self, "terms", kept)

    @classmethod
    def of(cls, *arcs: Arc) -> ArcSum:
        return cls(tuple(arcs))

    def __add__(self, other: ArcSum | Arc) -> ArcSum:
        if isinstance(other, Arc):
            other = ArcSum.of(other)
        return ArcSum(self.terms + other.terms)

    def __iter__(self) -> Iterator[Arc]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "⊕".join(str(a) for a in self.terms)


def as_sum(c: Arc | ArcSum) -> ArcSum:
    return c if isinstance(c, ArcSum) else ArcSum.of(c)


def in_open_interval(v: int, a: int, b: int, size: int) -> bool:
    """True iff ``v`` is one of a+1, ..., b-1 taken anticlockwise mod size."""
    return 0 < (v - a) % size < (b - a) % size


def in_closed_interval(v: int, a: int, b: int, size: int) -> bool:
    return (v - a) % size <= (b - a) % size


@lru_cache(maxsize=None)
def crosses(x: Arc, y: Arc) -> bool:
    if x.size != y.size:
        raise ValueError("arcs live on different polygons")
    if x.is_edge or y.is_edge:
        return False
    if x.i in y.endpoints or x.j in y.endpoints:
        return False
    return in_open_interval(y.i, x.i, x.j, x.size) != in_open_interval(
        y.j, x.i, x.j, x.size
    )


@lru_cache(maxsize=None)
def suspend(x: Arc, k: int = 1) -> Arc:
    """Apply the suspension k times; ``suspend(x, -1)`` is the desuspension."""
    return Arc(x.i - k, x.j - k, x.size)


def all_diagonals(n: int) -> list[Arc]:
    """All diagonals of the (n+3)-gon in canonical order."""
    return list(_diagonals(n + 3))


@lru_cache(maxsize=None)
def _diagonals(size: int) -> tuple[Arc, ...]:
    return tuple(
        a
        for a in (Arc(i, j, size) for i, j in combinations(range(1, size + 1), 2))
        if not a.is_edge
    )


@dataclass(frozen=True)
class Dissection:
    """A set of pairwise non-crossing diagonals, stored sorted."""

    size: int
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self) -> None:
        arcs = tuple(sorted(set(self.arcs)))
        for a in arcs:
            if a.size != self.size:
                raise ValueError(f"{a} does not belong to a {self.size}-gon")
            if a.is_edge:
                raise ValueError(f"{a} is a boundary edge, not a diagonal")
        for a, b in combinations(arcs, 2):
            if crosses(a, b):
                raise ValueError(f"not a dissection: {a} crosses {b}")
        object.__setattr__(self, "arcs", arcs)

    @property
    def n(self) -> int:
        return self.size - 3

    def __contains__(self, arc: object) -> bool:
        return arc in self.arcs

    def __iter__(self) -> Iterator[Arc]:
        return iter(self.arcs)

    def __len__(self) -> int:
        return len(self.arcs)

    def __str__(self) -> str:
        return "{" + ", ".join(str(a) for a in self.arcs) + "}"

    def crossing(self, c: Arc) -> list[Arc]:
        return [a for a in self.arcs if crosses(a, c)]


@dataclass(frozen=True)
class Triangulation(Dissection):
    """A maximal dissection: exactly n diagonals of the (n+3)-gon."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if len(self.arcs) != self.size - 3:
            raise ValueError(
                f"a triangulation of a {self.size}-gon has {self.size - 3} "
                f"diagonals, got {len(self.arcs)}"
            )

    def sub(self, arcs: Iterable[Arc]) -> Dissection:
        arcs = tuple(arcs)
        for a in arcs:
            if a not in self:
                raise ValueError(f"{a} is not in the triangulation")
        return Dissection(self.size, arcs)

    def complement(self, sub: Dissection) -> Dissection:
        return Dissection(self.size, tuple(a for a in self.arcs if a not in sub))


@dataclass(frozen=True)
class TriangleSpec:
    """Distinguished triangle x -> y -> z -> Σx."""

    x: ArcSum
    y: ArcSum
    z: ArcSum
    kind: str

    def __str__(self) -> str:
        return f"{self.x} → {self.y} → {self.z}"


@lru_cache(maxsize=None)
def ar_triangle(x: Arc) -> TriangleSpec:
    """AR triangle {i-1,j-1} -> {i-1,j} ⊕ {i,j-1} -> {i,j} ending at ``x``."""
    if x.is_edge:
        raise ValueError(f"{x} is an edge")
    i, j, size = x.i, x.j, x.size
    middle = ArcSum.of(Arc(i - 1, j, size), Arc(i, j - 1, size))
    return TriangleSpec(ArcSum.of(suspend(x)), middle, ArcSum.of(x), "AR")


@lru_cache(maxsize=None)
def shift_triangle(c: Arc) -> TriangleSpec:
    return TriangleSpec(ArcSum.of(c), ArcSum(), ArcSum.of(suspend(c)), "shift")


def _cyclic_quad(x: Arc, y: Arc) -> tuple[int, int, int, int]:
    # p, r are the endpoints of x, q, s those of y, with p < q < r < s cyclically
    p, r = x.i, x.j
    if in_open_interval(y.i, p, r, x.size):
        q, s = y.i, y.j
    else:
        q, s = y.j, y.i
    return p, q, r, s


@lru_cache(maxsize=None)
def resolve_crossing(x: Arc, y: Arc) -> tuple[ArcSum, ArcSum]:
    """Middle terms of the two nonsplit triangles between crossing arcs.

    Returns ``(m_xy, m_yx)`` for x -> m_xy -> y -> Σx and y -> m_yx -> x -> Σy.
    """
    if not crosses(x, y):
        raise ValueError(f"{x} and {y} do not cross")
    size = x.size
    p, q, r, s = _cyclic_quad(x, y)
    m_xy = ArcSum.of(Arc(q, r, size), Arc(s, p, size))
    m_yx = ArcSum.of(Arc(p, q, size), Arc(r, s, size))
    return m_xy, m_yx


def _side_present(T: Dissection, u: int, v: int) -> bool:
    a = Arc(u, v, T.size)
    return a.is_edge or a in T


def flip(T: Triangulation, t: Arc) -> tuple[Arc, Triangulation]:
    """Replace ``t`` by the other diagonal of its quadrilateral in ``T``."""
    if t not in T:
        raise ValueError(f"{t} is not in the triangulation")
    apexes = [
        w
        for w in range(1, T.size + 1)
        if w not in t.endpoints and _side_present(T, t.i, w) and _side_present(T, t.j, w)
    ]
    # exactly one apex on each side of t
    left = [w for w in apexes if in_open_interval(w, t.i, t.j, T.size)]
    right = [w for w in apexes if not in_open_interval(w, t.i, t.j, T.size)]
    if len(left) != 1 or len(right) != 1:
        raise RuntimeError(f"malformed triangulation around {t}: apexes {apexes}")
    t_star = Arc(left[0], right[0], T.size)
    rest = tuple(a for a in T.arcs if a != t) + (t_star,)
    return t_star, Triangulation(T.size, rest)


@lru_cache(maxsize=None)
def _triangulations_between(lo: int, hi: int, size: int) -> tuple[tuple[Arc, ...], ...]:
    # triangulations of the sub-polygon on vertices lo..hi, with lo-hi a side
    if hi - lo < 2:
        return ((),)
    out = []
    for apex in range(lo + 1, hi):
        own = tuple(
            a for a in (Arc(lo, apex, size), Arc(apex, hi, size)) if not a.is_edge
        )
        for left in _triangulations_between(lo, apex, size):
            for right in _triangulations_between(apex, hi, size):
                out.append(left + right + own)
    return tuple(out)


def triangulations(n: int) -> list[Triangulation]:
    """All triangulations of the (n+3)-gon (Catalan number C_{n+1} of them)."""
    size = n + 3
    return [Triangulation(size, arcs) for arcs in _triangulations_between(1, size, size)]


def dissections_of(T: Triangulation) -> list[Dissection]:
    """All sub-dissections of ``T``, the empty one first."""
    out = []
    for k in range(len(T) + 1):
        for arcs in combinations(T.arcs, k):
            out.append(Dissection(T.size, arcs))
    return out
