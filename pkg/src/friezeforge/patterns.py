"""Frieze patterns laid out on the AR quiver of C(A_n).

Coordinates: the node (x, y) sits in row y (0 at the bottom) and column x,
with x + y of fixed parity.  The diagonal {i, j} with j - i = y + 2 lives at
x = 2(i - 1) + y.  The quiver is periodic up to a glide reflection,
(x, y) ~ (x + n + 3, n - 1 - y), so columns 0..n+2 form a fundamental domain.

Grid files list rows top to bottom as whitespace separated integers.  A row
whose first token is ``.`` is shifted by half a cell, i.e. starts at x = 1.
``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable

from .polygon import Arc


class GridError(ValueError):
    """Malformed frieze grid."""


@dataclass(frozen=True)
class FriezeGrid:
    """Values on the fundamental domain; ``cells[(x, y)]`` for 0 <= x < width."""

    rows: int
    bottom_offset: int
    cells: dict

    @property
    def n(self) -> int:
        return self.rows

    @property
    def width(self) -> int:
        return self.rows + 3

    def is_node(self, x: int, y: int) -> bool:
        return (x + y + self.bottom_offset) % 2 == 0

    def value(self, x: int, y: int):
        """Value at (x, y); rows outside 0..rows-1 are the constant 1."""
        if y < 0 or y >= self.rows:
            return 1
        if not self.is_node(x, y):
            raise KeyError(f"({x},{y}) is not a node of the grid")
        q, x = divmod(x, self.width)
        if q % 2:
            y = self.rows - 1 - y
        return self.cells[(x, y)]

    def diamonds(self):
        """Centres (x, y) of every mesh, one per non-node cell of the domain."""
        for y in range(self.rows):
            for x in range(self.width):
                if not self.is_node(x, y):
                    yield x, y

    def to_text(self) -> str:
        lines = []
        for y in reversed(range(self.rows)):
            xs = [x for x in range(self.width + 1) if self.is_node(x, y)]
            lead = ". " if xs[0] == 1 else ""
            lines.append(lead + " ".join(str(self.value(x, y)) for x in xs))
        return "\n".join(lines) + "\n"


def parse_grid(text: str) -> FriezeGrid:
    raw = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].split()
        if not line:
            continue
        offset = 0
        if line[0] == ".":
            offset, line = 1, line[1:]
        try:
            values = [int(tok) for tok in line]
        except ValueError as exc:
            raise GridError(f"non-integer entry in row {' '.join(line)!r}") from exc
        if not values:
            raise GridError("empty row")
        raw.append((offset, values))
    if not raw:
        raise GridError("grid has no rows")
    raw.reverse()
    rows = len(raw)
    width = rows + 3
    bottom = raw[0][0]
    cells: dict[tuple[int, int], int] = {}
    extra = []
    for y, (offset, values) in enumerate(raw):
        if offset != (bottom + y) % 2:
            raise GridError(f"row {y} breaks the alternating half-cell offsets")
        for k, v in enumerate(values):
            x = offset + 2 * k
            if x < width:
                cells[(x, y)] = v
            else:
                extra.append((x, y, v))
    grid = FriezeGrid(rows, bottom, cells)
    for y in range(rows):
        for x in range(width):
            if grid.is_node(x, y) and (x, y) not in cells:
                raise GridError(f"row {y} does not cover a full period of {width} columns")
    for x, y, v in extra:
        if grid.value(x, y) != v:
            raise GridError(
                f"entry {v} at ({x},{y}) disagrees with its glide image {grid.value(x, y)}"
            )
    return grid


def load_grid(path: str | Path) -> FriezeGrid:
    return parse_grid(Path(path).read_text())


def bundled_grid(name: str = "a7_frieze") -> FriezeGrid:
    """A grid shipped in the package data directory."""
    return parse_grid(resources.files("friezeforge").joinpath("data", f"{name}.txt").read_text())


@dataclass(frozen=True)
class Diamond:
    centre: tuple[int, int]
    left: object
    right: object
    top: object
    bottom: object

    @property
    def delta(self):
        return self.left * self.right - self.top * self.bottom

    def __str__(self) -> str:
        x, y = self.centre
        return (
            f"diamond at ({x},{y}): {self.left}*{self.right} - "
            f"{self.top}*{self.bottom} = {self.delta}"
        )


@dataclass
class GridReport:
    checked: int
    failures: list[Diamond]
    generalized: bool

    @property
    def passed(self) -> bool:
        return not self.failures


def frieze_check(grid: FriezeGrid, generalized: bool = False) -> GridReport:
    """Every mesh must have left*right - top*bottom equal to 1 (or 0/1 if generalized)."""
    allowed = (0, 1) if generalized else (1,)
    failures = []
    checked = 0
    for x, y in grid.diamonds():
        d = Diamond(
            (x, y),
            grid.value(x - 1, y),
            grid.value(x + 1, y),
            grid.value(x, y + 1),
            grid.value(x, y - 1),
        )
        checked += 1
        if d.delta not in allowed:
            failures.append(d)
    return GridReport(checked, failures, generalized)


def ar_coordinates(arc: Arc) -> tuple[int, int]:
    """Position of a diagonal in the quiver, with 0 <= x < 2(n+3) and 0 <= y < n."""
    if arc.is_edge:
        raise ValueError(f"{arc} is an edge")
    size, n = arc.size, arc.size - 3
    for i, j in ((arc.i, arc.j), (arc.j, arc.i + size)):
        y = j - i - 2
        if 0 <= y < n:
            return (2 * (i - 1) + y) % (2 * size), y
    raise AssertionError("unreachable")


def arc_at(n: int, x: int, y: int) -> Arc:
    """Inverse of :func:`ar_coordinates`, for any node (x, y) of the quiver."""
    if not 0 <= y < n or (x - y) % 2:
        raise ValueError(f"({x},{y}) is not a node for n={n}")
    i = (x - y) // 2 + 1
    return Arc(i, i + y + 2, n + 3)


def domain_position(arc: Arc) -> tuple[int, int]:
    """Coordinates reduced into columns 0..n+2 using the glide."""
    x, y = ar_coordinates(arc)
    size, n = arc.size, arc.size - 3
    if x >= size:
        x, y = x - size, n - 1 - y
    return x, y


def grid_from_values(n: int, f: Callable[[Arc], object]) -> FriezeGrid:
    """The grid with ``f`` evaluated at each diagonal's AR coordinates."""
    cells = {}
    for y in range(n):
        for x in range(y % 2, n + 3, 2):
            cells[(x, y)] = f(arc_at(n, x, y))
    return FriezeGrid(n, 0, cells)


def same_up_to_shift(a: FriezeGrid, b: FriezeGrid) -> int | None:
    """Smallest even shift s with a(x, y) = b(x + s, y) everywhere, else None."""
    if a.rows != b.rows or a.bottom_offset != b.bottom_offset:
        return None
    for s in range(0, 2 * a.width, 2):
        if all(v == b.value(x + s, y) for (x, y), v in a.cells.items()):
            return s
    return None
