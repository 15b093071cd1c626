"""Integer-grid model of polyominoes.

Cells are unit squares identified by their lower-left corner ``(x, y)``.
A polyomino is a nonempty, edge-connected cell set, stored canonically
translated so that ``min x = min y = 0``. ASCII grids use mathematical
orientation: the top text row is the highest y row.
"""

from __future__ import annotations

import os
from functools import lru_cache

from polyprime.binomials import Binomial, VariableSet, grid_key, mono_from_indices
from polyprime.errors import (
    BadCharError,
    CapExceededError,
    DisconnectedError,
    EmptyInputError,
)

DEFAULT_ENUM_CAP = 8

_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


def cell_vertices(cell):
    x, y = cell
    return ((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1))


def cell_edges(cell):
    """The four edges of a cell as sorted vertex pairs."""
    x, y = cell
    a, b, c, d = (x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)
    return ((a, b), (a, c), (b, d), (c, d))


def is_connected(cells):
    """True iff the cells form one component under shared-edge adjacency.

    The empty set counts as connected by convention.
    """
    cells = set(cells)
    if not cells:
        return True
    start = min(cells)
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for dx, dy in _STEPS:
            nb = (x + dx, y + dy)
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def normalize_cells(cells):
    """Translate a cell set so min x = min y = 0; returns a sorted tuple."""
    cells = list(cells)
    dx = min(x for x, _ in cells)
    dy = min(y for _, y in cells)
    return tuple(sorted((x - dx, y - dy) for x, y in cells))


class Polyomino:
    """Immutable, canonically translated polyomino."""

    __slots__ = ("cells", "cells_sorted", "_vertices", "_edges")

    def __init__(self, cells):
        cells = set(tuple(map(int, c)) for c in cells)
        if not cells:
            raise EmptyInputError("a polyomino needs at least one cell")
        if not is_connected(cells):
            raise DisconnectedError("cells are not edge-connected")
        self.cells_sorted = normalize_cells(cells)
        self.cells = frozenset(self.cells_sorted)
        self._vertices = None
        self._edges = None

    def __len__(self):
        return len(self.cells)

    def __eq__(self, other):
        return isinstance(other, Polyomino) and self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        return f"Polyomino({list(self.cells_sorted)})"

    @property
    def width(self):
        return 1 + max(x for x, _ in self.cells_sorted)

    @property
    def height(self):
        return 1 + max(y for _, y in self.cells_sorted)

    @property
    def vertices(self):
        if self._vertices is None:
            vs = set()
            for c in self.cells_sorted:
                vs.update(cell_vertices(c))
            self._vertices = frozenset(vs)
        return self._vertices

    @property
    def edges(self):
        if self._edges is None:
            es = set()
            for c in self.cells_sorted:
                es.update(cell_edges(c))
            self._edges = frozenset(es)
        return self._edges


def parse_grid(text):
    """Parse an ASCII grid ('#' = cell, '.' = empty; top row = highest y)."""
    lines = [line.rstrip("\r") for line in text.split("\n")]
    while lines and lines[-1] == "":
        lines.pop()
    cells = []
    height = len(lines)
    for r, line in enumerate(lines):
        for c, ch in enumerate(line):
            if ch == "#":
                cells.append((c, height - 1 - r))
            elif ch != ".":
                raise BadCharError(f"unexpected character {ch!r} at row {r}, column {c}")
    if not cells:
        raise EmptyInputError("grid contains no '#' cells")
    return Polyomino(cells)


def to_text(poly):
    """Minimal-bounding-box ASCII form; inverse of parse_grid."""
    w, h = poly.width, poly.height
    rows = []
    for y in range(h - 1, -1, -1):
        rows.append("".join("#" if (x, y) in poly.cells else "." for x in range(w)))
    return "\n".join(rows)


def to_json_dict(poly):
    return {"cells": [[x, y] for x, y in poly.cells_sorted]}


def from_json_dict(data):
    try:
        cells = data["cells"]
    except (TypeError, KeyError):
        raise BadCharError("expected an object with a 'cells' list") from None
    if not cells:
        raise EmptyInputError("'cells' list is empty")
    return Polyomino(cells)


def is_simple(poly, within=None):
    """True iff the polyomino has no holes.

    Every cell of the surrounding interval that is not in the polyomino
    must reach, through empty cells sharing edges, a cell strictly outside
    that interval. ``within`` optionally widens the surrounding interval as
    ``((x_lo, y_lo), (x_hi, y_hi))`` in cell coordinates; results do not
    depend on the choice, which the test suite checks rather than assumes.
    """
    if within is None:
        lo, hi = (0, 0), (poly.width - 1, poly.height - 1)
    else:
        lo, hi = within
        if not all(lo[i] <= 0 and hi[i] >= (poly.width, poly.height)[i] - 1 for i in (0, 1)):
            raise ValueError("'within' must contain the polyomino")
    inside = {
        (x, y)
        for x in range(lo[0], hi[0] + 1)
        for y in range(lo[1], hi[1] + 1)
        if (x, y) not in poly.cells
    }
    # flood the complement from a one-cell ring around the interval
    seen = set()
    stack = []
    for x in range(lo[0] - 1, hi[0] + 2):
        for y in (lo[1] - 1, hi[1] + 1):
            stack.append((x, y))
    for y in range(lo[1], hi[1] + 1):
        stack.extend(((lo[0] - 1, y), (hi[0] + 1, y)))
    seen.update(stack)
    while stack:
        x, y = stack.pop()
        for dx, dy in _STEPS:
            nb = (x + dx, y + dy)
            if nb in inside and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return all(c in seen for c in inside)


def inner_intervals(poly):
    """All intervals [lo, hi] (lo < hi componentwise) whose cells all lie in the polyomino.

    Ordered lexicographically by (lo, hi).
    """
    w, h = poly.width, poly.height
    out = []
    for x1 in range(w):
        for y1 in range(h):
            for x2 in range(x1 + 1, w + 1):
                for y2 in range(y1 + 1, h + 1):
                    if all(
                        (cx, cy) in poly.cells
                        for cx in range(x1, x2)
                        for cy in range(y1, y2)
                    ):
                        out.append(((x1, y1), (x2, y2)))
    return out


def grid_variables(poly):
    """Variables x(i,j) for the vertices of the polyomino.

    Ranking (and hence default variable order) is row-major descending on
    (y, x): the top-right vertex is the highest variable.
    """
    verts = sorted(poly.vertices, key=lambda p: (p[1], p[0]), reverse=True)
    return VariableSet(
        names=[f"x({x},{y})" for x, y in verts],
        keys=[grid_key(p) for p in verts],
    )


def inner_minors(poly, variables=None):
    """The inner 2-minors: diagonal product minus anti-diagonal product per inner interval."""
    variables = variables if variables is not None else grid_variables(poly)
    n = len(variables)
    out = []
    for (x1, y1), (x2, y2) in inner_intervals(poly):
        plus = mono_from_indices(n, (variables.index(grid_key((x1, y1))),
                                     variables.index(grid_key((x2, y2)))))
        minus = mono_from_indices(n, (variables.index(grid_key((x1, y2))),
                                      variables.index(grid_key((x2, y1)))))
        out.append(Binomial(plus, minus))
    return out


# ---------------------------------------------------------------------------
# enumeration

def enumeration_cap():
    raw = os.environ.get("POLYPRIME_CAP")
    if raw is None:
        return DEFAULT_ENUM_CAP
    return int(raw)


@lru_cache(maxsize=None)
def _level(n):
    if n == 1:
        return (((0, 0),),)
    grown = set()
    for shape in _level(n - 1):
        have = set(shape)
        for x, y in shape:
            for dx, dy in _STEPS:
                nb = (x + dx, y + dy)
                if nb not in have:
                    grown.add(normalize_cells(have | {nb}))
    return tuple(sorted(grown))


def enumerate_polyominoes(n, cap=None):
    """Yield every fixed polyomino with n cells once, in sorted canonical order."""
    cap = enumeration_cap() if cap is None else cap
    if n < 1:
        raise ValueError("cell count must be positive")
    if n > cap:
        raise CapExceededError(f"n={n} exceeds the enumeration cap {cap}")
    for shape in _level(n):
        yield Polyomino(shape)


def random_polyomino(n, rng):
    """Seeded random growth: uniformly pick an adjacent empty cell n-1 times."""
    cells = {(0, 0)}
    while len(cells) < n:
        frontier = sorted(
            {
                (x + dx, y + dy)
                for x, y in cells
                for dx, dy in _STEPS
                if (x + dx, y + dy) not in cells
            }
        )
        cells.add(frontier[rng.randrange(len(frontier))])
    return Polyomino(cells)


# ---------------------------------------------------------------------------
# symmetries (used by invariance tests)

def _rot(cells):
    return [(-y, x) for x, y in cells]


def _mirror(cells):
    return [(-x, y) for x, y in cells]


def symmetry_images(poly):
    """The 8 dihedral images of the polyomino (possibly with repeats)."""
    out = []
    cells = list(poly.cells_sorted)
    for _ in range(2):
        for _ in range(4):
            out.append(Polyomino(cells))
            cells = _rot(cells)
        cells = _mirror(cells)
    return out
