"""Partitions, standard Young tableaux, domino tableaux and bitableaux.

Cells are ``(row, column)`` pairs, 1-based, rows growing downward.
"""
from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple

Cell = tuple[int, int]


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> "Partition":
        rows: dict[int, int] = {}
        count = 0
        for r, c in cells:
            rows[r] = max(rows.get(r, 0), c)
            count += 1
        parts = [rows.get(r, 0) for r in range(1, max(rows, default=0) + 1)]
        lam = cls(p for p in parts if p)
        if len(lam) != len(parts) or sum(lam) != count:
            raise ValueError("cells do not form a Young diagram")
        return lam

    @property
    def size(self) -> int:
        return sum(self)

    def cells(self) -> list[Cell]:
        return [(r, c) for r, p in enumerate(self, start=1) for c in range(1, p + 1)]

    def __contains__(self, cell) -> bool:
        if not (isinstance(cell, tuple) and len(cell) == 2):
            return super().__contains__(cell)
        r, c = cell
        return 1 <= r <= len(self) and 1 <= c <= self[r - 1]

    def conjugate(self) -> "Partition":
        return Partition(sum(1 for p in self if p >= c) for c in range(1, (self[0] if self else 0) + 1))

    def is_staircase(self) -> bool:
        return tuple(self) == tuple(range(len(self), 0, -1))


def staircase(r: int) -> Partition:
    return Partition(range(r, 0, -1))


def hook_length(lam: Partition, cell: Cell) -> int:
    if cell not in lam:
        raise ValueError(f"cell {cell} is not in {tuple(lam)}")
    r, c = cell
    arm = lam[r - 1] - c
    leg = sum(1 for p in lam[r:] if p >= c)
    return arm + leg + 1


def removable_dominoes(lam: Partition) -> list[tuple[Cell, Cell]]:
    """Dominoes whose removal leaves a partition."""
    out = []
    cells = set(lam.cells())
    for r, p in enumerate(lam, start=1):
        # horizontal at the end of row r
        if p >= 2 and (r == len(lam) or lam[r] <= p - 2):
            out.append(((r, p - 1), (r, p)))
        # vertical at the bottom of column p
        if r < len(lam) and lam[r] == p and (r + 1 == len(lam) or lam[r + 1] < p):
            out.append(((r, p), (r + 1, p)))
    return [d for d in out if d[0] in cells and d[1] in cells]


def two_core(lam: Partition) -> Partition:
    lam = Partition(lam)
    while True:
        doms = removable_dominoes(lam)
        if not doms:
            break
        cells = set(lam.cells()) - set(doms[0])
        lam = Partition.from_cells(cells)
    if not lam.is_staircase():
        raise AssertionError(f"2-core {tuple(lam)} is not a staircase")
    return lam


def _pad(label, width: int) -> str:
    return str(label).rjust(width)


class StandardTableau:
    """Young tableau with distinct positive labels increasing along rows and columns."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]] = ()):
        self.rows: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rows if len(tuple(r)))
        self._validate()

    def _validate(self) -> None:
        Partition(len(r) for r in self.rows)
        labels = [x for r in self.rows for x in r]
        if len(set(labels)) != len(labels) or any(x <= 0 for x in labels):
            raise ValueError(f"labels must be distinct positive integers: {self.rows}")
        for r, row in enumerate(self.rows):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {r + 1} is not increasing: {self.rows}")
            if r and any(self.rows[r - 1][c] >= row[c] for c in range(len(row))):
                raise ValueError(f"column violation in row {r + 1}: {self.rows}")

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @property
    def labels(self) -> frozenset[int]:
        return frozenset(x for r in self.rows for x in r)

    def __len__(self) -> int:
        return sum(len(r) for r in self.rows)

    def cell_of(self, label: int) -> Cell:
        for r, row in enumerate(self.rows, start=1):
            if label in row:
                return r, row.index(label) + 1
        raise KeyError(label)

    def relabel(self, mapping: Mapping[int, int]) -> "StandardTableau":
        return StandardTableau([[mapping.get(x, x) for x in row] for row in self.rows])

    def row_reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in reversed(self.rows) for x in row)

    def descents(self) -> frozenset[int]:
        """i such that i+1 lies in a strictly lower row than i."""
        pos = {x: r for r, row in enumerate(self.rows) for x in row}
        return frozenset(i for i in pos if i + 1 in pos and pos[i + 1] > pos[i])

    def __eq__(self, other) -> bool:
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"StandardTableau({[list(r) for r in self.rows]})"

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "StandardTableau":
        return cls(data)

    def ascii(self) -> str:
        if not self.rows:
            return "(empty)"
        width = max(len(str(x)) for r in self.rows for x in r)
        return "\n".join(" ".join(_pad(x, width) for x in row) for row in self.rows)


class Bitableau(NamedTuple):
    plus: StandardTableau
    minus: StandardTableau

    @property
    def labels(self) -> frozenset[int]:
        return self.plus.labels | self.minus.labels

    @property
    def shape(self) -> tuple[Partition, Partition]:
        return self.plus.shape, self.minus.shape

    def is_standard(self, n: int | None = None) -> bool:
        if self.plus.labels & self.minus.labels:
            return False
        return n is None or self.labels == frozenset(range(1, n + 1))

    def to_json(self) -> dict:
        return {"plus": self.plus.to_json(), "minus": self.minus.to_json()}

    @classmethod
    def from_json(cls, data) -> "Bitableau":
        return cls(StandardTableau(data["plus"]), StandardTableau(data["minus"]))

    def ascii(self) -> str:
        return f"+:\n{self.plus.ascii()}\n-:\n{self.minus.ascii()}"


def _is_domino(a: Cell, b: Cell) -> bool:
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


class DominoTableau:
    """A staircase core ``delta_r`` plus labeled dominoes.

    ``dominoes`` maps each label to its two cells, stored top-left first.
    Standardness (labels increase along rows and down columns, the core
    counting as 0) and the partition shape are checked on construction;
    pass ``check=False`` for intermediate states of an algorithm.
    """

    __slots__ = ("core", "dominoes", "_grid", "_key")

    def __init__(self, core: int = 0, dominoes: Mapping[int, Iterable[Cell]] | None = None, check: bool = True):
        self.core = int(core)
        doms = {}
        for label, cells in (dominoes or {}).items():
            a, b = sorted(tuple(c) for c in cells)
            doms[int(label)] = (a, b)
        self.dominoes: dict[int, tuple[Cell, Cell]] = dict(sorted(doms.items()))
        grid: dict[Cell, int] = {cell: 0 for cell in staircase(self.core).cells()}
        for label, (a, b) in self.dominoes.items():
            for cell in (a, b):
                if cell in grid:
                    raise ValueError(f"cell {cell} is covered twice")
                grid[cell] = label
        self._grid = grid
        self._key = (self.core, tuple(self.dominoes.items()))
        if check:
            self.validate()

    def validate(self) -> None:
        if self.core < 0:
            raise ValueError("core rank must be nonnegative")
        for label, (a, b) in self.dominoes.items():
            if label <= 0:
                raise ValueError(f"labels must be positive, got {label}")
            if not _is_domino(a, b) or min(a + b) < 1:
                raise ValueError(f"label {label} does not sit on a domino: {a}, {b}")
        Partition.from_cells(self._grid)
        for (r, c), label in self._grid.items():
            for nb in ((r, c + 1), (r + 1, c)):
                other = self._grid.get(nb)
                if other is not None and other != label and other < label:
                    raise ValueError(f"labels decrease from {label} at {(r, c)} to {other} at {nb}")

    # basic accessors

    @property
    def grid(self) -> dict[Cell, int]:
        return dict(self._grid)

    @property
    def labels(self) -> frozenset[int]:
        return frozenset(self.dominoes)

    def __len__(self) -> int:
        return len(self.dominoes)

    @property
    def shape(self) -> Partition:
        return Partition.from_cells(self._grid)

    def cells(self, label: int) -> tuple[Cell, Cell]:
        return self.dominoes[label]

    def is_vertical(self, label: int) -> bool:
        a, b = self.dominoes[label]
        return a[1] == b[1]

    def label_at(self, cell: Cell) -> int | None:
        return self._grid.get(cell)

    def __eq__(self, other) -> bool:
        return isinstance(other, DominoTableau) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"DominoTableau(core={self.core}, dominoes={self.dominoes})"

    # derived tableaux

    def restrict(self, keep) -> "DominoTableau":
        return DominoTableau(self.core, {k: v for k, v in self.dominoes.items() if keep(k)}, check=False)

    def with_domino(self, label: int, cells: Iterable[Cell], check: bool = True) -> "DominoTableau":
        doms = dict(self.dominoes)
        doms[label] = tuple(cells)
        return DominoTableau(self.core, doms, check=check)

    def relabel(self, mapping: Mapping[int, int], check: bool = True) -> "DominoTableau":
        return DominoTableau(self.core, {mapping.get(k, k): v for k, v in self.dominoes.items()}, check=check)

    def swap_labels(self, a: int, b: int) -> "DominoTableau":
        return self.relabel({a: b, b: a})

    def is_standard(self) -> bool:
        try:
            self.validate()
        except ValueError:
            return False
        return self.labels == frozenset(range(1, len(self) + 1))

    def descents(self) -> frozenset[int]:
        return domino_descents(self)

    # serialisation

    def to_json(self) -> dict:
        return {
            "core": self.core,
            "dominoes": [{"label": k, "cells": [list(a), list(b)]} for k, (a, b) in self.dominoes.items()],
        }

    @classmethod
    def from_json(cls, data) -> "DominoTableau":
        return cls(int(data["core"]), {int(d["label"]): [tuple(c) for c in d["cells"]] for d in data["dominoes"]})

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], core: int = 0) -> "DominoTableau":
        """Build from a grid of labels; 0 marks core cells, each label fills two adjacent cells."""
        found: dict[int, list[Cell]] = {}
        for r, row in enumerate(rows, start=1):
            for c, x in enumerate(row, start=1):
                if x:
                    found.setdefault(int(x), []).append((r, c))
        return cls(core, found)

    def to_rows(self) -> list[list[int]]:
        lam = self.shape
        return [[self._grid[(r, c)] for c in range(1, p + 1)] for r, p in enumerate(lam, start=1)]

    def ascii(self) -> str:
        """Grid of labels, core cells shown as ``.``; a domino's label fills both of its cells."""
        rows = self.to_rows()
        if not rows:
            return "(empty)"
        width = max(len(str(x)) for row in rows for x in row)
        return "\n".join(" ".join(_pad(x if x else ".", width) for x in row) for row in rows)


def lies_below(upper: tuple[Cell, Cell], lower: tuple[Cell, Cell]) -> bool:
    """Every cell of ``lower`` is in a row strictly below every cell of ``upper``."""
    return min(c[0] for c in lower) > max(c[0] for c in upper)


def domino_descents(T: DominoTableau) -> frozenset[int]:
    """``{i : dom_{i+1} lies below dom_i} | {0 if dom_1 is vertical}``, with
    "lies below" read as in :func:`lies_below`."""
    labels = sorted(T.dominoes)
    if labels != list(range(1, len(labels) + 1)):
        raise ValueError("descent set needs labels 1..n")
    out = {i for i in labels[:-1] if lies_below(T.cells(i), T.cells(i + 1))}
    if labels and T.is_vertical(1):
        out.add(0)
    return frozenset(out)


def add_domino_options(shape_cells: set[Cell]) -> list[tuple[Cell, Cell]]:
    """Dominoes that can be added to a Young diagram and keep it a Young diagram."""
    parts = list(Partition.from_cells(shape_cells)) + [0, 0]
    out = []
    for r in range(1, len(parts)):
        p = parts[r - 1]
        room = parts[r - 2] if r > 1 else p + 2
        if room >= p + 2:
            out.append(((r, p + 1), (r, p + 2)))
        if room >= p + 1 and parts[r] == p:
            out.append(((r, p + 1), (r + 1, p + 1)))
        if p == 0:
            break
    return out


def standard_domino_tableaux(n: int, r: int = 0) -> list[DominoTableau]:
    """All of SDT^r(n), built by adding dominoes 1..n one at a time."""
    level = [DominoTableau(r)]
    for k in range(1, n + 1):
        nxt = []
        for T in level:
            for dom in add_domino_options(set(T.grid)):
                nxt.append(T.with_domino(k, dom, check=False))
        level = nxt
    for T in level:
        T.validate()
    return sorted(level, key=lambda T: T._key)
