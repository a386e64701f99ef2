"""Partitions, k-partite and marked k-partite partitions, skew diagrams.

Conventions
-----------
* A partition is a weakly decreasing tuple of positive ints; ``()`` is empty.
* A k-partite partition is a k-tuple of partitions.
* Cells and boxes use 1-based (row, col) coordinates.
* Canonical enumeration order of k-partite partitions: component sizes in
  decreasing order (first component first), then each component as a tuple in
  increasing lexicographic order. For a given base, marks are ordered by
  component ascending, then marked part descending.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple, Optional, Sequence

Partition = tuple[int, ...]
KPartite = tuple[Partition, ...]


class Box(NamedTuple):
    row: int
    col: int
    component: int = 0


class SkewShape(NamedTuple):
    outer: Partition
    inner: Partition

    def cells(self) -> set[tuple[int, int]]:
        return skew_cells(self.outer, self.inner)


@dataclass(frozen=True)
class StripAnalysis:
    components: int
    rows_occupied: int
    height: int
    sharp_corners: frozenset[Box]
    dull_boxes: frozenset[Box]


@dataclass(frozen=True)
class Marked:
    """A k-partite partition with one distinguished part.

    ``part`` is the marked part size and ``component`` the constituent holding
    it. Which copy of an equal part is marked is immaterial.
    """

    base: KPartite
    component: int
    part: int

    def __post_init__(self):
        if not 0 <= self.component < len(self.base):
            raise ValueError(f"mark component {self.component} out of range")
        if self.part not in self.base[self.component]:
            raise ValueError(
                f"marked part {self.part} is not a part of component {self.component}"
            )

    @property
    def k(self) -> int:
        return len(self.base)

    @property
    def size(self) -> int:
        return kpartite_size(self.base)

    def __str__(self) -> str:
        return render_shape(self)


# -- partitions ---------------------------------------------------------------

def make_partition(parts: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(x < 1 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not a partition: {parts!r}")
    return p


def multiplicities(p: Partition) -> dict[int, int]:
    m: dict[int, int] = {}
    for x in p:
        m[x] = m.get(x, 0) + 1
    return m


def z_value(rho: Partition) -> int:
    """prod_i i^{m_i} m_i!"""
    out = 1
    for i, m in multiplicities(rho).items():
        out *= i**m * factorial(m)
    return out


def remove_part(p: Partition, j: int) -> Partition:
    lst = list(p)
    lst.remove(j)
    return tuple(lst)


def add_part(p: Partition, j: int) -> Partition:
    return tuple(sorted(p + (j,), reverse=True))


@lru_cache(maxsize=None)
def partitions(n: int, max_part: Optional[int] = None) -> tuple[Partition, ...]:
    """All partitions of n with parts <= max_part, lexicographically decreasing."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def contains(inner: Partition, outer: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def subpartitions(outer: Partition, size: int) -> Iterator[Partition]:
    """Partitions of ``size`` contained in ``outer``."""

    def rec(i: int, remaining: int, cap: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        if i >= len(outer):
            return
        for x in range(min(cap, outer[i], remaining), 0, -1):
            for rest in rec(i + 1, remaining - x, x):
                yield (x,) + rest

    yield from rec(0, size, size)


def skew_cells(outer: Partition, inner: Partition) -> set[tuple[int, int]]:
    if not contains(inner, outer):
        raise ValueError(f"{inner} is not contained in {outer}")
    cells = set()
    for r, length in enumerate(outer, start=1):
        start = inner[r - 1] if r - 1 < len(inner) else 0
        for c in range(start + 1, length + 1):
            cells.add((r, c))
    return cells


def _has_2x2(cells: set[tuple[int, int]]) -> bool:
    return any(
        (r, c + 1) in cells and (r + 1, c) in cells and (r + 1, c + 1) in cells
        for r, c in cells
    )


def _connected_components(cells: set[tuple[int, int]]) -> list[set[tuple[int, int]]]:
    left = set(cells)
    comps = []
    while left:
        seed = left.pop()
        comp = {seed}
        stack = [seed]
        while stack:
            r, c = stack.pop()
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in left:
                    left.remove(nb)
                    comp.add(nb)
                    stack.append(nb)
        comps.append(comp)
    return comps


def broken_strip_analysis(s: SkewShape, component: int = 0) -> Optional[StripAnalysis]:
    """Analyse a skew shape with no 2x2 block; ``None`` if empty or it has one.

    The height is summed over connected pieces: rows occupied by each piece,
    minus one per piece.
    """
    cells = s.cells()
    if not cells or _has_2x2(cells):
        return None
    comps = _connected_components(cells)
    rows = sum(len({r for r, _ in comp}) for comp in comps)
    sharp = frozenset(
        Box(r, c, component)
        for r, c in cells
        if (r + 1, c) in cells and (r, c + 1) in cells
    )
    dull = frozenset(
        Box(r, c, component)
        for r, c in cells
        if (r + 1, c) not in cells and (r, c + 1) not in cells
    )
    return StripAnalysis(len(comps), rows, rows - len(comps), sharp, dull)


def border_strip_height(s: SkewShape) -> Optional[int]:
    """Height of a (connected) border strip, or ``None`` if ``s`` is not one."""
    cells = s.cells()
    if not cells or _has_2x2(cells) or len(_connected_components(cells)) != 1:
        return None
    return len({r for r, _ in cells}) - 1


def content(b: Box) -> int:
    sign = -1 if b.component % 2 else 1
    return sign * (b.col - b.row)


def exterior_corners(lam: Partition, component: int = 0) -> list[Box]:
    out = []
    for r in range(1, len(lam) + 2):
        row = lam[r - 1] if r - 1 < len(lam) else 0
        above = lam[r - 2] if r >= 2 else None
        if above is None or row < above:
            out.append(Box(r, row + 1, component))
    return out


def add_cell(lam: Partition, row: int) -> Partition:
    """Add a cell at the end of 1-based ``row``; must give a partition."""
    lst = list(lam)
    if row == len(lst) + 1:
        lst.append(1)
    else:
        lst[row - 1] += 1
    return make_partition(lst)


def remove_cell(lam: Partition, row: int) -> Partition:
    lst = list(lam)
    lst[row - 1] -= 1
    if lst[row - 1] == 0:
        lst.pop(row - 1)
    return make_partition(lst)


def removable_rows(lam: Partition) -> list[int]:
    return [
        r
        for r in range(1, len(lam) + 1)
        if r == len(lam) or lam[r] < lam[r - 1]
    ]


# -- k-partite partitions ------------------------------------------------------

def kpartite_size(lam: KPartite) -> int:
    return sum(sum(p) for p in lam)


def kpartite_key(lam: KPartite):
    return (tuple(-sum(p) for p in lam), lam)


def marked_key(m: Marked):
    return (kpartite_key(m.base), m.component, -m.part)


@lru_cache(maxsize=None)
def kpartite_partitions(n: int, k: int) -> tuple[KPartite, ...]:
    """All k-partite partitions of n in canonical order."""
    if k < 1 or n < 0:
        raise ValueError("need n >= 0 and k >= 1")

    def rec(remaining: int, slots: int) -> Iterator[KPartite]:
        if slots == 1:
            for p in partitions(remaining):
                yield (p,)
            return
        for first in range(remaining, -1, -1):
            for p in partitions(first):
                for rest in rec(remaining - first, slots - 1):
                    yield (p,) + rest

    return tuple(sorted(rec(n, k), key=kpartite_key))


def marks_of(lam: KPartite) -> list[Marked]:
    return sorted(
        (Marked(lam, i, j) for i, p in enumerate(lam) for j in set(p)),
        key=marked_key,
    )


@lru_cache(maxsize=None)
def marked_kpartite_partitions(n: int, k: int) -> tuple[Marked, ...]:
    out: list[Marked] = []
    for lam in kpartite_partitions(n, k):
        out.extend(marks_of(lam))
    return tuple(out)


def enumerate_k_partite(n: int, k: int, marked: bool = False):
    if marked:
        return list(marked_kpartite_partitions(n, k))
    return list(kpartite_partitions(n, k))


def covers(mu: KPartite, lam: KPartite) -> bool:
    """True iff lam is mu plus one cell at an exterior corner of one component."""
    if len(mu) != len(lam) or kpartite_size(lam) != kpartite_size(mu) + 1:
        return False
    diff = [i for i in range(len(mu)) if mu[i] != lam[i]]
    if len(diff) != 1:
        return False
    i = diff[0]
    return any(add_cell(mu[i], b.row) == lam[i] for b in exterior_corners(mu[i]))


def lower_covers(lam: KPartite) -> list[KPartite]:
    """All mu with mu covered by lam (each once)."""
    out = []
    for i, p in enumerate(lam):
        for r in removable_rows(p):
            out.append(lam[:i] + (remove_cell(p, r),) + lam[i + 1 :])
    return out


def upper_covers(mu: KPartite) -> list[KPartite]:
    out = []
    for i, p in enumerate(mu):
        for b in exterior_corners(p):
            out.append(mu[:i] + (add_cell(p, b.row),) + mu[i + 1 :])
    return out


def gather(rho: KPartite) -> list[tuple[int, int]]:
    """All (part, component) pairs, part descending then component ascending."""
    return sorted(
        ((j, i) for i, p in enumerate(rho) for j in p),
        key=lambda t: (-t[0], t[1]),
    )


def marked_to_cover(m: Marked) -> tuple[KPartite, KPartite]:
    """The pair (mu, lam) with mu covered by lam, the added cell ending the
    last row of length ``m.part`` in the marked component."""
    lam = m.base
    p = lam[m.component]
    row = max(r for r, x in enumerate(p, start=1) if x == m.part)
    mu = lam[: m.component] + (remove_cell(p, row),) + lam[m.component + 1 :]
    return mu, lam


def cover_to_marked(mu: KPartite, lam: KPartite) -> Marked:
    if not covers(mu, lam):
        raise ValueError(f"{mu} is not covered by {lam}")
    i = next(t for t in range(len(lam)) if mu[t] != lam[t])
    a, b = mu[i], lam[i]
    row = next(r for r in range(1, len(b) + 1) if (a[r - 1] if r - 1 < len(a) else 0) != b[r - 1])
    return Marked(lam, i, b[row - 1])


# -- text grammar ----------------------------------------------------------------

def render_partition(p: Partition, mark: Optional[int] = None) -> str:
    if not p:
        return "-"
    starred = max(i for i, x in enumerate(p) if x == mark) if mark in p else None
    return ",".join(f"{x}*" if i == starred else str(x) for i, x in enumerate(p))


def render_shape(shape) -> str:
    """``-|4*,2,1|2,1`` style label of a (marked) k-partite partition."""
    if isinstance(shape, Marked):
        return "|".join(
            render_partition(p, shape.part if i == shape.component else None)
            for i, p in enumerate(shape.base)
        )
    return "|".join(render_partition(p) for p in shape)


def parse_shape(text: str, k: Optional[int] = None):
    """Parse the label grammar; returns a :class:`Marked` iff a part is starred."""
    comps = text.strip().split("|")
    if k is not None and len(comps) != k:
        raise ValueError(f"expected {k} components in {text!r}, got {len(comps)}")
    parts: list[Partition] = []
    mark = None
    for i, comp in enumerate(comps):
        comp = comp.strip()
        if comp in ("-", ""):
            parts.append(())
            continue
        vals = []
        for tok in comp.split(","):
            tok = tok.strip()
            if tok.endswith("*"):
                if mark is not None:
                    raise ValueError(f"more than one marked part in {text!r}")
                tok = tok[:-1]
                mark = (i, int(tok))
            vals.append(int(tok))
        parts.append(make_partition(sorted(vals, reverse=True)))
    base = tuple(parts)
    if mark is None:
        return base
    return Marked(base, mark[0], mark[1])
