"""Irreducible characters of Z_k wr S_n by the Murnaghan-Nakayama recursion.

chi^lam at the class rho: the gathered parts of rho are stripped from lam one at
a time as rim hooks (largest part first). A hook of height h stripped from
component f, for a part taken from component c of rho, contributes
(-1)^h * zeta_k^(f*c). For k = 2 this is the bipartite rule with the color
factor (-1)^(f*c); for k >= 3 the same recursion with a k-th root of unity,
validated by exact orthogonality.

Values are accumulated in the group ring Z[Z_k] (a length-k integer vector
indexed by the exponent of zeta) and only reduced to the cyclotomic field at
the end.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .exactnum import Cyclotomic
from .shapes import (
    KPartite,
    Partition,
    gather,
    kpartite_partitions,
    kpartite_size,
    lower_covers,
)
from .wreath import WreathElement, class_size, group_order, type_of


def rim_hooks(p: Partition, r: int) -> Iterator[tuple[Partition, int]]:
    """Yield (p minus hook, height) for every rim hook of size r in p."""
    m = len(p)
    beta = [p[i] + (m - 1 - i) for i in range(m)]
    occupied = set(beta)
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for x in beta if target < x < b)
        new = sorted((target if x == b else x for x in beta), reverse=True)
        parts = tuple(x - (m - 1 - i) for i, x in enumerate(new))
        yield tuple(x for x in parts if x > 0), height


@lru_cache(maxsize=None)
def _mn(lam: KPartite, parts: tuple[tuple[int, int], ...]) -> tuple[int, ...]:
    k = len(lam)
    if not parts:
        return (1,) + (0,) * (k - 1)
    (r, c), rest = parts[0], parts[1:]
    acc = [0] * k
    for f, comp in enumerate(lam):
        if sum(comp) < r:
            continue
        shift = (f * c) % k
        for smaller, height in rim_hooks(comp, r):
            sub = _mn(lam[:f] + (smaller,) + lam[f + 1 :], rest)
            sign = -1 if height % 2 else 1
            for e, v in enumerate(sub):
                if v:
                    acc[(e + shift) % k] += sign * v
    return tuple(acc)


def mn_group_ring(
    lam: KPartite, rho: KPartite, order: Optional[Sequence[tuple[int, int]]] = None
) -> tuple[int, ...]:
    """Character value as a vector over powers of zeta_k.

    ``order`` overrides the sequence of (part, component) pairs stripped;
    it must be a rearrangement of ``gather(rho)``.
    """
    if len(lam) != len(rho):
        raise ValueError("lam and rho must have the same number of components")
    if kpartite_size(lam) != kpartite_size(rho):
        raise ValueError(f"size mismatch: |{lam}| != |{rho}|")
    parts = tuple(gather(rho)) if order is None else tuple(order)
    if sorted(parts) != sorted(gather(rho)):
        raise ValueError("order is not a rearrangement of the gathered parts")
    return _mn(tuple(lam), parts)


def char_wreath(lam: KPartite, rho: KPartite, k: Optional[int] = None) -> Cyclotomic:
    if k is None:
        k = len(lam)
    if len(lam) != k or len(rho) != k:
        raise ValueError(f"expected {k}-partite partitions")
    return _to_cyclotomic(mn_group_ring(lam, rho), k)


@lru_cache(maxsize=None)
def _to_cyclotomic(vec: tuple[int, ...], k: int) -> Cyclotomic:
    return Cyclotomic(k, vec)


def char_bipartite(lam: KPartite, rho: KPartite, order=None) -> int:
    if len(lam) != 2 or len(rho) != 2:
        raise ValueError("char_bipartite needs bipartitions")
    v = mn_group_ring(lam, rho, order)
    return v[0] - v[1]


def character(lam: KPartite, x: WreathElement) -> Cyclotomic:
    return char_wreath(lam, type_of(x), x.k)


@lru_cache(maxsize=None)
def degree(lam: KPartite) -> int:
    k = len(lam)
    n = kpartite_size(lam)
    ident = ((1,) * n,) + ((),) * (k - 1)
    return char_wreath(lam, ident, k).to_rational().numerator


def restriction_decomposition(lam: KPartite) -> list[KPartite]:
    if kpartite_size(lam) < 1:
        raise ValueError("restriction needs n >= 1")
    return lower_covers(lam)


@dataclass
class CharacterTable:
    k: int
    n: int
    row_labels: list
    col_labels: list
    class_orders: list[int]
    values: list[list[Cyclotomic]] = field(repr=False)

    def __post_init__(self):
        if len(self.values) != len(self.row_labels) or any(
            len(row) != len(self.col_labels) for row in self.values
        ):
            raise ValueError("table dimensions do not match labels")
        if len(self.class_orders) != len(self.col_labels):
            raise ValueError("one class order per column")

    def value(self, row, col) -> Cyclotomic:
        return self.values[self.row_labels.index(row)][self.col_labels.index(col)]

    def row(self, label) -> list[Cyclotomic]:
        return self.values[self.row_labels.index(label)]

    def column(self, label) -> list[Cyclotomic]:
        j = self.col_labels.index(label)
        return [r[j] for r in self.values]


def character_table(n: int, k: int) -> CharacterTable:
    shapes = list(kpartite_partitions(n, k))
    orders = [class_size(c) for c in shapes]
    assert sum(orders) == group_order(n, k)
    values = [[char_wreath(lam, rho, k) for rho in shapes] for lam in shapes]
    return CharacterTable(k, n, shapes, list(shapes), orders, values)
