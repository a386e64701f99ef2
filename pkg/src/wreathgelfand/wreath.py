"""The generalized symmetric group Z_k wr S_n.

An element is a pair (colors; perm). ``perm`` is stored in one-line form with
1-based images, ``perm[i-1] = p(i)``. Permutations compose left to right: in a
product ``pq`` the permutation ``p`` is applied first. The product rule is

    (g; p) . (h; q) = ((g_{q^-1(i)} + h_i)_i ; pq)

with colors in Z_k stored as residues 0..k-1. The subgroup K = Z_k wr S_{n-1}
is embedded as the elements fixing n with color 0 at n.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .shapes import (
    KPartite,
    Marked,
    kpartite_partitions,
    marked_kpartite_partitions,
    multiplicities,
    z_value,
)

Permutation = tuple[int, ...]

DEFAULT_CAP = 10**7


class CapExceeded(RuntimeError):
    """Raised when a brute-force enumeration would exceed the element cap."""


# -- permutations ----------------------------------------------------------------

def perm_compose(p: Permutation, q: Permutation) -> Permutation:
    """``pq``: apply p, then q."""
    return tuple(q[p[i] - 1] for i in range(len(p)))


def perm_inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, v in enumerate(p, start=1):
        inv[v - 1] = i
    return tuple(inv)


def perm_cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles (including fixed points), each starting at its minimum."""
    seen = [False] * (len(p) + 1)
    out = []
    for start in range(1, len(p) + 1):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i - 1]
        out.append(tuple(cyc))
    return out


def perm_from_cycles(cycles: Sequence[Sequence[int]], n: int) -> Permutation:
    img = list(range(1, n + 1))
    for cyc in cycles:
        if any(not 1 <= a <= n for a in cyc):
            raise ValueError(f"cycle {tuple(cyc)} leaves 1..{n}")
        for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
            img[a - 1] = b
    return tuple(img)


def _check_perm(p: Sequence[int]) -> Permutation:
    p = tuple(int(v) for v in p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


# -- elements ----------------------------------------------------------------------

@dataclass(frozen=True)
class WreathElement:
    k: int
    colors: tuple[int, ...]
    perm: Permutation

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        object.__setattr__(self, "colors", tuple(int(c) % self.k for c in self.colors))
        object.__setattr__(self, "perm", _check_perm(self.perm))
        if len(self.colors) != len(self.perm):
            raise ValueError("colors and permutation have different lengths")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int, k: int) -> WreathElement:
        return cls(k, (0,) * n, tuple(range(1, n + 1)))

    def __mul__(self, other: WreathElement) -> WreathElement:
        return multiply(self, other)

    def inverse(self) -> WreathElement:
        return inverse(self)

    def cycles(self) -> list[tuple[int, ...]]:
        return perm_cycles(self.perm)

    def embed(self, n: int) -> WreathElement:
        """Image in Z_k wr S_n, fixing the extra points with color 0."""
        extra = n - self.n
        if extra < 0:
            raise ValueError("cannot embed into a smaller group")
        return WreathElement(
            self.k,
            self.colors + (0,) * extra,
            self.perm + tuple(range(self.n + 1, n + 1)),
        )

    def in_subgroup(self) -> bool:
        """Membership in Z_k wr S_{n-1} as embedded here."""
        return self.n == 0 or (self.perm[-1] == self.n and self.colors[-1] == 0)

    def __str__(self) -> str:
        return render_element(self)


def multiply(x: WreathElement, y: WreathElement) -> WreathElement:
    if x.k != y.k or x.n != y.n:
        raise ValueError(f"cannot multiply elements of Z_{x.k} wr S_{x.n} and Z_{y.k} wr S_{y.n}")
    qinv = perm_inverse(y.perm)
    colors = tuple((x.colors[qinv[i] - 1] + y.colors[i]) % x.k for i in range(x.n))
    return WreathElement(x.k, colors, perm_compose(x.perm, y.perm))


def inverse(x: WreathElement) -> WreathElement:
    colors = tuple((-x.colors[x.perm[i] - 1]) % x.k for i in range(x.n))
    return WreathElement(x.k, colors, perm_inverse(x.perm))


def conjugate_by(x: WreathElement, z: WreathElement) -> WreathElement:
    """z^-1 x z."""
    return multiply(multiply(inverse(z), x), z)


def cycle_sum(x: WreathElement, cycle: Sequence[int]) -> int:
    cycle = tuple(cycle)
    if not cycle or any(x.perm[a - 1] != b for a, b in zip(cycle, cycle[1:] + cycle[:1])):
        raise ValueError(f"{cycle} is not a cycle of {x.perm}")
    return sum(x.colors[i - 1] for i in cycle) % x.k


def type_of(x: WreathElement) -> KPartite:
    comps: list[list[int]] = [[] for _ in range(x.k)]
    for cyc in x.cycles():
        comps[sum(x.colors[i - 1] for i in cyc) % x.k].append(len(cyc))
    return tuple(tuple(sorted(c, reverse=True)) for c in comps)


def marked_type_of(x: WreathElement) -> Marked:
    if x.n < 1:
        raise ValueError("marked type needs n >= 1")
    comps: list[list[int]] = [[] for _ in range(x.k)]
    mark = None
    for cyc in x.cycles():
        s = sum(x.colors[i - 1] for i in cyc) % x.k
        comps[s].append(len(cyc))
        if x.n in cyc:
            mark = (s, len(cyc))
    base = tuple(tuple(sorted(c, reverse=True)) for c in comps)
    return Marked(base, mark[0], mark[1])


# -- class sizes -------------------------------------------------------------------

def group_order(n: int, k: int) -> int:
    return k**n * math.factorial(n)


def centralizer_order(lam: KPartite) -> int:
    k = len(lam)
    out = 1
    for p in lam:
        out *= z_value(p) * k ** len(p)
    return out


def class_size(lam: KPartite) -> int:
    n = sum(sum(p) for p in lam)
    return group_order(n, len(lam)) // centralizer_order(lam)


def k_class_size(m: Marked) -> int:
    """Size of the Z_k wr S_{n-1}-class of marked type ``m``.

    A fraction j*m_j/n of the class C_Lambda has n in a cycle of the marked kind.
    """
    n = m.size
    num = class_size(m.base) * m.part * multiplicities(m.base[m.component])[m.part]
    assert num % n == 0
    return num // n


# -- representatives ---------------------------------------------------------------

def class_representative(shape, k: Optional[int] = None) -> WreathElement:
    """Canonical element of the class (or marked K-class) of ``shape``.

    Cycles are consecutive runs (a, a+1, ..., b); each cycle carries its whole
    color on its first point. For a marked shape the marked cycle comes last,
    so it ends at n.
    """
    if isinstance(shape, Marked):
        base, mark = shape.base, (shape.component, shape.part)
    else:
        base, mark = shape, None
    k = len(base)
    parts = [(j, i) for i, p in enumerate(base) for j in sorted(p, reverse=True)]
    if mark is not None:
        parts.remove((mark[1], mark[0]))
        parts.append((mark[1], mark[0]))
    n = sum(j for j, _ in parts)
    colors = [0] * n
    cycles = []
    pos = 1
    for j, i in parts:
        cycles.append(tuple(range(pos, pos + j)))
        colors[pos - 1] = i
        pos += j
    return WreathElement(k, tuple(colors), perm_from_cycles(cycles, n))


# -- enumeration ---------------------------------------------------------------------

def enumerate_group(n: int, k: int, cap: int = DEFAULT_CAP) -> Iterator[WreathElement]:
    order = group_order(n, k)
    if order > cap:
        raise CapExceeded(f"|Z_{k} wr S_{n}| = {order} exceeds cap {cap}")
    for perm in itertools.permutations(range(1, n + 1)):
        for colors in itertools.product(range(k), repeat=n):
            yield WreathElement(k, colors, perm)


def enumerate_subgroup(n: int, k: int, cap: int = DEFAULT_CAP) -> Iterator[WreathElement]:
    """Z_k wr S_{n-1} embedded in Z_k wr S_n."""
    if n < 1:
        raise ValueError("subgroup needs n >= 1")
    for h in enumerate_group(n - 1, k, cap):
        yield h.embed(n)


# -- K-conjugacy -------------------------------------------------------------------

def _cycle_through(p: Permutation, start: int) -> tuple[int, ...]:
    cyc = [start]
    i = p[start - 1]
    while i != start:
        cyc.append(i)
        i = p[i - 1]
    return tuple(cyc)


def find_K_conjugator(x: WreathElement, y: WreathElement) -> Optional[WreathElement]:
    """Some z in Z_k wr S_{n-1} with y = z^-1 x z, or ``None`` if none exists.

    Cycles of x are matched with cycles of y of equal length and cycle sum,
    the cycle of n onto the cycle of n, both written from n. With t the
    resulting permutation, the colors f of z satisfy
    f_i - f_{q^-1(i)} = h_i - g_{t^-1(i)}, solved by summing along each cycle
    of q from a base point with f = 0 (the base of n's cycle is n itself).
    """
    if x.k != y.k or x.n != y.n:
        raise ValueError("elements from different groups")
    if x.n == 0:
        return WreathElement(x.k, (), ())
    if marked_type_of(x) != marked_type_of(y):
        return None
    n, k = x.n, x.k
    g, p, h, q = x.colors, x.perm, y.colors, y.perm

    def csum(colors, cyc):
        return sum(colors[i - 1] for i in cyc) % k

    xc = [_cycle_through(p, n)] + [c for c in perm_cycles(p) if n not in c]
    yc_pool: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for c in perm_cycles(q):
        if n not in c:
            yc_pool.setdefault((len(c), csum(h, c)), []).append(c)
    pairs = [(xc[0], _cycle_through(q, n))]
    for c in xc[1:]:
        pairs.append((c, yc_pool[(len(c), csum(g, c))].pop()))

    t = [0] * n
    for cx, cy in pairs:
        for a, b in zip(cx, cy):
            t[a - 1] = b
    t = tuple(t)
    tinv = perm_inverse(t)

    f = [0] * n
    for _, cy in pairs:
        for prev, cur in zip(cy, cy[1:]):
            f[cur - 1] = (f[prev - 1] + h[cur - 1] - g[tinv[cur - 1] - 1]) % k
    z = WreathElement(k, tuple(f), t)
    assert conjugate_by(x, z) == y and z.in_subgroup()
    return z


def verify_symmetric_gelfand(n: int, k: int, cap: int = DEFAULT_CAP) -> bool:
    """Every x is K-conjugate to its inverse, with a verified conjugator."""
    for x in enumerate_group(n, k, cap):
        xi = inverse(x)
        if n and marked_type_of(x) != marked_type_of(xi):
            return False
        z = find_K_conjugator(x, xi)
        if z is None or not z.in_subgroup() or conjugate_by(x, z) != xi:
            return False
    return True


def g_classes(n: int, k: int) -> tuple[KPartite, ...]:
    return kpartite_partitions(n, k)


def k_classes(n: int, k: int) -> tuple[Marked, ...]:
    return marked_kpartite_partitions(n, k)


# -- text form -------------------------------------------------------------------

def render_element(x: WreathElement) -> str:
    return ",".join(map(str, x.colors)) + " ; " + ",".join(map(str, x.perm))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _cycle_points(body: str) -> tuple[int, ...]:
    """``1,3,5`` or ``1 3 5``; a bare digit run such as ``135`` is read digit by digit."""
    body = body.strip()
    if body.isdigit():
        return tuple(int(ch) for ch in body)
    return tuple(int(v) for v in body.replace(" ", ",").split(",") if v)


def parse_permutation(text: str, n: Optional[int] = None) -> Permutation:
    """One-line images ``4,5,3,1,2`` or cycle notation ``(1,4)(2,5)(3)``."""
    s = text.strip()
    if s.startswith("("):
        cycles = [_cycle_points(body) for body in _CYCLE_RE.findall(s)]
        if _CYCLE_RE.sub("", s).strip():
            raise ValueError(f"bad cycle notation {text!r}")
        size = n if n is not None else max((max(c) for c in cycles if c), default=0)
        return _check_perm(perm_from_cycles(cycles, size))
    if not s:
        return ()
    return _check_perm(int(v) for v in s.split(","))


def parse_element(text: str, k: int) -> WreathElement:
    """Parse ``c_1,...,c_n ; images-or-cycles``."""
    if ";" not in text:
        raise ValueError(f"expected 'colors ; permutation', got {text!r}")
    left, right = text.split(";", 1)
    colors = tuple(int(v) for v in left.split(",") if v.strip())
    perm = parse_permutation(right, len(colors))
    return WreathElement(k, colors, perm)


def from_signed_permutation(cycles: str, n: int) -> WreathElement:
    """Element of Z_2 wr S_n from a permutation of {1..2n} in cycle notation.

    Position i corresponds to the pair {2i-1, 2i}. The permutation must map
    pairs to pairs. Colors sit on the image: if 2i-1 goes to an even point,
    the image position of i gets color 1.
    """
    w = parse_permutation(cycles, 2 * n)
    if len(w) != 2 * n:
        raise ValueError(f"{cycles} is not a permutation of 1..{2 * n}")
    perm, colors = [], [0] * n
    for i in range(1, n + 1):
        a, b = w[2 * i - 2], w[2 * i - 1]
        if (a + 1) // 2 != (b + 1) // 2 or a == b:
            raise ValueError(f"{cycles} does not preserve the pairs {{2i-1, 2i}}")
        perm.append((a + 1) // 2)
        colors[perm[-1] - 1] = 0 if a % 2 else 1
    return WreathElement(2, tuple(colors), tuple(perm))
