"""Zonal spherical functions and generalized characters.

Throughout, G = Z_k wr S_n and K = Z_k wr S_{n-1} embedded in G (fixing n with
color 0 there). A generalized character is indexed by a cover sigma -> rho of
k-partite partitions, which we carry as the marked k-partite partition of
rho whose marked part is the length of the row that received the extra cell
(see :func:`shapes.marked_to_cover`). K-classes are indexed by marked types.

The zonal spherical function is averaged against the complex conjugate of
chi^sigma; for k <= 2 all characters are real and the conjugate is invisible.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactnum import Cyclotomic
from .irrchar import CharacterTable, char_bipartite, char_wreath, degree
from .shapes import (
    KPartite,
    Marked,
    SkewShape,
    Box,
    broken_strip_analysis,
    content,
    marked_kpartite_partitions,
    marked_to_cover,
    remove_part,
    subpartitions,
)
from .wreath import (
    DEFAULT_CAP,
    CapExceeded,
    WreathElement,
    class_representative,
    enumerate_group,
    group_order,
    k_class_size,
    marked_type_of,
    multiply,
    type_of,
)


def _restrict(y: WreathElement, n: int) -> WreathElement:
    """Accept an element of Z_k wr S_{n-1}, either bare or embedded in degree n."""
    if y.n == n - 1:
        return y
    if y.n == n and y.in_subgroup():
        return WreathElement(y.k, y.colors[:-1], y.perm[:-1])
    raise ValueError(f"{y} is not in Z_{y.k} wr S_{n - 1}")


def zonal(idx: Marked, x: WreathElement, y: WreathElement, cap: int = DEFAULT_CAP) -> Cyclotomic:
    """omega^{sigma->rho}(x, y) = 1/|K| sum_h chi^rho(x h) conj(chi^sigma(y h))."""
    sigma, rho = marked_to_cover(idx)
    n, k = x.n, x.k
    y = _restrict(y, n)
    total = Cyclotomic(k)
    for h in enumerate_group(n - 1, k, cap):
        a = char_wreath(rho, type_of(multiply(x, h.embed(n))), k)
        b = char_wreath(sigma, type_of(multiply(y, h)), k)
        total = total + a * b.conjugate()
    return total * Fraction(1, group_order(n - 1, k))


def gen_char_def(idx: Marked, x: WreathElement, cap: int = DEFAULT_CAP) -> Cyclotomic:
    sigma, _ = marked_to_cover(idx)
    return zonal(idx, x, WreathElement.identity(x.n - 1, x.k), cap) * degree(sigma)


@lru_cache(maxsize=None)
def _type_pairs(x: WreathElement, cap: int) -> tuple[tuple[KPartite, KPartite, int], ...]:
    """Multiset of (type(x h), type(h)) over h in K."""
    n, k = x.n, x.k
    counts = Counter(
        (type_of(multiply(x, h.embed(n))), type_of(h)) for h in enumerate_group(n - 1, k, cap)
    )
    return tuple((a, b, c) for (a, b), c in sorted(counts.items()))


def gen_char_def_fast(idx: Marked, x: WreathElement, cap: int = DEFAULT_CAP) -> Cyclotomic:
    """Same value as :func:`gen_char_def`, summing over h grouped by types."""
    sigma, rho = marked_to_cover(idx)
    k = x.k
    total = Cyclotomic(k)
    for t_xh, t_h, count in _type_pairs(x, cap):
        total = total + char_wreath(rho, t_xh, k) * char_wreath(sigma, t_h, k).conjugate() * count
    return total * Fraction(degree(sigma), group_order(x.n - 1, k))


# -- Murnaghan-Nakayama rule for k = 2 ---------------------------------------------

def _mn_coefficient(mu: KPartite, lam: KPartite, nu: KPartite, marked_component: int) -> Fraction:
    i = next(t for t in range(2) if mu[t] != lam[t])
    if any(nu[t] != lam[t] for t in range(2) if t != i):
        return Fraction(0)
    # contents are compared inside one constituent, without the (-1)^i factor:
    # the signed version flips the sign of two-piece strips in constituent 1
    strip = broken_strip_analysis(SkewShape(lam[i], nu[i]))
    if strip is None:
        return Fraction(0)
    (added,) = SkewShape(lam[i], mu[i]).cells()
    corner = Box(added[0], added[1])
    c0 = content(corner)
    num = 1
    for s in strip.sharp_corners:
        num *= c0 - content(s)
    den = 1
    for d in strip.dull_boxes:
        if d != corner:
            den *= c0 - content(d)
    if den == 0:
        raise ArithmeticError(f"zero denominator in MN coefficient for {lam}/{nu}")
    sign = -1 if (strip.height + i * marked_component) % 2 else 1
    return Fraction(sign * num, den)


def gen_char_mn(idx: Marked, cls: Marked) -> Fraction:
    """chi^{mu->lam} on the K-class ``cls`` (bipartite only)."""
    if idx.k != 2 or cls.k != 2:
        raise ValueError("the generalized Murnaghan-Nakayama rule needs k = 2")
    if idx.size != cls.size:
        raise ValueError("index and class have different sizes")
    mu, lam = marked_to_cover(idx)
    j, pj = cls.part, cls.component
    rest = tuple(remove_part(p, j) if t == pj else p for t, p in enumerate(cls.base))
    i = idx.component
    total = Fraction(0)
    for nu_i in subpartitions(mu[i], sum(mu[i]) - (j - 1)):
        nu = mu[:i] + (nu_i,) + mu[i + 1 :]
        c = _mn_coefficient(mu, lam, nu, pj)
        if c:
            total += c * char_bipartite(nu, rest)
    return total


def gen_char_corollary(idx: Marked, n: int) -> Fraction:
    """Closed form of chi^{mu->lam} on the class (-, (n-1)) -> (-, (n)), n >= 2."""
    if idx.k != 2:
        raise ValueError("closed form is for k = 2")
    if n < 2 or idx.size != n:
        raise ValueError("closed form needs n >= 2 and |lam| = n")
    mu, lam = marked_to_cover(idx)
    i = idx.component
    if lam[1 - i]:
        return Fraction(0)
    p = lam[i]
    if not p or any(x != 1 for x in p[1:]):
        return Fraction(0)
    a, b = p[0] - 1, len(p) - 1
    flip = -1 if i == 1 else 1
    sign = (-1) ** b * flip
    if idx.part == p[0] and a >= 1:  # cell added to the arm
        return Fraction(sign * a, a + b)
    if idx.part == 1 and b >= 1:  # cell added to the leg
        return Fraction(sign * b, a + b)
    return Fraction(0)


# -- tables --------------------------------------------------------------------------

def gen_char_indices(n: int, k: int) -> tuple[Marked, ...]:
    return marked_kpartite_partitions(n, k)


def gen_char_table(n: int, k: int, method: str = "definition", cap: int = DEFAULT_CAP) -> CharacterTable:
    if n < 1:
        raise ValueError("generalized characters need n >= 1")
    rows = list(gen_char_indices(n, k))
    cols = list(marked_kpartite_partitions(n, k))
    orders = [k_class_size(c) for c in cols]
    if method in ("definition", "def"):
        if group_order(n - 1, k) > cap:
            raise CapExceeded(f"|K| = {group_order(n - 1, k)} exceeds cap {cap}")
        reps = [class_representative(c) for c in cols]
        values = [[gen_char_def_fast(r, x, cap) for x in reps] for r in rows]
    elif method == "mn":
        if k != 2:
            raise ValueError("method 'mn' needs k = 2")
        values = [[Cyclotomic(2, [gen_char_mn(r, c)]) for c in cols] for r in rows]
    else:
        raise ValueError(f"unknown method {method!r}")
    return CharacterTable(k, n, rows, cols, orders, values)


# -- class functions -------------------------------------------------------------------

@dataclass(frozen=True)
class ClassFunction:
    """A function on G constant on K-classes, given by its value per marked type."""

    k: int
    n: int
    values: dict

    def __post_init__(self):
        missing = set(marked_kpartite_partitions(self.n, self.k)) - set(self.values)
        if missing:
            raise ValueError(f"class function undefined on {len(missing)} classes")

    def __call__(self, x: WreathElement) -> Cyclotomic:
        return self.values[marked_type_of(x)]


def gen_char_function(idx: Marked, method: str = "definition", cap: int = DEFAULT_CAP) -> ClassFunction:
    n, k = idx.size, idx.k
    out = {}
    for c in marked_kpartite_partitions(n, k):
        if method == "mn":
            out[c] = Cyclotomic(2, [gen_char_mn(idx, c)])
        else:
            out[c] = gen_char_def_fast(idx, class_representative(c), cap)
    return ClassFunction(k, n, out)


def table_class_functions(table: CharacterTable) -> list[ClassFunction]:
    return [
        ClassFunction(table.k, table.n, dict(zip(table.col_labels, row))) for row in table.values
    ]


def inner_product(f: ClassFunction, g: ClassFunction) -> Cyclotomic:
    if (f.k, f.n) != (g.k, g.n):
        raise ValueError("class functions on different groups")
    total = Cyclotomic(f.k)
    for c in marked_kpartite_partitions(f.n, f.k):
        total = total + f.values[c] * g.values[c].conjugate() * k_class_size(c)
    return total * Fraction(1, group_order(f.n, f.k))


def expected_inner_product(a: Marked, b: Marked) -> Fraction:
    if a != b:
        return Fraction(0)
    mu, lam = marked_to_cover(a)
    return Fraction(degree(mu), degree(lam))


# -- induced representation ---------------------------------------------------------

def induced_character_value(x: WreathElement, y: WreathElement, cap: int = DEFAULT_CAP) -> int:
    """Fixed points of (x, y) on G = (G x K)/diag(K): #{a : x a = a y}."""
    n, k = x.n, x.k
    y = _restrict(y, n).embed(n)
    return sum(1 for a in enumerate_group(n, k, cap) if multiply(x, a) == multiply(a, y))


def induced_decomposition_value(x: WreathElement, y: WreathElement) -> Cyclotomic:
    """sum over sigma -> rho of chi^rho(x) conj(chi^sigma(y))."""
    n, k = x.n, x.k
    y = _restrict(y, n)
    tx, ty = type_of(x), type_of(y)
    total = Cyclotomic(k)
    for idx in gen_char_indices(n, k):
        sigma, rho = marked_to_cover(idx)
        total = total + char_wreath(rho, tx, k) * char_wreath(sigma, ty, k).conjugate()
    return total


# -- functional equation -------------------------------------------------------------

def zonal_functional_equation(
    idx: Marked, x: WreathElement, y: WreathElement, cap: int = DEFAULT_CAP
) -> tuple[Cyclotomic, Cyclotomic]:
    """Both sides of omega(x,1) omega(y,1) = 1/|K| sum_h omega((x,1)(h,h)(y,1)).

    (x,1)(h,h)(y,1) = (x h y, h), which is diag(K)-equivalent to (x h y h^-1, 1).
    """
    n, k = x.n, x.k
    lhs = gen_char_def_fast(idx, x, cap) * gen_char_def_fast(idx, y, cap)
    sigma, _ = marked_to_cover(idx)
    d = degree(sigma)
    lhs = lhs * Fraction(1, d * d)
    total = Cyclotomic(k)
    for h in enumerate_group(n - 1, k, cap):
        he = h.embed(n)
        arg = multiply(multiply(multiply(x, he), y), he.inverse())
        total = total + gen_char_def_fast(idx, arg, cap)
    rhs = total * Fraction(1, d * group_order(n - 1, k))
    return lhs, rhs


def sample_elements(n: int, k: int, count: int, seed: int = 0) -> list[WreathElement]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        out.append(WreathElement(k, tuple(rng.randrange(k) for _ in range(n)), tuple(perm)))
    return out
