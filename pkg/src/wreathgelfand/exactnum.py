"""Exact rational and cyclotomic arithmetic.

Rationals are :class:`fractions.Fraction` (always kept in lowest terms with a
positive denominator). A :class:`Cyclotomic` is an element of Q(zeta_k) stored
as its coefficient vector in the power basis 1, z, ..., z^(phi(k)-1), reduced
modulo the k-th cyclotomic polynomial, so equality is coefficient equality.
"""
from __future__ import annotations

import cmath
import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Fraction
Scalar = Union[int, Fraction, "Cyclotomic"]

__all__ = [
    "Rational",
    "Cyclotomic",
    "rat_arith",
    "cyc_make",
    "cyc_conjugate",
    "cyclotomic_polynomial",
    "render_rational",
    "parse_rational",
    "render",
    "parse",
]


def rat_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """Apply ``op`` (one of ``+ - * /``) exactly. Division by zero raises."""
    a, b = Fraction(a), Fraction(b)
    if op == "+":
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        if b == 0:
            raise ZeroDivisionError("rational division by zero")
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def _poly_divmod_monic(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # integer polynomials, lowest degree first; den is monic
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, d in enumerate(den):
                num[i - dd + j] -= c * d
    return quot, num[:dd] or [0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_k, lowest degree first."""
    if k < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (k - 1) + [1]  # x^k - 1
    for d in range(1, k):
        if k % d == 0:
            poly, rem = _poly_divmod_monic(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_basis(k: int, e: int) -> tuple[int, ...]:
    """z^e reduced mod Phi_k as an integer coefficient vector."""
    phi = cyclotomic_polynomial(k)
    deg = len(phi) - 1
    e %= k
    if e < deg:
        return tuple(1 if i == e else 0 for i in range(deg))
    prev = _power_basis(k, e - 1)
    # multiply by z, then replace z^deg by -(phi[0] + ... + phi[deg-1] z^(deg-1))
    top = prev[-1]
    shifted = [0] + list(prev[:-1])
    return tuple(shifted[i] - top * phi[i] for i in range(deg))


class Cyclotomic:
    """Immutable element of the k-th cyclotomic field."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs=None):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        deg = len(cyclotomic_polynomial(order)) - 1
        if coeffs is None:
            coeffs = (Fraction(0),) * deg
        else:
            coeffs = [Fraction(c) for c in coeffs]
            if len(coeffs) > deg:
                coeffs = self._reduce(order, coeffs)
            coeffs = tuple(coeffs) + (Fraction(0),) * (deg - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    @staticmethod
    def _reduce(order: int, coeffs) -> list[Fraction]:
        deg = len(cyclotomic_polynomial(order)) - 1
        out = [Fraction(0)] * deg
        for e, c in enumerate(coeffs):
            if c:
                for i, b in enumerate(_power_basis(order, e)):
                    if b:
                        out[i] += c * b
        return out

    @classmethod
    def from_rational(cls, order: int, value) -> Cyclotomic:
        return cls(order, [Fraction(value)])

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> Cyclotomic:
        return cls(order, _power_basis(order, power))

    # -- predicates -------------------------------------------------------

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> Cyclotomic | None:
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                if other.is_rational():
                    return Cyclotomic(self.order, [other.coeffs[0]])
                if self.is_rational():
                    return None
                raise ValueError(
                    f"cyclotomic order mismatch: {self.order} vs {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Cyclotomic):
                return other + self
            return NotImplemented
        return Cyclotomic(self.order, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Cyclotomic):
                return -(other - self)
            return NotImplemented
        return Cyclotomic(self.order, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Cyclotomic):
                return other * self
            return NotImplemented
        if o.is_rational():
            c = o.coeffs[0]
            return Cyclotomic(self.order, [a * c for a in self.coeffs])
        if self.is_rational():
            c = self.coeffs[0]
            return Cyclotomic(self.order, [c * b for b in o.coeffs])
        prod = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Cyclotomic(self.order, self._reduce(self.order, prod))

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        """Multiplicative inverse, via the product of all nontrivial Galois conjugates."""
        if not self:
            raise ZeroDivisionError("cyclotomic division by zero")
        if self.is_rational():
            return Cyclotomic(self.order, [1 / self.coeffs[0]])
        k = self.order
        others = Cyclotomic(k, [1])
        for a in range(2, k):
            if _gcd(a, k) == 1:
                others = others * self.galois(a)
        norm = (self * others).to_rational()
        return others * (1 / norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Cyclotomic):
                return Cyclotomic(other.order, [self.coeffs[0]]) / other
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = Cyclotomic(self.order, [1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- Galois action ----------------------------------------------------

    def galois(self, a: int) -> Cyclotomic:
        """Image under z -> z^a (a coprime to the order)."""
        k = self.order
        acc = [Fraction(0)] * len(self.coeffs)
        for e, c in enumerate(self.coeffs):
            if c:
                for i, b in enumerate(_power_basis(k, a * e)):
                    if b:
                        acc[i] += c * b
        return Cyclotomic(k, acc)

    def conjugate(self) -> Cyclotomic:
        return self.galois(self.order - 1) if self.order > 2 else self

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return self.coeffs == other.coeffs
            return self.is_rational() and other.is_rational() and self.coeffs[0] == other.coeffs[0]
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.coeffs[0]) if self.is_rational() else hash((self.order, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Cyclotomic({self.order}, {render(self)!r})"

    def __str__(self):
        return render(self)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def cyc_make(order: int, power: int) -> Cyclotomic:
    """zeta_order ** power, reduced."""
    if order < 1:
        raise ValueError("cyclotomic order must be positive")
    return Cyclotomic.zeta(order, power)


def cyc_conjugate(a: Cyclotomic) -> Cyclotomic:
    return a.conjugate()


# -- text form -------------------------------------------------------------

def render_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip().replace("−", "-"))


def render(value) -> str:
    """Canonical text: ``n``, ``p/q`` or ``c0 + c1*z + c2*z^2`` with zero terms dropped."""
    if not isinstance(value, Cyclotomic):
        return render_rational(value)
    terms = []
    for i, c in enumerate(value.coeffs):
        if not c:
            continue
        if i == 0:
            terms.append((c < 0, render_rational(abs(c))))
            continue
        mono = "z" if i == 1 else f"z^{i}"
        body = mono if abs(c) == 1 else f"{render_rational(abs(c))}*{mono}"
        terms.append((c < 0, body))
    if not terms:
        return "0"
    neg, body = terms[0]
    out = ("-" if neg else "") + body
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out


_TERM = re.compile(r"^(?:(?P<c>\d+(?:/\d+)?)(?:\*(?P<z1>z(?:\^\d+)?))?|(?P<z2>z(?:\^\d+)?))$")


def parse(text: str, order: int = 1) -> Cyclotomic:
    """Inverse of :func:`render` for a field of the given order."""
    s = text.strip().replace("−", "-").replace(" ", "")
    if not s:
        raise ValueError("empty value")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, Fraction] = {}
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        m = _TERM.match(body)
        if m is None:
            raise ValueError(f"cannot parse term {body!r} in {text!r}")
        c = Fraction(m.group("c")) if m.group("c") else Fraction(1)
        mono = m.group("z1") or m.group("z2")
        e = 0 if mono is None else (1 if mono == "z" else int(mono[2:]))
        coeffs[e] = coeffs.get(e, Fraction(0)) + (c if sign == "+" else -c)
    top = max(coeffs)
    return Cyclotomic(order, [coeffs.get(i, Fraction(0)) for i in range(top + 1)])
