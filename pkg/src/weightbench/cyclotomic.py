"""Exact arithmetic in the cyclotomic field Q(zeta_e).

An element is a coefficient vector of length phi(e) over the power basis
``1, zeta, ..., zeta^(phi(e)-1)``, reduced modulo the e-th cyclotomic
polynomial. Coefficients are Python ints, or Fractions when division occurs.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def _poly_divexact(num, den):
    """Exact quotient of integer polynomials (coefficient lists, low degree first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q, r = divmod(c, lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[i] = q
        if q:
            for j, d in enumerate(den):
                num[i + j] -= q * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e):
    """Coefficients of Phi_e, lowest degree first."""
    poly = [-1] + [0] * (e - 1) + [1]
    for d in range(1, e):
        if e % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def euler_phi(n):
    result = n
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            while m % f == 0:
                m //= f
            result -= result // f
        f += 1
    if m > 1:
        result -= result // m
    return result


def _reduce(coeffs, e):
    """Reduce a coefficient list modulo Phi_e (monic)."""
    phi = cyclotomic_polynomial(e)
    n = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, n - 1, -1):
        lead = c[i]
        if lead:
            for j in range(n):
                c[i - n + j] -= lead * phi[j]
            c[i] = 0
    c = c[:n] + [0] * max(0, n - len(c))
    return tuple(_norm(x) for x in c)


@lru_cache(maxsize=None)
def _root_table(e):
    """Reduced power-basis vectors of zeta^k for k in range(e)."""
    n = euler_phi(e)
    out = []
    for k in range(e):
        v = [0] * max(k + 1, n)
        v[k] = 1
        out.append(_reduce(v, e))
    return tuple(out)


class Cyclotomic:
    __slots__ = ("e", "coeffs")

    def __init__(self, e, coeffs):
        self.e = int(e)
        n = euler_phi(self.e)
        coeffs = tuple(coeffs)
        if len(coeffs) != n:
            coeffs = _reduce(coeffs, self.e)
        self.coeffs = tuple(_norm(c) for c in coeffs)

    # -- constructors --------------------------------------------------------
    @classmethod
    def rational(cls, e, value):
        n = euler_phi(e)
        return cls(e, (value,) + (0,) * (n - 1))

    @classmethod
    def zero(cls, e):
        return cls.rational(e, 0)

    @classmethod
    def one(cls, e):
        return cls.rational(e, 1)

    @classmethod
    def root(cls, e, k):
        """zeta_e ** k."""
        return cls(e, _root_table(e)[k % e])

    @classmethod
    def from_root_multiplicities(cls, e, mult):
        """Sum over k of mult[k] * zeta_e^k (mult indexed by exponent mod e)."""
        n = euler_phi(e)
        acc = [0] * n
        table = _root_table(e)
        for k, m in mult.items() if isinstance(mult, dict) else enumerate(mult):
            if m:
                for j, c in enumerate(table[k % e]):
                    if c:
                        acc[j] += m * c
        return cls(e, acc)

    # -- arithmetic ------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.e != self.e:
                raise ValueError("conductor mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.e, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.e, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.e, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.e, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(self.e, _reduce(prod, self.e))

    __rmul__ = __mul__

    def galois(self, k):
        """Image under zeta -> zeta^k (k a unit mod e)."""
        if math.gcd(k, self.e) != 1:
            raise ValueError("Galois exponent must be a unit")
        n = len(self.coeffs)
        acc = [0] * n
        table = _root_table(self.e)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, t in enumerate(table[(i * k) % self.e]):
                    if t:
                        acc[j] += c * t
        return Cyclotomic(self.e, acc)

    def conjugate(self):
        return self.galois(self.e - 1) if self.e > 1 else self

    def norm(self):
        """Field norm down to Q, as a Fraction."""
        prod = Cyclotomic.one(self.e)
        for k in range(1, self.e + 1):
            if math.gcd(k, self.e) == 1:
                prod = prod * self.galois(k)
        if not prod.is_rational():
            raise ArithmeticError("norm is not rational")
        return Fraction(prod.coeffs[0])

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        prod = Cyclotomic.one(self.e)
        for k in range(2, self.e + 1):
            if math.gcd(k, self.e) == 1 and k % self.e != 1:
                prod = prod * self.galois(k)
        return prod / Fraction((prod * self).coeffs[0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.e, tuple(_norm(Fraction(a) / other) for a in self.coeffs))
        return self * self._coerce(other).inverse()

    # -- predicates / conversion ---------------------------------------------
    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coeffs)

    def to_complex(self):
        z = cmath.exp(2j * cmath.pi / self.e)
        return sum(complex(c) * z ** i for i, c in enumerate(self.coeffs))

    def to_rational(self):
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return isinstance(other, Cyclotomic) and self.e == other.e and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.e, self.coeffs))

    def __repr__(self):
        return f"Cyclotomic({self.e}, {list(self.coeffs)})"

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "1" if i == 0 else ("z" if i == 1 else f"z^{i}")
                terms.append(f"{c}*{mono}" if mono != "1" else str(c))
        return " + ".join(terms) + f" (z=E({self.e}))"

    def to_json(self):
        return {"conductor": self.e, "coefficients": [str(c) if isinstance(c, Fraction) else c
                                                      for c in self.coeffs]}
