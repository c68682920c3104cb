"""Prime fields and small extension fields GF(p^f)."""

from __future__ import annotations

import itertools

import numpy as np

from .errors import PlaceSelectionFailure
from .permgroup import is_prime


def prime_factors(n):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def smallest_prime_1_mod(e, lower):
    """Smallest prime q with q % e == 1 and q > lower."""
    q = (lower // e + 1) * e + 1
    while not is_prime(q):
        q += e
    return q


def primitive_root(q):
    facs = prime_factors(q - 1)
    for g in range(2 if q > 2 else 1, q):
        if all(pow(g, (q - 1) // r, q) != 1 for r in facs):
            return g
    return 1


def multiplicative_order(a, n):
    """Order of a modulo n (gcd(a, n) must be 1)."""
    if n == 1:
        return 1
    k, x = 1, a % n
    while x != 1:
        x = (x * a) % n
        k += 1
    return k


def charpoly_mod(mat, q):
    """Characteristic polynomial det(xI - M) mod q via Berkowitz; low degree first."""
    a = [[int(x) % q for x in row] for row in mat]
    n = len(a)
    if n == 0:
        return [1]
    # Berkowitz: build Toeplitz products column by column
    vect = [1, (-a[0][0]) % q]
    for r in range(1, n):
        R = a[r][:r]
        S = [a[i][r] for i in range(r)]
        A = [row[:r] for row in a[:r]]
        arr = [(-a[r][r]) % q]
        C = S[:]
        for _ in range(r):
            arr.append((-sum(R[i] * C[i] for i in range(r))) % q)
            C = [sum(A[i][j] * C[j] for j in range(r)) % q for i in range(r)]
        arr = [1] + arr
        new = [0] * (r + 2)
        for i in range(r + 2):
            s = 0
            for j in range(min(i, len(vect) - 1) + 1):
                if i - j < len(arr):
                    s += arr[i - j] * vect[j]
            new[i] = s % q
        vect = new
    return vect[::-1]


def roots_mod(poly, q):
    """All roots in GF(q) of a polynomial (low degree first), ascending."""
    xs = np.arange(q, dtype=np.int64)
    acc = np.zeros(q, dtype=np.int64)
    for c in reversed(poly):
        acc = (acc * xs + int(c)) % q
    return np.flatnonzero(acc == 0).tolist()


def nullspace_mod(mat, q):
    """Basis (rows) of the right kernel of ``mat`` over GF(q)."""
    m = [[int(x) % q for x in row] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], q - 2, q)
        m[r] = [(x * inv) % q for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % q for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-m[i][f]) % q
        basis.append(v)
    return basis


class ExtensionField:
    """GF(p^f) as GF(p)[x]/(g) with g monic irreducible; elements are int codes."""

    def __init__(self, p, f, max_size=10 ** 6):
        if p ** f > max_size:
            raise PlaceSelectionFailure(f"GF({p}^{f}) exceeds the search bound {max_size}")
        self.p = p
        self.f = f
        self.size = p ** f
        self.modulus = self._find_irreducible()
        self._mul = {}

    def _find_irreducible(self):
        p, f = self.p, self.f
        if f == 1:
            return (0, 1)
        for tail in itertools.product(range(p), repeat=f):
            g = tuple(tail) + (1,)
            if g[0] and self._is_irreducible(g):
                return g
        raise PlaceSelectionFailure("no irreducible polynomial found")  # pragma: no cover

    def _is_irreducible(self, g):
        p, f = self.p, self.f
        for d in range(1, f // 2 + 1):
            for tail in itertools.product(range(p), repeat=d):
                h = tuple(tail) + (1,)
                if not any(_polymod(g, h, p)):
                    return False
        return True

    def encode(self, coeffs):
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c % self.p
        return v

    def decode(self, v):
        out = []
        for _ in range(self.f):
            out.append(v % self.p)
            v //= self.p
        return out

    def add(self, a, b):
        return self.encode([x + y for x, y in zip(self.decode(a), self.decode(b))])

    def scale(self, a, c):
        return self.encode([x * c for x in self.decode(a)])

    def mul(self, a, b):
        key = (a, b) if a <= b else (b, a)
        r = self._mul.get(key)
        if r is None:
            x, y = self.decode(a), self.decode(b)
            prod = [0] * (2 * self.f - 1)
            for i, s in enumerate(x):
                if s:
                    for j, t in enumerate(y):
                        prod[i + j] += s * t
            r = self.encode(_polymod(prod, self.modulus, self.p))
            self._mul[key] = r
        return r

    def pow(self, a, k):
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def element_of_order(self, n):
        """Smallest-code element of exact multiplicative order n (n | size-1)."""
        if (self.size - 1) % n:
            raise PlaceSelectionFailure(f"{n} does not divide |GF({self.size})^*|")
        facs = prime_factors(n)
        for a in range(1, self.size):
            if self.pow(a, n) == 1 and all(self.pow(a, n // r) != 1 for r in facs):
                return a
        raise PlaceSelectionFailure(f"no element of order {n}")  # pragma: no cover


def _polymod(a, g, p):
    a = [x % p for x in a]
    dg = len(g) - 1
    inv = pow(g[-1], p - 2, p)
    for i in range(len(a) - 1, dg - 1, -1):
        c = (a[i] * inv) % p
        if c:
            for j in range(dg + 1):
                a[i - dg + j] = (a[i - dg + j] - c * g[j]) % p
    out = a[:dg] + [0] * max(0, dg - len(a))
    return out
