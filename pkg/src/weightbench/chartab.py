"""Exact ordinary character tables, defect-zero counts and p-blocks.

Central characters are found as common eigenvectors of the class matrices over
a prime field GF(q) with q = 1 mod exp(G). Degrees and values are recovered
modulo q and lifted to cyclotomic integers by decomposing each value into
root-of-unity multiplicities along the power map.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .cyclotomic import Cyclotomic
from .errors import NotAnAutomorphism
from .finitefield import (ExtensionField, charpoly_mod, multiplicative_order,
                          prime_factors,
                          nullspace_mod, primitive_root, roots_mod,
                          smallest_prime_1_mod)
from .permgroup import Automorphism, GroupHom, check_prime, valuation

_TABLES = {}


def _rref(rows, q):
    """Row-reduced basis and pivot columns of the span of ``rows`` mod q."""
    m = [list(map(int, r)) for r in rows]
    if not m:
        return [], []
    cols = len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] % q), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], q - 2, q)
        m[r] = [(x * inv) % q for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % q:
                f = m[i][c]
                m[i] = [(x - f * y) % q for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


class CharacterTable:
    """Ordinary character table of a closed permutation group."""

    def __init__(self, group):
        self.group = group
        self.order = group.order
        self.classes = group.conjugacy_classes()
        self.class_sizes = [c.size for c in self.classes]
        self.class_orders = [c.order for c in self.classes]
        self.class_of = group.class_of()
        self.exponent = group.exponent()
        r = len(self.classes)
        self.inverse_class = [int(self.class_of[group.inverse_index[c.rep]])
                              for c in self.classes]
        self.q = smallest_prime_1_mod(self.exponent, max(2 * math.isqrt(self.order) + 2, r))
        self._zeta_q = pow(primitive_root(self.q), (self.q - 1) // self.exponent, self.q)
        self._power_cache = {}
        omegas = self._central_characters()
        rows = []
        for w in omegas:
            d = self._degree(w)
            vals = [(w[i] * d * pow(self.class_sizes[i], self.q - 2, self.q)) % self.q
                    for i in range(r)]
            rows.append((d, vals))
        self._mod_rows = rows
        self._values = None
        self._order_rows()

    # -- construction -----------------------------------------------------------
    def _class_constants(self):
        G = self.group
        r = len(self.classes)
        cls = self.class_of
        inv = G.inverse_index
        a = np.zeros((r, r, r), dtype=np.int64)
        for k, c in enumerate(self.classes):
            y = G.rmul(c.rep)[inv]
            a[:, :, k] = np.bincount(cls * r + cls[y], minlength=r * r).reshape(r, r)
        return a

    def _central_characters(self):
        q = self.q
        r = len(self.classes)
        a = self._class_constants() % q
        spaces = [(np.eye(r, dtype=np.int64), list(range(r)))]
        done = []
        while spaces:
            B, piv = spaces.pop()
            if len(B) == 1:
                done.append(B[0])
                continue
            split = None
            for i in range(1, r):
                R = ((a[i] @ B.T) % q)[piv, :]
                if np.array_equal(R, np.diag(np.full(len(B), R[0, 0]))):
                    continue
                roots = roots_mod(charpoly_mod(R.tolist(), q), q)
                pieces = []
                for lam in roots:
                    shifted = (R - lam * np.eye(len(B), dtype=np.int64)) % q
                    ker = nullspace_mod(shifted.tolist(), q)
                    vecs = (np.array(ker, dtype=np.int64) @ B) % q
                    basis, pv = _rref(vecs.tolist(), q)
                    pieces.append((np.array(basis, dtype=np.int64), pv))
                if sum(len(p[0]) for p in pieces) != len(B):
                    raise ArithmeticError("class matrix not diagonalisable mod q")
                split = pieces
                break
            if split is None:
                raise ArithmeticError("common eigenspace failed to split")
            spaces.extend(split)
        out = []
        for v in done:
            v0 = int(v[0])
            inv = pow(v0, q - 2, q)
            out.append([(int(x) * inv) % q for x in v])
        return out

    def _degree(self, w):
        q = self.q
        s = 0
        for i, size in enumerate(self.class_sizes):
            s += w[i] * w[self.inverse_class[i]] * pow(size, q - 2, q)
        d2 = (self.order * pow(s % q, q - 2, q)) % q
        for d in range(1, math.isqrt(self.order) + 1):
            if (d * d) % q == d2:
                return d
        raise ArithmeticError("degree lift failed")

    def _order_rows(self):
        self._mod_rows.sort(key=lambda dv: dv[0])
        vals = [self._lift_row(vals, d) for d, vals in self._mod_rows]
        keyed = []
        for (d, mod), row in zip(self._mod_rows, vals):
            trivial = all(v == 1 for v in row)
            flat = tuple(c for v in row for c in v.coeffs)
            keyed.append(((d, 0 if trivial else 1), flat, d, mod, row))
        keyed.sort(key=lambda t: (t[0], tuple(-x for x in t[1])))
        self.degrees = [t[2] for t in keyed]
        self._mod_rows = [(t[2], t[3]) for t in keyed]
        self._values = [t[4] for t in keyed]

    def power_class(self, i, j):
        key = (i, j)
        if key not in self._power_cache:
            g = self.group.power(self.classes[i].rep, j)
            self._power_cache[key] = int(self.class_of[g])
        return self._power_cache[key]

    def _lift_row(self, mod_vals, d):
        q, e = self.q, self.exponent
        out = []
        for i, cl in enumerate(self.classes):
            o = cl.order
            step = e // o
            chi = [mod_vals[self.power_class(i, j)] for j in range(o)]
            inv_o = pow(o, q - 2, q)
            mult = {}
            total = 0
            for l in range(o):
                s = 0
                for j in range(o):
                    s += chi[j] * pow(self._zeta_q, (-step * l * j) % e, q)
                m = (s * inv_o) % q
                if m > d:
                    raise ArithmeticError("multiplicity lift out of range")
                if m:
                    mult[l * step] = m
                total += m
            if total != d:
                raise ArithmeticError("multiplicities do not sum to the degree")
            out.append(Cyclotomic.from_root_multiplicities(e, mult))
        return out

    # -- accessors -----------------------------------------------------------
    @property
    def irreducibles(self):
        return self._values

    def __len__(self):
        return len(self._values)

    def power_map(self, p):
        return [self.power_class(i, p) for i in range(len(self.classes))]

    def inner_product(self, chi, psi):
        total = Cyclotomic.zero(self.exponent)
        for size, a, b in zip(self.class_sizes, chi, psi):
            total = total + (a * b.conjugate()) * size
        return total / self.order

    def check_orthogonality(self):
        """Exact row and column orthogonality plus the degree-sum identity."""
        X = self._values
        k = len(X)
        if sum(d * d for d in self.degrees) != self.order:
            return False
        for i in range(k):
            for j in range(i, k):
                ip = self.inner_product(X[i], X[j])
                if ip != (1 if i == j else 0):
                    return False
        for a in range(k):
            for b in range(a, k):
                s = Cyclotomic.zero(self.exponent)
                for i in range(k):
                    s = s + X[i][a] * X[i][b].conjugate()
                expect = self.order // self.class_sizes[a] if a == b else 0
                if s != expect:
                    return False
        return True

    def to_json(self):
        primes = prime_factors(self.order)
        els = self.group.elements
        return {
            "order": self.order,
            "classes": [{"representative": str(els[c.rep]), "size": c.size,
                         "element_order": c.order} for c in self.classes],
            "power_map": {str(p): self.power_map(p) for p in primes},
            "characters": [[v.to_json() for v in row] for row in self._values],
        }


def character_table(group):
    key = group.key
    tab = _TABLES.get(key)
    if tab is None:
        tab = CharacterTable(group)
        _TABLES.setdefault(key, tab)
    return tab


def p_regular_classes(group, p):
    p = check_prime(p)
    return [c.index for c in group.conjugacy_classes() if c.order % p]


def defect_zero_count(group, p):
    p = check_prime(p)
    v = valuation(group.order, p)
    return sum(1 for d in character_table(group).degrees if valuation(d, p) == v)


def defect_zero_characters(group, p):
    p = check_prime(p)
    v = valuation(group.order, p)
    return [i for i, d in enumerate(character_table(group).degrees) if valuation(d, p) == v]


class BlockDistribution:
    def __init__(self, prime, blocks, defects, principal):
        self.prime = prime
        self.blocks = blocks
        self.defects = defects
        self.principal = principal

    def defect_zero_blocks(self):
        return [b for b, d in zip(self.blocks, self.defects) if d == 0]

    def block_of(self, chi):
        for i, b in enumerate(self.blocks):
            if chi in b:
                return i
        raise KeyError(chi)

    def to_json(self):
        return {"prime": self.prime, "principal": self.principal,
                "blocks": [{"characters": list(b), "defect": d}
                           for b, d in zip(self.blocks, self.defects)]}

    def __repr__(self):
        return f"BlockDistribution(blocks={self.blocks}, defects={self.defects})"


def central_character_reductions(group, p):
    """Per character, the reduction of its central character at a prime over p."""
    p = check_prime(p)
    tab = character_table(group)
    e = tab.exponent
    e_prime = e
    while e_prime % p == 0:
        e_prime //= p
    f = multiplicative_order(p, e_prime)
    field = ExtensionField(p, f)
    theta = field.element_of_order(e_prime)
    powers = [field.pow(theta, k) for k in range(max(len(Cyclotomic.one(e).coeffs), 1))]
    out = []
    for d, row in zip(tab.degrees, tab.irreducibles):
        red = []
        for size, val in zip(tab.class_sizes, row):
            omega = val * Fraction(size, d)
            if not omega.is_integral():
                raise ArithmeticError("central character value is not integral")
            acc = 0
            for k, c in enumerate(omega.coeffs):
                if c % p:
                    acc = field.add(acc, field.scale(powers[k], c % p))
            red.append(acc)
        out.append(tuple(red))
    return out


def block_distribution(group, p):
    p = check_prime(p)
    key = ("blocks", p)
    cache = group.cache
    if key in cache:
        return cache[key]
    tab = character_table(group)
    reds = central_character_reductions(group, p)
    groups = {}
    for i, r in enumerate(reds):
        groups.setdefault(r, []).append(i)
    blocks = sorted((tuple(b) for b in groups.values()), key=lambda b: b[0])
    v = valuation(group.order, p)
    defects = [v - min(valuation(tab.degrees[i], p) for i in b) for b in blocks]
    principal = next(i for i, b in enumerate(blocks) if 0 in b)
    dist = BlockDistribution(p, blocks, defects, principal)
    cache[key] = dist
    return dist


def class_action(group, alpha):
    """Permutation of class indices induced by an automorphism."""
    if isinstance(alpha, GroupHom):
        if alpha.source.key != group.key or not alpha.is_automorphism():
            raise NotAnAutomorphism("map is not an automorphism of this group")
        alpha = Automorphism.from_hom(alpha)
    if not isinstance(alpha, Automorphism):
        raise NotAnAutomorphism("expected an automorphism")
    return alpha.class_permutation()


def fixed_class_count(group, alpha, p=None):
    perm = class_action(group, alpha)
    classes = group.conjugacy_classes()
    keep = range(len(classes)) if p is None else p_regular_classes(group, p)
    return sum(1 for i in keep if perm[i] == i)


def fixed_characters(group, alpha, subset=None):
    """Indices of characters chi with chi(alpha(g)) = chi(g) for all g."""
    perm = class_action(group, alpha)
    tab = character_table(group)
    rows = range(len(tab)) if subset is None else subset
    return [i for i in rows
            if all(tab.irreducibles[i][perm[c]] == tab.irreducibles[i][c]
                   for c in range(len(perm)))]


def fixed_character_count(group, alpha):
    n_chars = len(fixed_characters(group, alpha))
    n_classes = fixed_class_count(group, alpha)
    if n_chars != n_classes:
        raise ArithmeticError("fixed characters and fixed classes disagree")
    return n_chars
