"""Twisted automorphisms of a cyclic p'-group A and their action on functions on A.

An element (t, u) pairs the character psi(a) = zeta_m^(t*a) with the
automorphism a -> u*a. It sends the indicator function delta_a to
psi(u*a) * delta_(u*a). Fixed ranks are computed from the monomial structure of
this action and can be cross-checked by exact linear algebra over Q(zeta_e).
"""

from __future__ import annotations

import math

import numpy as np

from .cyclotomic import Cyclotomic, euler_phi
from .errors import PreconditionViolated


class CyclicData:
    def __init__(self, m, p=None, e=None):
        if m < 1:
            raise ValueError("order must be positive")
        if p is not None and math.gcd(m, p) != 1:
            raise PreconditionViolated(f"order {m} is not prime to {p}")
        e = m if e is None else e
        if e % m:
            raise ValueError("root-of-unity modulus must be a multiple of the order")
        self.m = m
        self.p = p
        self.e = e

    def elements(self):
        return range(self.m)

    def units(self):
        return [u for u in range(self.m) if math.gcd(u, self.m) == 1] if self.m > 1 else [0]

    def __repr__(self):
        return f"CyclicData(m={self.m}, e={self.e})"


def _unit_inverse(u, m):
    return pow(u, -1, m) if m > 1 else 0


class KStarAut:
    """The pair (psi_t, a -> u*a)."""

    __slots__ = ("t", "u", "m")

    def __init__(self, t, u, m):
        if m > 1 and math.gcd(u, m) != 1:
            raise ValueError(f"{u} is not a unit modulo {m}")
        self.m = m
        self.t = t % m
        self.u = u % m

    @classmethod
    def identity(cls, m):
        return cls(0, 1, m)

    def key(self):
        return (self.t, self.u)

    def __eq__(self, other):
        return isinstance(other, KStarAut) and self.key() == other.key() and self.m == other.m

    def __hash__(self):
        return hash((self.t, self.u, self.m))

    def __lt__(self, other):
        return self.key() < other.key()

    def __repr__(self):
        return f"KStarAut(t={self.t}, u={self.u}, m={self.m})"

    def is_twist(self):
        return self.u % self.m == 1 % self.m

    def inverse(self):
        m = self.m
        ui = _unit_inverse(self.u, m)
        return KStarAut(-self.t * self.u, ui, m)

    def __mul__(self, other):
        return compose(self, other)


def compose(sigma, tau):
    """sigma after tau."""
    if sigma.m != tau.m:
        raise ValueError("different cyclic groups")
    m = sigma.m
    return KStarAut(sigma.t + tau.t * _unit_inverse(sigma.u, m), sigma.u * tau.u, m)


def act_on_delta(A, sigma, a):
    """(scalar, image) with sigma(delta_a) = scalar * delta_image."""
    image = (sigma.u * a) % A.m
    scalar = Cyclotomic.root(A.e, sigma.t * image * (A.e // A.m))
    return scalar, image


def closure(A, gens):
    ident = KStarAut.identity(A.m)
    seen = {ident}
    frontier = [ident]
    gens = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def image_in_aut(elements):
    return frozenset(s.u for s in elements)


def _orbits(A, units, points):
    points = list(points)
    left = set(points)
    out = []
    for a in points:
        if a not in left:
            continue
        orb = sorted({(u * a) % A.m for u in units})
        left -= set(orb)
        out.append(orb)
    return out


def generator_orbits(A, C):
    """Orbits of the image of C on the generators of A."""
    return _orbits(A, sorted(image_in_aut(closure(A, C))), A.units())


def is_reduced(A, C):
    """True when C meets the twist subgroup trivially."""
    return not any(s.is_twist() and s.t for s in closure(A, C))


def fixed_rank(A, C, points=None):
    """Rank of the subspace fixed by the group generated by C (on span of delta_points)."""
    elems = closure(A, C)
    units = sorted(image_in_aut(elems))
    points = list(A.elements()) if points is None else list(points)
    rank = 0
    for orb in _orbits(A, units, points):
        a = orb[0]
        stab = [s for s in elems if (s.u * a) % A.m == a]
        if all((s.t * a) % A.m == 0 for s in stab):
            rank += 1
    return rank


def action_matrix(A, sigma):
    """Matrix (columns = images of delta_a) over Q(zeta_e)."""
    zero = Cyclotomic.zero(A.e)
    M = [[zero] * A.m for _ in range(A.m)]
    for a in A.elements():
        s, b = act_on_delta(A, sigma, a)
        M[b][a] = s
    return M


def cyclotomic_rank(rows, e):
    """Exact rank of a matrix with Cyclotomic entries."""
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][c].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def fixed_rank_linear(A, C, points=None):
    """Fixed rank by exact elimination on the stacked matrices (M_sigma - I)."""
    points = list(A.elements()) if points is None else sorted(points)
    pos = {a: i for i, a in enumerate(points)}
    rows = []
    one = Cyclotomic.one(A.e)
    for g in C:
        if any((g.u * a) % A.m not in pos for a in points):
            raise PreconditionViolated("points are not stable under C")
        M = action_matrix(A, g)
        for b in points:
            rows.append([M[b][a] - one if a == b else M[b][a] for a in points])
    if not rows:
        return len(points)
    return len(points) - cyclotomic_rank(rows, A.e)


def residual_basis(A):
    """Indicator functions of the generators of A, named by the generator."""
    return list(A.units())


def residual_decomposition(A):
    """Dimension of each residual component, keyed by subgroup order."""
    return {d: euler_phi(d) for d in range(1, A.m + 1) if A.m % d == 0}


def elements_of_order(A, d):
    return [a for a in A.elements() if A.m // math.gcd(a, A.m) == d]


def compare_fixed_ranks(A, C, C_prime):
    G1, G2 = closure(A, C), closure(A, C_prime)
    if len(G1) != len(G2):
        raise PreconditionViolated("the two subgroups have different orders")
    if image_in_aut(G1) != image_in_aut(G2):
        raise PreconditionViolated("the two subgroups have different images in Aut(A)")
    r1, r2 = fixed_rank(A, C), fixed_rank(A, C_prime)
    return {"rank_C": r1, "rank_C_prime": r2, "equal": r1 == r2, "order": len(G1)}


def orbit_ideal_fixed_dim(A, C, O):
    """Dimension of the C-fixed part of span{delta_a : a in O} for a free orbit O."""
    elems = closure(A, C)
    if any(s.is_twist() and s.t for s in elems):
        raise PreconditionViolated("C meets the twist subgroup nontrivially")
    units = sorted(image_in_aut(elems))
    O = sorted(set(O))
    gens = set(A.units())
    if not O or not set(O) <= gens:
        raise PreconditionViolated("O must consist of generators of A")
    if sorted({(u * O[0]) % A.m for u in units}) != O:
        raise PreconditionViolated("O is not an orbit of the image of C")
    a = O[0]
    zero = Cyclotomic.zero(A.e)
    chi = {b: zero for b in O}
    for s in elems:
        val, img = act_on_delta(A, s, a)
        chi[img] = chi[img] + val
    if any(v.is_zero() for v in chi.values()):
        raise ArithmeticError("orbit sum is not invertible on the orbit")
    for tau in C:
        for b in O:
            psi = Cyclotomic.root(A.e, tau.t * ((tau.u * b) % A.m) * (A.e // A.m))
            if chi[b] * psi != chi[(tau.u * b) % A.m]:
                raise ArithmeticError("twisted and untwisted actions are not conjugate")
    untwisted = [KStarAut(0, s.u, A.m) for s in C]
    dim = fixed_rank(A, untwisted, O)
    if dim != fixed_rank(A, C, O):
        raise ArithmeticError("orbit-ideal dimension disagrees with the direct count")
    return dim


# -- exhaustive sweep ------------------------------------------------------------

def all_elements(A):
    return [KStarAut(t, u, A.m) for u in A.units() for t in range(A.m)]


def all_subgroups(A):
    """Every subgroup of the twisted automorphism group, as sorted generator tuples and element sets."""
    elems = all_elements(A)
    idx = {s.key(): i for i, s in enumerate(elems)}
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            table[i, j] = idx[compose(x, y).key()]

    def close(gens):
        members = {idx[(0, 1 % A.m)]}
        frontier = list(members)
        while frontier:
            nxt = []
            block = table[np.array(frontier)][:, list(gens)].ravel().tolist()
            for y in block:
                if y not in members:
                    members.add(y)
                    nxt.append(y)
            frontier = nxt
        return frozenset(members)

    cyclic = {}
    for i in range(n):
        s = close([i])
        cyclic.setdefault(s, (i,))
    found = dict(cyclic)
    frontier = list(cyclic.items())
    cyc_items = sorted(cyclic.items(), key=lambda kv: (len(kv[0]), kv[1]))
    while frontier:
        nxt = []
        for H, gH in frontier:
            for Cc, gC in cyc_items:
                if Cc <= H:
                    continue
                gens = gH + gC
                J = close(gens)
                if J not in found:
                    found[J] = gens
                    nxt.append((J, gens))
        frontier = nxt
    out = []
    for members, gens in found.items():
        out.append(([elems[i] for i in gens], [elems[i] for i in sorted(members)]))
    out.sort(key=lambda t: (len(t[1]), [s.key() for s in t[1]]))
    return out


def fixed_rank_sweep(m, p=None):
    """Check the fixed-rank equality for all qualifying pairs of subgroups for one order."""
    A = CyclicData(m, p)
    subs = all_subgroups(A)
    groups = {}
    for gens, members in subs:
        key = (len(members), image_in_aut(members))
        groups.setdefault(key, []).append((gens, members))
    pairs = 0
    failures = []
    residual_ok = True
    units = A.units()
    for key, items in sorted(groups.items(), key=lambda kv: (kv[0][0], sorted(kv[0][1]))):
        ranks = [fixed_rank(A, gens) for gens, _ in items]
        pairs += len(items) * (len(items) - 1) // 2
        if len({fixed_rank(A, gens, units) for gens, _ in items}) > 1:
            residual_ok = False
        if len(set(ranks)) > 1:
            lo = ranks.index(min(ranks))
            hi = ranks.index(max(ranks))
            failures.append({"order": key[0], "image": sorted(key[1]), "ranks": ranks,
                             "witness": [[list(s.key()) for s in items[i][0]] for i in (hi, lo)],
                             "witness_ranks": [ranks[hi], ranks[lo]]})
    reduced = 0
    orbit_ok = True
    for gens, members in subs:
        if any(s.is_twist() and s.t for s in members):
            continue
        units = sorted(image_in_aut(members))
        for orb in _orbits(A, units, A.units()):
            reduced += 1
            if orbit_ideal_fixed_dim(A, gens, orb) != 1:
                orbit_ok = False
    return {"m": m, "subgroups": len(subs), "classes": len(groups), "pairs": pairs,
            "failures": failures, "all_equal": not failures,
            "residual_all_equal": residual_ok,
            "orbit_ideals_checked": reduced, "orbit_ideals_dim_one": orbit_ok}


def parse_spec_text(text, m):
    """Parse lines ``C t,u t,u ...`` and ``C' t,u ...`` into two generator lists."""
    from .errors import ParseError

    out = {}
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *pairs = line.split()
        if head not in ("C", "C'"):
            raise ParseError(f"expected 'C' or \"C'\", got {head!r}", None, n)
        gens = []
        for tok in pairs:
            try:
                t, u = (int(x) for x in tok.split(","))
                gens.append(KStarAut(t, u, m))
            except ValueError as exc:
                raise ParseError(f"bad generator {tok!r}: {exc}", None, n) from None
        out[head] = gens
    if set(out) != {"C", "C'"}:
        raise ParseError("spec must define both C and C'")
    return out["C"], out["C'"]

