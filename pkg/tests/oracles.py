"""Independent brute-force oracles used to freeze expected values.

Nothing here imports the package. Groups are held as Cayley tables over
permutation tuples; subgroups are frozensets of element indices; character
tables are computed numerically (Burnside's class-matrix eigenvectors).
"""

import math
import re
from itertools import combinations

import numpy as np


def parse_group_file(path):
    lines = [l.split("#", 1)[0].strip() for l in open(path, encoding="utf-8")]
    lines = [l for l in lines if l]
    degree = int(lines[0].split()[1])
    gens = []
    for line in lines[1:]:
        img = list(range(degree))
        for cyc in re.findall(r"\(([^()]*)\)", line):
            pts = [int(x) for x in cyc.replace(",", " ").split()]
            for a, b in zip(pts, pts[1:] + pts[:1]):
                img[a] = b
        gens.append(tuple(img))
    return degree, gens


def _p_part(n, p):
    r = 1
    while n % p == 0:
        n //= p
        r *= p
    return r


class TableGroup:
    """A finite group from its Cayley table; ``mul[a][b]`` is a then b."""

    def __init__(self, mul):
        self.mul = mul
        self.n = len(mul)
        self.e = next(i for i in range(self.n) if all(mul[i][j] == j for j in range(self.n)))
        self.inv = [next(j for j in range(self.n) if mul[i][j] == self.e) for i in range(self.n)]

    @classmethod
    def from_permutations(cls, degree, gens):
        ident = tuple(range(degree))
        elems = [ident]
        seen = {ident}
        i = 0
        while i < len(elems):
            x = elems[i]
            for g in gens:
                y = tuple(g[x[k]] for k in range(degree))
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
            i += 1
        elems.sort()
        pos = {x: k for k, x in enumerate(elems)}
        mul = [[pos[tuple(y[x[k]] for k in range(degree))] for y in elems] for x in elems]
        G = cls(mul)
        G.perms = elems
        return G

    @classmethod
    def from_file(cls, path):
        return cls.from_permutations(*parse_group_file(path))

    def conj(self, x, g):
        return self.mul[self.mul[self.inv[g]][x]][g]

    def element_order(self, x):
        k, y = 1, x
        while y != self.e:
            y = self.mul[y][x]
            k += 1
        return k

    def closure(self, gens):
        out = {self.e}
        frontier = [self.e]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul[x][g]
                    if y not in out:
                        out.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(out)

    def classes(self):
        left = set(range(self.n))
        out = []
        for x in range(self.n):
            if x in left:
                cl = frozenset(self.conj(x, g) for g in range(self.n))
                left -= cl
                out.append(cl)
        return out

    def normalizer(self, H, within=None):
        within = range(self.n) if within is None else within
        return frozenset(g for g in within if all(self.conj(h, g) in H for h in H))

    def centralizer(self, H, within=None):
        within = range(self.n) if within is None else within
        return frozenset(g for g in within if all(self.mul[h][g] == self.mul[g][h] for h in H))

    def conjugate_set(self, H, g):
        return frozenset(self.conj(h, g) for h in H)

    def p_subgroups(self, p, within=None):
        """All p-subgroups contained in ``within`` (default: the whole group)."""
        within = frozenset(range(self.n)) if within is None else within
        cyc = {self.closure([x]) for x in within if _p_part(self.element_order(x), p) == self.element_order(x)}
        found = set(cyc)
        frontier = list(cyc)
        while frontier:
            nxt = []
            for H in frontier:
                for C in cyc:
                    if C <= H:
                        continue
                    J = self.closure(list(H | C))
                    if J not in found and _p_part(len(J), p) == len(J):
                        found.add(J)
                        nxt.append(J)
            frontier = nxt
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def orbit_reps(self, subs, within=None):
        """One representative per ``within``-conjugacy class of the given subgroups."""
        within = range(self.n) if within is None else list(within)
        left = set(subs)
        reps = []
        for H in subs:
            if H in left:
                reps.append(H)
                left -= {self.conjugate_set(H, g) for g in within}
        return reps

    def p_core(self, p, within=None):
        """O_p of the subgroup ``within``: elements whose normal closure is a p-group."""
        within = frozenset(range(self.n)) if within is None else within
        core = set()
        for x in within:
            if x in core:
                continue
            nc = self.closure([self.conj(x, g) for g in within])
            if _p_part(len(nc), p) == len(nc):
                core |= nc
        return frozenset(core)

    def quotient(self, H, K):
        """Cayley table of H/K as a TableGroup (K normal in H)."""
        cosets = []
        where = {}
        for h in sorted(H):
            if h in where:
                continue
            c = frozenset(self.mul[k][h] for k in K)
            for x in c:
                where[x] = len(cosets)
            cosets.append(min(c))
        mul = [[where[self.mul[a][b]] for b in cosets] for a in cosets]
        return TableGroup(mul)

    def sub_table(self, H):
        H = sorted(H)
        pos = {h: i for i, h in enumerate(H)}
        return TableGroup([[pos[self.mul[a][b]] for b in H] for a in H])


# -- characters ------------------------------------------------------------------

def character_degrees(G, seed=1):
    """Irreducible degrees via eigenvectors of a random combination of class matrices."""
    cls = G.classes()
    r = len(cls)
    idx = {}
    for i, c in enumerate(cls):
        for x in c:
            idx[x] = i
    reps = [min(c) for c in cls]
    a = np.zeros((r, r, r))
    for i, Ki in enumerate(cls):
        for x in Ki:
            for k, z in enumerate(reps):
                y = G.mul[G.inv[x]][z]
                a[i, idx[y], k] += 1
    rng = np.random.default_rng(seed)
    M = np.einsum("j,ijk->ik", rng.standard_normal(r), a)
    _, vecs = np.linalg.eig(M)
    sizes = np.array([len(c) for c in cls], dtype=float)
    e_cls = idx[G.e]
    inv_cls = [idx[G.inv[rep]] for rep in reps]
    degs = []
    for v in vecs.T:
        w = v / v[e_cls]
        s = sum(w[i] * w[inv_cls[i]] / sizes[i] for i in range(r))
        degs.append(math.sqrt(G.n / s.real))
    degs = sorted(int(round(d)) for d in degs)
    if sum(d * d for d in degs) != G.n:
        raise ArithmeticError("numeric character degrees inconsistent")
    return degs


def defect_zero(G, p):
    full = _p_part(G.n, p)
    return sum(1 for d in character_degrees(G) if _p_part(d, p) == full)


def p_regular_class_count(G, p):
    return sum(1 for c in G.classes() if G.element_order(min(c)) % p)


# -- local structure -------------------------------------------------------------

def is_centric(G, p, Q, within=None):
    C = G.centralizer(Q, within)
    return _p_part(len(C), p) == len(C & Q)


def is_f_radical(G, p, Q, within=None):
    within = frozenset(range(G.n)) if within is None else frozenset(within)
    if not is_centric(G, p, Q, within):
        return False
    N = G.normalizer(Q, within)
    QC = G.closure(list(Q | G.centralizer(Q, within)))
    X = G.quotient(N, QC)
    return len(X.p_core(p)) == 1


def weights(G, p):
    """Sum of z(N(R)/R) over classes of radical p-subgroups R = O_p(N(R))."""
    total = 0
    for R in G.orbit_reps(G.p_subgroups(p)):
        N = G.normalizer(R)
        if G.p_core(p, N) == R:
            total += defect_zero(G.quotient(N, R), p)
    return total


def radical_weight(G, p, within=None):
    """Sum over within-classes of F-radical S of z(N(S)/S), computed inside ``within``."""
    within = frozenset(range(G.n)) if within is None else frozenset(within)
    total = 0
    for S in G.orbit_reps(G.p_subgroups(p, within), within):
        if is_f_radical(G, p, S, within):
            total += defect_zero(G.quotient(G.normalizer(S, within), S), p)
    return total


def chain_sum(G, p):
    """Alternating sum over all strict chains of centric p-subgroups, averaged over G."""
    subs = [Q for Q in G.p_subgroups(p) if is_centric(G, p, Q)]
    cache = {}
    total = 0

    def visit(chain):
        nonlocal total
        N = frozenset(range(G.n))
        for Q in chain:
            N = G.normalizer(Q, N)
        if N not in cache:
            cache[N] = radical_weight(G, p, N)
        total += (-1) ** (len(chain) - 1) * cache[N] * len(N)
        for R in subs:
            if len(R) > len(chain[-1]) and chain[-1] < R:
                visit(chain + [R])

    for Q in subs:
        visit([Q])
    if total % G.n:
        raise ArithmeticError("chain sum not divisible by the group order")
    return total // G.n


def unordered_pairs(items):
    return list(combinations(items, 2))
