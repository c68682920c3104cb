"""Explicit permutation groups.

Elements are permutations of ``{0, ..., degree-1}`` stored as image tuples.
Products compose left to right: ``(x * y)(i) = y(x(i))``, and conjugation is
``x ** g = g^-1 * x * g``. A closed group keeps its elements sorted
lexicographically by images, so the identity always has index 0, and most
computations run on element indices through vectorised lookups.
"""

from __future__ import annotations

import math
import re
from functools import reduce

import numpy as np

from .errors import (CapExceeded, InvalidPrime, NotAnAutomorphism,
                     NotASubgroup, NotNormal, ParseError)
from .kernels import RowIndex

DEFAULT_ELEMENT_CAP = 20000
_CACHE_BUDGET = 2 * 10 ** 7  # cached index entries per array family


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p):
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise InvalidPrime(f"{p!r} is not a prime")
    return int(p)


def p_part(n, p):
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def valuation(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class Permutation:
    """An immutable bijection of ``range(degree)``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images, check=True):
        images = tuple(int(i) for i in images)
        if check and sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree):
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, cycles, degree):
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < degree:
                    raise ValueError(f"point {a} outside 0..{degree - 1}")
                if a in seen:
                    raise ValueError(f"point {a} repeated in cycle notation")
                seen.add(a)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(img, check=False)

    @classmethod
    def parse(cls, text, degree):
        """Parse disjoint-cycle notation such as ``(0 1)(2 3)``; ``()`` is the identity."""
        return cls.from_cycles(parse_cycles(text), degree)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(map(other.images.__getitem__, self.images)),
                           check=False)

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv, check=False)

    def __pow__(self, k):
        if isinstance(k, Permutation):
            return k.inverse() * self * k
        result = Permutation.identity(self.degree)
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self):
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self):
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __str__(self):
        parts = ["(" + " ".join(map(str, c)) + ")"
                 for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "()"

    def __repr__(self):
        return f"Permutation({self})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text):
    """Return the list of cycles in a disjoint-cycle string."""
    text = text.strip()
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"unexpected text {text[pos:m.start()]!r}")
        body = m.group(1).replace(",", " ").split()
        try:
            cyc = [int(tok) for tok in body]
        except ValueError:
            raise ValueError(f"non-integer point in cycle ({m.group(1)})") from None
        if cyc:
            cycles.append(cyc)
        pos = m.end()
    if text[pos:].strip():
        raise ValueError(f"unexpected text {text[pos:]!r}")
    if not text:
        raise ValueError("empty cycle string")
    return cycles


class PermGroup:
    """A finite permutation group given by generators.

    The element list is computed once (``close``) and never mutated afterwards;
    derived data (inverses, classes, conjugation arrays) is cached lazily.
    """

    def __init__(self, generators=(), degree=None, cap=None):
        gens = [g if isinstance(g, Permutation) else Permutation(g)
                for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group without generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
        self.degree = int(degree)
        self.generators = tuple(gens)
        self.cap = DEFAULT_ELEMENT_CAP if cap is None else int(cap)
        self._elements = None
        self._img = None
        self._index = None
        self._inv = None
        self._inv_img = None
        self._classes = None
        self._orders = None
        self._conj_cache = {}
        self._rmul_cache = {}
        self._conjof_cache = {}
        self._key = None
        self._gen_idx = None
        self.cache = {}

    # -- closure ---------------------------------------------------------
    def close(self):
        """All elements in canonical (lexicographic) order."""
        if self._elements is not None:
            return self._elements
        ident = tuple(range(self.degree))
        seen = {ident}
        frontier = [ident]
        gens = [g.images for g in self.generators]
        while frontier:
            new = []
            for x in frontier:
                for s in gens:
                    y = tuple(map(s.__getitem__, x))
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
                        if len(seen) > self.cap:
                            raise CapExceeded(
                                f"group closure exceeds cap of {self.cap} elements")
            frontier = new
        ordered = sorted(seen)
        img = np.array(ordered, dtype=np.int32).reshape(len(ordered), self.degree)
        index = RowIndex(img)
        inv_img = np.empty_like(img)
        rows = np.arange(self.degree, dtype=np.int32)
        inv_img[np.arange(len(ordered))[:, None], img] = rows[None, :]
        self._img = img
        self._index = index
        self._inv_img = inv_img
        self._inv = index.find(inv_img)
        self._elements = [Permutation(t, check=False) for t in ordered]
        return self._elements

    @property
    def elements(self):
        return self.close()

    @property
    def order(self):
        return len(self.close())

    def __len__(self):
        return self.order

    @property
    def images(self):
        self.close()
        return self._img

    @property
    def inverse_index(self):
        self.close()
        return self._inv

    @property
    def key(self):
        """Hashable identity of the element set."""
        if self._key is None:
            self._key = (self.degree, self.images.tobytes())
        return self._key

    def find(self, rows):
        self.close()
        return self._index.find(rows)

    def index(self, perm):
        """Index of ``perm``; raises NotASubgroup if it is not an element."""
        images = perm.images if isinstance(perm, Permutation) else tuple(perm)
        if len(images) != self.degree:
            raise NotASubgroup("degree mismatch")
        i = int(self.find(np.array(images, dtype=np.int32))[0])
        if i < 0:
            raise NotASubgroup(f"{perm} is not an element of the group")
        return i

    def __contains__(self, perm):
        try:
            self.index(perm)
        except NotASubgroup:
            return False
        return True

    def generator_indices(self):
        if self._gen_idx is None:
            self._gen_idx = tuple(self.index(g) for g in self.generators)
        return self._gen_idx

    # -- index-level arithmetic -------------------------------------------
    def mul(self, a, b):
        img = self.images
        return int(self.find(img[b][img[a]])[0])

    def power(self, a, k):
        img = self.images
        row = np.arange(self.degree, dtype=np.int32)
        base = img[a] if k >= 0 else self._inv_img[a]
        k = abs(k)
        while k:
            if k & 1:
                row = base[row]
            base = base[base]
            k >>= 1
        return int(self.find(row)[0])

    def _publish(self, cache, key, arr):
        if len(cache) * self.order > _CACHE_BUDGET:
            cache.clear()
        cache[key] = arr

    def rmul(self, g):
        """Array x -> index(x * g)."""
        arr = self._rmul_cache.get(g)
        if arr is None:
            img = self.images
            arr = self.find(img[g][img])
            self._publish(self._rmul_cache, g, arr)
        return arr

    def lmul(self, g):
        """Array x -> index(g * x)."""
        img = self.images
        return self.find(img[:, img[g]])

    def conj_by(self, g):
        """Array x -> index(g^-1 x g)."""
        arr = self._conj_cache.get(g)
        if arr is None:
            img = self.images
            arr = self.find(img[g][img[:, self._inv_img[g]]])
            self._publish(self._conj_cache, g, arr)
        return arr

    def conj_of(self, h):
        """Array g -> index(g^-1 h g)."""
        arr = self._conjof_cache.get(h)
        if arr is None:
            img = self.images
            inner = img[h][self._inv_img]
            arr = self.find(np.take_along_axis(img, inner, axis=1))
            self._publish(self._conjof_cache, h, arr)
        return arr

    def commuting(self, h):
        """Boolean mask of elements commuting with h."""
        return self.rmul(h) == self.lmul(h)

    def element_orders(self):
        if self._orders is None:
            self._orders = np.array([e.order() for e in self.close()], dtype=np.int64)
        return self._orders

    def exponent(self):
        return int(reduce(math.lcm, (int(o) for o in set(self.element_orders())), 1))

    # -- subgroups -----------------------------------------------------------
    def subgroup(self, gens):
        """Subgroup generated by element indices or permutations."""
        idx = [g if isinstance(g, (int, np.integer)) else self.index(g) for g in gens]
        return SubgroupHandle(self, closure_indices(self, idx), gens=idx)

    def subgroup_from_elements(self, elements):
        return SubgroupHandle(self, frozenset(int(e) for e in elements))

    def whole(self):
        return SubgroupHandle(self, frozenset(range(self.order)),
                              gens=self.generator_indices())

    def trivial(self):
        return SubgroupHandle(self, frozenset([0]), gens=())

    def _own(self, sub):
        if not isinstance(sub, SubgroupHandle) or sub.parent is not self:
            if isinstance(sub, SubgroupHandle):
                return self.subgroup(sub.generators)
            raise NotASubgroup("expected a SubgroupHandle")
        return sub

    def normalizer(self, sub):
        sub = self._own(sub)
        mask = np.ones(self.order, dtype=bool)
        smask = sub.mask
        for h in sub.gens:
            mask &= smask[self.conj_of(h)]
        return SubgroupHandle(self, frozenset(np.flatnonzero(mask).tolist()))

    def centralizer(self, sub):
        sub = self._own(sub)
        mask = np.ones(self.order, dtype=bool)
        for h in sub.gens:
            mask &= self.commuting(h)
        return SubgroupHandle(self, frozenset(np.flatnonzero(mask).tolist()))

    def center(self):
        return self.centralizer(self.whole())

    def transporter_mask(self, src, dst):
        """Mask of g with src^g contained in dst."""
        mask = np.ones(self.order, dtype=bool)
        dmask = dst.mask
        for h in src.gens:
            mask &= dmask[self.conj_of(h)]
        return mask

    def conjugator(self, sub1, sub2):
        """Smallest element index g with sub1^g == sub2, or None."""
        sub1, sub2 = self._own(sub1), self._own(sub2)
        if sub1.order != sub2.order:
            return None
        hits = np.flatnonzero(self.transporter_mask(sub1, sub2))
        return int(hits[0]) if len(hits) else None

    def are_conjugate(self, sub1, sub2):
        g = self.conjugator(sub1, sub2)
        return None if g is None else self.elements[g]

    def conjugate_subgroup(self, sub, g):
        arr = self.conj_by(g)
        return SubgroupHandle(self, frozenset(arr[list(sub.sorted_elements)].tolist()),
                              gens=tuple(int(arr[h]) for h in sub.gens))

    def is_normal(self, sub):
        sub = self._own(sub)
        smask = sub.mask
        for s in self.generator_indices():
            if not smask[self.conj_by(s)[list(sub.gens)]].all():
                return False
        return True

    # -- conjugacy classes -----------------------------------------------------
    def conjugacy_classes(self):
        """List of ``ConjugacyClass`` sorted by element order, size, minimal element."""
        if self._classes is None:
            n = self.order
            label = np.full(n, -1, dtype=np.int64)
            arrays = [self.conj_by(s) for s in self.generator_indices()]
            raw = []
            for start in range(n):
                if label[start] >= 0:
                    continue
                cid = len(raw)
                label[start] = cid
                members = [start]
                frontier = [start]
                while frontier:
                    nxt = []
                    for arr in arrays:
                        ys = arr[frontier]
                        for y in ys[label[ys] < 0].tolist():
                            if label[y] < 0:
                                label[y] = cid
                                members.append(y)
                                nxt.append(y)
                    frontier = nxt
                raw.append(members)
            orders = self.element_orders()
            keyed = sorted(raw, key=lambda m: (int(orders[m[0]]), len(m), min(m)))
            classes = []
            class_of = np.empty(n, dtype=np.int64)
            for i, members in enumerate(keyed):
                rep = min(members)
                classes.append(ConjugacyClass(i, rep, len(members), int(orders[rep]),
                                              tuple(sorted(members))))
                class_of[members] = i
            self._classes = (classes, class_of)
        return self._classes[0]

    def class_of(self):
        self.conjugacy_classes()
        return self._classes[1]

    # -- p-local subgroups -----------------------------------------------------
    def sylow_subgroup(self, p):
        p = check_prime(p)
        key = ("sylow", p)
        if key in self.cache:
            return self.cache[key]
        target = p_part(self.order, p)
        S = self.trivial()
        while S.order < target:
            N = self.normalizer(S)
            smask = S.mask
            found = None
            for x in N.sorted_elements:
                if smask[x]:
                    continue
                if smask[self.power(x, p)]:
                    found = x
                    break
            if found is None:  # pragma: no cover - Sylow theory forbids this
                raise RuntimeError("failed to extend p-subgroup")
            S = self.subgroup(list(S.gens) + [found])
        self.cache[key] = S
        return S

    def p_core(self, p):
        """Largest normal p-subgroup."""
        p = check_prime(p)
        key = ("p_core", p)
        if key in self.cache:
            return self.cache[key]
        core = set(self.sylow_subgroup(p).elements)
        arrays = [self.conj_by(s) for s in self.generator_indices()]
        changed = True
        while changed:
            changed = False
            for arr in arrays:
                img = set(arr[sorted(core)].tolist())
                new = core & img
                if len(new) != len(core):
                    core = new
                    changed = True
        result = SubgroupHandle(self, frozenset(core))
        self.cache[key] = result
        return result

    def quotient_group(self, normal_sub):
        """Quotient via the right-multiplication action on cosets, plus projection."""
        N = self._own(normal_sub)
        if not self.is_normal(N):
            raise NotNormal("subgroup is not normal")
        n = self.order
        coset_of = np.full(n, -1, dtype=np.int64)
        reps = []
        nel = np.array(N.sorted_elements, dtype=np.int64)
        for x in range(n):
            if coset_of[x] >= 0:
                continue
            coset_of[self.rmul(x)[nel]] = len(reps)
            reps.append(x)
        m = len(reps)
        if m == 1:
            Q = PermGroup([], degree=1, cap=self.cap)
            proj = GroupHom(self, Q, [Permutation.identity(1)] * len(self.generators))
            return Q, proj
        gen_perms = []
        for s in self.generator_indices():
            r = self.rmul(s)
            gen_perms.append(Permutation([int(coset_of[r[x]]) for x in reps], check=False))
        Q = PermGroup(gen_perms, degree=m, cap=self.cap)
        proj = GroupHom(self, Q, gen_perms)
        return Q, proj

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"PermGroup(degree={self.degree}, generators=[{gens}])"


class ConjugacyClass:
    __slots__ = ("index", "rep", "size", "order", "members")

    def __init__(self, index, rep, size, order, members):
        self.index = index
        self.rep = rep
        self.size = size
        self.order = order
        self.members = members

    def __repr__(self):
        return (f"ConjugacyClass(rep={self.rep}, size={self.size}, "
                f"order={self.order})")


def closure_indices(group, gens):
    """Element set of the subgroup generated by element indices."""
    elems = {0}
    frontier = [0]
    arrays = [group.rmul(int(s)) for s in gens]
    while frontier:
        nxt = []
        fr = np.array(frontier, dtype=np.int64)
        for arr in arrays:
            for y in arr[fr].tolist():
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


def _small_generating_set(group, elements):
    gens = []
    current = {0}
    for x in sorted(elements):
        if x not in current:
            gens.append(x)
            current = set(closure_indices(group, gens))
            if len(current) == len(elements):
                break
    return tuple(gens)


class SubgroupHandle:
    """A subgroup of a closed parent group, identified by its element-index set."""

    __slots__ = ("parent", "elements", "_gens", "_sorted", "_mask", "_group",
                 "_embed", "_hash")

    def __init__(self, parent, elements, gens=None):
        self.parent = parent
        self.elements = frozenset(elements)
        self._gens = tuple(int(g) for g in gens) if gens is not None else None
        self._sorted = None
        self._mask = None
        self._group = None
        self._embed = None
        self._hash = hash(self.elements)

    @property
    def order(self):
        return len(self.elements)

    @property
    def gens(self):
        if self._gens is None:
            self._gens = _small_generating_set(self.parent, self.elements)
        return self._gens

    @property
    def generators(self):
        els = self.parent.elements
        return [els[g] for g in self.gens]

    @property
    def sorted_elements(self):
        if self._sorted is None:
            self._sorted = tuple(sorted(self.elements))
        return self._sorted

    @property
    def mask(self):
        if self._mask is None:
            m = np.zeros(self.parent.order, dtype=bool)
            m[list(self.elements)] = True
            self._mask = m
        return self._mask

    def permutations(self):
        els = self.parent.elements
        return [els[i] for i in self.sorted_elements]

    def __contains__(self, x):
        if isinstance(x, Permutation):
            x = self.parent.index(x)
        return x in self.elements

    def __le__(self, other):
        return self.elements <= other.elements

    def __lt__(self, other):
        return self.elements < other.elements

    def __eq__(self, other):
        return (isinstance(other, SubgroupHandle) and self.parent is other.parent
                and self.elements == other.elements)

    def __hash__(self):
        return self._hash

    def __and__(self, other):
        return SubgroupHandle(self.parent, self.elements & other.elements)

    def join(self, other):
        return self.parent.subgroup(list(self.gens) + list(other.gens))

    def as_group(self):
        """This subgroup as a stand-alone PermGroup (cached)."""
        if self._group is None:
            gens = self.generators
            self._group = PermGroup(gens, degree=self.parent.degree, cap=self.parent.cap)
        return self._group

    def embedding(self):
        """Array mapping indices of ``as_group()`` to parent indices."""
        if self._embed is None:
            H = self.as_group()
            self._embed = self.parent.find(H.images)
        return self._embed

    def lift(self, sub):
        """Parent subgroup corresponding to a subgroup of ``as_group()``."""
        emb = self.embedding()
        return SubgroupHandle(self.parent, frozenset(emb[list(sub.elements)].tolist()))

    def restrict(self, other):
        """Subgroup of ``as_group()`` corresponding to a parent subgroup inside self."""
        H = self.as_group()
        idx = H.find(self.parent.images[list(other.sorted_elements)])
        if (idx < 0).any():
            raise NotASubgroup("subgroup not contained in this subgroup")
        return SubgroupHandle(H, frozenset(idx.tolist()))

    def is_p_group(self, p):
        return p_part(self.order, p) == self.order

    def __repr__(self):
        return f"SubgroupHandle(order={self.order}, gens=[{', '.join(map(str, self.generators))}])"


class GroupHom:
    """Homomorphism given by generator images, extended along the Cayley graph."""

    def __init__(self, source, target, generator_images, check=True):
        self.source = source
        self.target = target
        self.generator_images = [g if isinstance(g, Permutation) else Permutation(g)
                                 for g in generator_images]
        if len(self.generator_images) != len(source.generators):
            raise NotAnAutomorphism("one image per source generator is required")
        self._map = None
        if check:
            self.element_map()

    def element_map(self):
        """Index array: source element index -> target element index."""
        if self._map is not None:
            return self._map
        src, tgt = self.source, self.target
        n = src.order
        try:
            imgs = [tgt.index(g) for g in self.generator_images]
        except Exception as exc:
            raise NotAnAutomorphism(f"generator image outside target: {exc}") from None
        gens = src.generator_indices()
        m = np.full(n, -1, dtype=np.int64)
        m[0] = 0
        frontier = [0]
        while frontier:
            nxt = []
            for s, t in zip(gens, imgs):
                rs = src.rmul(s)
                rt = tgt.rmul(t)
                for x in frontier:
                    y = int(rs[x])
                    if m[y] < 0:
                        m[y] = rt[m[x]]
                        nxt.append(y)
            frontier = nxt
        for s, t in zip(gens, imgs):
            if not np.array_equal(tgt.rmul(t)[m], m[src.rmul(s)]):
                raise NotAnAutomorphism("generator images do not define a homomorphism")
        self._map = m
        return m

    def __call__(self, x):
        if isinstance(x, Permutation):
            x = self.source.index(x)
            return self.target.elements[int(self.element_map()[x])]
        return int(self.element_map()[x])

    def image_of(self, sub):
        m = self.element_map()
        return SubgroupHandle(self.target, frozenset(m[list(sub.elements)].tolist()))

    def kernel(self):
        m = self.element_map()
        return SubgroupHandle(self.source, frozenset(np.flatnonzero(m == 0).tolist()))

    def is_bijective(self):
        m = self.element_map()
        return len(set(m.tolist())) == self.source.order == self.target.order

    def is_automorphism(self):
        return self.source.key == self.target.key and self.is_bijective()

    def compose(self, other):
        """``self`` after ``other`` (requires other.target == self.source)."""
        gens = [self(g) for g in other.generator_images]
        return GroupHom(other.source, self.target, gens)

    def __repr__(self):
        return f"GroupHom({', '.join(map(str, self.generator_images))})"


class Automorphism:
    """An automorphism of a closed group, stored as an element-index permutation."""

    def __init__(self, group, mapping):
        self.group = group
        self.mapping = np.asarray(mapping, dtype=np.int64)
        if sorted(self.mapping.tolist()) != list(range(group.order)):
            raise NotAnAutomorphism("map is not bijective")

    @classmethod
    def from_hom(cls, hom):
        if not hom.is_automorphism():
            raise NotAnAutomorphism("homomorphism is not an automorphism of its source")
        G = hom.source
        if hom.target is not G:
            # same element set; reindex through the source
            m = G.find(hom.target.images[hom.element_map()])
            return cls(G, m)
        return cls(G, hom.element_map())

    @classmethod
    def inner(cls, group, g):
        return cls(group, group.conj_by(g))

    def __call__(self, x):
        return int(self.mapping[x])

    def then(self, other):
        """Apply self, then other."""
        return Automorphism(self.group, other.mapping[self.mapping])

    def power(self, k):
        result = Automorphism(self.group, np.arange(self.group.order))
        for _ in range(k):
            result = result.then(self)
        return result

    def image_of(self, sub):
        return SubgroupHandle(self.group, frozenset(self.mapping[list(sub.elements)].tolist()),
                              gens=tuple(int(self.mapping[h]) for h in sub.gens))

    def inner_witness(self):
        """Element g with self(x) = x^g for all x, or None."""
        G = self.group
        mask = np.ones(G.order, dtype=bool)
        for s in G.generator_indices():
            mask &= G.conj_of(s) == self.mapping[s]
        hits = np.flatnonzero(mask)
        return int(hits[0]) if len(hits) else None

    def is_inner(self):
        return self.inner_witness() is not None

    def outer_order(self, cap=10000):
        """Order of the image in Out(G)."""
        cur = self
        for k in range(1, cap + 1):
            if cur.is_inner():
                return k
            cur = cur.then(self)
        from .errors import InnernessUndecidable
        raise InnernessUndecidable(f"no inner power found below {cap}")

    def class_permutation(self):
        """Map class index -> class index of the image of its representative."""
        G = self.group
        cls = G.class_of()
        return [int(cls[self.mapping[c.rep]]) for c in G.conjugacy_classes()]


# -- file formats -------------------------------------------------------------

def _content_lines(text):
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line


def parse_group_text(text, path=None, cap=None):
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty group file", path)
    n0, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "degree":
        raise ParseError("first line must be 'degree N'", path, n0)
    try:
        degree = int(parts[1])
    except ValueError:
        raise ParseError(f"bad degree {parts[1]!r}", path, n0) from None
    if degree < 1:
        raise ParseError("degree must be positive", path, n0)
    gens = []
    for n, line in lines[1:]:
        try:
            gens.append(Permutation.parse(line, degree))
        except ValueError as exc:
            raise ParseError(str(exc), path, n) from None
    return PermGroup(gens, degree=degree, cap=cap)


def load_group(path, cap=None):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    G = parse_group_text(text, path=str(path), cap=cap)
    G.close()
    return G


def parse_automorphism_text(text, group, path=None):
    lines = list(_content_lines(text))
    if not lines or lines[0][1] != "auto":
        raise ParseError("automorphism file must start with 'auto'",
                         path, lines[0][0] if lines else None)
    images = []
    for n, line in lines[1:]:
        try:
            images.append(Permutation.parse(line, group.degree))
        except ValueError as exc:
            raise ParseError(str(exc), path, n) from None
    if len(images) != len(group.generators):
        raise ParseError(f"expected {len(group.generators)} image lines, "
                         f"found {len(images)}", path)
    hom = GroupHom(group, group, images)
    if not hom.is_bijective():
        raise NotAnAutomorphism("generator images do not define a bijection")
    return hom


def load_automorphism(path, group):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_automorphism_text(text, group, path=str(path))


def format_group(group):
    lines = [f"degree {group.degree}"]
    lines += [str(g) for g in group.generators]
    return "\n".join(lines) + "\n"
