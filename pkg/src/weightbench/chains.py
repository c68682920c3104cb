"""Chains of p-subgroups up to conjugacy, the two cancellation involutions on
centric chains, and the alternating-sum identities built on them."""

from __future__ import annotations

import numpy as np

from .chartab import defect_zero_count
from .errors import CapExceeded, PairingFailure
from .fusion import p_subgroup_classes
from .permgroup import SubgroupHandle, check_prime

DEFAULT_CHAIN_CAP = 10 ** 6

_F_CACHE = {}


class SubgroupRegistry:
    """Every G-conjugate of the selected subgroup classes of P, with integer ids."""

    def __init__(self, fusion, centric_only):
        G = fusion.group
        self.group = G
        self.fusion = fusion
        self.subs = []
        self.index = {}
        self.class_id = []
        gens = G.generator_indices()
        arrays = [G.conj_by(s) for s in gens]
        for c in fusion.classes:
            if centric_only and not c.centric:
                continue
            start = c.representative
            self._add(start, c.index)
            frontier = [start]
            while frontier:
                nxt = []
                for Q in frontier:
                    for arr in arrays:
                        els = frozenset(arr[list(Q.elements)].tolist())
                        if els not in self.index:
                            R = SubgroupHandle(G, els, gens=tuple(int(arr[h]) for h in Q.gens))
                            self._add(R, c.index)
                            nxt.append(R)
                frontier = nxt
        n = len(self.subs)
        self.perms = []
        for arr in arrays:
            perm = np.empty(n, dtype=np.int64)
            for i, Q in enumerate(self.subs):
                perm[i] = self.index[frozenset(arr[list(Q.elements)].tolist())]
            self.perms.append(perm)
        order = [Q.order for Q in self.subs]
        self.up = [[] for _ in range(n)]
        for a in range(n):
            for b in range(n):
                if order[a] < order[b] and order[b] % order[a] == 0 \
                        and self.subs[a].elements < self.subs[b].elements:
                    self.up[a].append(b)
        self._nmask = {}

    def _add(self, Q, cid):
        self.index[Q.elements] = len(self.subs)
        self.subs.append(Q)
        self.class_id.append(cid)

    def id_of(self, Q):
        try:
            return self.index[Q.elements]
        except KeyError:
            raise PairingFailure("subgroup not among the registered p-subgroups") from None

    def normalizer_mask(self, i):
        m = self._nmask.get(i)
        if m is None:
            m = self.group.normalizer(self.subs[i]).mask
            self._nmask[i] = m
        return m

    def chain_normalizer_mask(self, chain):
        m = np.ones(self.group.order, dtype=bool)
        for i in chain:
            m = m & self.normalizer_mask(i)
        return m


class PChain:
    """A strictly increasing chain of subgroups of a common parent group."""

    def __init__(self, subgroups):
        self.subgroups = tuple(subgroups)
        for a, b in zip(self.subgroups, self.subgroups[1:]):
            if not a.elements < b.elements:
                raise ValueError("chain members must strictly increase")

    @property
    def length(self):
        return len(self.subgroups) - 1

    @property
    def top(self):
        return self.subgroups[-1]

    def orders(self):
        return [Q.order for Q in self.subgroups]

    def __repr__(self):
        return "PChain(" + " < ".join(str(o) for o in self.orders()) + ")"


class ChainClass:
    def __init__(self, index, ids, chain, orbit_size, normalizer):
        self.index = index
        self.ids = ids
        self.representative = chain
        self.orbit_size = orbit_size
        self.normalizer = normalizer
        self.all_centric = None
        self.dade_radical = None

    @property
    def length(self):
        return self.representative.length

    def to_json(self):
        return {"index": self.index, "length": self.length,
                "orders": self.representative.orders(),
                "orbit_size": self.orbit_size,
                "normalizer_order": self.normalizer.order,
                "all_centric": self.all_centric, "dade_radical": self.dade_radical}

    def __repr__(self):
        return f"ChainClass({self.index}: {self.representative.orders()}, |N|={self.normalizer.order})"


class ChainEnumeration:
    """Chain classes together with the chain -> class map used for partner lookups."""

    def __init__(self, registry, classes, lookup):
        self.registry = registry
        self.classes = classes
        self.lookup = lookup

    def class_of(self, ids):
        try:
            return self.lookup[tuple(ids)]
        except KeyError:
            raise PairingFailure(f"chain {tuple(ids)} not among the enumerated classes") from None


def chain_normalizer(group, chain):
    """Intersection of the normalizers of the chain members."""
    subs = chain.subgroups if isinstance(chain, PChain) else chain
    m = np.ones(group.order, dtype=bool)
    for Q in subs:
        m &= group.normalizer(Q).mask
    return SubgroupHandle(group, frozenset(np.flatnonzero(m).tolist()))


def _enumerate(registry, seeds, extend, cap):
    """Classes of chains reachable from G-invariant seed sets by upward extension."""
    G = registry.group
    P = registry.fusion.sylow
    pmask = P.mask
    perms = registry.perms
    lookup = {}
    raw = []
    count = 0

    def orbit(chain):
        nonlocal count
        members = [chain]
        lookup[chain] = len(raw)
        frontier = [chain]
        while frontier:
            nxt = []
            for c in frontier:
                for perm in perms:
                    d = tuple(int(perm[i]) for i in c)
                    if d not in lookup:
                        lookup[d] = len(raw)
                        members.append(d)
                        nxt.append(d)
            frontier = nxt
            count += len(nxt)
            if count > cap:
                raise CapExceeded(f"chain enumeration exceeds cap of {cap} chains")
        count += 1
        return members

    def representative(members):
        best = None
        for c in members:
            if not registry.subs[c[-1]].elements <= P.elements:
                continue
            npsize = int(np.count_nonzero(registry.chain_normalizer_mask(c) & pmask))
            key = (-npsize, tuple(registry.subs[i].sorted_elements for i in c))
            if best is None or key < best[0]:
                best = (key, c)
        if best is None:
            best = (None, min(members, key=lambda c: tuple(registry.subs[i].sorted_elements for i in c)))
        return best[1]

    queue = []
    for s in seeds:
        if s not in lookup:
            members = orbit(s)
            rep = representative(members)
            raw.append((rep, len(members)))
            queue.append(len(raw) - 1)
    while queue:
        nxt = []
        for cid in queue:
            rep = raw[cid][0]
            for S in registry.up[rep[-1]]:
                ext = rep + (S,)
                if ext in lookup or not extend(ext):
                    continue
                members = orbit(ext)
                raw.append((representative(members), len(members)))
                nxt.append(len(raw) - 1)
        queue = nxt
    order = sorted(range(len(raw)), key=lambda k: (
        len(raw[k][0]),
        tuple(registry.subs[i].order for i in raw[k][0]),
        tuple(registry.subs[i].sorted_elements for i in raw[k][0])))
    remap = {old: new for new, old in enumerate(order)}
    classes = []
    for new, old in enumerate(order):
        ids, size = raw[old]
        chain = PChain([registry.subs[i] for i in ids])
        norm = SubgroupHandle(G, frozenset(np.flatnonzero(registry.chain_normalizer_mask(ids)).tolist()))
        classes.append(ChainClass(new, ids, chain, size, norm))
    lookup = {c: remap[k] for c, k in lookup.items()}
    return ChainEnumeration(registry, classes, lookup)


def _is_dade_chain(registry, ids):
    G = registry.group
    p = registry.fusion.prime
    for j in range(len(ids)):
        N = SubgroupHandle(G, frozenset(np.flatnonzero(registry.chain_normalizer_mask(ids[:j + 1])).tolist()))
        core = N.lift(N.as_group().p_core(p))
        if core.elements != registry.subs[ids[j]].elements:
            return False
    return True


def _cached(cache, key, cap):
    enum = cache.get(key)
    if enum is not None and len(enum.lookup) > cap:
        raise CapExceeded(f"chain enumeration exceeds cap of {cap} chains")
    return enum


def regular_chain_enumeration(fusion, centric_only=True, cap=DEFAULT_CHAIN_CAP):
    G = fusion.group
    key = ("chains", fusion.prime, bool(centric_only))
    if _cached(G.cache, key, cap) is not None:
        return G.cache[key]
    registry = SubgroupRegistry(fusion, centric_only)
    seeds = [(registry.id_of(c.representative),) for c in fusion.classes
             if c.centric or not centric_only]
    enum = _enumerate(registry, seeds, lambda ext: True, cap)
    for c in enum.classes:
        c.all_centric = all(fusion.classes[registry.class_id[i]].centric for i in c.ids)
        c.dade_radical = _is_dade_chain(registry, c.ids)
    G.cache[key] = enum
    return enum


def enumerate_regular_chains(fusion, centric_only=True, cap=DEFAULT_CHAIN_CAP):
    return regular_chain_enumeration(fusion, centric_only, cap).classes


def dade_chain_enumeration(group, p, cap=DEFAULT_CHAIN_CAP):
    p = check_prime(p)
    key = ("dade_chains", p)
    if _cached(group.cache, key, cap) is not None:
        return group.cache[key]
    fusion = p_subgroup_classes(group, p)
    registry = SubgroupRegistry(fusion, centric_only=False)
    start = registry.id_of(group.p_core(p))

    def extend(ext):
        N = SubgroupHandle(group, frozenset(np.flatnonzero(registry.chain_normalizer_mask(ext)).tolist()))
        core = N.lift(N.as_group().p_core(p))
        return core.elements == registry.subs[ext[-1]].elements

    enum = _enumerate(registry, [(start,)], extend, cap)
    for c in enum.classes:
        c.all_centric = all(fusion.classes[registry.class_id[i]].centric for i in c.ids)
        c.dade_radical = True
    group.cache[key] = enum
    return enum


def enumerate_dade_chains(group, p, cap=DEFAULT_CHAIN_CAP):
    return dade_chain_enumeration(group, p, cap).classes


# -- cancellation involutions ---------------------------------------------------

def _normal_in(G, Q, X):
    qmask = Q.mask
    for x in X.gens:
        if not qmask[G.conj_by(x)[list(Q.gens)]].all():
            return False
    return True


def in_normal_set(enum, ids):
    """All members normal in the top member."""
    reg = enum.registry
    top = reg.subs[ids[-1]]
    return all(_normal_in(reg.group, reg.subs[i], top) for i in ids[:-1])


def tau_partner(enum, ids):
    """Partner chain (ids) under the normality involution, or None for survivors."""
    reg = enum.registry
    G = reg.group
    subs = [reg.subs[i] for i in ids]
    top = subs[-1]
    bad = next((k for k in range(len(subs) - 1) if not _normal_in(G, subs[k], top)), None)
    if bad is None:
        return None
    Q = subs[bad]
    j = next(k for k in range(bad + 1, len(subs)) if not _normal_in(G, Q, subs[k]))
    qj = subs[j]
    nq = SubgroupHandle(G, frozenset(np.flatnonzero(G.normalizer(Q).mask & qj.mask).tolist()))
    if nq.elements == subs[j - 1].elements:
        return tuple(ids[:j - 1]) + tuple(ids[j:])
    return tuple(ids[:j]) + (reg.id_of(nq),) + tuple(ids[j:])


def _chain_core(reg, ids):
    G = reg.group
    N = SubgroupHandle(G, frozenset(np.flatnonzero(reg.chain_normalizer_mask(ids)).tolist()))
    return N.lift(N.as_group().p_core(reg.fusion.prime))


def varpi_partner(enum, ids):
    """Partner chain under the radical involution (on the normal set), or None."""
    reg = enum.registry
    cores = [_chain_core(reg, ids[:j + 1]) for j in range(len(ids))]
    proper = [j for j in range(len(ids)) if cores[j].elements != reg.subs[ids[j]].elements]
    if not proper:
        return None
    j = proper[-1]
    R = cores[j]
    if j + 1 < len(ids) and reg.subs[ids[j + 1]].elements == R.elements:
        return tuple(ids[:j + 1]) + tuple(ids[j + 2:])
    return tuple(ids[:j + 1]) + (reg.id_of(R),) + tuple(ids[j + 1:])


class PairingReport:
    def __init__(self, mode, pairs, survivors, domain, checks):
        self.mode = mode
        self.pairs = pairs
        self.survivors = survivors
        self.domain = domain
        self.checks = checks

    @property
    def ok(self):
        return all(self.checks.values())

    def to_json(self):
        return {"mode": self.mode, "pairs": [list(p) for p in self.pairs],
                "survivors": list(self.survivors), "domain_size": len(self.domain),
                "checks": dict(self.checks)}


def pair_chains(fusion, mode="tau", cap=DEFAULT_CHAIN_CAP):
    """Match non-surviving centric chain classes by the chosen involution."""
    if mode not in ("tau", "varpi"):
        raise ValueError("mode must be 'tau' or 'varpi'")
    enum = regular_chain_enumeration(fusion, True, cap)
    G = fusion.group
    classes = enum.classes
    if mode == "tau":
        domain = [c.index for c in classes]
        partner_fn = tau_partner
    else:
        domain = [c.index for c in classes if in_normal_set(enum, c.ids)]
        partner_fn = varpi_partner
    dom = set(domain)
    partner = {}
    for k in domain:
        ids = partner_fn(enum, classes[k].ids)
        partner[k] = None if ids is None else enum.class_of(ids)
    survivors = [k for k in domain if partner[k] is None]
    pairs = sorted({tuple(sorted((k, v))) for k, v in partner.items() if v is not None})
    involution = all(v is None or (v in dom and v != k and partner.get(v) == k)
                     for k, v in partner.items())
    lengths = all(abs(classes[a].length - classes[b].length) == 1 for a, b in pairs)
    normalizers = all(classes[a].normalizer.order == classes[b].normalizer.order
                      and G.are_conjugate(classes[a].normalizer, classes[b].normalizer) is not None
                      for a, b in pairs)
    covered = sorted([k for pr in pairs for k in pr] + survivors) == sorted(domain)
    if mode == "tau":
        expected = sorted(k for k in domain if in_normal_set(enum, classes[k].ids))
    else:
        expected = sorted(k for k in domain if classes[k].dade_radical)
    checks = {"involution": involution, "length_step": lengths,
              "conjugate_normalizers": normalizers, "perfect_matching": covered,
              "survivors_match": sorted(survivors) == expected}
    return PairingReport(mode, pairs, survivors, domain, checks)


# -- alternating sums ---------------------------------------------------------------

def radical_weight(group, p):
    """Sum over F-radical classes S of the number of defect-zero characters of N(S)/S."""
    key = (group.key, p)
    if key not in _F_CACHE:
        F = p_subgroup_classes(group, p)
        total = 0
        for c in F.classes:
            if c.f_radical:
                total += quotient_defect_zero(c.normalizer, c.representative, p)
        _F_CACHE.setdefault(key, total)
    return _F_CACHE[key]


def quotient_defect_zero(N, S, p):
    """z(N/S) for a normal subgroup S of the subgroup N (both handles in one parent)."""
    H = N.as_group()
    Q, _ = H.quotient_group(N.restrict(S))
    return defect_zero_count(Q, p)


def all_blocks_weight(group, p):
    """Sum over Dade-radical classes R of z(N(R)/R)."""
    F = p_subgroup_classes(group, p)
    return sum(quotient_defect_zero(c.normalizer, c.representative, p)
               for c in F.classes if c.dade_radical)


def alternating_sum_report(group, p, cap=DEFAULT_CHAIN_CAP):
    p = check_prime(p)
    F = p_subgroup_classes(group, p)
    radical_sum = radical_weight(group, p)

    enum = regular_chain_enumeration(F, True, cap)
    full_terms = []
    for c in enum.classes:
        w = radical_weight(c.normalizer.as_group(), p)
        full_terms.append({"chain": c.index, "length": c.length, "weight": w})
    full_sum = sum((-1) ** t["length"] * t["weight"] for t in full_terms)

    dade_terms = []
    for sc in F.classes:
        if not (sc.centric and sc.dade_radical):
            continue
        H = sc.normalizer.as_group()
        for r in enumerate_dade_chains(H, p, cap):
            w = radical_weight(r.normalizer.as_group(), p)
            dade_terms.append({"start": sc.index, "length": r.length,
                               "orders": r.representative.orders(), "weight": w})
    dade_sum = sum((-1) ** t["length"] * t["weight"] for t in dade_terms)

    return {
        "prime": p,
        "radical_subgroup_sum": radical_sum,
        "full_chain_sum": full_sum,
        "dade_chain_sum": dade_sum,
        "all_equal": radical_sum == full_sum == dade_sum,
        "all_blocks_weight": all_blocks_weight(group, p),
        "full_chain_terms": full_terms,
        "dade_chain_terms": dade_terms,
    }
