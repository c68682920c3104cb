"""Fusion data of F_P(G): p-subgroup classes, centric and radical tests,
automizers, morphism counts and a self-test of the Frobenius axioms."""

from __future__ import annotations

import numpy as np

from .permgroup import SubgroupHandle, check_prime, p_part

EXHAUSTIVE_AXIOM_BOUND = 256
SAMPLE_LIMIT = 2000


def subgroups_of(group, sub):
    """All subgroups of ``sub`` as handles in ``group``, sorted by (order, elements)."""
    cyclic = {}
    for x in sub.sorted_elements:
        c = group.subgroup([x])
        cyclic.setdefault(c.elements, c)
    cyclic_list = sorted(cyclic.values(), key=lambda h: (h.order, h.sorted_elements))
    found = dict(cyclic)
    frontier = list(cyclic_list)
    while frontier:
        nxt = []
        for H in frontier:
            for C in cyclic_list:
                if C.elements <= H.elements:
                    continue
                J = H.join(C)
                if J.elements not in found:
                    found[J.elements] = J
                    nxt.append(J)
        frontier = nxt
    return sorted(found.values(), key=lambda h: (h.order, h.sorted_elements))


class SubgroupClass:
    """A G-conjugacy class of subgroups of P with a fully normalized representative."""

    def __init__(self, fusion, index, members):
        G, P = fusion.group, fusion.sylow
        self.fusion = fusion
        self.index = index
        self.members = members
        pmask = P.mask

        def np_size(Q):
            return int(np.count_nonzero(G.normalizer(Q).mask & pmask))

        self.representative = max(members, key=lambda Q: (np_size(Q), tuple(-x for x in Q.sorted_elements)))
        Q = self.representative
        self.order = Q.order
        self.normalizer = G.normalizer(Q)
        self.centralizer = G.centralizer(Q)
        self.class_size = G.order // self.normalizer.order
        p = fusion.prime
        self.centric = _centric(G, p, Q, self.centralizer)
        self.automizer_order = self.normalizer.order // _qc(G, Q, self.centralizer).order
        self.dade_radical = _dade_radical(G, p, Q, self.normalizer)
        self.f_radical = self.centric and _automizer_core_trivial(G, p, Q, self.normalizer,
                                                                  self.centralizer)

    def to_json(self):
        return {
            "index": self.index, "order": self.order, "class_size": self.class_size,
            "members_in_sylow": len(self.members),
            "representative": [str(g) for g in self.representative.generators],
            "normalizer_order": self.normalizer.order,
            "centralizer_order": self.centralizer.order,
            "automizer_order": self.automizer_order,
            "centric": self.centric, "f_radical": self.f_radical,
            "dade_radical": self.dade_radical,
        }

    def __repr__(self):
        flags = "".join(c for c, f in zip("cfd", (self.centric, self.f_radical, self.dade_radical)) if f)
        return f"SubgroupClass({self.index}: order {self.order}, size {self.class_size}, [{flags}])"


class FusionData:
    def __init__(self, group, prime):
        self.group = group
        self.prime = prime
        self.sylow = group.sylow_subgroup(prime)
        self.subgroups = subgroups_of(group, self.sylow)
        assigned = {}
        raw = []
        for Q in self.subgroups:
            if Q.elements in assigned:
                continue
            cid = len(raw)
            members = [Q]
            assigned[Q.elements] = cid
            for R in self.subgroups:
                if R.order == Q.order and R.elements not in assigned:
                    if group.transporter_mask(Q, R).any():
                        assigned[R.elements] = cid
                        members.append(R)
            raw.append(members)
        self.classes = [SubgroupClass(self, i, m) for i, m in enumerate(raw)]
        self.classes.sort(key=lambda c: (c.order, c.representative.sorted_elements))
        remap = {}
        for new, c in enumerate(self.classes):
            remap[c.index] = new
            c.index = new
        self._member_class = {k: remap[v] for k, v in assigned.items()}
        self.inclusion = [[group.transporter_mask(a.representative, b.representative).any()
                           if a.order <= b.order and b.order % a.order == 0 else False
                           for b in self.classes] for a in self.classes]

    def class_of(self, Q):
        """Class index of any p-subgroup of the group (conjugated into P if necessary)."""
        hit = self._member_class.get(Q.elements)
        if hit is not None and Q.parent is self.group:
            return hit
        for c in self.classes:
            if c.order == Q.order and self.group.transporter_mask(Q, c.representative).any():
                return c.index
        raise KeyError("not a p-subgroup of this group")

    def centric_classes(self):
        return [c for c in self.classes if c.centric]

    def to_json(self):
        G = self.group
        return {
            "prime": self.prime, "group_order": G.order, "sylow_order": self.sylow.order,
            "classes": [c.to_json() for c in self.classes],
            "morphism_counts": [[morphism_count(G, self.prime, b.representative, a.representative)
                                 for b in self.classes] for a in self.classes],
            "inclusion": [[bool(x) for x in row] for row in self.inclusion],
        }


def _qc(G, Q, C):
    return G.subgroup(list(Q.gens) + list(C.gens))


def _centric(G, p, Q, C=None):
    C = G.centralizer(Q) if C is None else C
    Z = C & Q
    return p_part(C.order, p) == Z.order


def _dade_radical(G, p, Q, N=None):
    N = G.normalizer(Q) if N is None else N
    core = N.lift(N.as_group().p_core(p))
    return core.elements == Q.elements


def _automizer(G, p, Q, N=None, C=None):
    N = G.normalizer(Q) if N is None else N
    C = G.centralizer(Q) if C is None else C
    H = N.as_group()
    QC = N.restrict(_qc(G, Q, C))
    return H.quotient_group(QC)


def _automizer_core_trivial(G, p, Q, N, C):
    A, _ = _automizer(G, p, Q, N, C)
    return A.p_core(p).order == 1


def p_subgroup_classes(group, p):
    p = check_prime(p)
    key = ("fusion", p)
    if key not in group.cache:
        group.cache[key] = FusionData(group, p)
    return group.cache[key]


def is_centric(group, p, Q):
    check_prime(p)
    Q = group._own(Q)
    return _centric(group, p, Q)


def is_radical(group, p, Q):
    """F-radical: centric with O_p of the automizer trivial."""
    check_prime(p)
    Q = group._own(Q)
    if not _centric(group, p, Q):
        return False
    return _automizer_core_trivial(group, p, Q, group.normalizer(Q), group.centralizer(Q))


def is_dade_radical(group, p, Q):
    check_prime(p)
    return _dade_radical(group, p, group._own(Q))


def automizer(group, p, Q):
    """N_G(Q)/Q C_G(Q) with its projection from N_G(Q)."""
    check_prime(p)
    return _automizer(group, p, group._own(Q))


def automizer_acts_faithfully(group, p, Q):
    """The automizer embeds in Aut(Q): kernel of N_G(Q) -> Aut(Q) equals C_G(Q)."""
    Q = group._own(Q)
    N = group.normalizer(Q)
    C = group.centralizer(Q)
    kernel = [g for g in N.sorted_elements
              if all(group.conj_by(g)[h] == h for h in Q.gens)]
    A, _ = _automizer(group, p, Q, N, C)
    return set(kernel) == set(C.elements) and A.order * _qc(group, Q, C).order == N.order


def morphism_count(group, p, Q, R):
    """|F(Q, R)|: maps R -> Q induced by conjugation."""
    Q, R = group._own(Q), group._own(R)
    t = int(np.count_nonzero(group.transporter_mask(R, Q)))
    c = group.centralizer(R).order
    if t % c:
        raise ArithmeticError("transporter size not divisible by centralizer order")
    return t // c


# -- axiom self-test -----------------------------------------------------------

def _sample(items, limit):
    items = list(items)
    if len(items) <= limit:
        return items
    step = len(items) / limit
    return [items[int(i * step)] for i in range(limit)]


def validate_frobenius_axioms(group, p):
    """Check the Frobenius category axioms for F_P(G); returns a report dict."""
    p = check_prime(p)
    F = p_subgroup_classes(group, p)
    G, P = group, F.sylow
    exhaustive = P.order <= EXHAUSTIVE_AXIOM_BOUND
    limit = None if exhaustive else SAMPLE_LIMIT
    subs = F.subgroups
    reps = [c.representative for c in F.classes]
    masks = {}

    def tmask(src, dst):
        key = (src.elements, dst.elements)
        if key not in masks:
            masks[key] = G.transporter_mask(src, dst)
        return masks[key]

    # A2.1: inclusions, P-conjugations, composition and restriction
    a21_checks = 0
    a21_fail = []
    for R in reps:
        for x in P.gens:
            a21_checks += 1
            if not tmask(R, G.conjugate_subgroup(R, x))[x]:
                a21_fail.append(("p_conjugation", R.order))
    triples = [(R, T, Q) for R in reps for T in subs for Q in subs
               if R.order <= T.order <= Q.order and T.order % R.order == 0 and Q.order % T.order == 0]
    if limit is not None:
        triples = _sample(triples, limit)
    for R, T, Q in triples:
        a21_checks += 1
        rt = tmask(R, T)
        tq = tmask(T, Q)
        if R.elements <= T.elements and not rt[0]:
            a21_fail.append(("inclusion", R.order, T.order))
        if rt.any() and tq.any():
            x = int(np.flatnonzero(rt)[0])
            y = int(np.flatnonzero(tq)[0])
            if not tmask(R, Q)[G.mul(x, y)]:
                a21_fail.append(("composition", R.order, T.order, Q.order))
        if R.elements <= T.elements and not np.all(tmask(R, Q) >= tmask(T, Q)):
            a21_fail.append(("restriction", R.order, T.order, Q.order))
        if np.count_nonzero(tmask(R, Q)) % G.centralizer(R).order:
            a21_fail.append(("divisibility", R.order, Q.order))

    # A2.2: Inn(P) is a Sylow p-subgroup of Aut_G(P)
    NP, CP = G.normalizer(P), G.centralizer(P)
    inn = P.order // (CP & P).order
    aut = NP.order // CP.order
    a22 = inn == p_part(aut, p)

    # A2.3: extension of morphisms onto fully centralized images
    a23_checks = 0
    a23_fail = []
    pmask = P.mask
    fully_central = {}
    for c in F.classes:
        best = max(int(np.count_nonzero(G.centralizer(M).mask & pmask)) for M in c.members)
        for M in c.members:
            fully_central[M.elements] = (
                int(np.count_nonzero(G.centralizer(M).mask & pmask)) == best)
    configs = []
    for Q in subs:
        cid = F.class_of(Q)
        for T in F.classes[cid].members:
            if fully_central[T.elements]:
                configs.append((Q, T))
    if limit is not None:
        configs = _sample(configs, limit)
    for Q, T in configs:
        CQ = G.centralizer(Q)
        CT = G.centralizer(T)
        NPQ = SubgroupHandle(G, frozenset(np.flatnonzero(G.normalizer(Q).mask & pmask).tolist()))
        NPT = SubgroupHandle(G, frozenset(np.flatnonzero(G.normalizer(T).mask & pmask).tolist()))
        autp_t = _qc(G, NPT, CT).mask  # N_P(T) C_G(T)
        transport = np.flatnonzero(tmask(Q, T))
        seen = set()
        for x in transport.tolist():
            coset = frozenset(G.rmul(x)[list(CQ.elements)].tolist())  # C_G(Q) x
            if coset in seen:
                continue
            seen.add(coset)
            a23_checks += 1
            conj = G.conj_by(x)
            n_phi = [y for y in NPQ.sorted_elements if autp_t[conj[y]]]
            ok = False
            for g in sorted(coset):
                cg = G.conj_by(g)
                if pmask[cg[n_phi]].all():
                    ok = True
                    break
            if not ok:
                a23_fail.append((Q.order, x))

    return {
        "prime": p,
        "sylow_order": P.order,
        "exhaustive": exhaustive,
        "A2.1": {"passed": not a21_fail, "checks": a21_checks, "failures": len(a21_fail)},
        "A2.2": {"passed": a22, "inner_order": inn, "automizer_p_part": p_part(aut, p)},
        "A2.3": {"passed": not a23_fail, "checks": a23_checks, "failures": len(a23_fail)},
        "passed": not a21_fail and a22 and not a23_fail,
    }



def normalizer_radicals_check(group, p):
    """For each fully normalized U, every radical subgroup of the fusion system of
    N_G(U) contains U and is centric in the whole group."""
    p = check_prime(p)
    F = p_subgroup_classes(group, p)
    rows = []
    for c in F.classes:
        U = c.representative
        N = c.normalizer
        H = N.as_group()
        FH = p_subgroup_classes(H, p)
        emb = N.embedding()
        radicals = []
        for sc in FH.classes:
            if not sc.f_radical:
                continue
            S = group.subgroup_from_elements(emb[list(sc.representative.sorted_elements)].tolist())
            radicals.append({"order": S.order, "contains": U.elements <= S.elements,
                             "centric": _centric(group, p, S)})
        rows.append({"class": c.index, "order": U.order, "radicals": radicals,
                     "passed": all(r["contains"] and r["centric"] for r in radicals)})
    return {"prime": p, "subgroups": rows, "passed": all(r["passed"] for r in rows)}
