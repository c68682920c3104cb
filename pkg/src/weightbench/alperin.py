"""Global weight-count checks: Brauer character count against radical weights,
and its equivariant form under a cyclic group of outer automorphisms."""

from __future__ import annotations

import numpy as np

from .chartab import (defect_zero_characters, fixed_class_count, fixed_characters,
                      p_regular_classes)
from .errors import NotAnAutomorphism
from .fusion import p_subgroup_classes
from .permgroup import Automorphism, GroupHom, check_prime

DEFAULT_INNERNESS_CAP = 10000


def count_brauer_irreducibles(group, p):
    return len(p_regular_classes(group, p))


def _weight_terms(group, p):
    F = p_subgroup_classes(group, p)
    terms = []
    for c in F.classes:
        if not c.dade_radical:
            continue
        H = c.normalizer.as_group()
        X, _ = H.quotient_group(c.normalizer.restrict(c.representative))
        terms.append({"class": c.index, "radical_order": c.order,
                      "quotient_order": X.order,
                      "z": len(defect_zero_characters(X, p))})
    return terms


def count_weights(group, p):
    """Total weight count and its per-radical-class breakdown."""
    p = check_prime(p)
    terms = _weight_terms(group, p)
    return sum(t["z"] for t in terms), terms


class AlperinReport:
    def __init__(self, group_id, prime, lhs, rhs, breakdown):
        self.group_id = group_id
        self.prime = prime
        self.lhs = lhs
        self.rhs = rhs
        self.breakdown = breakdown
        self.equal = lhs == rhs

    def to_json(self):
        return {"group": self.group_id, "prime": self.prime, "lhs": self.lhs,
                "rhs": self.rhs, "equal": self.equal, "breakdown": self.breakdown}


def check_alperin(group, p, group_id=None):
    p = check_prime(p)
    rhs, terms = count_weights(group, p)
    return AlperinReport(group_id, p, count_brauer_irreducibles(group, p), rhs, terms)


def _as_automorphism(group, alpha):
    if isinstance(alpha, Automorphism):
        if alpha.group.key != group.key:
            raise NotAnAutomorphism("automorphism of a different group")
        return alpha if alpha.group is group else Automorphism(group, alpha.mapping)
    if isinstance(alpha, GroupHom):
        if alpha.source.key != group.key or not alpha.is_automorphism():
            raise NotAnAutomorphism("map is not an automorphism of this group")
        auto = Automorphism.from_hom(alpha)
        return auto if auto.group is group else Automorphism(group, auto.mapping)
    raise NotAnAutomorphism("expected an automorphism")


def induced_on_quotient(group, c, N, R):
    """Automorphism of N/R induced by an automorphism c of the group stabilising N and R."""
    H = N.as_group()
    X, proj = H.quotient_group(N.restrict(R))
    emb = N.embedding()
    back = np.full(group.order, -1, dtype=np.int64)
    back[emb] = np.arange(H.order)
    pm = proj.element_map()
    preimage = np.full(X.order, -1, dtype=np.int64)
    for h in range(H.order - 1, -1, -1):
        preimage[pm[h]] = h
    mapping = pm[back[c.mapping[emb[preimage]]]]
    return X, Automorphism(X, mapping)


def fixed_weight_count(group, p, c):
    """Number of weights fixed by the automorphism c (adjusted by inner corrections)."""
    F = p_subgroup_classes(group, p)
    total = 0
    for sc in F.classes:
        if not sc.dade_radical:
            continue
        R = sc.representative
        g = group.conjugator(c.image_of(R), R)
        if g is None:
            continue
        c2 = Automorphism(group, group.conj_by(g)[c.mapping])
        X, induced = induced_on_quotient(group, c2, sc.normalizer, R)
        total += len(fixed_characters(X, induced, defect_zero_characters(X, p)))
    return total


class EquivariantReport:
    def __init__(self, group_id, prime, outer_order, per_power, lhs, rhs,
                 brauer_count, weight_count):
        self.group_id = group_id
        self.prime = prime
        self.outer_order = outer_order
        self.per_power = per_power
        self.lhs = lhs
        self.rhs = rhs
        self.brauer_count = brauer_count
        self.weight_count = weight_count
        self.equal = lhs == rhs

    def to_json(self):
        return {"group": self.group_id, "prime": self.prime,
                "outer_order": self.outer_order, "per_power": self.per_power,
                "lhs_orbits": self.lhs, "rhs_orbits": self.rhs, "equal": self.equal,
                "brauer_count": self.brauer_count, "weight_count": self.weight_count}


def check_equivariant(group, p, alpha, group_id=None, cap=DEFAULT_INNERNESS_CAP):
    p = check_prime(p)
    a = _as_automorphism(group, alpha)
    m = a.outer_order(cap)
    per_power = []
    c = Automorphism(group, np.arange(group.order))
    for k in range(m):
        per_power.append({"power": k,
                          "fixed_regular_classes": fixed_class_count(group, c, p),
                          "fixed_weights": fixed_weight_count(group, p, c)})
        c = c.then(a)
    lhs_total = sum(t["fixed_regular_classes"] for t in per_power)
    rhs_total = sum(t["fixed_weights"] for t in per_power)
    if lhs_total % m or rhs_total % m:
        raise ArithmeticError("Burnside sums not divisible by the group order")
    return EquivariantReport(group_id, p, m, per_power, lhs_total // m, rhs_total // m,
                             count_brauer_irreducibles(group, p), count_weights(group, p)[0])
