import functools

import pytest

from conftest import CORPUS, corpus_group, corpus_pairs
from oracles import TableGroup, p_regular_class_count, weights
from weightbench.alperin import (check_alperin, check_equivariant, count_brauer_irreducibles,
                                 count_weights, induced_on_quotient)
from weightbench.errors import NotAnAutomorphism
from weightbench.permgroup import Automorphism, load_automorphism


@functools.lru_cache(maxsize=None)
def oracle_group(name):
    return TableGroup.from_file(CORPUS / f"{name}.grp")


@pytest.mark.parametrize("name,p", corpus_pairs())
def test_alperin_matches_oracle(name, p):
    rep = check_alperin(corpus_group(name), p, name)
    O = oracle_group(name)
    assert rep.lhs == p_regular_class_count(O, p)
    assert rep.rhs == weights(O, p)
    assert rep.equal


def test_spot_values():
    for name, p, value in [("a5", 2, 4), ("s4", 2, 2), ("gl32", 2, 4)]:
        rep = check_alperin(corpus_group(name), p)
        assert rep.lhs == rep.rhs == value


def test_gl32_breakdown():
    total, terms = count_weights(corpus_group("gl32"), 2)
    assert total == 4
    assert [t["z"] for t in terms] == [1, 1, 1, 1]
    assert [t["radical_order"] for t in terms] == [1, 4, 4, 8]


def test_coprime_prime():
    rep = check_alperin(corpus_group("a5"), 7)
    assert rep.lhs == rep.rhs == 5
    assert count_brauer_irreducibles(corpus_group("a5"), 7) == 5


def auto(name, group):
    return load_automorphism(CORPUS / f"{name}.auto", corpus_group(group))


@pytest.mark.parametrize("name,group,p,value", [
    ("a5_outer", "a5", 2, 3), ("a5_outer", "a5", 3, 3), ("a5_outer", "a5", 5, 3),
    ("a6_outer", "a6", 2, 4), ("a6_outer", "a6", 3, 4), ("a6_outer", "a6", 5, 5),
    ("s4_inner", "s4", 2, 2), ("s4_inner", "s4", 3, 4)])
def test_equivariant(name, group, p, value):
    rep = check_equivariant(corpus_group(group), p, auto(name, group))
    assert rep.lhs == rep.rhs == value


def test_inner_degenerates_to_plain_counts():
    G = corpus_group("s4")
    rep = check_equivariant(G, 2, auto("s4_inner", "s4"))
    assert rep.outer_order == 1
    assert rep.lhs == rep.brauer_count and rep.rhs == rep.weight_count


def test_orbit_count_bruteforce_a5():
    # orbits of <alpha> on 2-regular classes of A5: the two 5A/5B classes fuse
    G = corpus_group("a5")
    a = Automorphism.from_hom(auto("a5_outer", "a5"))
    perm = a.class_permutation()
    regular = [c.index for c in G.conjugacy_classes() if c.order % 2]
    orbits = {frozenset({i, perm[i]}) for i in regular}
    assert len(orbits) == check_equivariant(G, 2, a).lhs


def test_induced_on_quotient_is_automorphism():
    G = corpus_group("s4")
    a = Automorphism.from_hom(auto("s4_inner", "s4"))
    V = G.p_core(2)
    X, induced = induced_on_quotient(G, a, G.whole(), V)
    assert X.order == 6
    assert sorted(induced.mapping.tolist()) == list(range(6))


def test_rejects_foreign_map():
    with pytest.raises(NotAnAutomorphism):
        check_equivariant(corpus_group("a5"), 2, "not an automorphism")
    with pytest.raises(NotAnAutomorphism):
        check_equivariant(corpus_group("s4"), 2, auto("a5_outer", "a5"))
