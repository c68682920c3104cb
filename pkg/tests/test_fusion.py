import functools

import pytest

from conftest import CORPUS, corpus_group, corpus_pairs
from oracles import TableGroup, is_centric, is_f_radical
from weightbench.fusion import (automizer, automizer_acts_faithfully, is_centric as pkg_centric,
                                is_dade_radical, is_radical, morphism_count, normalizer_radicals_check,
                                p_subgroup_classes, subgroups_of, validate_frobenius_axioms)


@functools.lru_cache(maxsize=None)
def oracle_group(name):
    return TableGroup.from_file(CORPUS / f"{name}.grp")


SMALL = [(n, p) for n, p in corpus_pairs() if corpus_group(n).order <= 168]


@pytest.mark.parametrize("name,p", SMALL)
def test_class_count_matches_oracle(name, p):
    O = oracle_group(name)
    F = p_subgroup_classes(corpus_group(name), p)
    assert len(F.classes) == len(O.orbit_reps(O.p_subgroups(p)))


@pytest.mark.parametrize("name,p", SMALL)
def test_flags_match_oracle(name, p):
    G = corpus_group(name)
    O = oracle_group(name)
    assert [tuple(x.images) for x in G.elements] == O.perms
    for c in p_subgroup_classes(G, p).classes:
        Q = c.representative.elements
        assert c.centric == is_centric(O, p, Q)
        assert c.f_radical == is_f_radical(O, p, Q)
        assert c.dade_radical == (O.p_core(p, O.normalizer(Q)) == Q)


def test_s4_p2_classes():
    F = p_subgroup_classes(corpus_group("s4"), 2)
    assert [c.order for c in F.classes] == [1, 2, 2, 4, 4, 4, 8]
    assert [c.order for c in F.classes if c.centric] == [4, 4, 4, 8]
    assert [c.order for c in F.classes if c.dade_radical] == [4, 8]


def test_subgroups_of_d8():
    G = corpus_group("d8")
    assert len(subgroups_of(G, G.whole())) == 10


def test_fully_normalized_representatives():
    G = corpus_group("a6")
    F = p_subgroup_classes(G, 2)
    P = F.sylow
    for c in F.classes:
        best = max(len(G.normalizer(M).elements & P.elements) for M in c.members)
        assert len(c.normalizer.elements & P.elements) == best
        assert c.representative.elements <= P.elements


@pytest.mark.parametrize("name,p", corpus_pairs())
def test_axioms(name, p):
    rep = validate_frobenius_axioms(corpus_group(name), p)
    assert rep["passed"] and rep["exhaustive"]


@pytest.mark.parametrize("name,p", corpus_pairs())
def test_normalizer_radicals(name, p):
    assert normalizer_radicals_check(corpus_group(name), p)["passed"]


def test_morphism_counts():
    G = corpus_group("s4")
    F = p_subgroup_classes(G, 2)
    V = next(c.representative for c in F.classes if c.order == 4 and G.is_normal(c.representative))
    assert morphism_count(G, 2, V, V) == 6
    P = F.sylow
    assert morphism_count(G, 2, P, P) == 4  # Inn(D8)
    T = F.classes[0].representative
    assert morphism_count(G, 2, P, T) == 1


def test_public_predicates():
    G = corpus_group("a5")
    P = G.sylow_subgroup(2)
    assert pkg_centric(G, 2, P) and is_radical(G, 2, P) and is_dade_radical(G, 2, P)
    A, proj = automizer(G, 2, P)
    assert A.order == 3
    assert automizer_acts_faithfully(G, 2, P)
    assert not is_radical(G, 2, G.trivial())
    assert is_dade_radical(G, 2, G.trivial())


def test_json_shape():
    data = p_subgroup_classes(corpus_group("s4"), 2).to_json()
    n = len(data["classes"])
    assert len(data["morphism_counts"]) == n and len(data["inclusion"]) == n
