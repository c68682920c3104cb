import pytest

from conftest import CORPUS, GROUP_NAMES, corpus_group, corpus_pairs
from oracles import TableGroup, character_degrees, defect_zero
from weightbench.chartab import (block_distribution, character_table, defect_zero_count,
                                 fixed_character_count, fixed_characters, p_regular_classes)
from weightbench.cyclotomic import Cyclotomic
from weightbench.permgroup import Automorphism, load_automorphism

AUTOS = {"a5_outer": "a5", "a6_outer": "a6", "s4_inner": "s4"}


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_orthogonality(name):
    tab = character_table(corpus_group(name))
    assert tab.check_orthogonality()
    assert sum(d * d for d in tab.degrees) == tab.order
    assert len(tab) == len(tab.classes)


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_degrees_match_numeric_oracle(name):
    tab = character_table(corpus_group(name))
    assert sorted(tab.degrees) == character_degrees(TableGroup.from_file(CORPUS / f"{name}.grp"))


@pytest.mark.parametrize("name", ["s4", "a5", "gl32", "he3"])
def test_permutation_character_decomposes(name):
    G = corpus_group(name)
    tab = character_table(G)
    els = G.elements
    pi = [Cyclotomic.rational(tab.exponent, sum(1 for i in range(G.degree) if els[c.rep].images[i] == i))
          for c in tab.classes]
    mult = [tab.inner_product(pi, chi) for chi in tab.irreducibles]
    assert all(m.is_rational() and m.to_rational() >= 0 and m.to_rational().denominator == 1 for m in mult)
    assert mult[0] == 1  # transitive action


def test_a5_table():
    tab = character_table(corpus_group("a5"))
    assert tab.degrees == [1, 3, 3, 4, 5]
    assert all(v == 1 for v in tab.irreducibles[0])
    row = tab.irreducibles[1]
    # a degree-3 character takes the values (1 +- sqrt 5)/2 on the 5-cycles
    got = sorted(round(v.to_complex().real, 9) for v in (row[3], row[4]))
    assert got == [round((1 - 5 ** 0.5) / 2, 9), round((1 + 5 ** 0.5) / 2, 9)]
    assert all(v.is_integral() for v in row)
    assert sum(abs(v.to_complex()) ** 2 * s for v, s in zip(row, tab.class_sizes)) == pytest.approx(60)


def test_c2_table():
    tab = character_table(corpus_group("c2"))
    assert [[v.to_rational() for v in row] for row in tab.irreducibles] == [[1, 1], [1, -1]]


@pytest.mark.parametrize("name,p", corpus_pairs())
def test_defect_zero_counts_match_oracle(name, p):
    assert defect_zero_count(corpus_group(name), p) == defect_zero(
        TableGroup.from_file(CORPUS / f"{name}.grp"), p)


def test_blocks_a5_p2():
    G = corpus_group("a5")
    tab = character_table(G)
    dist = block_distribution(G, 2)
    by_degree = sorted(sorted(tab.degrees[i] for i in b) for b in dist.blocks)
    assert by_degree == [[1, 3, 3, 5], [4]]
    assert sorted(dist.defects) == [0, 2]
    assert 0 in dist.blocks[dist.principal]


def test_blocks_s4_p3():
    G = corpus_group("s4")
    tab = character_table(G)
    dist = block_distribution(G, 3)
    assert sorted(sorted(tab.degrees[i] for i in b) for b in dist.blocks) == [[1, 1, 2], [3], [3]]


@pytest.mark.parametrize("name,p", corpus_pairs())
def test_blocks_partition_and_defect_zero(name, p):
    G = corpus_group(name)
    dist = block_distribution(G, p)
    flat = sorted(i for b in dist.blocks for i in b)
    assert flat == list(range(len(character_table(G))))
    assert len(dist.defect_zero_blocks()) == defect_zero_count(G, p)


def test_coprime_prime_gives_singletons():
    G = corpus_group("a5")
    dist = block_distribution(G, 7)
    assert all(len(b) == 1 for b in dist.blocks)
    assert len(p_regular_classes(G, 7)) == 5


@pytest.mark.parametrize("auto,name", sorted(AUTOS.items()))
def test_permutation_lemma(auto, name):
    G = corpus_group(name)
    a = Automorphism.from_hom(load_automorphism(CORPUS / f"{auto}.auto", G))
    n = fixed_character_count(G, a)
    if a.is_inner():
        assert n == len(G.conjugacy_classes())
    else:
        assert n < len(G.conjugacy_classes())
    assert fixed_characters(G, a) == sorted(fixed_characters(G, a))


def test_a5_outer_fixes_three():
    G = corpus_group("a5")
    a = Automorphism.from_hom(load_automorphism(CORPUS / "a5_outer.auto", G))
    assert fixed_character_count(G, a) == 3
