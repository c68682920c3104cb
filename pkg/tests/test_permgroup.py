import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from sympy.combinatorics import Permutation as SymPerm, PermutationGroup

from conftest import CORPUS, GROUP_NAMES, corpus_group
from oracles import parse_group_file
from weightbench.errors import CapExceeded, ParseError
from weightbench.permgroup import (Automorphism, PermGroup, Permutation, is_prime,
                                   load_automorphism, p_part, parse_group_text)

EXPECTED_ORDERS = {"a4": 12, "a5": 60, "a6": 360, "c2": 2, "c3": 3, "c4": 4, "c5": 5,
                   "c6": 6, "c7": 7, "d12": 12, "d8": 8, "f20": 20, "gl32": 168,
                   "he3": 27, "q8": 8, "s4": 24, "s5": 120, "sl23": 24}


def sympy_group(name):
    degree, gens = parse_group_file(CORPUS / f"{name}.grp")
    return PermutationGroup([SymPerm(list(g)) for g in gens]) if gens else PermutationGroup([SymPerm(degree - 1)])


def perm_strategy(n):
    return st.permutations(list(range(n))).map(lambda xs: Permutation(xs))


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_orders_against_sympy(name):
    G = corpus_group(name)
    assert G.order == EXPECTED_ORDERS[name] == sympy_group(name).order()


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_class_sizes_against_sympy(name):
    G = corpus_group(name)
    ours = sorted(c.size for c in G.conjugacy_classes())
    theirs = sorted(len(c) for c in sympy_group(name).conjugacy_classes())
    assert ours == theirs


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_sylow_and_center_orders(name):
    G = corpus_group(name)
    S = sympy_group(name)
    for p in (2, 3, 5, 7):
        assert G.sylow_subgroup(p).order == p_part(G.order, p)
        if G.order % p == 0:
            assert G.sylow_subgroup(p).order == S.sylow_subgroup(p).order()
    assert G.center().order == S.center().order()


def test_class_ordering_s4():
    G = corpus_group("s4")
    assert [c.size for c in G.conjugacy_classes()] == [1, 3, 6, 8, 6]
    assert [c.order for c in G.conjugacy_classes()] == [1, 2, 2, 3, 4]


def test_identity_is_index_zero():
    for name in GROUP_NAMES:
        G = corpus_group(name)
        assert G.elements[0].is_identity()


@given(perm_strategy(6), perm_strategy(6), perm_strategy(6))
def test_product_associative_and_inverse(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity()
    assert (a ** b) == b.inverse() * a * b


@given(perm_strategy(7))
def test_order_and_cycles(a):
    assert (a ** a.order()).is_identity()
    assert Permutation.parse(str(a), 7) == a


def test_product_convention():
    x = Permutation.from_cycles([[0, 1]], 3)
    y = Permutation.from_cycles([[1, 2]], 3)
    # x first, then y
    assert (x * y).images == (2, 0, 1)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_normalizer_centralizer_bruteforce(data):
    G = corpus_group("s4")
    gens = data.draw(st.lists(st.integers(0, G.order - 1), min_size=1, max_size=2))
    H = G.subgroup(gens)
    N = G.normalizer(H)
    C = G.centralizer(H)
    brute_n = {g for g in range(G.order) if {int(G.conj_by(g)[h]) for h in H.elements} == set(H.elements)}
    brute_c = {g for g in range(G.order) if all(G.mul(g, h) == G.mul(h, g) for h in H.elements)}
    assert set(N.elements) == brute_n
    assert set(C.elements) == brute_c


def test_quotient():
    G = corpus_group("s4")
    V = G.p_core(2)
    assert V.order == 4
    Q, proj = G.quotient_group(V)
    assert Q.order == 6 and len(Q.conjugacy_classes()) == 3
    assert set(proj.kernel().elements) == set(V.elements)


def test_trivial_group_file():
    G = parse_group_text("degree 1\n")
    G.close()
    assert G.order == 1


def test_parse_errors_report_lines():
    with pytest.raises(ParseError) as exc:
        parse_group_text("degree 3\n(0 1)\n(0 5)\n")
    assert exc.value.line == 3
    with pytest.raises(ParseError):
        parse_group_text("degre 3\n")


def test_cap():
    G = corpus_group("s5")
    H = PermGroup(G.generators, degree=G.degree, cap=50)
    with pytest.raises(CapExceeded):
        H.close()


def test_automorphism_files():
    A5 = corpus_group("a5")
    a = Automorphism.from_hom(load_automorphism(CORPUS / "a5_outer.auto", A5))
    assert a.outer_order() == 2 and not a.is_inner()
    S4 = corpus_group("s4")
    b = Automorphism.from_hom(load_automorphism(CORPUS / "s4_inner.auto", S4))
    assert b.is_inner()


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_conjugator():
    G = corpus_group("a5")
    P = G.sylow_subgroup(2)
    g = 17
    Q = G.conjugate_subgroup(P, g)
    x = G.conjugator(P, Q)
    assert G.conjugate_subgroup(P, x).elements == Q.elements
    assert np.count_nonzero(G.transporter_mask(P, Q)) == G.normalizer(P).order
