import random

import pytest

from carterlab.permgrp import bruteforce as bf
from carterlab.permgrp.group import PermGroup
from carterlab.permgrp.perm import Perm
from carterlab.permgrp.search import (are_conjugate_elements,
                                      are_conjugate_subgroups,
                                      canonical_of_cycle_type,
                                      centralizer_in_sym, conjugacy_classes,
                                      element_centralizer, subgroup_centralizer,
                                      subgroup_normalizer)

from conftest import corpus_upto


def S(n):
    return PermGroup.symmetric(n)


def cyc(n, *cycles):
    return Perm.from_cycles(n, cycles)


# ---------------------------------------------------------------- normalizer

def test_normalizer_of_c4_in_sym4_is_dihedral():
    C4 = PermGroup([cyc(4, (0, 1, 2, 3))], 4)
    N = subgroup_normalizer(S(4), C4)
    assert N.order() == 8


def test_normalizer_of_c3_in_alt4_is_itself():
    A4 = PermGroup.alternating(4)
    C3 = PermGroup([cyc(4, (0, 1, 2))], 4)
    assert subgroup_normalizer(A4, C3).order() == 3


def test_normalizer_of_whole_group():
    G = S(4)
    assert subgroup_normalizer(G, G).same_group_as(G)


def test_normalizer_requires_subgroup():
    with pytest.raises(ValueError):
        subgroup_normalizer(PermGroup.alternating(4),
                            PermGroup([cyc(4, (0, 1))], 4))


def test_normalizer_matches_brute_force_on_corpus(corpus):
    for spec, G in corpus_upto(corpus, 2000).items():
        for g in G.generators[:2]:
            H = PermGroup([g], G.degree)
            fast = subgroup_normalizer(G, H)
            slow = bf.brute_normalizer(G, H)
            assert fast.same_group_as(slow), spec


# ---------------------------------------------------------------- centralizer

def test_centralizer_corpus_examples():
    assert subgroup_centralizer(S(4), cyc(4, (0, 1), (2, 3))).order() == 8
    assert subgroup_centralizer(S(5), cyc(5, (0, 1, 2))).order() == 6
    G = S(4)
    assert subgroup_centralizer(G, Perm.identity(4)).same_group_as(G)


def test_centralizer_matches_brute_force_on_corpus(corpus):
    for spec, G in corpus_upto(corpus, 2000).items():
        for g in G.generators[:2]:
            fast = element_centralizer(G, g)
            slow = bf.brute_centralizer(G, g)
            assert fast.same_group_as(slow), spec


def test_subgroup_centralizer_intersects_element_centralizers():
    G = S(5)
    H = PermGroup([cyc(5, (0, 1)), cyc(5, (2, 3))], 5)
    C = subgroup_centralizer(G, H)
    assert C.same_group_as(bf.brute_centralizer(G, list(H.generators)))


# ---------------------------------------------------------------- conjugacy

def test_conjugate_elements_found_and_replayed():
    G = S(5)
    x, y = cyc(5, (0, 1, 2)), cyc(5, (2, 3, 4))
    g = are_conjugate_elements(G, x, y)
    assert g is not None and x.conjugate(g) == y


def test_conjugacy_respects_cycle_type():
    G = S(4)
    assert are_conjugate_elements(G, cyc(4, (0, 1)), cyc(4, (0, 1), (2, 3))) is None


def test_conjugate_elements_identity_case():
    G = S(4)
    x = cyc(4, (0, 1, 2))
    assert are_conjugate_elements(G, x, x).is_identity()


def test_conjugacy_requires_membership():
    with pytest.raises(ValueError):
        are_conjugate_elements(PermGroup.alternating(4),
                               cyc(4, (0, 1)), cyc(4, (2, 3)))


def test_conjugacy_matches_brute_on_corpus(corpus):
    rng = random.Random(4)
    for spec, G in corpus_upto(corpus, 1200).items():
        els = sorted(G.elements())
        for _ in range(3):
            x, y = rng.choice(els), rng.choice(els)
            fast = are_conjugate_elements(G, x, y)
            slow = bf.brute_conjugator(G, x, y)
            assert (fast is None) == (slow is None), spec
            if fast is not None:
                assert x.conjugate(fast) == y


def test_subgroup_conjugacy():
    G = S(4)
    H1 = PermGroup([cyc(4, (0, 1))], 4)
    H2 = PermGroup([cyc(4, (2, 3))], 4)
    H3 = PermGroup([cyc(4, (0, 1), (2, 3))], 4)
    g = are_conjugate_subgroups(G, H1, H2)
    assert g is not None and all(h.conjugate(g) in H2 for h in H1.generators)
    assert are_conjugate_subgroups(G, H1, H3) is None


def test_sylow_subgroups_are_conjugate():
    from carterlab.permgrp.sylow import sylow_subgroup
    G = S(3)
    S1 = sylow_subgroup(G, 2)
    S2 = PermGroup([g.conjugate(cyc(3, (0, 1, 2))) for g in S1.generators], 3)
    assert are_conjugate_subgroups(G, S1, S2) is not None


# ---------------------------------------------------------------- classes

def test_class_structure_of_sym3():
    classes = conjugacy_classes(S(3))
    assert sorted(size for _, size in classes) == [1, 2, 3]


def test_class_structure_of_trivial_group():
    assert len(conjugacy_classes(PermGroup.trivial(3))) == 1


def test_class_sizes_sum_and_reps_canonical(corpus):
    for spec, G in corpus_upto(corpus, 2500).items():
        classes = conjugacy_classes(G)
        assert sum(size for _, size in classes) == G.order(), spec
        for rep, _ in classes:
            assert rep in G


# ---------------------------------------------------------------- sym centralizer

def test_centralizer_in_sym_formula_cases():
    gens, order = centralizer_in_sym(4, [2, 2])
    assert order == 8 and PermGroup(gens, 4).order() == 8
    gens, order = centralizer_in_sym(5, [3])
    assert order == 6 and PermGroup(gens, 5).order() == 6
    gens, order = centralizer_in_sym(4, [])
    assert order == 24 and PermGroup(gens, 4).order() == 24


def test_centralizer_in_sym_agrees_with_backtrack():
    for n, ctype in [(4, [2, 2]), (5, [3]), (6, [2, 3]), (6, [6]),
                     (7, [2, 2, 3]), (6, [2, 2])]:
        gens, order = centralizer_in_sym(n, ctype)
        built = PermGroup(gens, n)
        assert built.order() == order
        y = canonical_of_cycle_type(n, ctype)
        searched = subgroup_centralizer(PermGroup.symmetric(n), y)
        assert built.same_group_as(searched), (n, ctype)


def test_centralizer_in_sym_rejects_bad_types():
    with pytest.raises(ValueError):
        centralizer_in_sym(4, [3, 3])
    with pytest.raises(ValueError):
        centralizer_in_sym(4, [0])
