import random

import pytest

from carterlab.linear.classical import ClassicalGroupSpec, classical_group
from carterlab.linear.matrix import Matrix
from carterlab.linear.projective import (coset_exponent, extend_by_autos,
                                         frobenius_perm, graph_auto_perm,
                                         linear_rep, projective_rep)


def test_psl23_on_four_points():
    act = projective_rep(ClassicalGroupSpec("SL", 2, 3))
    assert act.degree == 4
    assert act.group().order() == 12 == act.image_order()


def test_scalar_maps_to_identity():
    act = projective_rep(ClassicalGroupSpec("SL", 2, 3))
    assert act.perm_of(Matrix.scalar(act.spec.field, 2, 2)).is_identity()


def test_psu32_on_21_points():
    act = projective_rep(ClassicalGroupSpec("SU", 3, 2))
    assert act.degree == 21
    assert act.group().order() == 72


def test_image_order_times_scalars_is_matrix_order():
    for family, n, q in [("SL", 2, 7), ("SL", 3, 2), ("SU", 3, 2), ("Sp", 4, 3)]:
        from carterlab.linear.classical import matrix_group_order, scalar_count
        spec = ClassicalGroupSpec(family, n, q)
        act = projective_rep(spec)
        assert act.group().order() * scalar_count(spec) == matrix_group_order(spec)


def test_homomorphism_on_random_words():
    spec = ClassicalGroupSpec("SL", 2, 9)
    act = projective_rep(spec)
    mats = classical_group(spec)
    rng = random.Random(2)
    for _ in range(100):
        a, b = mats[rng.randrange(len(mats))], mats[rng.randrange(len(mats))]
        assert act.perm_of(a * b) == act.perm_of(a) * act.perm_of(b)


def test_linear_action_is_faithful_for_sl23():
    act = linear_rep(ClassicalGroupSpec("SL", 2, 3))
    assert act.degree == 8
    assert act.group().order() == 24


def test_frobenius_fixes_prime_subline():
    act = projective_rep(ClassicalGroupSpec("SL", 2, 4))
    fr = frobenius_perm(act)
    assert sum(1 for i, j in enumerate(fr) if i == j) == 3  # P1(GF(2))
    assert fr.order() == 2


def test_frobenius_conjugation_is_entrywise_power():
    spec = ClassicalGroupSpec("SL", 2, 8)
    act = projective_rep(spec)
    fr = frobenius_perm(act)
    mats = classical_group(spec)
    rng = random.Random(3)
    word = Matrix.identity(spec.field, 2)
    for _ in range(100):
        word = word * mats[rng.randrange(len(mats))]
        assert act.perm_of(word).conjugate(fr) == act.perm_of(word.frobenius())


def test_pgammal28_order():
    act = projective_rep(ClassicalGroupSpec("SL", 2, 8))
    G = act.group()
    fr = frobenius_perm(act)
    ext = extend_by_autos(G, [fr])
    assert G.order() == 504 and ext.order() == 1512
    assert coset_exponent(G, fr, 3, fr) == 1
    assert coset_exponent(G, fr, 3, fr * fr) == 2
    assert coset_exponent(G, fr, 3, G.generators[0]) == 0


def test_psl2_27_frobenius_extension():
    act = projective_rep(ClassicalGroupSpec("SL", 2, 27))
    G = act.group()
    fr = frobenius_perm(act)
    assert G.order() == 9828 and fr.order() == 3
    assert extend_by_autos(G, [fr]).order() == 29484


def test_graph_automorphism_duality():
    spec = ClassicalGroupSpec("SL", 3, 2)
    act = projective_rep(spec, include_hyperplanes=True)
    assert act.degree == 14
    tau = graph_auto_perm(act)
    assert (tau * tau).is_identity()
    # swaps the blocks
    assert all(tau[i] >= 7 for i in range(7)) and all(tau[i] < 7 for i in range(7, 14))
    G = act.group()
    assert G.order() == 168
    assert extend_by_autos(G, [tau]).order() == 336
    for m in classical_group(spec):
        assert act.perm_of(m).conjugate(tau) == act.perm_of(m.transpose().inverse())


def test_graph_auto_needs_dual_block_and_rank():
    with pytest.raises(ValueError):
        graph_auto_perm(projective_rep(ClassicalGroupSpec("SL", 3, 2)))
    with pytest.raises(ValueError):
        graph_auto_perm(projective_rep(ClassicalGroupSpec("SL", 2, 3),
                                       include_hyperplanes=True))


def test_extend_by_autos_validates_normalization():
    from carterlab.permgrp.perm import Perm
    act = projective_rep(ClassicalGroupSpec("SL", 2, 3))
    G = act.group()
    bad = Perm.from_cycles(G.degree, [(0, 1)])
    if any(g.conjugate(bad) not in G for g in G.generators):
        with pytest.raises(ValueError):
            extend_by_autos(G, [bad])
    assert extend_by_autos(G, [G.identity()]) is G
