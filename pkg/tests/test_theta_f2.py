"""The F2 algebra of theta characteristics."""

import random
from collections import Counter

import pytest

from dptheta import lattice as lt, theta_f2 as tf
from dptheta.lattice import ClassKind


def test_class_counts():
    assert len(tf.all_classes()) == 64
    assert len(tf.odd_classes()) == 28
    assert len(tf.even_classes()) == 36


def test_group_structure():
    classes = tf.all_classes()
    ident = tf.IDENTITY
    for a in classes[:10]:
        assert a + a == ident
        for b in classes[:10]:
            assert a + b == b + a


def test_complement_identification():
    assert tf.EvenSubsetClass((1, 2)) == tf.EvenSubsetClass((3, 4, 5, 6, 7, 8))
    assert tf.EvenSubsetClass(range(1, 9)) == tf.IDENTITY


def test_weil_pairing_bilinear():
    classes = tf.all_classes()
    rng = random.Random(2)
    for _ in range(200):
        a, b, c = (rng.choice(classes) for _ in range(3))
        assert tf.weil_pair(a + b, c) \
            == (tf.weil_pair(a, c) + tf.weil_pair(b, c)) % 2


def test_riemann_mumford_exhaustive():
    """q_theta(a + b) + q_theta(a) + q_theta(b) = <a, b> for 10 base thetas
    and all 64 x 64 pairs."""
    classes = tf.all_classes()
    for theta in classes[:10]:
        for a in classes:
            qa = tf.q_theta(theta, a)
            for b in classes:
                assert (tf.q_theta(theta, a + b) + qa
                        + tf.q_theta(theta, b)) % 2 == tf.weil_pair(a, b)


def test_q_theta_zero_counts():
    """An even theta gives 36 zeros, an odd one 28 (genus-3 Arf counts)."""
    classes = tf.all_classes()
    for theta in classes:
        zeros = sum(1 for a in classes if tf.q_theta(theta, a) == 0)
        assert zeros == (36 if theta.parity == 0 else 28)


def test_aronhold_count_and_fibers():
    sets = tf.enumerate_aronhold()
    assert len(sets) == 288
    fibers = Counter(tf.even_theta_of_aronhold(s) for s in sets)
    assert len(fibers) == 36
    assert set(fibers.values()) == {8}


def test_syzygetic_validation():
    odds = tf.odd_classes()
    with pytest.raises(ValueError):
        tf.syzygetic(odds[0], odds[0], odds[1])
    with pytest.raises(ValueError):
        tf.syzygetic(odds[0], odds[1], tf.IDENTITY)


def test_aronhold_validation():
    sets = tf.enumerate_aronhold()
    good = sets[0]
    with pytest.raises(ValueError):
        tf.even_theta_of_aronhold(good[:6])
    # swap in an odd class that breaks asyzygy
    odds = [t for t in tf.odd_classes() if t not in good]
    for cand in odds:
        trial = tuple(sorted(good[:6] + (cand,)))
        if trial not in sets:
            with pytest.raises(ValueError):
                tf.even_theta_of_aronhold(trial)
            break


def test_blowdown_labels():
    """All 576 blow-down classes label Aronhold sets; fibers have size 16
    and Geiser-paired classes agree."""
    lat = lt.make_lattice(2)
    fibers = Counter()
    for bd in lt.enumerate_classes(lat, ClassKind.BLOWDOWN):
        even = tf.even_theta_of_blowdown(lat, bd)
        assert even.parity == 0
        assert even == tf.even_theta_of_blowdown(lat, lt.geiser(lat, bd))
        fibers[even] += 1
    assert len(fibers) == 36
    assert set(fibers.values()) == {16}


def test_make_space_and_arf():
    for g in (1, 2, 3, 4):
        assert tf.arf(tf.make_space(g, 0)) == 0
        assert tf.arf(tf.make_space(g, 1)) == 1


def test_zero_counts():
    assert tf.count_zeros(tf.make_space(3, 0)) == 36
    assert tf.count_zeros(tf.make_space(3, 1)) == 28
    assert tf.count_zeros(tf.make_space(6, 1)) == 2016


def test_shift_by_zero_preserves_arf():
    rng = random.Random(7)
    q = tf.make_space(3, 1)
    zeros = [v for v in range(1 << q.dim) if q.evaluate(v) == 0]
    for _ in range(10):
        shifted = q.shift(rng.choice(zeros))
        assert tf.arf(shifted) == 1


def test_conic_pairs_deterministic():
    assert tf.count_conic_pairs() == (496, 990, 495)


def test_conic_pairs_randomized_invariant():
    for seed in range(20):
        assert tf.count_conic_pairs(random.Random(seed)) == (496, 990, 495)


def test_polarization_random_forms():
    """q(u + v) = q(u) + q(v) + B(u, v) for random forms up to dim 12."""
    rng = random.Random(13)
    for dim in (2, 4, 6, 8, 10, 12):
        rows = tuple(rng.getrandbits(dim) >> i << i for i in range(dim))
        space = tf.QuadraticSpace(dim, rows)
        for _ in range(100):
            u, v = rng.getrandbits(dim), rng.getrandbits(dim)
            bl = space.evaluate(u ^ v) ^ space.evaluate(u) ^ space.evaluate(v)
            full = 0  # polarization of the stored upper-triangular matrix
            for i in range(dim):
                if (u >> i) & 1:
                    full ^= (space.rows[i] & v).bit_count() & 1
                if (v >> i) & 1:
                    full ^= (space.rows[i] & u).bit_count() & 1
            # diagonal contributions appear twice and cancel mod 2
            assert bl == full


def test_odd_label_dictionary():
    """E_i and its Geiser partner D_i share the label {i, 8}; the lines
    L_{i,j} and conics C_{i,j} share {i, j}."""
    lat = lt.make_lattice(2)
    e3 = lt.class_E(lat, 3)
    assert tf._odd_label(e3) == tf.EvenSubsetClass((3, 8))
    assert tf._odd_label(lt.geiser(lat, e3)) == tf.EvenSubsetClass((3, 8))
    l12 = (1, -1, -1, 0, 0, 0, 0, 0)
    assert tf._odd_label(l12) == tf.EvenSubsetClass((1, 2))
    assert tf._odd_label(lt.geiser(lat, l12)) == tf.EvenSubsetClass((1, 2))


def test_all_56_labels_cover_odds():
    lat = lt.make_lattice(2)
    labels = Counter(tf._odd_label(d)
                     for d in lt.enumerate_classes(lat, ClassKind.EXCEPTIONAL))
    assert len(labels) == 28
    assert set(labels.values()) == {2}
