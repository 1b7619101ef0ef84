import random

import pytest

from kleinbraid.braid import gmap, rho, theta
from kleinbraid.kernel import (
    KernelVector,
    c_ab,
    c_agreement,
    expand,
    project,
    q_identity_check,
    rho_ab,
    theta_ab,
    tilde_i,
    tilde_j,
    tilde_o,
    tilde_q,
    tilde_t,
    word_i,
    word_j,
    word_o,
    word_q,
    word_t,
)
from kleinbraid.kleinpi import K_IDENTITY, KleinElt
from kleinbraid.words import ONE, V, comm, parse_word

rng = random.Random(99)


def unit(k, l):
    return KernelVector.unit(k, l)


def rand_kernel_word(span=4, factors=4):
    w = ONE
    for _ in range(rng.randint(1, factors)):
        w = w * expand(rng.randint(-span, span), rng.randint(-span, span)) ** rng.choice((1, -1))
    return w


def test_vector_arithmetic():
    v = KernelVector({(0, 0): 2, (1, -1): -3})
    assert v + (-v) == KernelVector()
    assert 2 * v == v + v
    assert v[(0, 0)] == 2 and v[(5, 5)] == 0
    assert not KernelVector({(3, 3): 0})
    assert str(KernelVector()) == "0"
    assert str(KernelVector({(1, 2): -3, (0, 0): 1})) == "(0,0):1 (1,2):-3"


def test_expand_examples():
    assert expand(0, 0) == parse_word("B")
    assert expand(1, 0) == parse_word("v B v^-1")
    assert expand(0, 2) == parse_word("u^2 B u^-2")
    for k in range(-4, 5):
        for l in range(-4, 5):
            assert gmap(expand(k, l)) == K_IDENTITY


def test_project_examples():
    assert project(expand(2, -1)) == unit(2, -1)
    assert project(ONE) == KernelVector()
    assert project(word_i(1)) == -unit(1, 0)


def test_project_rejects_nonkernel_words():
    with pytest.raises(ValueError):
        project(parse_word("u"))
    with pytest.raises(ValueError):
        project(parse_word("v^2 B"))


def test_project_roundtrip_and_additivity():
    for _ in range(200):
        picks = [
            (rng.randint(-5, 5), rng.randint(-5, 5), rng.choice((1, -1)))
            for _ in range(rng.randint(0, 5))
        ]
        w, vec = ONE, KernelVector()
        for k, l, s in picks:
            w = w * expand(k, l) ** s
            vec = vec + KernelVector({(k, l): s})
        assert project(w) == vec
    for _ in range(50):
        x, y = rand_kernel_word(), rand_kernel_word()
        assert project(x * y) == project(x) + project(y)
        assert not project(comm(x, y))


def test_theta_ab_examples():
    v = KernelVector({(2, 1): 5, (-1, 0): -2})
    assert theta_ab(K_IDENTITY, v) == v
    assert theta_ab(KleinElt(1, 1), unit(0, 0)) == -unit(0, 0)
    assert theta_ab(KleinElt(1, 0), unit(1, 2)) == unit(1, 0)


def test_rho_ab_examples():
    assert rho_ab(unit(0, 0)) == unit(0, 0)
    assert rho_ab(unit(1, 3)) == -unit(-1, 3)
    assert rho_ab(unit(2, 3)) == unit(-2, -3)


def test_c_ab_examples():
    v = KernelVector({(1, 1): 4})
    assert c_ab(0, 0, v) == v
    assert c_ab(1, 1, unit(0, 0)) == unit(1, 1)
    assert c_ab(2, 1, unit(1, 0)) == unit(3, -1)


def test_c_ab_invertible():
    for _ in range(50):
        v = KernelVector(
            {(rng.randint(-4, 4), rng.randint(-4, 4)): rng.randint(-3, 3) for _ in range(4)}
        )
        p, q = rng.randint(-3, 3), rng.randint(-3, 3)
        w = c_ab(p, q, v)
        # undo per basis vector: the l-shift direction depends on the k parity
        undone = KernelVector(
            [((k - p, l - (1 if (k - p) % 2 == 0 else -1) * q), c) for (k, l), c in w.items()]
        )
        assert undone == v


def test_c_agreement_examples():
    assert c_agreement(1, 0, parse_word("B"))
    assert project((V * parse_word("u^0")).conj(parse_word("B"))) == unit(1, 0)
    assert c_agreement(0, 1, expand(1, 1))
    assert c_ab(0, 1, unit(1, 1)) == unit(1, 0)
    for _ in range(60):
        assert c_agreement(rng.randint(-3, 3), rng.randint(-3, 3), rand_kernel_word())


def test_operator_compatibility_random():
    for _ in range(120):
        x = rand_kernel_word()
        t = KleinElt(rng.randint(-3, 3), rng.randint(-3, 3))
        assert project(theta(t, x)) == theta_ab(t, project(x))
        assert project(rho(x)) == rho_ab(project(x))


def test_word_family_examples():
    for k in range(-4, 5):
        assert word_o(k, 0) == ONE
    assert word_q(0, 5) == ONE
    assert word_i(1) == V * (V * parse_word("B")).inv()
    with pytest.raises(ValueError):
        word_t(2, 3)


def test_word_families_live_in_kernel():
    for k in range(-4, 5):
        for r in (0, 1):
            assert gmap(word_t(k, r)) == K_IDENTITY
        assert gmap(word_i(k)) == K_IDENTITY
        for l in range(-4, 5):
            assert gmap(word_o(k, l)) == K_IDENTITY
            assert gmap(word_j(k, l)) == K_IDENTITY
            assert gmap(word_q(k, l)) == K_IDENTITY


def test_tilde_zero_cases():
    assert tilde_i(0) == KernelVector()
    for r in (0, 1):
        assert tilde_t(0, r) == KernelVector()
    for k in range(-3, 4):
        assert tilde_o(k, 0) == tilde_o(0, k) == KernelVector()
        assert tilde_j(k, 0) == tilde_j(0, k) == KernelVector()
    assert tilde_q(0, 3) == KernelVector()


def test_tilde_examples():
    assert tilde_i(1) == -unit(1, 0)
    assert tilde_q(1, 0) == unit(0, 0)


@pytest.mark.parametrize("k", range(-4, 5))
def test_tilde_matches_projection(k):
    for r in (0, 1):
        assert project(word_t(k, r)) == tilde_t(k, r)
    assert project(word_i(k)) == tilde_i(k)
    for l in range(-4, 5):
        assert project(word_o(k, l)) == tilde_o(k, l)
        assert project(word_j(k, l)) == tilde_j(k, l)
        assert project(word_q(k, l)) == tilde_q(k, l)


def test_q_identity():
    assert q_identity_check(1, 0)
    assert q_identity_check(-2, 1)
    assert q_identity_check(3, -2)
    with pytest.raises(ValueError):
        q_identity_check(0, 1)
