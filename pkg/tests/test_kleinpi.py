import random

import pytest

from kleinbraid.kleinpi import (
    K_IDENTITY,
    KleinElt,
    delta,
    eps,
    i2,
    kinv,
    kmul,
    omega,
    parse_klein,
    sign_of,
    theta2,
)


def test_kmul_examples():
    assert kmul(KleinElt(1, 0), KleinElt(0, 1)) == KleinElt(1, 1)
    # eps(1) = -1 twists the first coordinate
    assert kmul(KleinElt(0, 1), KleinElt(1, 0)) == KleinElt(-1, 1)
    a = KleinElt(5, -3)
    assert kmul(a, kinv(a)) == K_IDENTITY


def test_kinv_examples():
    assert kinv(KleinElt(1, 0)) == KleinElt(-1, 0)
    assert kinv(KleinElt(0, 1)) == KleinElt(0, -1)
    # solved by hand from (3,1)(x,y) = (0,0)
    assert kinv(KleinElt(3, 1)) == KleinElt(3, -1)


def test_associativity_grid():
    grid = [KleinElt(m, n) for m in range(-10, 11, 5) for n in range(-10, 11, 5)]
    for a in grid:
        for b in grid:
            for c in grid:
                assert kmul(kmul(a, b), c) == kmul(a, kmul(b, c))


def test_indicators():
    assert delta(4) == 0 and delta(-3) == 1
    assert eps(-1) == -1
    assert sign_of(0) == 0 and sign_of(7) == 1 and sign_of(-2) == -1
    assert omega(0) == 1 and omega(3) == 0 and omega(-1) == 0


def test_indicator_identities():
    for n in range(-10, 11):
        assert delta(n) + delta(n + 1) == 1
        assert 1 - eps(n) == 2 * delta(n)
        for n2 in range(-10, 11):
            assert eps(n) * eps(n2) == eps(n + n2)


def test_i2_theta2():
    assert i2(1, 0) == KleinElt(1, 0)
    assert i2(0, 1) == KleinElt(0, 2)
    assert theta2(KleinElt(5, 3)) == 1
    assert theta2(i2(5, 3)) == 0
    # injectivity of i2 on a grid
    images = {(p, q): i2(p, q) for p in range(-5, 6) for q in range(-5, 6)}
    assert len(set(images.values())) == len(images)


def test_exactness_on_grid():
    image = {i2(p, q) for p in range(-10, 11) for q in range(-10, 11)}
    for m in range(-10, 11):
        for n in range(-10, 11):
            x = KleinElt(m, n)
            assert (theta2(x) == 0) == (x in image)


def test_pow_and_parse():
    assert KleinElt(1, 0) ** 3 == KleinElt(3, 0)
    assert KleinElt(0, 1) ** 2 == KleinElt(0, 2)
    assert KleinElt(1, 1) ** -1 == kinv(KleinElt(1, 1))
    assert parse_klein("(3, -4)") == KleinElt(3, -4)
    assert parse_klein(str(KleinElt(-2, 7))) == KleinElt(-2, 7)
    with pytest.raises(ValueError):
        parse_klein("3,-4")


def test_random_inverse_law():
    rng = random.Random(5)
    for _ in range(200):
        a = KleinElt(rng.randint(-20, 20), rng.randint(-20, 20))
        assert kmul(kinv(a), a) == K_IDENTITY
