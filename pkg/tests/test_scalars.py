import random
from fractions import Fraction

import pytest

from nicholsq.scalars import (
    CyclotomicNumber,
    NotAUnit,
    Scalar,
    Specialization,
    cyclotomic_polynomial,
    parse_scalar,
)


def test_omega_is_a_cube_root():
    w = Scalar.omega()
    assert (w * w * w).is_one()
    assert (Scalar.one() + w + w * w).is_zero()


def test_minus_q1_q2_is_omega():
    assert -(Scalar.q() * Scalar.q2()) == Scalar.omega()


def test_minus_omega_squared_has_order_six():
    s = -(Scalar.omega() ** 2)
    assert (s ** 6).is_one()
    for k in range(1, 6):
        assert not (s ** k).is_one()


def test_inverse_of_q():
    assert Scalar.q().inverse() == Scalar.q(-1)


def test_inverse_of_minus_omega_squared():
    s = -(Scalar.omega() ** 2)
    assert s.inverse() == -Scalar.omega()
    assert (s * s.inverse()).is_one()


def test_non_monomial_is_not_a_unit():
    with pytest.raises(NotAUnit):
        (Scalar.one() + Scalar.q()).inverse()


def _random_scalar(rng, nterms=3, span=4):
    c = {}
    for _ in range(rng.randrange(nterms + 1)):
        k = rng.randrange(-span, span + 1)
        c[k] = (Fraction(rng.randrange(-5, 6), rng.randrange(1, 4)),
                Fraction(rng.randrange(-5, 6), rng.randrange(1, 4)))
    return Scalar(c)


def test_field_axioms_randomized():
    rng = random.Random(20240901)
    for _ in range(1000):
        a = _random_scalar(rng)
        b = _random_scalar(rng)
        c = _random_scalar(rng)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a


def test_monomial_units_invert_randomized():
    rng = random.Random(7)
    for _ in range(200):
        k = rng.randrange(-6, 7)
        a = Fraction(rng.randrange(-5, 6))
        b = Fraction(rng.randrange(-5, 6))
        if not (a or b):
            a = Fraction(1)
        u = Scalar.monomial(k, a, b)
        assert (u * u.inverse()).is_one()


def test_canonical_form_idempotent():
    s = Scalar({0: (1, 1), 2: (0, 0)})
    again = Scalar(s.c)
    assert s == again
    assert 2 not in s.c


def test_render_parse_round_trip():
    rng = random.Random(99)
    samples = [
        Scalar.zero(),
        Scalar.one(),
        -Scalar.one(),
        Scalar.omega(),
        Scalar.q(-12),
        Scalar.q2(),
        Scalar.of(Fraction(3, 7)) + Scalar.monomial(2, Fraction(-1, 2), 5),
    ]
    samples += [_random_scalar(rng) for _ in range(100)]
    for s in samples:
        assert parse_scalar(str(s)) == s


def test_parse_accepts_plain_grammar():
    assert parse_scalar("-1+1*w*q^2") == Scalar.of(-1) + Scalar.omega() * Scalar.q(2)
    assert parse_scalar("1/2") == Scalar.of(Fraction(1, 2))
    assert parse_scalar("(1+1*w)*q^-3") == (Scalar.one() + Scalar.omega()) * Scalar.q(-3)


# -- cyclotomic numbers -----------------------------------------------------


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_zeta_orders():
    for n in (3, 4, 6, 12, 24):
        z = CyclotomicNumber.zeta(n)
        assert z.multiplicative_order() == n
        assert (z ** n).is_one()


def test_cyclotomic_inverse():
    rng = random.Random(5)
    for n in (3, 5, 12):
        for _ in range(25):
            x = CyclotomicNumber(n, [Fraction(rng.randrange(-4, 5), rng.randrange(1, 3))
                                     for _ in range(len(cyclotomic_polynomial(n)) - 1)])
            if x.is_zero():
                continue
            assert (x * x.inverse()).is_one()


# -- specialization ---------------------------------------------------------


def test_specialize_q2_at_omega_is_minus_one():
    sp = Specialization.q1_to_omega(12)
    img = sp.apply(Scalar.q2())
    assert img == -CyclotomicNumber.one(12)


def test_specialize_omega_is_primitive_cube_root():
    sp = Specialization.q1_to_omega(12)
    img = sp.apply(Scalar.omega())
    assert img.multiplicative_order() == 3


def test_specialize_q_power_72():
    sp = Specialization.q1_to_omega(12)
    assert sp.apply(Scalar.q(72)).is_one()


def test_specialize_is_ring_hom_randomized():
    sp = Specialization.q1_to_omega(12)
    rng = random.Random(11)
    for _ in range(500):
        a = _random_scalar(rng)
        b = _random_scalar(rng)
        assert sp.apply(a * b) == sp.apply(a) * sp.apply(b)
        assert sp.apply(a + b) == sp.apply(a) + sp.apply(b)


def test_specialization_rejects_bad_omega():
    with pytest.raises(ValueError):
        Specialization(12, CyclotomicNumber.zeta(12, 1), CyclotomicNumber.one(12))
    with pytest.raises(ValueError):
        Specialization(4, CyclotomicNumber.zeta(4))
