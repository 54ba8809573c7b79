from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qharmonic.scalar import (BASIC, ONE, SYMMETRIC, ZERO, PoleAtPoint, QScalar,
                              little_q_jacobi_coefficients, phi21, phi21_coefficients, qdouble_factorial,
                              qfactorial, qnum, qpochhammer, qpow, tpow)

q = qpow(1)


@st.composite
def scalars(draw, nonzero=False):
    num = draw(st.lists(st.integers(-4, 4), min_size=1, max_size=4))
    den = draw(st.lists(st.integers(-4, 4), min_size=1, max_size=3).filter(any))
    s = QScalar(num, den)
    if nonzero and s.is_zero():
        s = ONE
    return s


def test_canonical_form():
    s = QScalar([2, 2], [4, 4])  # (2 + 2t)/(4 + 4t)
    assert s == QScalar(Fraction(1, 2))
    assert QScalar([0], [5]) == ZERO
    neg = QScalar([1], [-1, 0, -1])
    assert int(neg.den.coeffs()[-1]) > 0
    assert (q - q).num == 0 and (q - q).den == 1


def test_qnum_examples():
    assert qnum(0, BASIC) == ZERO
    assert qnum(3, BASIC) == ONE + q + q ** 2
    assert qnum(2, SYMMETRIC) == q + q.inverse()


def test_factorials():
    assert qfactorial(0) == ONE
    assert qfactorial(2) == ONE + q
    assert qdouble_factorial(4) == qnum(4) * qnum(2)


def test_pochhammer_examples():
    assert qpochhammer(q ** 5, q ** 2, 0) == ONE
    assert qpochhammer(qpow(-2), qpow(2), 1) == ONE - qpow(-2)
    assert qpochhammer(qpow(-2), qpow(2), 2) == ZERO


def test_phi21_examples():
    assert phi21_coefficients(ONE, q, q ** 3, q ** 2) == [ONE]
    c = phi21_coefficients(qpow(-2), qpow(-1), qpow(-3), qpow(2))
    # k = 2 already carries the vanishing factor (1 - q^-2 q^2)
    assert len(c) == 2
    assert c[1] == (ONE - qpow(-2)) * (ONE - qpow(-1)) / ((ONE - qpow(2)) * (ONE - qpow(-3)))
    assert phi21(qpow(-2), qpow(-1), qpow(-3), qpow(2), ZERO) == ONE


def test_phi21_vanishing_denominator():
    with pytest.raises(ZeroDivisionError):
        phi21_coefficients(qpow(-4), q, qpow(-2), qpow(2))


def test_little_q_jacobi():
    assert little_q_jacobi_coefficients(0, Fraction(1, 2), 0) == [ONE]
    al, be = Fraction(3, 2), Fraction(1, 2)
    c = little_q_jacobi_coefficients(1, al, be)
    assert c[0] == ONE
    # (1 - q^-1)/(1 - q) = -1/q cancels the q in the argument q x
    assert c[1] == -(ONE - qpow(al + be + 2)) / (ONE - qpow(al + 1))
    assert little_q_jacobi_coefficients(1, al, be, base_exp=2)[1] == \
        -(ONE - qpow(2 * (al + be + 2))) / (ONE - qpow(2 * (al + 1)))


def test_eval_at():
    assert (ONE + q).eval_at(1) == 2
    assert ((ONE - q ** 2) / (ONE - q)).eval_at(2) == 5
    with pytest.raises(PoleAtPoint):
        (ONE / (ONE - q)).eval_at(1)


def test_half_integer_powers_and_printing():
    assert qpow(Fraction(1, 2)) == tpow(1)
    assert str(tpow(1) + tpow(3)) == "q^(1/2) + q^(3/2)"
    assert str(q.inverse()) == "1/q"
    with pytest.raises(ValueError):
        qpow(Fraction(1, 3))


@pytest.mark.parametrize("a", range(-8, 9))
def test_symmetric_bracket_identities(a):
    assert (q - q.inverse()) * qnum(a, SYMMETRIC) == qpow(a) - qpow(-a)
    assert qnum(a, SYMMETRIC) == qpow(1 - a) * (ONE - qpow(2 * a)) / (ONE - qpow(2))


def test_factorial_ratio_as_pochhammers():
    for m in range(9):
        for k in range(m // 2 + 1):
            lhs = qfactorial(m) / qfactorial(m - 2 * k)
            rhs = (qpochhammer(qpow(m - 2 * k + 2), qpow(2), k)
                   * qpochhammer(qpow(m - 2 * k + 1), qpow(2), k) / (ONE - q) ** (2 * k))
            assert lhs == rhs


def test_double_factorial_as_pochhammer():
    for k in range(7):
        assert qdouble_factorial(2 * k) == qpochhammer(qpow(2), qpow(2), k) / (ONE - q) ** k


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars(nonzero=True))
def test_division_roundtrip(a, b):
    assert (a * b) / b == a
    assert b * b.inverse() == ONE


@settings(max_examples=40, deadline=None)
@given(scalars(), scalars(), st.fractions(min_value=-3, max_value=3, max_denominator=7))
def test_eval_is_homomorphism(a, b, t0):
    try:
        va, vb, vs, vp = a.eval_at(t0), b.eval_at(t0), (a + b).eval_at(t0), (a * b).eval_at(t0)
    except PoleAtPoint:
        return
    assert vs == va + vb
    assert vp == va * vb
