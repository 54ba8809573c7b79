import pytest

from qharmonic.algebra import IndexOutOfRange, Poly, Space, SpaceMismatch, q_radius, word, x
from qharmonic.harmonic import xi_basis
from qharmonic.operators import (LinearOperator, chevalley, chevalley_generators, commutator, compose,
                                 diagonal, equal_on, euler, identity, is_zero_on, laplacian, partial,
                                 qhat, xhat)
from qharmonic.scalar import BASIC, ONE, SYMMETRIC, qnum, qpow, tpow
from qharmonic.verify import derivative_relations, euler_relations

q = qpow(1)


def test_partial_examples():
    sp = Space(3)
    assert partial(sp, 1)(x(sp, 1)) == Poly.constant(sp)
    assert partial(sp, 2)(word(sp, [1, 2])) == x(sp, 1)
    # only the correction term survives since nu_3 = 0
    want = ((q - q.inverse()) / (ONE + q)) * qnum(1) * qnum(2) * sp.qrho(1) * qpow(2) * qpow(-2)
    assert partial(sp, 3)(word(sp, [2, 2])) == x(sp, 1).scale(want)
    with pytest.raises(IndexOutOfRange):
        partial(sp, 4)


def test_multiplication_operators():
    sp = Space(3)
    one = Poly.constant(sp)
    Q = q_radius(sp, 1)
    assert xhat(sp, 1)(one) == x(sp, 1)
    assert qhat(sp)(one) == Q
    assert qhat(sp)(x(sp, 1)) == x(sp, 1) * Q == Q * x(sp, 1)


def test_laplacian_examples():
    sp = Space(3)
    assert not laplacian(sp)(x(sp, 1))
    assert laplacian(sp)(q_radius(sp, 1)) == Poly.constant(sp, (ONE + q) * (ONE + q + q ** 2))
    assert laplacian(sp)(q_radius(sp, 1)) == Poly.constant(sp, qnum(2, BASIC) * qnum(3, BASIC))
    for N in (3, 5, 7):
        s = Space(N)
        mid = s.n + 1
        assert laplacian(s)(word(s, [mid, mid])) == Poly.constant(s, q * (ONE + qpow(N - 2)))


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_composed_equals_direct(N):
    sp = Space(N)
    assert not equal_on(laplacian(sp, "composed"), laplacian(sp, "direct"), range(5))


def test_diagonal_examples():
    sp = Space(3)
    p = word(sp, [1, 2])
    assert diagonal(sp, "gamma")(p) == p.scale(2)
    assert diagonal(sp, "c")(p) == p.scale(qpow(2))
    assert diagonal(sp, "c")(Poly.constant(sp)) == Poly.constant(sp)


def test_chevalley_examples():
    sp = Space(3)
    # [nu_2] q^(nu_1 - nu_2 + 3/2) at nu = (0, 1, 0)
    assert chevalley(sp, "E", 1)(x(sp, 2)) == x(sp, 1).scale(tpow(1))
    sp4 = Space(4)
    Kh = chevalley(sp4, "Khat", 1)
    for a in range(3):
        for b in range(3):
            p = word(sp4, [1] * a + [4] * b)
            assert Kh(p) == p.scale(qpow(a - b))
    for N in (3, 4, 5):
        s = Space(N)
        for gen, k in chevalley_generators(s):
            if gen == "E":
                assert not chevalley(s, gen, k)(Poly.constant(s))


def test_euler_examples():
    sp = Space(3)
    E = euler(sp)
    assert not E(Poly.constant(sp))
    assert E(x(sp, 1)) == x(sp, 1)
    for N in (3, 4, 5):
        s = Space(N)
        for l in range(4):
            for _, h in xi_basis(N, l):
                assert euler(s)(h) == h.scale(qnum(l, SYMMETRIC))


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_derivative_relations(N):
    sp = Space(N)
    for name, op in derivative_relations(sp).items():
        assert not is_zero_on(op, range(4)), name
    for name, op in euler_relations(sp).items():
        assert not is_zero_on(op, range(4)), name


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_equivariance(N):
    sp = Space(N)
    L, Qh = laplacian(sp), qhat(sp)
    for gen, k in chevalley_generators(sp):
        g = chevalley(sp, gen, k)
        assert not is_zero_on(commutator(L, g), range(4)), (gen, k)
        assert not is_zero_on(commutator(Qh, g), range(4)), (gen, k)


@pytest.mark.parametrize("N", [3, 4, 5, 6, 7])
def test_ef_commutators(N):
    # [E_k, F_l] vanishes for k != l and is diagonal for k = l
    sp = Space(N)
    n = sp.n
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            c = commutator(chevalley(sp, "E", k), chevalley(sp, "F", l))
            for m in range(3):
                for nu in sp.monomials(m):
                    out = c.on_monomial(nu)
                    if k != l:
                        assert not out
                    else:
                        assert set(out) <= {nu}


def test_mutation_is_detected():
    sp = Space(3)
    d1 = partial(sp, 1)
    wrong = LinearOperator(sp, lambda nu: {m: c * qpow(1) for m, c in d1.on_monomial(nu).items()}, -1)
    assert is_zero_on(wrong - d1, range(3))
    assert not is_zero_on(d1 - d1, range(3))


def test_combinators():
    sp = Space(3)
    d = partial(sp, 1)
    X = xhat(sp, 1)
    assert not commutator(d, d).on_monomial((1, 1, 1))
    # d_1 x_1' = q x_1' d_1
    assert not is_zero_on(compose(d, xhat(sp, 3)) - compose(xhat(sp, 3), d).scale(q), range(5))
    assert (identity(sp) + X)(x(sp, 2)) == x(sp, 2) + word(sp, [1, 2])
    assert (X ** 2)(Poly.constant(sp)) == word(sp, [1, 1])
    with pytest.raises(SpaceMismatch):
        partial(sp, 1) + partial(Space(4), 1)


def test_shift_declared():
    sp = Space(4)
    for op, s in ((partial(sp, 2), -1), (xhat(sp, 3), 1), (laplacian(sp), -2), (qhat(sp), 2)):
        for nu in sp.monomials(3):
            assert all(sum(m) == 3 + s for m in op.on_monomial(nu))
