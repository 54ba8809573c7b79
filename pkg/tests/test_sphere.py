from fractions import Fraction

import pytest

from qharmonic.algebra import Poly, Space, SpaceMismatch, q_radius, word, x
from qharmonic.harmonic import project, xi_basis, zonal
from qharmonic.scalar import ONE, ZERO, qpow
from qharmonic.sphere import gram, h_functional, h_monomial, inner, off_diagonal_entries, on_diagonal

q = qpow(1)


def test_h_examples():
    sp = Space(3)
    assert h_functional(Poly.constant(sp)) == ONE
    assert h_functional(q_radius(sp, 1)) == ONE
    assert h_functional(x(sp, 1)) == ZERO
    assert h_monomial(sp, (1, 1, 0)) == ZERO
    assert not on_diagonal(sp, (0, 1, 0))
    assert on_diagonal(sp, (1, 2, 1))


def test_inner_examples():
    sp = Space(3)
    d = ONE + q + q ** 2
    for i in (1, 2, 3):
        assert inner(x(sp, i), x(sp, i)) == q / d
    assert inner(x(sp, 1), x(sp, 2)) == ZERO
    sp4 = Space(4)
    assert inner(x(sp4, 1), x(sp4, 1)) == q ** 2 / (ONE + q ** 2) ** 2
    # classical sphere averages at q = 1
    assert inner(x(sp, 1), x(sp, 1)).eval_at(1) == Fraction(1, 3)
    assert inner(x(sp4, 1), x(sp4, 1)).eval_at(1) == Fraction(1, 4)
    with pytest.raises(SpaceMismatch):
        inner(x(sp, 1), x(sp4, 1))


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_q_invariance(N):
    sp = Space(N)
    Q = q_radius(sp, 1)
    for m in range(4):
        for nu in sp.monomials(m):
            a = Poly.monomial(sp, nu)
            assert h_functional(Q * a) == h_functional(a)


def test_gram_examples():
    sp = Space(3)
    assert gram([Poly.constant(sp)]) == [[ONE]]
    G = gram([p for _, p in xi_basis(3, 1)])
    assert G == [[q / (ONE + q + q ** 2) if i == j else ZERO for j in range(3)] for i in range(3)]
    assert gram([]) == []
    with pytest.raises(SpaceMismatch):
        gram([x(sp, 1), x(Space(4), 1)])


@pytest.mark.parametrize("N,M", [(3, 3), (4, 3), (5, 2), (6, 2)])
def test_basis_orthogonal_across_degrees(N, M):
    basis = [p for m in range(M + 1) for _, p in xi_basis(N, m)]
    G = gram(basis)
    assert off_diagonal_entries(G) == []
    for i in range(len(G)):
        assert G[i][i].eval_at(Fraction(4, 5)) > 0


def test_zonal_orthogonal():
    ps = [zonal(4, a, b) for a in range(3) for b in range(3 - a)]
    assert off_diagonal_entries(gram(ps)) == []


def test_harmonic_orthogonal_to_q_multiples():
    sp = Space(4)
    h = project(word(sp, [1, 1]))
    assert inner(q_radius(sp, 1), h) == ZERO
    assert inner(h, q_radius(sp, 1)) == ZERO
