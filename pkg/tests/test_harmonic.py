import pytest

from qharmonic.algebra import InvalidDimension, Poly, Space, q_radius, word, x
from qharmonic.harmonic import (DegreeMismatch, NotHomogeneous, closed_form_middle, dim_full,
                                dim_harmonic, embed, enumerate_labels, harmonic_decompose,
                                is_harmonic, middle_coefficients, middle_jacobi_coefficients,
                                middle_jacobi_parameters, project, reconstruct, t_poly, xi_basis,
                                zonal)
from qharmonic.linalg import rank_of_polys
from qharmonic.operators import laplacian
from qharmonic.scalar import ONE, SYMMETRIC, qnum, qpow, tpow
from qharmonic.textio import parse_poly

q = qpow(1)


def test_dims_examples():
    assert (dim_full(3, 2), dim_harmonic(3, 2)) == (6, 5)
    assert [dim_harmonic(3, m) for m in range(5)] == [1, 3, 5, 7, 9]
    assert [dim_harmonic(4, m) for m in range(4)] == [1, 4, 9, 16]
    assert [dim_harmonic(2, m) for m in range(4)] == [1, 2, 2, 2]
    assert dim_full(5, -1) == 0
    with pytest.raises(InvalidDimension):
        dim_harmonic(1, 2)


@pytest.mark.parametrize("N", range(2, 9))
def test_dims_add_up(N):
    for m in range(2, 8):
        assert dim_full(N, m) == dim_harmonic(N, m) + dim_full(N, m - 2)


def test_project_examples():
    sp = Space(3)
    h = project(word(sp, [2, 2]))
    d = ONE + q + q ** 2
    want = word(sp, [1, 3], -(tpow(1) + tpow(3)) / d) + word(sp, [2, 2], (ONE + q) / d)
    assert h == want
    assert is_harmonic(h)
    assert not project(q_radius(sp, 1))
    for i in (1, 2, 3):
        assert project(x(sp, i)) == x(sp, i)
    assert project(Poly.constant(sp)) == Poly.constant(sp)


@pytest.mark.parametrize("N", [3, 4, 5])
def test_project_idempotent_and_harmonic(N):
    sp = Space(N)
    for m in range(4):
        for nu in sp.monomials(m):
            h = project(Poly.monomial(sp, nu))
            assert is_harmonic(h)
            assert project(h) == h


def test_project_errors():
    sp = Space(3)
    with pytest.raises(NotHomogeneous):
        project(x(sp, 1) + word(sp, [1, 2]))
    with pytest.raises(DegreeMismatch):
        project(x(sp, 1), 2)


def test_decompose_example():
    sp = Space(3)
    p = word(sp, [2, 2])
    parts = harmonic_decompose(p)
    assert [j for j, _ in parts] == [0, 1]
    assert parts[1][1] == Poly.constant(sp, q / (ONE + q + q ** 2))
    assert reconstruct(sp, parts) == p


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_decompose_roundtrip(N):
    sp = Space(N)
    for m in range(5):
        for nu in sp.monomials(m):
            p = Poly.monomial(sp, nu)
            parts = harmonic_decompose(p)
            assert all(is_harmonic(h) for _, h in parts)
            assert reconstruct(sp, parts) == p


def test_zonal_examples():
    sp4 = Space(4)
    d = ONE + q ** 2
    assert zonal(4, 1, 1) == word(sp4, [1, 4], q ** 2 / d) - word(sp4, [2, 3], q / d)
    sp3 = Space(3)
    d3 = ONE + q + q ** 2
    assert zonal(3, 1, 1) == word(sp3, [1, 3], q ** 2 / d3) - word(sp3, [2, 2], tpow(3) / d3)
    assert zonal(3, 2, 0) == word(sp3, [1, 1])


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_zonal_equals_projection(N):
    sp = Space(N)
    for m1 in range(4):
        for m1p in range(4 - m1):
            mono = [0] * N
            mono[0], mono[-1] = m1, m1p
            assert zonal(N, m1, m1p) == project(Poly.monomial(sp, mono))


def test_t_poly():
    assert t_poly(4, 2, 1, 1) == zonal(4, 1, 1)
    assert t_poly(5, 3, 1, 1, 1) == t_poly(5, 3, 1, 1)
    with pytest.raises(DegreeMismatch):
        t_poly(4, 1, 1, 1)
    with pytest.raises(DegreeMismatch):
        t_poly(4, 3, 1, 1, 2)


def test_xi_basis_labels():
    labs = [(b.mvec, b.mpvec, b.tail) for b in enumerate_labels(3, 1)]
    assert labs == [((0,), (0,), 1), ((0,), (1,), 0), ((1,), (0,), 0)]
    sp3 = Space(3)
    assert [p for _, p in xi_basis(3, 1)] == [x(sp3, 2), x(sp3, 3), x(sp3, 1)]
    labs4 = [(b.mvec, b.mpvec, b.tail) for b in enumerate_labels(4, 1)]
    assert labs4 == [((0,), (0,), -1), ((0,), (0,), 1), ((0,), (1,), 0), ((1,), (0,), 0)]
    with pytest.raises(InvalidDimension):
        xi_basis(1, 0)


@pytest.mark.parametrize("N,m", [(3, 3), (4, 3), (5, 2), (6, 2), (7, 2)])
def test_xi_basis_spans(N, m):
    basis = [p for _, p in xi_basis(N, m)]
    assert len(basis) == dim_harmonic(N, m)
    assert all(is_harmonic(p) and p.degrees() == {m} for p in basis)
    assert rank_of_polys(basis) == dim_harmonic(N, m)


def test_xi_euler_eigenvalue():
    from qharmonic.operators import euler
    sp = Space(5)
    for _, h in xi_basis(5, 2):
        assert euler(sp)(h) == h.scale(qnum(2, SYMMETRIC))


def test_embed():
    sp5 = Space(5)
    assert embed(x(Space(3), 1), sp5) == x(sp5, 2)
    assert embed(q_radius(Space(3), 1), sp5) == q_radius(sp5, 2)
    with pytest.raises(InvalidDimension):
        embed(x(Space(4), 1), sp5)


@pytest.mark.parametrize("N", [3, 5, 7])
def test_middle_closed_form(N):
    sp = Space(N)
    mid = sp.n + 1
    for m in range(6):
        assert closed_form_middle(N, m) == project(word(sp, [mid] * m))
        assert middle_jacobi_coefficients(N, m) == middle_coefficients(N, m)


def test_middle_jacobi_parameters():
    assert middle_jacobi_parameters(3, 2) == (1, -2.5, 0)
    assert middle_jacobi_parameters(3, 2, printed=True) == (1, 1.5, 0)
    assert middle_coefficients(3, 2) == [ONE, -q / (ONE + q + q ** 2)]
    with pytest.raises(InvalidDimension):
        middle_coefficients(4, 2)
    with pytest.raises(InvalidDimension):
        closed_form_middle(4, 2)


def test_laplacian_of_projection_parsed():
    p = parse_poly("x1 x3 + x2^2", 3)
    assert not laplacian(p.space)(project(p))
