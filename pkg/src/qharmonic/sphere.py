"""The invariant functional on the quantum sphere and the induced scalar product."""

from __future__ import annotations

from .algebra import Poly, Space, SpaceMismatch, multiply, star
from .scalar import ONE, ZERO, QScalar, qpochhammer, qpow, tpow


def on_diagonal(space: Space, nu) -> bool:
    """nu_i = nu_i' for i <= n, and (odd N) nu_{n+1} even."""
    N, n = space.N, space.n
    if any(nu[i] != nu[N - 1 - i] for i in range(n)):
        return False
    return not space.odd or nu[n] % 2 == 0


def h_monomial(space: Space, nu) -> QScalar:
    """Value of the sphere functional on x^nu (zero off the diagonal support)."""
    if not on_diagonal(space, nu):
        return ZERO
    N, n = space.N, space.n
    m = nu[n] // 2 if space.odd else 0
    s = sum(nu[:n])
    qm2 = qpow(-2)
    num = ONE
    for i in range(n):
        num = num * qpochhammer(qm2, qm2, nu[i])
    num = num * qpochhammer(qpow(-1), qm2, m) * (ONE + qpow(1)) ** m
    e2 = sum(space.rho2[i] * nu[i] for i in range(n)) + 2 * m
    den = tpow(e2) * (ONE + qpow(N - 2)) ** (s + m) * qpochhammer(qpow(-N), qm2, s + m)
    return num / den


_H_CACHE = {}


def h_functional(p: Poly) -> QScalar:
    """Linear extension of :func:`h_monomial` to all of A."""
    sp = p.space
    out = ZERO
    for nu, c in p.terms.items():
        key = (sp.N, nu)
        v = _H_CACHE.get(key)
        if v is None:
            v = h_monomial(sp, nu)
            _H_CACHE[key] = v
        if not v.is_zero():
            out = out + c * v
    return out


def inner(p1: Poly, p2: Poly) -> QScalar:
    """<p1, p2> = h(p1^* p2)."""
    if p1.space != p2.space:
        raise SpaceMismatch(f"N = {p1.space.N} vs N = {p2.space.N}")
    return h_functional(multiply(star(p1), p2))


def gram(basis) -> list:
    """Matrix of scalar products G[i][j] = <b_i, b_j>."""
    basis = list(basis)
    if basis:
        sp = basis[0].space
        for b in basis:
            if b.space != sp:
                raise SpaceMismatch("basis elements live on different spaces")
    stars = [star(b) for b in basis]
    return [[h_functional(multiply(s, b)) for b in basis] for s in stars]


def off_diagonal_entries(G) -> list:
    """[(i, j)] with i != j and G[i][j] != 0."""
    return [(i, j) for i, row in enumerate(G) for j, v in enumerate(row)
            if i != j and not v.is_zero()]
