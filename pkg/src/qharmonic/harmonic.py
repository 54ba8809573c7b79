"""Harmonic polynomials: the projector H_m, the decomposition A_m = sum Q^j H_(m-2j),
zonal polynomials, t-polynomials and the separated-variable bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .algebra import (InvalidDimension, Poly, Space, _add_into, monomials_of_degree, multiply,
                      q_radius)
from .operators import LinearOperator, laplacian, qhat
from .scalar import (BASIC, ONE, Q as QS, QScalar, little_q_jacobi_coefficients, qfactorial,
                     qnum, qpochhammer, qpow, tpow)


class NotHomogeneous(ValueError):
    pass


class DegreeMismatch(ValueError):
    pass


class DecompositionError(RuntimeError):
    """Exact division by Q failed; this contradicts A_m = H_m + Q A_(m-2)."""


# ---------------------------------------------------------------------------
# dimensions
# ---------------------------------------------------------------------------

def dim_full(N: int, m: int) -> int:
    """dim A_m = (N + m - 1)! / ((N - 1)! m!)."""
    if N < 1:
        raise InvalidDimension(f"N must be positive, got {N}")
    if m < 0:
        return 0
    return comb(N + m - 1, m)


def dim_harmonic(N: int, m: int) -> int:
    """dim H_m = (m + N - 3)! (2m + N - 2) / ((N - 2)! m!).

    For N = 2 the closed form is degenerate at m = 0; the commuting two-variable
    case has basis 1, x_1^k, x_1'^k, so the values are 1 and then 2.
    """
    if N < 2:
        raise InvalidDimension(f"N must be >= 2, got {N}")
    if m < 0:
        return 0
    if N == 2:
        return 1 if m == 0 else 2
    return factorial(m + N - 3) * (2 * m + N - 2) // (factorial(N - 2) * factorial(m))


# ---------------------------------------------------------------------------
# projector
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def alpha(N: int, m: int, k: int) -> QScalar:
    """Projector coefficient
    q^(2k^2 - 2mk - k) (1 - q^2)^(2k) / ((1 + q^(N-2))^(2k) (q^(-N-2m+4); q^2)_k (q^2; q^2)_k).
    """
    num = qpow(2 * k * k - 2 * m * k - k) * (ONE - qpow(2)) ** (2 * k)
    den = ((ONE + qpow(N - 2)) ** (2 * k) * qpochhammer(qpow(-N - 2 * m + 4), qpow(2), k)
           * qpochhammer(qpow(2), qpow(2), k))
    return num / den


def _require_homogeneous(p: Poly) -> int:
    degs = p.degrees()
    if len(degs) > 1:
        raise NotHomogeneous(f"polynomial has components in degrees {sorted(degs)}")
    return degs.pop() if degs else 0


def project(p: Poly, m: int | None = None) -> Poly:
    """H_m p = sum_k alpha_k Qhat^k Lap^k p for homogeneous p of degree m."""
    deg = _require_homogeneous(p)
    if m is None:
        m = deg
    elif p and deg != m:
        raise DegreeMismatch(f"polynomial has degree {deg}, expected {m}")
    sp = p.space
    lap, qh = laplacian(sp), qhat(sp)
    out = p
    lp = p
    for k in range(1, m // 2 + 1):
        lp = lap(lp)
        if lp.is_zero():
            break
        term = lp
        for _ in range(k):
            term = qh(term)
        out = out + term.scale(alpha(sp.N, m, k))
    return out


def projector(space: Space) -> LinearOperator:
    """H as a linear operator: x^nu goes to H_m x^nu with m = |nu|."""
    def act(nu):
        return dict(project(Poly.monomial(space, nu), sum(nu)).terms)
    return LinearOperator(space, act, 0, "H")


def divide_by_q(p: Poly) -> Poly:
    """Exact left quotient r with Q r = p, by triangular solve on graded-lex leaders."""
    sp = p.space
    Q = q_radius(sp, 1)
    lead_mono, _ = Q.leading()
    rem = p
    quot = {}
    while rem:
        mono, c = rem.leading()
        shifted = tuple(a - b for a, b in zip(mono, lead_mono))
        if any(a < 0 for a in shifted):
            raise DecompositionError(f"monomial {mono} is not divisible by the leader of Q")
        # the leader of Q x^shifted is x^mono, up to a q-power twist
        prod = multiply(Q, Poly.monomial(sp, shifted))
        pc = prod.coeff(mono)
        if pc.is_zero() or prod.leading()[0] != mono:
            raise DecompositionError(f"leading-term division failed at {mono}")
        coef = c / pc
        _add_into(quot, shifted, coef)
        rem = rem - prod.scale(coef)
    return Poly._wrap(sp, quot)


def harmonic_decompose(p: Poly) -> list:
    """[(j, h_j), ...] with p = sum_j Q^j h_j and h_j harmonic of degree m - 2j."""
    m = _require_homogeneous(p)
    out = []
    j = 0
    rest = p
    while rest:
        h = project(rest)
        if h:
            out.append((j, h))
        rest = rest - h
        if not rest:
            break
        rest = divide_by_q(rest)
        j += 1
        if m - 2 * j < 0:
            raise DecompositionError("remainder survived past degree 0")
    return out


def reconstruct(space: Space, parts) -> Poly:
    """sum_j Q^j h_j."""
    Q = q_radius(space, 1)
    out = Poly.zero(space)
    for j, h in parts:
        out = out + (Q ** j) * h
    return out


# ---------------------------------------------------------------------------
# zonal and t-polynomials
# ---------------------------------------------------------------------------

def _eps2(space: Space) -> int:
    """2*epsilon: epsilon = 1 for even N, 1/2 for odd N."""
    return 1 if space.odd else 2


@lru_cache(maxsize=None)
def t_coefficient(N: int, m: int, m1: int, m1p: int, k: int) -> QScalar:
    """C^{m,k}_{m1 m1'} with l = m - m1 - m1'."""
    sp = Space(N)
    l = m - m1 - m1p
    if l < 0:
        raise DegreeMismatch(f"m = {m} < m1 + m1' = {m1 + m1p}")
    q2 = qpow(2)
    num = qpochhammer(qpow(-2 * m1), q2, k) * qpochhammer(qpow(-2 * m1p), q2, k)
    den = qpochhammer(q2, q2, k) * qpochhammer(qpow(-N - 2 * m + 4), q2, k)
    # q^((-n + eps - 2l + 2) k) in t-powers
    e2 = (-2 * sp.n + _eps2(sp) - 4 * l + 4) * k
    return num / den * tpow(e2) / (ONE + qpow(N - 2)) ** k


def t_poly(N: int, m: int, m1: int, m1p: int, l: int | None = None) -> Poly:
    """t^{N,m}_{m1 m1'} = sum_k C^{m,k} Q^k x_1^(m1-k) x_1'^(m1'-k)."""
    if l is None:
        l = m - m1 - m1p
    if m1 < 0 or m1p < 0 or l < 0 or m != m1 + m1p + l:
        raise DegreeMismatch(f"need m = m1 + m1' + l with all parts >= 0, got "
                             f"m={m}, m1={m1}, m1'={m1p}, l={l}")
    sp = Space(N)
    Q = q_radius(sp, 1)
    out = Poly.zero(sp)
    Qk = Poly.constant(sp)
    for k in range(min(m1, m1p) + 1):
        nu = [0] * N
        nu[0] = m1 - k
        nu[N - 1] += m1p - k
        out = out + (Qk * Poly.monomial(sp, nu)).scale(t_coefficient(N, m, m1, m1p, k))
        Qk = Qk * Q
    return out


def zonal(N: int, m1: int, m1p: int) -> Poly:
    """phi^m_{m1 m1'} = H_m(x_1^m1 x_1'^m1'), m = m1 + m1', via the closed form."""
    return t_poly(N, m1 + m1p, m1, m1p, 0)


def zonal_coefficient(N: int, m1: int, m1p: int, k: int) -> QScalar:
    return t_coefficient(N, m1 + m1p, m1, m1p, k)


# ---------------------------------------------------------------------------
# closed form for the middle generator (odd N)
# ---------------------------------------------------------------------------

def middle_coefficients(N: int, m: int) -> list:
    """Coefficients b_k with H_m x_{n+1}^m = sum_k b_k Q^k x_{n+1}^(m-2k)."""
    if N % 2 == 0:
        raise InvalidDimension("the middle generator exists only for odd N")
    a = qpow(1) * (ONE + qpow(1)) / (ONE + qpow(N - 2))
    q2 = qpow(2)
    out = []
    for k in range(m // 2 + 1):
        c = (qpochhammer(qpow(-m), q2, k) * qpochhammer(qpow(-m + 1), q2, k)
             / (qpochhammer(q2, q2, k) * qpochhammer(qpow(-N - 2 * m + 4), q2, k)))
        out.append(c * a ** k)
    return out


def closed_form_middle(N: int, m: int) -> Poly:
    """H_m x_{n+1}^m assembled as sum_k b_k Q^k x_{n+1}^(m - 2k)."""
    sp = Space(N)
    if not sp.odd:
        raise InvalidDimension("closed_form_middle needs odd N")
    Q = q_radius(sp, 1)
    out = Poly.zero(sp)
    for k, b in enumerate(middle_coefficients(N, m)):
        nu = [0] * N
        nu[sp.n] = m - 2 * k
        out = out + (Q ** k * Poly.monomial(sp, nu)).scale(b)
    return out


def middle_jacobi_coefficients(N: int, m: int) -> list:
    """Same coefficients b_k, read off the little q-Jacobi polynomial in base q^2,
    P_{floor(m/2)}^{(alpha, beta)}(x; q^2) with the parameters from
    :func:`middle_jacobi_parameters`, at x = (1 + q)/(q (1 + q^(N-2))) Q x_{n+1}^-2.
    """
    if N % 2 == 0:
        raise InvalidDimension("the middle generator exists only for odd N")
    k, al, be = middle_jacobi_parameters(N, m)
    coeffs = little_q_jacobi_coefficients(k, al, be, base_exp=2)
    scale = (ONE + qpow(1)) / (qpow(1) * (ONE + qpow(N - 2)))
    return [c * scale ** j for j, c in enumerate(coeffs)]


def middle_jacobi_parameters(N: int, m: int, printed: bool = False):
    """(degree, alpha, beta) of the little q-Jacobi form of H_m x_{n+1}^m.

    Matching the 2phi1 parameters term by term forces alpha = -N/2 - m + 1.
    ``printed=True`` returns the variant alpha = -N/2 + m + 1 instead, kept so
    the mismatch can be demonstrated.
    """
    alpha_ = Fraction(-N, 2) + (m if printed else -m) + 1
    beta_ = Fraction(N - 3, 2)
    return m // 2, alpha_, beta_


# ---------------------------------------------------------------------------
# separated-variable bases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HarmonicLabel:
    """Label of a basis element: N, m, (m_1, m_2, ...), (m'_1, m'_2, ...) and the
    tail (k for even N, sigma for odd N)."""

    N: int
    m: int
    mvec: tuple
    mpvec: tuple
    tail: int

    def as_dict(self):
        return {"N": self.N, "m": self.m, "mvec": list(self.mvec), "mpvec": list(self.mpvec),
                "tail": self.tail}

    def __str__(self):
        return (f"m={list(self.mvec)} m'={list(self.mpvec)} "
                f"{'sigma' if self.N % 2 else 'k'}={self.tail}")


def embed(p: Poly, space: Space) -> Poly:
    """Inject a polynomial on the window x_{j+1}..x_{(j+1)'} into E^N_q by index shift."""
    j, r = divmod(space.N - p.space.N, 2)
    if r or j < 0:
        raise InvalidDimension(f"cannot embed N = {p.space.N} into N = {space.N}")
    pad = (0,) * j
    return Poly._wrap(space, {pad + nu + pad: c for nu, c in p.terms.items()})


def enumerate_labels(N: int, m: int) -> list:
    """All labels satisfying the degree constraint, ordered lexicographically
    on (m_1, m'_1, m_2, m'_2, ..., tail)."""
    sp = Space(N)
    levels = sp.n - (0 if sp.odd else 1)
    out = []

    def rec(level, rem, ms, mps):
        if level == levels:
            if sp.odd:
                if rem in (0, 1):
                    out.append(HarmonicLabel(N, m, tuple(ms), tuple(mps), rem))
            else:
                for k in sorted({rem, -rem}):
                    out.append(HarmonicLabel(N, m, tuple(ms), tuple(mps), k))
            return
        for a in range(rem + 1):
            for b in range(rem - a + 1):
                rec(level + 1, rem - a - b, ms + [a], mps + [b])

    rec(0, m, [], [])
    return out


def xi_element(label: HarmonicLabel) -> Poly:
    """Product of nested t-polynomials for one label, normal-ordered in E^N_q."""
    N, m = label.N, label.m
    sp = Space(N)
    out = Poly.constant(sp)
    rem = m
    for lvl, (a, b) in enumerate(zip(label.mvec, label.mpvec)):
        Nw = N - 2 * lvl
        out = out * embed(t_poly(Nw, rem, a, b), sp)
        rem -= a + b
    n = sp.n
    nu = [0] * N
    if sp.odd:
        nu[n] = label.tail
    elif label.tail > 0:
        nu[n - 1] = label.tail
    elif label.tail < 0:
        nu[n] = -label.tail
    return out * Poly.monomial(sp, nu)


def xi_basis(N: int, m: int) -> list:
    """[(HarmonicLabel, Poly), ...] spanning H_m, one element per valid label."""
    if N < 2:
        raise InvalidDimension(f"N must be >= 2, got {N}")
    return [(lab, xi_element(lab)) for lab in enumerate_labels(N, m)]


def harmonic_monomial_images(space: Space, m: int) -> list:
    """[H_m x^nu for nu in A_m] in graded-lex order."""
    return [project(Poly.monomial(space, nu)) for nu in monomials_of_degree(space.N, m)]


def is_harmonic(p: Poly) -> bool:
    return laplacian(p.space)(p).is_zero()
