"""The coordinate algebra of the quantum Euclidean space E^N_q.

Elements are stored in the PBW basis x_1^a1 x_2^a2 ... x_N^aN (indices weakly
increasing).  Products are brought to normal form by rewriting misordered
adjacent pairs with the defining relations:

* ``x_j x_i = q^-1 x_i x_j`` for ``i < j``, ``j != i'``;
* ``x_i' x_i = x_i x_i' + (q - q^-1)/(q^(rho_i - 1) + q^(1 - rho_i)) *
  sum_{j=i+1}^{(i+1)'} q^rho_j' x_j x_j'`` for ``i < n``;
* ``x_n' x_n = x_n x_n' + (q^(1/2) - q^(-1/2)) x_{n+1}^2`` for odd ``N``;
* ``x_n' x_n = x_n x_n'`` for even ``N``.

Public functions take 1-based generator indices; monomials are tuples of
exponents.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement

from .scalar import ONE, ZERO, QScalar, as_scalar, qpow, tpow


class InvalidDimension(ValueError):
    pass


class SpaceMismatch(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


@dataclass(frozen=True)
class Space:
    """Descriptor of E^N_q: N, n = N // 2, parity, 2*rho and the pairing j -> j'."""

    N: int
    n: int = field(init=False)
    odd: bool = field(init=False)
    rho2: tuple = field(init=False)

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 2:
            raise InvalidDimension(f"N must be an integer >= 2, got {self.N!r}")
        n = self.N // 2
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "odd", self.N % 2 == 1)
        # rho_i = N/2 - i for i <= n, 0 in the middle, and rho_i' = -rho_i
        rho2 = [0] * self.N
        for i in range(1, n + 1):
            rho2[i - 1] = self.N - 2 * i
            rho2[self.N - i] = -(self.N - 2 * i)
        object.__setattr__(self, "rho2", tuple(rho2))

    def prime(self, j: int) -> int:
        """j' = N - j + 1 (1-based)."""
        self.check_index(j)
        return self.N - j + 1

    def rho(self, j: int):
        """rho_j as a Fraction."""
        from fractions import Fraction
        self.check_index(j)
        return Fraction(self.rho2[j - 1], 2)

    def qrho(self, j: int) -> QScalar:
        """q^rho_j."""
        self.check_index(j)
        return tpow(self.rho2[j - 1])

    def check_index(self, j: int):
        if not 1 <= j <= self.N:
            raise IndexOutOfRange(f"generator index {j} outside 1..{self.N}")

    @property
    def middle(self):
        """1-based index n+1 of the self-paired generator for odd N, else None."""
        return self.n + 1 if self.odd else None

    def monomials(self, m: int) -> list[tuple]:
        """All exponent vectors of total degree m, in graded-lex (descending) order."""
        return monomials_of_degree(self.N, m)


def make_space(N: int) -> Space:
    return Space(N)


@lru_cache(maxsize=None)
def monomials_of_degree(N: int, m: int) -> list[tuple]:
    if m < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(N), m):
        nu = [0] * N
        for i in combo:
            nu[i] += 1
        out.append(tuple(nu))
    out.sort(reverse=True)
    return out


def _sort_key(nu):
    # graded lexicographic, highest first
    return (-sum(nu), tuple(-a for a in nu))


# ---------------------------------------------------------------------------
# term dictionaries: {monomial tuple: QScalar}
# ---------------------------------------------------------------------------

def _add_into(acc: dict, mono, c):
    old = acc.get(mono)
    if old is None:
        acc[mono] = c
    else:
        s = old + c
        if s.is_zero():
            del acc[mono]
        else:
            acc[mono] = s


def _axpy(acc: dict, c, terms: dict):
    """acc += c * terms."""
    if c.is_one():
        for mono, d in terms.items():
            _add_into(acc, mono, d)
    else:
        for mono, d in terms.items():
            _add_into(acc, mono, c * d)


def _unit(N, i):
    e = [0] * N
    e[i] = 1
    return tuple(e)


def _shift(nu, i, d):
    lst = list(nu)
    lst[i] += d
    return tuple(lst)


@lru_cache(maxsize=None)
def _swap(N: int, b: int, k: int) -> tuple:
    """Normal form of x_b x_k for 0-based b > k, as ((monomial, coeff), ...)."""
    space = Space(N)
    n = space.n
    kp = N - 1 - k
    if b != kp:
        return ((_shift(_unit(N, k), b, 1), qpow(-1)),)
    base = _shift(_unit(N, k), kp, 1)
    if k == n - 1:
        if space.odd:
            return ((base, ONE), (_shift(_unit(N, n), n, 1), tpow(1) - tpow(-1)))
        return ((base, ONE),)
    # k < n - 1: primed pair with inner corrections
    rho2_k = space.rho2[k]
    coef = (qpow(1) - qpow(-1)) / (tpow(rho2_k - 2) + tpow(2 - rho2_k))
    acc = {base: ONE}
    for j in range(k + 1, N - 1 - k):
        jp = N - 1 - j
        c = coef * tpow(space.rho2[jp])
        if j <= jp:
            _add_into(acc, _shift(_unit(N, j), jp, 1), c)
        else:
            for mono, d in _swap(N, j, jp):
                _add_into(acc, mono, c * d)
    return tuple(acc.items())


def _top_index(nu):
    for i in range(len(nu) - 1, -1, -1):
        if nu[i]:
            return i
    return -1


@lru_cache(maxsize=None)
def _mono_times_gen(nu: tuple, k: int) -> tuple:
    """Normal form of x^nu * x_k (0-based k) as ((monomial, coeff), ...)."""
    N = len(nu)
    b = _top_index(nu)
    if b <= k:
        return ((_shift(nu, k, 1), ONE),)
    nu0 = _shift(nu, b, -1)
    acc = {}
    for mono, c in _swap(N, b, k):
        part = {nu0: ONE}
        for g in _word(mono):
            part = _terms_times_gen(part, g)
        _axpy(acc, c, part)
    return tuple(acc.items())


def _word(nu):
    out = []
    for i, a in enumerate(nu):
        out.extend([i] * a)
    return out


def _terms_times_gen(terms: dict, k: int) -> dict:
    acc = {}
    for mono, c in terms.items():
        for m2, d in _mono_times_gen(mono, k):
            _add_into(acc, m2, c * d)
    return acc


@lru_cache(maxsize=None)
def _mono_mul(nu: tuple, mu: tuple) -> tuple:
    """Normal form of x^nu * x^mu."""
    g = _top_index(mu)
    if g < 0:
        return ((nu, ONE),)
    if _top_index(nu) <= _first_index(mu):
        return ((tuple(a + b for a, b in zip(nu, mu)), ONE),)
    left = dict(_mono_mul(nu, _shift(mu, g, -1)))
    return tuple(_terms_times_gen(left, g).items())


def _first_index(nu):
    for i, a in enumerate(nu):
        if a:
            return i
    return len(nu)


# ---------------------------------------------------------------------------
# Poly
# ---------------------------------------------------------------------------

class Poly:
    """An element of C_q[x_1..x_N] in PBW normal form.

    ``terms`` maps exponent tuples to nonzero :class:`QScalar` coefficients.
    Instances are treated as immutable.
    """

    __slots__ = ("space", "terms")

    def __init__(self, space: Space, terms=None):
        self.space = space
        clean = {}
        if terms:
            for mono, c in terms.items():
                mono = tuple(mono)
                if len(mono) != space.N or any(a < 0 for a in mono):
                    raise ValueError(f"bad monomial {mono} for N = {space.N}")
                c = as_scalar(c)
                if not c.is_zero():
                    _add_into(clean, mono, c)
        self.terms = clean

    @classmethod
    def _wrap(cls, space, terms):
        obj = cls.__new__(cls)
        obj.space = space
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, space):
        return cls._wrap(space, {})

    @classmethod
    def constant(cls, space, c=1):
        c = as_scalar(c)
        return cls._wrap(space, {} if c.is_zero() else {(0,) * space.N: c})

    @classmethod
    def monomial(cls, space, nu, c=1):
        return cls(space, {tuple(nu): c})

    @classmethod
    def gen(cls, space, i: int):
        """The generator x_i (1-based)."""
        space.check_index(i)
        return cls._wrap(space, {_unit(space.N, i - 1): ONE})

    # -- basic queries ------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, nu) -> QScalar:
        return self.terms.get(tuple(nu), ZERO)

    def items(self):
        """Terms sorted graded-lex, highest first."""
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))

    def degrees(self) -> set:
        return {sum(nu) for nu in self.terms}

    def degree(self) -> int:
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_components(self) -> dict:
        return homogeneous_components(self)

    def leading(self):
        """(monomial, coeff) of the graded-lex leading term."""
        return self.items()[0]

    # -- arithmetic ---------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Poly):
            return False
        if other.space != self.space:
            raise SpaceMismatch(f"N = {self.space.N} vs N = {other.space.N}")
        return True

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.space, other)
        self._check(other)
        acc = dict(self.terms)
        for mono, c in other.terms.items():
            _add_into(acc, mono, c)
        return Poly._wrap(self.space, acc)

    __radd__ = __add__

    def __neg__(self):
        return Poly._wrap(self.space, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.space, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = as_scalar(c)
        if c.is_zero():
            return Poly.zero(self.space)
        return Poly._wrap(self.space, {m: c * d for m, d in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Poly):
            return multiply(other, self)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, c):
        return self.scale(as_scalar(1) / as_scalar(c))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not elements of the algebra")
        out = Poly.constant(self.space)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, QScalar)):
                other = Poly.constant(self.space, other)
            else:
                return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash((self.space.N, frozenset(self.terms.items())))

    def map_coeffs(self, fn) -> "Poly":
        return Poly(self.space, {m: fn(c) for m, c in self.terms.items()})

    def __str__(self):
        from .textio import format_poly
        return format_poly(self)

    def __repr__(self):
        return f"Poly(N={self.space.N}, {str(self)!r})"


def x(space: Space, i: int) -> Poly:
    return Poly.gen(space, i)


def multiply(p: Poly, r: Poly) -> Poly:
    """Product p * r in PBW normal form."""
    if p.space != r.space:
        raise SpaceMismatch(f"N = {p.space.N} vs N = {r.space.N}")
    acc = {}
    for nu, c in p.terms.items():
        for mu, d in r.terms.items():
            cd = c * d
            for mono, e in _mono_mul(nu, mu):
                _add_into(acc, mono, cd * e)
    return Poly._wrap(p.space, acc)


def mono_product(space: Space, nu, mu) -> Poly:
    return Poly._wrap(space, dict(_mono_mul(tuple(nu), tuple(mu))))


def word(space: Space, indices, c=1) -> Poly:
    """The product x_{i1} x_{i2} ... in the written order (1-based), normal-ordered."""
    acc = {(0,) * space.N: as_scalar(c)}
    for i in indices:
        space.check_index(i)
        acc = _terms_times_gen(acc, i - 1)
    return Poly._wrap(space, acc)


def star(p: Poly) -> Poly:
    """The *-operation: anti-automorphism with x_i^* = q^rho_i' x_i'.

    On a PBW monomial the reversed product of starred generators is already
    normal-ordered, so star(x^nu) = q^(sum_i nu_i rho_i') x^(reversed nu).
    """
    sp = p.space
    acc = {}
    for nu, c in p.terms.items():
        e2 = sum(a * sp.rho2[sp.N - 1 - i] for i, a in enumerate(nu))
        acc[nu[::-1]] = c * tpow(e2)
    return Poly._wrap(sp, acc)


def homogeneous_components(p: Poly) -> dict:
    out = {}
    for nu, c in p.terms.items():
        out.setdefault(sum(nu), {})[nu] = c
    return {m: Poly._wrap(p.space, t) for m, t in sorted(out.items())}


def weight_of(space: Space, nu) -> tuple:
    """(nu_1 - nu_1', ..., nu_n - nu_n')."""
    N = space.N
    return tuple(nu[i] - nu[N - 1 - i] for i in range(space.n))


@lru_cache(maxsize=None)
def q_radius(space: Space, j: int = 1) -> Poly:
    """Q_j = sum_{i=j}^{j'} q^rho_i' x_i x_i'  (Q_1 = Q), normal-ordered.

    j = n + 1 is allowed as the empty window: x_{n+1}^2 for odd N, 0 for even N.
    """
    if not 1 <= j <= space.n + 1:
        raise IndexOutOfRange(f"q-radius index {j} outside 1..{space.n + 1}")
    out = Poly.zero(space)
    for i in range(j, space.N - j + 2):
        out = out + word(space, [i, space.N - i + 1], space.qrho(space.N - i + 1))
    return out


def total_degree(nu) -> int:
    return sum(nu)
