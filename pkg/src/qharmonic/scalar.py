"""Exact arithmetic in the rational function field Q(t), with t = q^(1/2).

Every coefficient in the package is a :class:`QScalar`.  Half-integer powers
of ``q`` are integer powers of ``t``, so one exact domain covers all of them.
Integer polynomials are delegated to ``flint.fmpz_poly``; the fraction layer,
canonical form and the q-combinatorial functions live here.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import flint

_ZERO = flint.fmpz_poly([])
_ONE = flint.fmpz_poly([1])

BASIC = "basic"
SYMMETRIC = "symmetric"
CONVENTIONS = (BASIC, SYMMETRIC)


class PoleAtPoint(ZeroDivisionError):
    """The denominator of a scalar vanishes at the requested point."""


class QScalar:
    """Element of Q(t) stored as a reduced fraction of integer polynomials.

    Canonical form: numerator and denominator are coprime in Z[t] (content
    included) and the denominator has a positive leading coefficient; zero
    is ``0/1``.  Structural equality is therefore mathematical equality.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None, *, _reduced=False):
        if isinstance(num, QScalar):
            if den is not None:
                raise TypeError("QScalar(QScalar, den) is not supported; divide instead")
            self.num, self.den, self._hash = num.num, num.den, num._hash
            return
        num = _as_poly_pair(num)
        if den is None:
            n, d = num
        else:
            dn, dd = _as_poly_pair(den)
            n, d = num[0] * dd, num[1] * dn
        if not _reduced:
            n, d = _reduce(n, d)
        self.num = n
        self.den = d
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def tpow(cls, e: int) -> "QScalar":
        """t**e for any integer e."""
        if e >= 0:
            return cls._raw(_tmono(e), _ONE)
        return cls._raw(_ONE, _tmono(-e))

    @classmethod
    def qpow(cls, e) -> "QScalar":
        """q**e for integer or half-integer e."""
        two_e = Fraction(e) * 2
        if two_e.denominator != 1:
            raise ValueError(f"q-exponent must be a half-integer, got {e}")
        return cls.tpow(int(two_e))

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.degree() < 0

    def is_one(self) -> bool:
        return self.num == self.den

    def __bool__(self):
        return not self.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() == 0

    # -- arithmetic ---------------------------------------------------

    def __neg__(self):
        return QScalar._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            n, d = self.num + other.num, self.den
            if d == _ONE:
                return QScalar._raw(n, d)
            return _make(n, d)
        return _make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return ZERO
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == _ONE and d == _ONE:
            return QScalar._raw(a * c, _ONE)
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if g1 != _ONE:
            a, d = a // g1, d // g1
        if g2 != _ONE:
            c, b = c // g2, b // g2
        n, den = a * c, b * d
        if den.leading_coefficient() < 0:
            n, den = -n, -den
        return QScalar._raw(n, den)

    __rmul__ = __mul__

    def inverse(self) -> "QScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero QScalar")
        n, d = self.den, self.num
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return QScalar._raw(n, d)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        n, d = self.num ** e, self.den ** e
        return QScalar._raw(n, d)

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(int(c) for c in self.num.coeffs()),
                               tuple(int(c) for c in self.den.coeffs())))
        return self._hash

    # -- evaluation ---------------------------------------------------

    def eval_at(self, t0) -> Fraction:
        """Exact value at ``t = t0``; raises :class:`PoleAtPoint` on a pole."""
        t0 = Fraction(t0)
        d = _horner(self.den, t0)
        if d == 0:
            raise PoleAtPoint(f"denominator vanishes at t = {t0}")
        return _horner(self.num, t0) / d

    def eval_mod(self, t0: int, p: int) -> int:
        """Value at ``t = t0`` in Z/pZ (used for fast rank lower bounds)."""
        d = _horner_mod(self.den, t0, p)
        if d == 0:
            raise PoleAtPoint(f"denominator vanishes at t = {t0} mod {p}")
        return _horner_mod(self.num, t0, p) * pow(d, -1, p) % p

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(int(self.num[0]), int(self.den[0]))

    # -- rendering ----------------------------------------------------

    def __str__(self):
        if self.den == _ONE:
            return _poly_str(self.num)
        ns, ds = _poly_str(self.num), _poly_str(self.den)
        if _needs_parens(self.num):
            ns = f"({ns})"
        if _needs_parens(self.den):
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"QScalar({str(self)!r})"


def _as_poly_pair(x):
    if isinstance(x, flint.fmpz_poly):
        return x, _ONE
    if isinstance(x, bool):
        x = int(x)
    if isinstance(x, int):
        return flint.fmpz_poly([x]), _ONE
    if isinstance(x, (Fraction, Rational)):
        return flint.fmpz_poly([int(x.numerator)]), flint.fmpz_poly([int(x.denominator)])
    if isinstance(x, flint.fmpq):
        return flint.fmpz_poly([int(x.p)]), flint.fmpz_poly([int(x.q)])
    if isinstance(x, (list, tuple)):
        return flint.fmpz_poly([int(c) for c in x]), _ONE
    raise TypeError(f"cannot build QScalar from {type(x).__name__}")


def _reduce(n, d):
    if d.degree() < 0:
        raise ZeroDivisionError("QScalar with zero denominator")
    if n.degree() < 0:
        return _ZERO, _ONE
    g = n.gcd(d)
    if g != _ONE:
        n, d = n // g, d // g
    if d.leading_coefficient() < 0:
        n, d = -n, -d
    return n, d


def _make(n, d):
    n, d = _reduce(n, d)
    return QScalar._raw(n, d)


def _coerce(x):
    if isinstance(x, QScalar):
        return x
    if isinstance(x, (int, Fraction, Rational)):
        return QScalar(x)
    return NotImplemented


@lru_cache(maxsize=None)
def _tmono(e):
    return flint.fmpz_poly([0] * e + [1])


def _horner(poly, t0):
    acc = Fraction(0)
    for c in reversed(poly.coeffs()):
        acc = acc * t0 + int(c)
    return acc


def _horner_mod(poly, t0, p):
    acc = 0
    for c in reversed(poly.coeffs()):
        acc = (acc * t0 + int(c)) % p
    return acc


def _tpow_str(e):
    if e == 0:
        return "1"
    if e % 2 == 0:
        k = e // 2
        return "q" if k == 1 else f"q^{k}"
    return f"q^({e}/2)"


def _poly_str(p):
    coeffs = [int(c) for c in p.coeffs()]
    parts = []
    for e, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = _tpow_str(e)
        mag = abs(c)
        if e == 0:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _needs_parens(p):
    nonzero = sum(1 for c in p.coeffs() if c != 0)
    if nonzero > 1:
        return True
    # a lone negative term or a product like 2*q needs grouping in a denominator
    return any(int(c) < 0 for c in p.coeffs()) or any(
        int(c) not in (0, 1) for c in p.coeffs()[1:])


ZERO = QScalar._raw(_ZERO, _ONE)
ONE = QScalar._raw(_ONE, _ONE)
T = QScalar._raw(flint.fmpz_poly([0, 1]), _ONE)
Q = QScalar._raw(flint.fmpz_poly([0, 0, 1]), _ONE)


def as_scalar(x) -> QScalar:
    """Coerce ints and Fractions to QScalar; QScalars pass through."""
    if isinstance(x, QScalar):
        return x
    return QScalar(x)


def qpow(e) -> QScalar:
    return QScalar.qpow(e)


def tpow(e: int) -> QScalar:
    return QScalar.tpow(e)


# ---------------------------------------------------------------------------
# q-combinatorics
# ---------------------------------------------------------------------------

def _check_conv(conv):
    if conv not in CONVENTIONS:
        raise ValueError(f"unknown q-number convention {conv!r}; use 'basic' or 'symmetric'")


@lru_cache(maxsize=4096)
def qnum(a: int, conv: str = BASIC) -> QScalar:
    """The q-number of ``a``.

    ``basic``: ``(1 - q^a)/(1 - q)``; ``symmetric``: ``(q^a - q^-a)/(q - q^-1)``.
    """
    _check_conv(conv)
    if conv == BASIC:
        return (ONE - qpow(a)) / (ONE - Q)
    return (qpow(a) - qpow(-a)) / (Q - qpow(-1))


@lru_cache(maxsize=4096)
def qfactorial(m: int, conv: str = BASIC) -> QScalar:
    if m < 0:
        raise ValueError("qfactorial needs m >= 0")
    out = ONE
    for a in range(1, m + 1):
        out = out * qnum(a, conv)
    return out


@lru_cache(maxsize=4096)
def qdouble_factorial(s: int, conv: str = BASIC) -> QScalar:
    """[s][s-2][s-4]... down to [2] or [1]; [0]!! = 1."""
    if s < 0:
        raise ValueError("qdouble_factorial needs s >= 0")
    out = ONE
    while s > 0:
        out = out * qnum(s, conv)
        s -= 2
    return out


def qpochhammer(a, base, s: int) -> QScalar:
    """(a; base)_s = (1 - a)(1 - a base)...(1 - a base^(s-1))."""
    if s < 0:
        raise ValueError("qpochhammer needs s >= 0")
    a, base = as_scalar(a), as_scalar(base)
    out = ONE
    term = a
    for _ in range(s):
        out = out * (ONE - term)
        if out.is_zero():
            return ZERO
        term = term * base
    return out


def phi21_coefficients(a1, a2, b, base, kmax: int | None = None) -> list[QScalar]:
    """Coefficients c_k of the terminating series 2phi1(a1, a2; b; base, z) = sum c_k z^k.

    The series must terminate because a numerator Pochhammer vanishes; ``kmax``
    caps the length when the caller already knows the termination index.
    Raises ``ZeroDivisionError`` if a denominator factor vanishes first.
    """
    a1, a2, b, base = map(as_scalar, (a1, a2, b, base))
    coeffs = [ONE]
    k = 0
    limit = 256 if kmax is None else kmax
    while k < limit:
        num = (ONE - a1 * base ** k) * (ONE - a2 * base ** k)
        if num.is_zero():
            return coeffs
        den = (ONE - base ** (k + 1)) * (ONE - b * base ** k)
        if den.is_zero():
            raise ZeroDivisionError(f"denominator Pochhammer vanishes at k = {k + 1}")
        coeffs.append(coeffs[-1] * num / den)
        k += 1
    if kmax is None:
        raise ValueError("2phi1 series does not terminate")
    return coeffs


def phi21(a1, a2, b, base, z) -> QScalar:
    """Sum of the terminating 2phi1 series at a scalar argument ``z``."""
    z = as_scalar(z)
    out = ZERO
    zk = ONE
    for c in phi21_coefficients(a1, a2, b, base):
        out = out + c * zk
        zk = zk * z
    return out


def little_q_jacobi_coefficients(k: int, alpha, beta, base_exp: int = 1) -> list[QScalar]:
    """Coefficients in x of the little q-Jacobi polynomial in base p = q^base_exp,

        P_k^(alpha, beta)(x; p) = 2phi1(p^-k, p^(alpha+beta+k+1); p^(alpha+1); p, p x).

    ``alpha`` and ``beta`` may be half-integers.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    s = base_exp
    base = qpow(s)
    series = phi21_coefficients(qpow(-s * k), qpow(s * (alpha + beta + k + 1)),
                                qpow(s * (alpha + 1)), base, kmax=k)
    return [c * base ** j for j, c in enumerate(series)]


def eval_at(s, t0) -> Fraction:
    return as_scalar(s).eval_at(t0)
