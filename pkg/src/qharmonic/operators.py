"""Linear operators on the quantum Euclidean algebra.

An operator is a rule sending a PBW monomial to a term dictionary, extended
linearly and memoized per monomial.  Operator identities are decided by
exhaustive application to monomial bases (:func:`is_zero_on`), never by
comparing formulas.
"""

from __future__ import annotations

from .algebra import (IndexOutOfRange, Poly, Space, SpaceMismatch, _add_into, _axpy,
                      _shift, monomials_of_degree, multiply, q_radius, word)
from .scalar import BASIC, ONE, SYMMETRIC, QScalar, as_scalar, qnum, qpow, tpow


class LinearOperator:
    """Linear map on Poly given by its action on monomials.

    ``action(nu)`` returns a ``{monomial: QScalar}`` dict.  ``shift`` is the
    declared degree shift, or None when the operator is not homogeneous.
    """

    def __init__(self, space: Space, action, shift=None, name="op"):
        self.space = space
        self._action = action
        self.shift = shift
        self.name = name
        self._cache = {}

    def on_monomial(self, nu) -> dict:
        nu = tuple(nu)
        out = self._cache.get(nu)
        if out is None:
            out = self._action(nu)
            self._cache[nu] = out
        return out

    def apply(self, p: Poly) -> Poly:
        if p.space != self.space:
            raise SpaceMismatch(f"operator on N = {self.space.N} applied to N = {p.space.N}")
        acc = {}
        for nu, c in p.terms.items():
            _axpy(acc, c, self.on_monomial(nu))
        return Poly._wrap(self.space, acc)

    __call__ = apply

    def _same(self, other):
        if other.space != self.space:
            raise SpaceMismatch(f"N = {self.space.N} vs N = {other.space.N}")

    def __add__(self, other):
        self._same(other)
        a, b = self, other

        def act(nu):
            acc = dict(a.on_monomial(nu))
            for m, c in b.on_monomial(nu).items():
                _add_into(acc, m, c)
            return acc
        shift = a.shift if a.shift == b.shift else None
        return LinearOperator(self.space, act, shift, f"({a.name} + {b.name})")

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "LinearOperator":
        c = as_scalar(c)
        a = self

        def act(nu):
            if c.is_zero():
                return {}
            return {m: c * d for m, d in a.on_monomial(nu).items()}
        return LinearOperator(self.space, act, self.shift, f"{c}*{a.name}")

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, LinearOperator):
            return compose(self, other)
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative operator power")
        out = identity(self.space)
        for _ in range(k):
            out = compose(self, out)
        return out

    def __repr__(self):
        return f"<LinearOperator {self.name} on N={self.space.N}>"


def compose(a: LinearOperator, b: LinearOperator) -> LinearOperator:
    """a o b: apply b first."""
    a._same(b)

    def act(nu):
        acc = {}
        for m, c in b.on_monomial(nu).items():
            _axpy(acc, c, a.on_monomial(m))
        return acc
    shift = None if a.shift is None or b.shift is None else a.shift + b.shift
    return LinearOperator(a.space, act, shift, f"{a.name}{b.name}")


def commutator(a: LinearOperator, b: LinearOperator) -> LinearOperator:
    return compose(a, b) - compose(b, a)


def linear_combination(pairs) -> LinearOperator:
    """sum c_i A_i for an iterable of (c_i, A_i)."""
    pairs = list(pairs)
    out = pairs[0][1].scale(pairs[0][0])
    for c, op in pairs[1:]:
        out = out + op.scale(c)
    return out


def identity(space: Space) -> LinearOperator:
    return LinearOperator(space, lambda nu: {nu: ONE}, 0, "1")


def zero_operator(space: Space) -> LinearOperator:
    return LinearOperator(space, lambda nu: {}, None, "0")


def is_zero_on(op: LinearOperator, degrees) -> list:
    """Monomials (from the given degrees) on which ``op`` does not vanish."""
    bad = []
    for m in degrees:
        for nu in monomials_of_degree(op.space.N, m):
            if op.on_monomial(nu):
                bad.append(nu)
    return bad


def equal_on(a: LinearOperator, b: LinearOperator, degrees) -> list:
    return is_zero_on(a - b, degrees)


# ---------------------------------------------------------------------------
# q-derivatives
# ---------------------------------------------------------------------------

def _sym(a):
    return qnum(a, SYMMETRIC)


def _basic(a):
    return qnum(a, BASIC)


def _partial_action(space: Space, k: int):
    """Monomial rule for the derivative d_k (1-based k)."""
    N, n = space.N, space.n
    rho2 = space.rho2
    mid = n  # 0-based middle index n+1 for odd N

    if k <= n:
        i = k - 1

        def act(nu):
            if nu[i] == 0:
                return {}
            c = _sym(nu[i]) * qpow(sum(nu[i + 1:]))
            return {_shift(nu, i, -1): c}
        return act

    if space.odd and k == n + 1:
        def act(nu):
            if nu[mid] == 0:
                return {}
            c = _basic(nu[mid]) * qpow(sum(nu[mid + 1:]))
            return {_shift(nu, mid, -1): c}
        return act

    kb = N - k + 1            # k = kb', kb <= n (1-based)
    i = kb - 1                # 0-based kb
    ip = k - 1                # 0-based kb'
    qq = qpow(1) - qpow(-1)

    def act(nu):
        acc = {}
        if nu[ip]:
            _add_into(acc, _shift(nu, ip, -1), _sym(nu[ip]) * qpow(nu[i] + sum(nu[ip + 1:])))
        for j in range(kb + 1, n + 1):       # 1-based j
            a, b = j - 1, N - j               # 0-based j, j'
            if nu[a] == 0 or nu[b] == 0:
                continue
            # d = nu_kb + ... + nu_{j-1} + nu_{(j-1)'} + ... + nu_{1'}
            d = sum(nu[i:a]) + sum(nu[N - j + 1:])
            c = _sym(nu[a]) * _sym(nu[b]) * qq * tpow(rho2[i] - rho2[a]) * qpow(d)
            mono = _shift(_shift(_shift(nu, i, 1), a, -1), b, -1)
            _add_into(acc, mono, c)
        if space.odd and nu[mid] >= 2:
            e = sum(nu[i:]) - 2 * nu[mid]
            c = (_basic(nu[mid] - 1) * _basic(nu[mid]) * qq / (1 + qpow(1))
                 * tpow(rho2[i] + 4) * qpow(e))
            _add_into(acc, _shift(_shift(nu, i, 1), mid, -2), c)
        return acc
    return act


_OPS = {}


def _memo(key, build):
    op = _OPS.get(key)
    if op is None:
        op = build()
        _OPS[key] = op
    return op


def partial(space: Space, k: int) -> LinearOperator:
    """The q-derivative d_k (1-based), degree shift -1."""
    if not 1 <= k <= space.N:
        raise IndexOutOfRange(f"derivative index {k} outside 1..{space.N}")
    return _memo(("partial", space.N, k),
                 lambda: LinearOperator(space, _partial_action(space, k), -1, f"d{k}"))


def xhat(space: Space, k: int) -> LinearOperator:
    """Left multiplication by x_k."""
    space.check_index(k)

    def build():
        g = Poly.gen(space, k)
        return LinearOperator(space, lambda nu: multiply(g, Poly.monomial(space, nu)).terms,
                              1, f"x{k}")
    return _memo(("xhat", space.N, k), build)


def qhat(space: Space) -> LinearOperator:
    """Left multiplication by the squared q-radius Q."""
    def build():
        Q = q_radius(space, 1)
        return LinearOperator(space, lambda nu: multiply(Q, Poly.monomial(space, nu)).terms,
                              2, "Q")
    return _memo(("qhat", space.N), build)


def multiplication(p: Poly, side="left") -> LinearOperator:
    sp = p.space
    if side == "left":
        return LinearOperator(sp, lambda nu: multiply(p, Poly.monomial(sp, nu)).terms, None,
                              "mul")
    return LinearOperator(sp, lambda nu: multiply(Poly.monomial(sp, nu), p).terms, None, "rmul")


# ---------------------------------------------------------------------------
# Laplacian
# ---------------------------------------------------------------------------

def _laplacian_direct_action(space: Space):
    N, n = space.N, space.n
    rho2 = space.rho2
    pref = 1 + qpow(N - 2)
    mid = n

    def act(nu):
        deg = sum(nu)
        if deg < 2:
            return {}
        acc = {}
        outer = pref * qpow(deg - 1)
        for j in range(1, n + 1):
            a, b = j - 1, N - j
            if a == b or nu[a] == 0 or nu[b] == 0:
                continue
            d = sum(nu[:a]) + sum(nu[b + 1:])
            c = outer * _sym(nu[a]) * _sym(nu[b]) * tpow(-rho2[a]) * qpow(d)
            _add_into(acc, _shift(_shift(nu, a, -1), b, -1), c)
        if space.odd and nu[mid] >= 2:
            e = deg - 2 * nu[mid] + 2
            c = outer * _basic(nu[mid] - 1) * _basic(nu[mid]) * qpow(e) / (1 + qpow(1))
            _add_into(acc, _shift(nu, mid, -2), c)
        return acc
    return act


def laplacian(space: Space, mode: str = "direct") -> LinearOperator:
    """The q-Laplacian.

    ``composed`` builds sum_i q^rho_i d_i d_i' from the derivatives;
    ``direct`` uses the closed monomial formula.  They agree (see verify).
    """
    if mode == "direct":
        return _memo(("lap-direct", space.N),
                     lambda: LinearOperator(space, _laplacian_direct_action(space), -2, "Lap"))
    if mode == "composed":
        def build():
            N = space.N
            return linear_combination(
                (space.qrho(i), compose(partial(space, i), partial(space, N - i + 1)))
                for i in range(1, N + 1))
        op = _memo(("lap-composed", space.N), build)
        op.shift = -2
        return op
    raise ValueError(f"unknown laplacian mode {mode!r}")


# ---------------------------------------------------------------------------
# diagonal operators
# ---------------------------------------------------------------------------

def diagonal(space: Space, which: str) -> LinearOperator:
    """Diagonal operators on monomials.

    ``gamma``: degree; ``c``/``c_inv``: q^(+-degree); ``qgamma``/``qgamma_inv``
    are aliases of ``c``/``c_inv`` (q^gamma is the same operator as c).
    """
    rules = {
        "gamma": lambda d: as_scalar(d),
        "c": lambda d: qpow(d),
        "c_inv": lambda d: qpow(-d),
        "qgamma": lambda d: qpow(d),
        "qgamma_inv": lambda d: qpow(-d),
    }
    if which not in rules:
        raise ValueError(f"unknown diagonal operator {which!r}")
    rule = rules[which]

    def act(nu):
        c = rule(sum(nu))
        return {} if c.is_zero() else {nu: c}
    return _memo(("diag", space.N, which), lambda: LinearOperator(space, act, 0, which))


def diagonal_fn(space: Space, fn, name="diag") -> LinearOperator:
    """Diagonal operator multiplying x^nu by fn(degree)."""
    def act(nu):
        c = as_scalar(fn(sum(nu)))
        return {} if c.is_zero() else {nu: c}
    return LinearOperator(space, act, 0, name)


def euler(space: Space) -> LinearOperator:
    """E = sum_k xhat_k d_k."""
    return _memo(("euler", space.N), lambda: linear_combination(
        (ONE, compose(xhat(space, k), partial(space, k))) for k in range(1, space.N + 1)))


# ---------------------------------------------------------------------------
# U_q(so_N) action
# ---------------------------------------------------------------------------

def _e(N, i):
    v = [0] * N
    v[i - 1] = 1
    return v


def _move(nu, plus, minus):
    """nu + e_plus - e_minus (1-based); None if an exponent would go negative."""
    lst = list(nu)
    lst[plus - 1] += 1
    lst[minus - 1] -= 1
    if lst[minus - 1] < 0:
        return None
    return tuple(lst)


def _two_term(t1, t2):
    acc = {}
    for mono, c in (t1, t2):
        if mono is not None and not c.is_zero():
            _add_into(acc, mono, c)
    return acc


def _chevalley_action(space: Space, gen: str, k: int):
    N, n = space.N, space.n

    def v(nu, j):
        return nu[j - 1]

    def pr(j):
        return N - j + 1

    if gen == "Khat":
        if not 1 <= k <= n:
            raise IndexOutOfRange(f"Khat index {k} outside 1..{n}")
        return lambda nu: {nu: qpow(v(nu, k) - v(nu, pr(k)))}
    if gen == "K":
        if not 1 <= k < n:
            raise IndexOutOfRange(f"K index {k} outside 1..{n - 1}")
        return lambda nu: {nu: qpow((v(nu, k) - v(nu, pr(k)))
                                    - (v(nu, k + 1) - v(nu, pr(k + 1))))}
    if gen not in ("E", "F"):
        raise ValueError(f"unknown generator {gen!r}")
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"{gen} index {k} outside 1..{n}")
    if N == 2:
        raise IndexOutOfRange("U_q(so_2) has no E/F generators")

    if k < n:
        kp, k1p = pr(k), pr(k + 1)
        if gen == "E":
            def act(nu):
                return _two_term(
                    (_move(nu, k, k + 1),
                     _sym(v(nu, k + 1)) * qpow(v(nu, k) - v(nu, k + 1) + 1)),
                    (_move(nu, k1p, kp),
                     -_sym(v(nu, kp)) * qpow(v(nu, k) - v(nu, k + 1) - v(nu, kp)
                                             + v(nu, k1p) + 1)))
        else:
            def act(nu):
                return _two_term(
                    (_move(nu, k + 1, k),
                     _sym(v(nu, k)) * qpow(-v(nu, k) + v(nu, k + 1) - v(nu, k1p)
                                           + v(nu, kp) + 1)),
                    (_move(nu, kp, k1p),
                     -_sym(v(nu, k1p)) * qpow(-v(nu, k1p) + v(nu, kp) + 1)))
        return act

    if space.odd:
        if gen == "E":
            def act(nu):
                return _two_term(
                    (_move(nu, n, n + 1),
                     _basic(v(nu, n + 1)) * tpow(2 * (v(nu, n) - v(nu, n + 1)) + 3)),
                    (_move(nu, n + 1, n + 2),
                     -_sym(v(nu, n + 2)) * qpow(v(nu, n) - v(nu, n + 2) + 1)))
        else:
            def act(nu):
                return _two_term(
                    (_move(nu, n + 1, n),
                     _sym(v(nu, n)) * tpow(2 * (-v(nu, n) + v(nu, n + 2)) + 1)),
                    (_move(nu, n + 2, n + 1),
                     -_basic(v(nu, n + 1)) * qpow(-v(nu, n + 1) + v(nu, n + 2) + 1)))
        return act

    if gen == "E":
        def act(nu):
            return _two_term(
                (_move(nu, n - 1, n + 1),
                 _sym(v(nu, n + 1)) * qpow(v(nu, n - 1) - v(nu, n + 1) + 1)),
                (_move(nu, n, n + 2),
                 -_sym(v(nu, n + 2)) * qpow(v(nu, n - 1) + v(nu, n) - v(nu, n + 1)
                                            - v(nu, n + 2) + 1)))
    else:
        def act(nu):
            return _two_term(
                (_move(nu, n + 1, n - 1),
                 _sym(v(nu, n - 1)) * qpow(-v(nu, n - 1) - v(nu, n) + v(nu, n + 1)
                                           + v(nu, n + 2) + 1)),
                (_move(nu, n + 2, n),
                 -_sym(v(nu, n)) * qpow(-v(nu, n) + v(nu, n + 2) + 1)))
    return act


def chevalley(space: Space, gen: str, k: int) -> LinearOperator:
    """Action of E_k, F_k, K_k or Khat_k (``gen`` in {"E", "F", "K", "Khat"})."""
    return _memo(("chev", space.N, gen, k),
                 lambda: LinearOperator(space, _chevalley_action(space, gen, k), 0, f"{gen}{k}"))


def chevalley_generators(space: Space) -> list:
    """All (gen, k) pairs defined for this N."""
    out = []
    n = space.n
    if space.N > 2:
        for k in range(1, n + 1):
            out += [("E", k), ("F", k)]
    out += [("K", k) for k in range(1, n)]
    out += [("Khat", k) for k in range(1, n + 1)]
    return out
