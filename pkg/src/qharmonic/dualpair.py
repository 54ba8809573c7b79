"""The U_q(sl_2) action generated by Qhat, the q-Laplacian and the degree operator."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Poly, Space, q_radius
from .harmonic import dim_full, dim_harmonic, xi_basis
from .operators import (LinearOperator, compose, diagonal_fn, is_zero_on, laplacian, qhat)
from .scalar import ONE, SYMMETRIC, QScalar, qnum, qpow, tpow


@dataclass(frozen=True)
class OmegaTriple:
    k: LinearOperator
    k_inv: LinearOperator
    e: LinearOperator
    f: LinearOperator


def omega(space: Space) -> OmegaTriple:
    """omega(k) = q^(N/2) q^gamma, omega(e) = Qhat,
    omega(f) = -q^(N/2)/(1 + q^(N-2))^2 * Lap q^(-gamma)."""
    N = space.N
    half = tpow(N)  # q^(N/2)
    k = diagonal_fn(space, lambda d: half * qpow(d), "k")
    k_inv = diagonal_fn(space, lambda d: (half * qpow(d)).inverse(), "k^-1")
    e = qhat(space)
    qmg = diagonal_fn(space, lambda d: qpow(-d), "q^-gamma")
    f = compose(laplacian(space), qmg).scale(-half / (ONE + qpow(N - 2)) ** 2)
    f.shift = -2
    return OmegaTriple(k, k_inv, e, f)


def sl2_relations(space: Space) -> dict:
    """The three defining relations as operators that must vanish."""
    w = omega(space)
    q = qpow(1)
    return {
        "ke=q^2ek": compose(w.k, w.e) - compose(w.e, w.k).scale(qpow(2)),
        "kf=q^-2fk": compose(w.k, w.f) - compose(w.f, w.k).scale(qpow(-2)),
        "ef-fe=(k-k^-1)/(q-q^-1)": (compose(w.e, w.f) - compose(w.f, w.e)
                                    - (w.k - w.k_inv).scale(ONE / (q - q.inverse()))),
    }


def verify_sl2(space: Space, deg_max: int) -> list:
    """[{"id", "ok", "detail"}] for each relation checked on A_0..A_deg_max."""
    cells = []
    for name, op in sl2_relations(space).items():
        bad = is_zero_on(op, range(deg_max + 1))
        cells.append({"id": f"N={space.N}:{name}:deg<={deg_max}", "ok": not bad,
                      "detail": "ok" if not bad else f"fails on {bad[:3]}"})
    return cells


def f_coefficient(N: int, m: int, r: int) -> QScalar:
    """-[r]_q [r + m + N/2 - 1]_q, symmetric brackets (N/2 may be half-integer)."""
    # [a]_q for half-integer a: (q^a - q^-a)/(q - q^-1)
    two_a = 2 * (r + m - 1) + N
    bracket = (tpow(two_a) - tpow(-two_a)) / (qpow(1) - qpow(-1))
    return -qnum(r, SYMMETRIC) * bracket


def k_eigenvalue(N: int, m: int, r: int) -> QScalar:
    """q^(2r + m + N/2)."""
    return tpow(4 * r + 2 * m + N)


def lowest_weight_check(space: Space, m: int, r_max: int) -> list:
    """Check omega(e), omega(f), omega(k) on Q^r h for every basis element h of H_m."""
    N = space.N
    w = omega(space)
    Q = q_radius(space, 1)
    cells = []
    for label, h in xi_basis(N, m):
        Qr = Poly.constant(space)
        for r in range(r_max + 1):
            v = Qr * h
            up = Q * v
            ok_e = w.e(v) == up
            ok_f = w.f(v) == (Qr_prev * h).scale(f_coefficient(N, m, r)) if r else w.f(v).is_zero()
            ok_k = w.k(v) == v.scale(k_eigenvalue(N, m, r))
            cells.append({"id": f"N={N}:m={m}:r={r}:{label}", "ok": ok_e and ok_f and ok_k,
                          "detail": f"e={ok_e} f={ok_f} k={ok_k}"})
            Qr_prev = Qr
            Qr = Qr * Q
    return cells


def dimension_bookkeeping(N: int, M: int) -> bool:
    """dim A_M = sum over m <= M, m = M mod 2, of dim H_m."""
    return dim_full(N, M) == sum(dim_harmonic(N, m) for m in range(M % 2, M + 1, 2))
