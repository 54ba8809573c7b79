"""Named verification suites.

Every suite returns a report ``{"suite": name, "cells": [{"id", "ok", "detail"}]}``.
Cell ids are stable so reports can be diffed across runs.  All checks are
exact equalities in Q(t) unless a cell says otherwise.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Poly, Space, multiply, q_radius, star, weight_of, word, x
from .dualpair import dimension_bookkeeping, lowest_weight_check, omega, verify_sl2
from .harmonic import (alpha, closed_form_middle, dim_full, dim_harmonic, embed, harmonic_decompose,
                       is_harmonic, middle_coefficients, middle_jacobi_coefficients,
                       middle_jacobi_parameters, project, projector, reconstruct, t_poly, xi_basis,
                       zonal, _eps2)
from .linalg import leading_monomials_distinct, rank_of_polys
from .operators import (LinearOperator, chevalley, chevalley_generators, commutator, compose,
                        diagonal, diagonal_fn, euler, is_zero_on, laplacian, linear_combination,
                        partial, qhat, xhat)
from .scalar import (BASIC, ONE, SYMMETRIC, QScalar, little_q_jacobi_coefficients, qfactorial,
                     qnum, qpochhammer, qpow, tpow)
from .textio import format_poly, parse_poly, poly_from_json, poly_to_json

DEFAULT_SEED = 20240601


def _cell(cid, ok, detail=""):
    return {"id": cid, "ok": bool(ok), "detail": detail or ("ok" if ok else "failed")}


def _zero_cell(cid, op, degrees):
    bad = is_zero_on(op, degrees)
    return _cell(cid, not bad, "ok" if not bad else f"{len(bad)} bad monomials, e.g. {bad[:2]}")


def _pr(N, j):
    return N - j + 1


def random_poly(space: Space, rng: random.Random, max_deg=3, terms=3) -> Poly:
    """A few random monomials with small random rational coefficients and q-powers."""
    p = Poly.zero(space)
    for _ in range(rng.randint(1, terms)):
        d = rng.randint(0, max_deg)
        nu = rng.choice(space.monomials(d))
        c = QScalar(Fraction(rng.randint(-5, 5) or 1, rng.randint(1, 4))) * tpow(rng.randint(-3, 3))
        p = p + Poly.monomial(space, nu, c)
    return p


# ---------------------------------------------------------------------------
# algebra
# ---------------------------------------------------------------------------

def suite_algebra(Ns=(3, 4, 5, 6), deg=3, seed=DEFAULT_SEED, samples=200):
    cells = []
    for N in Ns:
        sp = Space(N)
        rng = random.Random(f"{seed}:{N}")
        bad_assoc = bad_star = bad_inv = bad_deg = 0
        for _ in range(samples):
            a, b, c = (random_poly(sp, rng, deg) for _ in range(3))
            ab = a * b
            if ab * c != a * (b * c):
                bad_assoc += 1
            if star(ab) != star(b) * star(a):
                bad_star += 1
            if star(star(a)) != a:
                bad_inv += 1
            ha, hb = a.homogeneous_components(), b.homogeneous_components()
            for da, pa in ha.items():
                for db, pb in hb.items():
                    if (pa * pb).degrees() != {da + db}:
                        bad_deg += 1
        cells.append(_cell(f"associativity:N={N}", not bad_assoc, f"{bad_assoc}/{samples} failures"))
        cells.append(_cell(f"star-antiautomorphism:N={N}", not bad_star, f"{bad_star}/{samples} failures"))
        cells.append(_cell(f"star-involution:N={N}", not bad_inv, f"{bad_inv}/{samples} failures"))
        cells.append(_cell(f"degree-additivity:N={N}", not bad_deg, f"{bad_deg} failures"))
    return {"suite": "algebra", "cells": cells}


# ---------------------------------------------------------------------------
# radius identities
# ---------------------------------------------------------------------------

def _x1_power_rhs(sp: Space, k: int) -> Poly:
    N = sp.N
    s = sp.qrho(1)  # q^(-rho_1') = q^(rho_1)
    Q1 = q_radius(sp, 1).scale(s / (ONE + qpow(N - 2)))
    Q2 = q_radius(sp, 2).scale(s / (ONE + qpow(N - 4)))
    out = Poly.constant(sp)
    for j in range(k):
        out = out * (Q1 - Q2.scale(qpow(2 * j)))
    return out


def suite_radius(Ns=(4, 5, 6), deg=3, seed=DEFAULT_SEED, central_Ns=(3, 4, 5, 6, 7)):
    cells = []
    for N in central_Ns:
        sp = Space(N)
        Q = q_radius(sp, 1)
        ok = all(Q * x(sp, i) == x(sp, i) * Q for i in range(1, N + 1))
        cells.append(_cell(f"Q-central:N={N}", ok))
    for N in Ns:
        sp = Space(N)
        n = sp.n
        Qs = {j: q_radius(sp, j) for j in range(1, n + 2)}
        ok = all(Qs[j] * Qs[k] == Qs[k] * Qs[j] for j in Qs for k in Qs)
        cells.append(_cell(f"Qj-commute:N={N}", ok))
        bad = []
        for j in range(1, n + 1):
            for i in range(1, N + 1):
                xi = x(sp, i)
                if i < j:
                    ok = xi * Qs[j] == (Qs[j] * xi).scale(qpow(2))
                elif i > _pr(N, j):
                    ok = xi * Qs[j] == (Qs[j] * xi).scale(qpow(-2))
                else:
                    ok = xi * Qs[j] == Qs[j] * xi
                if not ok:
                    bad.append((i, j))
        cells.append(_cell(f"x-Qj-commutation:N={N}", not bad, f"bad (i, j): {bad}" if bad else ""))
        bad = []
        for i in range(1, n + 1):
            lhs = word(sp, [i, _pr(N, i)])
            rhs = (Qs[i].scale(ONE / (ONE + qpow(N - 2 * i)))
                   - Qs[i + 1].scale(ONE / (ONE + qpow(N - 2 * i - 2)))).scale(sp.qrho(i))
            if lhs != rhs:
                bad.append(i)
        cells.append(_cell(f"xx'-via-Qi:N={N}", not bad, f"bad i: {bad}" if bad else ""))
        for k in range(1, deg + 1):
            lhs = word(sp, [1] * k + [N] * k)
            cells.append(_cell(f"x1^k-x1p^k-via-Q:N={N}:k={k}", lhs == _x1_power_rhs(sp, k)))
    return {"suite": "radius", "cells": cells}


# ---------------------------------------------------------------------------
# derivative relations
# ---------------------------------------------------------------------------

def inner_laplacian(sp: Space) -> LinearOperator:
    """Laplacian of the window x_2..x_{2'}, written with the full-space derivatives."""
    N = sp.N
    return linear_combination((sp.qrho(j), compose(partial(sp, j), partial(sp, _pr(N, j))))
                              for j in range(2, N))


def derivative_relations(sp: Space) -> dict:
    """Operators that must vanish identically."""
    N, n = sp.N, sp.n
    qq = qpow(1) - qpow(-1)
    d = lambda k: partial(sp, k)  # noqa: E731
    X = lambda k: xhat(sp, k)  # noqa: E731
    c = diagonal(sp, "c")
    out = {}
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            if j != _pr(N, i):
                out[f"d{i}d{j}=q^-1d{j}d{i}"] = compose(d(i), d(j)) - compose(d(j), d(i)).scale(qpow(-1))
    for i in range(1, n + 1):
        ip = _pr(N, i)
        lhs = compose(d(ip), d(i)) - compose(d(i), d(ip))
        if i < n or (sp.odd and i == n):
            inner = linear_combination((sp.qrho(k), compose(d(k), d(_pr(N, k))))
                                       for k in range(i + 1, _pr(N, i + 1) + 1))
            if i < n:
                coef = -qq / (tpow(sp.rho2[i - 1] - 2) + tpow(2 - sp.rho2[i - 1]))
                out[f"primed-pair:i={i}"] = lhs - inner.scale(coef)
            else:
                mid = compose(d(n + 1), d(n + 1))
                out[f"primed-pair-middle:i={i}"] = lhs - mid.scale(-(tpow(1) - tpow(-1)))
                out[f"primed-pair-middle-as-general:i={i}"] = lhs - inner.scale(
                    -qq / (tpow(sp.rho2[i - 1] - 2) + tpow(2 - sp.rho2[i - 1])))
        else:
            out[f"primed-pair-even-middle:i={i}"] = lhs
    for k in range(1, N + 1):
        kp = _pr(N, k)
        rhs = compose(X(k), d(k)).scale(qpow((1 if k == kp else 0) - 1)) + c
        for j in range(1, k):
            rhs = rhs - compose(X(j), d(j)).scale(qq)
        if k > kp:
            rhs = rhs + compose(X(kp), d(kp)).scale(qq * tpow(2 * sp.rho2[kp - 1]))
        out[f"d{k}x{k}"] = compose(d(k), X(k)) - rhs
        for j in range(1, N + 1):
            if j in (k, kp):
                continue
            rhs = compose(X(j), d(k))
            jp = _pr(N, j)
            if k > jp:
                rhs = rhs + compose(X(kp), d(jp)).scale(qq * tpow(sp.rho2[jp - 1] - sp.rho2[k - 1]))
            out[f"d{k}x{j}"] = compose(d(k), X(j)) - rhs
        if k != kp:
            out[f"d{k}x{kp}=q x{kp}d{k}"] = compose(d(k), X(kp)) - compose(X(kp), d(k)).scale(qpow(1))
        out[f"c x{k}=q x{k} c"] = compose(c, X(k)) - compose(X(k), c).scale(qpow(1))
        out[f"c d{k}=q^-1 d{k} c"] = compose(c, d(k)) - compose(d(k), c).scale(qpow(-1))
    return out


def euler_relations(sp: Space) -> dict:
    N = sp.N
    qq = qpow(1) - qpow(-1)
    E = euler(sp)
    c, c_inv = diagonal(sp, "c"), diagonal(sp, "c_inv")
    Qh = qhat(sp)
    out = {}
    for k in range(1, N + 1):
        Xk = xhat(sp, k)
        rhs = (compose(Xk, E).scale(qpow(-1))
               + compose(Qh, partial(sp, _pr(N, k))).scale(
                   qq / (ONE + qpow(N - 2)) * tpow(2 * N - sp.rho2[k - 1] - 4))
               + compose(Xk, c))
        out[f"E x{k}"] = compose(E, Xk) - rhs
    closed = ((c - c_inv).scale(ONE / qq)
              + compose(compose(Qh, laplacian(sp)), c_inv).scale(
                  qq / (ONE + qpow(N - 2)) ** 2 * qpow(N - 1)))
    out["E-closed-form"] = E - closed
    return out


def suite_derivatives(Ns=(3, 4, 5, 6), deg=4, seed=DEFAULT_SEED):
    cells = []
    for N in Ns:
        sp = Space(N)
        degrees = range(deg + 1)
        for name, op in derivative_relations(sp).items():
            cells.append(_zero_cell(f"N={N}:{name}:deg<={deg}", op, degrees))
        for name, op in euler_relations(sp).items():
            cells.append(_zero_cell(f"N={N}:{name}:deg<={deg}", op, degrees))
    return {"suite": "derivatives", "cells": cells}


# ---------------------------------------------------------------------------
# Laplacian equivalence
# ---------------------------------------------------------------------------

def suite_laplace_equivalence(Ns=(3, 4, 5, 6), deg=5, seed=DEFAULT_SEED):
    cells = []
    for N in Ns:
        sp = Space(N)
        op = laplacian(sp, "composed") - laplacian(sp, "direct")
        cells.append(_zero_cell(f"composed=direct:N={N}:deg<={deg}", op, range(deg + 1)))
    return {"suite": "laplace-equivalence", "cells": cells}


# ---------------------------------------------------------------------------
# Q-hat / Laplacian identities and the bracket convention
# ---------------------------------------------------------------------------

def _lapQ_factor(N):
    """The k-independent factor q^(-N+3) (1+q^(N-2))^2/(1+q)^2."""
    return qpow(-N + 3) * (ONE + qpow(N - 2)) ** 2 / (ONE + qpow(1)) ** 2


def lap_q_power(N: int, k: int, conv=BASIC) -> QScalar:
    """Coefficient of Q^(k-1) in Lap(Q^k)."""
    return _lapQ_factor(N) * qnum(2 * k, conv) * qnum(N + 2 * k - 2, conv)


def bracket_convention_report(N: int) -> dict:
    """Which bracket convention reproduces Lap(Q), computed from the closed Laplacian."""
    sp = Space(N)
    lapQ = laplacian(sp)(q_radius(sp, 1))
    direct = lapQ.coeff((0,) * N)
    matches = {conv: direct == lap_q_power(N, 1, conv) for conv in (BASIC, SYMMETRIC)}
    return {"N": N, "value": str(direct), "matches": matches}


def suite_laplace_identities(Ns=(3, 4, 5, 6), deg=4, seed=DEFAULT_SEED, kmax=3):
    cells = []
    for N in Ns:
        rep = bracket_convention_report(N)
        ok = rep["matches"][BASIC]
        cells.append(_cell(f"convention:N={N}", ok,
                           f"Lap(Q) = {rep['value']}; basic brackets match: {rep['matches'][BASIC]}; "
                           f"symmetric brackets match: {rep['matches'][SYMMETRIC]}; "
                           f"adopted: basic [a] = (1-q^a)/(1-q)"))
    for N in Ns:
        sp = Space(N)
        L, Qh = laplacian(sp), qhat(sp)
        Q = q_radius(sp, 1)
        for k in range(1, kmax + 1):
            Qk = Qh ** k
            lhs = compose(L, Qk) - compose(Qk, L).scale(qpow(2 * k))
            gam = diagonal_fn(sp, lambda d, k=k: _lapQ_factor(N) * qnum(2 * k, BASIC)
                              * qnum(N + 2 * k + 2 * d - 2, BASIC), f"bracket(gamma,k={k})")
            rhs = compose(Qh ** (k - 1), gam)
            cells.append(_zero_cell(f"lap-qhat^k-commutator:N={N}:k={k}:deg<={deg}", lhs - rhs, range(deg + 1)))
            got = L(Q ** k)
            want = (Q ** (k - 1)).scale(lap_q_power(N, k, BASIC))
            cells.append(_cell(f"lap(Q^k):N={N}:k={k}", got == want))
    return {"suite": "laplace-identities", "cells": cells}


# ---------------------------------------------------------------------------
# equivariance
# ---------------------------------------------------------------------------

def suite_equivariance(Ns=(3, 4, 5, 6), deg=4, seed=DEFAULT_SEED, project_Ns=(3, 4, 5)):
    cells = []
    for N in Ns:
        sp = Space(N)
        L, Qh = laplacian(sp), qhat(sp)
        degrees = range(deg + 1)
        for gen, k in chevalley_generators(sp):
            g = chevalley(sp, gen, k)
            cells.append(_zero_cell(f"[Lap,{gen}{k}]:N={N}:deg<={deg}", commutator(L, g), degrees))
            cells.append(_zero_cell(f"[Qhat,{gen}{k}]:N={N}:deg<={deg}", commutator(Qh, g), degrees))
        bad = [nu for m in degrees for nu in sp.monomials(m) for i in range(1, sp.n + 1)
               if chevalley(sp, "Khat", i).on_monomial(nu) != {nu: qpow(weight_of(sp, nu)[i - 1])}]
        cells.append(_cell(f"Khat-weights:N={N}", not bad, f"bad: {bad[:3]}" if bad else ""))
    for N in project_Ns:
        sp = Space(N)
        P = projector(sp)
        for gen, k in chevalley_generators(sp):
            g = chevalley(sp, gen, k)
            cells.append(_zero_cell(f"[H,{gen}{k}]:N={N}:deg<={deg}", commutator(P, g), range(deg + 1)))
    return {"suite": "equivariance", "cells": cells}


# ---------------------------------------------------------------------------
# projector
# ---------------------------------------------------------------------------

def projector_rank(sp: Space, m: int, seed=DEFAULT_SEED) -> dict:
    """Certified rank of H_m(A_m).

    Lower bound: rank of the image matrix specialized mod a large prime.
    Upper bound: H_m kills the dim A_{m-2} independent elements Q x^mu, so the
    rank is at most dim A_m - dim A_{m-2}.
    """
    images = [project(Poly.monomial(sp, nu)) for nu in sp.monomials(m)]
    lower = rank_of_polys(images, seed=seed)
    Q = q_radius(sp, 1)
    kernel = [Q * Poly.monomial(sp, mu) for mu in sp.monomials(m - 2)] if m >= 2 else []
    killed = all(not project(p, m) for p in kernel)
    independent = leading_monomials_distinct(kernel)
    upper = dim_full(sp.N, m) - len(kernel) if (killed and independent) else dim_full(sp.N, m)
    return {"lower": lower, "upper": upper, "rank": lower if lower == upper else None}


def suite_projector(Ns=(3, 4, 5, 6), deg=5, seed=DEFAULT_SEED):
    cells = []
    for N in Ns:
        sp = Space(N)
        L = laplacian(sp)
        for m in range(deg + 1):
            bad_h = bad_i = 0
            for nu in sp.monomials(m):
                h = project(Poly.monomial(sp, nu))
                if L(h):
                    bad_h += 1
                if project(h, m) != h:
                    bad_i += 1
            cells.append(_cell(f"harmonic:N={N}:m={m}", not bad_h, f"{bad_h} non-harmonic images"))
            cells.append(_cell(f"idempotent:N={N}:m={m}", not bad_i, f"{bad_i} failures"))
            r = projector_rank(sp, m, seed)
            want = dim_harmonic(N, m)
            cells.append(_cell(f"rank:N={N}:m={m}", r["rank"] == want,
                               f"lower {r['lower']}, upper {r['upper']}, dim H_m = {want}"))
            ok = m < 2 or dim_full(N, m) == dim_harmonic(N, m) + dim_full(N, m - 2)
            cells.append(_cell(f"direct-sum-dims:N={N}:m={m}", ok))
    cells.append(_cell("alpha0=1", all(alpha(N, m, 0) == ONE for N in Ns for m in range(deg + 1))))
    return {"suite": "projector", "cells": cells}


# ---------------------------------------------------------------------------
# harmonic decomposition
# ---------------------------------------------------------------------------

def suite_decomposition(Ns=(3, 4, 5, 6), deg=5, seed=DEFAULT_SEED):
    cells = []
    for N in Ns:
        sp = Space(N)
        for m in range(deg + 1):
            bad = []
            for nu in sp.monomials(m):
                p = Poly.monomial(sp, nu)
                parts = harmonic_decompose(p)
                if (reconstruct(sp, parts) != p
                        or any(not is_harmonic(h) or h.degrees() != {m - 2 * j} for j, h in parts)):
                    bad.append(nu)
            cells.append(_cell(f"decompose:N={N}:m={m}", not bad, f"bad: {bad[:3]}" if bad else ""))
    return {"suite": "decomposition", "cells": cells}


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def classical_limit_check() -> dict:
    """project(x_2^2) for N = 3 at q = 1 against the classical x^2 - r^2/3."""
    sp = Space(3)
    h = project(Poly.monomial(sp, (0, 2, 0)))
    at_one = {nu: c.eval_at(1) for nu, c in h.terms.items()}
    # classical r^2 = 2 x_1 x_3 + x_2^2 in commuting variables
    classical = {(0, 2, 0): Fraction(1) - Fraction(1, 3), (1, 0, 1): -Fraction(2, 3)}
    return {"ok": at_one == classical, "value": {str(k): str(v) for k, v in sorted(at_one.items())}}


def suite_closed_forms(Ns=None, deg=5, seed=DEFAULT_SEED, kmax=2, odd_Ns=(3, 5, 7)):
    # the middle generator exists only for odd N
    if Ns is None:
        Ns = (3, 5)
    else:
        Ns = odd_Ns = tuple(N for N in Ns if N % 2)
    cells = []
    for N in odd_Ns:
        sp = Space(N)
        L = laplacian(sp)
        mid = sp.n + 1
        for m in range(deg + 1):
            p = word(sp, [mid] * m)
            cur = p
            for k in range(1, kmax + 1):
                cur = L(cur)
                if m - 2 * k < 0:
                    ok = not cur
                else:
                    coef = (qpow(k) * ((ONE + qpow(N - 2)) / (ONE + qpow(1))) ** k
                            * qfactorial(m, BASIC) / qfactorial(m - 2 * k, BASIC))
                    ok = cur == word(sp, [mid] * (m - 2 * k)).scale(coef)
                cells.append(_cell(f"lap^k(x_mid^m):N={N}:m={m}:k={k}", ok))
    for N in Ns:
        sp = Space(N)
        for m in range(min(deg, 4) + 1):
            ok = closed_form_middle(N, m) == project(word(sp, [sp.n + 1] * m))
            cells.append(_cell(f"middle-closed-form=project:N={N}:m={m}", ok))
            k, al, be = middle_jacobi_parameters(N, m)
            ok = middle_jacobi_coefficients(N, m) == middle_coefficients(N, m)
            cells.append(_cell(f"little-q-jacobi:N={N}:m={m}", ok,
                               f"P_{k}^({al},{be})(x; q^2) reproduces the series: {ok}"))
    # printed alpha = -N/2 + m + 1 does not reproduce the series for m >= 2
    N, m = 3, 2
    k, al, be = middle_jacobi_parameters(N, m, printed=True)
    raw = little_q_jacobi_coefficients(k, al, be, base_exp=2)
    scale = (ONE + qpow(1)) / (qpow(1) * (ONE + qpow(N - 2)))
    printed = [c * scale ** j for j, c in enumerate(raw)]
    cells.append(_cell("little-q-jacobi-printed-alpha-differs:N=3:m=2",
                       printed != middle_coefficients(N, m),
                       "alpha = -N/2 + m + 1 gives different coefficients; alpha = -N/2 - m + 1 is used"))
    lim = classical_limit_check()
    cells.append(_cell("q->1:N=3:project(x2^2)", lim["ok"], f"coefficients at t = 1: {lim['value']}"))
    return {"suite": "closed-forms", "cells": cells}


# ---------------------------------------------------------------------------
# zonal and t-polynomials
# ---------------------------------------------------------------------------

def _x1_x1p(sp, a, b):
    return word(sp, [1] * a + [sp.N] * b)


def _sym_fact_ratio(a, k):
    return qfactorial(a, SYMMETRIC) / qfactorial(a - k, SYMMETRIC)


def suite_zonal(Ns=None, deg=4, seed=DEFAULT_SEED, tpoly_Ns=(4, 5, 6), lmax=2, mmax=3):
    # the inner window x_2..x_{2'} needs N >= 4
    if Ns is None:
        Ns = (4, 5)
    else:
        Ns = tpoly_Ns = tuple(N for N in Ns if N >= 4)
    cells = []
    for N in Ns:
        sp = Space(N)
        for m in range(deg + 1):
            for m1 in range(m + 1):
                ok = zonal(N, m1, m - m1) == project(_x1_x1p(sp, m1, m - m1))
                cells.append(_cell(f"zonal=project:N={N}:m1={m1}:m1p={m - m1}", ok))
    for N in tpoly_Ns:
        sp = Space(N)
        L, Lin = laplacian(sp), inner_laplacian(sp)
        d1, d1p = partial(sp, 1), partial(sp, N)
        for l in range(lmax + 1):
            inner = [embed(h, sp) for _, h in xi_basis(N - 2, l)]
            bad = [i for i, h in enumerate(inner) if Lin(h) or d1p(h) or L(h)]
            cells.append(_cell(f"inner-harmonic-killed:N={N}:l={l}", not bad, f"bad: {bad}" if bad else ""))
            bad45 = bad40 = 0
            for m1 in range(3):
                for m1p in range(3):
                    m = m1 + m1p + l
                    t = t_poly(N, m, m1, m1p, l)
                    for h in inner:
                        p = _x1_x1p(sp, m1, m1p) * h
                        if project(p) != t * h:
                            bad45 += 1
                        rhs = compose(d1p, d1)(p).scale(sp.qrho(1) + sp.qrho(N))
                        if L(p) != rhs:
                            bad40 += 1
            cells.append(_cell(f"tpoly-factorization:N={N}:l={l}", not bad45, f"{bad45} failures"))
            cells.append(_cell(f"lap-reduces-to-d1p-d1:N={N}:l={l}", not bad40, f"{bad40} failures"))
        bad = 0
        for l in range(lmax + 1):
            for nu in Space(N - 2).monomials(l):
                p = embed(Poly.monomial(Space(N - 2), nu), sp)
                for a in range(3):
                    for b in range(3):
                        pre = _x1_x1p(sp, a, b)
                        if Lin(pre * p) != pre * Lin(p):
                            bad += 1
        cells.append(_cell(f"inner-lap-commutes-with-x1-x1p:N={N}", not bad, f"{bad} failures"))
        rng = random.Random(f"{seed}:window:{N}")
        sub = Space(N - 2)
        bad = 0
        for _ in range(20):
            a, b = random_poly(sub, rng, 2), random_poly(sub, rng, 2)
            if embed(a * b, sp) != embed(a, sp) * embed(b, sp):
                bad += 1
            if embed(laplacian(sub)(a), sp) != Lin(embed(a, sp)):
                bad += 1
        cells.append(_cell(f"window-embedding:N={N}", not bad, f"{bad} failures"))
    for N in Ns:
        sp = Space(N)
        L = laplacian(sp)
        eps2 = _eps2(sp)
        for l in range(lmax + 1):
            inner = [embed(h, sp) for _, h in xi_basis(N - 2, l)]
            bad41 = bad44 = 0
            for m1 in range(mmax + 1):
                for m1p in range(mmax + 1):
                    for h in inner:
                        p = _x1_x1p(sp, m1, m1p) * h
                        got = L(p)
                        if m1 and m1p:
                            coef = ((sp.qrho(1) + sp.qrho(N)) * qnum(m1, SYMMETRIC)
                                    * qnum(m1p, SYMMETRIC) * qpow(m1 + m1p - 1))
                            want = (_x1_x1p(sp, m1 - 1, m1p - 1) * h).scale(coef)
                        else:
                            want = Poly.zero(sp)
                        if got != want:
                            bad41 += 1
                        cur = p
                        for k in range(1, 3):
                            cur = L(cur)
                            if k <= min(m1, m1p):
                                coef = ((ONE + qpow(N - 2)) ** k * qpow((m1 + m1p - k) * k)
                                        * tpow(-(2 * sp.n - eps2) * k)
                                        * _sym_fact_ratio(m1, k) * _sym_fact_ratio(m1p, k))
                                want = (_x1_x1p(sp, m1 - k, m1p - k) * h).scale(coef)
                            else:
                                want = Poly.zero(sp)
                            if cur != want:
                                bad44 += 1
            cells.append(_cell(f"lap-on-x1-x1p-h:N={N}:l={l}", not bad41, f"{bad41} failures"))
            cells.append(_cell(f"lap^k-on-x1-x1p-h:N={N}:l={l}", not bad44, f"{bad44} failures"))
    return {"suite": "zonal", "cells": cells}


# ---------------------------------------------------------------------------
# separated-variable bases
# ---------------------------------------------------------------------------

def suite_xi_basis(Ns=None, deg=None, seed=DEFAULT_SEED, cases=((3, 3), (4, 4), (5, 3), (6, 2)),
                   level_Ns=(5, 6, 7), level_m=5):
    if Ns is not None:
        cases = tuple((N, deg if deg is not None else 3) for N in Ns)
    elif deg is not None:
        cases = tuple((N, deg) for N, _ in cases)
    cells = []
    for N, mmax in cases:
        sp = Space(N)
        for m in range(mmax + 1):
            basis = [p for _, p in xi_basis(N, m)]
            want = dim_harmonic(N, m)
            cells.append(_cell(f"count:N={N}:m={m}", len(basis) == want, f"{len(basis)} vs {want}"))
            cells.append(_cell(f"harmonic:N={N}:m={m}", all(is_harmonic(p) for p in basis)))
            r = rank_of_polys(basis, seed=seed)
            cells.append(_cell(f"full-rank:N={N}:m={m}", r == len(basis), f"rank {r}"))
            cells.append(_cell(f"in-A_m:N={N}:m={m}", all(p.degrees() == {m} for p in basis)))
    for N in level_Ns:
        for m in range(level_m + 1):
            total = sum(dim_harmonic(N - 2, m - a - b) if N - 2 >= 3 else _dim2(m - a - b)
                        for a in range(m + 1) for b in range(m - a + 1))
            cells.append(_cell(f"level-dims:N={N}:m={m}", total == dim_harmonic(N, m),
                               f"{total} vs {dim_harmonic(N, m)}"))
    return {"suite": "xi-basis", "cells": cells}


def _dim2(m):
    return dim_harmonic(2, m)


# ---------------------------------------------------------------------------
# sphere
# ---------------------------------------------------------------------------

def suite_sphere(Ns=(3, 4, 5, 6), deg=4, seed=DEFAULT_SEED,
                 gram_cases=((4, 3), (5, 3), (6, 2)), zonal_Ns=(4, 5), zonal_m=4, t0=Fraction(4, 5)):
    from .sphere import gram, h_functional, inner, off_diagonal_entries

    cells = []
    for N in Ns:
        sp = Space(N)
        Q = q_radius(sp, 1)
        cells.append(_cell(f"h(Q)=1:N={N}", h_functional(Q) == ONE))
        cells.append(_cell(f"h(1)=1:N={N}", h_functional(Poly.constant(sp)) == ONE))
        bad = [nu for m in range(deg + 1) for nu in sp.monomials(m)
               if h_functional(Q * Poly.monomial(sp, nu)) != h_functional(Poly.monomial(sp, nu))]
        cells.append(_cell(f"h(Qa)=h(a):N={N}:deg<={deg}", not bad, f"bad: {bad[:3]}" if bad else ""))
        monos = [nu for m in range(3) for nu in sp.monomials(m)]
        bad = [(a, b) for a in monos for b in monos
               if weight_of(sp, a) != weight_of(sp, b)
               and inner(Poly.monomial(sp, a), Poly.monomial(sp, b))]
        cells.append(_cell(f"weight-orthogonality:N={N}", not bad, f"bad: {bad[:3]}" if bad else ""))
    for N, mmax in gram_cases:
        labels, basis = [], []
        for m in range(mmax + 1):
            for lab, p in xi_basis(N, m):
                labels.append(m)
                basis.append(p)
        G = gram(basis)
        off = off_diagonal_entries(G)
        within = [(i, j) for i, j in off if labels[i] == labels[j]]
        across = [(i, j) for i, j in off if labels[i] != labels[j]]
        zero_diag = [i for i in range(len(basis)) if G[i][i].is_zero()]
        cells.append(_cell(f"gram-diagonal:N={N}:m<={mmax}", not within and not zero_diag,
                           f"{len(within)} off-diagonal, {len(zero_diag)} zero diagonal"))
        cells.append(_cell(f"H_m-perp-H_l:N={N}:m<={mmax}", not across,
                           f"{len(across)} nonzero cross-degree entries"))
        nonpos = [i for i in range(len(basis)) if G[i][i].eval_at(t0) <= 0]
        cells.append(_cell(f"positivity(numeric,t0={t0}):N={N}:m<={mmax}", not nonpos,
                           f"{len(nonpos)} nonpositive diagonal values"))
    for N in zonal_Ns:
        sp = Space(N)
        Kh = chevalley(sp, "Khat", 1)
        for m in range(zonal_m + 1):
            fam = [zonal(N, a, m - a) for a in range(m + 1)]
            G = gram(fam)
            cells.append(_cell(f"zonal-orthogonal:N={N}:m={m}", not off_diagonal_entries(G)))
            invariant = [a for a, p in enumerate(fam) if Kh(p) == p]
            want = [m // 2] if m % 2 == 0 else []
            cells.append(_cell(f"zonal-Khat1-invariant:N={N}:m={m}", invariant == want,
                               f"invariant m1 values: {invariant}"))
    return {"suite": "sphere", "cells": cells}


# ---------------------------------------------------------------------------
# dual pair
# ---------------------------------------------------------------------------

def suite_dual_pair(Ns=(3, 4, 5), deg=6, seed=DEFAULT_SEED, mmax=3, rmax=3, dims_M=6):
    cells = []
    for N in Ns:
        sp = Space(N)
        for c in verify_sl2(sp, deg):
            cells.append(_cell(f"sl2:{c['id']}", c["ok"], c["detail"]))
        w = omega(sp)
        one = Poly.constant(sp)
        Q = q_radius(sp, 1)
        cells.append(_cell(f"omega(k)1:N={N}", w.k(one) == one.scale(tpow(N))))
        cells.append(_cell(f"omega(e)1=Q:N={N}", w.e(one) == Q))
        for m in range(mmax + 1):
            res = lowest_weight_check(sp, m, rmax)
            bad = [c["id"] for c in res if not c["ok"]]
            cells.append(_cell(f"lowest-weight:N={N}:m={m}:r<={rmax}", not bad,
                               f"{len(res)} checks, failures: {bad[:3]}"))
        for M in range(dims_M + 1):
            cells.append(_cell(f"dims:N={N}:M={M}", dimension_bookkeeping(N, M)))
    return {"suite": "dual-pair", "cells": cells}


# ---------------------------------------------------------------------------
# text and JSON round trip
# ---------------------------------------------------------------------------

def suite_roundtrip(Ns=(3, 4, 5, 6), deg=3, seed=DEFAULT_SEED, samples=100):
    cells = []
    rng = random.Random(f"{seed}:roundtrip")
    bad_text = bad_json = 0
    for i in range(samples):
        N = Ns[i % len(Ns)]
        sp = Space(N)
        p = random_poly(sp, rng, deg, terms=4)
        if i % 4 == 3:
            # projections carry multi-term rational coefficients
            top = p.homogeneous_components()
            p = project(top[max(top)])
        if parse_poly(format_poly(p), N) != p:
            bad_text += 1
        if poly_from_json(poly_to_json(p)) != p:
            bad_json += 1
    cells.append(_cell("text-roundtrip", not bad_text, f"{bad_text}/{samples} failures"))
    cells.append(_cell("json-roundtrip", not bad_json, f"{bad_json}/{samples} failures"))
    return {"suite": "roundtrip", "cells": cells}


SUITES = {
    "algebra": suite_algebra,
    "radius": suite_radius,
    "derivatives": suite_derivatives,
    "laplace-equivalence": suite_laplace_equivalence,
    "laplace-identities": suite_laplace_identities,
    "equivariance": suite_equivariance,
    "projector": suite_projector,
    "decomposition": suite_decomposition,
    "closed-forms": suite_closed_forms,
    "zonal": suite_zonal,
    "xi-basis": suite_xi_basis,
    "sphere": suite_sphere,
    "dual-pair": suite_dual_pair,
    "roundtrip": suite_roundtrip,
}


def run_suite(name: str, Ns=None, deg=None, seed=DEFAULT_SEED) -> dict:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    if Ns is not None and any(N < 3 for N in Ns):
        raise ValueError("verification suites need N >= 3")
    kwargs = {"seed": seed}
    if Ns is not None:
        kwargs["Ns"] = tuple(Ns)
    if deg is not None:
        kwargs["deg"] = deg
    return SUITES[name](**kwargs)


def report_ok(report: dict) -> bool:
    return all(c["ok"] for c in report["cells"])
