"""Ranks of coefficient matrices over Q(t).

Two routes are provided. ``rank_exact`` runs fraction-free (Bareiss)
elimination over Z[t] and is meant for small matrices. ``rank_lower_bound``
specializes t to a residue mod a large prime; the result never exceeds the
rank over Q(t), so together with an independent upper bound it certifies the
rank of large matrices cheaply.
"""

from __future__ import annotations

import random

import flint

from .algebra import Poly
from .scalar import PoleAtPoint, QScalar

PRIME = (1 << 61) - 1


def coefficient_matrix(polys, basis) -> list:
    """Rows = polys, columns = monomials in ``basis`` (entries QScalar)."""
    index = {nu: j for j, nu in enumerate(basis)}
    zero = QScalar(0)
    rows = []
    for p in polys:
        row = [zero] * len(basis)
        for nu, c in p.terms.items():
            row[index[nu]] = c
        rows.append(row)
    return rows


def _integral_rows(rows) -> list:
    """Scale every row by the lcm of its denominators; entries become fmpz_poly."""
    out = []
    for row in rows:
        den = flint.fmpz_poly(1)
        for c in row:
            if not c.is_zero():
                den = den * c.den // den.gcd(c.den)
        out.append([c.num * (den // c.den) if not c.is_zero() else flint.fmpz_poly(0)
                    for c in row])
    return out


def rank_exact(rows) -> int:
    """Rank over Q(t) by Bareiss elimination in Z[t]."""
    M = _integral_rows(rows)
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    prev = flint.fmpz_poly(1)
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][col]
        for i in range(r + 1, nrows):
            a = M[i][col]
            row = M[i]
            for j in range(col, ncols):
                val = p * row[j] - a * M[r][j]
                quo, rem = divmod(val, prev)
                if rem != 0:
                    raise ArithmeticError("Bareiss division was not exact")
                row[j] = quo
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def rank_lower_bound(rows, seed: int = 0, tries: int = 5) -> int:
    """Rank of the matrix with t specialized to a random residue mod a prime."""
    if not rows:
        return 0
    rng = random.Random(seed)
    for _ in range(tries):
        t0 = rng.randrange(2, PRIME - 1)
        try:
            vals = [[c.eval_mod(t0, PRIME) for c in row] for row in rows]
        except PoleAtPoint:
            continue
        return flint.nmod_mat(vals, PRIME).rank()
    raise PoleAtPoint("no pole-free specialization found")


def leading_monomials_distinct(polys) -> bool:
    """True when the nonzero polys have pairwise distinct leading monomials,
    which forces them to be linearly independent."""
    seen = set()
    for p in polys:
        if p.is_zero():
            return False
        nu, _ = p.leading()
        if nu in seen:
            return False
        seen.add(nu)
    return True


def rank_of_polys(polys, seed: int = 0) -> int:
    """Specialized rank of a list of polynomials over their joint support."""
    polys = list(polys)
    support = sorted({nu for p in polys for nu in p.terms})
    return rank_lower_bound(coefficient_matrix(polys, support), seed=seed)


def exact_rank_of_polys(polys) -> int:
    polys = list(polys)
    support = sorted({nu for p in polys for nu in p.terms})
    return rank_exact(coefficient_matrix(polys, support))


__all__ = ["coefficient_matrix", "rank_exact", "rank_lower_bound",
           "leading_monomials_distinct", "rank_of_polys", "exact_rank_of_polys", "Poly"]
