"""Exact computer algebra for q-harmonic polynomials on the quantum Euclidean space.

Scalars live in Q(t) with t = q^(1/2); polynomials are kept in the PBW normal
form x_1^nu_1 ... x_N^nu_N.
"""

from .algebra import Poly, Space, make_space, multiply, q_radius, star, word, x
from .harmonic import dim_full, dim_harmonic, harmonic_decompose, project, t_poly, xi_basis, zonal
from .operators import chevalley, laplacian, partial, qhat, xhat
from .scalar import QScalar, qnum, qpochhammer, qpow, tpow
from .sphere import gram, h_functional, inner
from .textio import format_poly, parse_poly, parse_scalar

__version__ = "0.1.0"
