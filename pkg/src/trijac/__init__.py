"""Exact-arithmetic verification of triangular-matrix polynomial identities.

The package constructs families of lower triangular matrices whose entries
are Jacobi and Gegenbauer polynomials, their explicit inverses, the
associated two-parameter group flows and biorthogonal systems, and the
Askey-Wilson connection coefficients whose q -> 1 limits reproduce the
shifted-monomial connection pair.  Every identity is checked in exact
rational arithmetic; the q -> 1 limits are checked by certified convergence
trends computed from exact error sequences.
"""

from .jacobi import ParameterPoint, gegenbauer, jacobi, legendre
from .poly import Poly, Rational, pochhammer
from .series import Series, gegenbauer_generating, jacobi_generating
from .triangles import TriWindow, build_L, build_M, tri_inverse, tri_mul

__all__ = [
    "ParameterPoint",
    "Poly",
    "Rational",
    "Series",
    "TriWindow",
    "build_L",
    "build_M",
    "gegenbauer",
    "gegenbauer_generating",
    "jacobi",
    "jacobi_generating",
    "legendre",
    "pochhammer",
    "tri_inverse",
    "tri_mul",
]
