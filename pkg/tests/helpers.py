"""Independent oracles for the test suite.

Everything here recomputes algebra operations through a different route
than the library: quaternion products are explicit component formulas (not
table lookups), dim-8 products go through literal pair arithmetic, norms
are hard-coded signature sums, and null spaces come from sympy.  Agreement
between these and the library is what the structural tests assert.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from compalg import GaussRational

# signature of the norm form per algebra, unit first
SIGNATURE = {
    "H": (1, 1, 1, 1),
    "Hs": (1, -1, 1, -1),
    "Hc": (1, 1, 1, 1),
    "O": (1,) * 8,
    "Os": (1, -1, 1, -1, 1, -1, 1, -1),
    "Oc": (1,) * 8,
}


def quat_mul(u, v):
    # e1 e2 = e3, e2 e3 = e1, e3 e1 = e2, squares -1
    return (
        u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3],
        u[0] * v[1] + u[1] * v[0] + u[2] * v[3] - u[3] * v[2],
        u[0] * v[2] + u[2] * v[0] + u[3] * v[1] - u[1] * v[3],
        u[0] * v[3] + u[3] * v[0] + u[1] * v[2] - u[2] * v[1],
    )


def split_quat_mul(u, v):
    # e1 e2 = e3 = -e2 e1, e2 e3 = e1 = -e3 e2, e3 e1 = -e2 = -e1 e3,
    # e1^2 = e3^2 = +1, e2^2 = -1
    return (
        u[0] * v[0] + u[1] * v[1] - u[2] * v[2] + u[3] * v[3],
        u[0] * v[1] + u[1] * v[0] + u[2] * v[3] - u[3] * v[2],
        u[0] * v[2] + u[2] * v[0] + u[1] * v[3] - u[3] * v[1],
        u[0] * v[3] + u[3] * v[0] + u[1] * v[2] - u[2] * v[1],
    )


def conj4(u):
    return (u[0], -u[1], -u[2], -u[3])


def _pair_mul(qmul, c1, c2):
    m1, n1 = c1[:4], (c1[4], c1[5], -c1[6], c1[7])
    m2, n2 = c2[:4], (c2[4], c2[5], -c2[6], c2[7])
    t1, t2 = qmul(m1, m2), qmul(conj4(n2), n1)
    m = tuple(a - b for a, b in zip(t1, t2))
    t3, t4 = qmul(n1, conj4(m2)), qmul(n2, m1)
    n = tuple(a + b for a, b in zip(t3, t4))
    return (m[0], m[1], m[2], m[3], n[0], n[1], -n[2], n[3])


def oracle_mul(algebra_name, c1, c2):
    """Coefficient vectors in, coefficient vector out; no structure tables."""
    if algebra_name in ("H", "Hc"):
        return quat_mul(c1, c2)
    if algebra_name == "Hs":
        return split_quat_mul(c1, c2)
    if algebra_name in ("O", "Oc"):
        return _pair_mul(quat_mul, c1, c2)
    if algebra_name == "Os":
        return _pair_mul(split_quat_mul, c1, c2)
    raise ValueError(algebra_name)


def oracle_norm(algebra_name, coeffs):
    return sum(g * c * c for g, c in zip(SIGNATURE[algebra_name], coeffs))


def oracle_inner(algebra_name, c1, c2):
    return sum(g * x * y for g, x, y in zip(SIGNATURE[algebra_name], c1, c2))


def to_sympy(x):
    if isinstance(x, GaussRational):
        return sympy.Rational(x.re) + sympy.Rational(x.im) * sympy.I
    if isinstance(x, Fraction):
        return sympy.Rational(x.numerator, x.denominator)
    return sympy.Integer(x)


def sympy_matrix(grid):
    return sympy.Matrix([[to_sympy(x) for x in row] for row in grid])


def sympy_nullity(grid):
    m = sympy_matrix(grid)
    return m.cols - m.rank()


def same_span(vectors_a, vectors_b):
    """Exact span equality of two vector lists, via sympy ranks."""
    ma = sympy.Matrix([[to_sympy(x) for x in v] for v in vectors_a])
    mb = sympy.Matrix([[to_sympy(x) for x in v] for v in vectors_b])
    stacked = ma.col_join(mb)
    return ma.rank() == mb.rank() == stacked.rank()


from compalg import H, Hc, Hs, O, Oc, Os  # noqa: E402

# Adversarial negator inputs: each chosen so every earlier candidate in the
# scan list has zero norm, forcing the stated position to fire.  Over the
# reals a zero-norm candidate has zero coefficients; over the Gaussian
# rationals a nonzero candidate can still be null (1 + i^2 = 0).
NEGATOR_POSITION_CASES = [
    (O, (0, 1, 0, 0, 0, 0, 0, 0), 0),
    (O, (0, 0, 0, 1, 0, 0, 0, 0), 1),
    (O, (0, 0, 0, 0, 1, 1, 0, 0), 2),
    (O, (0, 0, 0, 0, 0, 0, 1, 0), 3),
    (Os, (0, 0, 1, 0, 0, 0, 0, 0), 0),
    (Os, (0, 0, 0, 0, 0, 0, 1, 0), 1),
    (Os, (0, 1, 0, 0, 0, 0, 0, 0), 2),
    (Os, (0, 0, 0, 0, 0, 1, 0, 0), 3),
    (Oc, (0, 1, 0, 0, 0, 0, 0, 0), 0),
    (Oc, (0, 0, 0, 1, 0, 0, 0, 0), 1),
    (Oc, (0, 1, GaussRational(0, 1), 1, 0, 0, 0, 0), 2),
    (Oc, (0, 0, 0, 0, 1, 0, 0, 0), 3),
    (Oc, (0, 0, 0, 0, 0, 1, 0, 0), 4),
    (Oc, (0, 0, 0, 0, 0, 0, 1, 0), 5),
    (Oc, (0, 0, 0, 0, 0, 0, 0, 1), 6),
    (H, (0, 1, 0, 0), 0),
    (H, (0, 0, 0, 1), 1),
    (Hc, (0, 1, 0, 0), 0),
    (Hc, (0, 0, 0, 1), 1),
    (Hc, (0, 1, GaussRational(0, 1), 1), 2),
    (Hs, (0, 1, 0, 0), 0),
    (Hs, (0, 0, 1, 0), 1),
]
