"""Structure tables and exact element arithmetic for the six composition
algebras.

Naming and basis conventions
----------------------------
* ``H``  -- quaternions over the rationals
* ``Hs`` -- split quaternions (indices 1, 3 square to +1, displayed primed)
* ``Hc`` -- quaternions with Gaussian-rational coefficients
* ``O``  -- octonions
* ``Os`` -- split octonions (indices 1, 3, 5, 7 square to +1, primed)
* ``Oc`` -- octonions with Gaussian-rational coefficients

Coefficients are positional: index 0 is the unit, indices 1..dim-1 are the
imaginary units.  Primes are display-only.  The dim-8 tables are generated
from the dim-4 ones through the doubling product

    (m1 + n1*e4)(m2 + n2*e4) = (m1*m2 - conj(n2)*n1) + (n1*conj(m2) + n2*m1)*e4

with the index-6 unit fixed as -(e2*e4), so the derived units satisfy
e5 = e1*e4, e6 = -e2*e4, e7 = e3*e4; the generated tables are cross-checked
against those sign conventions at import time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import AlgebraMismatch, ConsistencyError, NotInvertible
from .scalars import RATIONAL_TYPES, GaussRational, exact_div

# dim-4 tables: table[i][j] = (k, sign) meaning e_i * e_j = sign * e_k.
# Quaternions: e1^2 = e2^2 = e3^2 = -1, e1 e2 = e3 = -e2 e1 (cyclically).
QUATERNION_TABLE = (
    ((0, 1), (1, 1), (2, 1), (3, 1)),
    ((1, 1), (0, -1), (3, 1), (2, -1)),
    ((2, 1), (3, -1), (0, -1), (1, 1)),
    ((3, 1), (2, 1), (1, -1), (0, -1)),
)

# Split quaternions: e1^2 = e3^2 = +1, e2^2 = -1,
# e1 e2 = e3 = -e2 e1, e2 e3 = e1 = -e3 e2, e3 e1 = -e2 = -e1 e3.
SPLIT_QUATERNION_TABLE = (
    ((0, 1), (1, 1), (2, 1), (3, 1)),
    ((1, 1), (0, 1), (3, 1), (2, 1)),
    ((2, 1), (3, -1), (0, -1), (1, 1)),
    ((3, 1), (2, -1), (1, -1), (0, 1)),
)


def _mul4(table, u, v):
    out = [0, 0, 0, 0]
    for i, x in enumerate(u):
        if x == 0:
            continue
        row = table[i]
        for j, y in enumerate(v):
            if y == 0:
                continue
            k, s = row[j]
            out[k] += s * x * y
    return out


def _conj4(u):
    return [u[0], -u[1], -u[2], -u[3]]


def _split_halves(vec8):
    # positional coefficients -> doubling pair; index 6 carries the sign flip
    return list(vec8[:4]), [vec8[4], vec8[5], -vec8[6], vec8[7]]


def _join_halves(m, n):
    return [m[0], m[1], m[2], m[3], n[0], n[1], -n[2], n[3]]


def build_doubled_table(qtable):
    """Generate a dim-8 structure table from a dim-4 one by doubling.

    Raises ConsistencyError if any derived unit product fails to be a signed
    basis unit or the doubled-basis sign conventions do not come out, which
    would signal a transcription bug in the dim-4 table or the packing.
    """
    rows = []
    for i in range(8):
        u = [0] * 8
        u[i] = 1
        m1, n1 = _split_halves(u)
        row = []
        for j in range(8):
            v = [0] * 8
            v[j] = 1
            m2, n2 = _split_halves(v)
            m = [a - b for a, b in zip(_mul4(qtable, m1, m2), _mul4(qtable, _conj4(n2), n1))]
            n = [a + b for a, b in zip(_mul4(qtable, n1, _conj4(m2)), _mul4(qtable, n2, m1))]
            w = _join_halves(m, n)
            nonzero = [(k, c) for k, c in enumerate(w) if c != 0]
            if len(nonzero) != 1 or nonzero[0][1] not in (1, -1):
                raise ConsistencyError(
                    f"product of units {i} and {j} is not a signed basis unit: {w}"
                )
            row.append(nonzero[0])
        rows.append(tuple(row))
    table = tuple(rows)

    for j in range(8):
        if table[0][j] != (j, 1) or table[j][0] != (j, 1):
            raise ConsistencyError("unit row/column of the doubled table is broken")
    for i in range(4):
        for j in range(4):
            if table[i][j] != qtable[i][j]:
                raise ConsistencyError("doubled table does not extend the dim-4 table")
    for (i, j), want in {(1, 4): (5, 1), (2, 4): (6, -1), (3, 4): (7, 1)}.items():
        if table[i][j] != want:
            raise ConsistencyError(
                f"doubled-basis sign convention violated at e{i}*e{j}: {table[i][j]}"
            )
    return table


class Algebra:
    """One of the six algebras: dimension, scalar field, display conventions
    and the structure table.  Instances are immutable singletons."""

    __slots__ = (
        "name",
        "dim",
        "complex_field",
        "primed",
        "table",
        "metric",
        "scalar_types",
    )

    def __init__(self, name, dim, complex_field, primed, table):
        self.name = name
        self.dim = dim
        self.complex_field = complex_field
        self.primed = frozenset(primed)
        self.table = table
        # metric[k] = norm of the k-th basis unit: 1 for the unit,
        # -(sign of e_k^2) for the imaginary units
        self.metric = (1,) + tuple(-table[k][k][1] for k in range(1, dim))
        self.scalar_types = (
            (int, Fraction, GaussRational) if complex_field else RATIONAL_TYPES
        )

    @property
    def is_division(self):
        """True when the norm form is positive definite (H and O)."""
        return not self.complex_field and all(g == 1 for g in self.metric)

    def label(self, k):
        if k == 0:
            return "1"
        return f"e{k}'" if k in self.primed else f"e{k}"

    def labels(self):
        return tuple(self.label(k) for k in range(self.dim))

    def element(self, coeffs):
        return Element(self, coeffs)

    def basis(self, k):
        if not 0 <= k < self.dim:
            raise ValueError(f"basis index {k} out of range for {self.name}")
        coeffs = [0] * self.dim
        coeffs[k] = 1
        return Element._raw(self, tuple(coeffs))

    def zero(self):
        return Element._raw(self, (0,) * self.dim)

    def one(self):
        return self.basis(0)

    def __repr__(self):
        return f"<algebra {self.name}>"


class Element:
    """An element of one of the six algebras: an algebra plus an exact
    coefficient vector.  Immutable; all arithmetic returns new elements."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != algebra.dim:
            raise ValueError(
                f"{algebra.name} needs {algebra.dim} coefficients, got {len(coeffs)}"
            )
        ok = algebra.scalar_types
        for c in coeffs:
            if not isinstance(c, ok):
                raise TypeError(
                    f"coefficient {c!r} is not a valid {algebra.name} scalar"
                )
        self.algebra = algebra
        self.coeffs = coeffs

    @classmethod
    def _raw(cls, algebra, coeffs):
        # internal fast path: coefficients already known to be field-closed
        self = object.__new__(cls)
        self.algebra = algebra
        self.coeffs = coeffs
        return self

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    @property
    def is_pure(self):
        return self.coeffs[0] == 0

    def scalar_part(self):
        return self.coeffs[0]

    def pure_part(self):
        return Element._raw(self.algebra, (0,) + self.coeffs[1:])

    # -- ring operations ----------------------------------------------------

    def _check_same(self, other):
        if self.algebra is not other.algebra:
            raise AlgebraMismatch(
                f"mixed algebras: {self.algebra.name} and {other.algebra.name}"
            )

    def __add__(self, other):
        if isinstance(other, Element):
            self._check_same(other)
            return Element._raw(
                self.algebra, tuple(x + y for x, y in zip(self.coeffs, other.coeffs))
            )
        if isinstance(other, self.algebra.scalar_types):
            return Element._raw(
                self.algebra, (self.coeffs[0] + other,) + self.coeffs[1:]
            )
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Element):
            self._check_same(other)
            return Element._raw(
                self.algebra, tuple(x - y for x, y in zip(self.coeffs, other.coeffs))
            )
        if isinstance(other, self.algebra.scalar_types):
            return Element._raw(
                self.algebra, (self.coeffs[0] - other,) + self.coeffs[1:]
            )
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Element._raw(self.algebra, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check_same(other)
            algebra = self.algebra
            table = algebra.table
            coeffs_b = other.coeffs
            out = [0] * algebra.dim
            for i, x in enumerate(self.coeffs):
                if x == 0:
                    continue
                row = table[i]
                for j, y in enumerate(coeffs_b):
                    if y == 0:
                        continue
                    k, s = row[j]
                    if s == 1:
                        out[k] = out[k] + x * y
                    else:
                        out[k] = out[k] - x * y
            return Element._raw(algebra, tuple(out))
        if isinstance(other, self.algebra.scalar_types):
            return Element._raw(self.algebra, tuple(c * other for c in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, self.algebra.scalar_types):
            return Element._raw(self.algebra, tuple(other * c for c in self.coeffs))
        return NotImplemented

    # -- involution, norm, inverse ------------------------------------------

    def conjugate(self):
        """Negate every imaginary coefficient, keep the scalar part."""
        return Element._raw(
            self.algebra, (self.coeffs[0],) + tuple(-c for c in self.coeffs[1:])
        )

    def inner(self, other):
        """Symmetric bilinear form: scalar part of (a conj(b) + b conj(a))/2.

        The nonscalar coefficients of the defining expression vanish
        identically; that is asserted as a self-check of table symmetry.
        """
        self._check_same(other)
        s = self * other.conjugate()
        if self.coeffs == other.coeffs:
            combined, halve = s.coeffs, False
        else:
            t = other * self.conjugate()
            combined = tuple(x + y for x, y in zip(s.coeffs, t.coeffs))
            halve = True
        assert all(c == 0 for c in combined[1:]), "inner product has a nonscalar part"
        return exact_div(combined[0], 2) if halve else combined[0]

    def norm(self):
        """The quadratic norm N(a) = inner(a, a) = a * conj(a)."""
        return self.inner(self)

    def inverse(self):
        """conj(a) / N(a); raises NotInvertible when the norm vanishes."""
        n = self.norm()
        if n == 0:
            raise NotInvertible(f"{self!s} has zero norm")
        c = self.conjugate()
        return Element._raw(self.algebra, tuple(exact_div(x, n) for x in c.coeffs))

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.algebra is other.algebra and all(
                x == y for x, y in zip(self.coeffs, other.coeffs)
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.algebra.name, tuple(hash(c) for c in self.coeffs)))

    def __bool__(self):
        return not self.is_zero

    def __str__(self):
        from .parsing import format_element

        return format_element(self)

    def __repr__(self):
        return f"<{self.algebra.name} {self}>"


def sandwich(p, a):
    """Conjugation (p*a)*p^-1; requires invertible p.

    Equality with p*(a*p^-1) holds by alternativity and is asserted.
    """
    if p.algebra is not a.algebra:
        raise AlgebraMismatch(f"mixed algebras: {p.algebra.name} and {a.algebra.name}")
    n = p.norm()
    if n == 0:
        raise NotInvertible(f"sandwich by {p!s}, which has zero norm")
    pc = p.conjugate()
    left = (p * a) * pc
    assert left == p * (a * pc), "sandwich product is not well defined"
    return Element._raw(p.algebra, tuple(exact_div(c, n) for c in left.coeffs))


@dataclass(frozen=True)
class Classification:
    """Membership flags of an element: pure (zero scalar part), nonzero, and
    invertible (nonzero norm); the four classical subsets derive from them."""

    pure: bool
    nonzero: bool
    invertible: bool

    @property
    def in_pure(self):
        return self.pure

    @property
    def in_pure_nonzero(self):
        return self.pure and self.nonzero

    @property
    def in_invertible(self):
        return self.invertible

    @property
    def in_pure_invertible(self):
        return self.pure and self.invertible


def classify(a):
    return Classification(a.is_pure, not a.is_zero, a.norm() != 0)


H = Algebra("H", 4, False, (), QUATERNION_TABLE)
Hs = Algebra("Hs", 4, False, (1, 3), SPLIT_QUATERNION_TABLE)
Hc = Algebra("Hc", 4, True, (), QUATERNION_TABLE)
O = Algebra("O", 8, False, (), build_doubled_table(QUATERNION_TABLE))
Os = Algebra("Os", 8, False, (1, 3, 5, 7), build_doubled_table(SPLIT_QUATERNION_TABLE))
Oc = Algebra("Oc", 8, True, (), build_doubled_table(QUATERNION_TABLE))

ALGEBRAS = {alg.name: alg for alg in (H, Hs, Hc, O, Os, Oc)}

CAYLEY_EXTENSION = {H: O, Hs: Os, Hc: Oc}


def embed_in_cayley(a):
    """Embed a dim-4 element into its dim-8 extension (identity on dim 8)."""
    if a.algebra.dim == 8:
        return a
    target = CAYLEY_EXTENSION[a.algebra]
    return Element._raw(target, a.coeffs + (0,) * 4)
