# Copyright 2026 The frobkit Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact integer linear algebra.

Convention: a matrix acts on column vectors. An ``r x n`` matrix ``A``
is the map Z^n -> Z^r, its image is ``A * Z^n`` and its cokernel is
``Z^r / A * Z^n``. Every other module in frobkit uses this convention; in
particular the class group of a toric ring is the cokernel of its facet
normal matrix.
"""

import collections
import logging
import math
from fractions import Fraction

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from frobkit.errors import DimensionMismatch

__all__ = [
    "IntMatrix",
    "SmithForm",
    "CokernelInvariants",
    "smith_normal_form",
    "cokernel_invariants",
    "solve_in_image",
    "is_torsion_in_cokernel",
    "torsion_multiplier",
    "unimodular_inverse",
    "rational_rank",
    "rational_nullspace",
]

logger = logging.getLogger(__name__)


class IntMatrix:
    """An immutable matrix of arbitrary-precision integers, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(int(x) for x in entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                "%d entries given for a %dx%d matrix" % (len(entries), rows, cols)
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [tuple(row) for row in rows]
        if cols is None:
            if not rows:
                raise DimensionMismatch("cols must be given for a matrix without rows")
            cols = len(rows[0])
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatch("ragged rows: expected %d columns" % cols)
        return cls(len(rows), cols, [x for row in rows for x in row])

    @classmethod
    def from_columns(cls, columns, rows):
        columns = [tuple(c) for c in columns]
        return cls.from_rows(
            [[c[i] for c in columns] for i in range(rows)], cols=len(columns)
        )

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    def __repr__(self):
        return "IntMatrix(%r)" % (self.to_rows(),)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (
            other.rows,
            other.cols,
            other.entries,
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __getitem__(self, key):
        i, j = key
        return self.entries[i * self.cols + j]

    @property
    def shape(self):
        return self.rows, self.cols

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return IntMatrix.from_rows(
            [self.column(j) for j in range(self.cols)], cols=self.rows
        )

    def apply(self, vector):
        """Matrix times column vector."""
        if len(vector) != self.cols:
            raise DimensionMismatch(
                "vector of length %d for a matrix with %d columns"
                % (len(vector), self.cols)
            )
        return tuple(
            sum(a * b for a, b in zip(self.row(i), vector)) for i in range(self.rows)
        )

    def __matmul__(self, other):
        if not isinstance(other, IntMatrix):
            return self.apply(other)
        if self.cols != other.rows:
            raise DimensionMismatch(
                "cannot multiply %dx%d by %dx%d"
                % (self.rows, self.cols, other.rows, other.cols)
            )
        columns = [other.column(j) for j in range(other.cols)]
        return IntMatrix.from_rows(
            [
                [sum(a * b for a, b in zip(self.row(i), c)) for c in columns]
                for i in range(self.rows)
            ],
            cols=other.cols,
        )

    def is_diagonal(self):
        return all(
            self[i, j] == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def diagonal(self):
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    def determinant(self):
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        if self.rows == 0:
            return 1
        return int(_to_domain(self.to_rows(), self.cols, ZZ).det())

    def rank(self):
        return rational_rank(self.to_rows(), self.cols)


SmithForm = collections.namedtuple("SmithForm", ["D", "U", "V", "rank"])
SmithForm.__doc__ = """Smith normal form U*A*V = D with U, V unimodular."""

CokernelInvariants = collections.namedtuple(
    "CokernelInvariants", ["free_rank", "torsion"]
)
CokernelInvariants.__doc__ = """Z^free_rank + sum Z/t for t in torsion."""


def _to_domain(rows, cols, domain=QQ):
    if not rows or not cols:
        return DomainMatrix.zeros((len(rows), cols), domain)
    return DomainMatrix.from_list(rows, domain)


def rational_rank(rows, cols):
    """Rank over QQ of a list of integer (or Fraction) rows."""
    if not rows or not cols:
        return 0
    return _to_domain(rows, cols).rank()


def rational_nullspace(rows, cols):
    """Integer basis of the rational null space of ``rows``.

    Each basis vector is scaled to a primitive integer vector.
    """
    if not rows:
        return [tuple(int(i == j) for j in range(cols)) for i in range(cols)]
    basis = []
    for vector in _to_domain(rows, cols).nullspace().to_list():
        fractions = [Fraction(int(x.numerator), int(x.denominator)) for x in vector]
        scale = 1
        for f in fractions:
            scale = math.lcm(scale, f.denominator)
        integral = [int(f * scale) for f in fractions]
        g = 0
        for x in integral:
            g = math.gcd(g, x)
        basis.append(tuple(x // g for x in integral))
    return basis


def smith_normal_form(A):
    """Return the Smith normal form of an integer matrix.

    Pivots are chosen as the entry of smallest absolute value in the
    remaining block, scanning row by row, so U and V are reproducible.
    """
    m, n = A.rows, A.cols
    D = A.to_rows()
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, k):
        D[i], D[k] = D[k], D[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in D:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def add_row(target, source, factor):
        # row_target += factor * row_source
        D[target] = [a + factor * b for a, b in zip(D[target], D[source])]
        U[target] = [a + factor * b for a, b in zip(U[target], U[source])]

    def add_col(target, source, factor):
        for row in D:
            row[target] += factor * row[source]
        for row in V:
            row[target] += factor * row[source]

    t = 0
    while t < min(m, n):
        pivot, smallest = None, None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (pivot is None or abs(D[i][j]) < smallest):
                    pivot, smallest = (i, j), abs(D[i][j])
        if pivot is None:
            break
        if pivot[0] != t:
            swap_rows(t, pivot[0])
        if pivot[1] != t:
            swap_cols(t, pivot[1])
        p = D[t][t]
        for i in range(t + 1, m):
            if D[i][t]:
                add_row(i, t, -(D[i][t] // p))
        for j in range(t + 1, n):
            if D[t][j]:
                add_col(j, t, -(D[t][j] // p))
        if any(D[i][t] for i in range(t + 1, m)) or any(
            D[t][j] for j in range(t + 1, n)
        ):
            # A remainder smaller than the pivot is left; pick it next.
            continue
        offender = next(
            (
                i
                for i in range(t + 1, m)
                if any(D[i][j] % p for j in range(t + 1, n))
            ),
            None,
        )
        if offender is not None:
            add_row(t, offender, 1)
            continue
        if p < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    rank = sum(1 for k in range(min(m, n)) if D[k][k])
    form = SmithForm(
        D=IntMatrix.from_rows(D, cols=n),
        U=IntMatrix.from_rows(U, cols=m),
        V=IntMatrix.from_rows(V, cols=n),
        rank=rank,
    )
    logger.debug("Smith normal form of %dx%d matrix: %r", m, n, form.D.diagonal())
    return form


def verify_smith_form(A, form):
    """Recompute U*A*V and check the Smith form invariants."""
    D = form.D
    if form.U @ A @ form.V != D or not D.is_diagonal():
        return False
    if abs(form.U.determinant()) != 1 or abs(form.V.determinant()) != 1:
        return False
    diagonal = D.diagonal()
    if any(d < 0 for d in diagonal):
        return False
    nonzero = [d for d in diagonal if d]
    if diagonal[: len(nonzero)] != tuple(nonzero) or len(nonzero) != form.rank:
        return False
    return all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))


def _invariants_from_form(rows, form):
    diagonal = form.D.diagonal()[: form.rank]
    return CokernelInvariants(
        free_rank=rows - form.rank, torsion=[d for d in diagonal if d >= 2]
    )


def cokernel_invariants(A, form=None):
    """Invariants of Z^rows / A * Z^cols."""
    if form is None:
        form = smith_normal_form(A)
    return _invariants_from_form(A.rows, form)


def _check_target(A, c):
    if len(c) != A.rows:
        raise DimensionMismatch(
            "target of length %d for a matrix with %d rows" % (len(c), A.rows)
        )


def solve_in_image(A, c, form=None):
    """Return an integer x with A * x == c, or None if there is none."""
    _check_target(A, c)
    if form is None:
        form = smith_normal_form(A)
    Uc = form.U.apply(c)
    diagonal = form.D.diagonal()
    y = [0] * A.cols
    for i, value in enumerate(Uc):
        if i < form.rank:
            if value % diagonal[i]:
                return None
            y[i] = value // diagonal[i]
        elif value:
            return None
    x = form.V.apply(y)
    assert A.apply(x) == tuple(c)
    return x


def is_torsion_in_cokernel(A, c, form=None):
    """True iff some positive multiple of c lies in the image of A."""
    _check_target(A, c)
    if form is None:
        form = smith_normal_form(A)
    Uc = form.U.apply(c)
    return all(value == 0 for value in Uc[form.rank :])


def torsion_multiplier(A, c, form=None):
    """Smallest k >= 1 with k*c in the image of A, or None if c is not torsion."""
    if form is None:
        form = smith_normal_form(A)
    if not is_torsion_in_cokernel(A, c, form):
        return None
    Uc = form.U.apply(c)
    diagonal = form.D.diagonal()
    k = 1
    for i in range(form.rank):
        k = math.lcm(k, diagonal[i] // math.gcd(diagonal[i], Uc[i]))
    return k


def unimodular_inverse(U):
    """Exact inverse of a square integer matrix of determinant +1 or -1."""
    if U.rows != U.cols:
        raise DimensionMismatch("inverse of a non-square matrix")
    if U.rows == 0:
        return U
    if abs(U.determinant()) != 1:
        raise ValueError("matrix is not unimodular")
    inverse = _to_domain(U.to_rows(), U.cols).inv().to_list()
    return IntMatrix.from_rows(
        [[int(x.numerator) for x in row] for row in inverse], cols=U.cols
    )
