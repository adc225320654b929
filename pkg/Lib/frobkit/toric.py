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

"""Normal toric rings and their divisorial modules.

``R = k[C ∩ Z^n]`` with ``C = {u : V*u >= 0}``. A coefficient vector
``a`` of length r stands for the divisorial module
``M_a = {u in Z^n : <u, v_i> >= a_i}``; its isomorphism class is the image
of ``a`` in ``Cl(R) = Z^r / V*Z^n``. Classes are stored in Smith normal
form coordinates: the rows of ``U*a`` that carry torsion (reduced modulo
their invariant factor) and the free rows.
"""

import collections
import itertools
import logging
import math

from sympy import isprime

from frobkit.cone import lattice_points_shifted, validate
from frobkit.errors import (
    DimensionMismatch,
    HypothesisViolated,
    PseudoReflection,
    ValidationError,
    VerificationFailed,
)
from frobkit.lattice import (
    IntMatrix,
    cokernel_invariants,
    smith_normal_form,
    unimodular_inverse,
)

__all__ = [
    "ToricRing",
    "DivClass",
    "toric_ring",
    "polynomial_ring",
    "cyclic_quotient_ring",
    "class_group",
    "class_of",
    "representative",
    "hom_class",
    "dual_class",
    "tensor_class",
    "canonical_class",
    "canonical_dual_class",
    "is_gorenstein",
    "module_degrees",
    "order_of",
    "all_classes",
    "describe_group",
]

logger = logging.getLogger(__name__)


DivClass = collections.namedtuple("DivClass", ["free_part", "torsion_part"])
DivClass.__doc__ = """An element of Cl(R): free coordinates and torsion
residues, each residue reduced into [0, d) for its invariant factor d."""


class ToricRing:
    """The semigroup ring of a validated cone in characteristic p.

    ``class_presentation`` is the facet-normal matrix read as the divisor
    map ``u -> (<u, v_i>)_i``; its columns are the divisors of the
    coordinate characters. ``alpha`` is zero: the coefficient field F_p is
    perfect.
    """

    __slots__ = (
        "cone",
        "p",
        "name",
        "class_presentation",
        "smith",
        "invariants_of_Cl",
        "alpha",
        "_torsion_rows",
        "_U_inverse",
    )

    def __init__(self, cone, p, name=None):
        self.cone = cone
        self.p = p
        self.name = name
        self.alpha = 0
        self.class_presentation = cone.V
        self.smith = smith_normal_form(cone.V)
        self.invariants_of_Cl = cokernel_invariants(cone.V, self.smith)
        diagonal = self.smith.D.diagonal()
        self._torsion_rows = tuple(
            (i, diagonal[i]) for i in range(self.smith.rank) if diagonal[i] >= 2
        )
        self._U_inverse = None

    def __repr__(self):
        label = self.name or "toric"
        return "<ToricRing %s n=%d p=%d Cl=%s>" % (
            label,
            self.n,
            self.p,
            describe_group(self.invariants_of_Cl),
        )

    def __eq__(self, other):
        if not isinstance(other, ToricRing):
            return NotImplemented
        return self.cone == other.cone and self.p == other.p

    def __hash__(self):
        return hash((self.cone, self.p))

    @property
    def n(self):
        return self.cone.n

    @property
    def r(self):
        return self.cone.r

    @property
    def moduli(self):
        """Torsion invariant factors, in Smith order."""
        return tuple(d for _, d in self._torsion_rows)

    @property
    def free_rank(self):
        return self.invariants_of_Cl.free_rank

    @property
    def trivial(self):
        return DivClass((0,) * self.free_rank, (0,) * len(self._torsion_rows))

    def divisor(self, u):
        """div(u) = (<u, v_i>)_i, a principal coefficient vector."""
        return self.class_presentation.apply(u)

    def make_class(self, free_part, torsion_part):
        free_part = tuple(int(x) for x in free_part)
        torsion_part = tuple(int(x) for x in torsion_part)
        if len(free_part) != self.free_rank or len(torsion_part) != len(
            self.moduli
        ):
            raise DimensionMismatch(
                "class coordinates %r/%r do not fit %s"
                % (free_part, torsion_part, describe_group(self.invariants_of_Cl))
            )
        return DivClass(
            free_part, tuple(t % d for t, d in zip(torsion_part, self.moduli))
        )

    def add(self, a, b):
        return self.make_class(
            (x + y for x, y in zip(a.free_part, b.free_part)),
            (x + y for x, y in zip(a.torsion_part, b.torsion_part)),
        )

    def negate(self, a):
        return self.make_class(
            (-x for x in a.free_part), (-x for x in a.torsion_part)
        )

    def scale(self, k, a):
        """k * a for an integer k (possibly a large power of p)."""
        return DivClass(
            tuple(k * x for x in a.free_part),
            tuple((k % d) * t % d for t, d in zip(a.torsion_part, self.moduli)),
        )

    def class_of(self, a):
        if len(a) != self.r:
            raise DimensionMismatch(
                "coefficient vector of length %d for %d facets" % (len(a), self.r)
            )
        Ua = self.smith.U.apply(a)
        return DivClass(
            tuple(Ua[self.smith.rank :]),
            tuple(Ua[i] % d for i, d in self._torsion_rows),
        )

    def representative(self, cls):
        if self._U_inverse is None:
            self._U_inverse = unimodular_inverse(self.smith.U)
        y = [0] * self.r
        for (i, _), t in zip(self._torsion_rows, cls.torsion_part):
            y[i] = t
        for k, x in enumerate(cls.free_part):
            y[self.smith.rank + k] = x
        a = self._U_inverse.apply(y)
        assert self.class_of(a) == cls
        return a


def describe_group(invariants):
    """Human form of a finitely generated abelian group, e.g. ``Z + Z/2``."""
    parts = []
    if invariants.free_rank == 1:
        parts.append("Z")
    elif invariants.free_rank > 1:
        parts.append("Z^%d" % invariants.free_rank)
    parts.extend("Z/%d" % d for d in invariants.torsion)
    return " + ".join(parts) or "0"


def _check_characteristic(p):
    if not isinstance(p, int) or not isprime(p):
        raise ValidationError("characteristic must be a prime, got %r" % (p,))


def toric_ring(V, p, name=None):
    """Validate the facet normals ``V`` and build the ring over F_p."""
    _check_characteristic(p)
    cone = validate(V)
    ring = ToricRing(cone, p, name=name)
    logger.debug("Built %r", ring)
    return ring


def polynomial_ring(n, p):
    return toric_ring(IntMatrix.identity(n), p, name="poly%d" % n)


def _check_pseudo_reflections(d, weights):
    for i in range(len(weights)):
        g = d
        for j, w in enumerate(weights):
            if j != i:
                g = math.gcd(g, w)
        if g != 1:
            raise PseudoReflection(
                "1/%d%r fixes the hyperplane u_%d = 0 pointwise up to order %d"
                % (d, tuple(weights), i + 1, g)
            )


def cyclic_quotient_ring(n, d, weights, p, name=None):
    """The invariant ring of the cyclic group 1/d(w_1, ..., w_n).

    The ring is the semigroup ring of the positive orthant intersected with
    ``M = {u : sum w_i u_i = 0 mod d}``, written in a basis of M; its class
    group is Z/d.
    """
    weights = [int(w) for w in weights]
    if len(weights) != n:
        raise DimensionMismatch("%d weights for n = %d" % (len(weights), n))
    if d < 1:
        raise ValidationError("group order must be positive, got %d" % d)
    _check_pseudo_reflections(d, weights)
    _check_characteristic(p)
    if d % p == 0:
        logger.warning(
            "Characteristic %d divides the group order %d; the quotient is "
            "not linearly reductive",
            p,
            d,
        )

    # Kernel of (u, k) -> w.u - d*k, projected to u, is a basis of M.
    relation = IntMatrix.from_rows([weights + [-d]])
    form = smith_normal_form(relation)
    kernel = [form.V.column(j)[:n] for j in range(form.rank, n + 1)]
    basis = IntMatrix.from_columns(kernel, rows=n)
    assert abs(basis.determinant()) == d

    ring = toric_ring(basis, p, name=name)
    expected = [d] if d > 1 else []
    if ring.invariants_of_Cl.free_rank or ring.invariants_of_Cl.torsion != expected:
        raise VerificationFailed(
            "class group of 1/%d%r came out as %s"
            % (d, tuple(weights), describe_group(ring.invariants_of_Cl))
        )
    return ring


def class_group(R):
    return R.invariants_of_Cl


def class_of(R, a):
    return R.class_of(a)


def representative(R, cls):
    """A coefficient vector of the class, mapped back from SNF coordinates."""
    return R.representative(cls)


def hom_class(R, a, b):
    """Class of Hom(M_a, M_b), that is b - a."""
    return R.add(b, R.negate(a))


def dual_class(R, a):
    return R.negate(a)


def tensor_class(R, a, b):
    """Class of the reflexive hull of M_a ⊗ M_b."""
    return R.add(a, b)


def canonical_class(R):
    """Class of the canonical module, spanned by the interior points."""
    return R.class_of((1,) * R.r)


def canonical_dual_class(R, a):
    """Class of Hom(M_a, omega_R)."""
    return hom_class(R, a, canonical_class(R))


def is_gorenstein(R):
    return canonical_class(R) == R.trivial


def module_degrees(R, a, window):
    return lattice_points_shifted(R.cone, a, window)


def order_of(R, cls):
    """The order of a class; ``math.inf`` when it has a free component."""
    if any(cls.free_part):
        return math.inf
    order = 1
    for t, d in zip(cls.torsion_part, R.moduli):
        order = math.lcm(order, d // math.gcd(d, t))
    return order


def all_classes(R):
    """Every element of a finite class group in lexicographic order."""
    if R.free_rank:
        raise HypothesisViolated(
            "Cl(R) = %s is infinite" % describe_group(R.invariants_of_Cl)
        )
    return [
        DivClass((), residues)
        for residues in itertools.product(*(range(d) for d in R.moduli))
    ]
