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

"""Rational polyhedral cones given by primitive inner facet normals.

A cone is ``C = {u in Q^n : V*u >= 0}`` for an ``r x n`` integer matrix ``V``
whose rows are the facet normals. The semigroup ring ``k[C ∩ Z^n]`` stands
in for the complete local rings of the theory: class groups, Frobenius
decompositions and local cohomology all only see this graded avatar.
"""

import collections
import itertools
import logging
import math
from fractions import Fraction

import sympy
from sympy.solvers.simplex import lpmax, lpmin

from frobkit.constants import FACE_CAP
from frobkit.errors import (
    BoundTooSmall,
    CapExceeded,
    ConeError,
    DimensionMismatch,
    NotFullDimensional,
    NotPointed,
    RedundantFacet,
)
from frobkit.lattice import IntMatrix, rational_nullspace, rational_rank
from frobkit.util import dot, is_primitive, iter_window, primitive, window_is_empty

__all__ = [
    "Cone",
    "Face",
    "FaceLattice",
    "validate",
    "enumerate_faces",
    "hilbert_basis",
    "default_height_bound",
    "lattice_points_shifted",
]

logger = logging.getLogger(__name__)


class Cone:
    """A validated full-dimensional pointed cone.

    Attributes:
        n: rank of the ambient lattice.
        V: IntMatrix whose rows are the primitive inner facet normals.
        interior: an integer point u with V*u > 0 componentwise.
        normalized: True if some input row had to be divided by its gcd.
    """

    __slots__ = ("n", "V", "interior", "normalized", "_rays")

    def __init__(self, V, interior, normalized=False):
        self.n = V.cols
        self.V = V
        self.interior = tuple(interior)
        self.normalized = normalized
        self._rays = None

    def __repr__(self):
        return "<Cone n=%d facets=%r>" % (self.n, self.V.to_rows())

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return self.V == other.V

    def __hash__(self):
        return hash(self.V)

    @property
    def r(self):
        return self.V.rows

    @property
    def normals(self):
        return [self.V.row(i) for i in range(self.V.rows)]

    def contains(self, u):
        return all(x >= 0 for x in self.V.apply(u))

    def pairings(self, u):
        """The vector (<u, v_i>)_i."""
        return self.V.apply(u)

    @property
    def rays(self):
        """Primitive generators of the extremal rays, sorted."""
        if self._rays is None:
            self._rays = _compute_rays(self)
        return self._rays


Face = collections.namedtuple("Face", ["facets", "rays", "dim"])
Face.__doc__ = """A face: the facet indices containing it, its ray indices
and its dimension. The zero face has no rays and lies in every facet."""


class FaceLattice:
    """All faces of a cone with signed incidence numbers.

    ``incidence[(i, j)]`` is +1 or -1 for faces i ⊂ j with
    ``dim j == dim i + 1``. Signs come from a fixed orientation of each
    face's linear span: the ordered basis chosen greedily from its rays.
    """

    def __init__(self, cone, faces, incidence):
        self.cone = cone
        self.faces = faces
        self.incidence = incidence
        self._by_dim = collections.defaultdict(list)
        for index, face in enumerate(faces):
            self._by_dim[face.dim].append(index)

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def faces_of_dim(self, k):
        return list(self._by_dim.get(k, ()))

    def dims(self):
        return sorted(face.dim for face in self.faces)

    def cofaces(self, index):
        """Indices of faces one dimension up that contain face ``index``."""
        return [j for (i, j) in self.incidence if i == index]


def _lp_symbols(n):
    return sympy.symbols("u0:%d" % n)


def _linear_form(row, symbols):
    return sum(int(c) * s for c, s in zip(row, symbols))


def _to_fraction(value):
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _interior_witness(rows, n):
    """Find an integer u with rows*u > 0 by maximising a slack, or None."""
    symbols = _lp_symbols(n)
    slack = sympy.Symbol("s")
    constraints = [_linear_form(row, symbols) >= slack for row in rows]
    constraints.append(slack <= 1)
    for s in symbols:
        constraints += [s >= -1, s <= 1]
    optimum, solution = lpmax(slack, constraints)
    if _to_fraction(optimum) <= 0:
        return None
    point = [_to_fraction(solution.get(s, 0)) for s in symbols]
    scale = 1
    for x in point:
        scale = math.lcm(scale, x.denominator)
    witness = primitive([int(x * scale) for x in point])
    assert all(dot(row, witness) > 0 for row in rows)
    return witness


def _is_redundant(rows, index, n):
    """Whether row ``index`` is implied by the others: min <v, u> over the
    cone of the other rows (cut by a box) is not negative."""
    symbols = _lp_symbols(n)
    constraints = [
        _linear_form(row, symbols) >= 0 for k, row in enumerate(rows) if k != index
    ]
    for s in symbols:
        constraints += [s >= -1, s <= 1]
    optimum, _ = lpmin(_linear_form(rows[index], symbols), constraints)
    return _to_fraction(optimum) >= 0


def validate(V):
    """Check a facet-normal presentation and return a Cone.

    ``V`` is an IntMatrix or a list of integer rows. Non-primitive rows are
    divided by their gcd (``Cone.normalized`` records it); redundant rows
    raise ``RedundantFacet``.
    """
    if not isinstance(V, IntMatrix):
        V = IntMatrix.from_rows(V)
    r, n = V.shape
    if r < 1 or n < 1:
        raise ConeError("a cone needs at least one facet and n >= 1")
    rows = []
    normalized = False
    for i in range(r):
        row = V.row(i)
        if not any(row):
            raise ConeError("facet normal %d is zero" % i)
        if not is_primitive(row):
            logger.warning("Facet normal %r is not primitive; normalizing", row)
            row = primitive(row)
            normalized = True
        rows.append(row)

    witness = _interior_witness(rows, n)
    if witness is None:
        raise NotFullDimensional("the cone %r has empty interior" % (rows,))
    if rational_rank(rows, n) < n:
        raise NotPointed("the cone %r contains a line" % (rows,))
    for i in range(r):
        if _is_redundant(rows, i, n):
            raise RedundantFacet(i, rows[i])

    cone = Cone(IntMatrix.from_rows(rows, cols=n), witness, normalized)
    logger.debug("Validated %r with interior point %r", cone, witness)
    return cone


def _compute_rays(cone):
    rays = set()
    normals = cone.normals
    for subset in itertools.combinations(range(cone.r), cone.n - 1):
        sub = [normals[i] for i in subset]
        if rational_rank(sub, cone.n) != cone.n - 1:
            continue
        (w,) = rational_nullspace(sub, cone.n)
        if cone.contains(w):
            rays.add(w)
        elif cone.contains(tuple(-x for x in w)):
            rays.add(tuple(-x for x in w))
    return sorted(rays)


def _span_basis(vectors, n):
    basis = []
    for v in vectors:
        if rational_rank(basis + [v], n) > len(basis):
            basis.append(v)
    return basis


def _relative_sign(w, face_basis, coface_basis, n):
    """Sign of (w, face_basis) as an ordered basis of span(coface_basis)."""
    k = len(coface_basis)
    columns = [w] + list(face_basis)
    for coords in itertools.combinations(range(n), k):
        base = IntMatrix.from_rows([[b[i] for b in coface_basis] for i in coords])
        det_base = base.determinant()
        if det_base:
            det = IntMatrix.from_rows(
                [[c[i] for c in columns] for i in coords]
            ).determinant()
            assert det != 0
            return 1 if (det > 0) == (det_base > 0) else -1
    raise AssertionError("coface basis is degenerate")


def enumerate_faces(cone):
    """Enumerate every face by a scan over facet subsets.

    Subsets cutting out the same face are merged; the face keeps the full
    set of facets containing it.
    """
    if cone.r > FACE_CAP:
        raise CapExceeded(2**cone.r, 2**FACE_CAP, "face enumeration")
    rays = cone.rays
    normals = cone.normals
    vanishing = [
        frozenset(k for k, ray in enumerate(rays) if dot(v, ray) == 0)
        for v in normals
    ]
    all_rays = frozenset(range(len(rays)))
    ray_sets = set()
    for size in range(cone.r + 1):
        for subset in itertools.combinations(range(cone.r), size):
            ray_set = all_rays
            for j in subset:
                ray_set = ray_set & vanishing[j]
            ray_sets.add(ray_set)

    faces = []
    bases = {}
    for ray_set in ray_sets:
        vectors = [rays[k] for k in sorted(ray_set)]
        basis = _span_basis(vectors, cone.n)
        facets = frozenset(j for j in range(cone.r) if ray_set <= vanishing[j])
        faces.append(Face(facets=facets, rays=ray_set, dim=len(basis)))
        bases[ray_set] = basis
    faces.sort(key=lambda f: (f.dim, sorted(f.rays)))

    incidence = {}
    for i, face in enumerate(faces):
        for j, coface in enumerate(faces):
            if coface.dim != face.dim + 1 or not face.rays < coface.rays:
                continue
            w = rays[min(coface.rays - face.rays)]
            incidence[(i, j)] = _relative_sign(
                w, bases[face.rays], bases[coface.rays], cone.n
            )

    lattice = FaceLattice(cone, faces, incidence)
    assert lattice.dims().count(0) == 1 and lattice.dims().count(cone.n) == 1
    logger.debug("Enumerated %d faces of %r", len(faces), cone)
    return lattice


def default_height_bound(cone):
    """Smallest box bound containing the zonotope sum_i [0,1) * ray_i.

    Every element of the Hilbert basis lies in that zonotope.
    """
    bound = 0
    for i in range(cone.n):
        lo = sum(min(0, ray[i]) for ray in cone.rays)
        hi = sum(max(0, ray[i]) for ray in cone.rays)
        bound = max(bound, -lo, hi)
    return bound


def hilbert_basis(cone, height_bound=None):
    """Minimal generators of the semigroup C ∩ Z^n.

    Candidates are the lattice points with coordinates in
    [-height_bound, height_bound]. The bound must cover the zonotope of the
    rays, otherwise ``BoundTooSmall`` is raised.
    """
    needed = default_height_bound(cone)
    if height_bound is None:
        height_bound = needed
    if height_bound < needed:
        raise BoundTooSmall(height_bound, needed)

    grading = tuple(sum(col) for col in zip(*cone.normals))
    window = tuple((-height_bound, height_bound) for _ in range(cone.n))
    points = [
        u for u in iter_window(window) if any(u) and cone.contains(u)
    ]
    points.sort(key=lambda u: (dot(grading, u), u))

    basis = []
    for u in points:
        if not any(_differs_in_cone(cone, u, g) for g in basis):
            basis.append(u)

    generated = {tuple(0 for _ in range(cone.n)): True}

    def is_generated(u):
        if u not in generated:
            generated[u] = any(
                cone.contains(rest) and is_generated(rest)
                for rest in (tuple(a - b for a, b in zip(u, g)) for g in basis)
            )
        return generated[u]

    missing = [u for u in points if not is_generated(u)]
    if missing:
        raise BoundTooSmall(height_bound, height_bound + 1)
    logger.debug("Hilbert basis of %r: %r", cone, basis)
    return basis


def _differs_in_cone(cone, u, g):
    rest = tuple(a - b for a, b in zip(u, g))
    return any(rest) and cone.contains(rest)


def lattice_points_shifted(cone, a, window):
    """All u in the box ``window`` with <u, v_i> >= a_i for every facet."""
    if len(a) != cone.r:
        raise DimensionMismatch(
            "coefficient vector of length %d for %d facets" % (len(a), cone.r)
        )
    if len(window) != cone.n:
        raise DimensionMismatch("window of rank %d for n = %d" % (len(window), cone.n))
    if window_is_empty(window):
        return []
    return [
        u
        for u in iter_window(window)
        if all(x >= b for x, b in zip(cone.pairings(u), a))
    ]
