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

"""Local cohomology of divisorial modules through the Ishida complex.

For a face F of the cone, the degree-u part of the localization of M_a at F
is one-dimensional when ``<u, v_j> >= a_j`` for every facet j containing F
and zero otherwise. The Ishida complex puts these pieces in cohomological
degree dim F, with differentials given by the signed face incidences, and
its cohomology is H^i_m(M_a)_u.

Whether a face survives at degree u depends only on the set of facets with
``<u, v_j> < a_j``, so ranks are cached by that failure pattern.
"""

import collections
import functools
import logging

from frobkit.constants import DEFAULT_WINDOW
from frobkit.cone import enumerate_faces
from frobkit.errors import DimensionMismatch, HypothesisViolated, VerificationFailed
from frobkit.frobenius import ABUNDANT, abundance_test, ft_test, twist_class
from frobkit.lattice import rational_rank
from frobkit.toric import hom_class
from frobkit.util import LoggerMixin, iter_window, symmetric_window

__all__ = [
    "IshidaComplex",
    "LocalCohomologyReport",
    "DepthVerdict",
    "HomMcmReport",
    "cohomology_at_degree",
    "depth_scan",
    "verify_hom_mcm",
    "ring_cm_check",
    "duality_check",
    "boundary_check",
    "verify_certificate",
]

logger = logging.getLogger(__name__)


class IshidaComplex(LoggerMixin):
    """The Ishida complex of a toric ring, evaluated degree by degree."""

    def __init__(self, ring):
        self.ring = ring
        self.lattice = enumerate_faces(ring.cone)
        self.n = ring.n
        self._facet_masks = [
            sum(1 << j for j in face.facets) for face in self.lattice.faces
        ]
        self._ranks = {}
        self.logger.debug(
            "Ishida complex of %r over %d faces", ring, len(self.lattice)
        )

    def check_degree(self, a, u=None):
        if len(a) != self.ring.r:
            raise DimensionMismatch(
                "coefficient vector of length %d for %d facets"
                % (len(a), self.ring.r)
            )
        if u is not None and len(u) != self.n:
            raise DimensionMismatch("degree of rank %d for n = %d" % (len(u), self.n))

    def failure_pattern(self, a, u):
        """Bitmask of the facets j with <u, v_j> < a_j."""
        self.check_degree(a, u)
        pattern = 0
        for j, (pairing, bound) in enumerate(zip(self.ring.cone.pairings(u), a)):
            if pairing < bound:
                pattern |= 1 << j
        return pattern

    def alive_faces(self, pattern, dim):
        return [
            index
            for index in self.lattice.faces_of_dim(dim)
            if not self._facet_masks[index] & pattern
        ]

    def differential(self, pattern, dim):
        """Matrix of d: C^dim -> C^(dim+1), rows indexed by the target."""
        sources = self.alive_faces(pattern, dim)
        targets = self.alive_faces(pattern, dim + 1)
        incidence = self.lattice.incidence
        matrix = [[incidence.get((i, j), 0) for i in sources] for j in targets]
        return matrix, len(sources), len(targets)

    def ranks(self, pattern):
        """(h^0, ..., h^n) of the complex for one failure pattern."""
        if pattern not in self._ranks:
            sizes = [len(self.alive_faces(pattern, i)) for i in range(self.n + 1)]
            d_ranks = []
            for i in range(self.n):
                matrix, cols, _ = self.differential(pattern, i)
                d_ranks.append(rational_rank(matrix, cols))
            d_ranks.append(0)
            self._ranks[pattern] = tuple(
                sizes[i] - d_ranks[i] - (d_ranks[i - 1] if i else 0)
                for i in range(self.n + 1)
            )
        return self._ranks[pattern]

    def cohomology(self, a, u):
        return self.ranks(self.failure_pattern(a, u))

    def squares_to_zero(self, pattern):
        for i in range(self.n - 1):
            first, _, _ = self.differential(pattern, i)
            second, _, _ = self.differential(pattern, i + 1)
            for row in second:
                for k in range(len(first[0]) if first else 0):
                    if sum(x * first[j][k] for j, x in enumerate(row)):
                        return False
        return True


@functools.lru_cache(maxsize=None)
def ishida_complex(R):
    return IshidaComplex(R)


LocalCohomologyReport = collections.namedtuple(
    "LocalCohomologyReport", ["coefficients", "window", "nonvanishing"]
)
LocalCohomologyReport.__doc__ = """``nonvanishing[i]`` lists (u, rank) for
every window degree u with H^i_m(M_a)_u != 0, in lexicographic order."""


class DepthVerdict(
    collections.namedtuple(
        "DepthVerdict",
        ["depth_upper", "depth_claim", "window", "caveat", "certificate"],
    )
):
    """Outcome of a depth scan.

    ``depth_upper`` is certified by ``certificate = (i, u, rank)``; when no
    nonvanishing H^i below the top is found the verdict claims depth n, a
    claim limited to the scanned window.
    """

    __slots__ = ()

    @property
    def is_mcm(self):
        return self.depth_upper is None


HomMcmReport = collections.namedtuple(
    "HomMcmReport", ["ft_class", "target", "abundance_verdict", "levels", "passed"]
)


def cohomology_at_degree(R, a, u):
    """Ranks h^0..h^n of H^i_m(M_a) in degree u."""
    return ishida_complex(R).cohomology(a, u)


def _window(R, window):
    if window is None:
        window = DEFAULT_WINDOW
    if isinstance(window, int):
        return symmetric_window(R.n, window)
    return tuple(window)


def depth_scan(R, a, window=None):
    """Scan a window of degrees for nonvanishing local cohomology of M_a."""
    complex_ = ishida_complex(R)
    window = _window(R, window)
    a = tuple(a)
    complex_.check_degree(a)
    nonvanishing = {i: [] for i in range(R.n + 1)}
    for u in iter_window(window):
        for i, h in enumerate(complex_.cohomology(a, u)):
            if h:
                nonvanishing[i].append((u, h))
    if nonvanishing[0]:
        raise VerificationFailed(
            "H^0 of the divisorial module M_%r is nonzero at %r"
            % (a, nonvanishing[0][0][0])
        )
    report = LocalCohomologyReport(a, window, nonvanishing)

    below = [i for i in range(R.n) if nonvanishing[i]]
    if below:
        i = below[0]
        u, h = nonvanishing[i][0]
        verdict = DepthVerdict(i, None, window, False, (i, u, h))
        logger.info("M_%r has depth <= %d, witnessed at degree %r", a, i, u)
    else:
        verdict = DepthVerdict(None, R.n, window, True, None)
        logger.info("No local cohomology of M_%r below %d in %r", a, R.n, window)
    return verdict, report


def verify_certificate(R, a, certificate):
    i, u, h = certificate
    return cohomology_at_degree(R, a, u)[i] == h and h > 0


def ring_cm_check(R, window=None):
    verdict, _ = depth_scan(R, (0,) * R.r, window)
    return verdict


def verify_hom_mcm(R, ft_class, target, e_values, window=None, abundance_emax=3):
    """Check that Hom(M(e), L) is MCM for an FT class M and each e given.

    The class of Hom(M(e), L) is ``target - p^e * ft_class``.
    """
    if not ft_test(R, ft_class).is_ft:
        raise HypothesisViolated("class %r is not of finite F-type" % (ft_class,))
    abundance = abundance_test(R, (0,) * R.r, target, abundance_emax)
    if abundance.verdict != ABUNDANT:
        logger.warning(
            "(R, L) is not seen to be abundant for L = %r (%s)",
            target,
            abundance.verdict,
        )
    levels = []
    for e in e_values:
        cls = hom_class(R, twist_class(R, ft_class, e), target)
        verdict, _ = depth_scan(R, R.representative(cls), window)
        levels.append((e, cls, verdict))
    passed = all(verdict.is_mcm for _, _, verdict in levels)
    return HomMcmReport(ft_class, target, abundance.verdict, levels, passed)


def _nonvanishing_degrees(R, a, window, i):
    complex_ = ishida_complex(R)
    return {u for u in iter_window(window) if complex_.cohomology(a, u)[i]}


def duality_check(R, a, window=None):
    """Complementary-pattern symmetry of local cohomology.

    For 2 <= i <= n - 1 the degrees with H^i(M_a)_u != 0 are the negatives
    of those with H^(n+1-i)(M_(1-a))_u != 0. The window must be symmetric.
    """
    ishida_complex(R).check_degree(a)
    window = _window(R, window)
    if any(lo != -hi for lo, hi in window):
        raise ValueError("duality needs a symmetric window, got %r" % (window,))
    dual = tuple(1 - x for x in a)
    for i in range(2, R.n):
        left = _nonvanishing_degrees(R, a, window, i)
        right = _nonvanishing_degrees(R, dual, window, R.n + 1 - i)
        if left != {tuple(-x for x in u) for u in right}:
            logger.warning("Duality fails in cohomological degree %d", i)
            return False
    return True


def boundary_check(R, a, degrees):
    """d∘d = 0 on the degree pieces of the Ishida complex of M_a."""
    complex_ = ishida_complex(R)
    patterns = {complex_.failure_pattern(a, u) for u in degrees}
    return all(complex_.squares_to_zero(pattern) for pattern in patterns)
