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

"""Frobenius pushforwards of divisorial modules over toric rings.

Grouping the degrees of ``M_a`` by their residue modulo ``q*Z^n`` splits
the e-th Frobenius pushforward into divisorial pieces::

    F^e_* M_a = ⊕_{r in [0, q)^n} M_{c(r)},  c(r)_i = ceil((a_i - <r, v_i>) / q)

Everything here is computed from that residue scan: the multiset of summand
classes, the splitting numbers ``a_e`` (free summands of ``F^e_* R``), the
multiplicities ``b_e`` of a target class and the growth estimates built
on them.
"""

import collections
import concurrent.futures
import itertools
import logging
import math
from fractions import Fraction

from frobkit.constants import (
    ABUNDANCE_TAIL_FRACTION,
    DEFAULT_WORKERS,
    GROWTH_FIT_DENOMINATOR,
    GROWTH_TAIL,
    enumeration_cap,
)
from frobkit.errors import CapExceeded, DimensionMismatch, InsufficientData
from frobkit.toric import all_classes, module_degrees, order_of
from frobkit.util import ceil_div, scaled_window

__all__ = [
    "FrobeniusLevel",
    "FTReport",
    "DecompositionMultiset",
    "SplittingData",
    "SdimVerdict",
    "AbundanceData",
    "FTCategory",
    "ABUNDANT",
    "NOT_ABUNDANT",
    "INCONCLUSIVE",
    "twist_class",
    "ft_test",
    "decompose_pushforward",
    "splitting_numbers",
    "estimate_sdim",
    "abundance_test",
    "depth_bound_from_abundance",
    "index_shift_check",
    "module_sdim",
    "is_ft_multiset",
    "ft_category",
    "hilbert_consistency_check",
    "representative_independence_check",
]

logger = logging.getLogger(__name__)

ABUNDANT = "abundant"
NOT_ABUNDANT = "not_abundant"
INCONCLUSIVE = "inconclusive"


class FrobeniusLevel(collections.namedtuple("FrobeniusLevel", ["p", "e"])):
    """The e-th Frobenius iterate in characteristic p."""

    __slots__ = ()

    @property
    def q(self):
        return self.p**self.e


FTReport = collections.namedtuple(
    "FTReport", ["is_ft", "order", "pre_period", "period", "orbit"]
)
FTReport.__doc__ = """Finite F-type verdict for a class.

``orbit`` lists a, p*a, p^2*a, ... up to the first repetition; the twist
at level ``pre_period`` recurs at ``pre_period + period``. Both are None
for classes of infinite order."""

SdimVerdict = collections.namedtuple("SdimVerdict", ["value", "confident"])
SdimVerdict.__doc__ = """A growth order estimate; ``value`` None means that
no exponent k >= 0 keeps the sequence bounded below (minus infinity)."""

SplittingData = collections.namedtuple(
    "SplittingData", ["p", "n", "levels", "a_e", "signature_estimates", "sdim_verdict"]
)

AbundanceData = collections.namedtuple(
    "AbundanceData",
    ["source", "target", "levels", "b_e", "verdict", "growth_exponent_fit"],
)

FTCategory = collections.namedtuple(
    "FTCategory", ["classes", "first_level", "complete"]
)
FTCategory.__doc__ = """Every class of a finite class group with the first
level e at which it occurs as a summand of F^e_* R (None if not seen)."""


class DecompositionMultiset:
    """The summands of F^e_* M_a, counted by class.

    ``vectors`` keeps the raw residue scan (coefficient vector c(r) to the
    number of residues producing it); ``counts`` is its image in Cl(R).
    """

    def __init__(self, ring, level, coefficients, vectors):
        self.ring = ring
        self.level = level
        self.coefficients = tuple(coefficients)
        self.source = ring.class_of(coefficients)
        self.vectors = vectors
        self.counts = collections.Counter()
        self.representatives = {}
        for c in sorted(vectors):
            cls = ring.class_of(c)
            self.counts[cls] += vectors[c]
            self.representatives.setdefault(cls, c)
        assert self.total() == level.q**ring.n

    def __repr__(self):
        return "<DecompositionMultiset e=%d p=%d classes=%d>" % (
            self.level.e,
            self.level.p,
            len(self.counts),
        )

    def __eq__(self, other):
        if not isinstance(other, DecompositionMultiset):
            return NotImplemented
        return +self.counts == +other.counts

    def total(self):
        return sum(self.counts.values())

    def multiplicity(self, cls):
        return self.counts.get(cls, 0)

    def support(self):
        return sorted(cls for cls, k in self.counts.items() if k)

    def items(self):
        return sorted(self.counts.items())


def twist_class(R, cls, e):
    """Class of M(e), the reflexive hull of the e-th Frobenius pullback."""
    return R.scale(R.p**e, cls)


def ft_test(R, cls):
    order = order_of(R, cls)
    if order == math.inf:
        return FTReport(False, order, None, None, [cls])
    seen = {}
    orbit = []
    current = cls
    while current not in seen:
        seen[current] = len(orbit)
        orbit.append(current)
        current = R.scale(R.p, current)
    pre_period = seen[current]
    return FTReport(True, order, pre_period, len(orbit) - pre_period, orbit)


def is_ft_multiset(R, classes):
    """A direct sum of divisorial modules is FT iff every summand is."""
    return all(order_of(R, cls) != math.inf for cls in classes)


def _scan_residues(rows, a, q, first_values):
    """Count c(r) over the residues whose first coordinate is in first_values."""
    n = len(rows[0])
    columns = list(zip(*rows))
    counter = collections.Counter()
    for head in first_values:
        base = [a_i - head * v for a_i, v in zip(a, columns[0])]
        for tail in itertools.product(range(q), repeat=n - 1):
            shifted = list(base)
            for t, column in zip(tail, columns[1:]):
                if t:
                    shifted = [s - t * v for s, v in zip(shifted, column)]
            counter[tuple(ceil_div(s, q) for s in shifted)] += 1
    return counter


def _chunks(q, workers):
    size = -(-q // workers)
    return [range(start, min(q, start + size)) for start in range(0, q, size)]


def _check_cap(required, cap, what):
    if cap is None:
        cap = enumeration_cap()
    if required > cap:
        raise CapExceeded(required, cap, what)


def decompose_pushforward(R, a, level, cap=None, workers=DEFAULT_WORKERS):
    """Decompose F^e_* M_a into divisorial summands by a residue scan.

    ``level`` is a FrobeniusLevel or an integer e. With ``workers > 1`` the
    residues are split by their first coordinate across processes; partial
    counts are merged in chunk order.
    """
    if not isinstance(level, FrobeniusLevel):
        level = FrobeniusLevel(R.p, level)
    if len(a) != R.r:
        raise DimensionMismatch(
            "coefficient vector of length %d for %d facets" % (len(a), R.r)
        )
    q = level.q
    _check_cap(q**R.n, cap, "residue scan for F^%d_*" % level.e)
    logger.info("Decomposing F^%d_* M_%r over %r", level.e, tuple(a), R)

    rows = R.class_presentation.to_rows()
    if workers > 1 and q > 1:
        chunks = _chunks(q, workers)
        vectors = collections.Counter()
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            for partial in pool.map(
                _scan_residues,
                itertools.repeat(rows),
                itertools.repeat(tuple(a)),
                itertools.repeat(q),
                chunks,
            ):
                vectors.update(partial)
    else:
        vectors = _scan_residues(rows, a, q, range(q))

    result = DecompositionMultiset(R, level, a, vectors)
    logger.debug("F^%d_* M_%r: %r", level.e, tuple(a), result.items())
    return result


def _bounded_below(values, qs, exponent):
    """Whether values[i] / qs[i]**exponent stays away from zero on the tail.

    The tail's last ratio must be positive and may have decayed from its
    first by at most a factor sqrt(q_last / q_first).
    """
    values, qs = values[-GROWTH_TAIL:], qs[-GROWTH_TAIL:]
    first = Fraction(values[0], qs[0] ** exponent)
    last = Fraction(values[-1], qs[-1] ** exponent)
    if last <= 0:
        return False
    if first <= 0:
        return True
    return (last / first) ** 2 >= Fraction(qs[0], qs[-1])


def _growth_order(values, qs, n, alpha):
    for k in range(n, -1, -1):
        if _bounded_below(values, qs, k + alpha):
            return k
    return None


def _stabilizes(values, qs, n):
    ratios = [Fraction(v, q**n) for v, q in zip(values, qs)][-GROWTH_TAIL:]
    steps = [abs(y - x) for x, y in zip(ratios, ratios[1:])]
    return all(y <= x for x, y in zip(steps, steps[1:]))


def estimate_sdim(data, n=None, alpha=0):
    """Largest k with a_e / q^(k + alpha) bounded below over the range.

    The verdict is ``confident`` only when the top exponent n is reached and
    a_e / q^n visibly settles down.
    """
    n = data.n if n is None else n
    if len(data.a_e) < GROWTH_TAIL:
        raise InsufficientData(
            "need %d splitting numbers, got %d" % (GROWTH_TAIL, len(data.a_e))
        )
    qs = [data.p**e for e in data.levels]
    k = _growth_order(data.a_e, qs, n, alpha)
    confident = k == n and _stabilizes(data.a_e, qs, n)
    return SdimVerdict(k, confident)


def splitting_numbers(R, e_max, e_min=1, cap=None, workers=DEFAULT_WORKERS):
    """a_e = number of free summands of F^e_* R for e_min <= e <= e_max."""
    levels = list(range(e_min, e_max + 1))
    zero = (0,) * R.r
    a_e = [
        decompose_pushforward(R, zero, e, cap=cap, workers=workers).multiplicity(
            R.trivial
        )
        for e in levels
    ]
    estimates = [Fraction(v, (R.p**e) ** R.n) for v, e in zip(a_e, levels)]
    partial = SplittingData(R.p, R.n, levels, a_e, estimates, None)
    verdict = (
        estimate_sdim(partial, R.n, R.alpha) if len(levels) >= GROWTH_TAIL else None
    )
    return partial._replace(sdim_verdict=verdict)


def module_sdim(R, a, e_max, cap=None, workers=DEFAULT_WORKERS):
    """s-dimension of M_a from the free multiplicities of F^e_* M_a."""
    levels = list(range(1, e_max + 1))
    b_e = [
        decompose_pushforward(R, a, e, cap=cap, workers=workers).multiplicity(
            R.trivial
        )
        for e in levels
    ]
    data = SplittingData(R.p, R.n, levels, b_e, None, None)
    return estimate_sdim(data, R.n, R.alpha)


def depth_bound_from_abundance(n, alpha, b_e, qs):
    """Depth lower bound k: largest k with b_e / q^(k + alpha) bounded below.

    Returns None when even k = 0 fails (no bound).
    """
    if not b_e or len(b_e) != len(qs):
        raise InsufficientData("need matching nonempty multiplicity and q lists")
    return _growth_order(list(b_e), list(qs), n, alpha)


def _fit_exponent(values, levels, p):
    points = [(e, v) for e, v in zip(levels, values) if v > 0]
    if len(points) < 2:
        return None
    (e0, v0), (e1, v1) = points[0], points[-1]
    slope = math.log(v1 / v0, p) / (e1 - e0)
    return Fraction(slope).limit_denominator(GROWTH_FIT_DENOMINATOR)


def _abundance_verdict(values, exponent):
    tail = values[-max(2, len(values) // ABUNDANCE_TAIL_FRACTION) :]
    if len(tail) < 2:
        return INCONCLUSIVE
    if all(v == tail[0] for v in tail):
        return NOT_ABUNDANT
    increasing = all(y > x for x, y in zip(tail, tail[1:]))
    if increasing and exponent is not None and exponent > 0:
        return ABUNDANT
    return INCONCLUSIVE


def abundance_test(R, a, target, e_max, cap=None, workers=DEFAULT_WORKERS):
    """Track b_e, the multiplicity of ``target`` in F^e_* M_a.

    With alpha = 0 abundance means b_e -> infinity; the verdict reads the
    last half of the computed range.
    """
    levels = list(range(1, e_max + 1))
    b_e = [
        decompose_pushforward(R, a, e, cap=cap, workers=workers).multiplicity(target)
        for e in levels
    ]
    tail_levels = levels[-max(2, len(levels) // ABUNDANCE_TAIL_FRACTION) :]
    exponent = _fit_exponent(b_e[-len(tail_levels) :], tail_levels, R.p)
    verdict = _abundance_verdict(b_e, exponent)
    logger.info("Abundance of %r in F^e_* M_%r: %r -> %s", target, a, b_e, verdict)
    return AbundanceData(R.class_of(a), target, levels, b_e, verdict, exponent)


def index_shift_check(R, a, e, f, cap=None):
    """Compare F^(e+f)_* M_a with F^f_* applied to each summand of F^e_* M_a."""
    cls = R.class_of(a)
    if twist_class(R, twist_class(R, cls, e), f) != twist_class(R, cls, e + f):
        return False
    direct = decompose_pushforward(R, a, e + f, cap=cap)
    first = decompose_pushforward(R, a, e, cap=cap)
    composed = collections.Counter()
    for c, multiplicity in first.vectors.items():
        for summand, k in decompose_pushforward(R, c, f, cap=cap).counts.items():
            composed[summand] += multiplicity * k
    return +composed == +direct.counts


def ft_category(R, e_max, cap=None, workers=DEFAULT_WORKERS):
    classes = all_classes(R)
    first_level = dict.fromkeys(classes)
    zero = (0,) * R.r
    for e in range(1, e_max + 1):
        if all(level is not None for level in first_level.values()):
            break
        counts = decompose_pushforward(R, zero, e, cap=cap, workers=workers).counts
        for cls in classes:
            if first_level[cls] is None and counts.get(cls):
                first_level[cls] = e
    complete = all(level is not None for level in first_level.values())
    return FTCategory(classes, first_level, complete)


def hilbert_consistency_check(R, decomposition, window):
    """Count degrees of M_a in the q-scaled window against the summands.

    A degree u = q*w + r lies in M_a iff w lies in M_c(r), so both counts
    agree exactly.
    """
    q = decomposition.level.q
    scaled = scaled_window(window, q)
    direct = len(module_degrees(R, decomposition.coefficients, scaled))
    summed = sum(
        multiplicity * len(module_degrees(R, c, window))
        for c, multiplicity in decomposition.vectors.items()
    )
    logger.debug("Hilbert consistency over %r: %d vs %d", window, direct, summed)
    return direct == summed


def representative_independence_check(R, a, level, u, cap=None):
    """Decomposing a and a + div(u) gives the same class multiset."""
    shifted = tuple(x + y for x, y in zip(a, R.divisor(u)))
    return decompose_pushforward(R, a, level, cap=cap) == decompose_pushforward(
        R, shifted, level, cap=cap
    )
