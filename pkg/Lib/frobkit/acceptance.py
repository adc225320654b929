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

"""The worked examples as executable checks.

Each ``criterion_N`` recomputes one family of published values or
structural identities and returns a CheckResult; ``run_suite`` runs them
all. The command ``frobkit verify --suite paper`` exits non-zero when any
check fails.
"""

import collections
import random
from fractions import Fraction

from frobkit.constants import DEFAULT_WINDOW
from frobkit.depth import boundary_check, depth_scan, verify_certificate, verify_hom_mcm
from frobkit.errors import FrobkitError
from frobkit.frobenius import (
    ABUNDANT,
    NOT_ABUNDANT,
    FrobeniusLevel,
    abundance_test,
    decompose_pushforward,
    depth_bound_from_abundance,
    ft_test,
    hilbert_consistency_check,
    index_shift_check,
    splitting_numbers,
)
from frobkit.monomial import (
    MonomialIdeal,
    count_copies,
    decompose_pushforward_ideal,
    syzygy_pushforward,
)
from frobkit.ringspec import load_ring
from frobkit.toric import (
    all_classes,
    class_group,
    cyclic_quotient_ring,
    order_of,
    polynomial_ring,
)
from frobkit.util import LoggerMixin

__all__ = ["CheckResult", "AcceptanceSuite", "run_suite", "CRITERIA"]

CheckResult = collections.namedtuple("CheckResult", ["identifier", "passed", "detail"])

# Hilbert-consistency windows [-3, 2]^n (six points per side).
_HILBERT_WINDOW_LOW = -3
_HILBERT_WINDOW_SIDE = 6


def _result(identifier, problems, success):
    return CheckResult(identifier, not problems, "; ".join(problems) or success)


def _quadric_class(R, k):
    return R.scale(k, R.class_of((1, 0, 0, 0)))


def _nontrivial(R):
    return R.class_of((0, 1))


def criterion_1():
    R = load_ring("A1", 3)
    group = class_group(R)
    order = order_of(R, R.class_of((0, 1)))
    passed = group.free_rank == 0 and group.torsion == [2] and order == 2
    detail = "Cl(A1) torsion %r, order of [(x,z)] %r" % (group.torsion, order)
    return CheckResult(1, passed, detail)


def criterion_2():
    problems = []
    A1 = load_ring("A1", 3)
    report = ft_test(A1, _nontrivial(A1))
    if not report.is_ft or (report.pre_period, report.period) != (0, 1):
        problems.append("A1 p=3: %r" % (report,))
    A1_2 = load_ring("A1", 2)
    report = ft_test(A1_2, _nontrivial(A1_2))
    if not report.is_ft or report.orbit[1:2] != [A1_2.trivial]:
        problems.append("A1 p=2: %r" % (report,))
    for p in (2, 3):
        Q = load_ring("quadric3", p)
        for k in (1, -1, 2, -2):
            if ft_test(Q, _quadric_class(Q, k)).is_ft:
                problems.append("quadric p=%d class %d reported FT" % (p, k))
    return _result(2, problems, "all FT verdicts as expected")


def criterion_3():
    problems = []
    I = MonomialIdeal.variables(3, [0, 1])
    unit = MonomialIdeal.unit(3)
    for p in (2, 3):
        for e in range(1, 5):
            q = p**e
            D = decompose_pushforward_ideal(I, FrobeniusLevel(p, e))
            copies, free = count_copies(D, I), count_copies(D, unit)
            if (copies, free) != (q, q**3 - q):
                problems.append("p=%d e=%d: %d copies, %d free" % (p, e, copies, free))
    return _result(3, problems, "q copies and q^3 - q free")


def criterion_4():
    problems = []
    for d in (3, 4, 5):
        for p in (2, 3):
            for e in range(1, 4):
                q = p**e
                example = syzygy_pushforward(d, FrobeniusLevel(p, e))
                expected = (q ** (d - 3), 3 * q**d, q**d)
                found = (example.b_e, example.first_rank, example.second_rank)
                if found != expected:
                    problems.append("d=%d p=%d e=%d: %r" % (d, p, e, found))
    return _result(4, problems, "q^(d-3) copies")


def criterion_5():
    problems = []
    A1 = load_ring("A1", 3)
    data = splitting_numbers(A1, 4)
    expected = [((3**e) ** 2 + 1) // 2 for e in range(1, 5)]
    if data.a_e != expected:
        problems.append("A1 a_e %r != %r" % (data.a_e, expected))

    Q = load_ring("quadric3", 2)
    zero = (0, 0, 0, 0)
    ratios = []
    for e in range(1, 7):
        D = decompose_pushforward(Q, zero, e)
        if any(abs(x) > 1 for cls in D.support() for x in cls.free_part):
            problems.append("quadric support at e=%d: %r" % (e, D.support()))
        ratios.append(Fraction(D.multiplicity(Q.trivial), (2**e) ** 3))
    if ratios[0] * 8 != 6:
        problems.append("quadric a_1 = %s" % (ratios[0] * 8))
    steps = [abs(y - x) for x, y in zip(ratios, ratios[1:])]
    if not all(2 * y <= x for x, y in zip(steps, steps[1:])):
        problems.append("a_e/q^3 differences do not halve: %r" % steps)
    if abs(ratios[-1] - Fraction(2, 3)) > Fraction(1, 50):
        problems.append("a_6/q^3 = %s is not within 0.02 of 2/3" % ratios[-1])
    return _result(5, problems, "splitting numbers match")


def criterion_6():
    problems = []
    Q = load_ring("quadric3", 2)
    zero = (0, 0, 0, 0)
    for k in (1, -1):
        data = abundance_test(Q, zero, _quadric_class(Q, k), 6)
        if data.verdict != ABUNDANT:
            problems.append("quadric class %d: %s %r" % (k, data.verdict, data.b_e))
    for k in (2, -2):
        data = abundance_test(Q, zero, _quadric_class(Q, k), 6)
        if data.verdict != NOT_ABUNDANT or any(data.b_e):
            problems.append("quadric class %d: %s %r" % (k, data.verdict, data.b_e))
    A1 = load_ring("A1", 3)
    data = abundance_test(A1, (0, 0), A1.trivial, 4)
    if data.verdict != ABUNDANT:
        problems.append("A1 (R, R): %s" % data.verdict)
    return _result(6, problems, "abundance verdicts match")


def _coprime_prime(d):
    return next(p for p in (2, 3, 5, 7) if d % p)


def criterion_7():
    problems = []
    rings = [load_ring("A1", 3)]
    for d in (2, 3, 4):
        rings.append(cyclic_quotient_ring(2, d, [1, 1], _coprime_prime(d)))
    for R in rings:
        for cls in all_classes(R):
            verdict, _ = depth_scan(R, R.representative(cls), DEFAULT_WINDOW)
            if not verdict.is_mcm:
                problems.append("%r class %r: %r" % (R, cls, verdict.certificate))
    return _result(7, problems, "torsion classes are MCM in the window")


def criterion_8():
    problems = []
    Q = load_ring("quadric3", 2)
    for a in ((2, 0, 0, 0), (-2, 0, 0, 0)):
        verdict, _ = depth_scan(Q, a, DEFAULT_WINDOW)
        certified = verdict.certificate and verify_certificate(
            Q, a, verdict.certificate
        )
        if verdict.depth_upper != 2 or not certified:
            problems.append("M_%r: %r" % (a, verdict))
    return _result(8, problems, "H^2 witnesses found")


def criterion_9():
    problems = []
    A1 = load_ring("A1", 3)
    for target in (A1.trivial, _nontrivial(A1)):
        report = verify_hom_mcm(A1, _nontrivial(A1), target, range(5), DEFAULT_WINDOW)
        if not report.passed:
            problems.append("A1 target %r" % (target,))
    Q = load_ring("quadric3", 2)
    for k in (1, -1):
        target = _quadric_class(Q, k)
        report = verify_hom_mcm(Q, Q.trivial, target, range(5), DEFAULT_WINDOW)
        if not report.passed:
            problems.append("quadric target class %d" % k)
    return _result(9, problems, "Hom(M(e), L) is MCM")


def criterion_10(seed=20240611, instances=20):
    problems = []
    rng = random.Random(seed)
    rings = [
        load_ring("A1", 3),
        load_ring("A1", 2),
        load_ring("quadric3", 2),
        load_ring("cyclic3", 2),
    ]
    window = tuple(
        (_HILBERT_WINDOW_LOW, _HILBERT_WINDOW_LOW + _HILBERT_WINDOW_SIDE - 1)
        for _ in range(3)
    )
    for _ in range(instances):
        R = rng.choice(rings)
        a = tuple(rng.randint(-2, 2) for _ in range(R.r))
        total = rng.randint(0, 4)
        e = rng.randint(0, total)
        if not index_shift_check(R, a, e, total - e):
            problems.append("index shift %r a=%r e=%d f=%d" % (R, a, e, total - e))
        D = decompose_pushforward(R, a, total)
        if D.total() != D.level.q**R.n:
            problems.append("rank %r a=%r e=%d" % (R, a, total))
        if not hilbert_consistency_check(R, D, window[: R.n]):
            problems.append("Hilbert count %r a=%r e=%d" % (R, a, total))
        degrees = [tuple(rng.randint(-3, 3) for _ in range(R.n)) for _ in range(10)]
        if not boundary_check(R, a, degrees):
            problems.append("d∘d %r a=%r" % (R, a))

    pairs = [
        (load_ring("quadric3", 2), (1, 0, 0, 0)),
        (load_ring("quadric3", 2), (2, 0, 0, 0)),
        (load_ring("A1", 3), (0, 0)),
        (load_ring("A1", 3), (0, 1)),
    ]
    for R, a in pairs:
        target = R.class_of(a)
        data = abundance_test(R, (0,) * R.r, target, 4)
        bound = depth_bound_from_abundance(
            R.n, R.alpha, data.b_e, [R.p**e for e in data.levels]
        )
        verdict, _ = depth_scan(R, a, DEFAULT_WINDOW)
        upper = verdict.depth_upper
        if bound is not None and upper is not None and bound > upper:
            message = "abundance bound %d above depth %d for %r"
            problems.append(message % (bound, upper, a))
    polynomial = polynomial_ring(2, 2)
    if not boundary_check(polynomial, (0, 0), [(0, 0), (-1, -1), (-1, 0)]):
        problems.append("d∘d on the polynomial ring")
    return _result(10, problems, "structural identities hold")


CRITERIA = collections.OrderedDict(
    (i, globals()["criterion_%d" % i]) for i in range(1, 11)
)


class AcceptanceSuite(LoggerMixin):
    """Runs a selection of criteria, turning library errors into failures."""

    def __init__(self, identifiers=None):
        self.identifiers = list(identifiers or CRITERIA)

    def run(self):
        results = []
        for identifier in self.identifiers:
            self.logger.info("Running acceptance criterion %d", identifier)
            try:
                result = CRITERIA[identifier]()
            except FrobkitError as e:
                detail = "%s: %s" % (type(e).__name__, e)
                result = CheckResult(identifier, False, detail)
            if not result.passed:
                self.logger.error("Criterion %d failed: %s", identifier, result.detail)
            results.append(result)
        return results


def run_suite(identifiers=None):
    return AcceptanceSuite(identifiers).run()
