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


import logging

import pytest

from frobkit.depth import (
    IshidaComplex,
    boundary_check,
    cohomology_at_degree,
    depth_scan,
    duality_check,
    ring_cm_check,
    verify_certificate,
    verify_hom_mcm,
)
from frobkit.errors import DimensionMismatch, HypothesisViolated
from frobkit.frobenius import ABUNDANT, NOT_ABUNDANT
from frobkit.toric import DivClass
from frobkit.util import iter_window, symmetric_window

NONTRIVIAL = DivClass((), (1,))


class TestIshidaComplex:
    def test_a1_degrees(self, a1):
        complex_ = IshidaComplex(a1)
        assert len(complex_.lattice) == 4
        assert complex_.cohomology((0, 0), (0, 0)) == (0, 0, 0)
        # Both facets fail: only the top face survives.
        assert complex_.failure_pattern((0, 0), (-1, -1)) == 0b11
        assert complex_.cohomology((0, 0), (-1, -1)) == (0, 0, 1)

    def test_quadric_rank_cache(self, quadric):
        complex_ = IshidaComplex(quadric)
        pattern = complex_.failure_pattern((2, 0, 0, 0), (1, 0, 0))
        assert pattern == 0b101
        assert complex_.ranks(pattern) == (0, 0, 1, 0)
        assert pattern in complex_._ranks
        assert complex_.squares_to_zero(pattern)

    def test_cohomology_at_degree(self, quadric):
        assert cohomology_at_degree(quadric, (2, 0, 0, 0), (1, 0, 0)) == (0, 0, 1, 0)
        assert cohomology_at_degree(quadric, (0, 0, 0, 0), (0, 0, 0)) == (0, 0, 0, 0)

    @pytest.mark.parametrize("a", [(2,), (2, 0, 0), (2, 0, 0, 0, 7)])
    def test_coefficients_need_one_entry_per_facet(self, quadric, a):
        with pytest.raises(DimensionMismatch):
            cohomology_at_degree(quadric, a, (1, 0, 0))
        with pytest.raises(DimensionMismatch):
            depth_scan(quadric, a, 2)
        with pytest.raises(DimensionMismatch):
            duality_check(quadric, a, 1)

    def test_degree_needs_rank_n(self, quadric):
        with pytest.raises(DimensionMismatch):
            cohomology_at_degree(quadric, (2, 0, 0, 0), (1, 0))
        with pytest.raises(DimensionMismatch):
            depth_scan(quadric, (2, 0, 0, 0), ((-1, 1),) * 2)


class TestDepth:
    @pytest.mark.parametrize("a", [(0, 0), (0, 1), (1, 0)])
    def test_a1_modules_are_mcm(self, a1, a):
        verdict, report = depth_scan(a1, a, 2)
        assert verdict.is_mcm
        assert verdict.depth_claim == 2
        assert verdict.caveat
        assert report.window == ((-2, 2), (-2, 2))
        assert not report.nonvanishing[1]

    def test_top_cohomology_is_seen(self, a1):
        _, report = depth_scan(a1, (0, 0), 2)
        assert ((-1, -1), 1) in report.nonvanishing[2]

    def test_quadric_ring_is_cm(self, quadric):
        assert ring_cm_check(quadric, 1).is_mcm

    @pytest.mark.parametrize("a", [(1, 0, 0, 0), (0, 1, 0, 0)])
    def test_quadric_rulings_are_mcm(self, quadric, a):
        verdict, _ = depth_scan(quadric, a, 1)
        assert verdict.is_mcm

    def test_quadric_twice_a_ruling_is_not_mcm(self, quadric):
        a = (2, 0, 0, 0)
        verdict, report = depth_scan(quadric, a, 1)
        assert not verdict.is_mcm
        assert verdict.depth_upper == 2
        assert verdict.depth_claim is None
        assert not verdict.caveat
        assert ((1, 0, 0), 1) in report.nonvanishing[2]
        assert verify_certificate(quadric, a, verdict.certificate)
        assert not verify_certificate(quadric, (0, 0, 0, 0), verdict.certificate)

    def test_default_window(self, a1):
        verdict, _ = depth_scan(a1, (0, 1))
        assert verdict.window == symmetric_window(2, 8)


class TestChecks:
    def test_duality(self, quadric):
        for a in [(0, 0, 0, 0), (1, 0, 0, 0), (2, 0, 0, 0), (0, 3, 0, 0)]:
            assert duality_check(quadric, a, 1)

    def test_duality_needs_symmetric_window(self, quadric):
        with pytest.raises(ValueError):
            duality_check(quadric, (0, 0, 0, 0), ((0, 1),) * 3)

    def test_boundary(self, quadric, a1):
        degrees = list(iter_window(symmetric_window(3, 1)))
        assert boundary_check(quadric, (2, 0, 0, 0), degrees)
        assert boundary_check(a1, (0, 1), iter_window(symmetric_window(2, 2)))


class TestHomMcm:
    def test_a1(self, a1):
        report = verify_hom_mcm(a1, NONTRIVIAL, a1.trivial, [1, 2], window=2)
        assert report.passed
        assert report.abundance_verdict == ABUNDANT
        assert [e for e, _, _ in report.levels] == [1, 2]
        assert report.levels[0][1] == NONTRIVIAL

    def test_warns_without_abundance(self, quadric, caplog):
        x = quadric.class_of((1, 0, 0, 0))
        target = quadric.scale(2, x)
        with caplog.at_level(logging.WARNING, logger="frobkit.depth"):
            report = verify_hom_mcm(
                quadric, quadric.trivial, target, [1], window=1, abundance_emax=2
            )
        assert "not seen to be abundant" in caplog.text
        assert report.abundance_verdict == NOT_ABUNDANT
        assert len(report.levels) == 1

    def test_needs_finite_f_type(self, quadric):
        x = quadric.class_of((1, 0, 0, 0))
        with pytest.raises(HypothesisViolated) as excinfo:
            verify_hom_mcm(quadric, x, quadric.trivial, [1])
        assert excinfo.value.exit_code == 4


def test_larger_window_keeps_witnesses(quadric):
    a = (2, 0, 0, 0)
    _, small = depth_scan(quadric, a, 1)
    _, large = depth_scan(quadric, a, 2)
    for i, entries in small.nonvanishing.items():
        assert set(entries) <= set(large.nonvanishing[i])
