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
import math
import unittest
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from frobkit.util import (
    LoggerMixin,
    ceil_div,
    is_primitive,
    iter_window,
    primitive,
    scaled_window,
    symmetric_window,
    window_is_empty,
    window_size,
)


class UtilTest(unittest.TestCase):
    def test_ceil_div(self):
        self.assertEqual(ceil_div(7, 2), 4)
        self.assertEqual(ceil_div(6, 3), 2)
        self.assertEqual(ceil_div(0, 5), 0)
        self.assertEqual(ceil_div(-7, 2), -3)
        self.assertEqual(ceil_div(-1, 3), 0)
        self.assertEqual(ceil_div(-3, 3), -1)

    def test_primitive(self):
        self.assertEqual(primitive((4, -6)), (2, -3))
        self.assertEqual(primitive((0, 0)), (0, 0))
        self.assertEqual(primitive((0, -5)), (0, -1))
        self.assertTrue(is_primitive((2, 3)))
        self.assertFalse(is_primitive((2, 4)))
        self.assertFalse(is_primitive((0, 0)))

    def test_windows(self):
        self.assertEqual(symmetric_window(2, 1), ((-1, 1), (-1, 1)))
        self.assertEqual(
            list(iter_window(((0, 1), (0, 1)))), [(0, 0), (0, 1), (1, 0), (1, 1)]
        )
        self.assertTrue(window_is_empty(((0, 1), (2, 1))))
        self.assertEqual(list(iter_window(((0, 1), (2, 1)))), [])
        self.assertEqual(window_size(((0, 2), (-1, 1))), 9)
        self.assertEqual(window_size(((3, 2),)), 0)
        self.assertEqual(scaled_window(((-1, 1),), 3), ((-3, 5),))


@given(st.integers(-1000, 1000), st.integers(1, 50))
def test_ceil_div_matches_rational_ceiling(x, q):
    assert ceil_div(x, q) == math.ceil(Fraction(x, q))


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=5))
def test_primitive_divides_out_gcd(vector):
    result = primitive(vector)
    if any(vector):
        assert is_primitive(result)
        k = next(a // b for a, b in zip(vector, result) if b)
        assert [k * x for x in result] == list(vector)
    else:
        assert result == tuple(vector)


@pytest.mark.parametrize("window", [((0, 2),), ((-1, 1), (0, 3)), ((2, 1), (0, 0))])
def test_window_size_counts_points(window):
    assert window_size(window) == len(list(iter_window(window)))


def test_logger_mixin_names_logger_after_class():
    class Scanner(LoggerMixin):
        pass

    logger = Scanner().logger
    assert isinstance(logger, logging.Logger)
    assert logger.name.endswith(".Scanner")
