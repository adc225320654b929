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

import itertools
import logging
import math

logger = logging.getLogger(__name__)


def ceil_div(x, q):
    """Exact ceiling of x / q for integers, q > 0 (negative x included)."""
    return -((-x) // q)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def primitive(vector):
    """Divide an integer vector by the gcd of its entries.

    The zero vector is returned unchanged.
    """
    g = 0
    for x in vector:
        g = math.gcd(g, x)
    if g in (0, 1):
        return tuple(vector)
    return tuple(x // g for x in vector)


def is_primitive(vector):
    g = 0
    for x in vector:
        g = math.gcd(g, x)
    return g == 1


def symmetric_window(n, bound):
    """The box [-bound, bound]^n as a tuple of inclusive (lo, hi) pairs."""
    return tuple((-bound, bound) for _ in range(n))


def window_is_empty(window):
    return any(lo > hi for lo, hi in window)


def iter_window(window):
    """Iterate the lattice points of an inclusive box in lexicographic order."""
    if window_is_empty(window):
        return iter(())
    return itertools.product(*(range(lo, hi + 1) for lo, hi in window))


def window_size(window):
    if window_is_empty(window):
        return 0
    return math.prod(hi - lo + 1 for lo, hi in window)


def scaled_window(window, q):
    """The box of all u = q*w + r with w in `window` and 0 <= r < q."""
    return tuple((q * lo, q * hi + q - 1) for lo, hi in window)


class LoggerMixin:
    _logger = None

    @property
    def logger(self):
        if self._logger is None:
            self._logger = logging.getLogger(
                ".".join([self.__class__.__module__, self.__class__.__name__])
            )
        return self._logger
