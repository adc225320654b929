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

"""Defaults, registry entries and environment overrides."""

import logging
import os
import re

from frobkit.errors import RingSpecError

logger = logging.getLogger(__name__)

DEFAULT_CAP = 2**24
CAP_ENV_VAR = "FROBKIT_CAP"

# Degree window [-DEFAULT_WINDOW, DEFAULT_WINDOW]^n for local cohomology scans.
DEFAULT_WINDOW = 8

# Subset scans over facets are 2^r.
FACE_CAP = 16

DEFAULT_EMAX = 4

# Abundance verdicts look at the last ABUNDANCE_TAIL_FRACTION of the range.
ABUNDANCE_TAIL_FRACTION = 2

# Number of trailing points used when estimating growth orders.
GROWTH_TAIL = 3

# Largest denominator of the rational growth exponent reported by abundance fits.
GROWTH_FIT_DENOMINATOR = 12

# Residue scans run inline unless a worker count above one is requested.
DEFAULT_WORKERS = 1

VARIABLE_ALIASES = ("x", "y", "z", "u", "v", "w")

RING_KINDS = ("toric", "cyclic_quotient", "polynomial")

REGISTRY = {
    "A1": {
        "name": "A1",
        "kind": "toric",
        "facet_normals": [[0, 1], [2, -1]],
    },
    "quadric3": {
        "name": "quadric3",
        "kind": "toric",
        "facet_normals": [[1, 0, 0], [0, 1, 0], [-1, 0, 1], [0, -1, 1]],
    },
    "poly2": {"name": "poly2", "kind": "polynomial", "vars": 2},
    "poly3": {"name": "poly3", "kind": "polynomial", "vars": 3},
    "veronese3": {
        "name": "veronese3",
        "kind": "cyclic_quotient",
        "n": 2,
        "d": 3,
        "weights": [1, 1],
    },
    "veronese4": {
        "name": "veronese4",
        "kind": "cyclic_quotient",
        "n": 2,
        "d": 4,
        "weights": [1, 1],
    },
    "cyclic3": {
        "name": "cyclic3",
        "kind": "cyclic_quotient",
        "n": 3,
        "d": 3,
        "weights": [1, 1, 1],
    },
}

# Generators recorded for registry rings, checked against the Hilbert basis
# at load time: (generators, relation) where relation is a pair of index
# lists whose generator sums agree.
REGISTRY_RELATIONS = {
    # x = (1,0), z = (1,1), y = (1,2): x + y = 2z
    "A1": (((1, 0), (1, 1), (1, 2)), ((0, 2), (1, 1))),
    # g1..g4 = (0,0,1), (1,0,1), (0,1,1), (1,1,1): g2 + g3 = g1 + g4
    "quadric3": (
        ((0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)),
        ((1, 2), (0, 3)),
    ),
}

_POWER_RE = re.compile(r"^\s*(\d+)\s*\*\*\s*(\d+)\s*$")


def enumeration_cap():
    """Return the q^n enumeration cap, honouring the FROBKIT_CAP variable.

    The variable holds a positive integer, optionally written as ``2**k``.
    """
    value = os.environ.get(CAP_ENV_VAR)
    if not value:
        return DEFAULT_CAP
    m = _POWER_RE.match(value)
    try:
        cap = int(m[1]) ** int(m[2]) if m else int(value)
    except ValueError as e:
        raise RingSpecError(
            "%s must be an integer, got %r" % (CAP_ENV_VAR, value)
        ) from e
    if cap < 1:
        raise RingSpecError("%s must be positive, got %r" % (CAP_ENV_VAR, value))
    logger.debug("Enumeration cap overridden by %s: %d", CAP_ENV_VAR, cap)
    return cap
