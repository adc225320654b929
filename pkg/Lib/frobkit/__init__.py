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

"""Frobenius pushforwards, finite F-type and local cohomology over toric
rings and monomial ideals in characteristic p."""

import logging

from frobkit.cone import Cone, enumerate_faces, hilbert_basis, validate  # noqa
from frobkit.depth import depth_scan, ring_cm_check, verify_hom_mcm  # noqa
from frobkit.frobenius import (  # noqa
    FrobeniusLevel,
    abundance_test,
    decompose_pushforward,
    ft_test,
    splitting_numbers,
)
from frobkit.lattice import IntMatrix, smith_normal_form  # noqa
from frobkit.ringspec import load_ring  # noqa
from frobkit.toric import (  # noqa
    cyclic_quotient_ring,
    polynomial_ring,
    toric_ring,
)

try:
    from ._version import version as __version__
except ImportError:
    __version__ = "0.0.0+unknown"

__all__ = [
    "Cone",
    "FrobeniusLevel",
    "IntMatrix",
    "abundance_test",
    "cyclic_quotient_ring",
    "decompose_pushforward",
    "depth_scan",
    "enumerate_faces",
    "ft_test",
    "hilbert_basis",
    "load_ring",
    "polynomial_ring",
    "ring_cm_check",
    "smith_normal_form",
    "splitting_numbers",
    "toric_ring",
    "validate",
    "verify_hom_mcm",
]

logger = logging.getLogger(__name__)
