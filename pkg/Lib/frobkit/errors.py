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

"""Exception hierarchy.

Every exception carries an ``exit_code`` used by the command line front end.
"""


class FrobkitError(Exception):
    exit_code = 1


class DimensionMismatch(FrobkitError, ValueError):
    pass


class ConeError(FrobkitError, ValueError):
    pass


class NotPointed(ConeError):
    pass


class NotFullDimensional(ConeError):
    pass


class RedundantFacet(ConeError):
    def __init__(self, index, row):
        ConeError.__init__(
            self, "facet %d %r is implied by the other facets" % (index, row)
        )
        self.index = index
        self.row = row


class CapExceeded(FrobkitError, RuntimeError):
    exit_code = 2

    def __init__(self, required, cap, what="enumeration"):
        FrobkitError.__init__(
            self,
            "%s needs %d steps, above the cap of %d (raise FROBKIT_CAP)"
            % (what, required, cap),
        )
        self.required = required
        self.cap = cap


class BoundTooSmall(FrobkitError, ValueError):
    def __init__(self, bound, needed):
        FrobkitError.__init__(
            self,
            "height bound %d cannot certify the Hilbert basis; need %d"
            % (bound, needed),
        )
        self.bound = bound
        self.needed = needed


class PseudoReflection(FrobkitError, ValueError):
    pass


class InsufficientData(FrobkitError, ValueError):
    pass


class HypothesisViolated(FrobkitError, ValueError):
    exit_code = 4


class VerificationFailed(FrobkitError, AssertionError):
    exit_code = 3


class RingSpecError(FrobkitError, ValueError):
    pass


class ParseError(RingSpecError):
    def __init__(self, message, lineno=None, colno=None):
        if lineno is not None:
            message = "line %d, column %d: %s" % (lineno, colno or 1, message)
        RingSpecError.__init__(self, message)
        self.lineno = lineno
        self.colno = colno


class ValidationError(RingSpecError):
    pass


class MonomialSyntaxError(ParseError):
    pass
