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

"""JSON report envelopes written by the command line tool.

Numbers are emitted exactly: integers as JSON integers and rationals as
``{"numerator": ..., "denominator": ...}`` objects. The only float is the
``estimate`` member of fitted exponents.
"""

import json
import math
import time
from fractions import Fraction

from frobkit.toric import DivClass

__all__ = ["ReportEnvelope", "encode", "encode_class", "render_json", "render_pretty"]

INFINITY = "infinity"
NEGATIVE_INFINITY = "-infinity"


def encode_fraction(value):
    value = Fraction(value)
    return {"numerator": value.numerator, "denominator": value.denominator}


def encode_class(cls):
    return {"free": list(cls.free_part), "torsion": list(cls.torsion_part)}


def encode(value):
    """Turn library values into JSON-compatible data without losing exactness."""
    if isinstance(value, DivClass):
        return encode_class(value)
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return encode_fraction(value)
    if isinstance(value, float):
        if value == math.inf:
            return INFINITY
        if value == -math.inf:
            return NEGATIVE_INFINITY
        raise TypeError("refusing to encode inexact float %r" % value)
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [encode(v) for v in value]
    raise TypeError("cannot encode %r" % (value,))


def encode_estimate(value):
    """A fitted rational together with a labelled float estimate."""
    if value is None:
        return None
    return dict(encode_fraction(value), estimate=float(value))


class ReportEnvelope:
    """One command's report: inputs, result payload and caveats."""

    def __init__(self, command, ring=None, parameters=None):
        self.command = command
        self.ring = ring
        self.parameters = dict(parameters or {})
        self.result = {}
        self.caveats = []
        self.exit_code = 0
        self._started = time.perf_counter()

    def caveat(self, text):
        if text not in self.caveats:
            self.caveats.append(text)

    def as_dict(self):
        elapsed = time.perf_counter() - self._started
        return {
            "command": self.command,
            "ring": self.ring,
            "parameters": encode(self.parameters),
            "result": self.result,
            "caveats": list(self.caveats),
            "wall_time_ms": int(elapsed * 1000),
        }


def render_json(data):
    return json.dumps(data, sort_keys=True, ensure_ascii=False)


def _format_value(value):
    if isinstance(value, dict) and set(value) >= {"numerator", "denominator"}:
        return "%d/%d" % (value["numerator"], value["denominator"])
    if isinstance(value, dict) and set(value) == {"free", "torsion"}:
        return "(%s)" % "; ".join(
            ",".join(str(x) for x in value[k]) for k in ("free", "torsion")
        )
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, ensure_ascii=False)
    return str(value)


def render_pretty(data):
    """A two-column text table of the envelope, nested keys joined by dots."""
    rows = []

    def walk(prefix, value):
        if (
            isinstance(value, dict)
            and value
            and not set(value) >= {"numerator", "denominator"}
            and set(value) != {"free", "torsion"}
        ):
            for key in sorted(value):
                walk("%s.%s" % (prefix, key) if prefix else key, value[key])
        else:
            rows.append((prefix, _format_value(value)))

    walk("", data)
    width = max(len(key) for key, _ in rows)
    return "\n".join("%s  %s" % (key.ljust(width), text) for key, text in rows)
