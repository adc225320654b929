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

"""Ring definitions: the built-in registry and ``[ring]`` spec files.

A spec file is a TOML document with a single ``[ring]`` table::

    [ring]
    name = "A1"
    kind = "toric"
    facet_normals = [[0, 1], [2, -1]]
    p = 3

``kind = "cyclic_quotient"`` takes ``n``, ``d`` and ``weights`` instead of
``facet_normals``; ``kind = "polynomial"`` takes ``vars``. ``p`` may be
left out and supplied by the caller.
"""

import collections
import logging
import re
import sys

from frobkit.cone import hilbert_basis
from frobkit.constants import REGISTRY, REGISTRY_RELATIONS, RING_KINDS
from frobkit.errors import (
    ConeError,
    DimensionMismatch,
    ParseError,
    PseudoReflection,
    ValidationError,
    VerificationFailed,
)
from frobkit.lattice import IntMatrix
from frobkit.toric import cyclic_quotient_ring, toric_ring

if sys.version_info[:2] >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

__all__ = ["RingSpec", "parse_ring_spec", "build_ring", "load_ring", "registry_spec"]

logger = logging.getLogger(__name__)

RingSpec = collections.namedtuple(
    "RingSpec",
    ["name", "kind", "p", "facet_normals", "n", "d", "weights", "vars"],
    defaults=(None,) * 6,
)

_KIND_KEYS = {
    "toric": {"facet_normals"},
    "cyclic_quotient": {"n", "d", "weights"},
    "polynomial": {"vars"},
}
_COMMON_KEYS = {"name", "kind", "p"}

_LOCATION_RE = re.compile(r"\(at line (\d+), column (\d+)\)")


def _key_location(text, key):
    pattern = re.compile(r"^(\s*)%s\s*=" % re.escape(key))
    for lineno, line in enumerate(text.splitlines(), start=1):
        m = pattern.match(line)
        if m:
            return lineno, len(m[1]) + 1
    return None, None


def _decode(text):
    try:
        return tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        lineno = getattr(e, "lineno", None)
        colno = getattr(e, "colno", None)
        message = getattr(e, "msg", None) or str(e)
        if lineno is None:
            m = _LOCATION_RE.search(str(e))
            if m:
                lineno, colno = int(m[1]), int(m[2])
            message = _LOCATION_RE.sub("", message).strip()
        raise ParseError(message, lineno, colno) from e


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _check_int(text, key, value, minimum=None):
    if not _is_int(value) or (minimum is not None and value < minimum):
        lineno, colno = _key_location(text, key)
        expected = "an integer" if minimum is None else "an integer >= %d" % minimum
        message = "%s must be %s, got %r" % (key, expected, value)
        raise ParseError(message, lineno, colno)


def _check_int_list(text, key, value):
    if not isinstance(value, list) or not all(_is_int(x) for x in value):
        lineno, colno = _key_location(text, key)
        raise ParseError("%s must be a list of integers" % key, lineno, colno)


def parse_ring_spec(text):
    """Parse the text of a ring spec file into a RingSpec."""
    document = _decode(text)
    extra = set(document) - {"ring"}
    if extra or "ring" not in document:
        location = _key_location(text, sorted(extra)[0]) if extra else (1, 1)
        raise ParseError(
            "expected exactly one [ring] table, found %s"
            % (sorted(document) or "nothing"),
            *location,
        )
    table = document["ring"]
    kind = table.get("kind")
    if kind not in RING_KINDS:
        lineno, colno = _key_location(text, "kind")
        raise ParseError(
            "kind must be one of %s, got %r" % (", ".join(RING_KINDS), kind),
            lineno,
            colno,
        )
    allowed = _COMMON_KEYS | _KIND_KEYS[kind]
    for key in table:
        if key not in allowed:
            lineno, colno = _key_location(text, key)
            raise ParseError("unknown key %r for kind %s" % (key, kind), lineno, colno)
    missing = sorted(_KIND_KEYS[kind] - set(table))
    if missing:
        raise ParseError("missing keys for kind %s: %s" % (kind, ", ".join(missing)))

    name = table.get("name", kind)
    if not isinstance(name, str):
        raise ParseError("name must be a string", *_key_location(text, "name"))
    if "p" in table:
        _check_int(text, "p", table["p"], minimum=2)
    if kind == "toric":
        rows = table["facet_normals"]
        if not isinstance(rows, list) or not rows:
            raise ParseError(
                "facet_normals must be a nonempty list of rows",
                *_key_location(text, "facet_normals"),
            )
        for row in rows:
            _check_int_list(text, "facet_normals", row)
    elif kind == "cyclic_quotient":
        _check_int(text, "n", table["n"], minimum=1)
        _check_int(text, "d", table["d"], minimum=1)
        _check_int_list(text, "weights", table["weights"])
    else:
        _check_int(text, "vars", table["vars"], minimum=1)

    return RingSpec(
        name=name,
        kind=kind,
        p=table.get("p"),
        facet_normals=table.get("facet_normals"),
        n=table.get("n"),
        d=table.get("d"),
        weights=table.get("weights"),
        vars=table.get("vars"),
    )


def registry_spec(name):
    try:
        entry = REGISTRY[name]
    except KeyError:
        raise ValidationError(
            "unknown ring %r; known rings: %s" % (name, ", ".join(sorted(REGISTRY)))
        ) from None
    return RingSpec(**entry)


def _check_relations(ring, name):
    generators, (left, right) = REGISTRY_RELATIONS[name]
    basis = hilbert_basis(ring.cone)
    if sorted(basis) != sorted(generators):
        raise VerificationFailed(
            "Hilbert basis of %s is %r, expected %r" % (name, basis, generators)
        )
    sums = [
        tuple(sum(generators[k][i] for k in side) for i in range(ring.n))
        for side in (left, right)
    ]
    if sums[0] != sums[1]:
        raise VerificationFailed("relation %r fails on %s" % ((left, right), name))
    logger.debug("Verified generators and relation of %s", name)


def build_ring(spec, p=None):
    """Build the ring of a spec; an explicit ``p`` overrides the spec's."""
    p = p if p is not None else spec.p
    if p is None:
        raise ValidationError("no characteristic given for ring %s" % spec.name)
    try:
        if spec.kind == "toric":
            ring = toric_ring(spec.facet_normals, p, name=spec.name)
        elif spec.kind == "cyclic_quotient":
            ring = cyclic_quotient_ring(
                spec.n, spec.d, spec.weights, p, name=spec.name
            )
        else:
            ring = toric_ring(IntMatrix.identity(spec.vars), p, name=spec.name)
    except (ConeError, DimensionMismatch, PseudoReflection) as e:
        raise ValidationError("%s: %s" % (spec.name, e)) from e
    registered = REGISTRY.get(spec.name, {})
    if (
        spec.name in REGISTRY_RELATIONS
        and spec.facet_normals == registered.get("facet_normals")
    ):
        _check_relations(ring, spec.name)
    return ring


def load_ring(source, p=None):
    """Resolve a registry name or read a spec file, then build the ring."""
    if source in REGISTRY:
        spec = registry_spec(source)
    else:
        try:
            with open(source, encoding="utf-8") as fp:
                text = fp.read()
        except OSError as e:
            raise ValidationError(
                "%r is neither a registry ring nor a readable file: %s"
                % (source, e.strerror)
            ) from e
        except UnicodeDecodeError as e:
            raise ParseError(
                "%s is not UTF-8: invalid byte at offset %d" % (source, e.start)
            ) from e
        spec = parse_ring_spec(text)
    logger.info("Loading ring %s (%s)", spec.name, spec.kind)
    return build_ring(spec, p)
