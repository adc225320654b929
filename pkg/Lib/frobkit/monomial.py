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

"""Frobenius pushforwards of monomial ideals over a polynomial ring.

For ``R = k[x_1..x_n]`` the pushforward ``F^e_* I`` of a monomial ideal
splits by residues ``r in [0, q)^n`` into the ideals

    J_r = ( max(0, ceil((m - r) / q)) : m a generator of I ),

and ``F^e_* (R/I)`` into the quotients ``R/J_r``. Two monomial ideals are
isomorphic as modules exactly when one is a monomial translate of the
other, so ideal pieces are compared through ``iso_normal_form``.
"""

import collections
import itertools
import logging
import math
import re

from frobkit.constants import VARIABLE_ALIASES, enumeration_cap
from frobkit.errors import (
    CapExceeded,
    DimensionMismatch,
    MonomialSyntaxError,
    VerificationFailed,
)
from frobkit.frobenius import FrobeniusLevel
from frobkit.util import ceil_div, iter_window

__all__ = [
    "MonomialIdeal",
    "MonomialDecomposition",
    "SyzygyExample",
    "frobenius_power",
    "decompose_pushforward_ideal",
    "decompose_pushforward_quotient",
    "iso_normal_form",
    "count_copies",
    "syzygy_pushforward",
    "parse_ideal",
    "standard_monomials",
    "hilbert_consistency_check",
    "composition_check",
]

logger = logging.getLogger(__name__)


def _divides(m, g):
    return all(a <= b for a, b in zip(m, g))


def _minimalize(gens):
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    minimal = []
    for g in gens:
        if not any(_divides(m, g) for m in minimal):
            minimal.append(g)
    return frozenset(minimal)


class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    The unit ideal is generated by the zero exponent vector; an empty
    generator set is the zero ideal.
    """

    __slots__ = ("n", "gens")

    def __init__(self, n, gens):
        gens = [tuple(int(x) for x in g) for g in gens]
        for g in gens:
            if len(g) != n:
                raise DimensionMismatch("exponent vector %r for n = %d" % (g, n))
            if any(x < 0 for x in g):
                raise ValueError("negative exponent in %r" % (g,))
        self.n = n
        self.gens = _minimalize(gens)

    @classmethod
    def unit(cls, n):
        return cls(n, [(0,) * n])

    @classmethod
    def variables(cls, n, indices):
        return cls(n, [tuple(int(i == j) for j in range(n)) for i in indices])

    @property
    def is_unit(self):
        return (0,) * self.n in self.gens

    @property
    def is_zero(self):
        return not self.gens

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self):
        return hash((self.n, self.gens))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (len(self.gens), sorted(self.gens))

    def __contains__(self, monomial):
        return any(_divides(g, monomial) for g in self.gens)

    def sorted_gens(self):
        return sorted(self.gens, reverse=True)

    def __repr__(self):
        return "MonomialIdeal(%d, %r)" % (self.n, self.sorted_gens())

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(%s)" % ", ".join(
            format_monomial(g, self.n) for g in self.sorted_gens()
        )


def _variable_names(n):
    if n <= len(VARIABLE_ALIASES):
        return VARIABLE_ALIASES[:n]
    return tuple("x%d" % (i + 1) for i in range(n))


def format_monomial(exponents, n=None):
    names = _variable_names(len(exponents) if n is None else n)
    factors = []
    for name, k in zip(names, exponents):
        if k == 1:
            factors.append(name)
        elif k > 1:
            factors.append("%s^%d" % (name, k))
    return "*".join(factors) or "1"


_FACTOR_RE = re.compile(r"^(x\d+|[a-z])(?:\^(\d+))?$")


def _resolve_variable(name, n, column):
    if name[0] == "x" and name[1:].isdigit():
        index = int(name[1:]) - 1
        if not 0 <= index < n:
            raise MonomialSyntaxError(
                "variable %s out of range for n = %d" % (name, n), 1, column
            )
        return index
    if name in VARIABLE_ALIASES and n <= len(VARIABLE_ALIASES):
        index = VARIABLE_ALIASES.index(name)
        if index < n:
            return index
    raise MonomialSyntaxError("unknown variable %r for n = %d" % (name, n), 1, column)


def parse_ideal(text, n):
    """Parse generators like ``"x^2*y, z^3"`` into a MonomialIdeal.

    Variables are x1..xn; for n <= 6 the aliases x, y, z, u, v, w name the
    first variables. ``1`` is the unit monomial and ``0`` alone the zero
    ideal.
    """
    if not text.strip():
        raise MonomialSyntaxError("empty ideal", 1, 1)
    if text.strip() == "0":
        return MonomialIdeal(n, [])
    gens = []
    offset = 0
    for generator in text.split(","):
        exponents = [0] * n
        factor_offset = offset
        for factor in generator.split("*"):
            column = factor_offset + len(factor) - len(factor.lstrip()) + 1
            token = factor.strip()
            factor_offset += len(factor) + 1
            if token == "1":
                continue
            m = _FACTOR_RE.match(token)
            if m is None:
                raise MonomialSyntaxError("cannot parse factor %r" % token, 1, column)
            index = _resolve_variable(m[1], n, column)
            exponents[index] += int(m[2]) if m[2] else 1
        gens.append(exponents)
        offset += len(generator) + 1
    return MonomialIdeal(n, gens)


def frobenius_power(I, q):
    """I^[q]: every generator raised to the q-th power."""
    if q < 1:
        raise ValueError("q must be positive, got %d" % q)
    return MonomialIdeal(I.n, [tuple(q * x for x in g) for g in I.gens])


def iso_normal_form(I):
    """Divide out the largest monomial dividing every generator."""
    if I.is_zero:
        return I
    shift = [min(g[i] for g in I.gens) for i in range(I.n)]
    return MonomialIdeal(
        I.n, [tuple(x - s for x, s in zip(g, shift)) for g in I.gens]
    )


def _signature_groups(gens, n, q):
    """Per variable, residues r_i grouped by (max(0, ceil((m_i - r_i)/q)))_m."""
    groups = []
    for i in range(n):
        counter = collections.Counter(
            tuple(max(0, ceil_div(m[i] - r, q)) for m in gens) for r in range(q)
        )
        groups.append(sorted(counter.items()))
    return groups


def _piece_counter(I, q):
    """Raw piece ideals J_r counted over all q^n residues."""
    if I.is_zero:
        return collections.Counter({I: q**I.n})
    gens = sorted(I.gens)
    counter = collections.Counter()
    for combination in itertools.product(*_signature_groups(gens, I.n, q)):
        signatures = [signature for signature, _ in combination]
        multiplicity = math.prod(size for _, size in combination)
        piece = MonomialIdeal(
            I.n, [tuple(s[k] for s in signatures) for k in range(len(gens))]
        )
        counter[piece] += multiplicity
    return counter


class MonomialDecomposition:
    """Pieces of F^e_* I (``kind == "ideal"``) or F^e_* R/I (``"quotient"``).

    ``raw`` counts the ideals J_r themselves. For ideals ``pieces`` counts
    their translation normal forms, the unit ideal being a free summand.
    For quotients ``pieces`` counts the nonzero R/J_r by J_r and ``zero``
    the residues whose J_r is the unit ideal.
    """

    def __init__(self, ideal, level, raw, kind="ideal"):
        self.ideal = ideal
        self.level = level
        self.raw = raw
        self.kind = kind
        self.pieces = collections.Counter()
        self.zero = 0
        for J, k in raw.items():
            if kind == "ideal":
                self.pieces[iso_normal_form(J)] += k
            elif J.is_unit:
                self.zero += k
            else:
                self.pieces[J] += k
        assert self.total() == level.q**ideal.n

    def __repr__(self):
        return "<MonomialDecomposition %s %s e=%d p=%d>" % (
            self.kind,
            self.ideal,
            self.level.e,
            self.level.p,
        )

    def total(self):
        return sum(self.pieces.values()) + self.zero

    def items(self):
        return sorted(self.pieces.items())


def _level(level, p=None):
    if isinstance(level, FrobeniusLevel):
        return level
    return FrobeniusLevel(*level) if p is None else FrobeniusLevel(p, level)


def _check_cap(required, cap, what):
    cap = enumeration_cap() if cap is None else cap
    if required > cap:
        raise CapExceeded(required, cap, what)


def decompose_pushforward_ideal(I, level, cap=None):
    level = _level(level)
    _check_cap(level.q**I.n, cap, "monomial residue scan")
    logger.info("Decomposing F^%d_* %s (p = %d)", level.e, I, level.p)
    return MonomialDecomposition(I, level, _piece_counter(I, level.q))


def decompose_pushforward_quotient(I, level, cap=None):
    level = _level(level)
    _check_cap(level.q**I.n, cap, "monomial residue scan")
    logger.info("Decomposing F^%d_* R/%s (p = %d)", level.e, I, level.p)
    return MonomialDecomposition(
        I, level, _piece_counter(I, level.q), kind="quotient"
    )


def count_copies(D, target):
    if D.kind == "quotient":
        return D.pieces.get(target, 0)
    return D.pieces.get(iso_normal_form(target), 0)


def standard_monomials(I, box):
    """Number of exponent vectors in the inclusive box not lying in I."""
    return sum(1 for u in iter_window(box) if u not in I)


def hilbert_consistency_check(D, bound):
    """Standard monomials of I in [0, qB)^n against those of its pieces."""
    q, n = D.level.q, D.ideal.n
    small = tuple((0, bound - 1) for _ in range(n))
    large = tuple((0, q * bound - 1) for _ in range(n))
    direct = standard_monomials(D.ideal, large)
    summed = sum(k * standard_monomials(J, small) for J, k in D.raw.items())
    return direct == summed


def composition_check(I, p, e, f, cap=None):
    """Two-stage decomposition (e, then f on each piece) against e + f."""
    direct = decompose_pushforward_ideal(I, FrobeniusLevel(p, e + f), cap=cap)
    staged = collections.Counter()
    first = decompose_pushforward_ideal(I, FrobeniusLevel(p, e), cap=cap)
    for J, k in first.raw.items():
        for piece, m in _piece_counter(J, p**f).items():
            staged[iso_normal_form(piece)] += k * m
    return +staged == +direct.pieces


SyzygyExample = collections.namedtuple(
    "SyzygyExample",
    [
        "d",
        "level",
        "b_e",
        "quotient_copies",
        "zero_pieces",
        "first_rank",
        "second_rank",
        "syzygy_rank",
        "free_rank",
    ],
)
SyzygyExample.__doc__ = """Frobenius pushforward of M = Ω²(R/(u, v, w)).

``first_rank`` and ``second_rank`` are the ranks of F^e_* R^3 and F^e_* R
in the pushed-forward Koszul complex; ``syzygy_rank`` is the rank of
F^e_* M and ``free_rank`` the rank of its free complement to the
``b_e`` copies of M."""


def syzygy_pushforward(d, level, cap=None):
    """Copies of the second syzygy of C = R/(u, v, w) in F^e_* of itself.

    F^e_* C is C^(q^(d-3)): only residues vanishing on the three
    distinguished variables give a nonzero quotient. Pushing forward
    0 -> M -> R^3 -> R -> C -> 0 and comparing with q^(d-3) copies of the
    same complex leaves M^(q^(d-3)) plus a free module.
    """
    level = _level(level)
    if d < 3:
        raise ValueError("need d >= 3 variables, got %d" % d)
    q = level.q
    copies_expected = q ** (d - 3)
    _check_cap(copies_expected, cap, "syzygy copies")

    C = MonomialIdeal.variables(d, range(d - 3, d))
    quotient = MonomialDecomposition(C, level, _piece_counter(C, q), kind="quotient")
    copies = quotient.pieces.get(C, 0)
    if copies != copies_expected or set(quotient.pieces) - {C}:
        raise VerificationFailed("F^e_* C is not a sum of copies of C")

    unit = MonomialIdeal.unit(d)
    second_rank = _piece_counter(unit, q)[unit]
    first_rank = 3 * second_rank
    syzygy_rank = first_rank - second_rank

    # F^e_* (u, v, w) = R^f + (u, v, w)^c; covering it by R^(f + 3c) leaves
    # M^c as syzygy, and Schanuel against F^e_* R^3 adds the free part.
    image = MonomialDecomposition(C, level, _piece_counter(C, q))
    ideal_copies = image.pieces.get(C, 0)
    free_pieces = image.pieces.get(unit, 0)
    if ideal_copies != copies or set(image.pieces) - {C, unit}:
        raise VerificationFailed("F^e_* (u, v, w) is not free plus copies of it")
    free_rank = first_rank - free_pieces - 3 * ideal_copies
    if 2 * copies + free_rank != syzygy_rank:
        raise VerificationFailed(
            "rank of F^e_* M is %d, expected %d"
            % (2 * copies + free_rank, syzygy_rank)
        )
    logger.info(
        "F^%d_* Ω²C over %d variables: %d copies plus R^%d",
        level.e,
        d,
        copies,
        free_rank,
    )
    return SyzygyExample(
        d,
        level,
        copies,
        copies,
        quotient.zero,
        first_rank,
        second_rank,
        syzygy_rank,
        free_rank,
    )
