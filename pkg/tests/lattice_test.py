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


import unittest

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from frobkit.errors import DimensionMismatch
from frobkit.lattice import (
    IntMatrix,
    cokernel_invariants,
    is_torsion_in_cokernel,
    rational_nullspace,
    rational_rank,
    smith_normal_form,
    solve_in_image,
    torsion_multiplier,
    unimodular_inverse,
    verify_smith_form,
)

A1_NORMALS = [[1, 0], [-1, 2]]
QUADRIC_NORMALS = [[1, 0, 0], [0, 1, 0], [-1, 0, 1], [0, -1, 1]]


def small_matrices(max_rows=4, max_cols=4, bound=12):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
                min_size=m,
                max_size=m,
            )
        )
    )


class IntMatrixTest(unittest.TestCase):
    def test_construction(self):
        A = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        self.assertEqual(A.shape, (2, 3))
        self.assertEqual(A[1, 2], 6)
        self.assertEqual(A.row(0), (1, 2, 3))
        self.assertEqual(A.column(1), (2, 5))
        self.assertEqual(A.transpose().to_rows(), [[1, 4], [2, 5], [3, 6]])
        self.assertEqual(IntMatrix.from_columns([(1, 4), (2, 5), (3, 6)], 2), A)

    def test_ragged_rows(self):
        with self.assertRaises(DimensionMismatch):
            IntMatrix.from_rows([[1, 2], [3]])
        with self.assertRaises(DimensionMismatch):
            IntMatrix.from_rows([])

    def test_immutable(self):
        A = IntMatrix.identity(2)
        with self.assertRaises(AttributeError):
            A.rows = 3

    def test_products(self):
        A = IntMatrix.from_rows([[1, 2], [3, 4]])
        self.assertEqual(A @ (1, 1), (3, 7))
        self.assertEqual((A @ IntMatrix.identity(2)), A)
        self.assertEqual((A @ A).to_rows(), [[7, 10], [15, 22]])
        with self.assertRaises(DimensionMismatch):
            A.apply((1, 2, 3))
        with self.assertRaises(DimensionMismatch):
            A @ IntMatrix.zeros(3, 1)

    def test_determinant_and_rank(self):
        self.assertEqual(IntMatrix.from_rows(A1_NORMALS).determinant(), 2)
        self.assertEqual(IntMatrix.from_rows([[1, 2], [2, 4]]).rank(), 1)
        self.assertEqual(IntMatrix.from_rows(QUADRIC_NORMALS).rank(), 3)
        with self.assertRaises(DimensionMismatch):
            IntMatrix.from_rows(QUADRIC_NORMALS).determinant()


class SmithFormTest(unittest.TestCase):
    def test_a1_class_group(self):
        A = IntMatrix.from_rows(A1_NORMALS)
        form = smith_normal_form(A)
        self.assertTrue(verify_smith_form(A, form))
        self.assertEqual(form.D.diagonal(), (1, 2))
        self.assertEqual(cokernel_invariants(A, form), (0, [2]))

    def test_quadric_class_group(self):
        A = IntMatrix.from_rows(QUADRIC_NORMALS)
        form = smith_normal_form(A)
        self.assertTrue(verify_smith_form(A, form))
        self.assertEqual(form.rank, 3)
        self.assertEqual(cokernel_invariants(A, form), (1, []))

    def test_zero_matrix(self):
        A = IntMatrix.zeros(2, 3)
        form = smith_normal_form(A)
        self.assertEqual(form.rank, 0)
        self.assertEqual(cokernel_invariants(A, form), (2, []))

    def test_tampered_form_is_rejected(self):
        A = IntMatrix.from_rows(A1_NORMALS)
        form = smith_normal_form(A)
        bad = form._replace(D=IntMatrix.from_rows([[2, 0], [0, 1]]))
        self.assertFalse(verify_smith_form(A, bad))


@pytest.mark.parametrize(
    "rows, expected",
    [
        (
            [[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]],
            (1, 10, 30, 0),
        ),
        ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], (2, 6, 12)),
        ([[6, 0], [0, 4]], (2, 12)),
    ],
)
def test_known_smith_forms(rows, expected):
    A = IntMatrix.from_rows(rows)
    form = smith_normal_form(A)
    assert verify_smith_form(A, form)
    assert form.D.diagonal() == expected


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_smith_form_agrees_with_sympy(rows):
    A = IntMatrix.from_rows(rows)
    form = smith_normal_form(A)
    assert verify_smith_form(A, form)
    ours = [d for d in form.D.diagonal() if d]
    theirs = [abs(int(d)) for d in invariant_factors(Matrix(rows), domain=ZZ) if d]
    assert ours == theirs


@settings(max_examples=60, deadline=None)
@given(small_matrices(), st.data())
def test_solve_in_image_finds_preimages(rows, data):
    A = IntMatrix.from_rows(rows)
    x = data.draw(st.lists(st.integers(-5, 5), min_size=A.cols, max_size=A.cols))
    c = A.apply(x)
    solution = solve_in_image(A, c)
    assert solution is not None
    assert A.apply(solution) == c
    assert is_torsion_in_cokernel(A, c)
    assert torsion_multiplier(A, c) == 1


@settings(max_examples=60, deadline=None)
@given(small_matrices(), st.data())
def test_cokernel_invariants_ignore_order_and_zero_columns(rows, data):
    expected = cokernel_invariants(IntMatrix.from_rows(rows))
    row_order = data.draw(st.permutations(range(len(rows))))
    col_order = data.draw(st.permutations(range(len(rows[0]))))
    shuffled = [[rows[i][j] for j in col_order] for i in row_order]
    assert cokernel_invariants(IntMatrix.from_rows(shuffled)) == expected
    extra = data.draw(st.integers(1, 3))
    padded = [row + [0] * extra for row in rows]
    assert cokernel_invariants(IntMatrix.from_rows(padded)) == expected


class CokernelTest(unittest.TestCase):
    def setUp(self):
        self.A = IntMatrix.from_rows(A1_NORMALS)

    def test_membership(self):
        self.assertIsNone(solve_in_image(self.A, (0, 1)))
        self.assertIsNotNone(solve_in_image(self.A, (1, 1)))
        self.assertEqual(torsion_multiplier(self.A, (0, 1)), 2)

    def test_free_part_is_not_torsion(self):
        A = IntMatrix.from_rows(QUADRIC_NORMALS)
        self.assertFalse(is_torsion_in_cokernel(A, (1, 0, 0, 0)))
        self.assertIsNone(torsion_multiplier(A, (1, 0, 0, 0)))
        self.assertTrue(is_torsion_in_cokernel(A, (1, 0, -1, 0)))

    def test_wrong_length(self):
        with self.assertRaises(DimensionMismatch):
            solve_in_image(self.A, (1, 2, 3))


class RationalTest(unittest.TestCase):
    def test_rank(self):
        self.assertEqual(rational_rank([], 3), 0)
        self.assertEqual(rational_rank([[1, 2, 3], [2, 4, 6]], 3), 1)

    def test_nullspace_is_primitive(self):
        basis = rational_nullspace([[2, -4]], 2)
        self.assertEqual(len(basis), 1)
        self.assertIn(basis[0], [(2, 1), (-2, -1)])
        self.assertEqual(len(rational_nullspace([], 2)), 2)

    def test_unimodular_inverse(self):
        U = IntMatrix.from_rows([[1, 0], [1, 1]])
        self.assertEqual(unimodular_inverse(U).to_rows(), [[1, 0], [-1, 1]])
        with self.assertRaises(ValueError):
            unimodular_inverse(IntMatrix.from_rows(A1_NORMALS))
