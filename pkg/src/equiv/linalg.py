"""
Dense matrix helpers over a FieldSpec. Matrices are tuples of row tuples of element indices.
Elimination runs on galois field arrays.
"""

from typing import Sequence, Tuple

import numpy as np

from src.errors import SingularMatrix
from src.gf.field import FieldSpec
from src.gf.gfarray import to_array, to_rows

Matrix = Tuple[Tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def swap2() -> Matrix:
    return ((0, 1), (1, 0))


def diagonal(values: Sequence[int]) -> Matrix:
    n = len(values)
    return tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n))


def permutation_matrix(perm: Sequence[int]) -> Matrix:
    """
    Row i selects coordinate perm[i].
    """
    n = len(perm)
    return tuple(tuple(1 if j == perm[i] else 0 for j in range(n)) for i in range(n))


def mat_mul(field: FieldSpec, a: Matrix, b: Matrix) -> Matrix:
    return to_rows(to_array(field, a) @ to_array(field, b))


def determinant(field: FieldSpec, matrix: Matrix) -> int:
    return int(np.linalg.det(to_array(field, matrix)))


def is_invertible(field: FieldSpec, matrix: Matrix) -> bool:
    return determinant(field, matrix) != 0


def inverse(field: FieldSpec, matrix: Matrix) -> Matrix:
    if not is_invertible(field, matrix):
        raise SingularMatrix(f"matrix {matrix} is singular over {field!r}")
    return to_rows(np.linalg.inv(to_array(field, matrix)))


def check_square(matrix: Matrix, n: int):
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise SingularMatrix(f"expected a {n}x{n} matrix, got {matrix}")


def row_reduce(field: FieldSpec, rows: Sequence[Sequence[int]]) -> list:
    """
    Nonzero rows of the reduced row echelon form.
    """
    if not rows:
        return []
    return [row for row in to_rows(to_array(field, rows).row_reduce()) if any(row)]


def rank(field: FieldSpec, rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    return int(np.linalg.matrix_rank(to_array(field, rows)))


def nullspace(field: FieldSpec, rows: Sequence[Sequence[int]], width: int) -> list:
    """
    Basis of {v : A v = 0} for the matrix A with the given rows and `width` columns,
    in reduced row echelon form.
    """
    if not rows:
        return list(identity(width))
    return list(to_rows(to_array(field, rows).null_space()))
