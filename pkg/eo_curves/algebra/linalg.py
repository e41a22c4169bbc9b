"""Exact linear algebra: fraction-free (Bareiss) elimination over the integers."""

import logging

from sympy import QQ

from eo_curves.algebra.rational import lcm_of_denominators, numerator, denominator
from eo_curves.errors import SingularMatrix


def _integer_rows(matrix, rhs=None):
    rows = []
    for i, row in enumerate(matrix):
        values = [QQ.convert(v) for v in row]
        if rhs is not None:
            values.append(QQ.convert(rhs[i]))
        scale = lcm_of_denominators(values)
        rows.append([numerator(v) * (scale // denominator(v)) for v in values])

    return rows


def solve_exact(matrix, rhs):
    """
    Solves matrix . x = rhs exactly
    :param matrix: square list of rows of rationals
    :param rhs: right-hand side
    :return: list of QQ elements
    """

    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise SingularMatrix('matrix is not square (%d rows)' % n)

    a = _integer_rows(matrix, rhs)
    prev = 1
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            raise SingularMatrix('no pivot in column %d' % k)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]

        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]

    x = [QQ(0)] * n
    for i in reversed(range(n)):
        acc = QQ(a[i][n])
        for j in range(i + 1, n):
            acc -= a[i][j] * x[j]
        x[i] = acc / a[i][i]

    logging.getLogger(__name__).debug('Solved %dx%d system' % (n, n))

    return x


class RowSelector(object):
    """Greedy choice of linearly independent rows, kept in integer echelon form"""

    def __init__(self, width: int):
        self.width = width
        self._basis = {}

    @property
    def rank(self):
        return len(self._basis)

    def offer(self, row) -> bool:
        """Adds the row if it is independent of the rows accepted so far"""
        v = _integer_rows([row])[0]
        for col in range(self.width):
            if v[col] == 0:
                continue
            if col not in self._basis:
                self._basis[col] = v
                return True

            b = self._basis[col]
            v = [x * b[col] - y * v[col] for x, y in zip(v, b)]

        return False
