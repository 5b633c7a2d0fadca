# -*- coding=utf-8

import logging
from math import gcd

from .fac_exception import FactorClientError

logger = logging.getLogger(__name__)


class SparseMatrix(object):
    """稀疏整数矩阵, 按行保存 {row: {col: value}}, 不保存零"""

    def __init__(self, nrows, ncols, entries=None):
        if nrows < 0 or ncols < 0:
            raise FactorClientError('matrix shape must be non-negative, got {0}x{1}'.format(nrows, ncols))
        self._nrows = nrows
        self._ncols = ncols
        self._rows = {}
        for (r, c), v in (entries or {}).items():
            self.add(r, c, v)

    @property
    def shape(self):
        return self._nrows, self._ncols

    def add(self, r, c, value):
        """在(r, c)处累加value"""
        if not (0 <= r < self._nrows and 0 <= c < self._ncols):
            raise FactorClientError('index ({0}, {1}) out of range for a {2}x{3} matrix'.format(
                r, c, self._nrows, self._ncols))
        if not value:
            return
        row = self._rows.setdefault(r, {})
        v = row.get(c, 0) + value
        if v:
            row[c] = v
        else:
            del row[c]
            if not row:
                del self._rows[r]

    def get(self, r, c):
        return self._rows.get(r, {}).get(c, 0)

    def items(self):
        for r in sorted(self._rows):
            row = self._rows[r]
            for c in sorted(row):
                yield (r, c), row[c]

    def rows(self):
        return dict((r, dict(row)) for r, row in self._rows.items())

    def nnz(self):
        return sum(len(row) for row in self._rows.values())

    def is_zero(self):
        return not self._rows

    def column(self, c):
        return dict((r, row[c]) for r, row in self._rows.items() if c in row)

    def multiply(self, other):
        """矩阵乘积 self * other"""
        if self._ncols != other._nrows:
            raise FactorClientError('can not multiply {0}x{1} by {2}x{3}'.format(
                self._nrows, self._ncols, other._nrows, other._ncols))
        result = SparseMatrix(self._nrows, other._ncols)
        for r, row in self._rows.items():
            for k, v in row.items():
                for c, w in other._rows.get(k, {}).items():
                    result.add(r, c, v * w)
        return result

    def to_dense(self):
        return [[self.get(r, c) for c in range(self._ncols)] for r in range(self._nrows)]

    def __eq__(self, other):
        return isinstance(other, SparseMatrix) and self.shape == other.shape and self._rows == other._rows

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'SparseMatrix({0}x{1}, nnz={2})'.format(self._nrows, self._ncols, self.nnz())


def _add_row(rows, target, source, factor):
    row = rows[target]
    for c, v in rows[source].items():
        nv = row.get(c, 0) + factor * v
        if nv:
            row[c] = nv
        else:
            row.pop(c, None)


def _pick_pivot(rows):
    best = None
    for r, row in rows.items():
        for c, v in row.items():
            key = (abs(v), r, c)
            if best is None or key < best:
                best = key
    return best[1], best[2]


def _diagonalize(matrix):
    rows = matrix.rows()
    diagonal = []
    while rows:
        pr, pc = _pick_pivot(rows)
        while True:
            p = rows[pr][pc]
            moved = False
            # 消去主元所在列, 余数非零时换成更小的主元
            for r in sorted(rows):
                if r == pr or pc not in rows[r]:
                    continue
                _add_row(rows, r, pr, -(rows[r][pc] // p))
                if rows[r].get(pc):
                    pr, moved = r, True
                    break
            if moved:
                continue
            # 此时主元列只有主元, 列变换只影响主元行
            for c in sorted(rows[pr]):
                if c == pc:
                    continue
                rem = rows[pr][c] - (rows[pr][c] // p) * p
                if rem:
                    rows[pr][c] = rem
                    pc, moved = c, True
                    break
                del rows[pr][c]
            if not moved:
                break
        diagonal.append(abs(rows[pr][pc]))
        del rows[pr]
        for r in [r for r, row in rows.items() if not row]:
            del rows[r]
    return diagonal


def _divisibility_chain(values):
    values = sorted(values)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            g = gcd(values[i], values[j])
            values[i], values[j] = g, values[i] * values[j] // g
    return values


def elementary_divisors(matrix):
    """矩阵的Smith正规形对角线上的非零元素, 满足 d1 | d2 | ...

    主元取绝对值最小的元素(相同时按行列号), 行列都消去后再处理下一个.
    """
    divisors = _divisibility_chain(_diagonalize(matrix))
    logger.debug("elementary divisors of {0}: rank {1}".format(matrix, len(divisors)))
    return divisors


def rank(matrix):
    return len(_diagonalize(matrix))
