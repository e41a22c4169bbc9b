"""Truncated power series with coefficients in QQ or in any ring with +, * and scalar multiplication."""

from sympy import QQ

from eo_curves.errors import SeriesRangeError, EOError


class TruncatedSeries(object):
    """sum_{k<=order} c_k var^k; arithmetic truncates at order"""

    def __init__(self, coeffs, order: int, var: str = 'x', zero=None, normalize=None):
        self.order = order
        self.var = var
        self.zero = QQ(0) if zero is None else zero
        self.normalize = normalize

        coeffs = list(coeffs)[:order + 1]
        coeffs += [self.zero] * (order + 1 - len(coeffs))
        self._coeffs = [normalize(c) for c in coeffs] if normalize is not None else coeffs

    def _like(self, coeffs):
        return TruncatedSeries(coeffs, self.order, self.var, self.zero, self.normalize)

    def __getitem__(self, k: int):
        if k < 0 or k > self.order:
            raise SeriesRangeError('coefficient %d requested from a series truncated at %s^%d' % (k, self.var, self.order))

        return self._coeffs[k]

    def coefficients(self):
        return list(self._coeffs)

    def _check(self, other):
        if other.order != self.order or other.var != self.var:
            raise EOError('incompatible series (%s^%d vs %s^%d)' % (self.var, self.order, other.var, other.order))

    def __add__(self, other):
        self._check(other)
        return self._like([a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other):
        self._check(other)
        return self._like([a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __neg__(self):
        return self._like([-a for a in self._coeffs])

    def scale(self, c):
        return self._like([a * c for a in self._coeffs])

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)

        self._check(other)
        result = []
        for k in range(self.order + 1):
            acc = self.zero
            for i in range(k + 1):
                acc = acc + self._coeffs[i] * other._coeffs[k - i]
            result.append(acc)

        return self._like(result)

    def shift(self, k: int):
        """Multiplication by var^k"""
        return self._like([self.zero] * k + self._coeffs)

    def derivative(self):
        """d/dvar; the top coefficient is no longer known and the order drops by one"""
        return TruncatedSeries([self._coeffs[k] * k for k in range(1, self.order + 1)], self.order - 1, self.var, self.zero, self.normalize)

    def inverse(self):
        """1/f for a QQ series with invertible constant term"""
        c0 = self._coeffs[0]
        if not c0:
            raise ZeroDivisionError('constant term is zero')

        result = [QQ(1) / c0]
        for k in range(1, self.order + 1):
            acc = self.zero
            for i in range(1, k + 1):
                acc = acc + self._coeffs[i] * result[k - i]
            result.append(-acc / c0)

        return self._like(result)

    def exp(self):
        """exp(f) for f without constant term, via k E_k = sum_j j f_j E_{k-j}"""
        if self._coeffs[0]:
            raise EOError('exp needs a series without constant term')

        one = self._one()
        result = [one]
        for k in range(1, self.order + 1):
            acc = self.zero
            for j in range(1, k + 1):
                acc = acc + self._coeffs[j] * result[k - j] * QQ(j)
            result.append(acc * QQ(1, k))
            if self.normalize is not None:
                result[-1] = self.normalize(result[-1])

        return self._like(result)

    def _one(self):
        if isinstance(self.zero, type(QQ(0))):
            return QQ(1)

        return self.zero.one()

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def first_nonzero(self):
        for k, c in enumerate(self._coeffs):
            if c:
                return k

        return None

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and self.order == other.order and self.var == other.var and self._coeffs == other._coeffs

    def __repr__(self):
        return 'TruncatedSeries(%s, O(%s^%d))' % (self._coeffs, self.var, self.order + 1)
