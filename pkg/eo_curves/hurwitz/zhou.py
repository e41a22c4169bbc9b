"""
The ring of finite sums c q^j hbar^k e^{-m w}, q = e^hbar, and the operators acting on it:
d/dw, d/dhbar, the shift e^{-hbar d/dw}, and multiplication by hbar, q, e^{-w}.
"""

import math

from sympy import QQ

from eo_curves.algebra import encode_rational


class QHbarExpr(object):
    """Map (j, k, m) -> coefficient of q^j hbar^k e^{-m w}"""

    def __init__(self, terms=None):
        self.terms = {}
        for key, c in (terms or {}).items():
            c = QQ.convert(c)
            if c:
                self.terms[key] = self.terms.get(key, QQ(0)) + c
                if not self.terms[key]:
                    del self.terms[key]

    @classmethod
    def monomial(cls, j=0, k=0, m=0, c=1):
        return cls({(j, k, m): c})

    def __add__(self, other):
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, QQ(0)) + c
        return QHbarExpr(terms)

    def __neg__(self):
        return QHbarExpr({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, QHbarExpr):
            c = QQ.convert(other)
            return QHbarExpr({key: v * c for key, v in self.terms.items()})

        terms = {}
        for (j1, k1, m1), c1 in self.terms.items():
            for (j2, k2, m2), c2 in other.terms.items():
                key = (j1 + j2, k1 + k2, m1 + m2)
                terms[key] = terms.get(key, QQ(0)) + c1 * c2
        return QHbarExpr(terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, QHbarExpr) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return 'QHbarExpr(%s)' % self.to_json()

    def to_json(self):
        return [[list(key), encode_rational(c)] for key, c in sorted(self.terms.items())]

    # operators

    def d_w(self):
        return QHbarExpr({(j, k, m): -m * c for (j, k, m), c in self.terms.items()})

    def d_hbar(self):
        """d/dhbar (q^j hbar^k) = j q^j hbar^k + k q^j hbar^(k-1)"""
        result = QHbarExpr()
        for (j, k, m), c in self.terms.items():
            result = result + QHbarExpr({(j, k, m): j * c}) + QHbarExpr({(j, k - 1, m): k * c})
        return result

    def shift(self):
        """e^{-hbar d/dw}: f(w) -> f(w - hbar), so e^{-mw} -> q^m e^{-mw}"""
        return QHbarExpr({(j + m, k, m): c for (j, k, m), c in self.terms.items()})

    def times(self, j=0, k=0, m=0):
        return QHbarExpr({(a + j, b + k, c + m): v for (a, b, c), v in self.terms.items()})


def p_operator(f: QHbarExpr) -> QHbarExpr:
    """P = hbar d/dw + e^{-w} e^{-hbar d/dw}"""
    return f.d_w().times(k=1) + f.shift().times(m=1)


def q_operator(f: QHbarExpr, half_hbar: bool = True) -> QHbarExpr:
    """Q = 1/2 hbar d^2/dw^2 + (1 + hbar/2) d/dw - hbar d/dhbar"""
    dw = f.d_w()
    result = dw.d_w().times(k=1) * QQ(1, 2) + dw - f.d_hbar().times(k=1)
    if half_hbar:
        result = result + dw.times(k=1) * QQ(1, 2)
    return result


def zhou_term(m: int, exponent=None) -> QHbarExpr:
    """a_m = q^{m(m-1)/2} hbar^{-m} e^{-mw}"""
    j = m * (m - 1) // 2 if exponent is None else exponent(m)
    return QHbarExpr.monomial(j, -m, m)


def zhou_series(order: int, exponent=None) -> QHbarExpr:
    total = QHbarExpr()
    for m in range(order + 1):
        total = total + zhou_term(m, exponent) * QQ(1, math.factorial(m))
    return total


def zhou_series_checks(order: int, exponent=None):
    """
    Termwise checks for m <= order: the recursion a_{m+1} = q^m a_m e^{-w}/hbar, the sector-m residual
    of (hbar d/dw + e^{-w} e^{-hbar d/dw}) Z, and the heat bracket
    (1/2 d^2/dw^2 + (1/2 + 1/hbar) d/dw - d/dhbar) a_m
    :param exponent: optional replacement for m(m-1)/2
    :return: dict of failing m per check
    """

    failures = {'recursion': [], 'difference': [], 'heat': []}

    # sector 0 of P Z is hbar d/dw a_0
    if zhou_term(0, exponent).d_w():
        failures['difference'].append(0)

    for m in range(order + 1):
        a_m = zhou_term(m, exponent)
        a_next = zhou_term(m + 1, exponent)

        if a_m.times(j=m, k=-1, m=1) != a_next:
            failures['recursion'].append(m)

        sector = a_next.d_w().times(k=1) * QQ(1, math.factorial(m + 1)) + \
            a_m.shift().times(m=1) * QQ(1, math.factorial(m))
        if sector:
            failures['difference'].append(m + 1)

        dw = a_m.d_w()
        bracket = dw.d_w() * QQ(1, 2) + dw * QQ(1, 2) + dw.times(k=-1) - a_m.d_hbar()
        if bracket:
            failures['heat'].append(m)

    return {'passed': not any(failures.values()), 'failures': failures}


def pq_commutator_check(order: int, k_range: int = 3, half_hbar: bool = True):
    """(PQ - QP - P) on e^{-mw} hbar^k for m <= order, |k| <= k_range"""
    failures = []
    for m in range(order + 1):
        for k in range(-k_range, k_range + 1):
            f = QHbarExpr.monomial(0, k, m)
            residual = p_operator(q_operator(f, half_hbar)) - q_operator(p_operator(f), half_hbar) - p_operator(f)
            if residual:
                failures.append((m, k))

    return {'passed': not failures, 'failures': failures}
