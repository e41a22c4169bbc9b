"""Sparse multivariate Laurent polynomials over QQ."""

import itertools

import numpy as np
from sympy import QQ

from eo_curves.algebra.rational import encode_rational, decode_rational, to_float
from eo_curves.errors import EOError, NonzeroResidue


class SparseLaurent(object):
    """Map from exponent tuples (possibly negative) to nonzero QQ coefficients"""

    def __init__(self, arity: int, terms=None):
        self.arity = arity
        self.terms = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != arity:
                raise EOError('exponent vector %s does not have length %d' % (exps, arity))
            c = QQ.convert(c)
            if c:
                self.terms[exps] = self.terms.get(exps, QQ(0)) + c
                if not self.terms[exps]:
                    del self.terms[exps]

    @classmethod
    def zero(cls, arity):
        return cls(arity)

    @classmethod
    def constant(cls, arity, c):
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def monomial(cls, exps, c=1):
        return cls(len(exps), {tuple(exps): c})

    def __eq__(self, other):
        return isinstance(other, SparseLaurent) and self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return 'SparseLaurent(%d, %s)' % (self.arity, self.to_json())

    def _same(self, other):
        if other.arity != self.arity:
            raise EOError('arity mismatch: %d vs %d' % (self.arity, other.arity))

    def __add__(self, other):
        if not isinstance(other, SparseLaurent):
            other = SparseLaurent.constant(self.arity, other)
        self._same(other)
        result = dict(self.terms)
        for e, c in other.terms.items():
            result[e] = result.get(e, QQ(0)) + c

        return SparseLaurent(self.arity, result)

    __radd__ = __add__

    def __neg__(self):
        return SparseLaurent(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, SparseLaurent):
            c = QQ.convert(other)
            return SparseLaurent(self.arity, {e: v * c for e, v in self.terms.items()})

        self._same(other)
        result = {}
        for (e1, c1), (e2, c2) in itertools.product(self.terms.items(), other.terms.items()):
            e = tuple(a + b for a, b in zip(e1, e2))
            result[e] = result.get(e, QQ(0)) + c1 * c2

        return SparseLaurent(self.arity, result)

    __rmul__ = __mul__

    def diff(self, i: int) -> 'SparseLaurent':
        """Partial derivative in variable i"""
        result = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                result[tuple(e2)] = c * e[i]

        return SparseLaurent(self.arity, result)

    def integrate(self, i: int) -> 'SparseLaurent':
        """Termwise antiderivative in variable i; a var_i^-1 term is a logarithm"""
        result = {}
        for e, c in self.terms.items():
            if e[i] == -1:
                raise NonzeroResidue('term %s has exponent -1 in variable %d' % (e, i))
            e2 = list(e)
            e2[i] += 1
            result[tuple(e2)] = c / (e[i] + 1)

        return SparseLaurent(self.arity, result)

    def specialize(self, i: int, value) -> 'SparseLaurent':
        """Substitutes a rational value for variable i, keeping the arity (exponent i becomes 0)"""
        value = QQ.convert(value)
        result = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[i] = 0
            e2 = tuple(e2)
            result[e2] = result.get(e2, QQ(0)) + c * value ** e[i]

        return SparseLaurent(self.arity, result)

    def permute(self, perm) -> 'SparseLaurent':
        """Variable k of the result is variable perm[k] of self"""
        return SparseLaurent(self.arity, {tuple(e[p] for p in perm): c for e, c in self.terms.items()})

    def is_symmetric(self) -> bool:
        for i in range(self.arity - 1):
            perm = list(range(self.arity))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if self.permute(perm) != self:
                return False

        return True

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def min_exponent(self) -> int:
        return min((min(e) for e in self.terms if e), default=0)

    def evaluate(self, point):
        point = [QQ.convert(v) for v in point]
        acc = QQ(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(point, e):
                term *= v ** k
            acc += term

        return acc

    def evaluate_float(self, point) -> float:
        point = np.asarray(point, dtype=float)
        exps = np.array(list(self.terms.keys()), dtype=float).reshape(-1, self.arity)
        coeffs = np.array([to_float(c) for c in self.terms.values()])
        return float(np.sum(coeffs * np.prod(point ** exps, axis=1)))

    def diagonal(self, var: str = 't'):
        """Principal specialization t_1 = ... = t_n = var as a RationalFunction1"""
        from eo_curves.algebra.ratfunc import RationalFunction1

        low = min((sum(e) for e in self.terms), default=0)
        shift = -low if low < 0 else 0
        coeffs = {}
        for e, c in self.terms.items():
            k = sum(e) + shift
            coeffs[k] = coeffs.get(k, QQ(0)) + c
        top = max(coeffs, default=0)
        num = RationalFunction1.from_coeffs([coeffs.get(k, 0) for k in range(top + 1)], var=var)
        return num / RationalFunction1.gen(var) ** shift

    # sympy sparse field bridge

    def to_field(self, gens):
        """
        Realizes the polynomial inside a sympy field, variable k mapped to gens[k]
        :param gens: field generators (repetition allowed)
        :return: field element
        """

        field = gens[0].field
        acc = field.zero
        for e, c in self.terms.items():
            term = field(c)
            for g, k in zip(gens, e):
                if k:
                    term = term * g ** k
            acc += term

        return acc

    @classmethod
    def from_field(cls, element, arity: int) -> 'SparseLaurent':
        """Converts a field element whose denominator is a single monomial"""
        den_terms = element.denom.terms()
        if len(den_terms) != 1:
            raise NonzeroResidue('denominator %s is not a monomial' % element.denom.as_expr())

        (den_exps, den_coeff), = den_terms
        terms = {}
        for exps, c in element.numer.terms():
            terms[tuple(a - b for a, b in zip(exps, den_exps))[:arity]] = QQ.convert(c) / QQ.convert(den_coeff)

        return cls(arity, terms)

    # codec

    def to_json(self):
        return [[list(e), encode_rational(self.terms[e])] for e in sorted(self.terms)]

    @classmethod
    def from_json(cls, arity, obj):
        return cls(arity, {tuple(e): decode_rational(c) for e, c in obj})
