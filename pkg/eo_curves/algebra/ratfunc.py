"""Univariate rational functions over QQ, kept in lowest terms with a monic denominator."""

import numpy as np
from sympy import Add, Poly, Symbol, QQ, apart, fraction

from eo_curves.algebra.rational import encode_rational, decode_rational, to_float
from eo_curves.errors import NonzeroResidue, UnfactoredDenominator, DegenerateMap, EOError

_symbols = {}


def variable(tag: str) -> Symbol:
    if tag not in _symbols:
        _symbols[tag] = Symbol(tag)

    return _symbols[tag]


def _poly(coeffs_low_to_high, tag):
    coeffs = [QQ.convert(c) for c in coeffs_low_to_high] or [QQ(0)]
    return Poly.from_list(list(reversed(coeffs)), variable(tag), domain=QQ)


class RationalFunction1(object):
    """num / den in one variable; immutable"""

    __slots__ = ('num', 'den', 'var')

    def __init__(self, num: Poly, den: Poly = None, var: str = 't'):
        if den is None:
            den = Poly(1, variable(var), domain=QQ)

        if den.is_zero:
            raise ZeroDivisionError('zero denominator')

        if num.is_zero:
            num, den = num, Poly(1, variable(var), domain=QQ)
        else:
            num, den = num.cancel(den, include=True)

        lc = den.LC()
        object.__setattr__(self, 'num', num.quo_ground(lc))
        object.__setattr__(self, 'den', den.monic())
        object.__setattr__(self, 'var', var)

    def __setattr__(self, key, value):
        raise AttributeError('RationalFunction1 is immutable')

    @classmethod
    def from_coeffs(cls, num, den=(1,), var='t'):
        """Builds num/den from low-to-high coefficient lists"""
        return cls(_poly(num, var), _poly(den, var), var)

    @classmethod
    def constant(cls, c, var='t'):
        return cls.from_coeffs([c], var=var)

    @classmethod
    def gen(cls, var='t'):
        return cls.from_coeffs([0, 1], var=var)

    @classmethod
    def from_poly(cls, poly: Poly, var='t'):
        return cls(Poly(poly.as_expr(), variable(var), domain=QQ), None, var)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, RationalFunction1):
            if other.var != self.var:
                raise EOError('variable mismatch: %s vs %s' % (self.var, other.var))
            return other

        return RationalFunction1.constant(other, self.var)

    def __add__(self, other):
        other = self._coerce(other)
        return RationalFunction1(self.num * other.den + other.num * self.den, self.den * other.den, self.var)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction1(-self.num, self.den, self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction1(self.num * other.num, self.den * other.den, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.num.is_zero:
            raise ZeroDivisionError('division by the zero function')

        return RationalFunction1(self.num * other.den, self.den * other.num, self.var)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunction1.constant(1, self.var) / (self ** -k)

        return RationalFunction1(self.num ** k, self.den ** k, self.var)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction1):
            try:
                other = self._coerce(other)
            except Exception:
                return NotImplemented

        return self.var == other.var and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.var, tuple(self.num.all_coeffs()), tuple(self.den.all_coeffs())))

    def __bool__(self):
        return not self.num.is_zero

    def is_zero(self) -> bool:
        return self.num.is_zero

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def __repr__(self):
        return 'RationalFunction1(%s)' % self.as_expr()

    def as_expr(self):
        return self.num.as_expr() / self.den.as_expr()

    # calculus and evaluation

    def differentiate(self) -> 'RationalFunction1':
        """d/dvar in reduced form"""
        return RationalFunction1(self.num.diff() * self.den - self.num * self.den.diff(), self.den ** 2, self.var)

    def evaluate(self, value):
        """Exact value at a rational point, as a QQ element"""
        point = QQ.to_sympy(QQ.convert(value))
        d = QQ.convert(self.den.eval(point))
        if d == 0:
            raise ZeroDivisionError('pole at %s' % value)

        return QQ.convert(self.num.eval(point)) / d

    def evaluate_float(self, value: float) -> float:
        num = np.polyval([to_float(c) for c in self.num.all_coeffs()], value)
        den = np.polyval([to_float(c) for c in self.den.all_coeffs()], value)
        return float(num / den)

    def substitute_mobius(self, a, b, c, d, var: str = None) -> 'RationalFunction1':
        """
        Composes with var -> (a u + b) / (c u + d)
        :param var: tag of the new variable u
        :return: reduced composition
        """

        var = var or self.var
        a, b, c, d = (QQ.convert(v) for v in (a, b, c, d))
        if a * d - b * c == 0:
            raise DegenerateMap('ad - bc = 0 for (%s, %s, %s, %s)' % (a, b, c, d))

        top = _poly([b, a], var)
        bottom = _poly([d, c], var)
        degree = max(self.num.degree(), self.den.degree(), 0)

        def compose(p):
            result = _poly([0], var)
            for k, coeff in enumerate(reversed(p.all_coeffs())):
                if coeff:
                    result += (top ** k * bottom ** (degree - k)).mul_ground(coeff)
            return result

        return RationalFunction1(compose(self.num), compose(self.den), var)

    # codec

    def to_json(self):
        return {'var': self.var,
                'num': [encode_rational(c) for c in reversed(self.num.all_coeffs())],
                'den': [encode_rational(c) for c in reversed(self.den.all_coeffs())]}

    @classmethod
    def from_json(cls, obj):
        return cls.from_coeffs([decode_rational(c) for c in obj['num']], [decode_rational(c) for c in obj['den']], obj['var'])


def differentiate(f: RationalFunction1) -> RationalFunction1:
    return f.differentiate()


def substitute_mobius(f: RationalFunction1, mobius, var: str = None) -> RationalFunction1:
    return f.substitute_mobius(*mobius, var=var)


def linear_factors(var: str, *roots):
    """Monic linear polynomials var - r for each root r"""
    return [_poly([-QQ.convert(r), 1], var) for r in roots]


def _root_of(factor: Poly):
    if factor.degree() != 1:
        raise UnfactoredDenominator('%s is not linear' % factor)

    c1, c0 = factor.all_coeffs()
    return -c0 / c1


def integrate_no_log(f: RationalFunction1, base_point, allowed_factors) -> RationalFunction1:
    """
    Antiderivative F of f with F(base_point) = 0, by partial fractions over the declared linear factors
    :param f: integrand
    :param base_point: where the antiderivative vanishes
    :param allowed_factors: linear polynomials the denominator may be built from
    :return: F
    """

    var = f.var
    u = variable(var)
    roots = {_root_of(p) for p in allowed_factors}

    _, factors = f.den.factor_list()
    for base, _ in factors:
        if base.degree() != 1 or _root_of(base) not in roots:
            raise UnfactoredDenominator('denominator factor %s outside %s' % (base.as_expr(), [p.as_expr() for p in allowed_factors]))

    result = RationalFunction1.constant(0, var)
    for term in Add.make_args(apart(f.num.as_expr() / f.den.as_expr(), u)):
        num, den = (Poly(e, u, domain=QQ) for e in fraction(term))
        if den.degree() == 0:
            result = result + RationalFunction1.from_poly(num.quo_ground(den.LC()).integrate(), var)
            continue

        coeff, poles = den.factor_list()
        if len(poles) != 1 or num.degree() > 0:
            raise UnfactoredDenominator('%s is not a single pole term' % term)

        (base, k), = poles
        a = _root_of(base)
        c = num.LC() / (coeff * base.LC() ** k)
        if k == 1:
            raise NonzeroResidue('residue %s at %s=%s' % (encode_rational(c), var, a))

        shift = RationalFunction1.from_coeffs([-a, 1], var=var)
        result = result + (shift ** (1 - k)) * (c / (1 - k))

    try:
        return result - result.evaluate(base_point)
    except ZeroDivisionError:
        raise EOError('base point %s is a pole of the antiderivative' % base_point)
