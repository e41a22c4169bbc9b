"""WKB coefficients S^H_m of the Lambert curve x = z e^{-z}, z = (t-1)/t."""

import logging
import math

from sympy import QQ

from eo_curves.algebra import RationalFunction1, TruncatedSeries, integrate_no_log, linear_factors
from eo_curves.errors import PathMismatch, EOError
from eo_curves.hurwitz.free_energy import free_energy_H, D_T
from eo_curves.memo import MemoTable

T = RationalFunction1.gen('t')
# t = 1/(1-z)
Z_TO_T = (0, 1, -1, 1)
T_TO_Z = (1, -1, 1, 0)
FACTORS = linear_factors('t', 0, 1)

_recursive = MemoTable('s_hurwitz')


def d_log_x(f: RationalFunction1) -> RationalFunction1:
    """x d/dx = -d/dw, written in t"""
    return D_T * f.differentiate()


class SHurwitz(object):
    """S^H_m; value is None when it contains log t"""

    def __init__(self, m: int, derivative: RationalFunction1, value: RationalFunction1 = None):
        self.m = m
        self.derivative = derivative
        self.value = value

    def x_derivative(self) -> RationalFunction1:
        """x dS/dx in t"""
        return D_T * self.derivative

    def in_z(self) -> RationalFunction1:
        if self.value is None:
            raise EOError('S^H_%d contains a logarithm' % self.m)

        return self.value.substitute_mobius(*Z_TO_T, var='z')

    def __eq__(self, other):
        return isinstance(other, SHurwitz) and self.m == other.m and self.derivative == other.derivative and self.value == other.value


def s_seed(m: int) -> SHurwitz:
    if m == 0:
        value = (1 - 1 / T ** 2) * QQ(1, 2)
        return SHurwitz(0, value.differentiate(), value)
    if m == 1:
        # S_1 = 1/2 ((1-t)/t + log t)
        return SHurwitz(1, (T - 1) / (2 * T ** 2))

    raise EOError('S^H_%d is not a seed' % m)


def geometries(m: int):
    return [(g, m + 1 - 2 * g) for g in range(m // 2 + 1) if m + 1 - 2 * g >= 1]


def s_coeff_H_assembled(m: int) -> SHurwitz:
    if m < 2:
        return s_seed(m)

    value = RationalFunction1.constant(0, 't')
    for g, n in geometries(m):
        value = value + free_energy_H(g, n).diagonal() / math.factorial(n)

    return SHurwitz(m, value.differentiate(), value)


def _heat_rhs(m, coefficient):
    """1/2 [D^2 S_m + sum_{a+b=m+1, a,b>=1} D S_a D S_b - D S_m], D = x d/dx"""
    dm = coefficient(m).x_derivative()
    acc = d_log_x(dm) - dm
    for a in range(1, m + 1):
        acc = acc + coefficient(a).x_derivative() * coefficient(m + 1 - a).x_derivative()

    return acc * QQ(1, 2)


def _recurse(m):
    if m < 2:
        return s_seed(m)

    k = m - 1
    # (k + t(t-1) d/dt) S_{k+1} = rhs, i.e. d/dt [((t-1)/t)^k S_{k+1}] = (t-1)^{k-1} t^{-k-1} rhs
    rhs = _heat_rhs(k, s_coeff_H_recursive)
    integrand = (T - 1) ** (k - 1) / T ** (k + 1) * rhs
    value = (T / (T - 1)) ** k * integrate_no_log(integrand, 1, FACTORS)

    return SHurwitz(m, value.differentiate(), value)


def s_coeff_H_recursive(m: int) -> SHurwitz:
    return _recursive.get(m, lambda: _recurse(m))


def s_coeff_H(m: int) -> SHurwitz:
    """
    S^H_m for m >= 2 by assembly from free energies, checked against the integral recursion
    :param m: index
    :return: the assembled coefficient
    """

    assembled = s_coeff_H_assembled(m)
    if m < 2:
        return assembled

    recursive = s_coeff_H_recursive(m)
    if assembled.value != recursive.value:
        raise PathMismatch('S^H_%d: assembled %s, recursive %s' % (m, assembled.value, recursive.value))

    value = assembled.value
    if not value.is_polynomial() or value.num.degree() != 3 * m - 3:
        raise EOError('S^H_%d is not a polynomial of degree %d: %s' % (m, 3 * m - 3, value))
    if value.evaluate(1) != 0:
        raise EOError('S^H_%d does not vanish at t = 1' % m)

    logging.getLogger(__name__).debug('S^H_%d agrees on both paths' % m)

    return assembled


def s0_identity_residual() -> RationalFunction1:
    """S_0 - D S_0 + 1/2 (D S_0)^2"""
    s0 = s_seed(0)
    d = s0.x_derivative()
    return s0.value - d + d * d * QQ(1, 2)


def heat_residual_H(m_max: int, source: str = 'assembled', overrides=None):
    """
    For m = 0..m_max: (d/dw - m) S_{m+1} + 1/2 [S_m,ww + sum_{a+b=m+1} S_a,w S_b,w + S_m,w], d/dw = -x d/dx
    :param source: 'assembled' or 'recursive'
    :param overrides: optional {m: SHurwitz}
    :return: list of RationalFunction1 in t
    """

    overrides = overrides or {}
    build = s_coeff_H_assembled if source == 'assembled' else s_coeff_H_recursive

    def coefficient(m):
        return overrides.get(m) or build(m)

    residuals = []
    for m in range(m_max + 1):
        nxt = coefficient(m + 1)
        r = -nxt.x_derivative()
        if m:
            r = r - nxt.value * m
        dm = coefficient(m).x_derivative()
        r = r + (d_log_x(dm) - dm) * QQ(1, 2)
        for a in range(m + 2):
            r = r + coefficient(a).x_derivative() * coefficient(m + 1 - a).x_derivative() * QQ(1, 2)
        residuals.append(r)

    return residuals


def lambert_inversion_check(order: int):
    """
    z(x) = sum mu^{mu-1}/mu! x^mu against x = z e^{-z}, and t(x) = 1 + sum mu^mu/mu! x^mu against 1/(1-z)
    """

    z = TruncatedSeries([0] + [QQ(m ** (m - 1), math.factorial(m)) for m in range(1, order + 1)], order, 'x')
    t = TruncatedSeries([1] + [QQ(m ** m, math.factorial(m)) for m in range(1, order + 1)], order, 'x')
    x = TruncatedSeries([0, 1], order, 'x')
    one = TruncatedSeries([1], order, 'x')

    curve = z * (-z).exp() - x
    coordinate = t - (one - z).inverse()

    return {'passed': curve.is_zero() and coordinate.is_zero(),
            'curve_residual': curve, 'coordinate_residual': coordinate, 'z': z}
