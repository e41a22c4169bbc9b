"""
The WKB hierarchy: operators D_r in d/dy built from sum_r hbar^r D_r = exp(sum_n hbar^n d_n),
d_n = sum_{r=1}^{n+1} S_{n+1-r}^{(r)} / r! (d/dy)^r, applied on-shell to a curve symbol A(x, y).
"""

import itertools
import logging
import math

from sympy import QQ

from eo_curves import catalan
from eo_curves.algebra import RationalFunction1
from eo_curves.hurwitz import scoeff
from eo_curves.errors import InsufficientData, DivisionBySingularSymbol, EOError
from eo_curves.memo import MemoTable

Z = RationalFunction1.gen('z')


class YPolyOperator(object):
    """sum_r c_r(z) (d/dy)^r with coefficients commuting with d/dy"""

    def __init__(self, coeffs=None):
        self.coeffs = {r: c for r, c in (coeffs or {}).items() if c}

    @classmethod
    def identity(cls):
        return cls({0: RationalFunction1.constant(1, 'z')})

    def __add__(self, other):
        coeffs = dict(self.coeffs)
        for r, c in other.coeffs.items():
            coeffs[r] = coeffs[r] + c if r in coeffs else c
        return YPolyOperator(coeffs)

    def __mul__(self, other):
        if not isinstance(other, YPolyOperator):
            return YPolyOperator({r: c * other for r, c in self.coeffs.items()})

        coeffs = {}
        for (r1, c1), (r2, c2) in itertools.product(self.coeffs.items(), other.coeffs.items()):
            r = r1 + r2
            coeffs[r] = coeffs[r] + c1 * c2 if r in coeffs else c1 * c2
        return YPolyOperator(coeffs)

    def __eq__(self, other):
        return isinstance(other, YPolyOperator) and self.coeffs == other.coeffs

    def __getitem__(self, r):
        return self.coeffs.get(r, RationalFunction1.constant(0, 'z'))

    def max_order(self) -> int:
        return max(self.coeffs, default=0)

    def to_json(self):
        return {str(r): c.to_json() for r, c in sorted(self.coeffs.items())}


class CurveSymbol(object):
    """A(x, y) through its on-shell y-derivative tower"""

    # hbar d/dx always stands to the right of x
    ordering = 'x-left'

    def __init__(self, model: str, tower, dx_to_dz: RationalFunction1, seeds):
        self.model = model
        self._tower = tower
        self.dx_to_dz = dx_to_dz
        self.seeds = seeds

    def on_shell(self, r: int) -> RationalFunction1:
        return self._tower(r)

    def derive(self, f: RationalFunction1) -> RationalFunction1:
        """The x-derivation of the model, written in z"""
        return self.dx_to_dz * f.differentiate()


def _catalan_tower(r):
    # A = y^2 + x y + 1 on y = -z, x = z + 1/z
    if r == 1:
        return 1 / Z - Z
    if r == 2:
        return RationalFunction1.constant(2, 'z')
    return RationalFunction1.constant(0, 'z')


def _hurwitz_tower(r):
    # A = -y + x e^y on y = z, x = z e^{-z}; x e^y = z on-shell
    if r == 0:
        return RationalFunction1.constant(0, 'z')
    if r == 1:
        return Z - 1
    return Z


CURVES = {
    'catalan': CurveSymbol('catalan', _catalan_tower, Z ** 2 / (Z ** 2 - 1),
                           [-Z, -Z ** 3 / (Z ** 2 - 1) ** 2]),
    # derivation x d/dx, so that y = S_0' = z
    'hurwitz': CurveSymbol('hurwitz', _hurwitz_tower, Z / (1 - Z),
                           [Z, Z ** 2 / (2 * (1 - Z) ** 2)]),
}


def curve(model: str) -> CurveSymbol:
    if model not in CURVES:
        raise EOError('unknown model %r, expected one of %s' % (model, sorted(CURVES)))

    return CURVES[model]


def _derivative_table(curve_symbol, s_derivs, top):
    """table[m][r] = r-th x-derivative of S_m, r >= 1"""
    table = []
    for m in range(top + 1):
        column = {1: s_derivs[m]}
        for r in range(2, top + 2 - m):
            column[r] = curve_symbol.derive(column[r - 1])
        table.append(column)

    return table


def small_d_operators(order: int, s_derivs, curve_symbol: CurveSymbol):
    """[d_1, ..., d_order]"""
    if len(s_derivs) < order + 1:
        raise InsufficientData('need S_0..S_%d, got %d coefficients' % (order, len(s_derivs)))

    table = _derivative_table(curve_symbol, s_derivs, order)
    result = []
    for n in range(1, order + 1):
        result.append(YPolyOperator({r: table[n + 1 - r][r] * QQ(1, math.factorial(r)) for r in range(1, n + 2)}))

    return result


def build_d_operators(order: int, s_derivs, curve_symbol: CurveSymbol):
    """
    D_0..D_order from the exponential, via r D_r = sum_k k d_k D_{r-k}
    :param s_derivs: dS_m/dx in z for m = 0..order
    :return: list of YPolyOperator
    """

    small = small_d_operators(order, s_derivs, curve_symbol)
    result = [YPolyOperator.identity()]
    for r in range(1, order + 1):
        acc = YPolyOperator()
        for k in range(1, r + 1):
            acc = acc + small[k - 1] * result[r - k] * k
        result.append(acc * QQ(1, r))

    return result


def expand_by_compositions(order: int, s_derivs, curve_symbol: CurveSymbol):
    """D_r = sum_k 1/k! sum over compositions (n_1..n_k) of r of d_{n_1} ... d_{n_k}"""
    small = small_d_operators(order, s_derivs, curve_symbol)
    result = [YPolyOperator.identity()]
    for r in range(1, order + 1):
        acc = YPolyOperator()
        for k in range(1, r + 1):
            for cuts in itertools.combinations(range(1, r), k - 1):
                parts = [b - a for a, b in zip((0,) + cuts, cuts + (r,))]
                product = YPolyOperator.identity()
                for p in parts:
                    product = product * small[p - 1]
                acc = acc + product * QQ(1, math.factorial(k))
        result.append(acc)

    return result


def apply_to_symbol(op: YPolyOperator, curve_symbol: CurveSymbol) -> RationalFunction1:
    acc = RationalFunction1.constant(0, 'z')
    for r, c in op.coeffs.items():
        acc = acc + c * curve_symbol.on_shell(r)

    return acc


def model_s_derivatives(model: str, order: int, source: str = 'assembled'):
    """dS_m/dx in z for m = 0..order, from the Catalan or Hurwitz module"""
    if model == 'catalan':
        return [catalan.s_coeff_C(m, source).x_derivative().substitute_mobius(*catalan.T_TO_Z, var='z')
                for m in range(order + 1)]

    build = scoeff.s_coeff_H_assembled if source == 'assembled' else scoeff.s_coeff_H_recursive
    return [build(m).x_derivative().substitute_mobius(*scoeff.Z_TO_T, var='z') for m in range(order + 1)]


def recover_corrections(model: str, order: int, s_derivs=None):
    """
    A_1..A_order from D_n A + D_{n-1} A_1 + ... + A_n = 0. The corrections are functions of x alone,
    which the d_n annihilate, so A_n = -D_n A.
    :param s_derivs: optional dS_m/dx data replacing the model's
    :return: list of RationalFunction1 in z
    """

    curve_symbol = curve(model)
    s_derivs = s_derivs if s_derivs is not None else model_s_derivatives(model, order)
    operators = build_d_operators(order, s_derivs, curve_symbol)

    corrections = [-apply_to_symbol(op, curve_symbol) for op in operators[1:]]
    logging.getLogger(__name__).debug('%s corrections through hbar^%d: %s' % (model, order, [bool(a) for a in corrections]))

    return corrections


_hierarchy = MemoTable('s_prime_hierarchy')


def _solve_s_prime(model, n):
    curve_symbol = curve(model)
    if n < 2:
        return curve_symbol.seeds[n]

    known = [s_prime_from_hierarchy(model, m) for m in range(n)] + [RationalFunction1.constant(0, 'z')]
    lower = apply_to_symbol(build_d_operators(n, known, curve_symbol)[n], curve_symbol)
    slope = curve_symbol.on_shell(1)
    if not slope:
        raise DivisionBySingularSymbol('d/dy A vanishes on the %s curve' % model)

    return -lower / slope


def s_prime_from_hierarchy(model: str, n: int) -> RationalFunction1:
    """dS_n/dx in z from D_n A = 0, using only the hierarchy and the two seeds"""
    if n < 0:
        raise InsufficientData('dS_%d/dx: the hierarchy starts at n = 0' % n)

    return _hierarchy.get((model, n), lambda: _solve_s_prime(model, n))


def triple_path_check(model: str, n_max: int):
    """
    dS_n/dx three ways: the hierarchy, the assembled free energies and the S-recursion
    :return: list of {'n', 'passed', 'hierarchy_vs_assembled', 'hierarchy_vs_recursive'}
    """

    assembled = model_s_derivatives(model, n_max, 'assembled')
    recursive = model_s_derivatives(model, n_max, 'recursive')
    rows = []
    for n in range(2, n_max + 1):
        h = s_prime_from_hierarchy(model, n)
        rows.append({'n': n,
                     'passed': h == assembled[n] == recursive[n],
                     'hierarchy_vs_assembled': h == assembled[n],
                     'hierarchy_vs_recursive': h == recursive[n]})

    return rows
