"""F^H_{g,n} in the xi-basis, with coefficients extracted from Hurwitz numbers by exact solves."""

import itertools
import logging
import math

import mpmath
import numpy as np
from sympy import QQ
from sympy.polys.fields import field
from sympy.utilities.iterables import multiset_permutations

from eo_curves.algebra import RationalFunction1, SparseLaurent, solve_exact, RowSelector, encode_rational, to_float
from eo_curves.algebra.rational import numerator, denominator
from eo_curves.errors import SingularMatrix, OverdeterminedMismatch, InvalidProfile, InsufficientData
from eo_curves.hurwitz.numbers import hurwitz_number
from eo_curves.memo import MemoTable

T = RationalFunction1.gen('t')
# x d/dx = D_T d/dt
D_T = T ** 2 * (T - 1)

_xi = MemoTable('xi')
_tables = MemoTable('elsv')
free_energies = MemoTable('free_energy_H')


class XiPolynomial(object):
    def __init__(self, k: int, poly: RationalFunction1):
        self.k = k
        self.poly = poly

    def degree(self) -> int:
        return self.poly.num.degree()


def xi_polynomial(k: int) -> XiPolynomial:
    """xi_0 = t - 1, xi_{k+1} = t^2 (t-1) d/dt xi_k"""
    if k == 0:
        return XiPolynomial(0, T - 1)

    return _xi.get(k, lambda: XiPolynomial(k, D_T * xi_polynomial(k - 1).poly.differentiate()))


def _k_vectors(n, top):
    """Sorted (descending) length-n vectors of non-negative integers with sum <= top"""
    result = []
    for total in range(top + 1):
        for combo in itertools.combinations_with_replacement(range(total, -1, -1), n):
            if sum(combo) == total:
                result.append(tuple(sorted(combo, reverse=True)))

    return sorted(set(result), key=lambda k: (sum(k), k))


def _monomial_symmetric(k, mu):
    acc = QQ(0)
    for perm in multiset_permutations(list(k)):
        acc += math.prod(QQ(m) ** e for m, e in zip(mu, perm))

    return acc


def _normalized_number(g, mu):
    """H_{g,n}(mu) prod mu_i! / mu_i^mu_i"""
    return hurwitz_number(g, len(mu), mu) * math.prod(QQ(math.factorial(m), m ** m) for m in mu)


class ELSVTable(object):
    """Coefficients c_k of F^H_{g,n} = sum_k c_k prod xi_{k_i}(t_i), keyed by sorted k"""

    def __init__(self, g: int, n: int, coeffs: dict, solve_points=None, check_points=None):
        self.g = g
        self.n = n
        self.coeffs = coeffs
        self.solve_points = solve_points or []
        self.check_points = check_points or []

    def __getitem__(self, k):
        return self.coeffs.get(tuple(sorted(k, reverse=True)), QQ(0))

    def predict(self, mu):
        """The Hurwitz number H_{g,n}(mu) implied by the table"""
        value = sum((c * _monomial_symmetric(k, mu) for k, c in self.coeffs.items()), QQ(0))
        return value * math.prod(QQ(m ** m, math.factorial(m)) for m in mu)

    def perturbed(self, k, value) -> 'ELSVTable':
        coeffs = dict(self.coeffs)
        coeffs[tuple(sorted(k, reverse=True))] = QQ.convert(value)
        return ELSVTable(self.g, self.n, coeffs)

    def to_json(self):
        return {'g': self.g, 'n': self.n, 'coeffs': [[list(k), encode_rational(c)] for k, c in sorted(self.coeffs.items())]}


def _solve_table(g, n):
    top = 3 * g - 3 + n
    unknowns = _k_vectors(n, top)
    grid = sorted(itertools.combinations_with_replacement(range(top + 1, 0, -1), n), key=lambda mu: (sum(mu), mu))

    selector = RowSelector(len(unknowns))
    rows, rhs, used = [], [], []
    for mu in grid:
        row = [_monomial_symmetric(k, mu) for k in unknowns]
        if selector.offer(row):
            rows.append(row)
            rhs.append(_normalized_number(g, mu))
            used.append(mu)
        if selector.rank == len(unknowns):
            break

    if selector.rank < len(unknowns):
        raise SingularMatrix('grid of size %d does not determine %d coefficients for (%d,%d)' % (len(grid), len(unknowns), g, n))

    solution = solve_exact(rows, rhs)
    table = ELSVTable(g, n, {k: c for k, c in zip(unknowns, solution) if c}, solve_points=used)

    unused = [mu for mu in grid if mu not in used][:3]
    beyond = sorted((mu for mu in itertools.combinations_with_replacement(range(top + 4, 0, -1), n) if mu[0] > top + 1),
                    key=lambda mu: (sum(mu), mu))[:3]
    for mu in unused + beyond:
        expected = hurwitz_number(g, n, mu)
        if table.predict(mu) != expected:
            raise OverdeterminedMismatch('(%d,%d) at mu=%s: table gives %s, cut-and-join gives %s'
                                         % (g, n, mu, encode_rational(table.predict(mu)), encode_rational(expected)))
    table.check_points = unused + beyond

    logging.getLogger(__name__).debug('ELSV table (%d,%d): %d coefficients from %d points, %d checks'
                                      % (g, n, len(unknowns), len(used), len(table.check_points)))

    return table


def elsv_coefficients(g: int, n: int) -> ELSVTable:
    if 2 * g - 2 + n <= 0:
        raise InvalidProfile('(%d,%d) is not stable' % (g, n))

    return _tables.get((g, n), lambda: _solve_table(g, n))


class FreeEnergyH(object):
    """F^H_{g,n} as a polynomial in t_1..t_n"""

    def __init__(self, g: int, n: int, poly: SparseLaurent):
        self.g = g
        self.n = n
        self.poly = poly

    def diagonal(self) -> RationalFunction1:
        return self.poly.diagonal('t')

    def evaluate_float(self, ts) -> float:
        return self.poly.evaluate_float(ts)

    def to_json(self):
        return {'g': self.g, 'n': self.n, 'poly': self.poly.to_json()}


def _embedded_xi(k, i, n):
    coeffs = reversed(xi_polynomial(k).poly.num.all_coeffs())
    terms = {}
    for e, c in enumerate(coeffs):
        exps = [0] * n
        exps[i] = e
        terms[tuple(exps)] = c
    return SparseLaurent(n, terms)


def assemble_free_energy(table: ELSVTable) -> FreeEnergyH:
    n = table.n
    poly = SparseLaurent.zero(n)
    for k, c in table.coeffs.items():
        for perm in multiset_permutations(list(k)):
            term = SparseLaurent.constant(n, c)
            for i, ki in enumerate(perm):
                term = term * _embedded_xi(ki, i, n)
            poly = poly + term

    return FreeEnergyH(table.g, n, poly)


def free_energy_H(g: int, n: int) -> FreeEnergyH:
    return free_energies.get((g, n), lambda: assemble_free_energy(elsv_coefficients(g, n)))


# diagonal value of d^2/du1 du2 F^H_{0,2}: minus a sixth of the Schwarzian of x(t)
def _f02_diagonal(t):
    return 1 / (4 * t ** 2) + 1 / (6 * t ** 3) + 1 / (12 * t ** 4)


def fh_recursion_residual(g: int, n: int, overrides=None) -> SparseLaurent:
    """
    LHS - RHS of the polynomial recursion for F^H_{g,n}, with the t_i - t_j denominators cleared
    :param overrides: optional {(g, n): FreeEnergyH} replacing computed free energies
    :return: numerator of the residual; zero when the recursion holds
    """

    overrides = overrides or {}

    def energy(gg, nn):
        return overrides.get((gg, nn)) or free_energy_H(gg, nn)

    if n >= 2 and (g, n - 1) == (0, 2):
        raise InsufficientData('the (0,3) recursion needs d/dt F^H_{0,2}, which is not rational in t; use fh03_recursion_residual')

    names = ','.join('t%d' % (i + 1) for i in range(n))
    _, *ts = field(names, QQ)

    def first(gg, gens):
        return energy(gg, len(gens)).poly.diff(0).to_field(gens)

    f = energy(g, n).poly
    lhs = f.to_field(ts) * (2 * g - 2 + n)
    for i, ti in enumerate(ts):
        lhs += ti * (ti - 1) * f.diff(i).to_field(ts)

    rhs = 0
    for i, j in itertools.permutations(range(n), 2):
        ti, tj = ts[i], ts[j]
        rest = [ts[k] for k in range(n) if k not in (i, j)]
        di = first(g, [ti] + rest)
        dj = first(g, [tj] + rest)
        rhs += ti * tj / (ti - tj) * (ti ** 2 * (ti - 1) ** 2 * di - tj ** 2 * (tj - 1) ** 2 * dj) * QQ(1, 2)
        rhs -= ti ** 3 * (ti - 1) * di

    for i, ti in enumerate(ts):
        rest = [ts[k] for k in range(n) if k != i]
        weight = (ti ** 2 * (ti - 1)) ** 2 * QQ(1, 2)
        inner = 0
        if g >= 1:
            if (g - 1, n + 1) == (0, 2):
                inner += _f02_diagonal(ti)
            else:
                inner += energy(g - 1, n + 1).poly.diff(0).diff(1).to_field([ti, ti] + rest)
        for size in range(len(rest) + 1):
            for left in itertools.combinations(range(len(rest)), size):
                right = [k for k in range(len(rest)) if k not in left]
                for g1 in range(g + 1):
                    g2 = g - g1
                    if 2 * g1 - 1 + len(left) > 0 and 2 * g2 - 1 + len(right) > 0:
                        inner += first(g1, [ti] + [rest[k] for k in left]) * first(g2, [ti] + [rest[k] for k in right])
        rhs += weight * inner

    residual = lhs - rhs
    return SparseLaurent(n, {e: c for e, c in residual.numer.terms()})


def _mpf(c):
    return mpmath.mpf(int(numerator(c))) / int(denominator(c))


def _evaluate_mp(poly: SparseLaurent, point):
    acc = mpmath.mpf(0)
    for e, c in poly.terms.items():
        acc += _mpf(c) * mpmath.fprod(v ** k for v, k in zip(point, e))

    return acc


def fh03_recursion_residual(ws, overrides=None) -> float:
    """
    The (0,3) recursion, where d/dt F^H_{0,2} is not rational in t. Checks the Laplace transform of cut-and-join
    at x_i = e^{-w_i} with mpmath, D = x d/dx, Y_ij = D_i F_{0,2}(x_i, x_j), {i, j, k} = {1, 2, 3}:
      (1 + sum_i D_i) F_{0,3} = sum_{i<j} (x_j Y_ik - x_i Y_jk) / (x_i - x_j) + sum_i (z_i D_i F_{0,3} + Y_ij Y_ik)
    :param ws: three distinct reals > 1
    :param overrides: optional {(0, 3): FreeEnergyH}
    :return: |LHS - RHS| / max(|LHS|, |RHS|)
    """

    overrides = overrides or {}
    f = (overrides.get((0, 3)) or free_energy_H(0, 3)).poly

    if len(ws) != 3 or len(set(ws)) != 3 or min(ws) <= 1:
        raise InvalidProfile('need three distinct w > 1, got %s' % (ws,))

    with mpmath.workdps(40):
        xs = [mpmath.exp(-mpmath.mpf(w)) for w in ws]
        zs = [-mpmath.re(mpmath.lambertw(-x)) for x in xs]
        ts = [1 / (1 - z) for z in zs]

        def y(i, j):
            # F_{0,2} = log((z_i - z_j)/(x_i - x_j)) - z_i - z_j and D z = t - 1
            return (ts[i] - 1) / (zs[i] - zs[j]) - xs[i] / (xs[i] - xs[j]) - (ts[i] - 1)

        def d(i):
            return ts[i] ** 2 * (ts[i] - 1) * _evaluate_mp(f.diff(i), ts)

        lhs = _evaluate_mp(f, ts) + sum(d(i) for i in range(3))

        rhs = mpmath.mpf(0)
        for i, j in itertools.combinations(range(3), 2):
            k = 3 - i - j
            rhs += (xs[j] * y(i, k) - xs[i] * y(j, k)) / (xs[i] - xs[j])
        for i in range(3):
            j, k = [a for a in range(3) if a != i]
            rhs += zs[i] * d(i) + y(i, j) * y(i, k)

        scale = max(abs(lhs), abs(rhs)) or 1
        return float(abs(lhs - rhs) / scale)


def _t_of(x):
    z = -float(mpmath.lambertw(-x).real)
    return 1.0 / (1.0 - z)


def laplace_probe(g: int, n: int, ws, max_total: int = 40):
    """
    Floating F^H_{g,n} at x_i = e^{-w_i} and the truncated sum of H_{g,n}(mu) prod x_i^{mu_i}
    :return: (free energy value, truncated sum)
    """

    xs = [float(np.exp(-w)) for w in ws]
    value = free_energy_H(g, n).evaluate_float([_t_of(x) for x in xs])

    total = 0.0
    for mu in itertools.product(range(1, max_total + 1), repeat=n):
        if sum(mu) <= max_total:
            h = hurwitz_number(g, n, mu)
            if h:
                total += to_float(h) * float(np.prod([x ** m for x, m in zip(xs, mu)]))

    return value, total


def xi_conversion_check(k_max: int):
    """xi_{k+1} against z/(1-z) d/dz xi_k, both written in z = (t-1)/t"""
    z = RationalFunction1.gen('z')
    failures = []
    for k in range(k_max):
        in_z = xi_polynomial(k).poly.substitute_mobius(0, 1, -1, 1, var='z')
        expected = xi_polynomial(k + 1).poly.substitute_mobius(0, 1, -1, 1, var='z')
        if z / (1 - z) * in_z.differentiate() != expected:
            failures.append(k)

    return {'passed': not failures, 'failures': failures}


def one_point_check(g: int, w: float = 3.0, max_total: int = 40, tolerance: float = 1e-8):
    """F^H_{g,1} against the generating function of H_{g,1}(mu) at x = e^{-w}"""
    value, total = laplace_probe(g, 1, [w], max_total)
    error = abs(value - total) / max(abs(total), 1e-300)

    return {'passed': error <= tolerance, 'value': value, 'truncated_sum': total, 'relative_error': error}
