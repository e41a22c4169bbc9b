"""
Generalized Catalan numbers, their Laplace transforms F^C_{g,n} in the t-coordinate
z = (t+1)/(t-1), and the WKB coefficients S_m of the Catalan quantum curve.
"""

import itertools
import logging
import math
from collections import Counter

import numpy as np
from sympy import QQ, bernoulli
from sympy.polys.fields import field

from eo_curves.algebra import RationalFunction1, SparseLaurent, TruncatedSeries, integrate_no_log, linear_factors, to_float
from eo_curves.errors import InvalidProfile, AsymmetricResult, EOError
from eo_curves.memo import MemoTable

T = RationalFunction1.gen('t')
# z = (t+1)/(t-1) as a Moebius map t -> z, and its inverse t = (z+1)/(z-1)
T_TO_Z = (1, 1, 1, -1)
FACTORS = linear_factors('t', 0, 1, -1)

# d/dx = KAPPA d/dt
KAPPA = -(T ** 2 - 1) ** 2 / (8 * T)
X_OF_T = 2 * (T ** 2 + 1) / (T ** 2 - 1)
Z_OF_T = (T + 1) / (T - 1)

DEFAULT_RANGE = [(0, 3), (1, 1), (0, 4), (1, 2), (0, 5), (1, 3), (2, 1)]
EXTENDED_RANGE = DEFAULT_RANGE + [(0, 6), (1, 4), (2, 2)]

counts = MemoTable('catalan', validator=lambda k, v: isinstance(v, int) and v >= 0)
free_energies = MemoTable('free_energy_C')
_s_recursive = MemoTable('s_catalan')


def _key(g, n, mu):
    mu = tuple(int(m) for m in mu)
    if n < 1 or len(mu) != n:
        raise InvalidProfile('need n >= 1 entries, got n=%d, mu=%s' % (n, mu))
    if any(m < 0 for m in mu):
        raise InvalidProfile('negative entry in %s' % (mu,))

    return g, tuple(sorted(mu, reverse=True))


def _sub_multisets(parts):
    """Yields (I, J, multiplicity) over labeled splittings of the multiset parts"""
    values = sorted(Counter(parts).items(), reverse=True)
    for choice in itertools.product(*[range(m + 1) for _, m in values]):
        weight = 1
        left, right = [], []
        for (v, m), k in zip(values, choice):
            weight *= math.comb(m, k)
            left += [v] * k
            right += [v] * (m - k)
        yield tuple(left), tuple(right), weight


def _count(g, mu):
    if g < 0 or sum(mu) % 2:
        return 0
    if mu == (0,):
        return 1 if g == 0 else 0
    if 0 in mu:
        return 0

    return counts.get((g, mu), lambda: _recurse(g, mu))


def _sorted(*parts):
    return tuple(sorted(parts, reverse=True))


def _recurse(g, mu):
    first, rest = mu[0], mu[1:]
    total = 0

    for v, m in Counter(rest).items():
        others = list(rest)
        others.remove(v)
        total += m * v * _count(g, _sorted(first + v - 2, *others))

    for alpha in range(first - 1):
        beta = first - 2 - alpha
        total += _count(g - 1, _sorted(alpha, beta, *rest))
        for left, right, weight in _sub_multisets(rest):
            for g1 in range(g + 1):
                a = _count(g1, _sorted(alpha, *left))
                if a:
                    total += weight * a * _count(g - g1, _sorted(beta, *right))

    return total


def catalan_count(g: int, n: int, mu) -> int:
    """
    C_{g,n}(mu) by the edge-contraction recursion, memoized on sorted profiles
    :param g: genus
    :param n: number of vertices
    :param mu: vertex degrees
    :return: non-negative integer
    """

    g, mu = _key(g, n, mu)
    return _count(g, mu)


def dessin_number(g: int, n: int, mu):
    g, key = _key(g, n, mu)
    if 0 in key:
        raise InvalidProfile('dessin numbers need positive degrees, got %s' % (key,))

    return QQ(_count(g, key), math.prod(key))


def curve_inversion_check(n_terms: int, catalan_numbers=None):
    """
    Checks that z(x) = sum_{m<=N} C_m x^{-2m-1} inverts x = z + 1/z.
    With u = 1/x and z = u w(u) the curve becomes u^2 w^2 - w + 1 = 0; the residual is
    exact through u^{2N}, and a first nonzero coefficient at u^k means z + 1/z - x
    fails at order x^{-(k-1)}.
    """

    if catalan_numbers is None:
        catalan_numbers = [catalan_count(0, 1, (2 * m,)) for m in range(n_terms + 1)]

    order = 2 * n_terms
    w_coeffs = [QQ(0)] * (order + 1)
    for m, c in enumerate(catalan_numbers[:n_terms + 1]):
        w_coeffs[2 * m] = QQ(c)
    w = TruncatedSeries(w_coeffs, order, 'u')
    one = TruncatedSeries([1], order, 'u')

    residual = (w * w).shift(2) - w + one
    k = residual.first_nonzero()

    return {'passed': k is None, 'failing_order': None if k is None else k - 1, 'residual': residual}


class FreeEnergyC(object):
    """F^C_{g,n} as a Laurent polynomial in t_1..t_n"""

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


def _stable(g, n):
    return 2 * g - 2 + n > 0


def _first_derivative(g, gens):
    """d/du F_{g,k}(u, v, ...) inside the field, u = gens[0]"""
    return free_energy_C(g, len(gens)).poly.diff(0).to_field(gens)


def _compute_free_energy(g, n):
    logging.getLogger(__name__).debug('Computing F^C_{%d,%d}' % (g, n))

    names = ','.join('t%d' % (i + 1) for i in range(n))
    _, *ts = field(names, QQ)
    t1, others = ts[0], ts[1:]

    if (g, n) == (0, 3):
        # base case: the recursion does not reach the unstable (0,2) terms
        t2, t3 = others
        seed = -(t1 + 1) * (t2 + 1) * (t3 + 1) * (1 + 1 / (t1 * t2 * t3)) / 16
        return FreeEnergyC(g, n, SparseLaurent.from_field(seed, n))

    c3 = (t1 ** 2 - 1) ** 3 / t1 ** 2

    lines_12 = 0
    if n > 1:
        for j, tj in enumerate(others):
            rest = [t for k, t in enumerate(others) if k != j]
            d1 = _first_derivative(g, [t1] + rest)
            dj = _first_derivative(g, [tj] + rest)
            lines_12 += tj / (t1 ** 2 - tj ** 2) * (c3 * d1 - (tj ** 2 - 1) ** 3 / tj ** 2 * dj)
            lines_12 += (t1 ** 2 - 1) ** 2 / t1 ** 2 * d1

    lines_34 = 0
    if g >= 1:
        if (g - 1, n + 1) == (0, 2):
            lines_34 += 1 / (4 * t1 ** 2)
        else:
            lower = free_energy_C(g - 1, n + 1).poly.diff(0).diff(1)
            lines_34 += lower.to_field([t1, t1] + others)

    indices = list(range(len(others)))
    for size in range(len(indices) + 1):
        for left in itertools.combinations(indices, size):
            right = [k for k in indices if k not in left]
            for g1 in range(g + 1):
                g2 = g - g1
                if _stable(g1, len(left) + 1) and _stable(g2, len(right) + 1):
                    lines_34 += _first_derivative(g1, [t1] + [others[k] for k in left]) * \
                        _first_derivative(g2, [t1] + [others[k] for k in right])

    rhs = lines_12 * QQ(-1, 16) + c3 * lines_34 * QQ(-1, 32)
    derivative = SparseLaurent.from_field(rhs, n)
    primitive = derivative.integrate(0)
    poly = primitive - primitive.specialize(0, -1)

    if not poly.is_symmetric():
        raise AsymmetricResult('F^C_{%d,%d} is not symmetric' % (g, n))

    return FreeEnergyC(g, n, poly)


def free_energy_C(g: int, n: int) -> FreeEnergyC:
    """
    F^C_{g,n} from the differential recursion, integrated in t_1 from -1
    :param g: genus
    :param n: number of points, 2g - 2 + n > 0
    :return: free energy
    """

    if not _stable(g, n):
        raise InvalidProfile('F^C_{%d,%d} is not stable' % (g, n))

    return free_energies.get((g, n), lambda: _compute_free_energy(g, n))


def _x_of(x):
    z = (x - np.sqrt(x * x - 4.0)) / 2.0
    return (z + 1.0) / (z - 1.0)


def laplace_probe(g: int, n: int, xs, max_total: int = 60):
    """
    Floating value of F^C_{g,n} at t(x_i) and the truncated sum of D_{g,n}(mu) prod x_i^{-mu_i}
    :return: (free energy value, truncated Laplace sum)
    """

    value = free_energy_C(g, n).evaluate_float([_x_of(x) for x in xs])

    total = 0.0

    def walk(prefix, budget):
        nonlocal total
        if len(prefix) == n:
            if sum(prefix) % 2 == 0:
                d = dessin_number(g, n, prefix)
                if d:
                    total += to_float(d) * float(np.prod([x ** -m for x, m in zip(xs, prefix)]))
            return
        for m in range(1, budget + 1):
            walk(prefix + [m], budget - m)

    walk([], max_total)

    return value, total


def euler_characteristic_at_one(g: int, n: int):
    """F^C_{g,n}(1, ..., 1), the s = 1 value of its principal specialization"""
    return free_energy_C(g, n).poly.evaluate([1] * n)


class SCatalan(object):
    """S_m: the function itself for m >= 2, and always its t-derivative"""

    def __init__(self, m: int, derivative: RationalFunction1, value: RationalFunction1 = None):
        self.m = m
        self.derivative = derivative
        self.value = value

    def in_z(self) -> RationalFunction1:
        if self.value is None:
            raise EOError('S_%d contains a logarithm; only its derivative is stored' % self.m)

        return self.value.substitute_mobius(*T_TO_Z, var='z')

    def x_derivative(self) -> RationalFunction1:
        return KAPPA * self.derivative

    def __eq__(self, other):
        return isinstance(other, SCatalan) and self.m == other.m and self.derivative == other.derivative and self.value == other.value


def s_seed(m: int) -> SCatalan:
    if m == 0:
        # dS_0/dx = -z
        return SCatalan(0, -Z_OF_T / KAPPA)
    if m == 1:
        # S_1 = -1/2 log(1 - z^2)
        return SCatalan(1, (T + 1) / (2 * T * (T - 1)))

    raise EOError('S_%d is not a seed' % m)


def geometries(m: int):
    """(g, n) with 2g - 2 + n = m - 1"""
    return [(g, m + 1 - 2 * g) for g in range(m // 2 + 1) if m + 1 - 2 * g >= 1]


def s_coeff_C_assembled(m: int) -> SCatalan:
    """S_m = sum_{2g-2+n=m-1} F^C_{g,n}(t, ..., t) / n!"""
    if m < 2:
        return s_seed(m)

    value = RationalFunction1.constant(0, 't')
    for g, n in geometries(m):
        value = value + free_energy_C(g, n).diagonal() / math.factorial(n)

    return SCatalan(m, value.differentiate(), value)


def _recursive(m):
    if m < 2:
        return s_seed(m)

    prev = s_coeff_C_recursive(m - 1)
    second = prev.derivative.differentiate()
    products = RationalFunction1.constant(0, 't')
    for a in range(1, m):
        products = products + s_coeff_C_recursive(a).derivative * s_coeff_C_recursive(m - a).derivative

    derivative = -(T ** 2 - 1) ** 3 / (32 * T ** 2) * (second + products) \
        - (T ** 2 - 1) ** 2 * (3 * T ** 2 + 1) / (32 * T ** 3) * prev.derivative
    value = integrate_no_log(derivative, -1, FACTORS)

    return SCatalan(m, derivative, value)


def s_coeff_C_recursive(m: int) -> SCatalan:
    """
    S_m from the principal specialization of the Schroedinger equation, integrated from t = -1.
    For m >= 3 the S_1 S_{m-1} products fold into the (2t^2+t+1) coefficient of the usual form.
    """

    return _s_recursive.get(m, lambda: _recursive(m))


def s_coeff_C(m: int, source: str = 'assembled') -> SCatalan:
    if source == 'assembled':
        return s_coeff_C_assembled(m)
    if source == 'recursive':
        return s_coeff_C_recursive(m)

    raise EOError('unknown source %r' % source)


def s_polynomial(s_m: SCatalan) -> RationalFunction1:
    """
    The polynomial P with S_m(t) = P(s), s = (t+1)^2/(4t)
    :param s_m: an S-coefficient with m >= 2
    :return: P as a polynomial in s
    """

    f = s_m.value
    if f.den.degree() > 0 and f.den != (T ** f.den.degree()).num:
        raise EOError('S_%d has poles away from t = 0' % s_m.m)

    shift = f.den.degree()
    remainder = {k - shift: QQ.convert(c) for k, c in enumerate(reversed(f.num.all_coeffs())) if c}
    result = {}
    while remainder:
        e = max(remainder)
        if e < 0:
            raise EOError('S_%d is not a polynomial in s' % s_m.m)
        c = remainder[e] * 4 ** e
        result[e] = c
        # s^e = 4^{-e} sum_i binom(2e, i) t^{i-e}
        for i in range(2 * e + 1):
            k = i - e
            remainder[k] = remainder.get(k, QQ(0)) - c * QQ(math.comb(2 * e, i), 4 ** e)
            if not remainder[k]:
                del remainder[k]

    top = max(result, default=0)
    return RationalFunction1.from_coeffs([result.get(k, 0) for k in range(top + 1)], var='s')


def schrodinger_residual_C(m_max: int, source: str = 'assembled', overrides=None):
    """
    Residuals of S_{k-1}'' + sum_{a+b=k} S_a' S_b' + x S_k' (order hbar^k, k = 0..m_max+1),
    with ' = d/dx written in t; order 0 is S_0'^2 + x S_0' + 1
    :param overrides: optional {m: SCatalan} replacing computed coefficients
    :return: list of RationalFunction1, all zero when the equation holds
    """

    overrides = overrides or {}
    s = [overrides.get(m) or s_coeff_C(m, source) for m in range(m_max + 2)]
    first = [sm.x_derivative() for sm in s]
    second = [KAPPA * f.differentiate() for f in first]

    residuals = [first[0] * first[0] + X_OF_T * first[0] + 1]
    for k in range(1, m_max + 2):
        r = second[k - 1] + X_OF_T * first[k]
        for a in range(k + 1):
            r = r + first[a] * first[k - a]
        residuals.append(r)

    logging.getLogger(__name__).debug('Schroedinger residuals through hbar^%d computed' % (m_max + 1))

    return residuals


def euler_characteristic_oracle(g: int, n: int):
    """
    chi(M_{g,n}) by Harer-Zagier: chi(M_{g,1}) = -B_{2g}/(2g), chi(M_{0,3}) = 1,
    chi(M_{g,n+1}) = (2 - 2g - n) chi(M_{g,n})
    """

    if not _stable(g, n):
        raise InvalidProfile('M_{%d,%d} is not stable' % (g, n))

    if g == 0:
        chi, start = QQ(1), 3
    else:
        chi, start = -QQ.from_sympy(bernoulli(2 * g)) / (2 * g), 1
    for k in range(start, n):
        chi *= 2 - 2 * g - k

    return chi


def euler_characteristic_check(g: int, n: int):
    value = euler_characteristic_at_one(g, n)
    expected = (-1) ** n * euler_characteristic_oracle(g, n)

    return {'passed': value == expected, 'value': value, 'expected': expected}
