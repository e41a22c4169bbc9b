"""
Symmetric functions in power-sum variables: partitions, characters of S_n, Schur functions,
the cut-and-join operator, the Hurwitz generating function H(s, p) and its tau-function expansion.
"""

import itertools
import logging
import math
from collections import Counter

from sympy import QQ
from sympy.utilities.iterables import partitions as _sympy_partitions

from eo_curves.algebra import TruncatedSeries, encode_rational
from eo_curves.algebra.rational import numerator, denominator
from eo_curves.errors import SizeMismatch, EOError
from eo_curves.hurwitz import hurwitz_number, automorphisms, zhou_series, QHbarExpr
from eo_curves.memo import MemoTable


class Partition(tuple):
    """Weakly decreasing positive parts; () is the empty partition"""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise EOError('negative part in %s' % (parts,))

        return super(Partition, cls).__new__(cls, sorted((p for p in parts if p), reverse=True))

    @classmethod
    def from_multiplicities(cls, multiplicities: dict):
        return cls(itertools.chain.from_iterable([k] * m for k, m in multiplicities.items()))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def conjugate(self) -> 'Partition':
        return Partition(sum(1 for p in self if p > j) for j in range(self[0] if self else 0))

    def contents(self):
        return [j - i for i, row in enumerate(self) for j in range(row)]

    def z(self) -> int:
        """z_mu = prod_i m_i! i^m_i"""
        return math.prod(math.factorial(m) * k ** m for k, m in self.multiplicities().items())

    def __add__(self, other):
        return Partition(tuple(self) + tuple(other))

    def __repr__(self):
        return 'Partition(%s)' % list(self)


def partitions_of(n: int):
    """All partitions of n, largest first"""
    if n == 0:
        return [Partition()]

    return sorted((Partition.from_multiplicities(p) for p in _sympy_partitions(n)), reverse=True)


def partitions_up_to(n: int):
    return [mu for k in range(n + 1) for mu in partitions_of(k)]


class PPolynomial(object):
    """
    Finite sum of c_lambda p_lambda. Coefficients are QQ elements or, for the doubled ring
    of the Cauchy identity, PPolynomials in a second set of power sums.
    """

    def __init__(self, terms=None, unit=None):
        self.unit = QQ(1) if unit is None else unit
        self.terms = {}
        for lam, c in (terms or {}).items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            c = self.terms[lam] + c if lam in self.terms else c
            if c:
                self.terms[lam] = c
            else:
                self.terms.pop(lam, None)

    @classmethod
    def power_sum(cls, *parts, coefficient=None, unit=None):
        unit = QQ(1) if unit is None else unit
        return cls({Partition(parts): unit if coefficient is None else coefficient}, unit)

    def one(self) -> 'PPolynomial':
        return PPolynomial({Partition(): self.unit}, self.unit)

    def zero(self) -> 'PPolynomial':
        return PPolynomial({}, self.unit)

    def __add__(self, other):
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms[lam] + c if lam in terms else c
        return PPolynomial(terms, self.unit)

    def __neg__(self):
        return PPolynomial({lam: -c for lam, c in self.terms.items()}, self.unit)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PPolynomial):
            return PPolynomial({lam: c * other for lam, c in self.terms.items()}, self.unit)

        terms = {}
        for (l1, c1), (l2, c2) in itertools.product(self.terms.items(), other.terms.items()):
            lam = l1 + l2
            terms[lam] = terms[lam] + c1 * c2 if lam in terms else c1 * c2
        return PPolynomial(terms, self.unit)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, PPolynomial) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return 'PPolynomial(%s)' % self.terms

    def truncate(self, max_weight: int) -> 'PPolynomial':
        return PPolynomial({lam: c for lam, c in self.terms.items() if lam.size <= max_weight}, self.unit)

    def evaluate(self, assignment):
        """sum c_lambda prod_i assignment(lambda_i)"""
        total = None
        for lam, c in self.terms.items():
            value = c * math.prod(QQ.convert(assignment(k)) for k in lam)
            total = value if total is None else total + value

        return QQ(0) if total is None else total

    def map_coefficients(self, f, unit=None) -> 'PPolynomial':
        return PPolynomial({lam: f(c) for lam, c in self.terms.items()}, self.unit if unit is None else unit)

    def to_json(self):
        return [[list(lam), c.to_json() if isinstance(c, PPolynomial) else encode_rational(c)]
                for lam, c in sorted(self.terms.items())]


def power_sum_exp(x: PPolynomial, max_weight: int) -> PPolynomial:
    """exp(x) for x of weight >= 1, truncated at max_weight"""
    term = x.one()
    total = x.one()
    for k in range(1, max_weight + 1):
        term = (term * x).truncate(max_weight) * QQ(1, k)
        total = total + term

    return total


# characters

_characters = MemoTable('characters')


def _beta_set(mu):
    n = len(mu)
    return tuple(part + n - 1 - i for i, part in enumerate(mu))


def _character(beta, lam):
    if not lam:
        return 1

    k, rest = lam[0], lam[1:]
    return _characters.get((beta, lam), lambda: _strip_rim_hooks(beta, k, rest))


def _strip_rim_hooks(beta, k, rest):
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in occupied:
            continue
        sign = (-1) ** sum(1 for c in beta if target < c < b)
        moved = tuple(sorted((occupied - {b}) | {target}, reverse=True))
        total += sign * _character(moved, rest)

    return total


def dimension(mu) -> int:
    """Hook-length formula"""
    mu = Partition(mu)
    conjugate = mu.conjugate()
    hooks = math.prod(mu[i] - j + conjugate[j] - i - 1 for i in range(len(mu)) for j in range(mu[i]))
    return math.factorial(mu.size) // hooks


def character(mu, lam) -> int:
    """
    chi_mu(lambda) by Murnaghan-Nakayama on beta-sets
    :param mu: irreducible representation
    :param lam: cycle type
    :return: integer character value
    """

    mu, lam = Partition(mu), Partition(lam)
    if mu.size != lam.size:
        raise SizeMismatch('|mu| = %d but |lambda| = %d' % (mu.size, lam.size))

    return _character(_beta_set(mu), tuple(lam))


def dim_and_character(mu, lam=None):
    """(dim mu, chi_mu(lambda)); the character is None when lambda is omitted"""
    return dimension(mu), None if lam is None else character(mu, lam)


def schur_in_p(mu) -> PPolynomial:
    """s_mu = sum_{|lambda| = |mu|} chi_mu(lambda) / z_lambda p_lambda"""
    mu = Partition(mu)
    return PPolynomial({lam: QQ(character(mu, lam), lam.z()) for lam in partitions_of(mu.size)})


def shifted_power_sum(r: int, mu):
    """p_r[mu] = sum_i (mu_i - i + 1/2)^r - (-i + 1/2)^r"""
    half = QQ(1, 2)
    return sum(((part - i + half) ** r - (-i + half) ** r for i, part in enumerate(Partition(mu), 1)), QQ(0))


def orthogonality_check(max_size: int):
    """Row orthogonality, dim = chi(1^n), sum dim^2 = n! and p_2[mu] = 2 sum of contents"""
    failures = []
    for n in range(max_size + 1):
        shapes = partitions_of(n)
        for mu, nu in itertools.combinations_with_replacement(shapes, 2):
            inner = sum((QQ(character(mu, lam) * character(nu, lam), lam.z()) for lam in shapes), QQ(0))
            if inner != (1 if mu == nu else 0):
                failures.append(('orthogonality', mu, nu))
        for mu in shapes:
            if dimension(mu) != character(mu, Partition([1] * n)):
                failures.append(('dimension', mu))
            if shifted_power_sum(2, mu) != 2 * sum(mu.contents()):
                failures.append(('contents', mu))
        if sum(dimension(mu) ** 2 for mu in shapes) != math.factorial(n):
            failures.append(('burnside', n))

    return {'passed': not failures, 'failures': failures}


# cut-and-join

def _cutjoin_monomial(lam: Partition):
    m = lam.multiplicities()
    result = {}

    def put(parts, c):
        key = Partition(parts)
        result[key] = result.get(key, QQ(0)) + c

    # 1/2 (i+j) p_i p_j d/dp_{i+j}
    for k, mk in m.items():
        rest = list(lam)
        rest.remove(k)
        for i in range(1, k):
            put(rest + [i, k - i], QQ(k * mk, 2))

    # 1/2 ij p_{i+j} d^2/dp_i dp_j
    for (i, mi), (j, mj) in itertools.combinations(m.items(), 2):
        rest = list(lam)
        rest.remove(i)
        rest.remove(j)
        put(rest + [i + j], QQ(i * j * mi * mj))
    for i, mi in m.items():
        if mi >= 2:
            rest = list(lam)
            rest.remove(i)
            rest.remove(i)
            put(rest + [2 * i], QQ(i * i * mi * (mi - 1), 2))

    return result


def cutjoin_apply(f: PPolynomial) -> PPolynomial:
    """The weight-preserving cut-and-join operator"""
    result = f.zero()
    for lam, c in f.terms.items():
        result = result + PPolynomial({key: c * v for key, v in _cutjoin_monomial(lam).items()}, f.unit)

    return result


def eigenvalue_check(max_size: int):
    """cut-and-join s_mu = 1/2 p_2[mu] s_mu"""
    failures = []
    for mu in partitions_up_to(max_size):
        s_mu = schur_in_p(mu)
        if cutjoin_apply(s_mu) != s_mu * (shifted_power_sum(2, mu) * QQ(1, 2)):
            failures.append(mu)

    return {'passed': not failures, 'failures': failures}


# the Hurwitz generating function and its tau expansion

def _series(coeffs, r_max, d_max):
    return TruncatedSeries(coeffs, r_max, 's', zero=PPolynomial(), normalize=lambda f: f.truncate(d_max))


def h_series(d_max: int, r_max: int) -> TruncatedSeries:
    """
    H(s, p) = sum_{g,n} 1/n! sum_mu H_{g,n}(mu) p_mu s^r, r = 2g - 2 + n + |mu|
    :return: series in s whose coefficients are PPolynomials of weight <= d_max
    """

    coeffs = [PPolynomial() for _ in range(r_max + 1)]
    for mu in partitions_up_to(d_max):
        if not mu:
            continue
        for r in range(r_max + 1):
            doubled = r + 2 - mu.length - mu.size
            if doubled < 0 or doubled % 2:
                continue
            h = hurwitz_number(doubled // 2, mu.length, mu)
            if h:
                coeffs[r] = coeffs[r] + PPolynomial({mu: h * QQ(1, automorphisms(mu))})

    return _series(coeffs, r_max, d_max)


def exp_h_series(d_max: int, r_max: int) -> TruncatedSeries:
    """exp(H) = exp(p_1) exp(H - p_1); only p_1 sits at s^0"""
    h = h_series(d_max, r_max)
    p1 = PPolynomial.power_sum(1)
    rest = h - _series([p1], r_max, d_max)

    return rest.exp() * power_sum_exp(p1, d_max)


def schur_side(d_max: int, r_max: int) -> TruncatedSeries:
    """sum_mu dim mu / |mu|! e^{1/2 p_2[mu] s} s_mu(p), expanded in s"""
    coeffs = [PPolynomial() for _ in range(r_max + 1)]
    for mu in partitions_up_to(d_max):
        weight = QQ(dimension(mu), math.factorial(mu.size))
        eigenvalue = shifted_power_sum(2, mu) * QQ(1, 2)
        s_mu = schur_in_p(mu)
        for r in range(r_max + 1):
            coeffs[r] = coeffs[r] + s_mu * (weight * eigenvalue ** r * QQ(1, math.factorial(r)))

    return _series(coeffs, r_max, d_max)


def tau_expansion_residual(d_max: int, r_max: int) -> TruncatedSeries:
    """exp(H) minus its Schur expansion, as a series in s of PPolynomials"""
    residual = exp_h_series(d_max, r_max) - schur_side(d_max, r_max)
    logging.getLogger(__name__).debug('tau residual to weight %d, s^%d: %d nonzero slots'
                                      % (d_max, r_max, sum(1 for c in residual.coefficients() if c)))

    return residual


def heat_residual(d_max: int, r_max: int) -> TruncatedSeries:
    """d/ds exp(H) - cut-and-join exp(H), through s^(r_max - 1)"""
    tau = exp_h_series(d_max, r_max)
    joined = [cutjoin_apply(c) for c in tau.coefficients()[:r_max]]

    return tau.derivative() - TruncatedSeries(joined, r_max - 1, 's', zero=PPolynomial())


# the Cauchy identity

def _doubled(f: PPolynomial, outer: bool) -> PPolynomial:
    """f(p) with unit coefficients in p^y, or f(p^y) placed in the coefficient slot"""
    one = PPolynomial.power_sum()
    if outer:
        return f.map_coefficients(lambda c: one * c, unit=one)

    return PPolynomial({Partition(): f}, one)


def cauchy_residual(d_max: int) -> PPolynomial:
    """
    sum_mu s_mu(p) s_mu(p^y) - exp(sum_m p_m p^y_m / m), through total p-weight d_max
    :return: element of the doubled ring, zero when the identity holds
    """

    lhs = PPolynomial(unit=PPolynomial.power_sum())
    for mu in partitions_up_to(d_max):
        s_mu = schur_in_p(mu)
        lhs = lhs + _doubled(s_mu, True) * _doubled(s_mu, False)

    exponent = PPolynomial(unit=PPolynomial.power_sum())
    for m in range(1, d_max + 1):
        exponent = exponent + _doubled(PPolynomial.power_sum(m), True) * _doubled(PPolynomial.power_sum(m, coefficient=QQ(1, m)), False)

    return lhs - power_sum_exp(exponent, d_max)


def cauchy_restriction_residual(d_max: int, dimension_of=dimension):
    """
    The Cauchy identity at p^y_1 = 1, p^y_k = 0 for k >= 2: exp(p_1) = sum dim mu / |mu|! s_mu(p)
    :param dimension_of: replacement for the hook-length dimension
    :return: (residual with s_mu evaluated at the restriction, residual with the dimensions)
    """
    p1 = PPolynomial.power_sum(1)
    expected = power_sum_exp(p1, d_max)

    lhs = PPolynomial()
    for mu in partitions_up_to(d_max):
        s_mu = schur_in_p(mu)
        lhs = lhs + s_mu * s_mu.evaluate(lambda k: 1 if k == 1 else 0)

    dims = PPolynomial()
    for mu in partitions_up_to(d_max):
        dims = dims + schur_in_p(mu) * QQ(dimension_of(mu), math.factorial(mu.size))

    return lhs - expected, dims - expected


# principal specialization p_j = (x / hbar)^j

def principal_value(mu):
    """c_mu with s_mu(p)|_{p_j = y^j} = c_mu y^|mu|"""
    return sum((QQ(character(mu, lam), lam.z()) for lam in partitions_of(Partition(mu).size)), QQ(0))


def principal_collapse_check(max_size: int):
    """
    Principal specialization of the Schur expansion at s = hbar, x = e^{-w}: only one-row shapes survive
    and the total equals sum_m q^{m(m-1)/2} (x/hbar)^m / m!
    """

    wrong = []
    total = QHbarExpr()
    for mu in partitions_up_to(max_size):
        c = principal_value(mu)
        if c != (1 if mu.length <= 1 else 0):
            wrong.append(mu)
        if not c:
            continue
        eigenvalue = shifted_power_sum(2, mu) * QQ(1, 2)
        if denominator(eigenvalue) != 1:
            raise EOError('non-integral content sum for %s' % (mu,))
        total = total + QHbarExpr.monomial(numerator(eigenvalue), -mu.size, mu.size, c * QQ(dimension(mu), math.factorial(mu.size)))

    residual = total - zhou_series(max_size)

    return {'passed': not wrong and not residual, 'surviving_shapes_wrong': wrong, 'residual': residual}
