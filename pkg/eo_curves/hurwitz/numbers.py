"""Single Hurwitz numbers from the cut-and-join equation."""

import itertools
import logging
import math
from collections import Counter

from sympy import QQ

from eo_curves.errors import InvalidProfile
from eo_curves.memo import MemoTable

numbers = MemoTable('hurwitz', validator=lambda k, v: QQ.convert(v) >= 0)


def branch_points(g: int, mu) -> int:
    """r = 2g - 2 + n + |mu| simple ramification points"""
    return 2 * g - 2 + len(mu) + sum(mu)


def _key(g, n, mu):
    mu = tuple(int(m) for m in mu)
    if n < 1 or len(mu) != n or g < 0:
        raise InvalidProfile('need g >= 0 and n >= 1 entries, got g=%d, n=%d, mu=%s' % (g, n, mu))
    if any(m < 1 for m in mu):
        raise InvalidProfile('pole orders must be positive, got %s' % (mu,))
    if branch_points(g, mu) < 0:
        raise InvalidProfile('r < 0 for g=%d, mu=%s' % (g, mu))

    return g, tuple(sorted(mu, reverse=True))


def _sorted(*parts):
    return tuple(sorted(parts, reverse=True))


def _splittings(parts):
    values = sorted(Counter(parts).items(), reverse=True)
    for choice in itertools.product(*[range(m + 1) for _, m in values]):
        weight = 1
        left, right = [], []
        for (v, m), k in zip(values, choice):
            weight *= math.comb(m, k)
            left += [v] * k
            right += [v] * (m - k)
        yield tuple(left), tuple(right), weight


def _number(g, mu):
    if g < 0 or not mu:
        return QQ(0)

    r = branch_points(g, mu)
    if r < 0:
        return QQ(0)
    if r == 0:
        return QQ(1) if (g, mu) == (0, (1,)) else QQ(0)

    return numbers.get((g, mu), lambda: _cut_and_join(g, mu, r))


def _cut_and_join(g, mu, r):
    total = QQ(0)
    values = sorted(Counter(mu).items())

    # join: one unordered pair of poles merges
    for (a, ma), (b, mb) in itertools.combinations(values, 2):
        rest = list(mu)
        rest.remove(a)
        rest.remove(b)
        total += ma * mb * (a + b) * _number(g, _sorted(a + b, *rest))
    for a, ma in values:
        if ma >= 2:
            rest = list(mu)
            rest.remove(a)
            rest.remove(a)
            total += math.comb(ma, 2) * 2 * a * _number(g, _sorted(2 * a, *rest))

    # cut: one pole splits, either staying connected or disconnecting
    for v, m in values:
        rest = list(mu)
        rest.remove(v)
        acc = QQ(0)
        for alpha in range(1, v):
            beta = v - alpha
            inner = _number(g - 1, _sorted(alpha, beta, *rest))
            for left, right, weight in _splittings(rest):
                for g1 in range(g + 1):
                    h1 = _number(g1, _sorted(alpha, *left))
                    if h1:
                        inner += weight * h1 * _number(g - g1, _sorted(beta, *right))
            acc += alpha * beta * inner
        total += m * acc * QQ(1, 2)

    logging.getLogger(__name__).debug('H_{%d}%s at r=%d' % (g, mu, r))

    return total / r


def hurwitz_number(g: int, n: int, mu):
    """
    H_{g,n}(mu), automorphism-weighted count of connected covers with labeled poles
    :param g: genus of the cover
    :param n: number of poles
    :param mu: pole orders
    :return: non-negative QQ element
    """

    g, mu = _key(g, n, mu)
    return _number(g, mu)


def automorphisms(mu) -> int:
    return math.prod(math.factorial(m) for m in Counter(mu).values())


def labeled_hurwitz(g: int, mu):
    """h_{g,mu} = r! / |Aut(mu)| H_{g,n}(mu) for unlabeled poles"""
    g, key = _key(g, len(mu), mu)
    return QQ(math.factorial(branch_points(g, key)), automorphisms(key)) * _number(g, key)
