"""Exact rationals: sympy's QQ domain plus the string codec used in reports and caches."""

from sympy import QQ, ZZ

ZERO = QQ(0)
ONE = QQ(1)


def qq(value, denominator=1):
    """
    Converts ints, strings "p/q" and QQ elements to a QQ element
    :param value: value to convert
    :param denominator: optional denominator when value is an integer
    :return: reduced QQ element
    """

    if isinstance(value, str):
        return decode_rational(value)

    if denominator != 1:
        return QQ(int(value), int(denominator))

    return QQ.convert(value)


def numerator(c) -> int:
    return int(QQ.numer(QQ.convert(c)))


def denominator(c) -> int:
    return int(QQ.denom(QQ.convert(c)))


def is_integral(c) -> bool:
    return denominator(c) == 1


def encode_rational(c) -> str:
    """
    Encodes a rational as "p/q", or "p" when q = 1
    :param c: QQ element or int
    :return: string form
    """

    p, q = numerator(c), denominator(c)
    return str(p) if q == 1 else '%d/%d' % (p, q)


def decode_rational(s: str):
    """
    Decodes "p/q" or "p"
    :param s: string form
    :return: QQ element
    """

    s = s.strip()
    if '/' in s:
        p, q = s.split('/', 1)
        if int(q) == 0:
            raise ValueError('zero denominator in %r' % s)
        return QQ(int(p), int(q))

    return QQ(int(s))


def to_float(c) -> float:
    return numerator(c) / denominator(c)


def lcm_of_denominators(values) -> int:
    result = 1
    for v in values:
        result = int(ZZ.lcm(ZZ(result), ZZ(denominator(v))))

    return result
