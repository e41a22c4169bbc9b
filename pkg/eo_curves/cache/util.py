from eo_curves.algebra import encode_rational, decode_rational
from eo_curves.algebra.rational import is_integral


def encode_key(key):
    """
    Encodes a memo key (g, mu) as "g,n,mu_1,...,mu_n"
    :param key: (genus, sorted profile)
    :return: string key
    """

    g, mu = key
    return ','.join(str(v) for v in (g, len(mu)) + tuple(mu))


def decode_key(s: str):
    fields = [int(v) for v in s.split(',')]
    if len(fields) < 2 or len(fields) != 2 + fields[1]:
        raise ValueError('malformed key %r' % s)

    return fields[0], tuple(sorted(fields[2:], reverse=True))


def default_encoder(obj):
    """
    Encodes memo entries to json serializable types
    :param obj: dict of memo keys to integers or rationals
    :return: encoded object
    """

    if isinstance(obj, dict):
        return {encode_key(k) if isinstance(k, tuple) else k: default_encoder(v) for k, v in obj.items()}

    if isinstance(obj, (list, str, float)) or obj is None:
        return obj

    return encode_rational(obj)


def count_decoder(s: str):
    """Integral strings become ints so that the Catalan validator can reject anything else"""
    value = decode_rational(s)
    return int(value) if is_integral(value) else value
