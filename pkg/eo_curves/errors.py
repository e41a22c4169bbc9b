class EOError(Exception):
    """Base class for all errors raised by eo_curves"""


class InvalidProfile(EOError):
    """The (g, n, mu) key is outside the domain of the count"""


class NonzeroResidue(EOError):
    """Integration would produce a logarithm"""


class UnfactoredDenominator(EOError):
    """Denominator has a factor outside the declared linear factors"""


class SingularMatrix(EOError):
    pass


class DegenerateMap(EOError):
    """Moebius map with ad - bc = 0"""


class SeriesRangeError(EOError, IndexError):
    """Coefficient requested beyond the truncation order"""


class AsymmetricResult(EOError):
    pass


class OverdeterminedMismatch(EOError):
    """Solved coefficients disagree with a verification point"""


class PathMismatch(EOError):
    """Two constructions of the same quantity differ"""


class InsufficientData(EOError):
    pass


class DivisionBySingularSymbol(EOError):
    pass


class SizeMismatch(EOError):
    pass


class CorruptCache(EOError):
    pass


class ConfigError(EOError):
    """Bad command line or environment"""
