from eo_curves.algebra.rational import QQ, qq, encode_rational, decode_rational, to_float
from eo_curves.algebra.ratfunc import RationalFunction1, differentiate, integrate_no_log, substitute_mobius, linear_factors
from eo_curves.algebra.laurent import SparseLaurent
from eo_curves.algebra.series import TruncatedSeries
from eo_curves.algebra.linalg import solve_exact, RowSelector
