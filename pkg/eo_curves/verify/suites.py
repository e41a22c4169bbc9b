"""
The verification suites. Each suite is a static list of checks; new checks are appended, never reordered,
so that `all` stays stable across versions.
"""

import math

from sympy import QQ, catalan as catalan_number

from eo_curves import catalan, schur, wkb
from eo_curves.algebra import RationalFunction1
from eo_curves.hurwitz import free_energy, scoeff, zhou, numbers
from eo_curves.verify.phase import Check

Z = RationalFunction1.gen('z')

# S^C_m in z, m = 2, 3, 4
CATALAN_S_TABLE = {
    2: Z ** 4 * (9 + Z ** 2) / (12 * (1 - Z ** 2) ** 3),
    3: 5 * Z ** 6 * (1 + Z ** 2) / (2 * (Z ** 2 - 1) ** 6),
    4: Z ** 8 * (-4725 - 12879 * Z ** 2 - 4524 * Z ** 4 + 36 * Z ** 6 - 9 * Z ** 8 + Z ** 10) / (360 * (Z ** 2 - 1) ** 9),
}

# x dS^H_2/dx in z
HURWITZ_DS2 = Z ** 2 * (4 + 11 * Z) / (24 * (1 - Z) ** 5)

SUITES = ('catalan', 'hurwitz', 'wkb', 'schur')


def _nonzero(residuals):
    return [i for i, r in enumerate(residuals) if r]


def _result(failures):
    return not failures, {'failing': [str(f) for f in failures]}


def _geometries(max_order):
    """Stable (g, n) with 2g - 2 + n < max_order"""
    return [(g, n) for g in range(max_order // 2 + 1) for n in range(1, max_order + 2 - 2 * g)
            if 0 < 2 * g - 2 + n < max_order]


# catalan

def _catalan_base_sequence():
    failures = [m for m in range(13) if catalan.catalan_count(0, 1, (2 * m,)) != int(catalan_number(m))]
    return _result(failures)


def _catalan_inversion():
    report = catalan.curve_inversion_check(12)
    return report['passed'], {'failing_order': report['failing_order']}


def _catalan_properties(max_order):
    failures = []
    for g, n in _geometries(max_order):
        poly = catalan.free_energy_C(g, n).poly
        bound = 6 * g - 6 + 3 * n
        if not poly.is_symmetric():
            failures.append(('symmetry', g, n))
        if poly.specialize(0, -1):
            failures.append(('vanishing', g, n))
        if poly.total_degree() > bound or poly.min_exponent() < -bound:
            failures.append(('degree', g, n))
    return _result(failures)


def _catalan_euler(max_order):
    failures = [(g, n) for g, n in [(1, 1), (0, 3), (1, 2), (2, 1)]
                if 2 * g - 2 + n < max_order and not catalan.euler_characteristic_check(g, n)['passed']]
    return _result(failures)


def _catalan_s_table(source):
    def check():
        failures = [m for m, expected in CATALAN_S_TABLE.items() if catalan.s_coeff_C(m, source).in_z() != expected]
        return _result(failures)
    return check


def _catalan_schrodinger(max_order, source):
    def check():
        failing = _nonzero(catalan.schrodinger_residual_C(max_order - 1, source))
        return not failing, {'failing_orders': failing}
    return check


def _catalan_laplace(tolerance):
    failures = []
    for g, n in [(0, 3), (1, 1)]:
        value, total = catalan.laplace_probe(g, n, [10.0, 11.0, 12.0][:n])
        if abs(value - total) > tolerance * abs(total):
            failures.append((g, n, value, total))
    return _result(failures)


def catalan_suite(max_order: int = 4, tolerance: float = 1e-8):
    return [
        Check('catalan.base_sequence', 'C_{0,1}(2m) are the Catalan numbers', _catalan_base_sequence),
        Check('catalan.curve_inversion', 'z(x) inverts x = z + 1/z', _catalan_inversion),
        Check('catalan.free_energy_properties', 'symmetry, vanishing at t=-1, degree 6g-6+3n',
              lambda: _catalan_properties(max_order)),
        Check('catalan.euler_characteristic', 'F^C_{g,n}(1..1) = (-1)^n chi(M_{g,n})', lambda: _catalan_euler(max_order)),
        Check('catalan.s_table.assembled', 'S^C_2..S^C_4 closed forms, assembled', _catalan_s_table('assembled')),
        Check('catalan.s_table.recursive', 'S^C_2..S^C_4 closed forms, recursive', _catalan_s_table('recursive')),
        Check('catalan.schrodinger.assembled', 'Schroedinger equation for Z^C', _catalan_schrodinger(max_order, 'assembled')),
        Check('catalan.schrodinger.recursive', 'S-recursion solves the Schroedinger equation',
              _catalan_schrodinger(max_order, 'recursive')),
        Check('catalan.laplace_probe', 'Laplace transform of D_{g,n} at x = 10, 11, 12', lambda: _catalan_laplace(tolerance)),
    ]


# hurwitz

def _hurwitz_unstable():
    failures = [d for d in range(1, 9) if numbers.hurwitz_number(0, 1, (d,)) != QQ(d ** (d - 1), d * math.factorial(d))]
    if numbers.hurwitz_number(0, 2, (1, 1)) != QQ(1, 2):
        failures.append((1, 1))
    return _result(failures)


# x = e^{-w} on the principal Lambert branch
RECURSION_WS = [(3.0, 3.1, 3.2), (1.5, 2.0, 4.0)]


def _hurwitz_recursion(g, n, tolerance):
    def check():
        if (g, n) == (0, 3):
            errors = [free_energy.fh03_recursion_residual(ws) for ws in RECURSION_WS]
            return max(errors) <= tolerance, {'relative_errors': errors}
        residual = free_energy.fh_recursion_residual(g, n)
        return not residual, {'nonzero_terms': len(residual.terms)}
    return check


def _hurwitz_heat(max_order, source):
    def check():
        failing = _nonzero(scoeff.heat_residual_H(max_order - 1, source))
        if scoeff.s0_identity_residual():
            failing.append('s0')
        return not failing, {'failing_orders': failing}
    return check


def _hurwitz_s_table(max_order):
    for m in range(2, max_order + 1):
        scoeff.s_coeff_H(m)
    first = scoeff.s_coeff_H(2).x_derivative().substitute_mobius(*scoeff.Z_TO_T, var='z')
    return first == HURWITZ_DS2, {'dS2': first.to_json()}


def _hurwitz_zhou():
    report = zhou.zhou_series_checks(20)
    return report['passed'], report['failures']


def _hurwitz_commutator():
    report = zhou.pq_commutator_check(10, 3)
    return report['passed'], {'failing': [list(f) for f in report['failures']]}


def _hurwitz_lambert():
    report = scoeff.lambert_inversion_check(12)
    return report['passed'], {'curve': report['curve_residual'].first_nonzero(),
                              'coordinate': report['coordinate_residual'].first_nonzero()}


def _hurwitz_xi():
    report = free_energy.xi_conversion_check(6)
    return report['passed'], report['failures']


def _hurwitz_laplace(tolerance):
    failures = []
    for g, n in [(0, 3), (1, 1)]:
        value, total = free_energy.laplace_probe(g, n, [3.0, 3.1, 3.2][:n])
        if abs(value - total) > tolerance * abs(total):
            failures.append((g, n, value, total))
    for g in (1, 2):
        if not free_energy.one_point_check(g, tolerance=tolerance)['passed']:
            failures.append(('one_point', g))
    return _result(failures)


def hurwitz_suite(max_order: int = 4, tolerance: float = 1e-8):
    checks = [Check('hurwitz.unstable', 'H_{0,1}(d) = d^{d-2}/d!, H_{0,2}(1,1) = 1/2', _hurwitz_unstable)]
    for g, n in _geometries(max_order):
        checks.append(Check('hurwitz.recursion.%d.%d' % (g, n), 'polynomial recursion for F^H_{%d,%d}' % (g, n),
                            _hurwitz_recursion(g, n, tolerance)))
    checks += [
        Check('hurwitz.heat.assembled', 'heat equation for Z^H', _hurwitz_heat(max_order, 'assembled')),
        Check('hurwitz.heat.recursive', 'integral recursion solves the heat equation', _hurwitz_heat(max_order, 'recursive')),
        Check('hurwitz.s_table', 'S^H_m agree on both paths; x dS^H_2/dx closed form', lambda: _hurwitz_s_table(max_order)),
        Check('hurwitz.zhou', 'differential-difference equation and heat bracket, m <= 20', _hurwitz_zhou),
        Check('hurwitz.commutator', '[P,Q] = P on e^{-mw} hbar^k', _hurwitz_commutator),
        Check('hurwitz.lambert', 'z(x) and t(x) invert x = z e^{-z}', _hurwitz_lambert),
        Check('hurwitz.xi_conversion', 'xi_{k+1} = x d/dx xi_k in z', _hurwitz_xi),
        Check('hurwitz.laplace_probe', 'Laplace transform of H_{g,n} at w = 3, 3.1, 3.2', lambda: _hurwitz_laplace(tolerance)),
    ]
    return checks


# wkb

def _wkb_corrections(model, max_order):
    def check():
        corrections = wkb.recover_corrections(model, max_order)
        failing = [k + 1 for k in _nonzero(corrections)]
        return not failing, {'nonzero_corrections': failing}
    return check


def _wkb_triple_path(model, max_order):
    def check():
        rows = wkb.triple_path_check(model, max_order)
        failing = [row['n'] for row in rows if not row['passed']]
        return not failing, {'failing': failing}
    return check


def _wkb_expansion(model, max_order):
    def check():
        curve = wkb.curve(model)
        s_derivs = wkb.model_s_derivatives(model, max_order)
        by_exp = wkb.build_d_operators(max_order, s_derivs, curve)
        by_compositions = wkb.expand_by_compositions(max_order, s_derivs, curve)
        failing = [r for r in range(max_order + 1) if by_exp[r] != by_compositions[r]]
        return not failing, {'failing': failing}
    return check


def wkb_suite(max_order: int = 4, tolerance: float = 1e-8):
    checks = []
    for model in ('catalan', 'hurwitz'):
        checks += [
            Check('wkb.%s.corrections' % model, 'A_k = 0 for the %s quantum curve' % model, _wkb_corrections(model, max_order)),
            Check('wkb.%s.triple_path' % model, 'dS_n/dx from hierarchy, free energies and recursion', _wkb_triple_path(model, max_order)),
            Check('wkb.%s.expansion' % model, 'exp(sum d_n) two ways', _wkb_expansion(model, max_order)),
        ]
    return checks


# schur

def _schur_report(report):
    return report['passed'], {'failing': [str(f) for f in report['failures']]}


def _schur_tau(weight, order):
    tau = schur.tau_expansion_residual(weight, order)
    heat = schur.heat_residual(weight, order)
    failing = ['tau s^%d' % r for r, c in enumerate(tau.coefficients()) if c] + \
        ['heat s^%d' % r for r, c in enumerate(heat.coefficients()) if c]
    return not failing, {'failing': failing}


def _schur_cauchy(weight):
    full = schur.cauchy_residual(weight)
    evaluated, dims = schur.cauchy_restriction_residual(weight)
    return not full and not evaluated and not dims, \
        {'full_terms': len(full.terms), 'evaluated_terms': len(evaluated.terms), 'dimension_terms': len(dims.terms)}


def _schur_principal(size):
    report = schur.principal_collapse_check(size)
    return report['passed'], {'wrong_shapes': [list(mu) for mu in report['surviving_shapes_wrong']],
                              'residual': report['residual'].to_json()}


def schur_suite(max_order: int = 4, tolerance: float = 1e-8, max_weight: int = None, s_order: int = None):
    weight = max_weight or max_order + 2
    s_order = s_order or weight
    return [
        Check('schur.characters', 'orthogonality, dimensions, contents', lambda: _schur_report(schur.orthogonality_check(weight))),
        Check('schur.eigenvalues', 'cut-and-join s_mu = 1/2 p_2[mu] s_mu', lambda: _schur_report(schur.eigenvalue_check(weight))),
        Check('schur.tau', 'e^H as a tau-function, and its heat equation', lambda: _schur_tau(weight, s_order)),
        Check('schur.cauchy', 'Cauchy identity and its restriction', lambda: _schur_cauchy(weight - 1)),
        Check('schur.principal', 'principal specialization gives the Zhou series', lambda: _schur_principal(weight + 2)),
    ]


def suite(name: str, max_order: int = 4, tolerance: float = 1e-8):
    builders = {'catalan': catalan_suite, 'hurwitz': hurwitz_suite, 'wkb': wkb_suite, 'schur': schur_suite}
    return builders[name](max_order, tolerance)
