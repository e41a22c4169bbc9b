import itertools
import math
import unittest
from collections import Counter

from sympy import QQ

from eo_curves.algebra import RationalFunction1
from eo_curves.errors import InvalidProfile, InsufficientData
from eo_curves.hurwitz import *
from eo_curves.hurwitz import free_energy, scoeff


def _compose(p, q):
    return tuple(p[q[i]] for i in range(len(q)))


def _cycle_type(p):
    seen, lengths = set(), []
    for start in range(len(p)):
        if start in seen:
            continue
        k, h = 0, start
        while h not in seen:
            seen.add(h)
            h = p[h]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def _transitive(d, transpositions):
    parent = list(range(d))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for a, b in transpositions:
        parent[find(a)] = find(b)
    return len({find(a) for a in range(d)}) == 1


def _factorizations(d, r):
    """Cycle types of products of r transpositions in S_d generating a transitive group"""
    pairs = list(itertools.combinations(range(d), 2))
    counts = Counter()
    for word in itertools.product(pairs, repeat=r):
        if not _transitive(d, word):
            continue
        p = tuple(range(d))
        for a, b in word:
            t = list(range(d))
            t[a], t[b] = b, a
            p = _compose(p, tuple(t))
        counts[_cycle_type(p)] += 1
    return counts


class TestHurwitzNumbers(unittest.TestCase):
    """
    Single Hurwitz numbers from cut-and-join
    """

    def test_unstable(self):
        for d in range(1, 9):
            self.assertEqual(hurwitz_number(0, 1, (d,)), QQ(d ** (d - 1), d * math.factorial(d)))
        self.assertEqual(hurwitz_number(0, 2, (1, 1)), QQ(1, 2))

    def test_genus_one(self):
        self.assertEqual(hurwitz_number(1, 1, (2,)), QQ(1, 12))

    def test_factorization_oracle(self):
        for d in range(1, 5):
            for r in range(0, 7 if d < 4 else 6):
                for mu, count in _factorizations(d, r).items():
                    doubled = r + 2 - len(mu) - d
                    if doubled < 0 or doubled % 2:
                        continue
                    expected = QQ(count * automorphisms(mu), math.factorial(d) * math.factorial(r))
                    self.assertEqual(hurwitz_number(doubled // 2, len(mu), mu), expected, (mu, r))

    def test_labeled(self):
        self.assertEqual(labeled_hurwitz(0, (1, 1)), QQ(1, 2))
        self.assertEqual(labeled_hurwitz(1, (2,)), QQ(1, 2))
        self.assertEqual(labeled_hurwitz(0, (1, 1, 1)), QQ(4))
        self.assertEqual(branch_points(1, (2,)), 3)

    def test_invalid(self):
        self.assertRaises(InvalidProfile, hurwitz_number, 0, 2, (1,))
        self.assertRaises(InvalidProfile, hurwitz_number, 0, 1, (0,))
        self.assertRaises(InvalidProfile, hurwitz_number, -1, 1, (1,))


class TestHurwitzFreeEnergies(unittest.TestCase):
    """
    The xi-basis, ELSV solves and the polynomial recursion
    """

    def setUp(self):
        self.t = RationalFunction1.gen('t')

    def test_xi(self):
        t = self.t
        self.assertEqual(xi_polynomial(0).poly, t - 1)
        self.assertEqual(xi_polynomial(1).poly, t ** 3 - t ** 2)
        for k in range(5):
            self.assertEqual(xi_polynomial(k).degree(), 2 * k + 1)
        self.assertTrue(xi_conversion_check(6)['passed'])

    def test_elsv_table(self):
        table = elsv_coefficients(1, 1)
        for m in range(1, 9):
            self.assertEqual(table.predict((m,)), hurwitz_number(1, 1, (m,)))
        broken = table.perturbed((0,), table[(0,)] + 1)
        self.assertNotEqual(broken.predict((3,)), hurwitz_number(1, 1, (3,)))

    def test_elsv_unstable(self):
        self.assertRaises(InvalidProfile, elsv_coefficients, 0, 2)

    def test_f11(self):
        t = self.t
        self.assertEqual(free_energy_H(1, 1).diagonal(), (t - 1) ** 2 * (t + 1) / 24)

    def test_f03(self):
        self.assertEqual(free_energy_H(0, 3).poly.evaluate([2, 3, 5]), QQ(8))

    def test_symmetric(self):
        for g, n in [(0, 4), (1, 2)]:
            poly = free_energy_H(g, n).poly
            self.assertTrue(poly.is_symmetric())
            self.assertFalse(poly.specialize(0, 1))
            self.assertLessEqual(poly.total_degree(), 6 * g - 6 + 3 * n)

    def test_recursion(self):
        for g, n in [(1, 1), (0, 4), (1, 2), (2, 1)]:
            self.assertFalse(fh_recursion_residual(g, n), (g, n))

    def test_recursion_needs_f02_derivative(self):
        self.assertRaises(InsufficientData, fh_recursion_residual, 0, 3)

    def test_recursion_03(self):
        for ws in [(3.0, 3.1, 3.2), (1.5, 2.0, 4.0)]:
            self.assertLess(fh03_recursion_residual(ws), 1e-20)

    def test_recursion_03_fault(self):
        broken = FreeEnergyH(0, 3, free_energy_H(0, 3).poly * 2)
        self.assertGreater(fh03_recursion_residual((3.0, 3.1, 3.2), overrides={(0, 3): broken}), 1e-3)
        self.assertRaises(InvalidProfile, fh03_recursion_residual, (3.0, 3.0, 3.2))

    def test_recursion_fault(self):
        f = free_energy_H(1, 1)
        broken = FreeEnergyH(1, 1, f.poly * 2)
        self.assertTrue(fh_recursion_residual(1, 1, overrides={(1, 1): broken}))

    def test_laplace_probe(self):
        for g, n in [(1, 1), (0, 3)]:
            value, total = free_energy.laplace_probe(g, n, [3.0, 3.1, 3.2][:n])
            self.assertAlmostEqual(value / total, 1.0, delta=1e-8)
        self.assertTrue(one_point_check(1)['passed'])


class TestHurwitzSCoefficients(unittest.TestCase):
    """
    S^H_m and the heat equation
    """

    def setUp(self):
        self.t = RationalFunction1.gen('t')
        self.z = RationalFunction1.gen('z')

    def test_s2(self):
        t, z = self.t, self.z
        s2 = s_coeff_H(2)
        self.assertEqual(s2.value, (t - 1) ** 2 * (5 * t - 3) / 24)
        self.assertEqual(s2.x_derivative().substitute_mobius(*scoeff.Z_TO_T, var='z'), z ** 2 * (4 + 11 * z) / (24 * (1 - z) ** 5))

    def test_paths_agree(self):
        for m in range(2, 5):
            self.assertEqual(s_coeff_H_assembled(m), s_coeff_H_recursive(m))
            self.assertEqual(s_coeff_H(m).value.num.degree(), 3 * m - 3)

    def test_seeds_in_z(self):
        z = self.z
        self.assertEqual(s_coeff_H(0).x_derivative().substitute_mobius(*scoeff.Z_TO_T, var='z'), z)
        self.assertEqual(s_coeff_H(1).x_derivative().substitute_mobius(*scoeff.Z_TO_T, var='z'), z ** 2 / (2 * (1 - z) ** 2))

    def test_heat(self):
        self.assertFalse(s0_identity_residual())
        for source in ('assembled', 'recursive'):
            self.assertFalse(any(heat_residual_H(3, source)), source)

    def test_heat_fault(self):
        s2 = s_coeff_H(2)
        broken = SHurwitz(2, s2.derivative * 2, s2.value * 2)
        self.assertTrue(any(heat_residual_H(3, overrides={2: broken})))

    def test_lambert(self):
        report = lambert_inversion_check(12)
        self.assertTrue(report['passed'])
        self.assertEqual(report['z'][3], QQ(3, 2))


class TestZhou(unittest.TestCase):
    """
    The differential-difference equation and [P, Q] = P
    """

    def test_series(self):
        self.assertTrue(zhou_series_checks(20)['passed'])

    def test_series_fault(self):
        report = zhou_series_checks(10, exponent=lambda m: m * m // 2)
        self.assertFalse(report['passed'])
        self.assertTrue(report['failures']['recursion'])

    def test_series_shifted_exponent(self):
        report = zhou_series_checks(10, exponent=lambda m: m * (m + 1) // 2)
        self.assertFalse(report['passed'])
        self.assertTrue(report['failures']['recursion'])

    def test_term(self):
        self.assertEqual(zhou_term(3), QHbarExpr.monomial(3, -3, 3))

    def test_commutator(self):
        self.assertTrue(pq_commutator_check(10, 3)['passed'])

    def test_commutator_fault(self):
        self.assertFalse(pq_commutator_check(4, 1, half_hbar=False)['passed'])

    def test_ring(self):
        a = QHbarExpr.monomial(1, 0, 2)
        self.assertFalse(a - a)
        self.assertEqual(a.d_w(), a * -2)
        self.assertEqual(a.shift(), QHbarExpr.monomial(3, 0, 2))
        self.assertEqual(QHbarExpr.monomial(2, 3, 0).d_hbar(), QHbarExpr.monomial(2, 3, 0) * 2 + QHbarExpr.monomial(2, 2, 0) * 3)


if __name__ == '__main__':
    unittest.main()
