import unittest

from sympy import QQ

from eo_curves import wkb
from eo_curves.algebra import RationalFunction1
from eo_curves.errors import InsufficientData, DivisionBySingularSymbol, EOError
from eo_curves.wkb import *


class TestYPolyOperator(unittest.TestCase):
    """
    Polynomials in d/dy with commuting coefficients
    """

    def setUp(self):
        self.z = RationalFunction1.gen('z')

    def test_product(self):
        a = YPolyOperator({1: self.z})
        b = YPolyOperator({0: RationalFunction1.constant(1, 'z'), 2: self.z ** 2})
        self.assertEqual(a * b, b * a)
        self.assertEqual((a * b)[3], self.z ** 3)
        self.assertEqual((a * b).max_order(), 3)
        self.assertEqual(a * YPolyOperator.identity(), a)

    def test_zero_terms_dropped(self):
        a = YPolyOperator({1: self.z})
        self.assertEqual((a + a * -1).coeffs, {})


class TestCurveSymbols(unittest.TestCase):
    """
    On-shell derivatives of the curve symbols
    """

    def setUp(self):
        self.z = RationalFunction1.gen('z')

    def test_catalan(self):
        c = curve('catalan')
        self.assertEqual(c.on_shell(1), 1 / self.z - self.z)
        self.assertEqual(c.on_shell(2), 2)
        self.assertFalse(c.on_shell(3))

    def test_hurwitz(self):
        c = curve('hurwitz')
        self.assertFalse(c.on_shell(0))
        self.assertEqual(c.on_shell(1), self.z - 1)
        self.assertEqual(c.on_shell(4), self.z)

    def test_unknown(self):
        self.assertRaises(EOError, curve, 'airy')

    def test_apply(self):
        op = YPolyOperator({1: self.z, 2: RationalFunction1.constant(1, 'z')})
        self.assertEqual(apply_to_symbol(op, curve('catalan')), 3 - self.z ** 2)
        self.assertEqual(apply_to_symbol(op, curve('hurwitz')), self.z ** 2)


class TestHierarchy(unittest.TestCase):
    """
    D_r from the exponential and the quantum corrections
    """

    def setUp(self):
        self.z = RationalFunction1.gen('z')

    def test_first_operator(self):
        c = curve('catalan')
        s = model_s_derivatives('catalan', 1)
        d = build_d_operators(1, s, c)
        self.assertEqual(d[1][1], s[1])
        self.assertEqual(d[1][2], c.derive(s[0]) * QQ(1, 2))

    def test_expansions_agree(self):
        for model in ('catalan', 'hurwitz'):
            c = curve(model)
            s = model_s_derivatives(model, 4)
            self.assertEqual(build_d_operators(4, s, c), expand_by_compositions(4, s, c), model)

    def test_insufficient(self):
        c = curve('catalan')
        self.assertRaises(InsufficientData, build_d_operators, 3, model_s_derivatives('catalan', 1), c)

    def test_corrections_vanish(self):
        for model in ('catalan', 'hurwitz'):
            corrections = recover_corrections(model, 4)
            self.assertEqual(len(corrections), 4)
            self.assertFalse(any(corrections), model)

    def test_corrections_fault(self):
        s = model_s_derivatives('catalan', 4)
        s[3] = s[3] * 2
        corrections = recover_corrections('catalan', 4, s)
        self.assertFalse(any(corrections[:2]))
        self.assertTrue(corrections[2])

    def test_s_prime_catalan(self):
        z = self.z
        self.assertEqual(s_prime_from_hierarchy('catalan', 2), z ** 5 * (2 * z ** 2 + 3) / (z ** 2 - 1) ** 5)
        self.assertEqual(s_prime_from_hierarchy('catalan', 3), -5 * z ** 7 * (3 + 7 * z ** 2 + 2 * z ** 4) / (z ** 2 - 1) ** 8)

    def test_s_prime_negative_index(self):
        for model in ('catalan', 'hurwitz'):
            self.assertRaises(InsufficientData, s_prime_from_hierarchy, model, -1)

    def test_s_prime_hurwitz(self):
        z = self.z
        self.assertEqual(s_prime_from_hierarchy('hurwitz', 2), z ** 2 * (4 + 11 * z) / (24 * (1 - z) ** 5))

    def test_triple_path(self):
        for model in ('catalan', 'hurwitz'):
            rows = triple_path_check(model, 4)
            self.assertEqual([row['n'] for row in rows], [2, 3, 4])
            self.assertTrue(all(row['passed'] for row in rows), model)


class TestSingularSymbol(unittest.TestCase):
    """
    A symbol whose first y-derivative vanishes on the curve
    """

    def setUp(self):
        z = RationalFunction1.gen('z')

        def tower(r):
            return RationalFunction1.constant(1 if r == 2 else 0, 'z')

        wkb.CURVES['flat'] = CurveSymbol('flat', tower, RationalFunction1.constant(1, 'z'), [z, z])

    def tearDown(self):
        del wkb.CURVES['flat']

    def test_division(self):
        self.assertRaises(DivisionBySingularSymbol, s_prime_from_hierarchy, 'flat', 2)


if __name__ == '__main__':
    unittest.main()
