import math
import unittest

from sympy import QQ

from eo_curves.errors import SizeMismatch
from eo_curves.hurwitz import zhou_term, QHbarExpr
from eo_curves.schur import *


class TestPartitions(unittest.TestCase):
    """
    Partitions and their invariants
    """

    def test_canonical(self):
        self.assertEqual(Partition([1, 3, 0, 2]), (3, 2, 1))
        self.assertEqual(Partition().size, 0)
        self.assertEqual(Partition([2, 2, 1]).conjugate(), (3, 2))
        self.assertEqual(Partition([2, 2, 1]).z(), 8)

    def test_counts(self):
        self.assertEqual([len(partitions_of(n)) for n in range(8)], [1, 1, 2, 3, 5, 7, 11, 15])
        self.assertEqual(partitions_of(3), [(3,), (2, 1), (1, 1, 1)])


class TestCharacters(unittest.TestCase):
    """
    Dimensions and Murnaghan-Nakayama characters
    """

    def test_dimensions(self):
        self.assertEqual(dim_and_character((5,)), (1, None))
        self.assertEqual(dimension((2, 1)), 2)
        self.assertEqual(dimension((3, 2)), 5)
        self.assertEqual(sum(dimension(mu) ** 2 for mu in partitions_of(4)), 24)

    def test_characters(self):
        self.assertEqual(character((1, 1), (2,)), -1)
        self.assertEqual(dim_and_character((2, 1), (3,)), (2, -1))
        self.assertEqual(character((2, 1), (2, 1)), 0)
        self.assertEqual(character((2, 2), (2, 2)), 2)

    def test_size_mismatch(self):
        self.assertRaises(SizeMismatch, character, (2,), (1,))

    def test_orthogonality(self):
        self.assertTrue(orthogonality_check(6)['passed'])


class TestSchurFunctions(unittest.TestCase):
    """
    Schur functions in power sums and the cut-and-join operator
    """

    def test_schur_in_p(self):
        self.assertEqual(schur_in_p((1,)), PPolynomial.power_sum(1))
        self.assertEqual(schur_in_p((2,)), PPolynomial({(2,): QQ(1, 2), (1, 1): QQ(1, 2)}))
        self.assertEqual(schur_in_p((1, 1)), PPolynomial({(2,): QQ(-1, 2), (1, 1): QQ(1, 2)}))

    def test_shifted_power_sum(self):
        for m in range(1, 8):
            self.assertEqual(shifted_power_sum(2, (m,)), m * (m - 1))
        self.assertEqual(shifted_power_sum(3, ()), 0)
        self.assertEqual(shifted_power_sum(2, (1, 1)), -2)

    def test_cutjoin(self):
        self.assertFalse(cutjoin_apply(PPolynomial.power_sum(1)))
        self.assertEqual(cutjoin_apply(schur_in_p((2,))), schur_in_p((2,)))
        self.assertEqual(cutjoin_apply(PPolynomial.power_sum(1, 1)), PPolynomial.power_sum(2))

    def test_eigenvalues(self):
        self.assertTrue(eigenvalue_check(6)['passed'])


class TestGeneratingFunctions(unittest.TestCase):
    """
    H(s, p), its tau expansion, the Cauchy identity and the principal specialization
    """

    def test_h_series(self):
        h = h_series(3, 3)
        self.assertEqual(h[0].terms[Partition([1])], 1)
        self.assertEqual(h[1].terms[Partition([2])], QQ(1, 2))
        self.assertEqual(h[3].terms[Partition([2])], QQ(1, 12))
        # H_{0,2}(1,1) / |Aut (1,1)|
        self.assertEqual(h[2].terms[Partition([1, 1])], QQ(1, 4))

    def test_tau(self):
        residual = tau_expansion_residual(5, 5)
        self.assertFalse(any(residual.coefficients()))

    def test_heat(self):
        self.assertFalse(any(heat_residual(5, 5).coefficients()))

    def test_weight_one(self):
        tau = exp_h_series(1, 0)
        self.assertEqual(tau[0], PPolynomial({(): 1, (1,): 1}))

    def test_cauchy(self):
        self.assertFalse(cauchy_residual(4))
        evaluated, dims = cauchy_restriction_residual(5)
        self.assertFalse(evaluated)
        self.assertFalse(dims)

    def test_cauchy_restriction_fault(self):
        evaluated, dims = cauchy_restriction_residual(3, dimension_of=lambda mu: 2 * dimension(mu))
        self.assertFalse(evaluated)
        self.assertTrue(dims)

    def test_principal_values(self):
        self.assertEqual(principal_value((1, 1)), 0)
        self.assertEqual(principal_value((2, 1)), 0)
        self.assertEqual(principal_value((4,)), 1)

    def test_principal_collapse(self):
        report = principal_collapse_check(8)
        self.assertTrue(report['passed'])
        self.assertFalse(report['surviving_shapes_wrong'])

    def test_zhou_terms(self):
        self.assertEqual(zhou_term(2) * QQ(1, math.factorial(2)), QHbarExpr.monomial(1, -2, 2, QQ(1, 2)))


if __name__ == '__main__':
    unittest.main()
