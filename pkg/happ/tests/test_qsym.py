from hypothesis import given, settings

from happ.combinat.compositions import Composition, SkewShapePair, partitions_of
from happ.combinat.errors import ShapeError
from happ.combinat.qsym import (
    QSymF,
    canonical_modules_distinct,
    canonical_qsym,
    canonical_transition_matrix,
    coproduct_mass_check,
    fundamental_to_monomial,
    kostka_number,
    quasisymmetric_schur,
    schur_expansion_check,
    schur_monomial_oracle,
    skew_quasisymmetric_schur,
)
from happ.tests.base import HeckeTestCase, compositions


def c(*parts):
    return Composition(parts)


class QSymFTest(HeckeTestCase):

    def test_arithmetic(self):
        f = QSymF.fundamental((1, 2)) + QSymF.fundamental((2, 1)) * 2
        self.assertEqual(f.coefficient((2, 1)), 2)
        self.assertEqual(f.mass(), 3)
        self.assertEqual(f.degree, 3)
        self.assertFalse(f - f)
        self.assertIsNone(QSymF().degree)

    def test_mixed_degrees(self):
        with self.assertRaises(ShapeError):
            QSymF({c(1): 1, c(2): 1})

    def test_monomial_expansion(self):
        self.assertEqual(fundamental_to_monomial(c(1, 2)), {c(1, 2): 1, c(1, 1, 1): 1})
        self.assertEqual(
            QSymF.fundamental((3,)).to_monomial(),
            {c(3): 1, c(1, 2): 1, c(2, 1): 1, c(1, 1, 1): 1},
        )


class ExpansionTest(HeckeTestCase):

    def test_quasisymmetric_schur(self):
        self.assertEqual(
            quasisymmetric_schur(c(2, 1, 3)).to_lines(),
            ["1 F(2,1,3)", "1 F(2,2,2)", "1 F(1,2,1,2)"],
        )

    def test_canonical(self):
        expected = QSymF({
            c(3, 2, 4): 1, c(3, 1, 2, 3): 1, c(3, 1, 3, 2): 1, c(3, 2, 2, 2): 1, c(3, 3, 3): 1,
            c(2, 2, 2, 3): 1, c(2, 2, 1, 2, 2): 1, c(1, 3, 2, 3): 1, c(1, 3, 1, 2, 2): 1,
        })
        self.assertEqual(canonical_qsym(c(3, 2, 4)), expected)

    def test_skew_extremes(self):
        alpha = c(2, 1, 3)
        self.assertEqual(skew_quasisymmetric_schur(SkewShapePair(alpha, Composition(()))), quasisymmetric_schur(alpha))
        self.assertEqual(skew_quasisymmetric_schur(SkewShapePair(alpha, alpha)), QSymF.one())

    def test_kostka_and_oracle(self):
        self.assertEqual(kostka_number(c(2, 1), c(1, 1, 1)), 2)
        self.assertEqual(kostka_number(c(2, 1), c(3)), 0)
        self.assertEqual(schur_monomial_oracle(c(2, 1)), {c(2, 1): 1, c(1, 2): 1, c(1, 1, 1): 2})
        with self.assertRaises(ShapeError):
            schur_monomial_oracle(c(1, 2))

    def test_schur_expansion(self):
        for n in range(1, 6):
            for lam in partitions_of(n):
                self.assertTrue(schur_expansion_check(lam).ok, lam)

    def test_transition_matrix(self):
        for n in range(1, 5):
            matrix = canonical_transition_matrix(n)
            self.assertEqual(matrix.matrix.shape, (2 ** (n - 1), 2 ** (n - 1)))
            self.assertTrue(matrix.is_upper_unitriangular())
        self.assertTrue(canonical_modules_distinct(4).ok)

    def test_transition_matrix_keeps_exact_integers(self):
        matrix = canonical_transition_matrix(4)
        self.assertEqual(matrix.matrix.dtype, object)
        entries = [value for row in matrix.to_json()["matrix"] for value in row]
        self.assertTrue(all(type(value) is int for value in entries))
        self.assertTrue(all(value >= 0 for value in entries))

    @given(compositions(max_size=5))
    @settings(deadline=None, max_examples=25)
    def test_coproduct_mass(self, alpha):
        self.assertTrue(coproduct_mass_check(alpha).ok)
