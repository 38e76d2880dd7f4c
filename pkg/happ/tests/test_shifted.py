from happ.combinat.compositions import Composition
from happ.combinat.errors import ShapeError
from happ.combinat.shifted import (
    FAMILIES,
    ShiftedShape,
    catalan,
    class_bijection,
    count_formulas,
    count_shifted,
    enumerate_shifted,
    staircase_count,
    staircase_double_formula,
    threes_sink_word,
    threes_structure_check,
    truncated_match_search,
    truncated_staircase,
)
from happ.tests.base import HeckeTestCase


class ShiftedShapeTest(HeckeTestCase):

    def test_cells(self):
        shape = ShiftedShape(Composition((1, 2)))
        self.assertEqual(shape.cells, {(1, 2), (2, 1), (2, 2)})
        self.assertEqual(enumerate_shifted(shape), [((1,), (3, 2))])
        self.assertEqual(count_shifted(shape), 1)

    def test_truncation(self):
        shape = truncated_staircase(4, 2, 2)
        self.assertEqual(str(shape), "2,3,4\\1")
        self.assertEqual(shape.row_cuts, (0, 0, 1))
        self.assertEqual(shape.size, 8)
        self.assertEqual(count_shifted(shape), len(enumerate_shifted(shape)))

    def test_rejects_non_strict(self):
        with self.assertRaises(ShapeError):
            ShiftedShape(Composition((2, 1)))
        with self.assertRaises(ShapeError):
            ShiftedShape(Composition((1, 2)), Composition((1, 2, 3)))


class FormulaTest(HeckeTestCase):

    def test_closed_forms(self):
        self.assertEqual(staircase_count(3), 2)
        self.assertEqual(staircase_count(4), 12)
        self.assertEqual(catalan(3), 5)
        self.assertEqual([staircase_double_formula(n) for n in (1, 2, 3)], [1, 1, 4])

    def test_families_match(self):
        self.assertTrue(count_formulas("threes", k=3).match)
        self.assertEqual(count_formulas("threes", k=3).formula, 4)
        self.assertTrue(count_formulas("rectangle", n=2, k=2).match)
        for n in (1, 2, 3):
            self.assertTrue(count_formulas("staircase_double", n=n).match)
        for n in (2, 3):
            self.assertTrue(count_formulas("staircase_truncated", n=n).match)
        for k in (1, 2, 3):
            self.assertTrue(count_formulas("truncated_threes", k=k).match)
        self.assertIn("truncated_threes", FAMILIES)

    def test_one_column_rectangle_differs(self):
        report = count_formulas("rectangle", n=1, k=2)
        self.assertEqual((report.formula, report.enumerated), (2, 1))
        self.assertFalse(report.to_json()["match"])

    def test_bad_parameters(self):
        with self.assertRaises(ShapeError):
            count_formulas("triangles", n=2)
        with self.assertRaises(ShapeError):
            count_formulas("threes", k=0)


class StructureTest(HeckeTestCase):

    def test_bijection(self):
        for alpha in ((1, 2), (1, 2, 3), (2, 4), (1, 3)):
            report = class_bijection(Composition(alpha))
            self.assertTrue(report.ok, report.witness)
        with self.assertRaises(ShapeError):
            class_bijection(Composition((2, 2)))

    def test_threes(self):
        self.assertEqual(threes_sink_word(3), (3, 6))
        report = threes_structure_check(2)
        self.assertTrue(report.ok)
        self.assertEqual(report.details["sink"], "4,2,1/6,5,3")
        self.assertTrue(threes_structure_check(3).ok)

    def test_search(self):
        rows = truncated_match_search(2)
        self.assertEqual([row["shape"] for row in rows], [[2], [1, 1]])
        self.assertTrue(all(row["canonical_count"] == 1 for row in rows))
        self.assertIn("2", rows[0]["matches"])
