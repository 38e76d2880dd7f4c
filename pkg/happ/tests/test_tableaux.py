from hypothesis import given, settings

from happ.combinat.compositions import EMPTY, Composition, SkewShapePair, compositions_up_to, removable_parts
from happ.combinat.errors import TableauError
from happ.combinat.tableaux import (
    Srct,
    apply_box_adding,
    apply_growth_word,
    canonical_tableau,
    check_filling,
    enumerate_skew_srct,
    enumerate_srct,
    growth_word,
    parse_tableau,
    remove_one,
    split,
)
from happ.tests.base import EXAMPLE_ROWS, HECKE_EXAMPLE_ROWS, HeckeTestCase, compositions


class ValidationTest(HeckeTestCase):

    def test_example_tableau_is_valid(self):
        self.assertTrue(check_filling(Composition((3, 4, 3, 2)), EXAMPLE_ROWS))

    def test_triple_rule_violation(self):
        report = check_filling(Composition((1, 2)), [[2], [3, 1]])
        self.assertFalse(report)
        self.assertEqual(report.rule, "triple")

    def test_row_and_first_column_rules(self):
        self.assertEqual(check_filling(Composition((2,)), [[1, 2]]).rule, "row")
        self.assertEqual(check_filling(Composition((1, 1)), [[2], [1]]).rule, "first_column")
        self.assertEqual(check_filling(Composition((2,)), [[3, 1]]).rule, "grid")

    def test_single_row(self):
        self.assertTrue(check_filling(Composition((4,)), [[4, 3, 2, 1]]))

    def test_from_rows_raises(self):
        with self.assertRaises(TableauError):
            Srct.from_rows(Composition((1, 2)), [[2], [3, 1]])


class StatisticsTest(HeckeTestCase):

    def test_descent_sets(self):
        tableau = Srct(Composition((3, 4, 3, 2)), EXAMPLE_ROWS)
        self.assertEqual(tableau.descent_set(), {1, 2, 5, 8, 9, 11})
        self.assertEqual(tableau.descent_composition(), Composition((1, 1, 3, 3, 1, 2, 1)))
        other = Srct(Composition((3, 4, 2, 3)), HECKE_EXAMPLE_ROWS)
        self.assertEqual(other.descent_set(), {1, 2, 5, 7, 9, 10})

    def test_canonical_tableau(self):
        self.assertEqual(
            canonical_tableau(Composition((3, 4, 3, 2))).rows,
            ((3, 2, 1), (7, 6, 5, 4), (10, 9, 8), (12, 11)),
        )
        self.assertEqual(canonical_tableau(Composition((3, 2, 4))).rows, ((3, 2, 1), (5, 4), (9, 8, 7, 6)))

    @given(compositions(max_size=8))
    @settings(deadline=None)
    def test_canonical_descents_are_set_of(self, alpha):
        from happ.combinat.compositions import set_of
        tableau = canonical_tableau(alpha)
        self.assertTrue(tableau.check())
        self.assertEqual(tableau.descent_set(), set_of(alpha))

    def test_column_word(self):
        tableau = Srct(Composition((3, 4, 2, 3)), HECKE_EXAMPLE_ROWS)
        self.assertEqual(tableau.column_word().word, (5, 9, 10, 12, 4, 7, 1, 11, 2, 6, 8, 3))
        self.assertEqual(canonical_tableau(Composition((1, 1))).column_word().word, (1, 2))
        self.assertEqual(canonical_tableau(Composition((2, 2))).column_word().word, (2, 4, 1, 3))

    def test_standardized_column_word(self):
        tableau = Srct(Composition((3, 4, 3, 2)), EXAMPLE_ROWS)
        self.assertEqual(
            tableau.standardized_column_word(),
            ((1, 2, 3, 4), (1, 2, 4, 3), (2, 3, 1), (1,)),
        )


class EnumerationTest(HeckeTestCase):

    def test_counts(self):
        self.assertEqual(len(enumerate_srct(Composition((2, 1, 3)))), 3)
        self.assertEqual(
            [t.rows for t in enumerate_srct(Composition((2, 2)))],
            [((2, 1), (4, 3)), ((3, 2), (4, 1))],
        )
        self.assertEqual([t.rows for t in enumerate_srct(Composition((1, 2)))], [((1,), (3, 2))])

    def test_canonical_class_enumeration(self):
        members = enumerate_srct(Composition((3, 2, 4)), columns_increasing=True)
        self.assertEqual(len(members), 9)
        self.assertEqual(members[0], canonical_tableau(Composition((3, 2, 4))))

    @given(compositions(max_size=6))
    @settings(deadline=None)
    def test_every_enumerated_filling_is_valid_and_distinct(self, alpha):
        tableaux = enumerate_srct(alpha)
        self.assertEqual(len(set(tableaux)), len(tableaux))
        for tableau in tableaux:
            self.assertTrue(tableau.check())

    def test_sizes_sum_to_standard_young_tableaux(self):
        # SRCTs of all rearrangements of a partition biject with its SYT: f^(3,2,1) = 16
        from happ.combinat.compositions import compositions_of, underlying_partition
        total = sum(
            len(enumerate_srct(alpha))
            for alpha in compositions_of(6)
            if underlying_partition(alpha) == Composition((3, 2, 1))
        )
        self.assertEqual(total, 16)

    def test_skew_extremes(self):
        alpha = Composition((2, 1, 3))
        full = enumerate_skew_srct(SkewShapePair(alpha, alpha))
        self.assertEqual(len(full), 1)
        self.assertEqual(full[0].n, 0)
        straight = enumerate_skew_srct(SkewShapePair(alpha, EMPTY))
        self.assertEqual([t.rows for t in straight], [t.rows for t in enumerate_srct(alpha)])

    def test_skew_fillings_are_valid(self):
        pair = SkewShapePair(Composition((2, 1, 3)), Composition((1, 3)))
        tableaux = enumerate_skew_srct(pair)
        self.assertTrue(tableaux)
        for tableau in tableaux:
            self.assertEqual(tableau.n, 2)
            self.assertTrue(tableau.check())


class TextFormTest(HeckeTestCase):

    def test_parse_round_trip(self):
        text = "5,4,2/9,7,6,3/10,1/12,11,8"
        tableau = parse_tableau(text)
        self.assertIsInstance(tableau, Srct)
        self.assertEqual(tableau.rows, HECKE_EXAMPLE_ROWS)
        self.assertEqual(str(tableau), text)

    def test_parse_rejects_invalid(self):
        with self.assertRaises(TableauError):
            parse_tableau("2/3,1")
        with self.assertRaises(TableauError):
            parse_tableau("")

    def test_parse_rejects_non_ascii_digits(self):
        with self.assertRaises(TableauError):
            parse_tableau("2,\u00b3/1")


class GrowthAndSplitTest(HeckeTestCase):

    def test_growth_word(self):
        tableau = Srct(Composition((2, 2)), [[3, 2], [4, 1]])
        self.assertEqual(growth_word(tableau).word, (2, 2, 1, 1))
        self.assertEqual(apply_growth_word((2, 2, 1, 1)), Composition((2, 2)))
        self.assertIsNone(apply_growth_word((3, 1)))

    @given(compositions(max_size=5))
    @settings(deadline=None)
    def test_growth_word_rebuilds_shape(self, alpha):
        for tableau in enumerate_srct(alpha):
            self.assertEqual(growth_word(tableau).apply(), alpha)

    def test_remove_one(self):
        tableau = Srct(Composition((3, 4, 2, 3)), HECKE_EXAMPLE_ROWS)
        smaller = remove_one(tableau)
        self.assertEqual(smaller.shape, Composition((3, 4, 1, 3)))
        self.assertEqual(smaller.rows, ((4, 3, 1), (8, 6, 5, 2), (9,), (11, 10, 7)))
        self.assertTrue(smaller.check())

    def test_split(self):
        low, high = split(canonical_tableau(Composition((2, 2))), 2)
        self.assertEqual(high.shape, Composition((2,)))
        self.assertEqual(high.rows, ((2, 1),))
        self.assertEqual(low.inner, Composition((2,)))
        self.assertEqual(low.rows, ((2, 1), ()))
        self.assertTrue(low.check())


class BoxAddingTest(HeckeTestCase):

    def test_apply_box_adding(self):
        self.assertEqual(apply_box_adding(1, EMPTY), Composition((1,)))
        self.assertEqual(apply_box_adding(1, Composition((2, 1))), Composition((1, 2, 1)))
        self.assertEqual(apply_box_adding(2, Composition((3, 1, 1))), Composition((3, 2, 1)))
        self.assertIsNone(apply_box_adding(3, Composition((1, 3))))

    def test_letters_rebuild_the_shape_one_box_at_a_time(self):
        for alpha in compositions_up_to(5):
            for tableau in enumerate_srct(alpha):
                current = EMPTY
                for letter in reversed(growth_word(tableau).word):
                    current = apply_box_adding(letter, current)
                    self.assertIsNotNone(current, str(tableau))
                self.assertEqual(current, alpha)


class EntryOneTest(HeckeTestCase):

    def test_entry_one_sits_on_a_removable_node(self):
        for alpha in compositions_up_to(7):
            nodes = set(removable_parts(alpha))
            for tableau in enumerate_srct(alpha):
                self.assertIn(tableau.positions[1], nodes, str(tableau))
