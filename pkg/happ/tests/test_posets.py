from hypothesis import given, settings

from happ.combinat.compositions import Composition, SkewShapePair
from happ.combinat.equivalence import canonical_class, equivalence_classes
from happ.combinat.errors import PosetError
from happ.combinat.permutations import Permutation
from happ.combinat.posets import (
    FinitePoset,
    bruhat_interval,
    chain,
    flip_poset,
    rank_statistics,
    skew_flip_poset,
    verify_interval_iso,
    verify_word_property,
)
from happ.tests.base import HeckeTestCase, compositions


class FinitePosetTest(HeckeTestCase):

    def test_chain(self):
        poset = chain(3)
        self.assertEqual(poset.rank_vector(), (1, 1, 1, 1))
        self.assertTrue(poset.is_lattice())
        self.assertTrue(poset.is_rank_symmetric())
        self.assertTrue(poset.leq(0, 3))
        self.assertFalse(poset.leq(2, 1))

    def test_bowtie_is_not_a_lattice(self):
        poset = FinitePoset("abcd", [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
        self.assertFalse(poset.is_lattice())
        self.assertIsNone(poset.join("a", "b"))
        self.assertEqual(poset.lattice_failure(), ("meet", "a", "b"))
        with self.assertRaises(PosetError):
            poset.rank_vector()

    def test_rejects_cycles_and_bad_ranks(self):
        with self.assertRaises(PosetError):
            FinitePoset("ab", [("a", "b"), ("b", "a")])
        with self.assertRaises(PosetError):
            FinitePoset("ab", [("a", "b")], rank={"a": 0, "b": 2})
        with self.assertRaises(PosetError):
            FinitePoset("ab", [("a", "z")])

    def test_unimodality(self):
        poset = FinitePoset(
            "abcde", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("d", "e")],
            rank={"a": 0, "b": 1, "c": 1, "d": 2, "e": 3},
        )
        self.assertEqual(poset.rank_vector(), (1, 2, 1, 1))
        self.assertTrue(poset.is_rank_unimodal())
        self.assertFalse(poset.is_rank_symmetric())

    def test_dot(self):
        dot = chain(1).to_dot()
        self.assertTrue(dot.startswith('digraph "chain1" {'))
        self.assertIn('"0" -> "1";', dot)


class WeakOrderTest(HeckeTestCase):

    def test_full_interval_of_s3(self):
        interval = bruhat_interval(Permutation.identity(3), Permutation((3, 2, 1)))
        self.assertEqual(len(interval), 6)
        self.assertEqual(interval.rank_vector(), (1, 2, 2, 1))
        self.assertTrue(interval.is_lattice())

    def test_not_below(self):
        with self.assertRaises(PosetError):
            bruhat_interval(Permutation((2, 1, 3)), Permutation((1, 3, 2)))


class FlipPosetTest(HeckeTestCase):

    def test_canonical_class_of_two_four(self):
        poset = flip_poset(canonical_class(Composition((2, 4))))
        self.assertEqual(len(poset), 5)
        self.assertEqual(poset.rank_vector(), (1, 1, 2, 1))
        self.assertFalse(poset.is_rank_symmetric())
        self.assertTrue(poset.is_rank_unimodal())
        self.assertTrue(poset.is_lattice())

    def test_checks_on_worked_classes(self):
        for alpha in ((2, 4), (3, 2, 4), (2, 1, 3)):
            for srct_class in equivalence_classes(Composition(alpha)):
                self.assertTrue(verify_interval_iso(srct_class).ok)
                self.assertTrue(verify_word_property(srct_class).ok)

    def test_rank_statistics(self):
        rows = rank_statistics(Composition((2, 2)))
        self.assertEqual([row.size for row in rows], [1, 1])
        self.assertEqual(rows[0].to_json()["rank_vector"], [1])

    def test_skew_flip_poset(self):
        poset = skew_flip_poset(SkewShapePair(Composition((2, 1, 3)), Composition((1, 3))))
        self.assertEqual(len(poset), 1)
        json = poset.to_json()
        self.assertEqual(json["ranks"], [0])

    @given(compositions(max_size=6))
    @settings(deadline=None, max_examples=30)
    def test_classes_are_weak_order_intervals(self, alpha):
        for srct_class in equivalence_classes(alpha):
            report = verify_interval_iso(srct_class)
            self.assertTrue(report.ok, report.witness)
