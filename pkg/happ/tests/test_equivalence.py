from hypothesis import given, settings

from happ.combinat.compositions import Composition
from happ.combinat.equivalence import (
    SrctClass,
    canonical_class,
    class_of,
    drn_of_tableau,
    equivalence_classes,
    is_sink,
    is_source,
    is_tableau_cyclic,
)
from happ.combinat.errors import ShapeError
from happ.combinat.hecke import orbit
from happ.combinat.tableaux import Srct, canonical_tableau, enumerate_srct
from happ.tests.base import HECKE_EXAMPLE_ROWS, HeckeTestCase, compositions


def class_from_source(source: Srct) -> SrctClass:
    return SrctClass(source.shape, source.standardized_column_word(), tuple(orbit(source)))


class SourceSinkTest(HeckeTestCase):

    def test_worked_class(self):
        source = Srct(Composition((3, 4, 2, 3)), ((4, 3, 2), (8, 7, 6, 5), (9, 1), (12, 11, 10)))
        srct_class = class_from_source(source)
        tableau = Srct(Composition((3, 4, 2, 3)), HECKE_EXAMPLE_ROWS)
        self.assertIn(tableau, srct_class)
        self.assertEqual(srct_class.source, source)
        self.assertEqual(srct_class.sink.rows, ((6, 4, 1), (9, 7, 5, 2), (10, 3), (12, 11, 8)))
        self.assertEqual(srct_class.drn, {2, 3})
        self.assertTrue(is_source(source))
        self.assertFalse(is_sink(source))
        self.assertEqual(drn_of_tableau(tableau), {2, 3})

    def test_class_with_three_distinguished_nodes(self):
        shape = Composition((4, 3, 2, 3))
        source = Srct(shape, ((7, 6, 5, 4), (8, 3, 2), (9, 1), (12, 11, 10)))
        sink = Srct(shape, ((8, 6, 3, 1), (9, 5, 2), (10, 4), (12, 11, 7)))
        self.assertEqual(source.standardized_column_word(), sink.standardized_column_word())
        srct_class = class_from_source(source)
        self.assertEqual(srct_class.source, source)
        self.assertEqual(srct_class.sink, sink)
        self.assertTrue(is_source(source))
        self.assertTrue(is_sink(sink))
        self.assertEqual(srct_class.drn, {2, 3, 4})
        self.assertEqual(drn_of_tableau(sink), {2, 3, 4})

    def test_canonical_class(self):
        e = canonical_class(Composition((3, 2, 4)))
        self.assertEqual(e.size, 9)
        self.assertEqual(e.source, canonical_tableau(Composition((3, 2, 4))))
        self.assertEqual(e.sink.rows, ((4, 3, 1), (7, 5), (9, 8, 6, 2)))
        self.assertEqual(
            set(e.members),
            set(enumerate_srct(Composition((3, 2, 4)), columns_increasing=True)),
        )

    def test_two_by_two_is_not_tableau_cyclic(self):
        classes = equivalence_classes(Composition((2, 2)))
        self.assertEqual([c.size for c in classes], [1, 1])
        self.assertFalse(is_tableau_cyclic(Composition((2, 2))))
        self.assertTrue(is_tableau_cyclic(Composition((1, 2))))

    def test_class_of(self):
        tableau = enumerate_srct(Composition((2, 2)))[1]
        self.assertEqual(class_of(tableau).members, (tableau,))

    def test_json(self):
        payload = canonical_class(Composition((2, 4))).to_json(with_members=True)
        self.assertEqual(payload["size"], 5)
        self.assertEqual(len(payload["members"]), 5)
        self.assertEqual(payload["shape"], [2, 4])
        self.assertIn("|", payload["st_word"])

    def test_empty_shape(self):
        with self.assertRaises(ShapeError):
            equivalence_classes(Composition(()))


class PartitionTest(HeckeTestCase):

    @given(compositions(max_size=6))
    @settings(deadline=None, max_examples=40)
    def test_classes_partition_and_are_orbits(self, alpha):
        classes = equivalence_classes(alpha)
        members = [member for c in classes for member in c.members]
        self.assertEqual(sorted(members, key=Srct.column_reading), enumerate_srct(alpha))
        for srct_class in classes:
            self.assertEqual(orbit(srct_class.source), sorted(srct_class.members, key=Srct.column_reading))
            self.assertEqual(srct_class.source.positions[1][1], min(srct_class.drn))
            self.assertEqual(srct_class.sink.positions[1][1], max(srct_class.drn))
