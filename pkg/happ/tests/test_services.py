from unittest import mock

from django.test import override_settings

from happ.classes.class_service import ClassService
from happ.classes.count_service import CountService
from happ.classes.expansion_service import ExpansionService
from happ.classes.module_service import ModuleService
from happ.classes.poset_service import PosetService
from happ.classes.tableau_service import TableauService
from happ.classes.verification_service import VerificationService
from happ.tests.base import HeckeTestCase


class TableauServiceTest(HeckeTestCase):

    def test_enumerate(self):
        result = TableauService.enumerate("2,2")
        self.assertEqual(result["status"], "success")
        self.assertEqual(result["data"]["tableaux"], ["2,1/4,3", "3,2/4,1"])
        self.assertEqual(TableauService.enumerate("3,2,4", columns_increasing=True)["data"]["count"], 9)

    def test_bad_shape(self):
        result = TableauService.enumerate("2,x")
        self.assertEqual(result["status"], "error")
        self.assertEqual(result["message"], "shape_parse_error")

    @override_settings(HECKE_MAX_N=4)
    def test_size_limit(self):
        result = TableauService.enumerate("3,2")
        self.assertEqual(result["message"], "size_limit_exceeded")

    def test_enumerate_skew(self):
        result = TableauService.enumerate_skew("2,1,3", "1,3")
        self.assertEqual(result["data"]["count"], 1)
        self.assertEqual(result["data"]["tableaux"], ["2,1/*/*,*,*"])

    def test_orbit(self):
        data = TableauService.orbit("2,1/4,3")["data"]
        self.assertEqual(data["descent_set"], [2])
        self.assertEqual([step["kind"] for step in data["action"]], ["unchanged", "zero", "unchanged"])
        self.assertEqual(data["orbit"], ["2,1/4,3"])
        self.assertEqual(data["growth_word"], [2, 1, 2, 1])

    def test_orbit_of_invalid_filling(self):
        result = TableauService.orbit("2/3,1")
        self.assertEqual(result["message"], "invalid_tableau")

    def test_unexpected_failure_is_logged(self):
        with mock.patch("happ.classes.tableau_service.enumerate_srct", side_effect=RuntimeError("boom")):
            result = TableauService.enumerate("2,2")
        self.assertEqual(result, {"status": "fail", "message": "enumerate_failed"})


class ExpansionServiceTest(HeckeTestCase):

    def test_quasisymmetric_schur(self):
        data = ExpansionService.quasisymmetric_schur("2,1,3")["data"]
        self.assertEqual(data["lines"], ["1 F(2,1,3)", "1 F(2,2,2)", "1 F(1,2,1,2)"])
        self.assertEqual(data["degree"], 6)

    def test_canonical_and_matrix(self):
        self.assertEqual(ExpansionService.canonical("3,2,4")["data"]["terms"], 9)
        matrix = ExpansionService.transition_matrix(3)["data"]
        self.assertTrue(matrix["upper_unitriangular"])
        self.assertEqual(ExpansionService.transition_matrix(0)["message"], "invalid_input")

    def test_skew(self):
        data = ExpansionService.skew("2,1,3", "2,1,3")["data"]
        self.assertEqual(data["expansion"], {"": 1})


class StructureServiceTest(HeckeTestCase):

    def test_classes(self):
        data = ClassService.classes("2,2")["data"]
        self.assertEqual(data["count"], 2)
        self.assertFalse(data["tableau_cyclic"])
        self.assertEqual([row["index"] for row in data["classes"]], [1, 2])
        self.assertEqual(sum(row["canonical"] for row in data["classes"]), 1)

    def test_poset(self):
        data = PosetService.poset("2,4", class_index=None)["data"]
        vectors = [poset["rank_vector"] for poset in data["posets"]]
        self.assertIn([1, 1, 2, 1], vectors)
        self.assertTrue(data["dot"].startswith("digraph"))
        self.assertEqual(PosetService.poset("2,2", class_index=3)["message"], "invalid_input")

    def test_module(self):
        data = ModuleService.module("2,2")["data"]
        self.assertEqual(data["generators"], [[[1, 0], [0, 0]], [[0, 0], [0, 1]], [[1, 0], [0, 0]]])
        self.assertTrue(data["relations"]["ok"])
        self.assertEqual(data["basis_text"], ["2,1/4,3", "3,2/4,1"])

    def test_verdict_and_restriction(self):
        self.assertEqual(ModuleService.verdict("2,2")["data"]["verdict"], "decomposable")
        data = ModuleService.restriction("2,1,3", 0)["data"]
        self.assertEqual(data["details"]["blocks"], {"2,1,3": 3})
        self.assertEqual(ModuleService.restriction("2,1,3", 9)["message"], "invalid_input")


class VerificationServiceTest(HeckeTestCase):

    def test_run_suite(self):
        result = VerificationService.run_suite("relations", 3)
        self.assertEqual(result["message"], "suite_passed")
        self.assertEqual(result["data"]["subjects"], 7)
        self.assertIsNone(result["data"]["witness"])

    def test_unknown_suite_and_limits(self):
        self.assertEqual(VerificationService.run_suite("nothing", 3)["message"], "invalid_input")
        self.assertEqual(VerificationService.run_suite("relations", 13)["message"], "size_limit_exceeded")

    def test_conjecture(self):
        data = VerificationService.conjecture(6)["data"]
        self.assertTrue(data["ok"])
        self.assertTrue(data["witness_reproduced"])
        self.assertIn("2,4", data["non_symmetric_shapes"])
        self.assertFalse(VerificationService.conjecture(4)["data"]["witness_reproduced"])
        self.assertTrue(VerificationService.conjecture(4)["data"]["ok"])

    def test_tsv(self):
        text = VerificationService.to_tsv([{"shape": "2,4", "rank_vector": [1, 1, 2, 1]}])
        self.assertEqual(text.splitlines(), ["shape\trank_vector", "2,4\t1,1,2,1"])


class CountServiceTest(HeckeTestCase):

    def test_count(self):
        data = CountService.count("threes", k=3)["data"]
        self.assertEqual((data["formula"], data["enumerated"], data["match"]), (4, 4, True))
        self.assertEqual(CountService.count("triangles", k=3)["message"], "invalid_input")
        self.assertEqual(CountService.count("threes", k=5)["message"], "size_limit_exceeded")

    def test_table(self):
        data = CountService.table("staircase_double")["data"]
        self.assertTrue(data["ok"])
        self.assertEqual(len(data["rows"]), 3)

    def test_checks(self):
        self.assertTrue(CountService.bijection("1,2,3")["data"]["ok"])
        self.assertEqual(CountService.bijection("2,2")["message"], "invalid_shape")
        self.assertEqual(CountService.threes_structure(2)["data"]["details"]["sink"], "4,2,1/6,5,3")
        self.assertEqual(len(CountService.search(3)["data"]["rows"]), 4)
