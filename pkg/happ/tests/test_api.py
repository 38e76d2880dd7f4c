from django.test import Client

from happ.tests.base import HeckeTestCase


class ApiTest(HeckeTestCase):

    def setUp(self):
        self.client = Client()

    def test_enumerate(self):
        response = self.client.get("/api/enumerate/", {"shape": "2,2"})
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.json()["data"]["tableaux"], ["2,1/4,3", "3,2/4,1"])

    def test_missing_and_bad_parameters(self):
        self.assertEqual(self.client.get("/api/enumerate/").status_code, 400)
        response = self.client.get("/api/enumerate/", {"shape": "2,0"})
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.json()["message"], "shape_parse_error")
        self.assertEqual(self.client.get("/api/poset/", {"shape": "2,2", "class": "x"}).status_code, 400)

    def test_expansions(self):
        response = self.client.get("/api/qs/", {"shape": "2,1,3"})
        self.assertEqual(response.json()["data"]["expansion"], {"2,1,3": 1, "2,2,2": 1, "1,2,1,2": 1})
        response = self.client.get("/api/canonical/", {"n": "3"})
        self.assertTrue(response.json()["data"]["upper_unitriangular"])
        response = self.client.get("/api/skew-qs/", {"shape": "2,1,3", "skew": "1,3"})
        self.assertEqual(response.status_code, 200)

    def test_structure(self):
        self.assertEqual(self.client.get("/api/classes/", {"shape": "2,2"}).json()["data"]["count"], 2)
        self.assertEqual(self.client.get("/api/orbit/", {"tableau": "2,1/4,3"}).json()["data"]["size"], 1)
        response = self.client.get("/api/module/", {"shape": "2,2"})
        self.assertEqual(response.json()["data"]["dimension"], 2)
        response = self.client.get("/api/skew-enumerate/", {"shape": "2,1,3", "skew": "1,3"})
        self.assertEqual(response.json()["data"]["count"], 1)

    def test_counts(self):
        response = self.client.get("/api/counts/", {"family": "threes", "k": "3"})
        self.assertTrue(response.json()["data"]["match"])
        self.assertEqual(self.client.get("/api/counts/", {"k": "x"}).status_code, 400)
