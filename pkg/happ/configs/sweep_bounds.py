class SweepBounds:
    """
    Default size bounds of the verification suites and count families.
    A suite sweeps every subject of size up to its bound.
    """

    SUITES = {
        "relations": 7,
        "characteristic": 7,
        "schur": 6,
        "classes": 7,
        "bruhat": 6,
        "indec": 6,
        "canonical": 6,
        "restriction": 5,
        "branching": 6,
        "coproduct": 6,
        "skew": 5,
        "bijection": 9,
        "conjecture": 7,
    }

    COUNTS = {
        "threes": [{"k": k} for k in range(1, 6)],
        "staircase_double": [{"n": n} for n in range(1, 4)],
        "staircase_truncated": [{"n": n} for n in range(2, 4)],
        "rectangle": [{"n": n, "k": k} for n in range(2, 11) for k in range(1, 6) if n * k <= 10],
        "truncated_threes": [{"k": k} for k in range(1, 5)],
    }

    @classmethod
    def suite_bound(cls, suite):
        return cls.SUITES.get(suite)

    @classmethod
    def count_parameters(cls, family):
        return cls.COUNTS.get(family, [])

    @classmethod
    def suite_names(cls):
        return list(cls.SUITES)
