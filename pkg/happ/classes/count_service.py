from happ.classes.logs.logs import Logs
from happ.classes.shape_inputs import ShapeInputs
from happ.combinat.errors import CombinatError
from happ.combinat.shifted import (
    FAMILIES,
    class_bijection,
    count_formulas,
    threes_structure_check,
    truncated_match_search,
)
from happ.configs.sweep_bounds import SweepBounds


class CountService:

    @staticmethod
    def _guard(family, parameter):
        """Bound the size of the shapes a family asks for."""
        n, k = parameter.get("n", 1), parameter.get("k", 1)
        if family in ("threes", "truncated_threes"):
            ShapeInputs.check_size(3 * k, "3k")
        elif family in ("staircase_double", "staircase_truncated"):
            ShapeInputs.check_size(n * (n + 3) // 2, "n(n+3)/2")
        elif family == "rectangle":
            ShapeInputs.check_size(n * k, "nk")

    @classmethod
    def count(cls, family: str, **parameter):
        """
        Closed form against enumeration for one family member.
        """
        try:
            if family not in FAMILIES:
                raise CombinatError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
            cls._guard(family, parameter)
            report = count_formulas(family, **parameter)
            Logs.hecke_logger(f"Count {family} {parameter}: formula={report.formula} enumerated={report.enumerated}")
            return {"status": "success", "message": "count_computed", "data": report.to_json()}
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"count_failed_{family}_{parameter}", exc_info=e)
            return {"status": "fail", "message": "count_failed"}

    @classmethod
    def table(cls, family=None):
        """
        Every configured member of one family, or of all families, as rows.
        """
        try:
            families = [family] if family else list(FAMILIES)
            rows = []
            for name in families:
                if name not in FAMILIES:
                    raise CombinatError(f"unknown family {name!r}")
                for parameter in SweepBounds.count_parameters(name):
                    cls._guard(name, parameter)
                    rows.append(count_formulas(name, **parameter).to_json())
            ok = all(row["match"] for row in rows)
            Logs.hecke_logger(f"Count table for {', '.join(families)}: {len(rows)} rows, ok={ok}")
            return {
                "status": "success",
                "message": "count_table_computed",
                "data": {
                    "ok": ok,
                    "rows": rows,
                    "witness": next((row for row in rows if not row["match"]), None),
                },
            }
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"count_table_failed_{family}", exc_info=e)
            return {"status": "fail", "message": "count_table_failed"}

    @classmethod
    def bijection(cls, shape: str):
        try:
            report = class_bijection(ShapeInputs.shape(shape))
            Logs.hecke_logger(f"Shifted bijection for {shape}: ok={report.ok}")
            return {"status": "success", "message": "bijection_checked", "data": report.to_json()}
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"bijection_failed_shape_{shape}", exc_info=e)
            return {"status": "fail", "message": "bijection_failed"}

    @classmethod
    def threes_structure(cls, k: int):
        try:
            if k < 1:
                raise CombinatError(f"k must be positive, got {k}")
            ShapeInputs.check_size(3 * k, "3k")
            report = threes_structure_check(k)
            Logs.hecke_logger(f"Threes structure k={k}: ok={report.ok}")
            return {"status": "success", "message": "threes_structure_checked", "data": report.to_json()}
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"threes_structure_failed_k_{k}", exc_info=e)
            return {"status": "fail", "message": "threes_structure_failed"}

    @classmethod
    def search(cls, n: int):
        """
        Truncated shifted shapes whose counts match |E_α| for each α ⊨ n.
        """
        try:
            if n < 1:
                raise CombinatError(f"n must be positive, got {n}")
            ShapeInputs.check_size(n)
            rows = truncated_match_search(n)
            Logs.hecke_logger(f"Truncated match search n={n}: {len(rows)} shapes")
            return {"status": "success", "message": "search_completed", "data": {"n": n, "rows": rows}}
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"search_failed_n_{n}", exc_info=e)
            return {"status": "fail", "message": "search_failed"}
