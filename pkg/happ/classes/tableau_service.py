from happ.classes.logs.logs import Logs
from happ.classes.shape_inputs import ShapeInputs
from happ.combinat.errors import CombinatError
from happ.combinat.hecke import orbit, pi
from happ.combinat.tableaux import enumerate_skew_srct, enumerate_srct, growth_word, parse_tableau


class TableauService:

    @classmethod
    def enumerate(cls, shape: str, columns_increasing: bool = False):
        """
        All SRCTs of a straight shape in column-word order.
        """
        try:
            alpha = ShapeInputs.shape(shape)
            tableaux = enumerate_srct(alpha, columns_increasing=columns_increasing)
            Logs.hecke_logger(f"Enumerated {len(tableaux)} SRCTs of shape {alpha}")
            return {
                "status": "success",
                "message": "tableaux_enumerated",
                "data": {
                    "shape": alpha.to_json(),
                    "columns_increasing": columns_increasing,
                    "count": len(tableaux),
                    "tableaux": [str(tableau) for tableau in tableaux],
                },
            }
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"enumerate_failed_shape_{shape}", exc_info=e)
            return {"status": "fail", "message": "enumerate_failed"}

    @classmethod
    def enumerate_skew(cls, shape: str, inner: str):
        try:
            skew = ShapeInputs.skew(shape, inner)
            tableaux = enumerate_skew_srct(skew)
            Logs.hecke_logger(f"Enumerated {len(tableaux)} skew SRCTs of shape {skew}")
            return {
                "status": "success",
                "message": "skew_tableaux_enumerated",
                "data": {
                    "shape": skew.to_json(),
                    "count": len(tableaux),
                    "tableaux": [str(tableau) for tableau in tableaux],
                },
            }
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"enumerate_skew_failed_shape_{shape}_inner_{inner}", exc_info=e)
            return {"status": "fail", "message": "enumerate_skew_failed"}

    @classmethod
    def orbit(cls, tableau: str):
        """
        Forward orbit of a tableau under the swapping flips, plus the action of
        every π_i on the tableau itself.
        """
        try:
            start = parse_tableau(tableau)
            ShapeInputs.check_size(start.n, "n")
            members = orbit(start)
            data = {
                "tableau": str(start),
                "descent_set": sorted(start.descent_set()),
                "action": [cls._step_json(i, pi(i, start)) for i in range(1, start.n)],
                "size": len(members),
                "orbit": [str(member) for member in members],
            }
            if start.is_straight:
                data["growth_word"] = growth_word(start).to_json()
            Logs.hecke_logger(f"Orbit of {start} has {len(members)} members")
            return {"status": "success", "message": "orbit_computed", "data": data}
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"orbit_failed_tableau_{tableau}", exc_info=e)
            return {"status": "fail", "message": "orbit_failed"}

    @staticmethod
    def _step_json(i, step):
        return {
            "generator": i,
            "kind": step.kind.value,
            "tableau": None if step.tableau is None else str(step.tableau),
        }
