from happ.classes.logs.logs import Logs
from happ.classes.shape_inputs import ShapeInputs
from happ.combinat.compositions import is_simple
from happ.combinat.equivalence import canonical_class, equivalence_classes
from happ.combinat.errors import CombinatError


class ClassService:

    @classmethod
    def classes(cls, shape: str, with_members: bool = False):
        """
        Equivalence classes of SRCT(α) with their sources, sinks and DRN sets.
        Index is 1-based in source column-word order.
        """
        try:
            alpha = ShapeInputs.shape(shape)
            classes = equivalence_classes(alpha)
            canonical = canonical_class(alpha)
            rows = []
            for index, srct_class in enumerate(classes, start=1):
                row = {"index": index, "canonical": srct_class.key == canonical.key}
                row.update(srct_class.to_json(with_members=with_members))
                row["source_text"] = str(srct_class.source)
                row["sink_text"] = str(srct_class.sink)
                rows.append(row)

            Logs.hecke_logger(f"Shape {alpha} splits into {len(classes)} classes")
            return {
                "status": "success",
                "message": "classes_computed",
                "data": {
                    "shape": alpha.to_json(),
                    "simple": is_simple(alpha),
                    "tableau_cyclic": len(classes) == 1,
                    "count": len(classes),
                    "classes": rows,
                },
            }
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"classes_failed_shape_{shape}", exc_info=e)
            return {"status": "fail", "message": "classes_failed"}
