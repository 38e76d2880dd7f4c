from happ.classes.logs.logs import Logs
from happ.classes.shape_inputs import ShapeInputs
from happ.combinat.equivalence import equivalence_classes
from happ.combinat.errors import CombinatError
from happ.combinat.posets import flip_poset, skew_flip_poset


class PosetService:

    @staticmethod
    def _describe(poset):
        payload = poset.to_json()
        payload["rank_vector"] = list(poset.rank_vector())
        payload["rank_symmetric"] = poset.is_rank_symmetric()
        payload["rank_unimodal"] = poset.is_rank_unimodal()
        payload["lattice"] = poset.is_lattice()
        return payload

    @classmethod
    def poset(cls, shape: str, inner: str = "", class_index=None):
        """
        Flip posets of the classes of a straight shape (one class when
        class_index is given, 1-based), or the single flip poset of a skew shape.
        """
        try:
            if inner:
                posets = [skew_flip_poset(ShapeInputs.skew(shape, inner))]
            else:
                classes = equivalence_classes(ShapeInputs.shape(shape))
                if class_index is not None:
                    if not 1 <= class_index <= len(classes):
                        raise CombinatError(f"class {class_index} out of range 1..{len(classes)}")
                    classes = [classes[class_index - 1]]
                posets = [flip_poset(srct_class) for srct_class in classes]

            Logs.hecke_logger(f"Built {len(posets)} flip posets for shape {shape} inner {inner!r}")
            return {
                "status": "success",
                "message": "posets_built",
                "data": {
                    "posets": [cls._describe(poset) for poset in posets],
                    "dot": "".join(poset.to_dot() for poset in posets),
                },
            }
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"poset_failed_shape_{shape}_inner_{inner}", exc_info=e)
            return {"status": "fail", "message": "poset_failed"}
