from happ.classes.logs.logs import Logs
from happ.classes.shape_inputs import ShapeInputs
from happ.combinat.equivalence import equivalence_classes
from happ.combinat.errors import CombinatError
from happ.combinat.modrep import (
    Verdict,
    build_class_module,
    build_module,
    build_skew_module,
    characteristic,
    indecomposability_verdict,
    relations_report,
    restrict_and_verify,
)


class ModuleService:

    @classmethod
    def module(cls, shape: str, inner: str = "", class_index=None):
        """
        Basis tableaux and dense 0/1 generator matrices of 𝐒_α, of one class
        module 𝐒_{α,E} (class_index, 1-based) or of the skew module 𝐒_{α//β}.
        """
        try:
            if inner:
                module = build_skew_module(ShapeInputs.skew(shape, inner))
            elif class_index is not None:
                classes = equivalence_classes(ShapeInputs.shape(shape))
                if not 1 <= class_index <= len(classes):
                    raise CombinatError(f"class {class_index} out of range 1..{len(classes)}")
                module = build_class_module(classes[class_index - 1])
            else:
                module = build_module(ShapeInputs.shape(shape))

            data = module.to_json()
            data["basis_text"] = [str(tableau) for tableau in module.basis]
            data["characteristic"] = characteristic(module).to_json()
            data["relations"] = relations_report(module).to_json()
            Logs.hecke_logger(f"Built module {module.label} of dimension {module.dimension}")
            return {"status": "success", "message": "module_built", "data": data}
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"module_failed_shape_{shape}_inner_{inner}", exc_info=e)
            return {"status": "fail", "message": "module_failed"}

    @classmethod
    def verdict(cls, shape: str):
        try:
            report = indecomposability_verdict(ShapeInputs.shape(shape))
            if report.verdict is Verdict.INCONCLUSIVE:
                Logs.hecke_technical_logger(
                    f"indecomposability_inconclusive_shape_{shape}_commutant_{report.commutant_dimension}"
                )
            data = report.to_json()
            data["consistent"] = report.consistent
            Logs.hecke_logger(f"Verdict for {shape}: {report.verdict.value}")
            return {"status": "success", "message": "verdict_computed", "data": data}
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"verdict_failed_shape_{shape}", exc_info=e)
            return {"status": "fail", "message": "verdict_failed"}

    @classmethod
    def restriction(cls, shape: str, m: int):
        try:
            alpha = ShapeInputs.shape(shape)
            if not 0 <= m <= alpha.size:
                raise CombinatError(f"m={m} must lie in 0..{alpha.size}")
            report = restrict_and_verify(alpha, m)
            Logs.hecke_logger(f"Restriction of {alpha} at m={m}: ok={report.ok}")
            return {"status": "success", "message": "restriction_checked", "data": report.to_json()}
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"restriction_failed_shape_{shape}_m_{m}", exc_info=e)
            return {"status": "fail", "message": "restriction_failed"}
