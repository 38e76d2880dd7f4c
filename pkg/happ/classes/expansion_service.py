from happ.classes.logs.logs import Logs
from happ.classes.shape_inputs import ShapeInputs
from happ.combinat.errors import CombinatError
from happ.combinat.qsym import (
    canonical_qsym,
    canonical_transition_matrix,
    quasisymmetric_schur,
    skew_quasisymmetric_schur,
)


class ExpansionService:
    """
    Fundamental-basis expansions of the quasisymmetric Schur, canonical and
    skew functions. Payloads carry both the text lines and the JSON map.
    """

    @staticmethod
    def _payload(label, function):
        return {
            "shape": label,
            "degree": function.degree,
            "terms": len(function.items()),
            "lines": function.to_lines(),
            "expansion": function.to_json(),
        }

    @classmethod
    def quasisymmetric_schur(cls, shape: str):
        try:
            alpha = ShapeInputs.shape(shape)
            function = quasisymmetric_schur(alpha)
            Logs.hecke_logger(f"Quasisymmetric Schur expansion of {alpha}: {len(function.items())} terms")
            return {
                "status": "success",
                "message": "expansion_computed",
                "data": cls._payload(str(alpha), function),
            }
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"qs_failed_shape_{shape}", exc_info=e)
            return {"status": "fail", "message": "qs_failed"}

    @classmethod
    def canonical(cls, shape: str):
        try:
            alpha = ShapeInputs.shape(shape)
            function = canonical_qsym(alpha)
            Logs.hecke_logger(f"Canonical expansion of {alpha}: {len(function.items())} terms")
            return {
                "status": "success",
                "message": "expansion_computed",
                "data": cls._payload(str(alpha), function),
            }
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"canonical_failed_shape_{shape}", exc_info=e)
            return {"status": "fail", "message": "canonical_failed"}

    @classmethod
    def transition_matrix(cls, n: int):
        """
        Canonical-over-fundamental transition matrix for all compositions of n.
        """
        try:
            if n < 1:
                raise CombinatError(f"n must be positive, got {n}")
            ShapeInputs.check_size(n)
            matrix = canonical_transition_matrix(n)
            Logs.hecke_logger(f"Canonical transition matrix for n={n}")
            return {"status": "success", "message": "transition_matrix_computed", "data": matrix.to_json()}
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"transition_matrix_failed_n_{n}", exc_info=e)
            return {"status": "fail", "message": "transition_matrix_failed"}

    @classmethod
    def skew(cls, shape: str, inner: str):
        try:
            pair = ShapeInputs.skew(shape, inner)
            function = skew_quasisymmetric_schur(pair)
            Logs.hecke_logger(f"Skew expansion of {pair}: {len(function.items())} terms")
            return {
                "status": "success",
                "message": "expansion_computed",
                "data": cls._payload(str(pair), function),
            }
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"skew_qs_failed_shape_{shape}_inner_{inner}", exc_info=e)
            return {"status": "fail", "message": "skew_qs_failed"}
