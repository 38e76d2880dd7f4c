from rest_framework.decorators import api_view
from rest_framework.response import Response

from happ.app_views.tableau_view import _status_code
from happ.classes.expansion_service import ExpansionService
from happ.classes.logs.logs import Logs


@api_view(['GET'])
def api_quasisymmetric_schur(request):
    try:
        shape = request.GET.get("shape")
        if shape is None:
            return Response({"status": "error", "message": "missing_parameters"}, status=400)

        result = ExpansionService.quasisymmetric_schur(shape=shape)
        return Response(result, status=_status_code(result))

    except Exception as e:
        Logs.hecke_technical_logger("api_quasisymmetric_schur_failed", exc_info=e)
        return Response({"status": "error", "message": "server_error"}, status=500)


@api_view(['GET'])
def api_canonical(request):
    """
    Canonical expansion of ?shape=…, or the transition matrix for ?n=… .
    """
    try:
        shape = request.GET.get("shape")
        n = request.GET.get("n")
        if shape is None and n is None:
            return Response({"status": "error", "message": "missing_parameters"}, status=400)

        if shape is not None:
            result = ExpansionService.canonical(shape=shape)
        else:
            try:
                n = int(n)
            except ValueError:
                return Response({"status": "error", "message": "invalid_n"}, status=400)
            result = ExpansionService.transition_matrix(n=n)

        return Response(result, status=_status_code(result))

    except Exception as e:
        Logs.hecke_technical_logger("api_canonical_failed", exc_info=e)
        return Response({"status": "error", "message": "server_error"}, status=500)


@api_view(['GET'])
def api_skew_quasisymmetric_schur(request):
    try:
        shape = request.GET.get("shape")
        skew = request.GET.get("skew")
        if shape is None or skew is None:
            return Response({"status": "error", "message": "missing_parameters"}, status=400)

        result = ExpansionService.skew(shape=shape, inner=skew)
        return Response(result, status=_status_code(result))

    except Exception as e:
        Logs.hecke_technical_logger("api_skew_quasisymmetric_schur_failed", exc_info=e)
        return Response({"status": "error", "message": "server_error"}, status=500)
