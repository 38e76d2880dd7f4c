from rest_framework.decorators import api_view
from rest_framework.response import Response

from happ.classes.logs.logs import Logs
from happ.classes.tableau_service import TableauService
from happ.combinat.errors import USAGE_REASONS


def _status_code(result):
    if result["status"] == "error" and result["message"] in USAGE_REASONS:
        return 400
    return 200


@api_view(['GET'])
def api_enumerate(request):
    """
    All SRCTs of ?shape=…, optionally only the canonical class.
    """
    try:
        shape = request.GET.get("shape")
        if shape is None:
            return Response({"status": "error", "message": "missing_parameters"}, status=400)

        columns_increasing = request.GET.get("columns_increasing", "").lower() in ("1", "true", "yes")
        result = TableauService.enumerate(shape=shape, columns_increasing=columns_increasing)
        return Response(result, status=_status_code(result))

    except Exception as e:
        Logs.hecke_technical_logger("api_enumerate_failed", exc_info=e)
        return Response({"status": "error", "message": "server_error"}, status=500)


@api_view(['GET'])
def api_enumerate_skew(request):
    try:
        shape = request.GET.get("shape")
        skew = request.GET.get("skew")
        if shape is None or skew is None:
            return Response({"status": "error", "message": "missing_parameters"}, status=400)

        result = TableauService.enumerate_skew(shape=shape, inner=skew)
        return Response(result, status=_status_code(result))

    except Exception as e:
        Logs.hecke_technical_logger("api_enumerate_skew_failed", exc_info=e)
        return Response({"status": "error", "message": "server_error"}, status=500)


@api_view(['GET'])
def api_orbit(request):
    """
    Flip orbit of ?tableau=5,4,2/8,7,6,3/… .
    """
    try:
        tableau = request.GET.get("tableau")
        if not tableau:
            return Response({"status": "error", "message": "missing_parameters"}, status=400)

        result = TableauService.orbit(tableau=tableau)
        return Response(result, status=_status_code(result))

    except Exception as e:
        Logs.hecke_technical_logger("api_orbit_failed", exc_info=e)
        return Response({"status": "error", "message": "server_error"}, status=500)
