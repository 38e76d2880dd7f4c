from rest_framework.decorators import api_view
from rest_framework.response import Response

from happ.app_views.tableau_view import _status_code
from happ.classes.count_service import CountService
from happ.classes.logs.logs import Logs


@api_view(['GET'])
def api_counts(request):
    """
    ?family=threes&k=3 checks one member; a family alone (or nothing)
    returns the configured table.
    """
    try:
        family = request.GET.get("family")
        parameter = {}
        for name in ("k", "n"):
            value = request.GET.get(name)
            if value is None:
                continue
            try:
                parameter[name] = int(value)
            except ValueError:
                return Response({"status": "error", "message": f"invalid_{name}"}, status=400)

        if family and parameter:
            result = CountService.count(family, **parameter)
        else:
            result = CountService.table(family)
        return Response(result, status=_status_code(result))

    except Exception as e:
        Logs.hecke_technical_logger("api_counts_failed", exc_info=e)
        return Response({"status": "error", "message": "server_error"}, status=500)
