from rest_framework.decorators import api_view
from rest_framework.response import Response

from happ.app_views.tableau_view import _status_code
from happ.classes.class_service import ClassService
from happ.classes.logs.logs import Logs
from happ.classes.module_service import ModuleService
from happ.classes.poset_service import PosetService


def _optional_int(value):
    return None if value in (None, "") else int(value)


@api_view(['GET'])
def api_classes(request):
    """
    Equivalence classes of ?shape=… with sources, sinks and DRN sets.
    """
    try:
        shape = request.GET.get("shape")
        if shape is None:
            return Response({"status": "error", "message": "missing_parameters"}, status=400)

        with_members = request.GET.get("members", "").lower() in ("1", "true", "yes")
        result = ClassService.classes(shape=shape, with_members=with_members)
        return Response(result, status=_status_code(result))

    except Exception as e:
        Logs.hecke_technical_logger("api_classes_failed", exc_info=e)
        return Response({"status": "error", "message": "server_error"}, status=500)


@api_view(['GET'])
def api_poset(request):
    try:
        shape = request.GET.get("shape")
        if shape is None:
            return Response({"status": "error", "message": "missing_parameters"}, status=400)

        try:
            class_index = _optional_int(request.GET.get("class"))
        except ValueError:
            return Response({"status": "error", "message": "invalid_class"}, status=400)

        result = PosetService.poset(shape=shape, inner=request.GET.get("skew", ""), class_index=class_index)
        return Response(result, status=_status_code(result))

    except Exception as e:
        Logs.hecke_technical_logger("api_poset_failed", exc_info=e)
        return Response({"status": "error", "message": "server_error"}, status=500)


@api_view(['GET'])
def api_module(request):
    """
    Basis and generator matrices of 𝐒_α, a class module or a skew module.
    """
    try:
        shape = request.GET.get("shape")
        if shape is None:
            return Response({"status": "error", "message": "missing_parameters"}, status=400)

        try:
            class_index = _optional_int(request.GET.get("class"))
        except ValueError:
            return Response({"status": "error", "message": "invalid_class"}, status=400)

        result = ModuleService.module(shape=shape, inner=request.GET.get("skew", ""), class_index=class_index)
        return Response(result, status=_status_code(result))

    except Exception as e:
        Logs.hecke_technical_logger("api_module_failed", exc_info=e)
        return Response({"status": "error", "message": "server_error"}, status=500)
