from django.conf import settings

from happ.combinat.compositions import Composition, SkewShapePair
from happ.combinat.errors import SizeLimitError


class ShapeInputs:
    """
    Turns request and command-line text into core objects. Everything that
    reaches the core through a service passes the HECKE_MAX_N guard here.
    """

    @classmethod
    def max_n(cls):
        return getattr(settings, "HECKE_MAX_N", 12)

    @classmethod
    def check_size(cls, n, what="n"):
        if n > cls.max_n():
            raise SizeLimitError(f"{what}={n} exceeds HECKE_MAX_N={cls.max_n()}")
        return n

    @classmethod
    def shape(cls, text):
        alpha = Composition.parse(text)
        cls.check_size(alpha.size, f"|{alpha}|")
        return alpha

    @classmethod
    def skew(cls, outer_text, inner_text):
        outer = cls.shape(outer_text)
        inner = Composition.parse(inner_text or "")
        return SkewShapePair(outer, inner)
