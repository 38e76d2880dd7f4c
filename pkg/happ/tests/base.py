import shutil
import tempfile

from django.test import SimpleTestCase, override_settings
from hypothesis import strategies as st

from happ.combinat.compositions import Composition


class HeckeTestCase(SimpleTestCase):
    """Sends log files to a scratch directory for the duration of a class."""

    @classmethod
    def setUpClass(cls):
        cls._log_dir = tempfile.mkdtemp(prefix="hecke-logs-")
        cls._log_override = override_settings(HECKE_LOG_DIR=cls._log_dir, HECKE_WORKERS=1)
        cls._log_override.enable()
        super().setUpClass()

    @classmethod
    def tearDownClass(cls):
        super().tearDownClass()
        cls._log_override.disable()
        shutil.rmtree(cls._log_dir, ignore_errors=True)


@st.composite
def compositions(draw, max_size=6, min_size=1):
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    parts = []
    remaining = n
    while remaining:
        part = draw(st.integers(min_value=1, max_value=remaining))
        parts.append(part)
        remaining -= part
    return Composition(tuple(parts))


EXAMPLE_ROWS = ((5, 4, 2), (8, 7, 6, 3), (11, 10, 1), (12, 9))
HECKE_EXAMPLE_ROWS = ((5, 4, 2), (9, 7, 6, 3), (10, 1), (12, 11, 8))
