"""
WSGI entry point of heckeproject: serves the read-only JSON endpoints of happ.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'heckeproject.settings')

application = get_wsgi_application()
