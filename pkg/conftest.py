import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "heckeproject.settings")
django.setup()
