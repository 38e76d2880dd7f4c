from django.apps import AppConfig


class HappConfig(AppConfig):
    name = "happ"
    verbose_name = "0-Hecke action on reverse composition tableaux"
