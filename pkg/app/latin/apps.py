from django.apps import AppConfig


class LatinConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'latin'
