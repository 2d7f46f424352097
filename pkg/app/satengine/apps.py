from django.apps import AppConfig


class SatengineConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'satengine'
