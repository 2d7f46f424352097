from django.apps import AppConfig


class HybridAppConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'hybrid'
