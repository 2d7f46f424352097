from django.apps import AppConfig


class EulerparkerConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'eulerparker'
