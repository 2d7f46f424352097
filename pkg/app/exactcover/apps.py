from django.apps import AppConfig


class ExactcoverConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'exactcover'
