from django.apps import AppConfig


class CwsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'cws'
    verbose_name = 'CWS Codes'
