from django.apps import AppConfig


class DiagdistConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'diagdist'
    verbose_name = 'Diagonal Distance'
