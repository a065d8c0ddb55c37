from django.apps import AppConfig


class AbelianConfig(AppConfig):
    name = 'abelian'
    verbose_name = 'Finite abelian groups and lattices'
