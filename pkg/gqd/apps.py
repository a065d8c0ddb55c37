from django.apps import AppConfig


class GqdConfig(AppConfig):
    name = 'gqd'
    verbose_name = 'Two-ended generalized quasi-dihedral groups'
