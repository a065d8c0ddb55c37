from django.apps import AppConfig


class CayleyConfig(AppConfig):
    name = 'cayley'
    verbose_name = 'Cayley graphs and case analysis'
