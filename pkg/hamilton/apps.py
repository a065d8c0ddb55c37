from django.apps import AppConfig


class HamiltonConfig(AppConfig):
    name = 'hamilton'
    verbose_name = 'Hamiltonian double rays and circles'
