from django.apps import AppConfig


class FactorizationConfig(AppConfig):
    name = 'factorization'
