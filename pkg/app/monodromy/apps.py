from django.apps import AppConfig


class MonodromyConfig(AppConfig):
    name = 'monodromy'
