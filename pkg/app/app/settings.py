"""
Django settings for the blaschke-factorization project.

The project has no web surface; Django provides settings, the
management-command CLI and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""
import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


SECRET_KEY = os.environ.get(
    'DJANGO_SECRET_KEY',
    'blaschke-factorization-local-key-not-used-for-signing'
)

DEBUG = bool(int(os.environ.get('DJANGO_DEBUG', '0')))

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'core',
    'monodromy',
    'factorization',
]

# No persistence: the dummy backend is used.
DATABASES = {}

# Serializers only; no request handling, so no users or authentication.
REST_FRAMEWORK = {
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
    'UNAUTHENTICATED_USER': None,
}

USE_TZ = True

TIME_ZONE = 'UTC'


# Numerical configuration
# Every key may be overridden by the environment variable BLASCHKE_<KEY>.

BLASCHKE = {
    'ROOT_POLISH': 1e-12,
    'RESIDUAL': 1e-8,
    'CLUSTER': 1e-9,
    'UNIMODULAR': 1e-12,
    'POLE': 1e-14,
    'ROOT_ITERATIONS': 500,
    'FIBER_RESIDUAL': 1e-11,
    'SEPARATION': 1e-6,
    'MAX_STEP': 0.02,
    'NEWTON_ITERATIONS': 10,
    'BISECTION_DEPTH': 40,
    'COLLISION': 1e-9,
    'BLOCK_SPREAD': 1e-9,
    'PARTITION': 1e-7,
    'MOBIUS_FIT': 1e-7,
    'ENUMERATION_CAP': 200000,
    'MAX_DEGREE': 16,
    'GRID': 200,
    'SEED': 0,
    'RANDOM_RADIUS': 0.8,
    'WORKERS': 1,
}

for _key, _default in BLASCHKE.items():
    _value = os.environ.get(f'BLASCHKE_{_key}')
    if _value is not None:
        BLASCHKE[_key] = type(_default)(_value)


# Logging
# https://docs.djangoproject.com/en/4.2/topics/logging/

LOG_LEVEL = os.environ.get('BLASCHKE_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'core': {'handlers': ['console'], 'level': LOG_LEVEL},
        'monodromy': {'handlers': ['console'], 'level': LOG_LEVEL},
        'factorization': {'handlers': ['console'], 'level': LOG_LEVEL},
    },
}
