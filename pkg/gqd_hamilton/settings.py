"""
Django settings for gqd_hamilton project.

The project has no database-backed models; Django supplies the settings layer,
logging configuration, management commands and the test runner.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv(BASE_DIR / '.env')

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'django-insecure-gqd-hamilton-local-key')

DEBUG = os.getenv('DJANGO_DEBUG', '0') == '1'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'core',
    'abelian',
    'gqd',
    'walls',
    'cayley',
    'hamilton',
    'verify',
]

MIDDLEWARE = []

# Nothing is persisted; the dummy backend keeps the test runner from creating databases.
DATABASES = {}

# Only the serializers are used; no requests are authenticated.
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
}


def _env_int(name, default):
    value = os.getenv(f'GQD_{name}')
    return int(value) if value else default


# Budgets and defaults for constructions and verification
GQD_HAMILTON = {
    'ENUMERATION_BOUND': _env_int('ENUMERATION_BOUND', 4096),
    'WINDOW_VERTEX_BUDGET': _env_int('WINDOW_VERTEX_BUDGET', 1_000_000),
    'FINITE_PATH_BOUND': _env_int('FINITE_PATH_BOUND', 256),
    'COVERAGE_BOUND': _env_int('COVERAGE_BOUND', 100_000),
    'SEARCH_NODE_BUDGET': _env_int('SEARCH_NODE_BUDGET', 200_000),
    'MAX_PERIOD_MULTIPLE': _env_int('MAX_PERIOD_MULTIPLE', 6),
    'DEFAULT_RADIUS': _env_int('DEFAULT_RADIUS', 12),
    'DEFAULT_INNER_RADIUS': _env_int('DEFAULT_INNER_RADIUS', 10),
    'RECURSION_DEPTH_LIMIT': _env_int('RECURSION_DEPTH_LIMIT', 32),
}


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
    'root': {
        'handlers': ['console'],
        'level': os.getenv('GQD_LOG_LEVEL', 'WARNING'),
    },
}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True
