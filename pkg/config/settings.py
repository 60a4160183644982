"""
Django settings for the CWS diagonal-distance project.

The project has no web surface: Django provides settings, logging
configuration and the management-command CLI. Every budget below can be
overridden through the environment or a .env file (python-decouple).
"""

from pathlib import Path

from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = config('DJANGO_SECRET_KEY', default='cws-lab-offline-only-key')

DEBUG = config('DJANGO_DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    # Third party
    'rest_framework',
    # Local apps
    'core',
    'gf2',
    'graphs',
    'pauli',
    'diagdist',
    'structure',
    'cws',
    'search',
    'reports',
]

# Reports are rendered with DRF serializers only; no views are routed.
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNAUTHENTICATED_USER': None,
}


# Database
# Nothing is persisted; the sqlite default only keeps Django's checks quiet.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

USE_TZ = True

TIME_ZONE = 'UTC'


# Search and verification budgets

CWS_ORACLE_MAX_N = config('CWS_ORACLE_MAX_N', default=24, cast=int)
CWS_COMPATIBILITY_MAX_N = config('CWS_COMPATIBILITY_MAX_N', default=16, cast=int)
CWS_CLIQUE_EXACT_MAX_VERTICES = config('CWS_CLIQUE_EXACT_MAX_VERTICES', default=4096, cast=int)
CWS_CLIQUE_TIME_BUDGET = config('CWS_CLIQUE_TIME_BUDGET', default=60.0, cast=float)
CWS_CLIQUE_GREEDY_RESTARTS = config('CWS_CLIQUE_GREEDY_RESTARTS', default=32, cast=int)
CWS_DISTANCE_WEIGHT_CAP = config('CWS_DISTANCE_WEIGHT_CAP', default=0, cast=int)
CWS_DIFFERENCE_SET_MAX_PAIRS = config('CWS_DIFFERENCE_SET_MAX_PAIRS', default=1_000_000, cast=int)
CWS_ZERO_SUM_MAX_COLUMNS = config('CWS_ZERO_SUM_MAX_COLUMNS', default=40, cast=int)
CWS_ZERO_SUM_MAX_PARTIALS = config('CWS_ZERO_SUM_MAX_PARTIALS', default=2_000_000, cast=int)
CWS_CODE_CORPUS_MAX_N = config('CWS_CODE_CORPUS_MAX_N', default=8, cast=int)
CWS_DEFAULT_SEED = config('CWS_DEFAULT_SEED', default=1, cast=int)
CWS_REPORT_SCHEMA_VERSION = config('CWS_REPORT_SCHEMA_VERSION', default='1.0')


# Logging
# Reports go to stdout, so every log record is sent to stderr.

CWS_LOG_LEVEL = config('CWS_LOG_LEVEL', default='INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s %(message)s',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        app: {'handlers': ['stderr'], 'level': CWS_LOG_LEVEL, 'propagate': False}
        for app in ('core', 'gf2', 'graphs', 'pauli', 'diagdist', 'structure', 'cws', 'search', 'reports')
    },
}
