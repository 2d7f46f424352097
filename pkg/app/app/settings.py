"""
Django settings for the orthogonal Latin squares project.

For more information on this file, see
https://docs.djangoproject.com/en/3.2/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/3.2/ref/settings/
"""
import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
# If secret key is not provided then use 'changme' for local development
SECRET_KEY = os.environ.get('SECRET_KEY', 'changme')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = bool(int(os.environ.get('DEBUG', 0)))

ALLOWED_HOSTS = []
# Accepting Comma separated list of host names
ALLOWED_HOSTS.extend(
    filter(
        None,
        os.environ.get('ALLOWED_HOSTS', '').split(','),
    )
)


# Application definition

MOLS_APPS = (
    'latin',
    'exactcover',
    'eulerparker',
    'encoder',
    'satengine',
    'hybrid',
    'core',
    'runs',
)

INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',
    'rest_framework',
    'drf_spectacular',
    *MOLS_APPS,
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'app.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.debug',
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]

WSGI_APPLICATION = 'app.wsgi.application'


# Database
# https://docs.djangoproject.com/en/3.2/ref/settings/#databases

# Postgres when a database host is configured, a local file otherwise
if os.environ.get('DB_HOST'):
    DATABASES = {
        'default': {
            'ENGINE': 'django.db.backends.postgresql',
            'HOST': os.environ.get('DB_HOST'),
            'NAME': os.environ.get('DB_NAME'),
            'USER': os.environ.get('DB_USER'),
            'PASSWORD': os.environ.get('DB_PASS'),
        }
    }
else:
    DATABASES = {
        'default': {
            'ENGINE': 'django.db.backends.sqlite3',
            'NAME': os.environ.get('DB_NAME', BASE_DIR / 'runs.sqlite3'),
        }
    }


# Internationalization
# https://docs.djangoproject.com/en/3.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_L10N = True

USE_TZ = True


# Static files (CSS, JavaScript, Images)
# https://docs.djangoproject.com/en/3.2/howto/static-files/

STATIC_URL = '/static/static/'
STATIC_ROOT = os.environ.get('STATIC_ROOT', '/vol/web/static')


# Default primary key field type
# https://docs.djangoproject.com/en/3.2/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Generate schema for apis
REST_FRAMEWORK = {
    'DEFAULT_SCHEMA_CLASS': 'drf_spectacular.openapi.AutoSchema',
}

SPECTACULAR_SETTINGS = {
    'TITLE': 'Orthogonal Latin squares',
    'COMPONENT_SPLIT_REQUEST': True,
}


def _env_value(name, default, cast=None):
    """Environment override for a setting, cast like its default."""
    raw = os.environ.get(name)
    if raw is None:
        return default
    if raw.strip().lower() in ('', 'none'):
        return None
    if isinstance(default, bool):
        return raw.strip().lower() in ('1', 'true', 'yes')
    if cast is None and default is not None:
        cast = type(default)
    return cast(raw) if cast else raw


# CDCL engine defaults, read by SolverOptions.from_settings()
SAT_ENGINE = {
    name: _env_value(name, default)
    for name, default in (
        ('VAR_DECAY', 0.95),
        ('RESTART_BASE', 64),
        ('REDUCE_BASE', 2000),
        ('REDUCE_INCREMENT', 300),
        ('KEEP_LBD', 2),
        ('EXTERNAL_RETENTION', 'forgettable'),
        ('DECISION_LOG_LIMIT', 64),
        ('VERIFY_MODELS', True),
        ('CHECK_WATCHES', False),
    )
}

# Hybrid search and bench defaults, read by HybridConfig.from_settings()
MOLS_SEARCH = {
    'EP_CONFLICT_THROTTLE': _env_value('EP_CONFLICT_THROTTLE', 1),
    'BLOCKED_MEMO_SIZE': _env_value('BLOCKED_MEMO_SIZE', 2 ** 20),
    # None leaves Euler-Parker unbounded
    'EP_NODE_BUDGET': _env_value('EP_NODE_BUDGET', None, int),
    # Seconds per run; None runs to completion
    'DEFAULT_TIMEOUT': _env_value('DEFAULT_TIMEOUT', None, float),
    'BENCH_JOBS': _env_value('BENCH_JOBS', 1),
}

MOLS_LOG_LEVEL = os.environ.get('MOLS_LOG_LEVEL', 'WARNING').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name} {process:d} {message}',
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
        name: {
            'handlers': ['console'],
            'level': MOLS_LOG_LEVEL,
            'propagate': False,
        }
        for name in MOLS_APPS
    },
}
