"""Run the Django test suite under pytest, as ``manage.py test`` would."""
import os
import sys

APP_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'app')
if APP_DIR not in sys.path:
    sys.path.insert(0, APP_DIR)
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')

import django  # noqa: E402

django.setup()

_state = {}


def pytest_sessionstart(session):
    from django.test.runner import DiscoverRunner
    from django.test.utils import setup_test_environment

    setup_test_environment()
    runner = DiscoverRunner(verbosity=0, interactive=False)
    _state['runner'] = runner
    _state['old_config'] = runner.setup_databases()


def pytest_sessionfinish(session, exitstatus):
    from django.test.utils import teardown_test_environment

    runner = _state.get('runner')
    if runner is not None:
        runner.teardown_databases(_state['old_config'])
        teardown_test_environment()
