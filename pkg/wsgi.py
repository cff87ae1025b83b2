"""WSGI entry point for serving the JSON API with gunicorn.

    gunicorn -w 2 -b 127.0.0.1:8000 wsgi:application

URL_PREFIX mounts the API below a path such as /ifs (anything outside it is a
404). BEHIND_PROXY=1 trusts one hop of X-Forwarded-* headers.
"""

import os
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from werkzeug.exceptions import NotFound
from werkzeug.middleware.dispatcher import DispatcherMiddleware
from werkzeug.middleware.proxy_fix import ProxyFix

from web.app import app


def build_application(prefix: str = '', behind_proxy: bool = False):
    """The Flask app, optionally mounted under ``prefix`` and behind a proxy."""
    prefix = prefix.rstrip('/')
    wsgi_app = DispatcherMiddleware(NotFound(), {prefix: app}) if prefix else app
    if behind_proxy:
        wsgi_app = ProxyFix(wsgi_app, x_for=1, x_proto=1, x_host=1, x_prefix=1)
    return wsgi_app


application = build_application(
    os.environ.get('URL_PREFIX', ''),
    os.environ.get('BEHIND_PROXY', '').lower() in ('1', 'true', 'yes'),
)

if __name__ == "__main__":
    app.run()
