"""Fractional derivatives of Radon transforms and slicing inequalities."""

import json as _json

from ._radonfd import *  # noqa: F401,F403
from ._radonfd import __version__, verify as _verify


def verify_json(check, **settings):
    """Run a verification suite and return the parsed JSON document."""
    return _json.loads(_verify(check, {k: str(v) for k, v in settings.items()}))
