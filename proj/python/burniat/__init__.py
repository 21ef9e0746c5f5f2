"""Python access to the burniat checker.

The heavy lifting happens in the compiled ``_core`` module; this wrapper
decodes its JSON output.
"""

import json

from ._core import (
    Error,
    ParseError,
    ValidationError,
    __version__,
    builtin_names,
    numeric,
    run_cli,
    table_text,
)
from . import _core


def verify(family):
    """Checker report for one built-in family as a dict."""
    return json.loads(_core.verify_json(family))


def verify_all():
    return [verify(name) for name in builtin_names()]


def check(scenario):
    """Checker report for a custom scenario (dict or JSON text)."""
    text = scenario if isinstance(scenario, str) else json.dumps(scenario)
    return json.loads(_core.check_json(text))


def table(which, format="json"):
    text = table_text(which, format)
    return json.loads(text) if format == "json" else text


def diff(which):
    return json.loads(_core.diff_text(which, "json"))


__all__ = [
    "Error",
    "ParseError",
    "ValidationError",
    "__version__",
    "builtin_names",
    "check",
    "diff",
    "numeric",
    "run_cli",
    "table",
    "table_text",
    "verify",
    "verify_all",
]
