"""Division graphs of finite groups.

Thin wrappers over the C++ core. Each call returns the parsed JSON artifact
the command-line tool would print, or raises DivgraphError on a nonzero exit.
"""

import json

from . import _core

__all__ = ["DivgraphError", "run", "divisions", "division_graph", "compare", "analyze",
           "an_divisions", "listing", "commands"]

listing = _core.listing
commands = _core.commands


class DivgraphError(RuntimeError):
    def __init__(self, status, message):
        super().__init__(message.strip())
        self.status = status


def run(command, *catalogs, inputs=(), format="json", **options):
    status, out, err = _core.run(command, list(catalogs), list(inputs), format, **options)
    if status != 0 and not out:
        raise DivgraphError(status, err)
    return json.loads(out) if format == "json" else out


def divisions(descriptor):
    return run("divisions", descriptor)


def division_graph(descriptor, format="json"):
    return run("division-graph", descriptor, format=format)


def compare(a, b):
    return run("compare", a, b)["result"]


def analyze(descriptor):
    return run("analyze", descriptor)


def an_divisions(degree):
    return run("an-divisions", degree=degree)
