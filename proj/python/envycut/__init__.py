"""Envy-free cake cutting on the Kuhn triangulation.

Thin wrappers over the C++ core. Instances and reports are plain dicts in the
same JSON shapes the ``envycut`` command-line tool reads and writes.
"""

import json

try:
    from . import _envycut
except ImportError:
    import _envycut

EnvycutError = _envycut.EnvycutError

__all__ = ["EnvycutError", "gen", "solve", "stromquist", "verify"]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def solve(instance, n=0, epsilon="", k="", algo="dnc", trace=False, timeout=0.0):
    """Return ``(report, exit_code)``; exit code 5 means verification failed."""
    report, code = _envycut.solve(_text(instance), n, str(epsilon), str(k), algo, trace, timeout)
    return json.loads(report), code


def verify(instance, solution):
    """Return ``(report, exit_code)``; exit code 5 means not envy-free."""
    report, code = _envycut.verify(_text(instance), _text(solution))
    return json.loads(report), code


def gen(kind="dp", n=64, seed=0, d=2, delta="1/1000000"):
    return json.loads(_envycut.gen(kind, n, seed, d, str(delta)))


def stromquist(instance=None, adversary="", queries=0, seed=0, outside=False, list_queries=False):
    text = "" if instance is None else _text(instance)
    report, code = _envycut.stromquist(text, adversary, queries, seed, outside, list_queries)
    return json.loads(report), code
