"""Realism monotones for quantum states, backed by the C++ core."""

import json as _json

from ._vqr import *  # noqa: F401,F403
from ._vqr import VqrError, audit_json, verify_json


def audit(trials=200, seed=1):
    return _json.loads(audit_json(trials, seed))


def verify(trials=100, seed=1):
    return _json.loads(verify_json(trials, seed))


__all__ = [name for name in dir() if not name.startswith("_")]
