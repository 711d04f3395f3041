"""Enumeration caps. ``CARDMAT_SIZE_LIMIT`` overrides every default."""

import os

BIPARTITION_LIMIT = 20
ENUMERATION_LIMIT = 24
BRUTEFORCE_LIMIT = 20
EXHAUSTIVE_AXIOM_LIMIT = 16


def size_limit(default, override=None):
    if override is not None:
        return override
    env = os.environ.get("CARDMAT_SIZE_LIMIT")
    if env:
        return int(env)
    return default
