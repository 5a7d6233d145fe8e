import os

DEFAULT_LIMIT = 1_000_000


def default_limit() -> int:
    """Size bound for lattices and searches; ``LATVAL_LIMIT`` overrides it."""
    raw = os.environ.get("LATVAL_LIMIT")
    if raw:
        return int(raw)
    return DEFAULT_LIMIT
