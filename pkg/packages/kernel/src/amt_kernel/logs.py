"""Logging helpers shared by the kernel modules."""

import logging

# Below DEBUG; used for per-candidate tracing during enumeration.
TRACE = 5

logging.addLevelName(TRACE, "TRACE")


def level_from_name(name: str) -> int:
    """Resolve a level name such as ``debug`` or ``trace`` to its numeric value."""
    resolved = logging.getLevelName(name.strip().upper())
    if not isinstance(resolved, int):
        msg = f"unknown log level: {name}"
        raise ValueError(msg)
    return resolved
