"""Utils."""
import logging
import os
from typing import Optional

from splice_indices.exceptions import IndexOverflowError

L = logging.getLogger(__name__)

THREADS_ENV = 'SPLICE_INDICES_THREADS'

UINT64_MAX = 2**64 - 1


def worker_count(requested: Optional[int] = None) -> int:
    """Returns the number of workers to use.

    The value of the SPLICE_INDICES_THREADS environment variable caps the result. Without a
    request, one worker per CPU is used.

    Args:
        requested: the number of workers asked for by the caller (None means no preference)
    """
    count = requested or os.cpu_count() or 1
    cap = os.environ.get(THREADS_ENV)
    if cap:
        try:
            count = min(count, max(1, int(cap)))
        except ValueError:
            L.warning('Ignoring invalid %s value: %r', THREADS_ENV, cap)
    return max(1, count)


def check_uint64(value: int, name: str) -> int:
    """Returns value if it fits in an unsigned 64-bit integer, raises otherwise."""
    if value < 0 or value > UINT64_MAX:
        raise IndexOverflowError(f'{name} = {value} does not fit in an unsigned 64-bit integer')
    return value
