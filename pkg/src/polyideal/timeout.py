"""Wall-clock limits for long computations."""

from __future__ import annotations

import signal
import threading
from contextlib import contextmanager

from .errors import Timeout


@contextmanager
def time_limit(seconds: float | None):
    """Raise :class:`Timeout` if the body runs longer than ``seconds``.

    Uses ``SIGALRM``, so the limit is only enforced on the main thread of
    a POSIX process; elsewhere (or with ``seconds`` of ``None``/``0``) the
    body simply runs unbounded.
    """
    armed = (
        seconds
        and hasattr(signal, "setitimer")
        and threading.current_thread() is threading.main_thread()
    )
    if not armed:
        yield
        return

    def fire(signum, frame):
        raise Timeout(f"exceeded {seconds:g} s")

    previous = signal.signal(signal.SIGALRM, fire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, previous)
