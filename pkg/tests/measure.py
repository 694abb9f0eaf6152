import logging
import time
import types
from typing import Optional, Type

LOGGER = logging.getLogger("pystringc")


class TimerError(Exception):
    "Raised when a timer is started twice or stopped before it is started."


class Timer:
    "Reports the duration of a classification run or catalog sweep."

    _name: str
    _start_time: Optional[float]
    elapsed: Optional[float]

    def __init__(self, name: str) -> None:
        self._name = name
        self._start_time = None
        self.elapsed = None

    def start(self) -> None:
        if self._start_time is not None:
            raise TimerError("timer is running; use `stop()` to stop it")

        self._start_time = time.perf_counter()

    def stop(self) -> float:
        "Stops the timer, and logs and returns the elapsed time in seconds."

        if self._start_time is None:
            raise TimerError("timer is not running; use `start()` to start it")

        self.elapsed = time.perf_counter() - self._start_time
        self._start_time = None
        LOGGER.info(f"{self._name} took {self.elapsed:0.3f}s")
        return self.elapsed

    def __enter__(self) -> "Timer":
        self.start()
        return self

    def __exit__(
        self,
        exc_type: Optional[Type[BaseException]],
        exc_val: Optional[BaseException],
        exc_tb: Optional[types.TracebackType],
    ) -> None:
        self.stop()
