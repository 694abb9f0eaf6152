import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

LOGGER = logging.getLogger("pystringc")


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """
    Applies a function to each item, dispatching calls to a thread pool.

    Results are returned in the order of the input items regardless of the order in which workers finish.

    :param fn: A regular (synchronous) function of a single argument.
    :param items: Arguments to pass to the function.
    :param workers: Number of worker threads; with a single worker, calls run in the current thread.
    """

    if not callable(fn):
        raise TypeError("expected: a callable")
    if workers < 1:
        raise ValueError(f"expected: a positive worker count; got: {workers}")

    arguments = list(items)
    if workers == 1 or len(arguments) < 2:
        return [fn(argument) for argument in arguments]

    LOGGER.debug(f"dispatching {len(arguments)} tasks to {workers} workers")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, arguments))
