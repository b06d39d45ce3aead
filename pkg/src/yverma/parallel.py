"""Order-preserving map with an optional thread pool.

Results are returned in input order regardless of worker count, so any
computation built on ``pmap`` is byte-for-byte reproducible across
``workers`` settings.  (Under CPython's GIL the pool changes scheduling,
not arithmetic; the knob exists for interface stability.)
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

A = TypeVar("A")
B = TypeVar("B")


def pmap(fn: Callable[[A], B], items: Iterable[A], workers: int = 1) -> list[B]:
    seq: Sequence[A] = list(items)
    if workers <= 1 or len(seq) <= 1:
        return [fn(x) for x in seq]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, seq))
