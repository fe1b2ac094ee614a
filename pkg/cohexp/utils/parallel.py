from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def thread_map(fn: Callable[[T], R], items: Iterable[T], threads: int = 1) -> list[R]:
    """Map in a worker pool; results come back in input order."""
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def chunked(size: int, parts: int) -> list[range]:
    """Split range(size) into at most ``parts`` contiguous pieces."""
    parts = max(1, min(parts, size)) if size else 1
    step, extra = divmod(size, parts)
    chunks, start = [], 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        chunks.append(range(start, stop))
        start = stop
    return chunks


def all_chunks(
    predicate: Callable[[range], bool], size: int, threads: int = 1
) -> bool:
    """Conjunction of ``predicate`` over a partition of range(size)."""
    pieces: Sequence[range] = chunked(size, max(threads, 1))
    return all(thread_map(predicate, pieces, threads))
