"""One line per acceptance criterion, printed at the end of the session."""

import time
from contextlib import contextmanager

RESULTS = []


@contextmanager
def criterion(number, title, limit):
    """Time the block; record PASS only when it finishes without error inside ``limit`` seconds."""
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        status = "PASS" if elapsed < limit else "FAIL (too slow)"
    finally:
        elapsed = time.perf_counter() - start
        line = f"criterion {number}: {status}  {title}  [{elapsed:.2f}s, limit {limit}s]"
        RESULTS.append(line)
        print(line)
    assert elapsed < limit, line
