"""Pure-Python path-consistency kernel (fallback for the compiled one)."""
from __future__ import annotations

from collections import deque

BACKEND = "python"


def path_consistency(cells: bytearray, n: int, table: bytes, conv: bytes) -> bool:
    """Refine the n*n row-major bitset matrix ``cells`` in place.

    Returns False as soon as any constraint becomes empty.
    """
    for i in range(n):
        d = i * n + i
        cells[d] &= 0x80
        if not cells[d]:
            return False
    queued = bytearray(n * n)
    queue = deque()
    for i in range(n):
        for j in range(i + 1, n):
            queue.append((i, j))
            queued[i * n + j] = 1
    while queue:
        i, j = queue.popleft()
        queued[i * n + j] = 0
        cij = cells[i * n + j]
        for k in range(n):
            if k == i or k == j:
                continue
            ik = i * n + k
            t = cells[ik] & table[(cij << 8) | cells[j * n + k]]
            if t != cells[ik]:
                if not t:
                    return False
                cells[ik] = t
                cells[k * n + i] = conv[t]
                a, b = (i, k) if i < k else (k, i)
                if not queued[a * n + b]:
                    queued[a * n + b] = 1
                    queue.append((a, b))
            kj = k * n + j
            t = cells[kj] & table[(cells[k * n + i] << 8) | cij]
            if t != cells[kj]:
                if not t:
                    return False
                cells[kj] = t
                cells[j * n + k] = conv[t]
                a, b = (k, j) if k < j else (j, k)
                if not queued[a * n + b]:
                    queued[a * n + b] = 1
                    queue.append((a, b))
    return True
