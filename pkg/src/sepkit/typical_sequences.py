"""Canonical integer-sequence reduction and majorization."""

from __future__ import annotations

from typing import Sequence


def _check(seq: Sequence[int]) -> tuple[int, ...]:
    a = tuple(seq)
    if not a:
        raise ValueError("sequence must be nonempty")
    if any(not isinstance(x, int) or x < 0 for x in a):
        raise ValueError("sequence entries must be non-negative integers")
    return a


def _collapse_repeats(a: tuple[int, ...]) -> tuple[int, ...]:
    out = [a[0]]
    for x in a[1:]:
        if x != out[-1]:
            out.append(x)
    return tuple(out)


def _removable_window(a: tuple[int, ...]) -> tuple[int, int] | None:
    """Largest (i, j) whose strict interior lies between a[i] and a[j]; leftmost on ties."""
    best = None
    for i in range(len(a)):
        for j in range(i + 2, len(a)):
            inner = a[i + 1 : j]
            lo, hi = min(a[i], a[j]), max(a[i], a[j])
            if all(lo <= x <= hi for x in inner):
                if best is None or j - i > best[1] - best[0]:
                    best = (i, j)
    return best


def typical(seq: Sequence[int]) -> tuple[int, ...]:
    """Reduce to the unique fixpoint of repeat removal and window removal."""
    a = _check(seq)
    while True:
        a = _collapse_repeats(a)
        w = _removable_window(a)
        if w is None:
            return a
        i, j = w
        a = a[: i + 1] + a[j:]


def majorizes(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff a and b extend by element repetition to a' <= b' pointwise."""
    a = _check(a)
    b = _check(b)
    n, m = len(a), len(b)
    reach = [[False] * m for _ in range(n)]
    reach[0][0] = a[0] <= b[0]
    for i in range(n):
        for j in range(m):
            if not reach[i][j]:
                continue
            if i + 1 < n and a[i + 1] <= b[j]:
                reach[i + 1][j] = True
            if j + 1 < m and a[i] <= b[j + 1]:
                reach[i][j + 1] = True
            if i + 1 < n and j + 1 < m and a[i + 1] <= b[j + 1]:
                reach[i + 1][j + 1] = True
    return reach[n - 1][m - 1]


def _extension_is_typical(a: Sequence[int]) -> bool:
    """No repeat and no removable window ends at the last position."""
    j = len(a) - 1
    if a[j] == a[j - 1]:
        return False
    for i in range(j - 1):
        inner = a[i + 1 : j]
        lo, hi = min(a[i], a[j]), max(a[i], a[j])
        if all(lo <= x <= hi for x in inner):
            return False
    return True


def enumerate_typical(k: int, limit: int = 6) -> list[tuple[int, ...]]:
    """All fixpoints of `typical` over values {0..k}, in lexicographic DFS order.

    Every prefix of a fixpoint is itself one, so a DFS that only extends
    sequences staying irreducible enumerates them all; lengths stay below
    2k+2 for free.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > limit:
        raise ValueError(f"enumerate_typical limited to k <= {limit} (got {k})")
    out: list[tuple[int, ...]] = []
    cap = 2 * k + 1

    def grow(prefix: tuple[int, ...]) -> None:
        out.append(prefix)
        if len(prefix) > cap:
            raise AssertionError("typical sequence exceeded the 2k+1 length bound")
        for v in range(k + 1):
            cand = prefix + (v,)
            if len(cand) >= 2 and not _extension_is_typical(cand):
                continue
            grow(cand)

    for v in range(k + 1):
        grow((v,))
    return out
