"""Pure-Python product kernel, used when the compiled extension is missing."""
from __future__ import annotations

from typing import Iterable, Sequence


def apply_factors(coeffs: Sequence[int], factors: Iterable[tuple[int, int]]) -> list[int]:
    """Multiply a truncated series by ``prod (1 - q^k)^e`` over ``(k, e)``.

    Negative ``e`` divides.  The truncation is ``len(coeffs) - 1``; factors
    with ``k`` beyond it are the identity.
    """
    c = [int(x) for x in coeffs]
    N = len(c) - 1
    for k, e in factors:
        if k < 1:
            raise ValueError(f"factor exponent k must be >= 1, got {k}")
        if k > N:
            continue
        if e > 0:
            for _ in range(e):
                for i in range(N, k - 1, -1):
                    c[i] -= c[i - k]
        else:
            for _ in range(-e):
                for i in range(k, N + 1):
                    c[i] += c[i - k]
    return c
