"""Brute-force reference implementations used only by the tests.

None of these share code with the package: partitions are produced by
filtering multisets, class membership scans every admissible ``(j, i)`` or
``s`` literally, and products are multiplied out term by term.
"""
from collections import Counter
from itertools import combinations_with_replacement


def partitions_bruteforce(n):
    """All partitions of n as sorted-descending tuples, by filtering multisets."""
    if n == 0:
        return {()}
    out = set()
    for length in range(1, n + 1):
        for combo in combinations_with_replacement(range(1, n + 1), length):
            if sum(combo) == n:
                out.add(tuple(sorted(combo, reverse=True)))
    return out


def count_partitions(n, largest=None):
    """p(n) by the classical 'largest part' recursion."""
    largest = n if largest is None else largest
    if n == 0:
        return 1
    return sum(count_partitions(n - k, k) for k in range(1, min(n, largest) + 1))


def b_member(parts, p, r, a, m, v):
    """Scan every (j, i) with 0 <= j < v, 0 <= i < m (m=None for unbounded)."""
    base = p * r + a
    for c in Counter(parts).values():
        ok = False
        for j in range(v):
            rest = c - j * base
            if rest >= 0 and rest % p == 0 and (m is None or rest // p <= m - 1):
                ok = True
        if not ok:
            return False
    return True


def e_member(parts, p, r, a, m):
    base = p * r + a
    mod = p * base
    for x in set(parts):
        divisible = x % p == 0 and (m is None or x % (p * m) != 0)
        residue = any((x + s * base) % mod == 0 for s in range(1, p))
        if not (divisible or residue):
            return False
    return True


def poly_mul(a, b, N):
    out = [0] * (N + 1)
    for i, x in enumerate(a[: N + 1]):
        for j, y in enumerate(b[: N + 1 - i]):
            out[i + j] += x * y
    return out


def product_oracle(factors, N):
    """prod (1 - q^k)^e by explicit polynomial multiplication; e < 0 uses the
    geometric series 1 + q^k + q^2k + ...."""
    c = [1] + [0] * N
    for k, e in factors:
        if k > N:
            continue
        if e > 0:
            poly = [0] * (N + 1)
            poly[0], poly[k] = 1, -1
        else:
            poly = [1 if i % k == 0 else 0 for i in range(N + 1)]
        for _ in range(abs(e)):
            c = poly_mul(c, poly, N)
    return c


def squares_mod(p):
    return {y * y % p for y in range(p)}


def partition_counts_dp(N):
    """p(0..N) by the coin-change dynamic program over part sizes."""
    ways = [1] + [0] * N
    for k in range(1, N + 1):
        for n in range(k, N + 1):
            ways[n] += ways[n - k]
    return ways
