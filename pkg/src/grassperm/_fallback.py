"""Pure-Python scan kernels.

Same contract as grassperm._speedups; used when the compiled module is
unavailable.  Everything here is an exhaustive count over a family too
large for comfort in Python, so the loops are kept deliberately flat.

Members of the one-descent family are scanned via bitmasks: the set
bits of a mask form the rising block placed first, the clear bits
follow in rising order.  Masks whose bits form a prefix 1..d all
produce the identity, which is handled once, separately.
"""

from __future__ import annotations

# Scan guards: 2^26 masks or 12! permutations is already minutes of
# work in C; refuse sizes that could not finish in reasonable time.
MAX_SCAN_SIZE = 26
MAX_FULL_SN_SIZE = 12


def _check_scan_size(n: int) -> None:
    if not 1 <= n <= MAX_SCAN_SIZE:
        raise ValueError(f"scan size {n} outside 1..{MAX_SCAN_SIZE}")


def count_grassmannian_avoiding_increasing(m: int, k: int) -> int:
    """Count one-descent permutations of size m with no rising
    subsequence of length k, by exhaustive scan."""
    _check_scan_size(m)
    if k < 1:
        raise ValueError(f"pattern length {k} must be at least 1")
    total = 1 if m < k else 0  # identity
    limit = k - 1
    for mask in range(1, 1 << m):
        if mask & (mask + 1) == 0:
            continue  # prefix mask: identity again
        # longest rising run = m - d + max(0, max_i (2i - a_i)) where
        # a_1 < ... < a_d are the set-bit values and i their ranks
        bits = mask
        i = 0
        best = 0
        while bits:
            low = bits & -bits
            i += 1
            t = 2 * i - low.bit_length()
            if t > best:
                best = t
            bits ^= low
        if m - i + best <= limit:
            total += 1
    return total


def count_grassmannian_avoiders(n: int, sigma: tuple[int, ...]) -> int:
    """Count one-descent permutations of size n containing no
    occurrence of the pattern sigma, by exhaustive scan."""
    _check_scan_size(n)
    k = len(sigma)
    if k < 1:
        raise ValueError("pattern must be non-empty")
    rising = all(sigma[i] < sigma[i + 1] for i in range(k - 1))
    if rising:
        # rising patterns reduce to a longest-rising-run bound, which
        # dodges the matcher's worst case
        return count_grassmannian_avoiding_increasing(n, k)
    total = 1  # identity avoids any non-rising pattern
    if k > n:
        return total + (1 << n) - n - 1
    lo, hi = _neighbor_tables(sigma)
    perm = [0] * n
    for mask in range(1, 1 << n):
        if mask & (mask + 1) == 0:
            continue
        w = 0
        for v in range(1, n + 1):
            if mask >> (v - 1) & 1:
                perm[w] = v
                w += 1
        for v in range(1, n + 1):
            if not mask >> (v - 1) & 1:
                perm[w] = v
                w += 1
        if not _matches(perm, sigma, lo, hi):
            total += 1
    return total


def _neighbor_tables(sigma: tuple[int, ...]) -> tuple[list[int], list[int]]:
    # lo[t]/hi[t]: earlier pattern index holding the tightest value
    # below/above sigma[t], or -1; checking those two neighbors is
    # enough to extend an order-isomorphic match by one letter
    k = len(sigma)
    lo = [-1] * k
    hi = [-1] * k
    for t in range(k):
        for s in range(t):
            if sigma[s] < sigma[t]:
                if lo[t] == -1 or sigma[s] > sigma[lo[t]]:
                    lo[t] = s
            else:
                if hi[t] == -1 or sigma[s] < sigma[hi[t]]:
                    hi[t] = s
    return lo, hi


def _matches(p, sigma, lo, hi) -> bool:
    n = len(p)
    k = len(sigma)
    chosen = [0] * k

    def extend(t: int, start: int) -> bool:
        last = n - (k - t) + 1
        for i in range(start, last):
            v = p[i]
            if lo[t] != -1 and v <= chosen[lo[t]]:
                continue
            if hi[t] != -1 and v >= chosen[hi[t]]:
                continue
            chosen[t] = v
            if t + 1 == k or extend(t + 1, i + 1):
                return True
        return False

    return extend(0, 0)


def count_sn_avoiding_321_2143(n: int) -> int:
    """Count permutations of size n, one-descent or not, avoiding both
    321 and 2143, by scanning the whole symmetric group."""
    if n < 1 or n > MAX_FULL_SN_SIZE:
        raise ValueError(f"full scan size {n} outside 1..{MAX_FULL_SN_SIZE}")
    from itertools import permutations

    total = 0
    for p in permutations(range(1, n + 1)):
        # one pass for 321: track the running max and the best bottom
        # of a falling pair seen so far
        m1 = 0
        m2 = 0
        ok = True
        for v in p:
            if v < m2:
                ok = False
                break
            if v < m1:
                if v > m2:
                    m2 = v
            else:
                m1 = v
        if ok and not _contains_2143(p):
            total += 1
    return total


def _contains_2143(p) -> bool:
    n = len(p)
    big = n + 1
    # mintop[t]: smallest top of a falling pair ending at or before t
    best = big
    mintop = [big] * n
    for t in range(n):
        pt = p[t]
        for i in range(t):
            if p[i] > pt and p[i] < best:
                best = p[i]
        mintop[t] = best
    for a in range(1, n):
        cut = mintop[a - 1]
        if cut == big:
            continue
        pa = p[a]
        for b in range(a + 1, n):
            if cut < p[b] < pa:
                return True
    return False
