# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels.

Same contract as grassperm._fallback, which carries the algorithm
notes; keep the two in lockstep.  The tests drive both backends over
the same ranges.
"""

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

MAX_SCAN_SIZE = 26
MAX_FULL_SN_SIZE = 12


def count_grassmannian_avoiding_increasing(int m, int k):
    """Count one-descent permutations of size m with no rising
    subsequence of length k, by exhaustive scan."""
    if m < 1 or m > 26:
        raise ValueError(f"scan size {m} outside 1..26")
    if k < 1:
        raise ValueError(f"pattern length {k} must be at least 1")
    cdef long long total = 1 if m < k else 0
    cdef int limit = k - 1
    cdef unsigned long long top = (<unsigned long long> 1) << m
    cdef unsigned long long mask, bits, low
    cdef int i, t, best
    for mask in range(1, top):
        if mask & (mask + 1) == 0:
            continue  # prefix mask: identity, handled above
        bits = mask
        i = 0
        best = 0
        while bits:
            low = bits & (0 - bits)
            i += 1
            t = 2 * i - (__builtin_ctzll(low) + 1)
            if t > best:
                best = t
            bits ^= low
        if m - i + best <= limit:
            total += 1
    return total


def count_grassmannian_avoiders(int n, sigma):
    """Count one-descent permutations of size n containing no
    occurrence of the pattern sigma, by exhaustive scan."""
    if n < 1 or n > 26:
        raise ValueError(f"scan size {n} outside 1..26")
    cdef int k = len(sigma)
    if k < 1:
        raise ValueError("pattern must be non-empty")
    if k > 32:
        raise ValueError(f"pattern length {k} above 32")
    cdef int sig[32]
    cdef int lo[32]
    cdef int hi[32]
    cdef int s, t
    for t in range(k):
        sig[t] = sigma[t]
    cdef bint rising = True
    for t in range(k - 1):
        if sig[t] > sig[t + 1]:
            rising = False
            break
    if rising:
        return count_grassmannian_avoiding_increasing(n, k)
    cdef long long total = 1  # identity avoids any non-rising pattern
    if k > n:
        return total + ((<long long> 1) << n) - n - 1
    for t in range(k):
        lo[t] = -1
        hi[t] = -1
        for s in range(t):
            if sig[s] < sig[t]:
                if lo[t] == -1 or sig[s] > sig[lo[t]]:
                    lo[t] = s
            else:
                if hi[t] == -1 or sig[s] < sig[hi[t]]:
                    hi[t] = s
    cdef int perm[32]
    cdef int chosen[32]
    cdef unsigned long long topmask = (<unsigned long long> 1) << n
    cdef unsigned long long mask
    cdef int v, w
    for mask in range(1, topmask):
        if mask & (mask + 1) == 0:
            continue
        w = 0
        for v in range(1, n + 1):
            if (mask >> (v - 1)) & 1:
                perm[w] = v
                w += 1
        for v in range(1, n + 1):
            if not (mask >> (v - 1)) & 1:
                perm[w] = v
                w += 1
        if not _extend(perm, n, sig, lo, hi, chosen, k, 0, 0):
            total += 1
    return total


cdef bint _extend(int* p, int n, int* sig, int* lo, int* hi,
                  int* chosen, int k, int t, int start) nogil:
    cdef int i, v
    for i in range(start, n - (k - t) + 1):
        v = p[i]
        if lo[t] != -1 and v <= chosen[lo[t]]:
            continue
        if hi[t] != -1 and v >= chosen[hi[t]]:
            continue
        chosen[t] = v
        if t + 1 == k:
            return True
        if _extend(p, n, sig, lo, hi, chosen, k, t + 1, i + 1):
            return True
    return False


def count_sn_avoiding_321_2143(int n):
    """Count permutations of size n, one-descent or not, avoiding both
    321 and 2143, by scanning the whole symmetric group."""
    if n < 1 or n > 12:
        raise ValueError(f"full scan size {n} outside 1..12")
    cdef int p[16]
    cdef int mintop[16]
    cdef int i, j, t, a, b, m1, m2, v, pa, pt, cut, best
    cdef bint ok, contains
    cdef long long total = 0
    cdef int big = n + 1
    for i in range(n):
        p[i] = i + 1
    while True:
        m1 = 0
        m2 = 0
        ok = True
        for i in range(n):
            v = p[i]
            if v < m2:
                ok = False
                break
            if v < m1:
                if v > m2:
                    m2 = v
            else:
                m1 = v
        if ok:
            best = big
            contains = False
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
                    if cut < p[b] and p[b] < pa:
                        contains = True
                        break
                if contains:
                    break
            if not contains:
                total += 1
        i = n - 2
        while i >= 0 and p[i] >= p[i + 1]:
            i -= 1
        if i < 0:
            break
        j = n - 1
        while p[j] <= p[i]:
            j -= 1
        p[i], p[j] = p[j], p[i]
        a = i + 1
        b = n - 1
        while a < b:
            p[a], p[b] = p[b], p[a]
            a += 1
            b -= 1
    return total
