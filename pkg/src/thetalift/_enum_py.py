"""Pure-Python short-vector kernel (big integers, no overflow concerns).

Consumes the integerized Fincke-Pohst data prepared by enumeration._setup and
runs the same recursion as the compiled kernel.  Deterministic: coordinates are
scanned ascending from the last level inward.
"""

from math import isqrt


def run(plan, want_vectors):
    """Return (counts, vectors).

    counts: dict {scaled_norm_int: count} with scaled_norm = S * (v+o)^T G (v+o).
    vectors: list of (coords tuple, scaled_norm_int) or None if not requested.
    """
    n = plan["n"]
    BS = plan["BS"]
    if n == 0:
        return ({0: 1}, [((), 0)] if want_vectors else None)
    DS = plan["DS"]
    M = plan["M"]
    MO = plan["MO"]
    CM = plan["CM"]  # CM[i][j] for j > i, stored as full rows with zeros
    OC = plan["OC"]

    counts = {}
    vectors = [] if want_vectors else None
    v = [0] * n
    lo = [0] * n
    hi = [0] * n
    K = [0] * n
    T = [0] * (n + 1)
    T[n] = BS

    def enter(i):
        # center numerator K_i from already-chosen v_{i+1..n-1}
        k = MO[i]
        CMi = CM[i]
        OCi = OC[i]
        for j in range(i + 1, n):
            k += CMi[j] * v[j] + OCi[j]
        K[i] = k
        t = T[i + 1]
        ds = DS[i]
        r = isqrt(t // ds)
        while ds * (r + 1) * (r + 1) <= t:
            r += 1
        m = M[i]
        lo[i] = -((r + k) // m)       # ceil((-r - k)/m)
        hi[i] = (r - k) // m
        v[i] = lo[i]

    i = n - 1
    enter(i)
    while True:
        if v[i] > hi[i]:
            i += 1
            if i == n:
                break
            v[i] += 1
            continue
        w = M[i] * v[i] + K[i]
        t = T[i + 1] - DS[i] * w * w
        if t < 0:
            # cannot happen: range is exact.  Defensive.
            v[i] += 1
            continue
        if i == 0:
            key = BS - t
            counts[key] = counts.get(key, 0) + 1
            if want_vectors:
                vectors.append((tuple(v), key))
            v[0] += 1
        else:
            T[i] = t
            i -= 1
            enter(i)
    return counts, vectors
