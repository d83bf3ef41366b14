"""Exact short-vector enumeration with kernel dispatch.

The search is recursive Fincke-Pohst over an exact rational LDL decomposition,
integerized so that every intermediate is an integer -- no floating point
anywhere in the bounding logic.  Two interchangeable kernels run the identical
recursion:

  * _enum_core (Cython, __int128 accumulators), used when a rigorous magnitude
    pre-check certifies that nothing can overflow;
  * _enum_py (Python big ints), always safe.

Selection happens per call from the import-time availability plus the
magnitude certificate; `kernel=` forces one for tests and benchmarks.
"""

from fractions import Fraction
from math import isqrt

from ._linalg import ldl_decomposition, mat_inverse_frac
from . import _enum_py

try:
    from . import _enum_core
    HAVE_EXT = True
except ImportError:  # pure-python install
    _enum_core = None
    HAVE_EXT = False

# coordinates and ranges must fit int64; plan data and worst-case products
# must fit a (signed) int128, which the kernel uses throughout
_INT64_LIMIT = 1 << 62
_INT128_LIMIT = 1 << 124


def _lcm(a, b):
    from math import gcd
    return a * b // gcd(a, b)


def _setup(gram, offset, bound):
    """Integerize: returns the plan dict shared by both kernels.

    Q(v+o) <= bound  with  Q from the positive-definite `gram`.
    Scaled so that T-values live in Z:  T = S*(bound - partial norm).
    """
    n = len(gram)
    bound = Fraction(bound)
    if bound < 0:
        bound = Fraction(0)
    offset = [Fraction(x) for x in (offset or [0] * n)]
    plan = {"n": n}
    if n == 0:
        plan.update({"BS": 0, "S": 1})
        return plan
    d, c = ldl_decomposition(gram)

    M = []
    for i in range(n):
        m = offset[i].denominator
        for j in range(i + 1, n):
            m = _lcm(m, (c[(i, j)] * offset[j]).denominator)
            m = _lcm(m, c[(i, j)].denominator)
        M.append(m)
    S = bound.denominator
    for i in range(n):
        S = _lcm(S, d[i].denominator * M[i] * M[i])

    DS = [int(S * d[i] / (M[i] * M[i])) for i in range(n)]
    MO = [int(M[i] * offset[i]) for i in range(n)]
    CM = [[0] * n for _ in range(n)]
    OC = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            CM[i][j] = int(M[i] * c[(i, j)])
            OC[i][j] = int(M[i] * c[(i, j)] * offset[j])
    BS = int(S * bound)
    plan.update({"DS": DS, "M": M, "MO": MO, "CM": CM, "OC": OC,
                 "BS": BS, "S": S})

    # rigorous magnitude certificate for the compiled kernel
    inv = mat_inverse_frac(gram)
    vmax = []
    for j in range(n):
        # |(v+o)_j| <= sqrt(bound * (G^-1)_jj); exact integer upper bound
        val = bound * inv[j][j]
        ub = isqrt(val.numerator // val.denominator) + 2
        vmax.append(ub + abs(int(offset[j])) + 2)
    kmax = []
    for i in range(n):
        k = abs(MO[i])
        for j in range(i + 1, n):
            k += abs(CM[i][j]) * vmax[j] + abs(OC[i][j])
        kmax.append(k)
    worst = BS
    for i in range(n):
        r = isqrt(BS // DS[i]) + 2 if DS[i] else 0
        w = r + M[i] * vmax[i] + kmax[i]
        worst = max(worst, DS[i] * w * w, M[i] * vmax[i] + kmax[i])
    plan["fits_c"] = (
        worst < _INT128_LIMIT
        and all(abs(x) < _INT128_LIMIT for x in DS + MO + M + [BS])
        and all(abs(CM[i][j]) < _INT128_LIMIT and abs(OC[i][j]) < _INT128_LIMIT
                for i in range(n) for j in range(n))
        and all(x < _INT128_LIMIT for x in kmax)
        and all(x < _INT64_LIMIT for x in vmax)
    )
    return plan


def _run(plan, want_vectors, kernel):
    if kernel == "auto":
        kernel = "c" if (HAVE_EXT and plan.get("fits_c", True)) else "python"
    if kernel == "c":
        if not HAVE_EXT:
            raise RuntimeError("compiled enumeration kernel not available")
        if not plan.get("fits_c", True):
            raise RuntimeError("inputs exceed the compiled kernel's certified range")
        if plan["n"] == 0:
            return {0: 1}, ([((), 0)] if want_vectors else None)
        return _enum_core.run(plan, want_vectors)
    if kernel != "python":
        raise ValueError("kernel must be auto, c or python")
    return _enum_py.run(plan, want_vectors)


def short_vector_counts(gram, offset, bound, kernel="auto"):
    """{norm: count} over v in Z^n with Q(v+offset) <= bound, norms exact Fractions."""
    plan = _setup(gram, offset, bound)
    counts, _ = _run(plan, False, kernel)
    S = plan.get("S", 1)
    return {Fraction(key, S): cnt for key, cnt in counts.items()}


def short_vectors(gram, offset, bound, kernel="auto"):
    """Sorted list of (coords tuple, norm Fraction); coords are the integer parts v."""
    plan = _setup(gram, offset, bound)
    counts, vecs = _run(plan, True, kernel)
    S = plan.get("S", 1)
    out = [(tuple(int(x) for x in v), Fraction(key, S)) for v, key in vecs]
    out.sort()
    return out
