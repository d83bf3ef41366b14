"""Named q-expansions and exact number-theoretic helpers.

All series come back as FracPowerSeries with explicit truncation.  Conventions:
q = e(tau); eta carries its q^(1/24) prefactor; E_k is normalized to constant
term 1 (E_2 = 1 - 24q - ... is the quasimodular weight-2 series).
"""

from fractions import Fraction
from functools import lru_cache

from .qseries import FracPowerSeries

# -- Bernoulli ---------------------------------------------------------


@lru_cache(maxsize=None)
def bernoulli_number(m):
    """B_m with B_1 = -1/2, via the defining recurrence."""
    if m == 0:
        return Fraction(1)
    # sum_{j=0}^{m} C(m+1, j) B_j = 0
    s = Fraction(0)
    for j in range(m):
        s += _binom(m + 1, j) * bernoulli_number(j)
    return -s / _binom(m + 1, m)


def _binom(n, k):
    if k < 0:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


@lru_cache(maxsize=None)
def _bernoulli_poly_coeffs(m):
    # B_m(x) = sum_k C(m,k) B_{m-k} x^k
    return tuple(_binom(m, k) * bernoulli_number(m - k) for k in range(m + 1))


def bernoulli_poly(m, x):
    x = Fraction(x)
    out = Fraction(0)
    for k, c in enumerate(_bernoulli_poly_coeffs(m)):
        out += c * x ** k
    return out


def periodic_bernoulli(m, x):
    """B_m(x mod 1), except the weight-1 case vanishes at integers."""
    x = Fraction(x)
    frac = x - (x.numerator // x.denominator)
    if m == 1 and frac == 0:
        return Fraction(0)
    return bernoulli_poly(m, frac)


# -- divisor sums and Eisenstein series --------------------------------


def sigma(n, k):
    out = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            out += d ** k
            if d != n // d:
                out += (n // d) ** k
        d += 1
    return out


def eisenstein_series(k, prec):
    """E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n through q^(prec-1) + O(q^prec)."""
    assert k >= 2 and k % 2 == 0
    factor = Fraction(-2 * k) / bernoulli_number(k)
    coeffs = {Fraction(0): Fraction(1)}
    for n in range(1, prec):
        coeffs[Fraction(n)] = factor * sigma(n, k - 1)
    return FracPowerSeries(coeffs, prec)


def eta_series(prec, scale=1):
    """eta(scale * tau) = q^(scale/24) prod (1 - q^(scale n)), via pentagonal numbers."""
    scale = Fraction(scale)
    coeffs = {}
    k = 0
    while True:
        for kk in ([0] if k == 0 else [k, -k]):
            e = scale * Fraction(kk * (3 * kk - 1), 2)
            if e < prec:
                coeffs[e + scale / 24] = Fraction((-1) ** (kk % 2))
        if scale * Fraction(k * (3 * k - 1), 2) >= prec and \
           scale * Fraction(k * (3 * k + 1), 2) >= prec:
            break
        k += 1
    return FracPowerSeries(coeffs, Fraction(prec) + scale / 24)


def eta_quotient(factors, prec):
    """prod eta(s*tau)^e for (s, e) pairs; exponents may be negative."""
    out = FracPowerSeries.one()
    # build numerator/denominator separately so truncations stay tight
    for s, e in factors:
        base = eta_series(prec + 4, s)  # headroom: quotient shifts the horizon
        out = out * base ** e
    return out.truncate(prec)


def delta_series(prec):
    return eta_series(prec + 2) ** 24


def j_series(prec):
    e4 = eisenstein_series(4, prec + 2)
    return (e4 ** 3 / delta_series(prec + 2)).truncate(prec)


# -- Hurwitz class numbers ---------------------------------------------


@lru_cache(maxsize=None)
def hurwitz_class_number(n):
    """H(n): weighted class count of positive binary quadratic forms of
    discriminant -n (all forms, not only primitive).  H(0) = -1/12."""
    if n == 0:
        return Fraction(-1, 12)
    if n < 0 or n % 4 in (1, 2):
        return Fraction(0)
    total = Fraction(0)
    b = n % 2
    while b * b <= n:
        rem = n + b * b
        # forms a x^2 + b xy + c y^2, reduced: |b| <= a <= c, b >= 0 if |b| = a or a = c
        a = max(b, 1)
        while 4 * a * a <= rem:
            if rem % (4 * a) == 0:
                c = rem // (4 * a)
                if b == 0 or a == b or a == c:
                    # boundary forms counted once (b >= 0 representative)
                    if a == c and b == 0:
                        total += Fraction(1, 2)   # multiple of x^2 + y^2
                    elif a == b == c:
                        total += Fraction(1, 3)   # multiple of x^2 + xy + y^2
                    else:
                        total += 1
                else:
                    total += 2  # +-b give distinct reduced forms
            a += 1
        b += 2
    return total


def hurwitz_series(prec):
    """sum H(n) q^n, the weight 3/2 Eisenstein-type generating series."""
    return FracPowerSeries({Fraction(n): hurwitz_class_number(n)
                            for n in range(prec)}, prec)


def zagier_g1(prec):
    """The weight-3/2 pair: e0 sum H(4n) q^n + e1 sum H(4n-1) q^(n-1/4),
    as a vector-valued form on the rank-1 lattice with Gram [-2]."""
    from .lattice import EvenLattice
    from .weilrep import VectorValuedForm

    lat = EvenLattice([[-2]], name="A1(-1)")
    comp0 = FracPowerSeries({Fraction(n): hurwitz_class_number(4 * n)
                             for n in range(prec)}, prec)
    comp1 = FracPowerSeries(
        {Fraction(4 * n - 1, 4): hurwitz_class_number(4 * n - 1)
         for n in range(1, prec + 1) if Fraction(4 * n - 1, 4) < prec},
        prec)
    disc = lat.discriminant_form()
    comps = {}
    for cls in disc.classes():
        comps[cls] = comp1 if disc.q_value(cls) == Fraction(3, 4) else comp0
    return VectorValuedForm(lat, weight=Fraction(3, 2), components=comps, parity=0)
