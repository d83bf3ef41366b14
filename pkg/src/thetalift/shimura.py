"""Singular lifts of half-integral-weight coefficient streams.

The input is the coefficient stream c(n) of a form whose exponents are
supported on n = 0, 1 mod 4, together with the positive part m+ of the
signature.  The lifted coefficients are divisor sums

    b(n) = sum_{d | n} d^(m+ - 1) c(n^2 / d^2),

with constant term -c(0) B_{m+} / (2 m+).  Everything here is exact
integer/rational arithmetic; a second, independently coded summation path
exists purely for cross-checking.
"""

from fractions import Fraction
from math import comb, factorial, isqrt

from .modforms import bernoulli_number, delta_series, eisenstein_series
from .qseries import FracPowerSeries

_WEIGHT_ONE_MSG = (
    "m_plus = 1 adds an extra constant term that needs machinery beyond "
    "the divisor sums implemented here; supply m_plus >= 2")


class ShimuraInput:
    """Coefficient stream for a singular lift.

    stream maps integer exponents to rational coefficients (negative
    exponents describe the singularity and are carried but never summed);
    prec is the exponent through which the stream is complete, so absent
    keys <= prec mean coefficient zero and keys beyond prec are unknown.
    """

    __slots__ = ("m_plus", "stream", "prec")

    def __init__(self, m_plus, stream, prec):
        m_plus = int(m_plus)
        if m_plus < 1:
            raise ValueError("m_plus must be at least 1, got %d" % m_plus)
        prec = int(prec)
        clean = {}
        for n, v in stream.items():
            n = int(n)
            v = Fraction(v)
            if v and n % 4 in (2, 3):
                raise ValueError(
                    "coefficient at exponent %d = 2, 3 mod 4 must vanish" % n)
            if v:
                clean[n] = v
        self.m_plus = m_plus
        self.stream = clean
        self.prec = prec

    def coefficient(self, n):
        if n > self.prec:
            raise ValueError(
                "stream known through %d; coefficient at %d required"
                % (self.prec, n))
        return self.stream.get(n, Fraction(0))

    def __repr__(self):
        return "ShimuraInput(m_plus=%d, prec=%d, %d terms)" % (
            self.m_plus, self.prec, len(self.stream))


def lift_order(inp):
    """Largest n whose lifted coefficient the stream determines."""
    return isqrt(inp.prec) if inp.prec >= 1 else 0


def shimura_lift(inp, nmax=None):
    """Lifted coefficient series through q^nmax (divisor-sum path).

    nmax defaults to the largest order the stream supports; asking beyond
    it raises, since b(n) reads the stream at n^2.
    """
    if inp.m_plus == 1:
        raise ValueError(_WEIGHT_ONE_MSG)
    if nmax is None:
        nmax = lift_order(inp)
    if nmax * nmax > inp.prec:
        raise ValueError(
            "b(%d) needs the stream through %d, known through %d"
            % (nmax, nmax * nmax, inp.prec))
    m = inp.m_plus
    coeffs = {0: -inp.coefficient(0) * bernoulli_number(m) / (2 * m)}
    for n in range(1, nmax + 1):
        total = Fraction(0)
        for d in range(1, n + 1):
            if n % d == 0:
                total += d ** (m - 1) * inp.coefficient((n // d) ** 2)
        coeffs[n] = total
    return FracPowerSeries(coeffs, nmax + 1)


def shimura_lift_double_sum(inp, nmax=None):
    """Same lift, accumulated over all factorisations d*e <= nmax.

    Kept deliberately independent of shimura_lift: it never enumerates
    divisors, it scatters d^(m-1) c(e^2) onto b(d e) instead.
    """
    if inp.m_plus == 1:
        raise ValueError(_WEIGHT_ONE_MSG)
    if nmax is None:
        nmax = lift_order(inp)
    if nmax * nmax > inp.prec:
        raise ValueError(
            "b(%d) needs the stream through %d, known through %d"
            % (nmax, nmax * nmax, inp.prec))
    m = inp.m_plus
    coeffs = {n: Fraction(0) for n in range(nmax + 1)}
    coeffs[0] = -inp.coefficient(0) * bernoulli_number(m) / (2 * m)
    for d in range(1, nmax + 1):
        for e in range(1, nmax // d + 1):
            coeffs[d * e] += d ** (m - 1) * inp.coefficient(e * e)
    return FracPowerSeries(coeffs, nmax + 1)


def verify_eta_quotient(inp, through=None):
    """Compare the lift of the stream against 64 Delta / E4^2.

    The reference series is built from eta and Eisenstein data, nothing
    shared with the lift path.  Returns a report dict; when the stream runs
    out before the requested range the report says so instead of guessing.
    """
    order = lift_order(inp)
    limited = None
    if through is None:
        through = order
    elif through > order:
        limited = ("comparison beyond q^%d needs the stream through %d, "
                   "known through %d" % (order, through * through, inp.prec))
        through = order
    lifted = shimura_lift(inp, through)
    e4 = eisenstein_series(4, through + 2)
    reference = delta_series(through + 2) * 64 / (e4 * e4)
    agrees = lifted.truncate(through + 1).matches(reference, through + 1)
    return {
        "equal": agrees,
        "through": through,
        "limited": limited,
        "lift": lifted,
        "reference": reference.truncate(through + 1),
    }


def _binom(n, k):
    """Binomial coefficient with C(n, k) = 0 for negative integer k."""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k) if k <= n else 0
    num = 1
    for i in range(k):
        num *= n - i
    val = Fraction(num, factorial(k))
    assert val.denominator == 1
    return int(val)


def binomial_vanishing(a, b, c):
    """Both sides of the alternating binomial identity at (a, b, c).

    Returns (lhs, rhs); the two agree for all integer inputs with
    0 <= b, 0 <= c, and both vanish when additionally b + c < a.
    """
    if b < 0 or c < 0:
        raise ValueError("identity needs b >= 0 and c >= 0")
    lhs = sum((-1) ** j * _binom(c, j) * _binom(a - 2 * j + c - b - 1, a - 2 * j)
              for j in range(c + 1))
    rhs = sum((-1) ** j * _binom(c, a - j) * _binom(b, j)
              for j in range(b + 1))
    return lhs, rhs
