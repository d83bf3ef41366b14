"""Truncated power series with rational exponents and exact coefficients.

A FracPowerSeries represents  sum_e c_e q^e + O(q^T)  with e, c_e, T rational.
Coefficients at exponents < T are known exactly (absent = zero); everything at
or beyond T is unknown.  All arithmetic propagates the tightest truncation that
is actually sound, per-operation:

    add:      T = min(T1, T2)
    mul:      T = min(m1 + T2, m2 + T1)   (m_i = min nonzero exponent, capped at T_i)
    inverse:  T = T1 - 2 * leading exponent

Exponents and coefficients are fractions.Fraction throughout; nothing here
rounds.
"""

from fractions import Fraction

INF = Fraction(10 ** 12)  # stand-in for "+infinity" truncation of exact series


def _fr(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class FracPowerSeries:
    __slots__ = ("coeffs", "truncation")

    def __init__(self, coeffs=None, truncation=INF):
        self.truncation = _fr(truncation)
        cs = {}
        if coeffs:
            for e, c in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                e, c = _fr(e), _fr(c)
                if c and e < self.truncation:
                    cs[e] = cs.get(e, Fraction(0)) + c
        self.coeffs = {e: c for e, c in cs.items() if c}

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero(truncation=INF):
        return FracPowerSeries({}, truncation)

    @staticmethod
    def one():
        return FracPowerSeries({Fraction(0): Fraction(1)})

    @staticmethod
    def monomial(exponent, coeff=1, truncation=INF):
        return FracPowerSeries({_fr(exponent): _fr(coeff)}, truncation)

    # -- inspection ----------------------------------------------------

    def __getitem__(self, e):
        e = _fr(e)
        if e >= self.truncation:
            raise KeyError("coefficient at %s is beyond truncation O(q^%s)" % (e, self.truncation))
        return self.coeffs.get(e, Fraction(0))

    def coefficient(self, e):
        return self[e]

    def min_exponent(self):
        """Smallest exponent with nonzero known coefficient (None if none)."""
        return min(self.coeffs) if self.coeffs else None

    def _min_exp_capped(self):
        m = self.min_exponent()
        return self.truncation if m is None else min(m, self.truncation)

    def is_zero(self):
        return not self.coeffs

    def items(self):
        return sorted(self.coeffs.items())

    def exp_denominator(self):
        d = 1
        for e in self.coeffs:
            d = d * e.denominator // _gcd(d, e.denominator)
        return d

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FracPowerSeries({Fraction(0): _fr(other)})
        t = min(self.truncation, other.truncation)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return FracPowerSeries(out, t)

    __radd__ = __add__

    def __neg__(self):
        return FracPowerSeries({e: -c for e, c in self.coeffs.items()}, self.truncation)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FracPowerSeries({Fraction(0): _fr(other)})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _fr(other)
            if not c:
                return FracPowerSeries({}, INF)
            return FracPowerSeries({e: c * v for e, v in self.coeffs.items()}, self.truncation)
        t = min(self._min_exp_capped() + other.truncation,
                other._min_exp_capped() + self.truncation)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e < t:
                    out[e] = out.get(e, Fraction(0)) + c1 * c2
        return FracPowerSeries(out, t)

    __rmul__ = __mul__

    def shift(self, delta):
        """Multiply by q^delta."""
        d = _fr(delta)
        return FracPowerSeries({e + d: c for e, c in self.coeffs.items()},
                               self.truncation + d)

    def scale_exponents(self, s):
        """q -> q^s (substitute tau -> s*tau), s a positive rational."""
        s = _fr(s)
        assert s > 0
        return FracPowerSeries({e * s: c for e, c in self.coeffs.items()},
                               self.truncation * s)

    def inverse(self):
        """1/self; leading term must be nonzero."""
        m = self.min_exponent()
        if m is None:
            raise ZeroDivisionError("inverting a series with no known nonzero term")
        c0 = self.coeffs[m]
        t = self.truncation - 2 * m
        # h = self/(c0 q^m) - 1 has positive min exponent; invert by geometric series
        h = {e - m: c / c0 for e, c in self.coeffs.items() if e != m}
        out = {Fraction(0): Fraction(1)}
        # iterate: out = 1 - h*out, truncated at t - (-m) ... work in shifted coords
        tt = self.truncation - m  # soundness horizon for (1+h)^-1
        step = min(h) if h else None
        if step is not None and step > 0:
            acc = {Fraction(0): Fraction(1)}
            power = {Fraction(0): Fraction(1)}
            k = 1
            while step * k < tt:
                power = _mul_dict(power, h, tt)
                if not power:
                    break
                sign = -1 if k % 2 else 1
                for e, c in power.items():
                    acc[e] = acc.get(e, Fraction(0)) + sign * c
                k += 1
            out = acc
        elif step is not None:
            raise ValueError("series has terms below its leading exponent")
        return FracPowerSeries({e - m: c / c0 for e, c in out.items()}, t)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / _fr(other))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        n = int(n)
        if n == 0:
            return FracPowerSeries.one()
        base = self if n > 0 else self.inverse()
        n = abs(n)
        out = None
        while n:
            if n & 1:
                out = base if out is None else out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def truncate(self, t):
        """Forget knowledge beyond t (t <= current truncation is typical)."""
        t = _fr(t)
        return FracPowerSeries({e: c for e, c in self.coeffs.items() if e < t},
                               min(t, self.truncation))

    # -- comparison ----------------------------------------------------

    def matches(self, other, through=None):
        """Exact agreement on the common known range (optionally capped)."""
        t = min(self.truncation, other.truncation)
        if through is not None:
            t = min(t, _fr(through))
        for e in set(self.coeffs) | set(other.coeffs):
            if e < t and self.coeffs.get(e, 0) != other.coeffs.get(e, 0):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, FracPowerSeries):
            return NotImplemented
        return (self.truncation == other.truncation and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.truncation, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        parts = []
        for e, c in self.items()[:12]:
            parts.append("%s*q^%s" % (c, e))
        if len(self.coeffs) > 12:
            parts.append("...")
        tail = " + O(q^%s)" % self.truncation if self.truncation < INF else ""
        return "Series(" + (" + ".join(parts) if parts else "0") + tail + ")"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _mul_dict(a, b, t):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            if e < t:
                out[e] = out.get(e, Fraction(0)) + c1 * c2
    return {e: c for e, c in out.items() if c}
