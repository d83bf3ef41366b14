"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in the power basis 1, z, ..., z^(phi(n)-1) of
Q[x]/Phi_n(x) with Fraction coefficients.  Mixed orders lift to the lcm.
No floating point enters any equality decision; to_complex() exists only for
diagnostics and the documented numeric tiebreakers.
"""

import cmath
from fractions import Fraction
from math import gcd

_cyclo_cache = {1: [-1, 1]}  # n -> coefficients of Phi_n, ascending degree


def _poly_divmod_exact(num, den):
    """Divide integer polynomials (ascending coeff lists), exact division."""
    num = list(num)
    dden = len(den) - 1
    out = [0] * (len(num) - dden)
    for k in range(len(num) - 1 - dden, -1, -1):
        c = num[k + dden]
        if c % den[dden]:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[dden]
        out[k] = q
        if q:
            for i, dc in enumerate(den):
                num[k + i] -= q * dc
    if any(num[:dden]):
        raise ArithmeticError("non-exact polynomial division")
    return out


def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, computed by factoring x^n - 1 recursively."""
    if n in _cyclo_cache:
        return _cyclo_cache[n]
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divmod_exact(num, cyclotomic_polynomial(d))
    _cyclo_cache[n] = num
    return num


def _phi(n):
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


class CyclotomicNumber:
    """An element of Q(zeta_order) in the power basis mod Phi_order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        deg = _phi(order)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = _reduce_mod_phi(cs, order)
        cs += [Fraction(0)] * (deg - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(x):
        return CyclotomicNumber(1, [Fraction(x)])

    @staticmethod
    def root_of_unity(num, den):
        """e(num/den) = exp(2 pi i num / den)."""
        num, den = int(num), int(den)
        if den < 0:
            num, den = -num, -den
        g = gcd(abs(num), den) or 1
        num, den = num // g, den // g
        num %= den
        poly = [Fraction(0)] * num + [Fraction(1)]
        return CyclotomicNumber(den, poly)

    # -- order handling ----------------------------------------------

    def lift(self, new_order):
        """Rewrite in Q(zeta_new_order); new_order must be a multiple."""
        if new_order == self.order:
            return self
        assert new_order % self.order == 0
        k = new_order // self.order
        out = [Fraction(0)] * (self.order * k)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * k] = c
        return CyclotomicNumber(new_order, out)

    def try_reduce(self):
        """Canonicalize: drop to the smallest cyclotomic field containing self."""
        x = self
        changed = True
        while changed:
            changed = False
            for p in _prime_factors(x.order):
                smaller = x.order // p
                if smaller >= 1 and x.order % p == 0:
                    y = _try_descend(x, smaller)
                    if y is not None:
                        x = y
                        changed = True
                        break
        return x

    # -- ring ops -----------------------------------------------------

    def _pair(self, other):
        if not isinstance(other, CyclotomicNumber):
            other = CyclotomicNumber.from_rational(other)
        n = self.order * other.order // gcd(self.order, other.order)
        return self.lift(n), other.lift(n), n

    def __add__(self, other):
        a, b, n = self._pair(other)
        return CyclotomicNumber(n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, CyclotomicNumber)
                       else CyclotomicNumber.from_rational(-Fraction(other)))

    def __rsub__(self, other):
        return CyclotomicNumber.from_rational(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, [c * other for c in self.coeffs])
        a, b, n = self._pair(other)
        prod = [Fraction(0)] * (2 * len(a.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicNumber(n, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            inv = 1 / Fraction(other)
            return self * inv
        raise TypeError("division only by rationals")

    def conjugate(self):
        """Complex conjugation: zeta -> zeta^(order-1)."""
        n = self.order
        out = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            if c:
                out[(n - i) % n] += c
        return CyclotomicNumber(n, out)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_rational(other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b, _ = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        r = self.try_reduce()
        return hash((r.order, r.coeffs))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        assert self.is_rational()
        return self.coeffs[0]

    def to_complex(self):
        """Float approximation (diagnostics / documented tiebreakers only)."""
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z ** i for i, c in enumerate(self.coeffs) if c)

    def __repr__(self):
        r = self.try_reduce()
        if r.is_rational():
            return "Cyc(%s)" % r.coeffs[0]
        terms = ["%s*z%d^%d" % (c, r.order, i) for i, c in enumerate(r.coeffs) if c]
        return "Cyc(" + " + ".join(terms) + ")"


def _reduce_mod_phi(coeffs, order):
    phi = cyclotomic_polynomial(order)
    deg = len(phi) - 1
    cs = list(coeffs)
    # first reduce exponents mod order via zeta^order = 1
    if len(cs) > order:
        folded = [Fraction(0)] * order
        for i, c in enumerate(cs):
            folded[i % order] += c
        cs = folded
    for k in range(len(cs) - 1, deg - 1, -1):
        c = cs[k]
        if c:
            # zeta^k = zeta^k - c * zeta^(k-deg) * Phi(zeta)
            for i, pc in enumerate(phi):
                cs[k - deg + i] -= c * pc
        cs.pop()
    return cs


def _prime_factors(n):
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def _try_descend(x, smaller):
    """Try to rewrite x in Q(zeta_smaller) (smaller | order). None if impossible."""
    # An element of Q(zeta_n) lies in Q(zeta_m) iff rewriting zeta_n^i in terms
    # of zeta_m works out: check via expressing x in the basis of Q(zeta_m)
    # by linear algebra over the embedding Q(zeta_m) -> Q(zeta_n).
    n, m = x.order, smaller
    if n % m:
        return None
    k = n // m
    # basis of Q(zeta_m) inside Q(zeta_n): (zeta_n^k)^j for j < phi(m)
    phim = _phi(m)
    basis = []
    for j in range(phim):
        vec = [Fraction(0)] * (j * k) + [Fraction(1)]
        basis.append(CyclotomicNumber(n, vec).coeffs)
    # solve sum_j a_j basis[j] = x.coeffs  (overdetermined; consistent iff x descends)
    phin = _phi(n)
    rows = [[basis[j][i] for j in range(phim)] for i in range(phin)]
    target = list(x.coeffs)
    sol = _solve_overdetermined(rows, target)
    if sol is None:
        return None
    return CyclotomicNumber(m, sol)


def _solve_overdetermined(a, b):
    """Solve a x = b exactly; None if inconsistent.  a is tall, full column rank."""
    rows = [list(r) + [b[i]] for i, r in enumerate(a)]
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][-1]:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = rows[i][-1]
    return sol


def cyc_e(x):
    """e(x) = exp(2 pi i x) for a rational x."""
    f = Fraction(x)
    return CyclotomicNumber.root_of_unity(f.numerator, f.denominator)


def cyc_zero():
    return CyclotomicNumber(1, [0])


def cyc_one():
    return CyclotomicNumber(1, [1])
