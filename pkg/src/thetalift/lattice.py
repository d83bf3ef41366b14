"""Even lattices with exact integer Gram matrices and their finite quotient forms.

An EvenLattice is Z^n with the bilinear form of an integer Gram matrix whose
diagonal is even.  The dual quotient (dual lattice modulo the lattice) is a
finite abelian group carrying a Q/Z-valued quadratic form; DiscriminantForm
gives it canonical coordinates through the Smith normal form of the Gram
matrix.  Everything is exact: Fractions for dual vectors, cyclotomic numbers
for character sums.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd

from ._linalg import (det_int, hermite_normal_form, lcm, lll_reduce,
                      mat_inverse_frac, mat_inverse_int, mat_vec,
                      signature_pair, smith_normal_form)
from .cyclotomic import CyclotomicNumber, cyc_e
from .enumeration import short_vector_counts, short_vectors


class EvenLattice:
    """Nondegenerate even lattice given by its Gram matrix."""

    __slots__ = ("gram", "rank", "name", "_sig", "_det", "_disc", "_ginv",
                 "_lll")

    def __init__(self, gram, name=None):
        n = len(gram)
        g = [[int(x) for x in row] for row in gram]
        for i in range(n):
            if len(g[i]) != n:
                raise ValueError("gram matrix must be square")
            if g[i][i] % 2:
                raise ValueError("diagonal must be even")
            for j in range(n):
                if g[i][j] != g[j][i]:
                    raise ValueError("gram matrix must be symmetric")
        self.gram = g
        self.rank = n
        self.name = name or "L%d" % n
        self._sig = None
        self._det = None
        self._disc = None
        self._ginv = None
        self._lll = None

    # -- basic invariants ---------------------------------------------------

    def signature(self):
        """(positive, negative) inertia; raises on degenerate input."""
        if self._sig is None:
            self._sig = signature_pair(self.gram) if self.rank else (0, 0)
        return self._sig

    def signature_mod8(self):
        p, m = self.signature()
        return (p - m) % 8

    def det(self):
        if self._det is None:
            self._det = det_int(self.gram) if self.rank else 1
        return self._det

    def disc_order(self):
        return abs(self.det())

    def is_positive_definite(self):
        return self.signature()[1] == 0

    def is_negative_definite(self):
        return self.signature()[0] == 0

    def gram_inverse(self):
        if self._ginv is None:
            self._ginv = mat_inverse_frac(self.gram) if self.rank else []
        return self._ginv

    # -- arithmetic on vectors ---------------------------------------------

    def bilinear(self, u, v):
        g = self.gram
        return sum(Fraction(u[i]) * g[i][j] * Fraction(v[j])
                   for i in range(self.rank) for j in range(self.rank))

    def norm(self, v):
        return self.bilinear(v, v)

    def is_in_dual(self, v):
        """True if all pairings of v with lattice vectors are integers."""
        return all(sum(Fraction(v[j]) * self.gram[i][j]
                       for j in range(self.rank)).denominator == 1
                   for i in range(self.rank))

    # -- constructions ------------------------------------------------------

    def rescale(self, k):
        k = int(k)
        if k == 0:
            raise ValueError("scale must be nonzero")
        nm = self.name if k == 1 else "%s(%d)" % (self.name, k)
        return EvenLattice([[k * x for x in row] for row in self.gram], nm)

    def direct_sum(self, other):
        n, m = self.rank, other.rank
        g = [[0] * (n + m) for _ in range(n + m)]
        for i in range(n):
            for j in range(n):
                g[i][j] = self.gram[i][j]
        for i in range(m):
            for j in range(m):
                g[n + i][n + j] = other.gram[i][j]
        return EvenLattice(g, "%s+%s" % (self.name, other.name))

    def __repr__(self):
        p, m = self.signature() if self.rank else (0, 0)
        return "EvenLattice(%s, rank %d, sig (%d,%d))" % (self.name, self.rank, p, m)

    # -- finite quotient form ----------------------------------------------

    def discriminant_form(self):
        if self._disc is None:
            self._disc = DiscriminantForm(self)
        return self._disc

    def gauss_sum(self):
        """Sum of e(q(x)) over the dual quotient, as an exact cyclotomic number."""
        d = self.discriminant_form()
        total = CyclotomicNumber.from_rational(0)
        for cls in d.classes():
            total = total + cyc_e(d.q_value(cls))
        return total

    def milgram_check(self, tol=Fraction(1, 10**9)):
        """Verify the reciprocity identity for the quadratic-form character sum.

        The square of the sum must equal |D| * e(sig/4) exactly; the sign of
        the square root is pinned down numerically (the two candidates are
        far apart, so a coarse tolerance suffices).
        """
        g = self.gauss_sum()
        d = self.disc_order()
        target_sq = cyc_e(Fraction(self.signature_mod8(), 4)) * Fraction(d)
        if g * g != target_sq:
            return False
        import cmath
        want = (d ** 0.5) * cmath.exp(2j * cmath.pi * self.signature_mod8() / 8)
        return abs(g.to_complex() - want) < tol

    # -- enumeration --------------------------------------------------------

    def _reduced_coords(self):
        """(gram, trans, trans_inv) of an LLL-reduced basis, cached.

        Enumeration runs over the reduced Gram -- a badly conditioned input
        basis makes the exact search tree explode -- and trans maps reduced
        coordinates back: v_original = v_reduced * trans.  trans is None
        when the basis is already reduced.
        """
        if self._lll is None:
            reduced, trans = lll_reduce(self.gram)
            if trans == [[1 if i == j else 0 for j in range(self.rank)]
                         for i in range(self.rank)]:
                self._lll = (self.gram, None, None)
            else:
                self._lll = (reduced, trans, mat_inverse_int(trans))
        return self._lll

    def short_vector_counts(self, bound, offset=None, kernel="auto"):
        """{norm: count} over lattice points v (plus optional rational offset)
        with 0 <= norm(v+offset) <= bound.  Positive definite only."""
        if not self.is_positive_definite():
            raise ValueError("short vectors need a positive definite lattice")
        gram, trans, trans_inv = self._reduced_coords()
        if trans is not None and offset is not None:
            offset = [sum(Fraction(offset[a]) * trans_inv[a][i]
                          for a in range(self.rank)) for i in range(self.rank)]
        return short_vector_counts(gram, offset, bound, kernel)

    def short_vectors(self, bound, offset=None, kernel="auto"):
        if not self.is_positive_definite():
            raise ValueError("short vectors need a positive definite lattice")
        gram, trans, trans_inv = self._reduced_coords()
        if trans is None:
            return short_vectors(self.gram, offset, bound, kernel)
        if offset is not None:
            offset = [sum(Fraction(offset[a]) * trans_inv[a][i]
                          for a in range(self.rank)) for i in range(self.rank)]
        out = [(tuple(sum(v[i] * trans[i][j] for i in range(self.rank))
                      for j in range(self.rank)), nrm)
               for v, nrm in short_vectors(gram, offset, bound, kernel)]
        out.sort()
        return out

    def theta_series(self, prec, kernel="auto"):
        """Coset-graded theta function as a vector valued form, exponents
        through `prec` inclusive.  Positive definite only; weight rank/2."""
        from .weilrep import VectorValuedForm
        from .qseries import FracPowerSeries
        disc = self.discriminant_form()
        comps = {}
        for cls in disc.classes():
            off = disc.dual_representative(cls)
            counts = self.short_vector_counts(2 * Fraction(prec), offset=off,
                                              kernel=kernel)
            coeffs = {nrm / 2: Fraction(cnt) for nrm, cnt in counts.items()}
            qv = disc.q_value(cls)
            trunc = qv + (prec - qv).__floor__() + 1
            comps[cls] = FracPowerSeries(coeffs, truncation=Fraction(trunc))
        return VectorValuedForm(self, Fraction(self.rank, 2), comps, parity=0)


class DiscriminantForm:
    """Dual quotient of an even lattice in Smith-normal-form coordinates.

    Classes are tuples (a_1, ..., a_n) with 0 <= a_i < s_i, where the s_i are
    the elementary divisors of the Gram matrix.  The tuple for a dual vector v
    is U*(G v) mod s; a representative dual vector is recovered by inverting
    that map.
    """

    __slots__ = ("lattice", "s", "_u", "_uinv", "_ginv", "_q_cache")

    def __init__(self, lattice):
        self.lattice = lattice
        n = lattice.rank
        if n == 0:
            self.s = []
            self._u = self._uinv = []
            self._ginv = []
        else:
            snf, u, _ = smith_normal_form(lattice.gram)
            self.s = [snf[i][i] for i in range(n)]
            self._u = u
            self._uinv = mat_inverse_int(u)
            self._ginv = lattice.gram_inverse()
        self._q_cache = {}

    @property
    def order(self):
        out = 1
        for x in self.s:
            out *= x
        return out

    def classes(self):
        """All classes, lexicographically ordered, as tuples."""
        return [tuple(t) for t in product(*[range(x) for x in self.s])]

    def zero(self):
        return tuple([0] * len(self.s))

    def add(self, a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, self.s))

    def neg(self, a):
        return tuple((-x) % m for x, m in zip(a, self.s))

    def smul(self, k, a):
        return tuple((k * x) % m for x, m in zip(a, self.s))

    def class_of_dual(self, vec):
        """Class tuple of a dual vector (rational coordinates)."""
        g = self.lattice.gram
        n = self.lattice.rank
        c = []
        for i in range(n):
            val = sum(Fraction(vec[j]) * g[i][j] for j in range(n))
            if val.denominator != 1:
                raise ValueError("vector is not in the dual lattice")
            c.append(int(val))
        a = mat_vec(self._u, c)
        return tuple(x % m for x, m in zip(a, self.s))

    def dual_representative(self, cls):
        """A dual vector (Fractions) representing the class."""
        n = self.lattice.rank
        c = mat_vec(self._uinv, list(cls))
        return [sum(self._ginv[i][j] * c[j] for j in range(n)) for i in range(n)]

    def q_value(self, cls):
        """Half the self-pairing of the class, reduced into [0, 1)."""
        cls = tuple(cls)
        if cls not in self._q_cache:
            v = self.dual_representative(cls)
            val = self.lattice.norm(v) / 2
            self._q_cache[cls] = val - val.__floor__()
        return self._q_cache[cls]

    def bilinear_value(self, a, b):
        """Pairing of two classes in [0, 1)."""
        va = self.dual_representative(a)
        vb = self.dual_representative(b)
        val = self.lattice.bilinear(va, vb)
        return val - val.__floor__()

    def level(self):
        """Smallest N making N*q integral on the whole group."""
        n = len(self.s)
        gens = []
        for i in range(n):
            if self.s[i] > 1:
                gens.append(tuple(int(i == j) for j in range(n)))
        dens = [1]
        for i, g in enumerate(gens):
            dens.append(self.q_value(g).denominator)
            for h in gens[i + 1:]:
                dens.append(self.bilinear_value(g, h).denominator)
        return lcm(*dens)


# --------------------------------------------------------------------------
# standard lattices


def root_lattice_a(n, name=None):
    """Chain-graph root lattice of rank n (determinant n+1)."""
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
        if i + 1 < n:
            g[i][i + 1] = g[i + 1][i] = -1
    return EvenLattice(g, name or "A%d" % n)


def root_lattice_d(n, name=None):
    """Rank-n root lattice of determinant 4 (n >= 3)."""
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
        if i + 1 < n - 1:
            g[i][i + 1] = g[i + 1][i] = -1
    g[n - 3][n - 1] = g[n - 1][n - 3] = -1
    return EvenLattice(g, name or "D%d" % n)


def e8(name="E8"):
    """The rank-8 unimodular positive definite lattice."""
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = 2
        if i + 1 < 7:
            g[i][i + 1] = g[i + 1][i] = -1
    g[4][7] = g[7][4] = -1
    return EvenLattice(g, name)


def hyperbolic_plane(scale=1):
    """Rank-2 even lattice with Gram [[0, s], [s, 0]]."""
    name = "U" if scale == 1 else "U(%d)" % scale
    return EvenLattice([[0, scale], [scale, 0]], name)


def ii_lattice(p, q):
    """Even unimodular lattice of signature (p, q) (requires p <= q, 8 | q - p)."""
    if p < 1 or q < p or (q - p) % 8:
        raise ValueError("signature must be (p, q) with 1 <= p <= q, 8 | q-p")
    lat = hyperbolic_plane()
    for _ in range(p - 1):
        lat = lat.direct_sum(hyperbolic_plane())
    for _ in range((q - p) // 8):
        lat = lat.direct_sum(e8().rescale(-1))
    lat.name = "II(%d,%d)" % (p, q)
    return lat


def even_sublattice_of_standard(p, q):
    """Even sublattice (even coordinate sum) of the odd selfdual diagonal
    lattice of signature (p, q).  Determinant +-4."""
    n = p + q
    if n < 2:
        raise ValueError("rank must be at least 2")
    diag = [1] * p + [-1] * q
    basis = [[1, 1] + [0] * (n - 2)]
    for i in range(n - 1):
        row = [0] * n
        row[i], row[i + 1] = 1, -1
        basis.append(row)
    g = [[sum(diag[k] * basis[i][k] * basis[j][k] for k in range(n))
          for j in range(n)] for i in range(n)]
    return EvenLattice(g, "evenI(%d,%d)" % (p, q))


# --------------------------------------------------------------------------
# the rank-24 unimodular lattice with minimum 4, built from the length-24
# doubly even self-dual binary code


@lru_cache(maxsize=None)
def golay_basis():
    """12 generator rows (0/1 ints) of the extended quadratic-residue code of
    length 24: cyclic generator x^11+x^10+x^6+x^5+x^4+x^2+1 on 23 symbols plus
    an overall parity bit."""
    gpoly = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]  # degree 0..11
    rows = []
    for i in range(12):
        word = [0] * 23
        for d, bit in enumerate(gpoly):
            word[i + d] ^= bit
        word.append(sum(word) % 2)
        rows.append(word)
    return tuple(tuple(r) for r in rows)


@lru_cache(maxsize=None)
def leech():
    """The rank-24 positive definite unimodular lattice with no norm-2 vectors.

    Generators (before dividing the form by 8): doubled codewords, four times
    the even-coordinate-sum lattice, and (-3, 1, ..., 1).  A Hermite basis of
    that span keeps the Gram entries small.
    """
    gens = [[2 * b for b in row] for row in golay_basis()]
    d24 = [[4, 4] + [0] * 22]
    for i in range(23):
        row = [0] * 24
        row[i], row[i + 1] = 4, -4
        d24.append(row)
    gens.extend(d24)
    gens.append([-3] + [1] * 23)
    basis = hermite_normal_form(gens)
    assert len(basis) == 24
    g = [[0] * 24 for _ in range(24)]
    for i in range(24):
        for j in range(i, 24):
            v = sum(basis[i][k] * basis[j][k] for k in range(24))
            assert v % 8 == 0
            g[i][j] = g[j][i] = v // 8
    lat = EvenLattice(g, "Leech")
    assert lat.det() == 1
    return lat


def gram_content(lat):
    """gcd of all Gram entries (the scale of the pairing ideal)."""
    g = 0
    for row in lat.gram:
        for x in row:
            g = gcd(g, x)
    return g
