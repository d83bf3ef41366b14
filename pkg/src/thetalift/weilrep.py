"""Finite metaplectic action on a discriminant group, and vector valued forms.

The standard generators act on the group algebra of the dual quotient of an
even lattice: T multiplies each class by e(q), S is a normalized finite
Fourier transform, and Z = S^2 combines negation with an eighth root of
unity fixed by the signature.  All matrix entries are exact cyclotomic
numbers, so the defining relations can be checked by exact equality.

VectorValuedForm bundles one fractional-exponent q-series per class; its
validator enforces the exponent grading and the +-symmetry between opposite
classes that any form transforming under this action must satisfy.
"""

from fractions import Fraction

from .cyclotomic import CyclotomicNumber, cyc_e
from .qseries import INF, FracPowerSeries


def _cyc_mat_mul(a, b):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = CyclotomicNumber.from_rational(0)
            for k in range(n):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def _cyc_mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


class WeilRepresentation:
    """Exact matrices of the generator action attached to an even lattice."""

    def __init__(self, lattice):
        self.lattice = lattice
        self.disc = lattice.discriminant_form()
        self.classes = self.disc.classes()
        self.index = {c: i for i, c in enumerate(self.classes)}

    @property
    def dim(self):
        return len(self.classes)

    def t_matrix(self):
        """Diagonal phases e(q(class))."""
        n = self.dim
        zero = CyclotomicNumber.from_rational(0)
        out = [[zero] * n for _ in range(n)]
        for i, c in enumerate(self.classes):
            out[i][i] = cyc_e(self.disc.q_value(c))
        return out

    def s_matrix(self):
        """Normalized finite Fourier transform.

        Entry (c, d) is  conj(g)/|D| * e(-(c,d))  with g the full character
        sum; the normalization keeps everything inside one cyclotomic field
        and makes the matrix exactly unitary.
        """
        n = self.dim
        scalar = self.lattice.gauss_sum().conjugate() / self.disc.order
        out = []
        for c in self.classes:
            row = []
            for d in self.classes:
                b = self.disc.bilinear_value(c, d)
                row.append(scalar * cyc_e((-b) % 1))
            out.append(row)
        return out

    def z_matrix(self):
        """S^2: sends the class c to i^(neg - pos) times the class -c."""
        n = self.dim
        p, m = self.lattice.signature()
        phase = cyc_e(Fraction((m - p) % 8, 4))
        zero = CyclotomicNumber.from_rational(0)
        out = [[zero] * n for _ in range(n)]
        for c in self.classes:
            out[self.index[self.disc.neg(c)]][self.index[c]] = phase
        return out

    def identity_matrix(self):
        n = self.dim
        zero = CyclotomicNumber.from_rational(0)
        one = CyclotomicNumber.from_rational(1)
        return [[one if i == j else zero for j in range(n)] for i in range(n)]

    def check_relations(self):
        """Exact checks of the defining relations; returns {name: bool}."""
        s = self.s_matrix()
        t = self.t_matrix()
        z = self.z_matrix()
        ident = self.identity_matrix()
        ss = _cyc_mat_mul(s, s)
        st = _cyc_mat_mul(s, t)
        ststst = _cyc_mat_mul(_cyc_mat_mul(st, st), st)
        zz = _cyc_mat_mul(z, z)
        sconjt = [[s[j][i].conjugate() for j in range(self.dim)]
                  for i in range(self.dim)]
        return {
            "S2_equals_Z": _cyc_mat_eq(ss, z),
            "ST_cubed_equals_Z": _cyc_mat_eq(ststst, z),
            "Z4_equals_identity": _cyc_mat_eq(_cyc_mat_mul(zz, zz), ident),
            "Z_action_on_classes": self._check_z_action(z),
            "S_unitary": _cyc_mat_eq(_cyc_mat_mul(s, sconjt), ident),
        }

    def _check_z_action(self, z=None):
        if z is None:
            z = self.z_matrix()
        p, m = self.lattice.signature()
        phase = cyc_e(Fraction((m - p) % 8, 4))
        zero = CyclotomicNumber.from_rational(0)
        for c in self.classes:
            j = self.index[c]
            for d in self.classes:
                i = self.index[d]
                want = phase if d == self.disc.neg(c) else zero
                if not z[i][j] == want:
                    return False
        return True


class VectorValuedForm:
    """One q-series per discriminant class, with exponent grading q(class) mod 1.

    parity is 0 or 1: coefficients of opposite classes agree up to (-1)^parity.
    Components not present are zero.
    """

    __slots__ = ("lattice", "weight", "components", "parity")

    def __init__(self, lattice, weight, components, parity=0):
        self.lattice = lattice
        self.weight = Fraction(weight)
        self.components = {tuple(k): v for k, v in components.items()}
        self.parity = int(parity) % 2

    def disc(self):
        return self.lattice.discriminant_form()

    def component(self, cls):
        return self.components.get(tuple(cls), FracPowerSeries.zero())

    def coefficient(self, cls, expo):
        return self.component(cls).coefficient(Fraction(expo))

    def min_truncation(self):
        t = INF
        for s in self.components.values():
            t = min(t, s.truncation)
        return t

    def principal_part(self):
        """{(class, exponent): coefficient} over strictly negative exponents."""
        out = {}
        for cls, ser in self.components.items():
            for e, c in ser.items():
                if e < 0 and c:
                    out[(cls, e)] = c
        return out

    def problems(self):
        """List of (class, description) validation failures; empty when good."""
        disc = self.disc()
        bad = []
        for cls, ser in self.components.items():
            if len(cls) != len(disc.s) or any(
                    not 0 <= x < m for x, m in zip(cls, disc.s)):
                bad.append((cls, "not a class label"))
                continue
            qv = disc.q_value(cls)
            for e, c in ser.items():
                if c and (e - qv).denominator != 1:
                    bad.append((cls, "exponent %s not congruent to %s mod 1"
                                % (e, qv)))
                    break
        sign = -1 if self.parity else 1
        for cls in list(self.components):
            opp = disc.neg(cls)
            a = self.component(cls)
            b = self.component(opp)
            t = min(a.truncation, b.truncation)
            exps = {e for e, c in a.items() if c and e < t}
            exps |= {e for e, c in b.items() if c and e < t}
            for e in sorted(exps):
                if a.coefficient(e) != sign * b.coefficient(e):
                    bad.append((cls, "opposite-class symmetry fails at exponent %s" % e))
                    break
        return bad

    def validate(self):
        bad = self.problems()
        if bad:
            raise ValueError("invalid vector valued form: %s" % (bad[:3],))
        return True

    # -- arithmetic ---------------------------------------------------------

    def _same_lattice(self, other):
        if self.lattice.gram != other.lattice.gram:
            raise ValueError("forms live on different lattices")

    def __add__(self, other):
        self._same_lattice(other)
        keys = set(self.components) | set(other.components)
        comps = {k: self.component(k) + other.component(k) for k in keys}
        assert self.parity == other.parity
        return VectorValuedForm(self.lattice, self.weight, comps, self.parity)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, r):
        r = Fraction(r)
        comps = {k: v * r for k, v in self.components.items()}
        return VectorValuedForm(self.lattice, self.weight, comps, self.parity)

    def mul_scalar_series(self, series, weight_shift=0):
        comps = {k: v * series for k, v in self.components.items()}
        return VectorValuedForm(self.lattice, self.weight + Fraction(weight_shift),
                                comps, self.parity)

    def __repr__(self):
        nz = sum(1 for v in self.components.values() if not v.is_zero())
        return "VectorValuedForm(%s, weight %s, %d nonzero of %d components)" % (
            self.lattice.name, self.weight, nz, self.disc().order)


def dual_relabel(disc_a, disc_b):
    """Class-label dictionary between two quotient groups sharing the same
    ambient rational span (e.g. a lattice and its negative rescale)."""
    return {cls: disc_b.class_of_dual(disc_a.dual_representative(cls))
            for cls in disc_a.classes()}


def contract_forms(a, b, class_map=None):
    """Sum over classes of componentwise products: the scalar-valued pairing
    used in constant-term identities.  class_map sends labels of `a` to labels
    of `b` (default: identical labels)."""
    out = FracPowerSeries.zero()
    for cls, ser in a.components.items():
        target = class_map[cls] if class_map is not None else cls
        out = out + ser * b.component(target)
    return out


def gamma0_prime_split(series, p, weight=0):
    """Spread one integral-exponent series into components over the rank-2
    isotropic lattice scaled by the prime p.

    Input is invariant under the degree-p Fricke/Atkin-Lehner symmetry and has
    zero constant term; output component at the class of (a/p, b/p) is
    [a=b=0]*f + A_{ab mod p}, where A_j collects c(n) q^(n/p) over n = j mod p.
    For p = 2 this reproduces the classical three-component splitting.
    """
    from .lattice import hyperbolic_plane
    if series.coefficient(Fraction(0)) != 0:
        raise ValueError("constant term must vanish")
    if any(e.denominator != 1 for e, c in series.items() if c):
        raise ValueError("input must have integral exponents")
    lat = hyperbolic_plane(p)
    disc = lat.discriminant_form()
    parts = {}
    for j in range(p):
        coeffs = {e / p: c for e, c in series.items()
                  if c and int(e) % p == j}
        parts[j] = FracPowerSeries(coeffs, truncation=series.truncation / p)
    comps = {}
    for a in range(p):
        for b in range(p):
            cls = disc.class_of_dual([Fraction(a, p), Fraction(b, p)])
            f = parts[(a * b) % p]
            if a == 0 and b == 0:
                f = f + series
            comps[cls] = f
    return VectorValuedForm(lat, weight, comps, parity=0)
