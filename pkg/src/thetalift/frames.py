"""Cusp frames: reduction of an even lattice along a primitive isotropic vector.

A frame packages a primitive norm-0 vector ``z`` of an even lattice ``M``
together with a dual vector ``z'`` satisfying ``(z, z') = 1``.  It exposes the
smaller lattice ``K`` obtained by quotienting ``z^perp`` by ``z``, realized
concretely inside ``M (x) Q`` as the span of integer vectors orthogonal to both
``z`` and ``z'``.  Discriminant classes of ``M`` whose pairing with ``z`` is
divisible by the level restrict to classes of ``K``; the frame computes that
restriction map, the associated phases ``(delta, z')``, and the induced
component-summing reduction of vector-valued forms.
"""

from fractions import Fraction

from ._linalg import (
    complete_primitive,
    integer_kernel,
    mat_inverse_int,
    mat_vec,
    smith_normal_form,
    solve_frac,
)
from .lattice import EvenLattice
from .weilrep import VectorValuedForm


def _frac_vec(v):
    return [Fraction(x) for x in v]


def _solve_columns(cols, target):
    """Solve sum_j x_j cols[j] = target exactly; raises if inconsistent."""
    n = len(target)
    m = len(cols)
    aug = [[Fraction(cols[j][i]) for j in range(m)] + [Fraction(target[i])]
           for i in range(n)]
    row = 0
    pivots = []
    for col in range(m):
        p = next((r for r in range(row, n) if aug[r][col]), None)
        if p is None:
            continue
        aug[row], aug[p] = aug[p], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(n):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    x = [Fraction(0)] * m
    for r, col in enumerate(pivots):
        x[col] = aug[r][m]
    for r in range(n):
        resid = sum(aug[r][j] * x[j] for j in range(m)) - aug[r][m]
        if resid:
            raise ValueError("inconsistent linear system")
    return x


def _gcd_combination(weights):
    """Integer vector x with x . weights == gcd(weights) (> 0)."""
    s, u, v = smith_normal_form([list(weights)])
    g = s[0][0]
    assert g > 0
    # row [w] satisfies u [w] v = [g 0 ...]; column 0 of v pairs to g/u00
    x = [v[i][0] * u[0][0] for i in range(len(weights))]
    assert sum(a * b for a, b in zip(x, weights)) == g
    return x, g


class CuspFrame:
    """Reduction data of an even lattice along a primitive isotropic vector."""

    def __init__(self, lattice, z, zprime=None):
        self.lattice = lattice
        gram = lattice.gram
        n = lattice.rank
        z = [int(c) for c in z]
        if len(z) != n:
            raise ValueError("isotropic vector has wrong length")
        from math import gcd
        if gcd(*(abs(c) for c in z)) != 1 if n > 1 else abs(z[0]) != 1:
            raise ValueError("isotropic vector must be primitive")
        if lattice.norm(z) != 0:
            raise ValueError("vector is not isotropic")
        self.z = z
        gz = mat_vec(gram, z)
        _, level = _gcd_combination(gz)
        self.level = level

        if zprime is None:
            # integer functional c with c . z = 1 gives z' = G^{-1} c in M'
            cols = complete_primitive(z)
            c = mat_inverse_int(cols)[0]
            zprime = solve_frac(gram, c)
        zprime = _frac_vec(zprime)
        if lattice.bilinear(z, zprime) != 1:
            raise ValueError("(z, z') must be 1")
        if not lattice.is_in_dual(zprime):
            raise ValueError("z' must pair integrally with the lattice")
        # normalize z'^2 into [0, 2) by integer multiples of z
        shift = lattice.norm(zprime) // 2
        if shift:
            zprime = [a - shift * b for a, b in zip(zprime, z)]
        self.zprime = zprime
        self.zprime_norm = lattice.norm(zprime)

        # basis of z^perp inside M, then rotate z into its first slot
        lperp = integer_kernel([gz])
        coords = _solve_columns(lperp, z)
        icoords = []
        for x in coords:
            assert x.denominator == 1
            icoords.append(int(x))
        rot = complete_primitive(icoords)
        basis = []
        for j in range(1, n - 1):
            vec = [sum(lperp[i][r] * rot[i][j] for i in range(n - 1))
                   for r in range(n)]
            basis.append(vec)
        # flatten against z' so the K-vectors are orthogonal to z and z'
        self.k_basis = []
        for k in basis:
            a = lattice.bilinear(k, zprime)
            assert a.denominator == 1
            self.k_basis.append([ki - int(a) * zi for ki, zi in zip(k, z)])
        kgram = [[int(lattice.bilinear(u, v)) for v in self.k_basis]
                 for u in self.k_basis]
        self.k_lattice = EvenLattice(kgram, name="%s/%s" % (lattice.name, "z"))
        sp, sm = lattice.signature()
        kp, km = self.k_lattice.signature() if n > 2 else (0, 0)
        assert (kp, km) == (sp - 1, sm - 1)
        assert lattice.disc_order() == level ** 2 * self.k_lattice.disc_order()

        self._msol, _ = _gcd_combination(gz)
        self._build_class_map()

    # -- discriminant bookkeeping -------------------------------------------

    def _build_class_map(self):
        disc_m = self.lattice.discriminant_form()
        disc_k = self.k_lattice.discriminant_form()
        kgram = self.k_lattice.gram
        self.restriction = {}
        fibers = {}
        for cls in disc_m.classes():
            d = disc_m.dual_representative(cls)
            t = self.lattice.bilinear(d, self.z)
            assert t.denominator == 1
            if int(t) % self.level:
                continue
            m = [(int(t) // self.level) * c for c in self._msol]
            dstar = [a - b for a, b in zip(d, m)]
            a = self.lattice.bilinear(dstar, self.zprime)
            proj = [x - a * zi for x, zi in zip(dstar, self.z)]
            pair = [self.lattice.bilinear(proj, k) for k in self.k_basis]
            kcoords = solve_frac(kgram, pair) if self.k_basis else []
            gamma = disc_k.class_of_dual(kcoords)
            assert disc_k.q_value(gamma) == disc_m.q_value(cls)
            phase = self.lattice.bilinear(d, self.zprime) % 1
            self.restriction[cls] = (gamma, phase)
            fibers.setdefault(gamma, []).append(cls)
        assert len(self.restriction) == self.level * disc_k.order
        assert all(len(v) == self.level for v in fibers.values())
        self.fibers = fibers

    def admissible_classes(self):
        """Classes of M whose pairing with z vanishes mod the level."""
        return sorted(self.restriction)

    def restrict_class(self, cls):
        """(K-class, phase) for an admissible M-class; phase = (delta, z') in [0,1)."""
        return self.restriction[cls]

    def isotropic_line_classes(self):
        """The level classes delta = [j z / level], j = 0..level-1, with phases."""
        out = []
        disc_m = self.lattice.discriminant_form()
        zero = self.k_lattice.discriminant_form().zero()
        for j in range(self.level):
            rep = [Fraction(j * c, self.level) for c in self.z]
            cls = disc_m.class_of_dual(rep)
            gamma, phase = self.restriction[cls]
            assert gamma == zero
            out.append((cls, phase))
        return out

    # -- form reduction ------------------------------------------------------

    def reduce_form(self, form):
        """Sum the components of a form on M over the fibers of the restriction.

        The result is a form on K of the same weight; a class of K receives one
        summand for each of the ``level`` admissible classes of M above it.
        """
        assert form.lattice.gram == self.lattice.gram
        comps = {}
        for gamma, fiber in self.fibers.items():
            acc = None
            for cls in fiber:
                comp = form.component(cls)
                acc = comp if acc is None else acc + comp
            comps[gamma] = acc
        return VectorValuedForm(self.k_lattice, form.weight, comps,
                                parity=form.parity)

    # -- coordinates ---------------------------------------------------------

    def ambient_vector(self, k_coords, a=0, b=0):
        """The vector sum_i x_i ktilde_i + a z' + b z in M (x) Q."""
        n = self.lattice.rank
        v = [Fraction(0)] * n
        for x, k in zip(k_coords, self.k_basis):
            for i in range(n):
                v[i] += Fraction(x) * k[i]
        for i in range(n):
            v[i] += Fraction(a) * self.zprime[i] + Fraction(b) * self.z[i]
        return v

    def split_vector(self, v):
        """Inverse of ambient_vector: (k_coords, a, b)."""
        v = _frac_vec(v)
        a = self.lattice.bilinear(v, self.z)
        b = self.lattice.bilinear(v, self.zprime) - a * self.zprime_norm
        w = [x - a * zp - b * zz for x, zp, zz in zip(v, self.zprime, self.z)]
        if self.k_basis:
            pair = [self.lattice.bilinear(w, k) for k in self.k_basis]
            coords = solve_frac(self.k_lattice.gram, pair)
        else:
            coords = []
        assert self.ambient_vector(coords, a, b) == v
        return coords, a, b
