"""Truncated expansions of automorphic infinite products.

A datum on a lattice of signature (2, n) bundles a vector-valued input form
with two layers of cusp reduction: a frame on the ambient lattice whose
orthogonal complement K is Lorentzian, and a second frame on K used to
evaluate the Weyl vector.  The product attached to the datum is an infinite
product over forward vectors of K, graded by pairing against a chosen height
vector; this module expands it exactly, as an element of a truncated group
ring over K, via logarithm/exponential bookkeeping.

Everything is exact: coefficients are rationals, and the constant prefactor
coming from the torsion of the cusp is evaluated in a cyclotomic field.
"""

from fractions import Fraction
from math import gcd

from ._linalg import integer_kernel, solve_frac
from .cyclotomic import cyc_e, cyc_one
from .frames import CuspFrame, _gcd_combination
from .hyperbolic import NonGenericWitness, weyl_vector
from .lattice import EvenLattice
from .qseries import FracPowerSeries

HALF = Fraction(1, 2)


class ProductDatum:
    """Input bundle for one Borcherds-style product expansion.

    frame       -- CuspFrame on a lattice of signature (2, n); its reduced
                   lattice K has signature (1, n-1)
    form        -- VectorValuedForm on frame.lattice (the product exponents)
    weyl_frame  -- CuspFrame on frame.k_lattice, used for the Weyl vector
    convention  -- boundary convention passed through to the Weyl vector
    """

    __slots__ = ("frame", "form", "weyl_frame", "convention", "form_k")

    def __init__(self, frame, form, weyl_frame, convention="boundary-included"):
        sig = frame.lattice.signature()
        if sig[0] != 2:
            raise ValueError("product datum needs signature (2, n), got %s" % (sig,))
        if form.lattice is not frame.lattice and form.lattice.gram != frame.lattice.gram:
            raise ValueError("form lives on a different lattice than the frame")
        if not isinstance(weyl_frame, CuspFrame):
            raise ValueError("weyl_frame must be a CuspFrame on the reduced lattice")
        if weyl_frame.lattice.gram != frame.k_lattice.gram:
            raise ValueError("weyl_frame is not a frame on the reduced lattice")
        self.frame = frame
        self.form = form
        self.weyl_frame = weyl_frame
        self.convention = convention
        self.form_k = frame.reduce_form(form)

    def __repr__(self):
        return "ProductDatum(%s, weight %s)" % (self.frame.lattice, self.form.weight)


def lift_weight(datum):
    """Weight of the lifted product and whether it is the singular one.

    The weight is half the constant coefficient of the zero-class component;
    the singular weight depends only on the signature.
    """
    comp = datum.form.component(datum.frame.lattice.discriminant_form().zero())
    if comp.truncation <= 0:
        raise ValueError("zero-class component not known through the constant term")
    w = comp.coefficient(0) / 2
    singular = Fraction(datum.frame.lattice.signature()[1] - 2, 2)
    return {"lift_weight": w, "singular_weight": singular,
            "is_singular": w == singular}


def zero_orders(datum, lam):
    """Order of the lifted product along the divisor of a negative-norm vector.

    lam must be a primitive dual vector of negative norm (ambient
    coordinates); the order sums the exponent data over all positive
    multiples of lam.
    """
    m = datum.frame.lattice
    lam = [Fraction(x) for x in lam]
    if not m.is_in_dual(lam):
        raise ValueError("divisor vector must lie in the dual lattice")
    nrm = m.norm(lam)
    if nrm >= 0:
        raise ValueError("divisor vectors have negative norm, got %s" % nrm)
    pairings = [sum(m.gram[i][j] * lam[j] for j in range(m.rank))
                for i in range(m.rank)]
    g = 0
    for p in pairings:
        assert p.denominator == 1
        g = gcd(g, int(p))
    if g != 1:
        raise ValueError("divisor vector is imprimitive (content %d)" % g)

    disc = m.discriminant_form()
    minexp = Fraction(0)
    for cls in disc.classes():
        e = datum.form.component(cls).min_exponent()
        if e is not None:
            minexp = min(minexp, e)
    total = Fraction(0)
    x = 1
    while x * x * nrm / 2 >= minexp:
        cls = disc.class_of_dual([x * c for c in lam])
        total += datum.form.coefficient(cls, Fraction(x * x) * nrm / 2)
        x += 1
    return total


def scalar_constant(datum):
    """Constant prefactor contributed by the torsion classes along the cusp.

    Returns {"squared": bool, "value": ...}.  The defining exponents are half
    the constant coefficients on the isotropic-line classes; when one of them
    is a half-integer only the square of the constant is determined by this
    data, and the squared value is returned with "squared": True.
    """
    frame = datum.frame
    n = frame.level
    pairs = []  # (phase j/N, constant coefficient)
    for cls, phase in frame.isotropic_line_classes():
        if phase == 0:
            continue
        comp = datum.form.component(cls)
        if comp.truncation <= 0:
            raise ValueError("class %s not known through the constant term" % (cls,))
        c = comp.coefficient(0)
        if c.denominator != 1:
            raise ValueError("non-integral constant coefficient %s" % c)
        if c:
            pairs.append((phase, c))
    squared = any(c % 2 for _, c in pairs)
    num = cyc_one()
    den = cyc_one()
    for phase, c in pairs:
        e = int(c) if squared else int(c) // 2
        base = 1 - cyc_e(phase)
        for _ in range(abs(e)):
            if e > 0:
                num = num * base
            else:
                den = den * base
    num = num.try_reduce()
    den = den.try_reduce()
    # 1 - e(j/N) is never zero for j/N nonintegral, so the denominator is a
    # nonzero algebraic number; we can only divide once it is rational.
    if den.is_rational():
        value = num * (1 / den.rational_value())
        value = value.try_reduce()
        if value.is_rational():
            value = value.rational_value()
    else:
        value = (num, den)
    return {"squared": squared, "value": value, "level": n}


class GroupRingSeries:
    """Height-truncated element of the group ring of a Lorentzian lattice.

    Terms are keyed by lattice-dual vectors (coordinate tuples) and represent
    monomials relative to a base vector (the Weyl vector of the expansion):
    the stored key 0 is the leading monomial.  Every stored key has pairing
    against the height vector in [0, height_bound].  Torsion phases of
    denominator at most 2 are folded into rational signs on the
    coefficients; larger torsion is rejected upstream.
    """

    __slots__ = ("lattice", "height_vector", "height_bound", "base",
                 "terms", "norms", "heights", "_base_pair")

    def __init__(self, lattice, height_vector, height_bound, base,
                 terms, norms, heights):
        self.lattice = lattice
        self.height_vector = tuple(height_vector)
        self.height_bound = Fraction(height_bound)
        self.base = tuple(Fraction(x) for x in base)
        self.terms = terms
        self.norms = norms
        self.heights = heights
        self._base_pair = None
        for key, h in heights.items():
            assert 0 <= h <= self.height_bound, (key, h)

    def coefficient(self, key):
        key = tuple(Fraction(x) for x in key)
        h = self.lattice.bilinear(key, self.height_vector)
        if h > self.height_bound:
            raise KeyError("height %s beyond bound %s" % (h, self.height_bound))
        return self.terms.get(key, Fraction(0))

    def items(self):
        """Terms sorted by height, then by key."""
        return sorted(self.terms.items(),
                      key=lambda kv: (self.heights[kv[0]], kv[0]))

    def monomial_norm(self, key):
        """Norm of base + key (the actual exponent vector of the monomial)."""
        key = tuple(key)
        if key not in self.norms:
            key = tuple(Fraction(x) for x in key)
        k = self.lattice
        if self._base_pair is None:
            gb = [sum(k.gram[i][j] * self.base[j] for j in range(k.rank))
                  for i in range(k.rank)]
            self._base_pair = (tuple(gb), k.norm(self.base))
        gb, bnorm = self._base_pair
        cross = sum(a * b for a, b in zip(gb, key) if a and b)
        return bnorm + 2 * cross + self.norms[key]

    def with_term(self, key, coeff):
        """Copy with one extra term (diagnostics hook for support checks)."""
        key = tuple(Fraction(x) for x in key)
        terms = dict(self.terms)
        norms = dict(self.norms)
        heights = dict(self.heights)
        terms[key] = terms.get(key, Fraction(0)) + Fraction(coeff)
        norms[key] = self.lattice.norm(key)
        heights[key] = self.lattice.bilinear(key, self.height_vector)
        return GroupRingSeries(self.lattice, self.height_vector,
                               self.height_bound, self.base,
                               terms, norms, heights)

    def ray_slice(self, direction):
        """One-variable series of the terms proportional to a ray generator.

        direction is scaled to the primitive dual vector on its ray; the
        returned series has integer exponents n for the terms at n times
        that generator.
        """
        u = _primitive_dual(self.lattice, direction)
        uh = self.lattice.bilinear(u, self.height_vector)
        if uh <= 0:
            raise ValueError("ray has nonpositive height")
        coeffs = {}
        for key, c in self.terms.items():
            n = _ray_multiple(key, u)
            if n is not None:
                coeffs[n] = c
        trunc = self.height_bound / uh + 1
        return FracPowerSeries(coeffs, int(trunc))

    def __repr__(self):
        return "GroupRingSeries(%d terms, bound %s)" % (
            len(self.terms), self.height_bound)


def _primitive_dual(lat, v):
    """Primitive dual-lattice vector on the ray of v."""
    v = [Fraction(x) for x in v]
    if all(x == 0 for x in v):
        raise ValueError("zero vector spans no ray")
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    pair = [sum(lat.gram[i][j] * ints[j] for j in range(lat.rank))
            for i in range(lat.rank)]
    g = 0
    for x in pair:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("ray pairs trivially with the lattice")
    u = tuple(Fraction(x, g) for x in ints)
    if not lat.is_in_dual(u):
        raise ValueError("no dual vector on the given ray")
    return u


def _ray_multiple(key, u):
    """n with key == n*u (integer n >= 0), or None."""
    n = None
    for a, b in zip(key, u):
        if b == 0:
            if a != 0:
                return None
        else:
            m = Fraction(a) / b
            if n is None:
                n = m
            elif m != n:
                return None
    if n is None or n < 0 or n.denominator != 1:
        return None if n != 0 else 0
    return int(n)


def _sources(frame, form):
    """Exponent data of the reduced product, grouped by class of K.

    Returns (by_class, minexp) where by_class maps a class of the reduced
    discriminant group to [(component, phase)] over the admissible classes
    sitting above it.  Phases other than 0 and 1/2 are rejected: the series
    engine folds them into signs.
    """
    by_class = {}
    minexp = Fraction(0)
    for cls in frame.admissible_classes():
        comp = form.component(cls)
        if comp.min_exponent() is None:
            continue
        kcls, phase = frame.restrict_class(cls)
        if phase not in (0, HALF):
            raise NotImplementedError(
                "torsion phase %s: only 2-torsion phases are supported" % phase)
        by_class.setdefault(kcls, []).append((comp, phase))
        minexp = min(minexp, comp.min_exponent())
    return by_class, minexp


def _merged_constants(sources_for_class, expo):
    """(c0, c1): total exponent coefficient at phase 0 and phase 1/2."""
    c0 = Fraction(0)
    c1 = Fraction(0)
    for comp, phase in sources_for_class:
        if expo >= comp.truncation:
            raise ValueError(
                "component known through q^%s only; exponent q^%s needed"
                % (comp.truncation, expo))
        c = comp.coefficient(expo)
        if phase == 0:
            c0 += c
        else:
            c1 += c
    return c0, c1


def product_expansion(datum, height_vector, height_bound):
    """Expand the product of the datum through the given height bound.

    height_vector is a positive-norm vector of the reduced Lorentzian
    lattice K (integer coordinates), strictly inside a chamber adjacent to
    the cusp of the Weyl frame; the result collects every monomial whose
    height -- pairing against height_vector -- is at most height_bound,
    relative to the Weyl-vector monomial which is normalised to coefficient
    one.
    """
    frame = datum.frame
    k = frame.k_lattice
    h = [int(x) for x in height_vector]
    if list(map(Fraction, height_vector)) != list(map(Fraction, h)):
        raise ValueError("height vector must have integer coordinates in K")
    hnorm = k.norm(h)
    if hnorm <= 0:
        raise ValueError("height vector must have positive norm, got %s" % hnorm)
    z2 = [Fraction(x) for x in datum.weyl_frame.z]
    if k.bilinear(h, z2) <= 0:
        raise ValueError("height vector must lie in the forward cone of the cusp")
    bound = Fraction(height_bound)
    if bound <= 0:
        raise ValueError("height bound must be positive")

    # Weyl vector in the chamber of the height vector: the witness for the
    # second reduction is the definite part of the height vector itself.
    mu2 = datum.weyl_frame.split_vector(h)[0]
    wv = weyl_vector(datum.weyl_frame, datum.form_k, mu2,
                     convention=datum.convention)
    rho = tuple(Fraction(x) for x in wv.ambient())
    rho_h = k.bilinear(rho, h)
    if rho_h > bound:
        raise ValueError("Weyl vector has height %s beyond the bound %s"
                         % (rho_h, bound))

    by_class, minexp = _sources(frame, datum.form)
    disc_k = k.discriminant_form()

    gh = [sum(k.gram[i][j] * h[j] for j in range(k.rank)) for i in range(k.rank)]
    hsol, hg = _gcd_combination(gh)
    pbasis = integer_kernel([gh])
    assert len(pbasis) == k.rank - 1
    pgram = [[k.bilinear(u, v) for v in pbasis] for u in pbasis]
    neg = EvenLattice([[-x for x in row] for row in pgram]) if pbasis else None

    # The slab loop keys everything by den-rescaled integer coordinates so
    # that no rational arithmetic or Fraction hashing happens per vector.
    reps = {kcls: [Fraction(x) for x in disc_k.dual_representative(kcls)]
            for kcls in by_class}
    den = 1
    for d in reps.values():
        for x in d:
            den = den * x.denominator // gcd(den, x.denominator)
    sreps = {kcls: [int(x * den) for x in d] for kcls, d in reps.items()}
    shsol = [den * x for x in hsol]
    # sparse rows of the (rescaled) kernel basis, for the coordinate transform
    nz = [[(i, den * b[i]) for i in range(k.rank) if b[i]] for b in pbasis]
    assert all(x.denominator == 1 for x in z2)
    gz2 = [int(sum(k.gram[i][j] * z2[j] for j in range(k.rank)))
           for i in range(k.rank)]

    logterms = {}
    lognorms = {}
    logheights = {}

    def _slab(t, kcls, srcs):
        d = reps[kcls]
        dh = sum(a * b for a, b in zip(d, gh_frac))
        assert dh.denominator == 1
        s = t - int(dh)
        if s % hg:
            return
        q = s // hg
        sbase = [sreps[kcls][i] + q * shsol[i] for i in range(k.rank)]
        base = [d[i] + q * hsol[i] for i in range(k.rank)]
        tt = Fraction(t * t, hnorm)
        if neg is None:
            # rank-one K: the slab holds a single point, on the h-line
            cands = [((), tt - k.norm(base))]
            cands = [c for c in cands if c[1] <= tt - 2 * minexp]
        else:
            proj = [base[i] - Fraction(t * h[i], hnorm) for i in range(k.rank)]
            rhs = [sum(k.gram[i][j] * proj[j] for j in range(k.rank))
                   for i in range(k.rank)]
            prhs = [sum(b[i] * rhs[i] for i in range(k.rank)) for b in pbasis]
            pc = solve_frac([[Fraction(x) for x in row] for row in pgram], prhs)
            cands = neg.short_vectors(tt - 2 * minexp, offset=pc)
        jmax = int(bound // t)
        for w, nneg in cands:
            lam = list(sbase)
            for j, wj in enumerate(w):
                if wj:
                    for i, b in nz[j]:
                        lam[i] += wj * b
            lamsq = tt - nneg
            c0, c1 = _merged_constants(srcs, lamsq / 2)
            if not (c0 or c1):
                continue
            if lamsq < 0:
                p = 0
                for a, b in zip(lam, gz2):
                    if b:
                        p += a * b
                if p <= 0:
                    _check_cusp_side(datum, mu2,
                                     [Fraction(x, den) for x in lam], p)
            key = tuple(lam)
            for j in range(1, jmax + 1):
                coeff = -(c0 + (c1 if j % 2 == 0 else -c1)) / j
                if not coeff:
                    continue
                jkey = key if j == 1 else tuple(j * x for x in lam)
                logterms[jkey] = logterms.get(jkey, Fraction(0)) + coeff
                if jkey not in lognorms:
                    lognorms[jkey] = j * j * lamsq
                    logheights[jkey] = j * t

    gh_frac = [Fraction(x) for x in gh]
    tmax = int(bound)
    for t in range(1, tmax + 1):
        for kcls, srcs in by_class.items():
            _slab(t, kcls, srcs)

    _check_no_walls_through(k, by_class, minexp, gh, hg, hsol, disc_k,
                            pbasis, pgram, neg, nz)

    terms, norms, heights = _exp(k, logterms, lognorms, logheights, bound, den)
    return GroupRingSeries(k, h, bound, rho, terms, norms, heights)


def _check_cusp_side(datum, mu2, lam, pairing):
    """A negative-norm factor must lie on the cusp side of its wall.

    pairing carries the (rescaled) inner product of the factor with the
    cusp direction; only its sign matters, and the caller has already
    ruled out the positive case.
    """
    if pairing < 0:
        raise ValueError(
            "height vector is separated from the cusp by the wall of %s; "
            "no chamber adjacent to the cusp contains it" % (tuple(lam),))
    lk = datum.weyl_frame.split_vector(lam)[0]
    s = datum.weyl_frame.k_lattice.bilinear(lk, mu2)
    if s <= 0:
        raise ValueError(
            "height vector and the cusp chamber disagree across the "
            "wall of %s (through the cusp)" % (tuple(lam),))


def _check_no_walls_through(k, by_class, minexp, gh, hg, hsol, disc_k,
                            pbasis, pgram, neg, nz):
    """Reject height vectors lying on a wall (zero-height relevant vector)."""
    if neg is None or minexp == 0:
        return
    for kcls, srcs in by_class.items():
        d = [Fraction(x) for x in disc_k.dual_representative(kcls)]
        dh = sum(a * Fraction(b) for a, b in zip(d, gh))
        s = -int(dh)
        if s % hg:
            continue
        q = s // hg
        base = [d[i] + q * hsol[i] for i in range(k.rank)]
        rhs = [sum(k.gram[i][j] * base[j] for j in range(k.rank))
               for i in range(k.rank)]
        prhs = [sum(b[i] * rhs[i] for i in range(k.rank)) for b in pbasis]
        pc = solve_frac([[Fraction(x) for x in row] for row in pgram], prhs)
        for w, nneg in neg.short_vectors(-2 * minexp, offset=pc):
            if nneg == 0:
                continue  # the zero vector is not a wall
            lamsq = -nneg
            c0, c1 = _merged_constants(srcs, lamsq / 2)
            if c0 or c1:
                lam = list(base)
                for j, wj in enumerate(w):
                    if wj:
                        for i, b in nz[j]:
                            lam[i] += wj * b
                raise NonGenericWitness(
                    "height vector lies on the wall of %s" % (tuple(lam),))


def _exp(k, logterms, lognorms, logheights, bound, den):
    """Exponentiate a height-truncated log series (constant term zero).

    Keys of logterms are den-rescaled integer tuples (dual coordinates times
    den), so the pair loop runs in integer arithmetic throughout: norms come
    from norm(a + b) = norm(a) + norm(b) + 2 (a, b), with the Gram image of
    a key computed only when the key actually gets extended -- most keys sit
    at the top of the height window and never do.  Coordinates are mapped
    back to dual vectors at the end; when den == 1 the keys stay plain
    integer tuples (hashing and equality agree with Fraction keys).
    """
    rank = k.rank
    zero = (0,) * rank
    if not logterms:
        return ({zero: Fraction(1)}, {zero: Fraction(0)}, {zero: Fraction(0)})
    den2 = den * den
    gram = k.gram
    slog = []
    for key, c in logterms.items():
        sn = lognorms[key] * den2
        assert sn.denominator == 1
        slog.append((key, c, int(sn), logheights[key]))
    slog.sort(key=lambda e: e[3])
    minh = slog[0][3]
    assert minh > 0
    acc = {zero: Fraction(1)}
    info = {zero: (0, 0)}  # scaled key -> (scaled norm, height)
    gvcache = {zero: zero}

    def _gram_vec(key):
        gv = gvcache.get(key)
        if gv is None:
            nzj = [j for j, x in enumerate(key) if x]
            gv = tuple(sum(gram[i][j] * key[j] for j in nzj)
                       for i in range(rank))
            gvcache[key] = gv
        return gv

    term = {}
    for kb, cb, snb, hb in slog:  # first power of the log
        if hb > bound:
            continue
        info[kb] = (snb, hb)
        term[kb] = cb
        acc[kb] = acc.get(kb, Fraction(0)) + cb
    for m in range(2, bound // minh + 1):
        nxt = {}
        for ka, ca in term.items():
            sna, ha = info[ka]
            if ha + minh > bound:
                continue
            gva = _gram_vec(ka)
            for kb, cb, snb, hb in slog:
                if ha + hb > bound:
                    break
                key = tuple(x + y for x, y in zip(ka, kb))
                prev = nxt.get(key)
                if prev is None:
                    if key not in info:
                        cross = 0
                        for x, y in zip(gva, kb):
                            if y:
                                cross += x * y
                        info[key] = (sna + snb + 2 * cross, ha + hb)
                    nxt[key] = ca * cb
                else:
                    nxt[key] = prev + ca * cb
        if not nxt:
            break
        term = {}
        for key, c in nxt.items():
            if c:
                c = c / m
                term[key] = c
                acc[key] = acc.get(key, Fraction(0)) + c
    terms = {}
    norms = {}
    heights = {}
    for skey, c in acc.items():
        if not c:
            continue
        key = skey if den == 1 else tuple(Fraction(x, den) for x in skey)
        sn, h = info[skey]
        terms[key] = c
        norms[key] = Fraction(sn, den2)
        heights[key] = Fraction(h)
    return terms, norms, heights


def ray_expansion(datum, ray, order):
    """One-variable expansion of the product along an isotropic ray.

    ray spans a norm-zero forward direction of the reduced lattice K; only
    factors proportional to it contribute to the monomials on the ray (a
    sum of forward vectors lies on an extremal ray only if every summand
    does), so the restriction is the product over the multiples of the
    primitive dual generator u.  Returns the series in x = e((u, Z)),
    normalised to leading coefficient one, through x^order.
    """
    frame = datum.frame
    k = frame.k_lattice
    u = _primitive_dual(k, ray)
    if k.norm(u) != 0:
        raise ValueError("ray must be isotropic, norm %s" % k.norm(u))
    wf = datum.weyl_frame
    fwd = wf.ambient_vector([0] * wf.k_lattice.rank, 1, 1)
    if k.bilinear(u, fwd) <= 0:
        raise ValueError("ray must generate a forward direction")
    by_class, _ = _sources(frame, datum.form)
    disc_k = k.discriminant_form()

    log1 = {}
    for j in range(1, order + 1):
        kcls = disc_k.class_of_dual([j * x for x in u])
        srcs = by_class.get(kcls)
        if not srcs:
            continue
        c0, c1 = _merged_constants(srcs, Fraction(0))
        if not (c0 or c1):
            continue
        for m in range(1, order // j + 1):
            coeff = -(c0 + (c1 if m % 2 == 0 else -c1)) / m
            if coeff:
                log1[j * m] = log1.get(j * m, Fraction(0)) + coeff

    logser = FracPowerSeries(log1, order + 1)
    acc = FracPowerSeries.one().truncate(order + 1)
    term = FracPowerSeries.one().truncate(order + 1)
    for m in range(1, order + 1):
        term = term * logser * Fraction(1, m)
        if term.min_exponent() is None:
            break
        acc = acc + term
    return acc


def singular_weight_support(series, datum):
    """Check that every surviving monomial is an isotropic exponent vector.

    Only meaningful at singular weight; raises otherwise.  Returns a dict
    with the violating terms (key, coefficient, norm of base + key); an
    empty list certifies the support through the series' height bound.
    """
    lw = lift_weight(datum)
    if not lw["is_singular"]:
        raise ValueError(
            "support statement needs singular weight: lift weight %s, "
            "singular weight %s" % (lw["lift_weight"], lw["singular_weight"]))
    violations = []
    for key, c in series.items():
        if not c:
            continue
        nrm = series.monomial_norm(key)
        if nrm != 0:
            violations.append({"key": key, "coeff": c, "norm": nrm})
    return {"checked": len(series.terms), "violations": violations}
