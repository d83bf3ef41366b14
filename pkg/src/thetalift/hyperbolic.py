"""Weyl vectors, wall crossing, and related constants on Lorentzian lattices.

A form of weight 1/2 - b/2 on a lattice of signature (1, b), reduced along a
cusp frame, determines a piecewise linear function on the positive cone.  The
walls are the hyperplanes orthogonal to the finitely many dual vectors of the
negative definite reduced lattice whose half-norm carries a nonzero
coefficient; each chamber carries an exact rational Weyl vector.  This module
computes those vectors by closed formula, the jump across a wall, pointwise
evaluation by chamber walking, and several integrality by-products: the
vector-system identity, inner products against the weight-3/2 class-number
series, 24-divisibility of theta-contraction constants, and a certificate
that the relevant negative-norm vectors act by integral reflections.
"""

from fractions import Fraction
from math import gcd

from ._linalg import integer_kernel, lcm, mat_inverse_int, mat_vec, smith_normal_form, solve_frac
from .frames import CuspFrame
from .lattice import EvenLattice, gram_content
from .modforms import eisenstein_series, periodic_bernoulli, zagier_g1
from .qseries import FracPowerSeries
from .weilrep import VectorValuedForm, contract_forms, dual_relabel


class NonGenericWitness(ValueError):
    """The chamber witness pairs to zero with some relevant vector."""


class WeylChamber:
    """A chamber of the reduced negative definite space, named by a witness."""

    __slots__ = ("frame", "witness")

    def __init__(self, frame, witness):
        self.frame = frame
        witness = tuple(Fraction(x) for x in witness)
        if len(witness) != frame.k_lattice.rank:
            raise ValueError("witness has wrong length")
        self.witness = witness

    def __repr__(self):
        return "WeylChamber(witness=%s)" % (self.witness,)


def _witness_of(chamber):
    if isinstance(chamber, WeylChamber):
        return chamber.witness
    return tuple(Fraction(x) for x in chamber)


class WeylVector:
    """Chamber datum (rho_k, rho_zprime, rho_z) with its ambient realization."""

    __slots__ = ("frame", "rho_k", "rho_zprime", "rho_z", "convention")

    def __init__(self, frame, rho_k, rho_zprime, rho_z, convention):
        self.frame = frame
        self.rho_k = tuple(Fraction(x) for x in rho_k)
        self.rho_zprime = Fraction(rho_zprime)
        self.rho_z = Fraction(rho_z)
        self.convention = convention

    def ambient(self):
        return self.frame.ambient_vector(self.rho_k, self.rho_zprime, self.rho_z)

    def norm(self):
        return self.frame.lattice.norm(self.ambient())

    def pair(self, v):
        return self.frame.lattice.bilinear(self.ambient(), v)

    def is_zero(self):
        return (not any(self.rho_k)) and self.rho_zprime == 0 and self.rho_z == 0

    def __eq__(self, other):
        if not isinstance(other, WeylVector):
            return NotImplemented
        return (self.frame is other.frame and self.rho_k == other.rho_k
                and self.rho_zprime == other.rho_zprime and self.rho_z == other.rho_z)

    def __repr__(self):
        return "WeylVector(k=%s, zprime=%s, z=%s)" % (
            self.rho_k, self.rho_zprime, self.rho_z)


# -- relevant-vector enumeration -------------------------------------------


def _relevant_vectors(frame, form):
    """[(lam, norm, [(cls, coeff, phase), ...])] over nonzero dual vectors of
    the reduced lattice whose half-norm is a coefficient-bearing exponent of
    some admissible component.  lam is given in reduced-lattice coordinates;
    the list is finite because the reduced lattice is negative definite.
    """
    K = frame.k_lattice
    if K.rank == 0:
        return []
    if not K.is_negative_definite():
        raise ValueError("reduced lattice must be negative definite")
    disc_k = K.discriminant_form()
    kneg = K.rescale(-1)
    sources = {}
    minexp = Fraction(0)
    for cls in frame.admissible_classes():
        comp = form.component(cls)
        gamma, phase = frame.restrict_class(cls)
        sources.setdefault(gamma, []).append((cls, comp, phase))
        m = comp.min_exponent()
        if m is not None and m < minexp:
            minexp = m
    bound = -2 * minexp
    # the search ball is fixed by the most negative exponent alone
    needed = {e for srcs in sources.values() for _, comp, _ in srcs
              for e, c in comp.items() if c and e < 0}
    assert all(-2 * e <= bound for e in needed)
    out = []
    for gamma, srcs in sources.items():
        if bound == 0:
            break
        off = disc_k.dual_representative(gamma)
        for coords, nrm in kneg.short_vectors(bound, offset=off):
            if nrm == 0:
                continue  # lam = 0 is the boundary term, handled separately
            lam = tuple(o + c for o, c in zip(off, coords))
            entry = []
            for cls, comp, phase in srcs:
                c = comp.coefficient(-nrm / 2)
                if c:
                    entry.append((cls, c, phase))
            if entry:
                out.append((lam, -nrm, entry))
    return out


def _negdef_relevant(lat, form):
    """[(lam, coeff)] over nonzero dual vectors of a definite lattice with a
    nonzero coefficient at exponent lam^2/2; no frame involved."""
    if lat.rank == 0:
        return []
    if not lat.is_negative_definite():
        raise ValueError("lattice must be negative definite")
    disc = lat.discriminant_form()
    neg = lat.rescale(-1)
    out = []
    for cls in disc.classes():
        comp = form.component(cls)
        exps = [e for e, c in comp.items() if c and e <= 0]
        if not exps:
            continue
        bound = -2 * min(exps)
        if bound == 0:
            continue
        off = disc.dual_representative(cls)
        for coords, nrm in neg.short_vectors(bound, offset=off):
            if nrm == 0:
                continue
            c = comp.coefficient(-nrm / 2)
            if c:
                out.append((tuple(o + x for o, x in zip(off, coords)), c))
    return out


# -- constants --------------------------------------------------------------


def phi_negdef_constant(lat, form):
    """Constant term of (conjugated theta) * form * E2 on a negative definite
    lattice; the value that divides by 24 into the z'-component of a Weyl
    vector.  Raises when the supplied truncations cannot isolate it."""
    if lat.rank and not lat.is_negative_definite():
        raise ValueError("lattice must be negative definite")
    mexp = Fraction(0)
    for ser in form.components.values():
        m = ser.min_exponent()
        if m is not None and m < mexp:
            mexp = m
    prec = int((-mexp).__ceil__()) + 1
    neg = lat.rescale(-1)
    theta = neg.theta_series(prec)
    relabel = dual_relabel(lat.discriminant_form(), neg.discriminant_form())
    total = contract_forms(form, theta, relabel) * eisenstein_series(2, prec + 1)
    if total.truncation <= 0:
        raise ValueError("series precision too low to isolate the constant term")
    return total.coefficient(Fraction(0))


def congruence_check(lat, form, ideal_gen=None):
    """(constant, divisible24) for the theta contraction of a definite lattice.

    constant is the constant term of form * theta (theta conjugated when the
    lattice is negative definite); the second entry tests whether ideal_gen
    times the constant is divisible by 24.  ideal_gen defaults to the gcd of
    the Gram entries.
    """
    N = ideal_gen if ideal_gen is not None else gram_content(lat)
    mexp = Fraction(0)
    for ser in form.components.values():
        m = ser.min_exponent()
        if m is not None and m < mexp:
            mexp = m
    prec = int((-mexp).__ceil__()) + 1
    if lat.rank == 0 or lat.is_positive_definite():
        total = contract_forms(form, lat.theta_series(prec))
    elif lat.is_negative_definite():
        neg = lat.rescale(-1)
        relabel = dual_relabel(lat.discriminant_form(), neg.discriminant_form())
        total = contract_forms(form, neg.theta_series(prec), relabel)
    else:
        raise ValueError("lattice must be definite")
    if total.truncation <= 0:
        raise ValueError("series precision too low to isolate the constant term")
    const = total.coefficient(Fraction(0))
    return const, (N * const) % 24 == 0


def vector_system_check(lat, form, extra_mus=None):
    """Verify sum of c(lam^2/2) (lam, mu)^2 = -2 * index * mu^2 on a negative
    definite lattice, with index = phi_negdef_constant / 24.

    Checked for mu over the basis, all pairwise basis sums, and any extra_mus;
    by polarization of the quadratic identity this covers every mu.
    Returns (holds, index).
    """
    index = phi_negdef_constant(lat, form) / 24
    pairs = _negdef_relevant(lat, form)
    n = lat.rank
    mus = []
    for i in range(n):
        mus.append(tuple(int(i == j) for j in range(n)))
    for i in range(n):
        for j in range(i + 1, n):
            mus.append(tuple(int(k == i) + int(k == j) for k in range(n)))
    for mu in extra_mus or []:
        mus.append(tuple(Fraction(x) for x in mu))
    holds = True
    for mu in mus:
        lhs = sum((c * lat.bilinear(lam, mu) ** 2 for lam, c in pairs),
                  Fraction(0))
        if lhs != -2 * index * lat.norm(mu):
            holds = False
            break
    return holds, index


# -- Weyl vectors and wall crossing -----------------------------------------


def weyl_vector(frame, form, chamber, convention="boundary-included"):
    """Exact Weyl vector of the chamber, as frame coordinates.

    The k-component sums coefficient-weighted relevant vectors on the positive
    side of the witness; the z'-component is phi_negdef_constant / 24 of the
    reduced form; the z-component collects the periodic-Bernoulli phase terms.
    `convention` toggles whether the zero-vector classes on the isotropic line
    contribute a quarter-weight boundary term to the z-component; the default
    is the one calibrated against the known norms 1240, 620, 0.
    """
    if convention not in ("boundary-included", "boundary-excluded"):
        raise ValueError("unknown convention %r" % (convention,))
    witness = _witness_of(chamber)
    K = frame.k_lattice
    fk = frame.reduce_form(form)
    rho_zprime = phi_negdef_constant(K, fk) / 24
    rho_k = [Fraction(0)] * K.rank
    rho_z = Fraction(0)
    for lam, _nrm, entry in _relevant_vectors(frame, form):
        s = K.bilinear(lam, witness)
        if s == 0:
            raise NonGenericWitness("witness is orthogonal to %s" % (lam,))
        if s < 0:
            continue
        for _cls, c, phase in entry:
            w = c * (2 * phase - 1) / 2
            for i in range(K.rank):
                rho_k[i] += w * lam[i]
            rho_z += c * periodic_bernoulli(2, phase) / 2
    if convention == "boundary-included":
        for cls, phase in frame.isotropic_line_classes():
            comp = form.component(cls)
            if not comp.is_zero() and comp.truncation <= 0:
                raise ValueError("series precision too low for the boundary term")
            c0 = comp.coefficient(Fraction(0)) if comp.truncation > 0 else Fraction(0)
            rho_z += c0 * periodic_bernoulli(2, phase) / 4
    rho_z -= rho_zprime * frame.zprime_norm / 2
    return WeylVector(frame, rho_k, rho_zprime, rho_z, convention)


def _parallel(a, b):
    return all(a[i] * b[j] == a[j] * b[i]
               for i in range(len(a)) for j in range(i + 1, len(a)))


def wall_crossing_delta(frame, form, wall, chamber):
    """Difference of the Weyl vectors on the two sides of a wall.

    `wall` is a negative-norm vector of the reduced space; the result is
    rho(chamber side) - rho(mirror side), as an ambient rational vector.  Only
    relevant vectors proportional to the wall contribute.
    """
    K = frame.k_lattice
    wall = [Fraction(x) for x in wall]
    if K.norm(wall) >= 0:
        raise ValueError("wall vector must have negative norm")
    witness = _witness_of(chamber)
    delta_k = [Fraction(0)] * K.rank
    delta_z = Fraction(0)
    for lam, _nrm, entry in _relevant_vectors(frame, form):
        if not _parallel(lam, wall):
            continue
        s = K.bilinear(lam, witness)
        if s == 0:
            raise NonGenericWitness("witness lies on the wall of %s" % (lam,))
        sgn = 1 if s > 0 else -1
        for _cls, c, phase in entry:
            w = c * (2 * phase - 1) / 2
            for i in range(K.rank):
                delta_k[i] += sgn * w * lam[i]
            delta_z += sgn * c * periodic_bernoulli(2, phase) / 2
    return frame.ambient_vector(delta_k, 0, delta_z)


def _primitive_direction(lam):
    """Canonical primitive integer vector on the line of lam."""
    den = 1
    for x in lam:
        den = lcm(den, Fraction(x).denominator)
    v = [int(Fraction(x) * den) for x in lam]
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    v = [x // g for x in v]
    lead = next(x for x in v if x)
    return tuple(-x for x in v) if lead < 0 else tuple(v)


def phi_eval_hyperbolic(frame, form, chamber, v, convention="boundary-included"):
    """Evaluate the piecewise linear function at a positive-norm point.

    Resolves the chamber of v by walking from the witness chamber across every
    wall whose sign flips, accumulating wall_crossing_delta; the result is
    checked against a direct computation in the target chamber.  Returns
    (WeylVector of the target chamber, pairing with v).
    """
    M = frame.lattice
    v = [Fraction(x) for x in v]
    if M.norm(v) <= 0:
        raise ValueError("evaluation point must have positive norm")
    if M.bilinear(v, frame.z) <= 0:
        raise ValueError("evaluation point must lie in the forward cone")
    witness = _witness_of(chamber)
    K = frame.k_lattice
    vk, _, _ = frame.split_vector(v)
    crossed = {}
    for lam, _nrm, _entry in _relevant_vectors(frame, form):
        s0 = K.bilinear(lam, witness)
        s1 = K.bilinear(lam, vk)
        if s0 == 0:
            raise NonGenericWitness("witness is orthogonal to %s" % (lam,))
        if s1 == 0:
            raise ValueError("evaluation point lies on the wall of %s" % (lam,))
        if (s0 > 0) != (s1 > 0):
            crossed.setdefault(_primitive_direction(lam), lam)
    rho = weyl_vector(frame, form, chamber, convention).ambient()
    for wall in crossed.values():
        delta = wall_crossing_delta(frame, form, wall, chamber)
        rho = [a - b for a, b in zip(rho, delta)]
    target = weyl_vector(frame, form, WeylChamber(frame, vk), convention)
    assert rho == target.ambient()
    return target, M.bilinear(rho, v)


# -- inner products against the class-number series -------------------------


def weyl_inner_product(frame, form, lam):
    """Constant term of -(form * class-number pairing * coset thetas) for a
    primitive norm-2 vector lam: the exact value of (rho, lam) when lam lies
    in the chamber closure.

    The cosets of (lam + lam^perp) in the ambient lattice are graded by their
    pairing with lam mod 2, the orthogonal projections away from lam are
    summed into two theta series, and these pair against the components of
    the weight-3/2 class-number form.  Only unimodular ambient lattices are
    supported (the ambient form is a scalar); only norm 2 is supported.
    """
    M = frame.lattice
    if M.disc_order() != 1:
        raise NotImplementedError("ambient lattice must be unimodular")
    lam = [int(x) for x in lam]
    if M.norm(lam) != 2:
        raise NotImplementedError("only norm-2 vectors are supported")
    g = 0
    for x in lam:
        g = gcd(g, abs(x))
    if g != 1:
        raise ValueError("vector must be primitive")
    glam = mat_vec(M.gram, lam)
    pbasis = integer_kernel([glam])
    pgram = [[int(M.bilinear(u, w)) for w in pbasis] for u in pbasis]
    perp = EvenLattice(pgram, name="perp")
    if not perp.is_negative_definite():
        raise ValueError("orthogonal complement must be negative definite")
    # coset representatives of the ambient modulo (perp + Z lam)
    cols = [[b[i] for b in pbasis] + [lam[i]] for i in range(M.rank)]
    snf, u, _ = smith_normal_form(cols)
    uinv = mat_inverse_int(u)
    sizes = [snf[i][i] for i in range(M.rank)]
    reps = [[0] * M.rank]
    for i, s in enumerate(sizes):
        reps = [[*r[:i], k, *r[i + 1:]] for r in reps for k in range(s)]
    reps = [mat_vec(uinv, r) for r in reps]

    form0 = form.component(M.discriminant_form().zero())
    m0 = form0.min_exponent()
    prec = int((-(m0 if m0 is not None and m0 < 0 else Fraction(0))).__ceil__()) + 2
    neg = perp.rescale(-1)
    zero = FracPowerSeries.zero(truncation=Fraction(prec))
    thetas = {0: zero, 1: zero}
    for r in reps:
        j = int(M.bilinear(r, lam)) % 2
        # project away from lam; the result pairs rationally with pbasis
        pr = [Fraction(x) - M.bilinear(r, lam) * l / 2 for x, l in zip(r, lam)]
        pcoords = solve_frac(pgram, [M.bilinear(pr, b) for b in pbasis])
        counts = neg.short_vector_counts(2 * Fraction(prec), offset=pcoords)
        ser = FracPowerSeries({nrm / 2: Fraction(cnt)
                               for nrm, cnt in counts.items()},
                              truncation=Fraction(prec))
        thetas[j] = thetas[j] + ser
    g1 = zagier_g1(prec)
    lat1 = g1.lattice.discriminant_form()
    pairing = (thetas[0] * g1.component(lat1.zero())
               + thetas[1] * g1.component((1,)))
    total = -(form0 * pairing)
    if total.truncation <= 0:
        raise ValueError("series precision too low to isolate the constant term")
    return total.coefficient(Fraction(0))


# -- reflection certificates -------------------------------------------------


def _class_order(disc, cls):
    out = 1
    for a, m in zip(cls, disc.s):
        if a:
            out = lcm(out, m // gcd(m, a))
    return out


def reflective_certificate(frame, form, chamber, convention="boundary-included"):
    """Certify that every coefficient-bearing negative-norm dual vector acts
    by an integral reflection, and classify the chamber geometry.

    For a dual vector lam of norm n in class delta, the reflection sends x to
    x - (x, lam) t lam with t = 2/n; it maps the lattice into itself whenever
    t is an integer and t*delta vanishes in the discriminant group, which
    covers every vector of the class at once.  Classes failing that sufficient
    test are reported as uncertified, not as disproved.  The report includes
    the Weyl vector and the classification by its norm: positive norm means
    the reflection subgroup has finite index; norm 0 with nonzero vector means
    a virtually abelian quotient; otherwise no conclusion.
    """
    M = frame.lattice
    disc = M.discriminant_form()
    rows = []
    certified = True
    for cls in disc.classes():
        comp = form.component(cls)
        for e, c in comp.items():
            if not c or e >= 0:
                continue
            n = 2 * e
            t = Fraction(2) / n
            ok = t.denominator == 1 and int(t) % _class_order(disc, cls) == 0
            rows.append({"class": cls, "norm": n, "coeff": c, "certified": ok})
            certified = certified and ok
    wv = weyl_vector(frame, form, chamber, convention)
    nn = wv.norm()
    if nn > 0:
        classification = "finite index reflection group"
    elif not wv.is_zero():
        classification = "virtually abelian quotient"
    else:
        classification = "no conclusion"
    return {
        "reflective": certified,
        "classes": rows,
        "weyl_vector": wv,
        "weyl_norm": nn,
        "classification": classification,
    }
