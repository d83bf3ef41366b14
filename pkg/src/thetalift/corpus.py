"""Bundled even lattices, input forms, and cusp reductions.

The command line and the regression suite draw all of their "well known"
data from here: a catalogue of named lattices, the input forms whose
coefficients are known exactly (eta quotients, Eisenstein/discriminant
quotients, a truncated half-integral-weight seed, a theta quotient), and
ready-made cusp frames with chamber witnesses for the reductions the
tools perform.
"""

from fractions import Fraction
from math import gcd
import random

from ._linalg import solve_frac
from .frames import CuspFrame
from .hyperbolic import NonGenericWitness, WeylChamber, weyl_vector
from .lattice import (EvenLattice, e8, even_sublattice_of_standard,
                      hyperbolic_plane, ii_lattice, leech, root_lattice_a,
                      root_lattice_d)
from .modforms import delta_series, eisenstein_series, eta_quotient
from .products import ProductDatum
from .qseries import FracPowerSeries
from .shimura import ShimuraInput
from .weilrep import VectorValuedForm

HALF = Fraction(1, 2)


# -- named lattices ---------------------------------------------------------


def _leech_split_plane_model():
    # split-plane presentation of the even unimodular lattice of signature
    # (2, 26): two hyperbolic planes on top of a definite block of minimum 4,
    # so the distinguished cusp frame below has no chamber walls through it
    lat = hyperbolic_plane().direct_sum(hyperbolic_plane())
    lat = lat.direct_sum(leech().rescale(-1))
    lat.name = "II(2,26)"
    return lat


_REGISTRY = {
    "A1": lambda: root_lattice_a(1),
    "A1(-1)": lambda: root_lattice_a(1).rescale(-1),
    "A2": lambda: root_lattice_a(2),
    "D6": lambda: root_lattice_d(6),
    "E8": e8,
    "E8(-1)": lambda: e8().rescale(-1),
    "E8^3": lambda: e8().direct_sum(e8()).direct_sum(e8()),
    "U": hyperbolic_plane,
    "U(2)": lambda: hyperbolic_plane(2),
    "Leech": leech,
    "Leech(-1)": lambda: leech().rescale(-1),
    "II(1,1)": lambda: ii_lattice(1, 1),
    "II(1,9)": lambda: ii_lattice(1, 9),
    "II(1,17)": lambda: ii_lattice(1, 17),
    "II(1,25)": lambda: ii_lattice(1, 25),
    "II(2,26)": _leech_split_plane_model,
    "evenI(1,9)": lambda: even_sublattice_of_standard(1, 9),
    "evenI(1,19)": lambda: even_sublattice_of_standard(1, 19),
    "evenI(2,10)": lambda: even_sublattice_of_standard(2, 10),
}


def lattice_names():
    return sorted(_REGISTRY)


def named_lattice(name):
    try:
        build = _REGISTRY[name]
    except KeyError:
        raise ValueError("unknown lattice %r; available: %s"
                         % (name, ", ".join(lattice_names())))
    return build()


def weil_relation_corpus():
    """The seven-lattice battery for the generator-relation checks."""
    return [named_lattice(n) for n in
            ("A1", "A1(-1)", "E8", "U", "U(2)", "evenI(2,10)", "A2")]


# -- coordinate helpers -----------------------------------------------------


def _standard_coords(p, q, ambient):
    """Basis coordinates in evenI(p, q) of a vector given in the ambient
    diagonal coordinates (the basis rows mirror the lattice constructor:
    e1+e2 followed by the consecutive differences)."""
    n = p + q
    rows = [[1, 1] + [0] * (n - 2)]
    for i in range(n - 1):
        r = [0] * n
        r[i], r[i + 1] = 1, -1
        rows.append(r)
    cols = [[Fraction(rows[j][i]) for j in range(n)] for i in range(n)]
    return solve_frac(cols, [Fraction(x) for x in ambient])


def _int_vec(v):
    out = []
    for x in v:
        x = Fraction(x)
        assert x.denominator == 1
        out.append(int(x))
    return out


def _primitive_int_vec(v):
    v = _int_vec(v)
    g = 0
    for x in v:
        g = gcd(g, x)
    assert g > 0
    return [x // g for x in v]


# -- input forms ------------------------------------------------------------


def one_class_form(lat, numerator_power, prec):
    """E4^k / Delta as a one-component form on a unimodular lattice.

    Weight 4k - 12; integer exponents from -1 on, known through q^(prec-1).
    """
    if lat.disc_order() != 1:
        raise ValueError("one_class_form needs a unimodular lattice")
    num = eisenstein_series(4, prec + 2) ** numerator_power
    series = (num / delta_series(prec + 2)).truncate(prec)
    return VectorValuedForm(lat, Fraction(4 * numerator_power - 12),
                            {lat.discriminant_form().zero(): series})


def constant_form(lat, prec=4):
    """The constant 1 on the trivial class of a unimodular lattice."""
    if lat.disc_order() != 1:
        raise ValueError("constant_form needs a unimodular lattice")
    series = FracPowerSeries({0: Fraction(1)}, truncation=prec)
    return VectorValuedForm(lat, Fraction(0),
                            {lat.discriminant_form().zero(): series})


def eta_octet_form(prec=8):
    """The weight -4 eta-quotient form on evenI(2,10).

    The trivial class carries 8 eta(2t)^8/eta(t)^16; the two other classes
    of integral norm carry its negative; the class of the odd unit vector
    carries the half-integral combination q^(-1/2) + 36 q^(1/2) + ... whose
    integral part cancels exactly.
    """
    lat = named_lattice("evenI(2,10)")
    disc = lat.discriminant_form()
    base = eta_quotient([(2, 8), (1, -16)], prec) * 8
    half = eta_quotient([(HALF, 8), (1, -16)], prec) + base
    kept = {}
    for e, c in half.items():
        if Fraction(e) % 1 == HALF:
            kept[e] = c
        elif c:
            raise AssertionError("integral part failed to cancel at q^%s" % (e,))
    half = FracPowerSeries(kept, truncation=half.truncation)

    cls_s = disc.class_of_dual(_standard_coords(2, 10, [HALF] * 12))
    cls_e1 = disc.class_of_dual(_standard_coords(2, 10, [1] + [0] * 11))
    cls_mix = disc.add(cls_s, cls_e1)
    comps = {disc.zero(): base, cls_s: base * (-1), cls_mix: base * (-1),
             cls_e1: half}
    assert len(comps) == 4
    return VectorValuedForm(lat, Fraction(-4), comps)


def minus_half_seed_form():
    """Weight -1/2 form on the rank-1 lattice [-2], known only through its
    first displayed coefficients: constant 10 on the trivial class, leading
    q^(-1/4) on the other."""
    lat = EvenLattice([[-2]], "A1(-1)")
    disc = lat.discriminant_form()
    other = [c for c in disc.classes() if c != disc.zero()][0]
    comps = {
        disc.zero(): FracPowerSeries({0: Fraction(10)}, truncation=1),
        other: FracPowerSeries({Fraction(-1, 4): Fraction(1)},
                               truncation=Fraction(3, 4)),
    }
    return VectorValuedForm(lat, Fraction(-1, 2), comps)


def reflective_theta_form(prec=6):
    """Theta series of D6 divided by Delta, carried over to the classes of
    evenI(1,19) (matched by their quadratic values; the two classes of value
    3/4 carry equal components, so the matching is unambiguous)."""
    d6 = named_lattice("D6")
    target = named_lattice("evenI(1,19)")
    theta = d6.theta_series(prec)
    dd = d6.discriminant_form()
    dt = target.discriminant_form()
    den = delta_series(prec + 2)
    used = set()
    comps = {}
    for cls in dd.classes():
        match = [t for t in dt.classes()
                 if t not in used and dt.q_value(t) == dd.q_value(cls)]
        assert match
        used.add(match[0])
        comps[match[0]] = (theta.component(cls) / den).truncate(prec)
    return VectorValuedForm(target, Fraction(3 - 12), comps)


def singular_lift_stream():
    """Coefficient stream of the weight -3/2 input with principal part
    q^(-3), read off at square arguments by the lift."""
    vals = {-3: 1, 1: 64, 4: -32384, 5: 131535, 8: -4257024, 9: 11535936}
    return ShimuraInput(2, {k: Fraction(v) for k, v in vals.items()}, 9)


_FORM_BUILDERS = {
    "1/delta": lambda lat, prec: one_class_form(lat, 0, prec),
    "e4/delta": lambda lat, prec: one_class_form(lat, 1, prec),
    "e4^2/delta": lambda lat, prec: one_class_form(lat, 2, prec),
    "e4^3/delta": lambda lat, prec: one_class_form(lat, 3, prec),
    "one": lambda lat, prec: constant_form(lat, prec),
    "eta-octet": lambda lat, prec: eta_octet_form(prec),
    "theta-d6/delta": lambda lat, prec: reflective_theta_form(prec),
    "half-integral-seed": lambda lat, prec: minus_half_seed_form(),
}


def form_names():
    return sorted(_FORM_BUILDERS)


def named_form(name, lat, prec=8):
    """Build a bundled input form for the given lattice."""
    try:
        build = _FORM_BUILDERS[name]
    except KeyError:
        raise ValueError("unknown form %r; available: %s"
                         % (name, ", ".join(form_names())))
    form = build(lat, prec)
    if form.lattice.gram != lat.gram:
        raise ValueError("form %r is fixed to the lattice %s"
                         % (name, form.lattice.name))
    return form


# -- frames, witnesses, product data ----------------------------------------


def u_cusp_frame(lat):
    """Frame at the cusp of the first basis vector (which must be isotropic,
    as in the split-plane presentations above)."""
    return CuspFrame(lat, [1] + [0] * (lat.rank - 1))


def root_height_witness(lat):
    """Dual functional pairing to 1 with every basis vector: a chamber
    interior point whenever the relevant vectors are roots of the basis'
    root system (their height never vanishes)."""
    g = [[Fraction(x) for x in row] for row in lat.gram]
    return solve_frac(g, [Fraction(1)] * lat.rank)


def generic_witness(frame, form, tries=64):
    """Deterministic search for a chamber witness off every wall."""
    rank = frame.k_lattice.rank
    if rank == 0:
        return []
    rng = random.Random(11213)
    last = None
    for _ in range(tries):
        w = [Fraction(rng.randrange(-2000, 2001), 1997) for _ in range(rank)]
        try:
            weyl_vector(frame, form, WeylChamber(frame, w))
        except NonGenericWitness as err:
            last = err
            continue
        return w
    raise NonGenericWitness("no generic witness found in %d tries: %s"
                            % (tries, last))


def weyl_setup(name, form_name, prec=8):
    """(frame, form, chamber) at the first-basis-vector cusp of a named
    Lorentzian unimodular lattice, with the all-ones chamber witness."""
    lat = named_lattice(name)
    frame = u_cusp_frame(lat)
    form = named_form(form_name, lat, prec)
    k = frame.k_lattice
    wit = root_height_witness(k) if k.rank else []
    return frame, form, WeylChamber(frame, wit)


def reflective_setup(prec=6):
    """(frame, form, chamber) for the theta-quotient form on evenI(1,19),
    reduced at the cusp of the ambient vector e1 + e2."""
    lat = named_lattice("evenI(1,19)")
    z = _int_vec(_standard_coords(1, 19, [1, 1] + [0] * 18))
    frame = CuspFrame(lat, z)
    form = reflective_theta_form(prec)
    wit = generic_witness(frame, form)
    return frame, form, WeylChamber(frame, wit)


def two_ten_product_datum(prec=8):
    """Product datum for the eta-quotient form at the level-2 cusp of
    evenI(2,10): the cusp of the ambient vector (3, 1, ..., 1), with the
    second reduction along an orthogonal ambient isotropic vector."""
    lat = named_lattice("evenI(2,10)")
    z = _int_vec(_standard_coords(2, 10, [3] + [1] * 11))
    frame = CuspFrame(lat, z)
    w = _int_vec(_standard_coords(2, 10, [1, -1, 1, 1] + [0] * 8))
    k2 = frame.split_vector(w)[0]
    weyl = CuspFrame(frame.k_lattice, _primitive_int_vec(k2))
    return ProductDatum(frame, eta_octet_form(prec), weyl)


def two_ten_level_one_datum(prec=8):
    """Same form, reduced instead at a level-1 cusp of evenI(2,10)."""
    lat = named_lattice("evenI(2,10)")
    z = _int_vec(_standard_coords(2, 10, [1, -1, 1, 1] + [0] * 8))
    frame = CuspFrame(lat, z)
    w = _int_vec(_standard_coords(2, 10, [1, 1, 1, -1] + [0] * 8))
    k2 = frame.split_vector(w)[0]
    weyl = CuspFrame(frame.k_lattice, _primitive_int_vec(k2))
    return ProductDatum(frame, eta_octet_form(prec), weyl)


def leech_product_datum(prec=3):
    """Product datum for 1/Delta on the split-plane model of II(2,26); the
    second reduction splits off the third basis vector, so its reduced
    lattice is the rescaled minimum-4 block and the expansion has no
    chamber walls at all."""
    lat = named_lattice("II(2,26)")
    frame = u_cusp_frame(lat)
    k2 = frame.split_vector([0, 0, 1] + [0] * 25)[0]
    weyl = CuspFrame(frame.k_lattice, _int_vec(k2))
    return ProductDatum(frame, one_class_form(lat, 0, prec), weyl)


def cusp_height_vector(datum, along=1):
    """An integral positive-norm vector of the reduced lattice on the cusp
    side of every chamber wall: along * z2 + z2' in the second frame."""
    wf = datum.weyl_frame
    h = [along * Fraction(a) + b for a, b in zip(wf.z, wf.zprime)]
    return _int_vec(h)


def two_ten_divisor_vector():
    """A primitive norm -1 dual vector of evenI(2,10), in basis coordinates,
    along which the level-2 product has a simple zero."""
    return _standard_coords(2, 10, [0, 0, 1] + [0] * 9)
