"""Named regression checks over the bundled corpus.

Each check pulls its data through the corpus constructors at call time and
compares against frozen values, so corrupting one bundled coefficient fails
exactly the checks that depend on it.  Check names are dotted; the first
segment groups them for --filter (weil, series, theta, weyl, product,
shimura).
"""

from fractions import Fraction

from . import corpus
from .hyperbolic import (congruence_check, reflective_certificate,
                         vector_system_check, weyl_inner_product, weyl_vector)
from .modforms import delta_series, eisenstein_series, eta_quotient
from .products import (lift_weight, product_expansion, ray_expansion,
                       singular_weight_support, zero_orders)
from .shimura import binomial_vanishing, shimura_lift, verify_eta_quotient
from .weilrep import WeilRepresentation

CHECKS = []


def _fmt(xs):
    return "[" + ", ".join(str(x) for x in xs) + "]"


def _check(name):
    def deco(fn):
        CHECKS.append((name, fn))
        return fn
    return deco


def run(filter_prefix=None):
    """[(name, ok, detail)] for every check whose name starts with the filter."""
    out = []
    for name, fn in CHECKS:
        if filter_prefix and not name.startswith(filter_prefix):
            continue
        try:
            ok, detail = fn()
        except Exception as e:  # a crashed check is a failed check
            ok, detail = False, "%s: %s" % (type(e).__name__, e)
        out.append((name, bool(ok), detail))
    return out


def check_names():
    return [name for name, _ in CHECKS]


# -- Weil representations ---------------------------------------------------

@_check("weil.relations")
def _weil_relations():
    bad = []
    for lat in corpus.weil_relation_corpus():
        rel = WeilRepresentation(lat).check_relations()
        bad.extend("%s:%s" % (lat.name, k) for k, v in rel.items() if not v)
    return not bad, "failed: %s" % bad if bad else "7 lattices, all relations"


@_check("weil.milgram")
def _weil_milgram():
    bad = [lat.name for lat in corpus.weil_relation_corpus()
           if not lat.milgram_check()]
    return not bad, "failed: %s" % bad if bad else "reciprocity on 7 lattices"


# -- q-series engine --------------------------------------------------------

@_check("series.j-expansion")
def _series_j():
    f = eisenstein_series(4, 3) ** 3 / delta_series(3)
    got = (f.coefficient(0), f.coefficient(1))
    return got == (744, 196884), "constant %s, q-coefficient %s" % got


@_check("series.eta-level2")
def _series_eta_level2():
    f = eta_quotient([(1, 16), (2, -8)], 6)
    got = [f.coefficient(n) for n in range(4)]
    return got == [1, -16, 112, -448], "coefficients %s" % _fmt(got)


# -- theta enumeration ------------------------------------------------------

@_check("theta.e8-eisenstein")
def _theta_e8():
    theta = corpus.named_lattice("E8").theta_series(11)
    comp = theta.component(())
    e4 = eisenstein_series(4, 11)
    ok = all(comp.coefficient(n) == e4.coefficient(n) for n in range(11))
    return ok, "matches the weight-4 Eisenstein series through q^10"


@_check("theta.leech-minimum")
def _theta_leech():
    counts = corpus.named_lattice("Leech").short_vector_counts(4)
    got = (counts.get(0, 0), counts.get(2, 0), counts.get(4, 0))
    ref = eisenstein_series(4, 3) ** 3 - 720 * delta_series(3)
    ok = got == (1, 0, 196560) and ref.coefficient(2) == 196560
    return ok, "norm counts %s" % (got,)


# -- Lorentzian side --------------------------------------------------------

def _weyl_norm(latname, formname, prec=8):
    frame, form, chamber = corpus.weyl_setup(latname, formname, prec)
    return weyl_vector(frame, form, chamber).norm()


@_check("weyl.vector-ii19")
def _weyl_1240():
    nn = _weyl_norm("II(1,9)", "e4^2/delta")
    return nn == 1240, "norm %s" % nn


@_check("weyl.vector-ii117")
def _weyl_620():
    nn = _weyl_norm("II(1,17)", "e4/delta")
    return nn == 620, "norm %s" % nn


@_check("weyl.vector-ii125")
def _weyl_0():
    nn = _weyl_norm("II(1,25)", "1/delta")
    return nn == 0, "norm %s" % nn


@_check("weyl.root-pairing")
def _weyl_root_pairing():
    frame, form, chamber = corpus.weyl_setup("II(1,9)", "e4^2/delta")
    lam = [1, 1] + [0] * 8
    wv = weyl_vector(frame, form, chamber)
    direct = frame.lattice.bilinear(wv.ambient(), lam)
    contracted = weyl_inner_product(frame, form, lam)
    ok = direct == contracted == 61
    return ok, "chamber route %s, contraction route %s" % (direct, contracted)


@_check("weyl.congruence-e8cubed")
def _congruence_e83():
    lat = corpus.named_lattice("E8^3")
    const, div = congruence_check(lat, corpus.one_class_form(lat, 0, 4))
    return (const, div) == (744, True), "constant %s, divisible %s" % (const, div)


@_check("weyl.congruence-leech")
def _congruence_leech():
    lat = corpus.named_lattice("Leech(-1)")
    const, div = congruence_check(lat, corpus.one_class_form(lat, 0, 4))
    return (const, div) == (24, True), "constant %s, divisible %s" % (const, div)


@_check("weyl.congruence-level2")
def _congruence_level2():
    lat = corpus.named_lattice("A1(-1)")
    const, div = congruence_check(lat, corpus.minus_half_seed_form(), 2)
    return (const, div) == (12, True), "constant %s, divisible %s" % (const, div)


@_check("weyl.system-e8")
def _system_e8():
    lat = corpus.named_lattice("E8(-1)")
    ok, index = vector_system_check(lat, corpus.one_class_form(lat, 2, 4))
    return ok and index == 30, "holds %s, index %s" % (ok, index)


@_check("weyl.system-leech")
def _system_leech():
    lat = corpus.named_lattice("Leech(-1)")
    ok, index = vector_system_check(lat, corpus.one_class_form(lat, 0, 4))
    return ok and index == 0, "holds %s, index %s" % (ok, index)


@_check("weyl.reflective-ii19")
def _reflective_ii19():
    frame, form, chamber = corpus.weyl_setup("II(1,9)", "e4^2/delta")
    cert = reflective_certificate(frame, form, chamber)
    ok = cert["reflective"] and cert["weyl_norm"] == 1240
    return ok, "certified %s, Weyl norm %s, %s" % (
        cert["reflective"], cert["weyl_norm"], cert["classification"])


@_check("weyl.reflective-theta")
def _reflective_theta():
    frame, form, chamber = corpus.reflective_setup()
    cert = reflective_certificate(frame, form, chamber)
    return cert["reflective"], "certified %s, %s" % (
        cert["reflective"], cert["classification"])


# -- product expansions -----------------------------------------------------

@_check("product.ray-level2")
def _product_ray_level2():
    datum = corpus.two_ten_product_datum(8)
    ray = ray_expansion(datum, datum.weyl_frame.z, 6)
    got = [ray.coefficient(n) for n in range(6)]
    want = [1, -16, 112, -448, 1136, -2016]
    return got == want, "ray coefficients %s" % _fmt(got)


@_check("product.expansion-level2")
def _product_expansion_level2():
    datum = corpus.two_ten_product_datum(8)
    h = corpus.cusp_height_vector(datum, along=2)
    series = product_expansion(datum, h, 3)
    ray = series.ray_slice([Fraction(x) for x in datum.weyl_frame.z])
    got = [ray.coefficient(n) for n in range(4)]
    support = singular_weight_support(series, datum)
    w = lift_weight(datum)
    ok = (got == [1, -16, 112, -448] and not support["violations"]
          and w["lift_weight"] == 4 and w["is_singular"])
    return ok, "ray %s, support violations %d, weight %s (singular %s)" % (
        _fmt(got), len(support["violations"]), w["lift_weight"], w["is_singular"])


@_check("product.zero-order")
def _product_zero_order():
    datum = corpus.two_ten_product_datum(8)
    order = zero_orders(datum, corpus.two_ten_divisor_vector())
    return order == 1, "order %s along a norm -1 divisor" % order


@_check("product.ray-level1")
def _product_ray_level1():
    datum = corpus.two_ten_level_one_datum(8)
    ray = ray_expansion(datum, datum.weyl_frame.z, 6)
    got = [ray.coefficient(n) for n in range(7)]
    want = [1, -8, 20, 0, -70, 64, 56]
    return got == want, "ray coefficients %s" % _fmt(got)


# -- singular theta lift ----------------------------------------------------

@_check("shimura.lift-values")
def _shimura_values():
    lifted = shimura_lift(corpus.singular_lift_stream())
    got = [lifted.coefficient(n) for n in (1, 2, 3)]
    return got == [64, -32256, 11536128], "b(1..3) = %s" % _fmt(got)


@_check("shimura.eta-identity")
def _shimura_eta():
    report = verify_eta_quotient(corpus.singular_lift_stream())
    return report["equal"], "matches the eta-quotient reference through %s" % (
        report["through"],)


@_check("shimura.binomial-grid")
def _shimura_binomial():
    bad = 0
    for a in range(9):
        for b in range(9):
            for c in range(9):
                lhs, rhs = binomial_vanishing(a, b, c)
                if lhs != rhs or (b + c < a and lhs != 0):
                    bad += 1
    return bad == 0, "81*9 grid points, %d mismatches" % bad
