"""JSON round-trips for the toolkit's value types.

Every document is versioned with a top-level schemaVersion of 1.  Rationals
travel as strings "p/q" ("p" when the denominator is one), series exponents
are given over a common denominator, and term lists are sorted, so identical
values always produce identical bytes.
"""

import json
from fractions import Fraction

from .lattice import EvenLattice
from .qseries import FracPowerSeries, INF
from .weilrep import VectorValuedForm

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    """The document does not match the expected shape."""


def frac_str(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_frac(s):
    if isinstance(s, bool):
        raise SchemaError("expected a rational, got %r" % (s,))
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise SchemaError("expected a rational string, got %r" % (s,))
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise SchemaError("bad rational %r" % (s,))


def _check_version(doc, what):
    if not isinstance(doc, dict):
        raise SchemaError("%s document must be an object" % what)
    if doc.get("schemaVersion") != SCHEMA_VERSION:
        raise SchemaError("%s document needs schemaVersion %d"
                          % (what, SCHEMA_VERSION))


# -- series -----------------------------------------------------------------

def series_to_json(series):
    exps = sorted(e for e, c in series.items() if c)
    den = 1
    for e in exps:
        den = den * e.denominator // _gcd(den, e.denominator)
    doc = {
        "schemaVersion": SCHEMA_VERSION,
        "expDenominator": den,
        "terms": [{"exp": frac_str(e), "val": frac_str(series.coefficient(e))}
                  for e in exps],
    }
    doc["truncation"] = (None if series.truncation >= INF
                         else frac_str(series.truncation))
    return doc


def series_from_json(doc):
    _check_version(doc, "series")
    terms = doc.get("terms")
    if not isinstance(terms, list):
        raise SchemaError("series document needs a terms list")
    coeffs = {}
    for t in terms:
        if not isinstance(t, dict) or "exp" not in t or "val" not in t:
            raise SchemaError("series term must carry exp and val")
        coeffs[parse_frac(t["exp"])] = parse_frac(t["val"])
    trunc = doc.get("truncation")
    trunc = INF if trunc is None else parse_frac(trunc)
    return FracPowerSeries(coeffs, trunc)


# -- lattices and cosets ----------------------------------------------------

def lattice_to_json(lat):
    return {
        "schemaVersion": SCHEMA_VERSION,
        "name": lat.name,
        "gram": [list(row) for row in lat.gram],
    }


def lattice_from_json(doc):
    _check_version(doc, "lattice")
    gram = doc.get("gram")
    if not isinstance(gram, list) or not all(isinstance(r, list) for r in gram):
        raise SchemaError("lattice document needs a gram matrix")
    for row in gram:
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise SchemaError("gram entries must be integers")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise SchemaError("lattice name must be a string")
    try:
        return EvenLattice(gram, name=name)
    except ValueError as e:
        raise SchemaError(str(e))


def coset_to_json(coords):
    return {"schemaVersion": SCHEMA_VERSION,
            "coords": [frac_str(x) for x in coords]}


def coset_from_json(doc):
    _check_version(doc, "coset")
    coords = doc.get("coords")
    if not isinstance(coords, list):
        raise SchemaError("coset document needs a coords list")
    return [parse_frac(x) for x in coords]


# -- vector valued forms ----------------------------------------------------

def form_to_json(form):
    comps = []
    for cls in sorted(form.components):
        ser = form.components[cls]
        if ser.is_zero() and ser.truncation >= INF:
            continue
        comps.append({"element": [int(x) for x in cls],
                      "series": series_to_json(ser)})
    return {
        "schemaVersion": SCHEMA_VERSION,
        "lattice": lattice_to_json(form.lattice),
        "weight": [frac_str(form.weight), "0"],
        "parity": list(form.lattice.signature()),
        "components": comps,
    }


def form_from_json(doc):
    _check_version(doc, "form")
    lat = lattice_from_json(doc.get("lattice"))
    weight = doc.get("weight")
    if not isinstance(weight, list) or len(weight) != 2:
        raise SchemaError("form weight must be a two-component list")
    if parse_frac(weight[1]):
        raise SchemaError("only holomorphic forms are supported")
    declared = doc.get("parity")
    if declared is not None and list(declared) != list(lat.signature()):
        raise SchemaError("parity pair %s does not match the lattice signature %s"
                          % (declared, list(lat.signature())))
    comps = {}
    for entry in doc.get("components", []):
        if not isinstance(entry, dict) or "element" not in entry:
            raise SchemaError("form component must carry element and series")
        cls = tuple(int(x) for x in entry["element"])
        comps[cls] = series_from_json(entry.get("series"))
    # the +-class symmetry sign is data the schema leaves implicit; recover
    # whichever bit validates, preferring the symmetric one
    for parity in (0, 1):
        form = VectorValuedForm(lat, parse_frac(weight[0]), comps, parity=parity)
        if not form.problems():
            return form
    raise SchemaError("components fail the class and symmetry checks: %s"
                      % (form.problems()[:3],))


# -- shimura coefficient streams -------------------------------------------

def stream_to_json(inp):
    return {
        "schemaVersion": SCHEMA_VERSION,
        "mplus": inp.m_plus,
        "prec": inp.prec,
        "terms": [{"exp": n, "val": frac_str(inp.stream[n])}
                  for n in sorted(inp.stream)],
    }


def stream_terms_from_json(doc):
    """Accepts either the wrapped document or a bare [{"exp", "val"}] list;
    returns ({exp: coeff}, mplus or None, prec or None)."""
    mplus = prec = None
    if isinstance(doc, dict):
        _check_version(doc, "stream")
        mplus = doc.get("mplus")
        prec = doc.get("prec")
        doc = doc.get("terms")
    if not isinstance(doc, list):
        raise SchemaError("stream document needs a terms list")
    stream = {}
    for t in doc:
        if not isinstance(t, dict) or "exp" not in t or "val" not in t:
            raise SchemaError("stream term must carry exp and val")
        n = t["exp"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise SchemaError("stream exponents must be integers")
        stream[n] = parse_frac(t["val"])
    return stream, mplus, prec


# -- frames -----------------------------------------------------------------

def frame_spec_from_json(doc):
    _check_version(doc, "frame")
    z = doc.get("z")
    if not isinstance(z, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in z):
        raise SchemaError("frame document needs integer z coordinates")
    out = {"z": list(z)}
    for key in ("zprime", "witness"):
        if doc.get(key) is not None:
            out[key] = [parse_frac(x) for x in doc[key]]
    return out


# -- canonical output -------------------------------------------------------

def dump_canonical(doc):
    """Canonical bytes: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def load_document(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise SchemaError("cannot read %s: %s" % (path, e.strerror))
    except json.JSONDecodeError as e:
        raise SchemaError("%s is not valid JSON: %s" % (path, e))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
