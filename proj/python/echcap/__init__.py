"""ECH capacities of 4-dimensional toric domains, in exact rational arithmetic.

Region specs are plain dicts (see the ``ellipsoid``/``polydisk``/... helpers);
all exact values travel as fraction strings like ``"8/3"``. Use
:func:`fractions.Fraction` to do arithmetic on them.
"""

import json
from fractions import Fraction

from . import _echcap as _core

SpecParseError = _core.SpecParseError
PreconditionError = _core.PreconditionError
ResourceError = _core.ResourceError

__all__ = [
    "SpecParseError",
    "PreconditionError",
    "ResourceError",
    "ellipsoid",
    "ball",
    "polydisk",
    "polygon",
    "intersection",
    "translate",
    "scale",
    "normalize_spec",
    "region_vertices",
    "area",
    "enclosing_ball_radius",
    "capacities",
    "criterion",
    "kernel",
    "ell",
    "obstruct",
    "ball_bound",
    "ellipsoid_sequence",
    "polydisk_sequence",
    "intersection_r",
    "selftest",
    "to_fractions",
]


def _rat(x):
    """Render ints, Fractions, and strings as exact rational strings."""
    if isinstance(x, bool):
        raise TypeError("rational expected, got bool")
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, str):
        return x
    raise TypeError(f"rational expected (int, Fraction, or 'p/q' string), got {type(x).__name__}")


def ellipsoid(a, b):
    return {"kind": "ellipsoid", "a": _rat(a), "b": _rat(b)}


def ball(a):
    return {"kind": "ball", "a": _rat(a)}


def polydisk(a, b):
    return {"kind": "polydisk", "a": _rat(a), "b": _rat(b)}


def polygon(vertices):
    return {"kind": "polygon", "vertices": [[_rat(x), _rat(y)] for x, y in vertices]}


def intersection(*specs):
    return {"kind": "intersection", "of": list(specs)}


def translate(spec, by):
    return {"kind": "translate", "of": spec, "by": [_rat(by[0]), _rat(by[1])]}


def scale(spec, factor, origin=(0, 0)):
    return {
        "kind": "scale",
        "of": spec,
        "factor": _rat(factor),
        "from": [_rat(origin[0]), _rat(origin[1])],
    }


def normalize_spec(spec):
    return json.loads(_core.normalize_spec(json.dumps(spec)))


def region_vertices(spec):
    return json.loads(_core.region_vertices(json.dumps(spec)))


def area(spec):
    return _core.area(json.dumps(spec))


def enclosing_ball_radius(spec):
    return _core.enclosing_ball_radius(json.dumps(spec))


def capacities(spec, k=12, exact_count=False, parallel=False):
    """Capacity sequence with witness loops: values c_0..c_k as fraction strings."""
    return json.loads(_core.capacities(json.dumps(spec), k, exact_count, parallel))


def criterion(spec):
    return json.loads(_core.criterion(json.dumps(spec)))


def kernel(spec):
    return json.loads(_core.kernel(json.dumps(spec)))


def ell(spec, dx, dy, origin=(0, 0)):
    return _core.ell(json.dumps(spec), dx, dy, _rat(origin[0]), _rat(origin[1]))


def obstruct(source, target, k=12, parallel=False):
    return json.loads(_core.obstruct(json.dumps(source), json.dumps(target), k, parallel))


def ball_bound(spec, k=12, parallel=False):
    return json.loads(_core.ball_bound(json.dumps(spec), k, parallel))


def ellipsoid_sequence(a, b, k=12):
    return json.loads(_core.ellipsoid_sequence(_rat(a), _rat(b), k))


def polydisk_sequence(a, b, k=12):
    return json.loads(_core.polydisk_sequence(_rat(a), _rat(b), k))


def intersection_r(a, b, c, d):
    return json.loads(_core.intersection_r(_rat(a), _rat(b), _rat(c), _rat(d)))


def selftest():
    return json.loads(_core.selftest())


def to_fractions(values):
    """Convert a list of fraction strings to fractions.Fraction values."""
    return [Fraction(v) for v in values]
