"""File formats: group JSON, inequality JSON, cut text, rationals.

All points are 1-based on disk and in printed text; the conversion to the
0-based internal convention happens here and nowhere else.  Rationals are
serialized as "p" or "p/q" strings so that nothing ever rounds.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .cones import ConeSystem, make_ineq
from .errors import InputError
from .groups import PermGroup
from .perms import Perm
from .ratvec import RatVec

_CYCLE_RE = re.compile(r"\(\s*([0-9]+(?:[\s,]+[0-9]+)*)?\s*\)")


def parse_fraction(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError("bad rational %r: %s" % (text, exc)) from None


def fraction_str(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def parse_vector(values, n: int | None = None) -> RatVec:
    if not isinstance(values, (list, tuple)) or not values:
        raise InputError("vector must be a non-empty list, got %r" % (values,))
    vec = RatVec(parse_fraction(v) for v in values)
    if n is not None and vec.dim != n:
        raise InputError("vector has %d entries, expected %d" % (vec.dim, n))
    return vec


def vector_json(vec: RatVec) -> list[str]:
    return [fraction_str(c) for c in vec.coords]


def parse_cycles(text: str, n: int) -> Perm:
    """Cycle notation with 1-based points; fixed points may be omitted."""
    stripped = text.strip()
    if stripped in ("", "()"):
        return Perm.identity(n)
    pos = 0
    cycles = []
    seen = set()
    for match in _CYCLE_RE.finditer(stripped):
        if stripped[pos:match.start()].strip():
            raise InputError("unexpected text %r in cycles %r"
                             % (stripped[pos:match.start()].strip(), text))
        pos = match.end()
        body = match.group(1)
        if body is None:
            continue
        points = [int(tok) for tok in re.split(r"[\s,]+", body.strip())]
        for p in points:
            if not 1 <= p <= n:
                raise InputError("point %d out of range 1..%d in %r" % (p, n, text))
            if p - 1 in seen:
                raise InputError("point %d repeated in %r" % (p, text))
            seen.add(p - 1)
        cycles.append([p - 1 for p in points])
    if stripped[pos:].strip():
        raise InputError("unexpected trailing text %r in cycles %r"
                         % (stripped[pos:].strip(), text))
    return Perm.from_cycles(n, cycles)


def parse_permutation(obj, n: int) -> Perm:
    """Either a cycle string or a 1-based image array [g(1), ..., g(n)]."""
    if isinstance(obj, str):
        return parse_cycles(obj, n)
    if isinstance(obj, (list, tuple)):
        if len(obj) != n:
            raise InputError("image array has %d entries, expected %d" % (len(obj), n))
        images = []
        for v in obj:
            if not isinstance(v, int) or not 1 <= v <= n:
                raise InputError("image value %r out of range 1..%d" % (v, n))
            images.append(v - 1)
        if len(set(images)) != n:
            raise InputError("image array %r is not a bijection" % (obj,))
        return Perm(images)
    raise InputError("permutation must be a cycle string or image array, got %r" % (obj,))


def permutation_json(g: Perm) -> list[int]:
    return [j + 1 for j in g.images]


def parse_group(obj) -> PermGroup:
    """{"n": int, "generators": [perm, ...]} with either permutation form."""
    if not isinstance(obj, dict):
        raise InputError("group document must be a JSON object")
    n = obj.get("n")
    if not isinstance(n, int) or n < 1:
        raise InputError("group field 'n' must be a positive integer, got %r" % (n,))
    raw = obj.get("generators", [])
    if not isinstance(raw, list):
        raise InputError("group field 'generators' must be a list")
    return PermGroup(n, [parse_permutation(entry, n) for entry in raw])


def load_group(path) -> PermGroup:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError("cannot read group file %s: %s" % (path, exc)) from None
    except json.JSONDecodeError as exc:
        raise InputError("group file %s is not valid JSON: %s" % (path, exc)) from None
    return parse_group(doc)


def group_json(group: PermGroup) -> dict:
    return {
        "n": group.degree,
        "generators": [permutation_json(g) for g in group.generators],
    }


def system_json(system: ConeSystem) -> dict:
    doc = {
        "n": system.dim,
        "ineqs": [
            {
                "gamma": vector_json(ineq.gamma),
                "alpha": vector_json(ineq.alpha),
                "g": permutation_json(ineq.g),
            }
            for ineq in system.ineqs
        ],
        "trace": [
            {
                "gamma": vector_json(rnd.gamma),
                "coset_count": rnd.coset_count,
                "stabilizer_order": rnd.stabilizer_order,
                "inequalities_added": rnd.inequalities_added,
            }
            for rnd in system.trace
        ],
    }
    return doc


def parse_system(doc) -> ConeSystem:
    if not isinstance(doc, dict):
        raise InputError("inequality document must be a JSON object")
    n = doc.get("n")
    if not isinstance(n, int) or n < 1:
        raise InputError("inequality field 'n' must be a positive integer")
    system = ConeSystem(n)
    for entry in doc.get("ineqs", []):
        alpha = parse_vector(entry.get("alpha"), n)
        g = parse_permutation(entry.get("g"), n)
        ineq = make_ineq(alpha, g)
        if ineq is None:
            raise InputError("entry (alpha=%r, g=%r) is a trivial inequality"
                             % (entry.get("alpha"), entry.get("g")))
        stated = parse_vector(entry.get("gamma"), n)
        if stated != ineq.gamma:
            raise InputError("stated gamma %r does not match alpha/g" % (entry.get("gamma"),))
        system.add(ineq)
    return system


def cut_lines(system: ConeSystem) -> str:
    """One plain-text line per inequality, integer coefficients, for MILP files."""
    lines = []
    for ineq in system.ineqs:
        terms = []
        for idx, coef in enumerate(ineq.normal):
            if coef == 0:
                continue
            if not terms:
                terms.append("%d x%d" % (coef, idx + 1))
            elif coef < 0:
                terms.append("- %d x%d" % (-coef, idx + 1))
            else:
                terms.append("+ %d x%d" % (coef, idx + 1))
        lines.append("%s >= 0" % " ".join(terms))
    return "\n".join(lines) + "\n"


def dump_json(doc) -> str:
    """Canonical JSON rendering: sorted keys, stable layout, trailing newline."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
