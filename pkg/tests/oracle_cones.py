"""Independent validity oracle for homogeneous inequality systems.

Computes a generator description (lines + rays) of the cone
{x : a.x >= 0 for all a} by incremental double description, then decides
whether a target inequality is valid by evaluating it on the generators.
No adjacency filtering: redundant rays are harmless for validity and the
test systems are tiny.  This deliberately shares nothing with the
package's simplex-based implication check.
"""

from fractions import Fraction


def _dot(a, b):
    return sum(Fraction(x) * Fraction(y) for x, y in zip(a, b))


def _combine(scale_a, a, scale_b, b):
    return tuple(scale_a * Fraction(x) + scale_b * Fraction(y) for x, y in zip(a, b))


def cone_generators(dim, normals):
    """(lines, rays) spanning {x : n.x >= 0 for every n in normals}."""
    lines = [tuple(Fraction(1) if j == i else Fraction(0) for j in range(dim))
             for i in range(dim)]
    rays = []
    for a in normals:
        pivot_idx = next((i for i, l in enumerate(lines) if _dot(a, l) != 0), None)
        if pivot_idx is not None:
            pivot = lines.pop(pivot_idx)
            if _dot(a, pivot) < 0:
                pivot = tuple(-x for x in pivot)
            pv = _dot(a, pivot)
            lines = [_combine(Fraction(1), l, -_dot(a, l) / pv, pivot) for l in lines]
            lines = [l for l in lines if not all(x == 0 for x in l)]
            rays = [_combine(Fraction(1), r, -_dot(a, r) / pv, pivot) for r in rays]
            rays.append(pivot)
        else:
            pos = [r for r in rays if _dot(a, r) > 0]
            zero = [r for r in rays if _dot(a, r) == 0]
            neg = [r for r in rays if _dot(a, r) < 0]
            combos = [
                _combine(_dot(a, rp), rn, -_dot(a, rn), rp)
                for rp in pos
                for rn in neg
            ]
            rays = pos + zero + [c for c in combos if not all(x == 0 for x in c)]
        rays = [r for r in rays if not all(x == 0 for x in r)]
    return lines, rays


def oracle_implies(dim, normals, target) -> bool:
    """True iff target.x >= 0 holds on the whole cone cut out by normals."""
    lines, rays = cone_generators(dim, normals)
    if any(_dot(target, l) != 0 for l in lines):
        return False
    return all(_dot(target, r) >= 0 for r in rays)
