"""Lexicographic order machinery.

The set of vectors that are lexicographically maximal in their orbit is a
convex fundamental set but not closed in general; membership in its
closure is decided through the tie-breaker perturbation
``x_i - i*eps/n^2`` (1-based i), which breaks coordinate ties without
reordering strictly separated entries.  All decisions here are by honest
orbit enumeration and carry an orbit-size cap.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import CapExceeded
from .groups import DEFAULT_ENUM_CAP, PermGroup
from .ratvec import RatVec


def lex_compare(x: RatVec, y: RatVec) -> int:
    """-1, 0, or 1 as x is lexicographically below, equal to, or above y."""
    if x.dim != y.dim:
        raise ValueError("dimension mismatch")
    for a, b in zip(x.coords, y.coords):
        if a < b:
            return -1
        if a > b:
            return 1
    return 0


def _inverse_images(group: PermGroup):
    # y = g.x satisfies y[j] = x[g^{-1}(j)], so acting is one gather pass
    return [g.inverse().images for g in group.generators]


def lex_max_in_orbit(group: PermGroup, x: RatVec, cap: int = DEFAULT_ENUM_CAP) -> RatVec:
    """The unique lex-greatest vector in the orbit of x (BFS enumeration)."""
    best = x.coords
    seen = {x.coords}
    stack = [x.coords]
    for cur, nxt in _orbit_walk(_inverse_images(group), seen, stack, cap):
        if nxt > best:
            best = nxt
    return RatVec(best)


def _orbit_walk(inv_images, seen, stack, cap):
    while stack:
        cur = stack.pop()
        for inv in inv_images:
            nxt = tuple(cur[k] for k in inv)
            if nxt not in seen:
                if len(seen) >= cap:
                    raise CapExceeded("vector orbit exceeded cap of %d" % cap)
                seen.add(nxt)
                stack.append(nxt)
                yield cur, nxt


def _is_orbit_max(group: PermGroup, coords, cap) -> bool:
    """Is ``coords`` the lex-greatest in its orbit?  Exits on a witness."""
    seen = {coords}
    stack = [coords]
    for _, nxt in _orbit_walk(_inverse_images(group), seen, stack, cap):
        if nxt > coords:
            return False
    return True


class TieBreakerResult:
    """Perturbed vector plus the epsilon and minimum-gap value used."""

    __slots__ = ("perturbed", "epsilon", "gap")

    def __init__(self, perturbed: RatVec, epsilon: Fraction, gap: Fraction):
        self.perturbed = perturbed
        self.epsilon = epsilon
        self.gap = gap


def min_positive_gap(x: RatVec) -> Fraction:
    """Smallest positive pairwise coordinate difference; 1 if all coordinates tie."""
    values = sorted(set(x.coords))
    if len(values) == 1:
        return Fraction(1)
    return min(b - a for a, b in zip(values, values[1:]))


def tie_breaker(x: RatVec, epsilon: Fraction | None = None) -> TieBreakerResult:
    """Subtract i*eps/n^2 from coordinate i (1-based); 0 < eps < min gap.

    The result has pairwise-distinct coordinates and preserves every strict
    inequality between coordinates of x.  Defaults to eps = gap/2.
    """
    gap = min_positive_gap(x)
    if epsilon is None:
        epsilon = gap / 2
    else:
        epsilon = Fraction(epsilon)
        if not 0 < epsilon < gap:
            raise ValueError("epsilon must lie strictly between 0 and %s" % gap)
    n = x.dim
    perturbed = RatVec(
        c - Fraction(i + 1, 1) * epsilon / (n * n) for i, c in enumerate(x.coords)
    )
    return TieBreakerResult(perturbed, epsilon, gap)


def in_lex(group: PermGroup, x: RatVec, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """True iff x is lexicographically maximal in its own orbit."""
    return _is_orbit_max(group, x.coords, cap)


def in_closure_lex(group: PermGroup, x: RatVec, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Closure membership via the tie-breaker: perturb, then test lex-maximality."""
    perturbed = tie_breaker(x).perturbed
    return _is_orbit_max(group, perturbed.coords, cap)


def is_lex_closed(group: PermGroup) -> bool:
    """True iff the group is the full product of symmetric groups on its orbits.

    The group always embeds in that product, so comparing orders decides
    equality; these are exactly the groups whose lex-maximal set is closed.
    """
    expected = 1
    for orbit in group.index_orbits():
        expected *= factorial(len(orbit))
    return group.order() == expected
